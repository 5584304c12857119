"""
Data models package initialization.
"""
