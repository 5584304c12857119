"""
Data I/O package initialization.
"""
