from setuptools import setup, find_packages

setup(
    name="item_reducer",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "numpy>=1.24.0",
        "scipy>=1.10.0",
        "pandas>=1.5.0",
        "click>=8.2.0",
        "python-dotenv>=1.0.0",
        "prometheus_client>=0.19.0",
    ],
    extras_require={
        "test": [
            "pytest>=7.0.0",
            "pytest-mock>=3.10.0",
        ],
    },
    entry_points={
        'console_scripts': [
            'item-reducer=cli:cli',
        ],
    },
    python_requires='>=3.9',
)
