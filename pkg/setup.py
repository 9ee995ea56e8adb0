#!/usr/bin/env python3
"""
Script de instalación de surface-graphs
"""

import sys
from setuptools import setup, find_packages

if sys.version_info < (3, 8):
    print("❌ Error: Se requiere Python 3.8 o superior")
    sys.exit(1)

setup(
    name="surface-graphs",
    version="0.1.0",
    description="Aritmética exacta de grafos duales de resoluciones de superficies",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    install_requires=[
        "python-dotenv>=1.0.0",
        "numpy>=1.21.0,<2.0.0",
        "pandas>=1.5.0",
        "openpyxl>=3.0.0",
        "networkx>=3.0",
    ],
    extras_require={"test": ["pytest>=7.0.0"]},
    entry_points={"console_scripts": ["surface-graphs=scripts.surface_graphs:main"]},
    python_requires=">=3.8",
)
