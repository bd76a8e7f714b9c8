"""
Setup script for fps-transcend
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read the README file
readme_path = Path(__file__).parent / "README.md"
long_description = readme_path.read_text(encoding="utf-8") if readme_path.exists() else ""

# Runtime requirements only; the rest of requirements.txt is development tooling
install_requires = ["sympy>=1.12", "PyYAML>=6.0"]

setup(
    name="fps-transcend",
    version="1.0.0",
    description="Exact formal power series toolkit for decomposition identities and transcendence criteria",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    install_requires=install_requires,
    extras_require={
        "dev": ["pytest>=7.4", "pytest-cov>=4.1", "black>=23.11", "flake8>=6.1", "mypy>=1.7"],
    },
    entry_points={
        "console_scripts": [
            "fps-transcend=src.main:main",
        ],
    },
    include_package_data=True,
    package_data={
        "": ["*.json", "*.yaml"],
    },
    keywords="formal power series, exact arithmetic, p-adic, transcendence, computer algebra",
)
