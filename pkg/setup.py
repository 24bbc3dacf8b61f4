from pathlib import Path

from setuptools import find_packages, setup

ROOT = Path(__file__).parent
README = (ROOT / "README.md").read_text(encoding="utf-8")

setup(
    name="symcomb",
    version="1.0.0",
    description=(
        "Combinatorial commutative algebra toolkit: Stanley-Reisner ideals, matroids and "
        "symbolic powers, basic covers, Hochster's formula, minors combinatorics and "
        "Groebner deformations."
    ),
    long_description=README,
    long_description_content_type="text/markdown",
    package_dir={"": "src"},
    packages=find_packages(where="src", exclude=["tests", "tests.*"]),
    py_modules=["cli"],
    include_package_data=True,
    install_requires=[
        "rich>=13.7.0",
        "python-dotenv>=1.0.1",
        "sympy>=1.12",
        "numpy>=1.26.0",
    ],
    entry_points={
        "console_scripts": [
            "symcomb=cli:main",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
)
