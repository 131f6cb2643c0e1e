from setuptools import find_packages, setup

setup(
    name="FreeShift",
    version="0.1.0",
    packages=find_packages(include=["freeshift", "freeshift.*"]),
    install_requires=[
        "numpy>=1.26",
        "networkx>=3.2",
        "sympy>=1.13",
        "omegaconf>=2.3",
        "pyyaml>=6.0",
        "tabulate>=0.9",
    ],
    entry_points={
        "console_scripts": ["fsh = freeshift.main:main"],
    },
)
