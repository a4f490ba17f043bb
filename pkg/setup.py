from setuptools import setup, find_packages

setup(
    name="webbasis",
    version="0.1.1",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "pydantic",
        "pydantic-settings",
        "numpy",
        "sympy",
        "networkx",
        "jinja2"
    ],
    entry_points={
        "console_scripts": ["webbasis=webbasis.main:main"],
    },
)
