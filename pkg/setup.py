from setuptools import find_packages, setup

setup(
    name="ineqlab",
    packages=find_packages(include=["ineqlab", "ineqlab.*"]),
    package_data={"ineqlab": ["data/*.yaml"]},
    entry_points={
        "console_scripts": [
            "ineqlab=ineqlab.cli.main:main",
        ],
    },
    install_requires=[
        "PyYAML",
        "numpy",
        "scipy",
        "pandas",
        "mpmath",
    ],
)
