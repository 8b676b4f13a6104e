import pathlib

from setuptools import find_packages, setup

here = pathlib.Path(__file__).parent.resolve()

# Get the long description from the README file
long_description = (here / "README.md").read_text(encoding="utf-8")

setup(
    name="prvkit",
    version="0.1.0",
    description="""
    prvkit checks the PRV statement, its refinement by double cosets and
    their Langlands-transfer analogues exactly, on explicit root data.
    """,
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords="lie algebras, weyl group, tensor products, affine grassmannian, prv",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    python_requires=">=3.8, <4",
    install_requires=["asciitree", "ansicolors", "argcomplete", "sympy"],
    extras_require={
        "dev": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": [
            "prvkit=prvkit:main",
        ],
    },
)
