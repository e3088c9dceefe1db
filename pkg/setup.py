import setuptools

with open("README.md", "r") as fopen:
    long_description = fopen.read()

setuptools.setup(
    name="FPT_Triangles",
    version="0.1",
    description="Triangle enumeration parameterized by structural graph parameters, with kernels and hardness gadgets.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    url="",
    license="MIT",
    packages=setuptools.find_packages(exclude=["test", "examples*"]),
    install_requires=["numpy", "pandas", "tqdm", "networkx"],
    entry_points={"console_scripts": ["fpt-triangles=FPT_Triangles.cli:main"]},
    zip_safe=False,
    python_requires=">=3.8",
)
