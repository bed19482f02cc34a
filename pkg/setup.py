from setuptools import setup, find_packages

setup(
    name="qdsim",
    version="1.0.0",
    description="QDSIM: qutrit-qutrit dephasing, negativity, realignment and distillability sudden death.",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.10",
    install_requires=['numpy', 'scipy', 'numba', 'matplotlib'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['qdsim=qdsim.cli.main:main']},
    keywords=['Python', 'QDSIM', 'quantum channel', 'bound entanglement', 'dephasing'],
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research"]
    )
