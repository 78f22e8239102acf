# +
from setuptools import find_packages, setup

setup(
    name="thezeta",
    version="v2024.05",
    description="closed forms and quadrature checks for integrals tied to the Hurwitz zeta function",
    packages=find_packages(exclude=["examples", "examples.*"]),
    # numpy backs Tensor.numpy(), the buffers handed to mpi4py
    install_requires=["numpy", "scipy", "torch"],
    extras_require={"mpi": ["mpi4py"], "test": ["pytest", "mpmath"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
)
