# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from setuptools import setup, find_packages

setup(
    name="friedrichskit",
    version="0.1.0",
    packages=find_packages(exclude=["test", "test.*"]),
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.25.0",
        "scipy>=1.11.0",
        "frozendict",
        "tenacity",
        "cachetools",
        "tqdm",
    ],
    extras_require={
        "test": ["hypothesis"],
    },
    entry_points={
        "console_scripts": [
            "friedrichs-kit=friedrichskit.cli.main:main",
        ],
    },
    author='Haixing Hu',
    author_email='starfish.hu@gmail.com',
    description='A toolkit for classifying the realisations of one dimensional '
                'Friedrichs systems and solving their boundary value problems.',
)
