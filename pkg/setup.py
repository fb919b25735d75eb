from __future__ import absolute_import

from setuptools import setup, find_packages

description = """DI-ordertype: order and exponent types of finite permutation groups"""

setup(
    name='DI-ordertype',
    version='0.1',
    description='Order types, exponent types and multiplicity certificates of finite permutation groups',
    long_description=description,
    author='OpenDILab',
    license='MIT License',
    keywords='group theory order type solvable permutation group',
    packages=[
        *find_packages(
            include=('core', 'core.*')
        ),
    ],
    package_data={
        'core.data': ['catalog_data/*.json'],
    },
    install_requires=[
        'easydict',
        'loguru>=0.5',
        'numpy',
        'pandas>=1.5',
        'pyyaml',
        'scipy',
        'sympy',
        'terminaltables',
        'tqdm',
    ],
    extras_require={
        'test': [
            'pytest',
        ],
    },
    entry_points={
        'console_scripts': [
            'ordertype=core.cli.order_type_cli:main',
        ],
    },
)
