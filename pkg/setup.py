#! -*- coding: utf-8 -*-

from setuptools import setup, find_packages

with open("README.md", "r", encoding='utf-8') as fh:
    long_description = fh.read()

setup(
    name='psi4opt',
    version='v0.1.0',
    description='exact psi-class descendant integrals and their extremal behaviour',
    long_description=long_description,
    long_description_content_type="text/markdown",
    license='MIT Licence',
    install_requires=['numpy', 'tqdm', 'torch4keras==0.2.2'],
    extras_require={'test': ['pytest', 'hypothesis']},
    entry_points={'console_scripts': ['psi4opt = psi4opt.cli:main']},
    packages=find_packages(exclude=['test', 'test.*'])
)
