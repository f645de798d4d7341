from setuptools import setup
from setuptools import find_namespace_packages


def readme():
    with open('README.md') as f:
        return f.read()


setup(
    name='cayleyqmc',
    version='1.0',
    packages=find_namespace_packages(include=['cayleyqmc', 'cayleyqmc.*']),
    python_requires='>=3.8',
    install_requires=[
        'numpy',
        'scipy',
        'graphviz',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['cayleyqmc = cayleyqmc.src.cli:main'],
    },
    long_description=readme(),
    long_description_content_type='text/markdown',
)
