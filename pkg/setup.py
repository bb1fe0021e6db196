from setuptools import setup, find_packages

setup(
    name='catsharp',
    version='0.1.0',
    description='Polynomial functors, familial monads, theory categories and nerves at desk scale',
    long_description=open("README.md").read(),
    long_description_content_type = "text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    license='MIT',
    keywords='category-theory polynomial-functors monads nerve operads',
    install_requires=[
        'numpy', 'scipy', 'pandas', 'matplotlib', 'tqdm', 'networkx', 'sympy', 'pyyaml'
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['catsharp=catsharp.cli.commands:main'],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    zip_safe=False,
    python_requires='>=3.10',
)
