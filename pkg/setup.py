import setuptools

with open('README.md', encoding='utf-8') as f:
    long_description = f.read()

setuptools.setup(
    name="k3focal",
    packages=["k3focal"],
    version="0.1.0",
    license='MIT',
    description='index and nullity of the cubic focal manifolds in spheres',
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=['lie algebra', 'representation theory', 'minimal submanifold', 'jacobi operator'],
    python_requires='>=3.7',

    install_requires=['sympy>=1.7', 'numpy>=1.17'],
    entry_points={
        'console_scripts': ['k3focal = k3focal.cli:main'],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
    ] + ['Programming Language :: Python :: 3.7', 'Programming Language :: Python :: 3.8', 'Programming Language :: Python :: 3.9'],
)
