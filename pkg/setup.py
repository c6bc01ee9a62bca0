import os
import sys
from setuptools import setup, find_packages

README = open(os.path.join(os.path.dirname(__file__), 'README.md')).read()

# allow setup.py to be run from any path
os.chdir(os.path.normpath(os.path.join(os.path.abspath(__file__), os.pardir)))

# please change the version on eternalguard/__init__.py
version = __import__('eternalguard').get_version()

with open('requirements.txt', 'r') as f:
    required = [
        line for line in f.read().splitlines()
        if line.strip() and not line.startswith('#')]

if sys.argv[-1] == 'publish':

    cmd = "python setup.py sdist upload"
    print(cmd)
    os.system(cmd)

    cmd = 'git tag -a %s -m "version %s"' % (version, version)
    print(cmd)
    os.system(cmd)

    cmd = "git push --tags"
    print(cmd)
    os.system(cmd)

    sys.exit()

if sys.version_info < (3, 8):
    sys.exit('Error: eternalguard requires Python 3.8 or higher')

setup(
    name='eternalguard',
    version=version,
    include_package_data=True,
    license='MIT License',
    packages=find_packages(exclude=['tests', 'tests.*']),
    description=(
        'Cluster decomposition of graphs for eternal security with '
        'guards of different ranges, with an attack simulator and '
        'exhaustive checkers for small instances.'
    ),
    long_description=README,
    long_description_content_type='text/markdown',
    install_requires=required,
    classifiers=[
        'Environment :: Console',
        'Framework :: Django',
        'Framework :: Django :: 4.2',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    entry_points={
        'console_scripts': [
            'eternalguard=eternalguard.management.cli:eternalguard_cli',
        ],
    },

    zip_safe=False,
)
