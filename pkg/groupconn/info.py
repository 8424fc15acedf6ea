__version__ = '0.1.0'

NAME = 'groupconn'
MAINTAINER = 'groupconn developers'
VERSION = __version__
LICENSE = 'MIT'
DESCRIPTION = 'Minimal (edge) connectivity of graphs defined on finite groups'
#DOWNLOAD_URL = ''

INSTALL_REQUIRES = [
    'numpy',
    'scipy',
    'pandas>=1.5',
    'networkx>=2.4',
    'sympy',
    'graphviz',
]

TESTS_REQUIRE = [
    'pytest',
    'pytest-cov',
    'hypothesis',
]

PACKAGE_DATA = {
}

ENTRY_POINTS = {
    'console_scripts': ['groupconn=groupconn.cli:main'],
}
