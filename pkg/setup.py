#!/usr/bin/env python

import os
import sys


def main():
    from setuptools import setup, find_packages

    if sys.version_info < (3, 8):
        raise SystemError("You need Python version 3.8 or above to use " +
                          "groupconn.")

    # from nipype setup.py file
    ldict = locals()
    curr_path = os.path.dirname(__file__)
    ver_file = os.path.join(curr_path, 'groupconn', 'info.py')
    with open(ver_file) as infofile:
        exec(infofile.read(), globals(), ldict)

    setup(
        name=ldict['NAME'],
        version=ldict['VERSION'],
        description=ldict['DESCRIPTION'],
        maintainer=ldict['MAINTAINER'],
        install_requires=ldict['INSTALL_REQUIRES'],
        packages=find_packages(exclude=['groupconn/tests']),
        package_data=ldict['PACKAGE_DATA'],
        tests_require=ldict['TESTS_REQUIRE'],
        extras_require={'test': ldict['TESTS_REQUIRE']},
        entry_points=ldict['ENTRY_POINTS'],
        license=ldict['LICENSE']
        )


if __name__ == '__main__':
    main()
