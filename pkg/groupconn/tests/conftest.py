# -*- coding: utf-8 -*-
import pytest

from groupconn.groups.families import Cyclic, Dicyclic, Dihedral, ElementaryAbelian, Symmetric, build_family
from groupconn.network.graph_core import complete_graph, from_edges


@pytest.fixture
def z5():
    return build_family(Cyclic(5))


@pytest.fixture
def z4():
    return build_family(Cyclic(4))


@pytest.fixture
def z6():
    return build_family(Cyclic(6))


@pytest.fixture
def s3():
    return build_family(Dihedral(3))


@pytest.fixture
def q8():
    return build_family(Dicyclic(2))


@pytest.fixture
def klein():
    return build_family(ElementaryAbelian(2, 2))


@pytest.fixture
def s4():
    return build_family(Symmetric(4))


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c4():
    return from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def path3():
    return from_edges(3, [(0, 1), (1, 2)])
