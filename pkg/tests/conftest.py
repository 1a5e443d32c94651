import pytest

from pqsurf.covers import make_system
from pqsurf.groups import Permutation, group_from_generators
from pqsurf.inputs import fixture_path, parse_input, realize
from pqsurf.surface import build_surface_model


@pytest.fixture(scope="session")
def beauville():
    desc = parse_input(fixture_path("beauville_55.pq").read_text())
    return realize(desc)


@pytest.fixture(scope="session")
def toy():
    desc = parse_input(fixture_path("z2_hyperelliptic.pq").read_text())
    return realize(desc)


@pytest.fixture(scope="session")
def beauville_model(beauville):
    _, sys1, sys2 = beauville
    return build_surface_model(sys1, sys2)


@pytest.fixture(scope="session")
def toy_model(toy):
    _, sys1, sys2 = toy
    return build_surface_model(sys1, sys2)


@pytest.fixture(scope="session")
def z4_mixed_model():
    # signature (4, 4, 2, 2) self-paired: produces 1/4(1,1), 1/4(1,3) and
    # 1/2(1,1) points, including strings whose fiber multiplicities exceed 1
    g = Permutation.from_cycles("(0 1 2 3)")
    group = group_from_generators([g])
    i = group.index_of(g)
    sys = make_system(group, (i, group.power(i, 3), group.power(i, 2), group.power(i, 2)))
    return build_surface_model(sys, sys)
