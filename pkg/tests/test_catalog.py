import numpy as np
import pytest

from voltlift.catalog import (
    alegre,
    cayley,
    generalized_petersen,
    hoffman_singleton,
    monomials,
    p_family,
)
from voltlift.digraph import diameter
from voltlift.fileformat import format_voltage_file, parse
from voltlift.group import cyclic, product
from voltlift.polymat import from_voltage
from voltlift.spectra import direct_spectrum, integer_spectrum, lift_spectrum, multiset_equal
from voltlift.voltage import VoltageDigraph, lift

CATALOG = [
    alegre(),
    hoffman_singleton(),
    generalized_petersen(5, 2),
    p_family(6, [2, 0, 1], [0, 0, 0, 0, 0, 3]),
    cayley(product((2, 3)), [(1, 0), (0, 1), (0, 2)]),
]


@pytest.mark.parametrize("vd", CATALOG, ids=repr)
def test_file_round_trip(vd):
    text = format_voltage_file(vd)
    back = parse(text)
    assert back == vd
    assert format_voltage_file(back) == text


def test_petersen_graph():
    vd = generalized_petersen(5, 2)
    d = lift(vd).digraph
    assert d.n == 10 and d.is_symmetric()
    assert (d.out_degrees() == 3).all()
    assert diameter(d) == 2
    assert multiset_equal(direct_spectrum(vd), [3] + [1] * 5 + [-2] * 4, 1e-8)


def test_petersen_is_p_family_specialisation():
    for n, k in [(5, 2), (7, 3), (10, 3)]:
        want = p_family(n, monomials(n, 1, n - 1), monomials(n, k, n - k))
        assert generalized_petersen(n, k) == want


def test_petersen_parameter_checks():
    for n, k in [(2, 1), (6, 3), (5, 0)]:
        with pytest.raises(ValueError):
            generalized_petersen(n, k)


def test_p_family_digon():
    d = lift(p_family(1, [0], [0])).digraph
    assert np.array_equal(d.adjacency(), [[0, 1], [1, 0]])


def test_p_family_input_checks():
    with pytest.raises(ValueError):
        p_family(3, [1, 0, 0, 1], [0])
    with pytest.raises(ValueError):
        p_family(3, [-1], [0])


def test_cayley_directed_cycle():
    d = lift(cayley(cyclic(5), [1])).digraph
    assert np.array_equal(d.adjacency(), np.roll(np.eye(5, dtype=int), 1, axis=1))


def test_non_quadratic_cross_voltages_fail():
    # swapping (1,4) for (4,4) on the 0->1 arcs breaks the Moore graph
    grp = product((5, 5))
    cross = [(0, 0), (1, 1), (4, 2), (4, 3), (4, 4)]
    arcs = [(0, 0, (1, 0)), (0, 0, (4, 0)), (1, 1, (2, 0)), (1, 1, (3, 0))]
    arcs += [(0, 1, c) for c in cross] + [(1, 0, (-w, -z)) for w, z in cross]
    swapped = VoltageDigraph.build(["0", "1"], grp, arcs)
    moore = [7] + [2] * 28 + [-3] * 21
    assert not multiset_equal(lift_spectrum(swapped), moore, 1e-6)
    assert multiset_equal(lift_spectrum(hoffman_singleton()), moore, 1e-8)
    assert diameter(lift(swapped).digraph) > 2


def test_hoffman_singleton_is_moore_graph():
    adj = lift(hoffman_singleton()).digraph.adjacency()
    a2 = adj @ adj
    off = ~np.eye(50, dtype=bool)
    # adjacent pairs share no neighbour, others share exactly one
    assert (a2[off & (adj == 1)] == 0).all()
    assert (a2[off & (adj == 0)] == 1).all()
    assert np.array_equal(np.diag(a2), [7] * 50)


def test_alegre_polynomial_quotient_spectrum():
    assert multiset_equal(
        integer_spectrum(from_voltage(alegre()).at_identity_point()), [2, 0, 0, 1j, -1j], 1e-8
    )
