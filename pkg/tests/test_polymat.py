import cmath
import itertools
import re

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import q8_table, random_abelian_group, random_voltage_digraph, s3_table
from voltlift.catalog import alegre, hoffman_singleton
from voltlift.digraph import Digraph, bfs_distances
from voltlift.group import CharacterPoint, cyclic, from_cayley_table, product
from voltlift.polymat import (
    NumericalResidualError,
    PolyMatrix,
    eccentricities,
    evaluate,
    evaluate_all,
    from_voltage,
    multiply,
    power,
    power_via_dft,
    render,
    render_entry,
    walk_counts,
)
from voltlift.voltage import VoltageDigraph, fiber_quotient, lift

ALEGRE_B4 = [
    ["2+z^2+z^3", "z+z^2+z^4", "z+z^2+z^4", "z^2+z^4", "2+z^2+z^3"],
    ["z+z^2+2z^4", "1+z+z^3", "1+z+z^3", "z+z^3", "z+z^2+2z^4"],
    ["z+z^3", "2+z^2+z^3", "2+z^2+z^3", "2+z^2+z^3", "z+z^3"],
    ["z+z^3+z^4", "1+z^2+z^3", "1+z^2+z^3", "2+z^2+z^3", "z+z^3+z^4"],
    ["1+z^2+z^4", "z+z^3+z^4", "z+z^3+z^4", "2z+z^3+z^4", "1+z^2+z^4"],
]
ALEGRE_CUMULATIVE_ROW0 = [
    "3+z+z^2+z^3+z^4",
    "1+z+z^2+z^3+2z^4",
    "1+z+z^2+z^3+2z^4",
    "1+z+z^2+z^3+2z^4",
    "2+z+z^2+z^3+z^4",
]


def coeffs_of(text, k):
    """Coefficient list of a univariate polynomial written like '2z+z^3+1'."""
    out = [0] * k
    for term in text.split("+"):
        m = re.fullmatch(r"(\d*)(z(?:\^(\d+))?)?", term.strip())
        c = int(m.group(1)) if m.group(1) else 1
        e = 0 if not m.group(2) else int(m.group(3) or 1)
        out[e % k] += c
    return out


def lift_power(vd, ell):
    return np.linalg.matrix_power(lift(vd).digraph.adjacency(), ell)


def test_alegre_polynomial_matrix():
    b = from_voltage(alegre())
    want = [
        ["0", "1", "1", "0", "0"],
        ["0", "z^4", "z^4", "0", "0"],
        ["0", "0", "0", "z+z^4", "0"],
        ["1", "0", "0", "0", "1"],
        ["z", "0", "0", "0", "z"],
    ]
    for u, v in itertools.product(range(5), repeat=2):
        expected = [0] * 5 if want[u][v] == "0" else coeffs_of(want[u][v], 5)
        assert b.coeffs[u, v].tolist() == expected
    assert render_entry(b, 2, 3) == "z + z^4"


def test_hoffman_singleton_polynomial_matrix():
    b = from_voltage(hoffman_singleton())
    assert render_entry(b, 0, 0) == "z1 + z1^4"
    assert render_entry(b, 1, 1) == "z1^2 + z1^3"
    # w-exponent first; the quadratic pattern (i^2, i) on the 0->1 arcs
    assert render_entry(b, 0, 1) == "1 + z1*z2 + z1*z2^4 + z1^4*z2^2 + z1^4*z2^3"


def test_no_arcs_zero_matrix():
    vd = VoltageDigraph.build(["a", "b"], cyclic(3), [])
    assert not from_voltage(vd).coeffs.any()
    assert render(from_voltage(vd)) == "0 0 0\n0 1 0\n1 0 0\n1 1 0\n"


def test_power_zero_is_identity():
    b = from_voltage(alegre())
    assert power(b, 0) == PolyMatrix.identity(b.group, 5)
    assert power(b, 1) == b


def test_alegre_fourth_power_all_entries():
    b4 = power(from_voltage(alegre()), 4)
    for u, v in itertools.product(range(5), repeat=2):
        assert b4.coeffs[u, v].tolist() == coeffs_of(ALEGRE_B4[u][v], 5), (u, v)
    assert render_entry(b4, 0, 0) == "2 + z^2 + z^3"
    assert walk_counts(from_voltage(alegre()), 4, 0, 0).tolist() == [2, 0, 1, 1, 0]


def test_alegre_cumulative_first_row():
    b = from_voltage(alegre())
    total = PolyMatrix.zeros(b.group, 5)
    for ell in range(5):
        total = total + power(b, ell)
    for v in range(5):
        assert total.coeffs[0, v].tolist() == coeffs_of(ALEGRE_CUMULATIVE_ROW0[v], 5)


def test_cyclic_ring_wraps_exponents():
    for k in range(1, 8):
        grp = cyclic(k)
        for a, b in itertools.product(range(k), repeat=2):
            x = PolyMatrix(grp, np.eye(k, dtype=np.int64)[a].reshape(1, 1, k))
            y = PolyMatrix(grp, np.eye(k, dtype=np.int64)[b].reshape(1, 1, k))
            assert (
                multiply(x, y).coeffs[0, 0].tolist() == np.eye(k, dtype=int)[(a + b) % k].tolist()
            )


def _walk_instances():
    rng = np.random.default_rng(5)
    groups = [
        cyclic(7),
        product((2, 4)),
        from_cayley_table(s3_table()),
        from_cayley_table(q8_table()),
    ]
    for i in range(16):
        grp = groups[i % 4]
        yield random_voltage_digraph(rng, grp, int(rng.integers(1, 6)))


@pytest.mark.parametrize("vd", list(_walk_instances()), ids=repr)
def test_walk_counts_match_lift_powers(vd):
    b = from_voltage(vd)
    r, m = vd.r, vd.group.order
    for ell in range(6):
        a_ell = lift_power(vd, ell)
        p = power(b, ell)
        # coefficient i of entry (u, v) = walks (u, g0) -> (v, g_i)
        got = p.coeffs.transpose(0, 2, 1).reshape(r, m * r)
        assert np.array_equal(got, a_ell[:r])


def test_evaluate_at_trivial_point_is_quotient():
    vd = alegre()
    b = from_voltage(vd)
    vals = evaluate(b, CharacterPoint((0,), (5,))).values
    assert np.allclose(vals, fiber_quotient(vd))
    assert np.array_equal(b.at_identity_point(), fiber_quotient(vd))


def test_evaluate_alegre_at_omega():
    vals = evaluate(from_voltage(alegre()), CharacterPoint((1,), (5,))).values
    assert abs(vals[4, 0] - cmath.exp(2j * cmath.pi / 5)) < 1e-12


def test_hoffman_singleton_at_trivial_point():
    vals = evaluate(from_voltage(hoffman_singleton()), CharacterPoint((0, 0), (5, 5))).values
    assert np.allclose(vals, [[2, 5], [5, 2]])


def test_evaluate_all_matches_pointwise():
    b = from_voltage(hoffman_singleton())
    stacked = evaluate_all(b)
    for i, (j1, j2) in enumerate(itertools.product(range(5), repeat=2)):
        direct = evaluate(b, CharacterPoint((j1, j2), (5, 5))).values
        assert np.allclose(stacked[i], direct, atol=1e-12)


def test_dft_power_alegre():
    b = from_voltage(alegre())
    assert power_via_dft(b, 1) == b
    for ell in range(7):
        assert power_via_dft(b, ell) == power(b, ell)
    assert power_via_dft(b, 4).coeffs[0, 0].tolist() == [2, 0, 1, 1, 0]


def test_dft_refuses_unsafe_rounding():
    b = from_voltage(alegre())
    with pytest.raises(NumericalResidualError):
        power_via_dft(b, 45)
    with pytest.raises(NumericalResidualError):
        power_via_dft(b, 3, tol=0.0)


def test_dft_needs_abelian():
    grp = from_cayley_table(s3_table())
    vd = VoltageDigraph.build(["a"], grp, [(0, 0, 1)])
    with pytest.raises(Exception, match="Abelian"):
        power_via_dft(from_voltage(vd), 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 6))
def test_dft_power_equals_convolution_power(seed, ell):
    rng = np.random.default_rng(seed)
    vd = random_voltage_digraph(rng, random_abelian_group(rng, 20), int(rng.integers(1, 6)))
    b = from_voltage(vd)
    assert power_via_dft(b, ell) == power(b, ell)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_evaluation_is_multiplicative(seed):
    rng = np.random.default_rng(seed)
    grp = random_abelian_group(rng, 16)
    r = int(rng.integers(1, 5))
    x = PolyMatrix(grp, rng.integers(-3, 4, size=(r, r, grp.order)))
    y = PolyMatrix(grp, rng.integers(-3, 4, size=(r, r, grp.order)))
    xy = evaluate_all(multiply(x, y))
    assert np.allclose(xy, evaluate_all(x) @ evaluate_all(y), atol=1e-9)


def test_alegre_eccentricities():
    assert eccentricities(from_voltage(alegre())).tolist() == [4] * 5


def test_eccentricities_disconnected_lift():
    # all voltages trivial over Z_3: the lift is three disjoint copies
    vd = VoltageDigraph.build(["a", "b"], cyclic(3), [(0, 1, 0), (1, 0, 0)])
    assert eccentricities(from_voltage(vd)).tolist() == [-1, -1]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_eccentricities_match_bfs(seed):
    rng = np.random.default_rng(seed)
    grp = [cyclic(6), product((2, 3)), from_cayley_table(s3_table())][seed % 3]
    vd = random_voltage_digraph(rng, grp, int(rng.integers(1, 5)), density=0.6)
    d = lift(vd).digraph
    want = []
    for u in range(vd.r):
        dist = bfs_distances(d, u)
        want.append(-1 if (dist < 0).any() else int(dist.max()))
    assert eccentricities(from_voltage(vd)).tolist() == want


def test_render_table_group_as_vector():
    grp = from_cayley_table(s3_table())
    vd = VoltageDigraph.build(["a"], grp, [(0, 0, 2), (0, 0, 2)])
    assert render_entry(from_voltage(vd), 0, 0) == "(0, 0, 2, 0, 0, 0)"


def test_render_negative_and_constant_terms():
    x = PolyMatrix(cyclic(4), np.array([[[-1, 0, 3, -1]]]))
    assert render_entry(x, 0, 0) == "-1 + 3z^2 - z^3"


def test_single_loop_lifts_to_directed_cycle():
    vd = VoltageDigraph.build(["a"], cyclic(5), [(0, 0, 1)])
    d = lift(vd).digraph
    shift = np.roll(np.eye(5, dtype=int), 1, axis=1)
    assert d == Digraph.from_adjacency(shift, d.labels)
