import itertools

import pytest
from hypothesis import given, settings, strategies as st

from superbgg.characters import (
    G0Decomposition,
    SparseLaurent,
    decompose_g0,
    euler_verify,
    graded_piece_gminus1,
    hook_schur,
    kac_character,
    l0_character,
    power_sum_character,
    schur_laurent,
    weight_character,
)
from superbgg.partitions import Partition, hook_partitions, partitions_up_to
from superbgg.replab.glirrep import build_gl_irrep
from superbgg.weights import dim_l0, parse_weight


def W(text, n=float("inf")):
    return parse_weight(text, n)


def poly(mvars, tvars, mapping):
    return SparseLaurent(mvars, tvars, mapping)


def brute_hook_schur(shape, m, t):
    """Fill the diagram with letters 0..m+t-1 (x's first) and keep super-semistandard fillings."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    out = {}
    for fill in itertools.product(range(m + t), repeat=len(cells)):
        T = dict(zip(cells, fill))
        ok = True
        for (r, c), a in T.items():
            right, below = T.get((r, c + 1)), T.get((r + 1, c))
            if right is not None and (right < a or (right == a and a >= m)):
                ok = False
            if below is not None and (below < a or (below == a and a < m)):
                ok = False
        if ok:
            e = [0] * (m + t)
            for a in fill:
                e[a] += 1
            out[tuple(e)] = out.get(tuple(e), 0) + 1
    return SparseLaurent(m, t, out)


def test_schur_examples():
    assert schur_laurent((2, 1), 2) == poly(2, 0, {(2, 1): 1, (1, 2): 1})
    assert schur_laurent((0, -1), 2) == poly(2, 0, {(-1, 0): 1, (0, -1): 1})
    assert schur_laurent((1, 1), 2) == poly(2, 0, {(1, 1): 1})
    with pytest.raises(ValueError):
        schur_laurent((1, 1, 1), 2)


@pytest.mark.parametrize("sig, r", [((2, 1), 2), ((2, 1, 0), 3), ((1, 0, -2), 3), ((3, 1), 2), ((2, 2, 1), 3), ((1, 0, 0, -1), 4)])
def test_schur_matches_explicit_module(sig, r):
    assert schur_laurent(sig, r).terms == build_gl_irrep(r, sig).character().terms


@given(st.lists(st.integers(-2, 3), min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_schur_symmetric_and_dimension(xs):
    sig = tuple(sorted(xs, reverse=True))
    r = len(sig)
    s = schur_laurent(sig, r)
    for perm in itertools.permutations(range(r)):
        assert all(s.coefficient(tuple(e[p] for p in perm)) == c for e, c in s.terms.items())
    assert s.at_one() == dim_l0(W(",".join(map(str, sig)) + "|"))


def test_l0_examples():
    assert l0_character(W("0|1"), 1) == poly(1, 1, {(0, 1): 1})
    assert l0_character(W("1,0|1"), 1) == poly(2, 1, {(1, 0, 1): 1, (0, 1, 1): 1})
    mu = W("2,0|2,1")
    assert l0_character(mu, 3).at_one() == dim_l0(mu, 3)


def test_kac_examples():
    assert kac_character(W("0|"), 1) == poly(1, 1, {(0, 0): 1, (-1, 1): 1})
    assert kac_character(W("-1|1"), 1) == poly(1, 1, {(-1, 1): 1, (-2, 2): 1})
    assert kac_character(W("0,0|"), 1).at_one() == 4


@pytest.mark.parametrize("shape", [(1,), (2,), (1, 1), (2, 1), (3,), (2, 2), (3, 1), (2, 1, 1)])
@pytest.mark.parametrize("m, t", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_hook_schur_matches_tableau_enumeration(shape, m, t):
    if not Partition(shape).part(m + 1) <= t:
        pytest.skip("not a hook shape")
    assert hook_schur(shape, m, t) == brute_hook_schur(shape, m, t)


def test_hook_schur_examples():
    assert hook_schur((1,), 2, 2) == poly(2, 2, {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1, (0, 0, 1, 0): 1, (0, 0, 0, 1): 1})
    assert hook_schur((2,), 1, 1) == poly(1, 1, {(2, 0): 1, (1, 1): 1})
    assert hook_schur((1, 1), 1, 1) == poly(1, 1, {(1, 1): 1, (0, 2): 1})
    with pytest.raises(ValueError):
        hook_schur((2, 2), 1, 1)


def test_hook_schur_y_to_zero():
    for m in (1, 2, 3):
        for p in partitions_up_to(5):
            for t in (1, 2):
                if p.part(m + 1) > t:
                    continue
                restricted = hook_schur(p, m, t).y_to_zero()
                expected = schur_laurent(p.parts, m) if p.length <= m else SparseLaurent.zero(m, 0)
                assert restricted == expected


def test_schur_weyl_identity():
    from superbgg.partitions import count_standard_tableaux

    for m, n in [(1, 1), (2, 1), (2, 2)]:
        for d in range(5):
            total = SparseLaurent.zero(m, n)
            for p in hook_partitions(d, m, n):
                total = total + count_standard_tableaux(p) * hook_schur(p, m, n)
            assert total == power_sum_character(d, m, n)


def test_graded_piece_examples():
    for flavour in (False, True):
        assert graded_piece_gminus1(1, 2, 1, flavour) == poly(2, 1, {(-1, 0, 1): 1, (0, -1, 1): 1})
    assert graded_piece_gminus1(2, 1, 1, False) == SparseLaurent.zero(1, 1)
    assert graded_piece_gminus1(2, 1, 1, True) == poly(1, 1, {(-2, 2): 1})
    assert graded_piece_gminus1(0, 2, 2, True) == SparseLaurent.one(2, 2)


def test_decompose_examples():
    d = decompose_g0(kac_character(W("0|"), 1), 1, 1)
    assert d.entries == {W("0|"): 1, W("-1|1"): 1}
    assert decompose_g0(SparseLaurent.zero(1, 1), 1, 1).entries == {}
    d = decompose_g0(hook_schur((2,), 1, 1), 1, 1)
    assert d.entries == {W("2|"): 1, W("1|1"): 1}


def test_decompose_rejects_non_characters():
    with pytest.raises(ValueError):
        decompose_g0(poly(2, 0, {(0, 1): 1}), 2, 0)
    with pytest.raises(ValueError):
        decompose_g0(poly(1, 1, {(0, 0): -1}), 1, 1)
    d = decompose_g0(poly(1, 1, {(0, 0): -1}), 1, 1, allow_virtual=True)
    assert d.entries == {W("0|"): -1}


def test_decompose_round_trip_corpus():
    corpus = [hook_schur(p, m, t) for m, t in [(1, 1), (2, 1), (2, 2)] for p in hook_partitions(3, m, t)]
    corpus += [kac_character(W("1,0|1"), 2), power_sum_character(3, 2, 2)]
    corpus += [schur_laurent((2, 1), 5).regroup(2) * graded_piece_gminus1(2, 2, 3, False)]
    for ch in corpus:
        d = decompose_g0(ch, ch.mvars, ch.tvars)
        assert d.character(ch.tvars) == ch
        assert all(c > 0 for _, c in d.items())


def test_records_round_trip():
    ch = kac_character(W("1,0|1"), 2)
    recs = ch.to_records()
    assert recs == sorted(recs, key=lambda r: r["exponents"])
    assert all(isinstance(r["coeff"], str) for r in recs)
    assert SparseLaurent.from_records(2, 2, recs) == ch


def test_weight_character():
    ch = weight_character([W("1|"), (0, 1)], 1, 1)
    assert ch == poly(1, 1, {(1, 0): 1, (0, 1): 1})


@pytest.mark.parametrize(
    "lam, m, n, depth",
    [((), 1, 1, 5), ((2,), 1, 1, 5), ((2, 1), 1, 2, 6), ((1,), 2, 1, 5), ((1, 1), 1, float("inf"), 4), ((2, 1), 2, 2, 5)],
)
def test_euler_verify(lam, m, n, depth):
    rep = euler_verify(lam, m, n, depth)
    assert rep.passed
    assert not rep.residual


def test_euler_typical_single_term():
    rep = euler_verify((2,), 1, 1, 5)
    assert [len(rep.layers[k]) for k in range(6)] == [1, 0, 0, 0, 0, 0]


def test_euler_detects_missing_layer():
    from superbgg.weights import natural

    rep = euler_verify((), 1, 1, 4)
    in_window = lambda e: e[0] - e[1] >= rep.window
    partial = SparseLaurent.zero(1, 1)
    for k in (0, 2, 3, 4):
        for nu in rep.layers[k]:
            partial = partial + (-1) ** k * kac_character(natural(nu), 1).mask(in_window)
    assert partial != hook_schur((), 1, 1).mask(in_window)


def test_g0_decomposition_helpers():
    d = G0Decomposition({W("1|"): 2, W("0|1"): 1})
    assert d.weights() == [W("1|"), W("0|1")]
    assert d[W("1|")] == 2 and d[W("5|")] == 0
    assert d.to_records() == [{"weight": "1|", "multiplicity": 2}, {"weight": "0|1", "multiplicity": 1}]
