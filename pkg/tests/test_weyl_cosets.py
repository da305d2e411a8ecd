import pytest

from superbgg.partitions import INF, partitions_up_to
from superbgg.weights import casimir_s, natural, parse_weight, split_hook, z_degree
from superbgg.weyl_cosets import (
    crossing_number,
    dot_reflect,
    enumerate_w0k,
    iter_w0k,
    oracle_representatives,
    oracle_w0k,
    truncate_terms,
)


def W(text):
    return parse_weight(text)


def test_dot_reflect_examples():
    assert dot_reflect(W("1|1"), -1) == W("0|2")
    assert dot_reflect(W("0|2"), 1).coords(3) == (0, -1, 3)
    u = W("2,0|1")
    assert dot_reflect(dot_reflect(u, -2), -2) == u


def test_dot_reflect_rejects_bad_index():
    with pytest.raises(IndexError):
        dot_reflect(W("1|1"), -2)
    with pytest.raises(IndexError):
        dot_reflect(W("1|1"), 0)


def test_enumerate_examples():
    assert enumerate_w0k(W("0|"), 2) == {0: [W("0|")], 1: [W("-1|1")], 2: [W("-2|1,1")]}
    assert enumerate_w0k(W("1|1"), 1)[1] == [W("0|2")]
    assert sorted(enumerate_w0k(W("1,1|1"), 2)[2], key=str) == sorted([W("0,0|3"), W("1,-2|2,2")], key=str)


def test_enumerate_rejects_non_partition_base():
    with pytest.raises(ValueError):
        enumerate_w0k(W("0,1|"), 1)
    with pytest.raises(ValueError):
        enumerate_w0k(W("1|2"), 1)


def test_oracle_examples():
    assert oracle_w0k(W("0|"), 1, 2, 1) == [W("-1|1")]
    for lam in (W("0|"), W("2|1")):
        assert oracle_w0k(lam, 1, 3, 0) == [lam]
    assert oracle_w0k(W("1,1|1"), 2, 3, 2) == enumerate_w0k(W("1,1|1"), 2)[2]


def test_oracle_guard():
    with pytest.raises(ValueError):
        oracle_representatives(4, 5)


def test_oracle_agreement_size_four():
    for m in (1, 2):
        for N in range(1, 7):
            for p in partitions_up_to(4):
                base = split_hook(p, m)
                if len(base.pos) > N:
                    continue
                layers = enumerate_w0k(base, 4)
                for k in range(5):
                    assert [w for w in layers[k] if len(w.pos) <= N] == oracle_w0k(base, m, N, k)


def test_crossing_number_matches_oracle_length():
    # the oracle's representatives with all lengths; compare length histograms
    for m, N in [(1, 4), (2, 4), (3, 3)]:
        counts = {}
        for _, length in oracle_representatives(m, N):
            counts[length] = counts.get(length, 0) + 1
        from itertools import combinations

        sub = {}
        for A in combinations(range(1, m + N + 1), m):
            k = crossing_number(A)
            sub[k] = sub.get(k, 0) + 1
        assert counts == sub


def test_truncate_examples():
    assert truncate_terms([W("0,0|3")], 2) == []
    assert truncate_terms([W("-1|1")], 1) == [W("-1|1")]
    layer = enumerate_w0k(W("1|1"), 1)[1]
    assert truncate_terms(layer, 1) == []


def test_layer_invariants():
    for m in (1, 2, 3):
        for p in partitions_up_to(4):
            lam = split_hook(p, m)
            c0 = casimir_s(natural(lam))
            z0 = z_degree(natural(lam))
            seen = set()
            for k, layer in enumerate_w0k(lam, 4).items():
                for eta in layer:
                    assert eta.in_X()
                    assert casimir_s(natural(eta)) == c0
                    assert z_degree(natural(eta)) <= z0 - k
                    if p.size == 0:
                        assert z_degree(natural(eta)) == z0 - k
                    assert sum(eta.neg) + sum(eta.pos) == p.size
                    assert eta not in seen
                    seen.add(eta)


def test_z_drop_can_exceed_length():
    # lambda = (1), m = 1: the single length-one term drops z by 2, not 1
    (eta,) = enumerate_w0k(W("1|"), 1)[1]
    assert eta == W("-1|2")
    assert z_degree(natural(eta)) == z_degree(W("1|")) - 2


def test_positions_bounded_by_length():
    lam = W("2,1|1")
    for elt in iter_w0k(lam, 4):
        assert max(elt.positions) <= lam.m + elt.length
        assert elt.length == crossing_number(elt.positions)
