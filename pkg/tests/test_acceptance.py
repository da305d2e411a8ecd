"""Acceptance criteria, exact comparisons with wall-clock budgets.

Each test prints one ``ACCEPTANCE <n> PASS/FAIL`` line to the terminal.
"""

import json
import time
from collections import Counter

import pytest

from superbgg import cli
from superbgg.bruhat_order import dot_orbit, leq_gl, leq_gl_closure, pairwise_incomparable
from superbgg.characters import (
    decompose_g0,
    euler_verify,
    graded_piece_gminus1,
    hook_schur,
    power_sum_character,
    schur_laurent,
)
from superbgg.partitions import (
    aux111_sets,
    comb_identity_check,
    count_standard_tableaux,
    hook_partitions,
    partitions_up_to,
)
from superbgg.replab.cohomology import cohomology
from superbgg.replab.kac import build_kac
from superbgg.replab.modules import irreducible_quotient, singular_vectors
from superbgg.weights import (
    SuperWeight,
    casimir_c,
    casimir_s,
    is_atypical,
    natural,
    split_hook,
)
from superbgg.weyl_cosets import enumerate_w0k, oracle_w0k, truncate_terms


BUDGETS = {1: 60, 2: 10, 3: 300, 4: 120, 5: 60, 6: 30, 7: 180, 8: 30, 9: 60, 10: 60, 11: 180, 12: 300}


@pytest.fixture
def report(request, capsys):
    """Recorder for (passed, detail); prints the criterion line at teardown, also on errors."""
    number = int(request.node.name.split("_")[1])
    budget = BUDGETS[number]
    start = time.perf_counter()
    state = {"passed": False, "detail": "raised before reporting"}

    def record(passed, detail=""):
        state.update(passed=passed, detail=detail)

    yield record
    elapsed = time.perf_counter() - start
    ok = state["passed"] and elapsed < budget
    with capsys.disabled():
        print(f"\nACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s of {budget}s) {state['detail']}")


def within_budget(number, start):
    return time.perf_counter() - start < BUDGETS[number]


def test_01_gl12_verma_example(report, tmp_path):
    t0 = time.perf_counter()
    out = tmp_path / "verma.json"
    code = cli.main(["replab-verma-gl12", "--depth", "6", "--out", str(out)])
    rep = json.loads(out.read_text())
    row = rep["results"][0]
    lines = [ln["vector"] for ln in row["proper_singular_lines"]]
    ok = (
        code == 0
        and sorted(lines) == sorted(["E(2,1)v", "E(1,-1)E(2,1)v"])
        and row["quotient_dim"] == 4
        and row["irreducible_dim"] == 3
        and row["isomorphic_to_kac"]
    )
    report(ok, f"lines={lines} dims=({row['quotient_dim']},{row['irreducible_dim']})")
    assert ok
    assert within_budget(1, t0)

def test_02_gl11_trivial_resolution(report):
    t0 = time.perf_counter()
    layers = enumerate_w0k(split_hook((), 1), 10)
    ok = all(
        [natural(w) for w in truncate_terms(layers[k], 1)] == [SuperWeight((-k,), (k,))]
        for k in range(11)
    )
    ok = ok and euler_verify((), 1, 1, 8).passed
    report(ok)
    assert ok
    assert within_budget(2, t0)

def test_03_euler_verify_triples(report):
    t0 = time.perf_counter()
    results = {}
    for m, n, lam in [(1, 2, (2, 1)), (2, 1, (2, 1)), (2, 2, (2, 2, 1))]:
        results[(m, n, lam)] = euler_verify(lam, m, n, 6).passed
    ok = all(results.values())
    report(ok, str(results))
    assert ok
    assert within_budget(3, t0)

def test_04_coset_oracle(report):
    t0 = time.perf_counter()
    compared = 0
    ok = True
    for m in (1, 2):
        for N in range(1, 7):
            for lam in [(), (1,), (2, 1), (1, 1, 1)]:
                base = split_hook(lam, m)
                if len(base.pos) > N:
                    continue
                layers = enumerate_w0k(base, 4)
                for k in range(5):
                    fast = [w for w in layers[k] if len(w.pos) <= N]
                    slow = oracle_w0k(base, m, N, k)
                    compared += 1
                    ok = ok and fast == slow
    report(ok, f"{compared} layers compared")
    assert ok
    assert within_budget(4, t0)

def test_05_aux111_and_comb_identity(report):
    t0 = time.perf_counter()
    N = 12
    half = frozenset(2 * i - 1 for i in range(1, N + 1))
    ok = True
    count = 0
    for p in partitions_up_to(12):
        a, b = aux111_sets(p, N)
        ok = ok and not (a & b) and (a | b) == half and comb_identity_check(p, N)
        count += 1
    report(ok, f"{count} partitions")
    assert ok
    assert within_budget(5, t0)

def test_06_casimir_identity(report):
    t0 = time.perf_counter()
    checked = 0
    ok = True
    for m in (1, 2, 3):
        for size in range(11):
            for p in hook_partitions(size, m, float("inf")):
                mu = split_hook(p, m)
                ok = ok and casimir_c(mu) == casimir_s(natural(mu))
                checked += 1
                if size <= 4:
                    for layer in enumerate_w0k(mu, 4).values():
                        for eta in layer:
                            ok = ok and casimir_c(eta) == casimir_s(natural(eta))
                            checked += 1
    report(ok, f"{checked} weights")
    assert ok
    assert within_budget(6, t0)

def test_07_finite_rank_layers_and_multiplicities(report):
    t0 = time.perf_counter()
    m, N, lam = 2, 4, (2, 1)
    base = split_hook(lam, m)
    ordinary_l = schur_laurent(lam, m + N).regroup(m)
    super_l = hook_schur(lam, m, N)
    target = casimir_c(base)
    layers = enumerate_w0k(base, 3)
    ok = True
    for k in range(4):
        ordinary = decompose_g0(ordinary_l * graded_piece_gminus1(k, m, N, False), m, N)
        same = {w: c for w, c in ordinary.items() if casimir_c(w) == target}
        expected = {w: 1 for w in layers[k] if len(w.pos) <= N}
        ok = ok and same == expected

        sup = decompose_g0(super_l * graded_piece_gminus1(k, m, N, True), m, N)
        left = Counter()
        for w, c in ordinary.items():
            if w.first_pos() <= N:
                left[natural(w)] += c
        right = Counter({w: c for w, c in sup.items() if w.first_pos() <= N})
        ok = ok and left == right
    report(ok)
    assert ok
    assert within_budget(7, t0)

def test_08_layer_incomparability(report):
    t0 = time.perf_counter()
    ok = True
    for lam, m in [((2, 1), 2), ((1, 1, 1), 1)]:
        layers = enumerate_w0k(split_hook(lam, m), 4)
        for k in range(5):
            ok = ok and pairwise_incomparable(layers[k])
            ok = ok and pairwise_incomparable([natural(w) for w in layers[k]], super=True)
    report(ok)
    assert ok
    assert within_budget(8, t0)

def _orbit_bases():
    for total in range(2, 6):
        for m in range(1, total):
            yield SuperWeight((0,) * m), total
            yield SuperWeight((2,) + (1,) * (m - 1), (1,) if total > m else ()), total
            yield SuperWeight((1,) * m, (1,) * (total - m)), total

def test_09_bruhat_prefix_vs_closure(report):
    t0 = time.perf_counter()
    pairs = 0
    ok = True
    for base, length in _orbit_bases():
        orbit = dot_orbit(base, length)
        assert len(orbit) <= 120
        for u in orbit:
            for v in orbit:
                ok = ok and leq_gl(u, v) == leq_gl_closure(u, v)
                pairs += 1
    report(ok, f"{pairs} pairs")
    assert ok
    assert within_budget(9, t0)

def test_10_hook_schur_schur_weyl(report):
    t0 = time.perf_counter()
    ok = True
    for m, n in [(1, 1), (2, 1), (2, 2)]:
        for d in range(5):
            total = None
            for p in hook_partitions(d, m, n):
                term = count_standard_tableaux(p) * hook_schur(p, m, n)
                total = term if total is None else total + term
            ok = ok and total == power_sum_character(d, m, n)
    report(ok)
    assert ok
    assert within_budget(10, t0)

def test_11_reducible_kac_unique_singular_line(report):
    t0 = time.perf_counter()
    ok = True
    reducible = 0
    for m, n in [(1, 1), (2, 1)]:
        for size in range(4):
            for p in hook_partitions(size, m, n):
                nu = natural(split_hook(p, m)).with_n(n)
                M = build_kac(m, n, nu)
                proper = singular_vectors(M).proper
                iq = irreducible_quotient(M)
                ok = ok and iq.irreducible and iq.quotient.character() == hook_schur(p, m, n)
                ok = ok and bool(proper) == is_atypical(nu, n)
                if proper:
                    reducible += 1
                    ok = ok and len(proper) == 1 and iq.generated_by_singulars
    report(ok, f"{reducible} reducible Kac modules")
    assert ok
    assert within_budget(11, t0)

def test_12_cohomology_corollary(report):
    t0 = time.perf_counter()
    ok = True
    for m, n, lam, kmax in [(1, 1, (), 3), (2, 1, (1,), 2)]:
        res = cohomology(m, n, lam, kmax)
        layers = enumerate_w0k(split_hook(lam, m), kmax)
        ok = ok and res.d_squared_zero and res.consistent
        for k in range(kmax + 1):
            expected = {natural(w): 1 for w in truncate_terms(layers[k], n)}
            ok = ok and dict(res.degrees[k].entries) == expected
    report(ok)
    assert ok
    assert within_budget(12, t0)
