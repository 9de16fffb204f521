"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every tolerance here is exact (integer equality); runtime budgets are the
only non-exact assertions.  Run with `pytest -v tests/test_acceptance.py`
or see the per-criterion lines with `-s`.

Known honest failure: the classical-family grid check finds one genuine
counterexample to the published sufficient inequality for the symplectic /
odd-orthogonal family at (q, n, p) = (8, 2, 7), where the bound
|Irr(C_2 wr S_2)| + (q-1)^2/8 = 11.125 falls short of 2f*sqrt(p-1) = 14.7.
The criterion expecting zero violations is asserted as stated and fails
red; see the B/C test below for the full analysis.
"""

import math
import time

import pytest

from ppchars import constructions, engine, landau, lie_bounds, symmetric, torus_search


def _criterion(number, name, ok, detail=""):
    print(f"[criterion {number}] {name}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, f"criterion {number} ({name}): {detail}"


def test_criterion_1_macdonald_equals_oracle():
    start = time.monotonic()
    mismatches = []
    for n in range(1, 26):
        for p in landau.primes_up_to(n):
            formula = symmetric.macdonald_count(n, p)
            oracle = symmetric.irr_pprime_count_sym_oracle(n, p)
            if formula != oracle or formula < n - 1:
                mismatches.append((n, p, formula, oracle))
    assert symmetric.verify_symmetric_bounds(25).status == "pass"
    # the small-n closed cases: count p at n in {p, p+1}, 2p at n = p+2
    for p in (5, 7, 11, 13, 17):
        assert symmetric.macdonald_count(p, p) == p
    for p in (7, 11, 13):
        assert symmetric.macdonald_count(p + 1, p) == p
    for p in (5, 7, 11, 13):
        assert symmetric.macdonald_count(p + 2, p) == 2 * p
    elapsed = time.monotonic() - start
    _criterion(
        1, "digit-product formula = hook oracle (n <= 25)",
        not mismatches and elapsed <= 60,
        f"mismatches={mismatches} elapsed={elapsed:.1f}s",
    )


def test_criterion_2_extremal_frobenius():
    start = time.monotonic()
    failures = []
    for p in (5, 17, 37, 101, 197, 257):
        m = math.isqrt(p - 1)
        group, params = constructions.build_frobenius(p, m)
        closed = constructions.frobenius_degree_multiset(params)
        expected = tuple(sorted([1] * m + [m] * ((p - 1) // m)))
        if closed.degrees != expected or closed.pprime_count(p) != 2 * m:
            failures.append((p, "closed form"))
        if constructions.extremal_count(p) != 2 * m:
            failures.append((p, "extremal count"))
        if p in (5, 17, 37, 257):
            if engine.irreducible_degrees(group).degrees != expected:
                failures.append((p, "engine"))
    elapsed = time.monotonic() - start
    _criterion(
        2, "extremal Frobenius groups attain 2*sqrt(p-1)",
        not failures and elapsed <= 120,
        f"failures={failures} elapsed={elapsed:.1f}s",
    )


def test_criterion_3_solvable_witness():
    start = time.monotonic()
    built = constructions.build_gamma_l(5, 19)
    clifford = constructions.clifford_pprime_count(built.action, 5)
    report = constructions.engine_cross_check(built, 5)
    elapsed = time.monotonic() - start
    ok = (
        clifford.pprime_count == 4
        and clifford.degrees.sum_of_squares() == 3610
        and report.status == "pass"
        and elapsed <= 120
    )
    _criterion(
        3, "order-3610 solvable witness, Clifford = engine",
        ok,
        f"count={clifford.pprime_count} sum_sq={clifford.degrees.sum_of_squares()} "
        f"cross={report.status} elapsed={elapsed:.1f}s",
    )


def test_criterion_4_table2_regression():
    report = lie_bounds.verify_table2()
    printed = [row["stated"] for row in report.rows]
    expected = [10, 82, 10, 13, 17, 13, 1297, 31, 21, 257,
                65, 40, 577, 2402, 871, 257, 38417, 10001]
    ok = (
        report.counters["mismatches"] == 0
        and len(report.rows) == 18
        and sorted(printed) == sorted(expected)
    )
    _criterion(4, "invariant-character table bounds", ok,
               f"mismatches={report.counters['mismatches']}")


def test_criterion_5_landau_list():
    lps = landau.landau_primes(300)
    ok = (
        [x.p for x in lps if not x.degenerate] == [5, 17, 37, 101, 197, 257]
        and lps[0].p == 2
        and lps[0].degenerate
    )
    _criterion(5, "Landau primes below 300", ok, str([x.p for x in lps]))


def test_criterion_6_torus_search_set_equality():
    start = time.monotonic()
    report = torus_search.reconcile_with_theorem(256, 12)
    elapsed = time.monotonic() - start
    diffs = [
        (row["p"], row["missing"], row["extra"])
        for row in report.rows
        if not row["ok"]
    ]
    ok = report.status == "pass" and set(
        row["p"] for row in report.rows
    ) == {5, 17, 37, 257} and elapsed <= 300
    _criterion(6, "torus classification set equality", ok,
               f"diffs={diffs} elapsed={elapsed:.1f}s")


def test_criterion_7_defining_characteristic_grid():
    report = lie_bounds.defining_char_check(l_max=8, r_max=97, f_max=6)
    _criterion(7, "defining-characteristic grid",
               report.counters["violations"] == 0,
               f"violations={report.counters['violations']}")


def test_criterion_7_e8_d1_grid():
    report = lie_bounds.e8_d1_check(1001, 4096)
    _criterion(7, "E8 d=1 tail grid",
               report.counters["violations"] == 0,
               f"violations={report.counters['violations']}")


@pytest.mark.parametrize("family", ["d", "2d", "a", "2a"])
def test_criterion_7_classical_grids(family):
    report = lie_bounds.classical_inequality_check(family)
    _criterion(7, f"classical family {family} grid",
               report.counters["violations"] == 0,
               f"violations={report.counters['violations']}")


def test_criterion_7_classical_bc_grid():
    """EXPECTED RED: the published sufficient inequality has one genuine
    counterexample on this grid.

    At family B/C, q = 8 (f = 3), d = 1, a = 2 (rank n = 2), p = 7:
    the printed bound |Irr(C_{2d} wr S_a)| + (q^d - 1)^a / ((2d)^a a!)
    = 5 + 49/8 = 11.125 is NOT greater than 2 f gcd(2, q-1) sqrt(p-1)
    = 6 sqrt(6) = 14.697.  The theorem itself is safe there (Sp_4(8) has
    far more than 2 sqrt(6) characters of 7'-degree; the exact orbit count
    10 + 5 = 15 of the same torus data already clears the bound), but the
    displayed estimate fails, so a faithful grid verification cannot
    report zero violations.  Asserted as specified, failing honestly.
    """
    report = lie_bounds.classical_inequality_check("bc")
    violations = [
        (r["q"], r["f"], r["d"], r["a"], r["p"]) for r in report.failures
    ]
    _criterion(7, "classical family bc grid",
               report.counters["violations"] == 0,
               f"violations={violations} (single known defect of the "
               "printed bound at Sp_4(8), p = 7)")


def test_criterion_8_engine_property_suite():
    start = time.monotonic()
    gamma = constructions.build_gamma_l(5, 19)
    corpus = [
        engine.cyclic_group(12),
        engine.dihedral_group(10),
        engine.symmetric_group(4),
        engine.symmetric_group(5),
        engine.alternating_group(5),
        engine.alternating_group(6),
        constructions.build_frobenius(5, 2)[0],
        constructions.build_frobenius(17, 4)[0],
        constructions.build_frobenius(257, 16)[0],
        constructions.semidirect_product_permutations(gamma.action),
    ]
    assert len(corpus) >= 10
    failures = []
    for group in corpus:
        group.validate()
        classes = engine.conjugacy_classes(group)
        first = engine.irreducible_degrees(group, seed=0)
        second = engine.irreducible_degrees(group, seed=1)
        checks = {
            "sum_sq": first.sum_of_squares() == group.order,
            "count": len(first.degrees) == len(classes.reps),
            "linear": first.linear_count() == engine.derived_subgroup_index(group),
            "seeds": first.degrees == second.degrees,
        }
        if not all(checks.values()):
            failures.append((group.name or group.order, checks))
    elapsed = time.monotonic() - start
    _criterion(8, "engine property suite over 10-group corpus",
               not failures,
               f"failures={failures} elapsed={elapsed:.1f}s")


def test_criterion_9_wreath_identity():
    bad = [
        (d, a)
        for d in range(1, 17)
        for a in range(1, 17)
        if d * a <= 16
        and lie_bounds.wreath_irr_count(d, a) != lie_bounds.wreath_irr_count_naive(d, a)
    ]
    _criterion(9, "wreath-product character count identity", not bad, str(bad))
