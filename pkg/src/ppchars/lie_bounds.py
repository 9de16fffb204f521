"""Inequality tables and grid checks for groups of Lie type.

Everything is verified in exact integer arithmetic; square roots never
appear because each inequality of the shape X > 2c*sqrt(p-1) is compared
as X^2 > 4c^2(p-1) with both sides integers (or scaled by an exact common
denominator first).

The invariant-character table is ingested data: the character counts per
(group, d-list) row come from published tables of unipotent characters
and are not recomputed here.  What IS recomputed is the prime bound each
count yields: floor(k^2/4) + 1 rows with non-cyclic Sylow subgroups,
floor(k^4/16) + 1 for cyclic ones.  Floor semantics reproduce every
printed bound exactly and are pinned by the regression test.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass
from functools import lru_cache

from .errors import ConsistencyError
from .landau import factorize, is_prime, multiplicative_order, prime_powers
from .partitions import _compositions, enumerate_partitions, split_count
from .report import Report, timer

E8_WEYL_ORDER = 696729600

DEFAULT_Q_MAX = 512
DEFAULT_RANK_MAX = 12
DEFAULT_F_MAX = 9


@lru_cache(maxsize=None)
def cyclotomic_value(d: int, q: int) -> int:
    """Phi_d(q) by exact divisor-product division of q^d - 1."""
    if d < 1 or q < 2:
        raise ValueError("need d >= 1 and q >= 2")
    value = q**d - 1
    for e in range(1, d):
        if d % e == 0:
            value, rem = divmod(value, cyclotomic_value(e, q))
            if rem:
                raise ConsistencyError(f"inexact cyclotomic division at ({d},{q})")
    return value


def lemma_easy_bound(count: int, cyclic_sylow: bool) -> int:
    """Largest prime bound certified by `count` invariant p'-characters:
    floor(count^2/4) + 1, or floor(count^4/16) + 1 with cyclic Sylow."""
    if count < 1:
        raise ValueError("count must be positive")
    if cyclic_sylow:
        return count**4 // 16 + 1
    return count**2 // 4 + 1


@dataclass(frozen=True)
class InvariantCharRow:
    group_tag: str
    d_list: str
    count: int
    cyclic_sylow: bool
    stated_p_bound: int


# Rows of the exceptional-group invariant unipotent character table; the
# left-half rows have non-cyclic Sylow subgroups (torus multiplicity > 1),
# the right-half rows cyclic ones.
TABLE2: tuple[InvariantCharRow, ...] = (
    InvariantCharRow("G2", "1,2", 6, False, 10),
    InvariantCharRow("G2", "3,6", 6, True, 82),
    InvariantCharRow("3D4", "1,2", 6, False, 10),
    InvariantCharRow("3D4", "3,6", 7, False, 13),
    InvariantCharRow("3D4", "12", 4, True, 17),
    InvariantCharRow("2F4", "1,4,8',8''", 7, False, 13),
    InvariantCharRow("2F4", "12,24',24''", 12, True, 1297),
    InvariantCharRow("F4", "1,2", 11, False, 31),
    InvariantCharRow("F4", "3,6", 9, False, 21),
    InvariantCharRow("F4", "8,12", 8, True, 257),
    InvariantCharRow("(2)E6", "1,2,3,4,6", 16, False, 65),
    InvariantCharRow("(2)E6", "5,8,9,12,(10,18)", 5, True, 40),
    InvariantCharRow("E7", "1,2,3,4,6", 48, False, 577),
    InvariantCharRow("E7", "5,7,8,9,10,12,14,18", 14, True, 2402),
    InvariantCharRow("E8", "1,2,3,4,6", 59, False, 871),
    InvariantCharRow("E8", "5,8,10,12", 32, False, 257),
    InvariantCharRow("E8", "7,9,14,18", 28, True, 38417),
    InvariantCharRow("E8", "15,20,24,30", 20, True, 10001),
)

# Invariant unipotent character counts for the small primes with
# non-abelian Sylow subgroups (p in {5, 7}).
TABLE1: tuple[tuple[str, int, int], ...] = (
    ("(2)E6", 5, 10),
    ("E7", 5, 30),
    ("E8", 5, 20),
    ("E7", 7, 14),
    ("E8", 7, 28),
)


def verify_table2() -> Report:
    rows = []
    with timer() as t:
        for entry in TABLE2:
            recomputed = lemma_easy_bound(entry.count, entry.cyclic_sylow)
            rows.append(
                {
                    "group": entry.group_tag,
                    "d": entry.d_list,
                    "count": entry.count,
                    "cyclic_sylow": entry.cyclic_sylow,
                    "stated": entry.stated_p_bound,
                    "recomputed": recomputed,
                    "ok": recomputed == entry.stated_p_bound,
                }
            )
    return Report(
        command="bounds --table2",
        parameters={},
        rows=rows,
        counters={"rows": len(rows), "mismatches": sum(not r["ok"] for r in rows)},
        elapsed_seconds=t.elapsed,
    )


def table1_data() -> tuple[tuple[str, int, int], ...]:
    return TABLE1


def table1_report() -> Report:
    """Each (group, p, count) must satisfy count^2/4 + 1 > p."""
    rows = []
    with timer() as t:
        for group_tag, p, count in TABLE1:
            ok = count * count > 4 * (p - 1)
            rows.append(
                {
                    "group": group_tag,
                    "p": p,
                    "count": count,
                    "bound": count * count // 4 + 1,
                    "ok": ok,
                }
            )
    return Report(
        command="bounds --table1",
        parameters={},
        rows=rows,
        counters={"rows": len(rows)},
        elapsed_seconds=t.elapsed,
    )


# ---------------------------------------------------------------------------
# defining characteristic

def defining_char_check(
    l_max: int = 8, r_max: int = 97, f_max: int = 6
) -> Report:
    """q^l > 2*sqrt(p-1) * |Out|-bound over the grid, with q = p^f.

    The generic outer bound is (6l+3)f; the two known tight points
    (f, l, p) = (1, 2, 5) and (1, 2, 7) use 6 and 8 respectively.
    """
    rows = []
    with timer() as t:
        for p in (x for x in range(5, r_max + 1) if is_prime(x)):
            for l in range(2, l_max + 1):
                for f in range(1, f_max + 1):
                    if (f, l, p) == (1, 2, 5):
                        bound = 6
                    elif (f, l, p) == (1, 2, 7):
                        bound = 8
                    else:
                        bound = (6 * l + 3) * f
                    q = p**f
                    ok = q ** (2 * l) > 4 * (p - 1) * bound * bound
                    rows.append(
                        {"l": l, "p": p, "f": f, "out_bound": bound, "ok": ok}
                    )
    return Report(
        command="bounds --defining",
        parameters={"l_max": l_max, "r_max": r_max, "f_max": f_max},
        rows=rows,
        counters={"checked": len(rows), "violations": sum(not r["ok"] for r in rows)},
        elapsed_seconds=t.elapsed,
    )


# ---------------------------------------------------------------------------
# wreath product character counts

def wreath_irr_count(d: int, a: int) -> int:
    """|Irr(C_d wr S_a)| = number of d-tuples of partitions of total size a."""
    return split_count(d, a)


def wreath_irr_count_naive(d: int, a: int) -> int:
    """Literal enumeration of tuples of partitions; oracle for the above."""
    count = 0
    for comp in _compositions(a, d):
        for _ in itertools.product(
            *(tuple(enumerate_partitions(s)) for s in comp)
        ):
            count += 1
    return count


# ---------------------------------------------------------------------------
# classical families in non-defining characteristic

FAMILIES = ("bc", "d", "2d", "a", "2a")


@dataclass(frozen=True)
class ClassicalCase:
    """One grid point of the classical-family sweep: q = r^f, rank n with
    n = a*d + s, and a prime p >= 5 for which d is minimal with
    p | q^d -+ 1 (sign recorded as +-1, per the family convention)."""

    family: str
    q: int
    r: int
    f: int
    d: int
    a: int
    n: int
    p: int
    sign: int

    def __post_init__(self):
        if self.a < 1 or self.n != self.a * self.d + self.n % self.d:
            raise ValueError(f"inconsistent rank data in {self}")

_FAMILY_CFG = {
    # n_min, wreath cyclic factor, torus convention, rhs gcd
    "bc": (2, "pm"),
    "d": (4, "pm"),
    "2d": (4, "pm"),
    "a": (3, "linear"),
    "2a": (3, "unitary"),
}


def _minimal_pm_d(p: int, q: int) -> tuple[int, int]:
    """Least d with p | q^d +- 1, and the matching sign (+1 or -1)."""
    e = multiplicative_order(q % p, p)
    if e % 2 == 0:
        return e // 2, +1
    return e, -1


def _minimal_unitary_d(p: int, q: int, d_cap: int) -> int | None:
    for dd in range(1, d_cap + 1):
        if (q**dd - (-1) ** dd) % p == 0:
            return dd
    return None


@lru_cache(maxsize=None)
def _prime_divisors_ge5(value: int) -> tuple[int, ...]:
    if value <= 1:
        return ()
    return tuple(p for p in factorize(value) if p >= 5)


def classical_inequality_check(
    family: str,
    q_max: int = DEFAULT_Q_MAX,
    rank_max: int = DEFAULT_RANK_MAX,
    f_max: int = DEFAULT_F_MAX,
) -> Report:
    """Sweep |Irr(W_d)| + |T_d| / |W_d| > 2 f g sqrt(p-1) over a grid.

    Points are (q = r^f, n, d, a = n // d, p) with a >= 2 and p >= 5 a
    prime with d minimal for p (sign-matched torus order q^d +- 1), p
    coprime to q, and p > a so that Sylow p-subgroups are abelian (p <= a
    belongs to the non-abelian branch, which is handled by a different and
    much cruder character count).

    For the two orthogonal families the relative Weyl group can be an
    index-two subgroup of the full wreath product, so their binding check
    conservatively uses floor(count/2); the full-count verdict is reported
    alongside in each row.
    """
    if family not in _FAMILY_CFG:
        raise ValueError(f"unknown family {family!r}; pick from {FAMILIES}")
    n_min, convention = _FAMILY_CFG[family]
    halved = family in ("d", "2d")
    rows = []
    skipped_no_p = 0
    skipped_nonabelian = 0
    with timer() as t:
        for r, f, q in prime_powers(q_max):
            if f > f_max:
                continue
            for n in range(n_min, rank_max + 1):
                for d in range(1, n + 1):
                    a = n // d
                    if a < 2:
                        continue
                    checked = _check_point(
                        family, convention, halved, r, f, q, n, d, a, rows
                    )
                    if checked == "no_p":
                        skipped_no_p += 1
                    elif checked == "nonabelian":
                        skipped_nonabelian += 1
    return Report(
        command=f"bounds --classical --family {family}",
        parameters={
            "family": family,
            "q_max": q_max,
            "rank_max": rank_max,
            "f_max": f_max,
        },
        rows=rows,
        counters={
            "checked": len(rows),
            "violations": sum(not r["ok"] for r in rows),
            "points_without_eligible_p": skipped_no_p,
            "points_nonabelian_sylow_only": skipped_nonabelian,
        },
        elapsed_seconds=t.elapsed,
    )


def _check_point(family, convention, halved, r, f, q, n, d, a, rows) -> str:
    if convention == "pm":
        candidates = set(_prime_divisors_ge5(q**d - 1))
        candidates |= set(_prime_divisors_ge5(q**d + 1))
    elif convention == "linear":
        candidates = set(_prime_divisors_ge5(q**d - 1))
    else:
        candidates = set(_prime_divisors_ge5(q**d - (-1) ** d))
    candidates = {p for p in candidates if q % p != 0}
    if not candidates:
        return "no_p"

    found = False
    any_minimal = False
    for p in sorted(candidates):
        if convention == "pm":
            dmin, sign = _minimal_pm_d(p, q)
            if dmin != d:
                continue
            torus = q**d + sign
        elif convention == "linear":
            if multiplicative_order(q % p, p) != d:
                continue
            sign = -1
            torus = q**d - 1
        else:
            if _minimal_unitary_d(p, q, d) != d:
                continue
            sign = -((-1) ** d)
            torus = q**d - (-1) ** d
        any_minimal = True
        if p <= a:  # non-abelian Sylow branch, different argument applies
            continue
        found = True

        case = ClassicalCase(family=family, q=q, r=r, f=f, d=d, a=a, n=n,
                             p=p, sign=sign)
        wreath_factor = 2 * d if convention == "pm" else d
        full_count = wreath_irr_count(wreath_factor, a)
        count = full_count // 2 if halved else full_count
        denom = wreath_factor**a * math.factorial(a)
        gcd_factor = (
            math.gcd(2, q - 1)
            if convention == "pm"
            else math.gcd(n, q - 1)
            if convention == "linear"
            else math.gcd(n, q + 1)
        )
        lhs_num = count * denom + torus**a
        rhs_factor = 2 * f * gcd_factor * denom
        ok = lhs_num * lhs_num > rhs_factor * rhs_factor * (p - 1)
        row = dict(
            asdict(case),
            wreath_count=count,
            lhs_numerator=lhs_num,
            lhs_denominator=denom,
            rhs_squared_num=rhs_factor * rhs_factor * (p - 1),
            ok=ok,
        )
        if halved:
            full_lhs = full_count * denom + torus**a
            row["wreath_count_full"] = full_count
            row["ok_full_weyl"] = (
                full_lhs * full_lhs > rhs_factor * rhs_factor * (p - 1)
            )
            row["weyl_halving_note"] = "index-2 subgroup possible"
        rows.append(row)
    if not found:
        return "nonabelian" if any_minimal else "no_p"
    return "checked"


# ---------------------------------------------------------------------------
# the E8, d = 1 tail check

def e8_d1_check(q_min: int = 1001, q_max: int = 4096) -> Report:
    """(q-1)^8 / |W(E8)| > 2 f sqrt(p-1) for prime powers q in range and
    primes 5 <= p | q - 1.

    Compared exactly as (q-1)^16 > |W(E8)|^2 * 4 f^2 (p-1).  The f factor
    bounds log_p(q) only when r <= p; each row therefore also carries the
    strictly dominating variant with f replaced by ceil(log_p q), computed
    by integer powering.
    """
    rows = []
    w2 = E8_WEYL_ORDER * E8_WEYL_ORDER
    with timer() as t:
        for r, f, q in prime_powers(q_max):
            if q < q_min:
                continue
            for p in _prime_divisors_ge5(q - 1):
                lhs = (q - 1) ** 16
                ok = lhs > w2 * 4 * f * f * (p - 1)
                log_ceil = 1
                acc = p
                while acc < q:
                    acc *= p
                    log_ceil += 1
                ok_strict = lhs > w2 * 4 * log_ceil * log_ceil * (p - 1)
                rows.append(
                    {
                        "q": q,
                        "r": r,
                        "f": f,
                        "p": p,
                        "log_p_q_ceil": log_ceil,
                        "ok": ok,
                        "ok_strict": ok_strict,
                    }
                )
    return Report(
        command="bounds --e8-d1",
        parameters={"q_min": q_min, "q_max": q_max},
        rows=rows,
        counters={
            "checked": len(rows),
            "violations": sum(not r["ok"] for r in rows),
            "strict_violations": sum(not r["ok_strict"] for r in rows),
        },
        elapsed_seconds=t.elapsed,
    )
