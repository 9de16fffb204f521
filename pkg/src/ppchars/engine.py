"""Small-finite-group engine: closures, conjugacy classes, character degrees.

Groups are stored as indexed element lists with a composition callback, so
permutation groups, affine maps and matrix groups all share one code path.
Character degrees are computed by the classical modular method (Dixon):

1. compute the class multiplication coefficients a_ijk;
2. pick a prime L = 1 (mod exponent of G) with L > |G|, so that F_L
   contains all needed roots of unity and every degree-squared value is
   read off exactly;
3. simultaneously diagonalize the class matrices M_i = (a_ijk)_jk over
   F_L by refining common eigenspaces with random linear combinations
   (eigenvalues via characteristic polynomials and gcd-with-Frobenius
   root extraction);
4. each one-dimensional common eigenspace, normalized at the identity
   class, gives the central character values w_j, and
   chi(1)^2 = |G| / sum_j w_j * w_{j*} / |C_j| evaluated in F_L equals the
   true integer since chi(1)^2 <= |G| < L.

Degrees are returned as a sorted multiset; with a fixed seed the run is
deterministic, and across seeds the multiset is identical by construction.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import ConsistencyError, EngineSplitError, SizeLimitError
from .landau import is_prime
from .modlinalg import charpoly, distinct_roots, nullspace, solve_in_span

DEFAULT_ORDER_LIMIT = 5000
DEFAULT_CLOSURE_LIMIT = 100_000
DEFAULT_CLASS_LIMIT = 80
FULL_ASSOCIATIVITY_LIMIT = 128
FULL_LATIN_LIMIT = 512


@dataclass
class FiniteGroup:
    """A finite group on canonical hashable elements, indexed 0..order-1.

    Closure-built groups put the identity at index 0; table-loaded groups
    keep their own labeling, so always go through the `identity` field.
    `mul` composes by index; the full multiplication table is materialized
    lazily and only for groups where that is affordable.
    """

    elements: list
    index: dict
    identity: int
    inverse: list[int]
    generators: list[int]
    name: str = ""
    _mul_elem: Callable = None
    _table: list | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self.index[self._mul_elem(self.elements[i], self.elements[j])]

    def conjugate(self, g: int, x: int) -> int:
        """g^-1 x g by index."""
        return self.mul(self.inverse[g], self.mul(x, g))

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.mul(x, i)
            k += 1
        return k

    def exponent(self) -> int:
        out = 1
        for i in range(self.order):
            out = math.lcm(out, self.element_order(i))
        return out

    def multiplication_table(self) -> list[list[int]]:
        if self._table is None:
            self._table = [
                [self.mul(i, j) for j in range(self.order)]
                for i in range(self.order)
            ]
        return self._table

    def validate(self, rng: random.Random | None = None) -> None:
        """Identity/inverse laws always; Latin-square and associativity
        exhaustively for small orders, on seeded samples above that."""
        rng = rng or random.Random(0)
        n = self.order
        e = self.identity
        for i in range(n):
            if self.mul(e, i) != i or self.mul(i, e) != i:
                raise ConsistencyError("identity law fails")
            if self.mul(i, self.inverse[i]) != e or self.mul(self.inverse[i], i) != e:
                raise ConsistencyError("inverse law fails")
        if n <= FULL_LATIN_LIMIT:
            row_sample = col_sample = range(n)
        else:
            row_sample = col_sample = sorted(rng.sample(range(n), 32))
        for i in row_sample:
            if len({self.mul(i, j) for j in range(n)}) != n:
                raise ConsistencyError(f"row {i} is not a permutation")
        for j in col_sample:
            if len({self.mul(i, j) for i in range(n)}) != n:
                raise ConsistencyError(f"column {j} is not a permutation")
        if n <= FULL_ASSOCIATIVITY_LIMIT:
            triples = itertools.product(range(n), repeat=3)
        else:
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(2000)
            )
        for a, b, c in triples:
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ConsistencyError(f"associativity fails at {(a, b, c)}")


@dataclass(frozen=True)
class ConjugacyClasses:
    class_of: tuple[int, ...]
    reps: tuple[int, ...]
    sizes: tuple[int, ...]
    inverse_class: tuple[int, ...]


@dataclass(frozen=True)
class DegreeMultiset:
    """Weakly increasing irreducible character degrees of one group."""

    degrees: tuple[int, ...]

    def sum_of_squares(self) -> int:
        return sum(d * d for d in self.degrees)

    def linear_count(self) -> int:
        return sum(1 for d in self.degrees if d == 1)

    def pprime_count(self, p: int) -> int:
        return sum(1 for d in self.degrees if d % p != 0)


def pprime_degree_count(group_or_degrees, p: int) -> int:
    """Number of irreducible degrees coprime to p; accepts a group (degrees
    are computed) or an already-computed multiset."""
    if isinstance(group_or_degrees, DegreeMultiset):
        return group_or_degrees.pprime_count(p)
    return irreducible_degrees(group_or_degrees).pprime_count(p)


# ---------------------------------------------------------------------------
# construction

def group_from_elements(
    generators: Sequence,
    mul: Callable,
    identity,
    inv: Callable | None = None,
    max_order: int = DEFAULT_CLOSURE_LIMIT,
    name: str = "",
) -> FiniteGroup:
    """Close a generating set under an associative composition callback."""
    elements = [identity]
    index = {identity: 0}
    gen_elems = []
    for g in generators:
        if g not in index and g not in gen_elems:
            gen_elems.append(g)
    queue = [identity]
    for x in queue:
        for g in gen_elems:
            y = mul(x, g)
            if y not in index:
                if len(elements) >= max_order:
                    raise SizeLimitError(
                        f"closure exceeded {max_order} elements"
                    )
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    group = FiniteGroup(
        elements=elements,
        index=index,
        identity=0,
        inverse=[],
        generators=sorted(index[g] for g in gen_elems) or [0],
        name=name,
        _mul_elem=mul,
    )
    group.inverse = _inverse_table(group, inv)
    return group


def _inverse_table(group: FiniteGroup, inv: Callable | None) -> list[int]:
    n = group.order
    if inv is not None:
        return [group.index[inv(e)] for e in group.elements]
    out = [-1] * n
    out[0] = 0
    for i in range(n):
        if out[i] != -1:
            continue
        # walk the cyclic subgroup <i>; powers pair up with inverses
        path = [i]
        x = group.mul(i, i)
        while x != group.identity:
            path.append(x)
            x = group.mul(x, i)
        k = len(path) + 1  # order of element i
        for a, elem in enumerate(path, start=1):
            out[elem] = path[k - a - 1] if k - a > 0 else group.identity
    return out


def _compose_perms(a: tuple, b: tuple) -> tuple:
    """(a o b)(x) = a(b(x))."""
    return tuple(a[i] for i in b)


def _invert_perm(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai] = i
    return tuple(out)


def group_from_permutations(
    perms: Sequence[Sequence[int]],
    max_order: int = DEFAULT_CLOSURE_LIMIT,
    name: str = "",
) -> FiniteGroup:
    """Group generated by permutations given in image notation (0-based)."""
    if not perms:
        raise ValueError("need at least one generator")
    degree = len(perms[0])
    gens = []
    for p in perms:
        t = tuple(p)
        if len(t) != degree or sorted(t) != list(range(degree)):
            raise ValueError(f"not a permutation of 0..{degree - 1}: {p}")
        gens.append(t)
    return group_from_elements(
        gens,
        _compose_perms,
        tuple(range(degree)),
        inv=_invert_perm,
        max_order=max_order,
        name=name,
    )


def group_from_table(table: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Group from an explicit multiplication table (element indices)."""
    n = len(table)
    rows = [list(map(int, row)) for row in table]
    if any(len(row) != n for row in rows):
        raise ValueError("multiplication table must be square")
    identity = next(
        (e for e in range(n)
         if all(rows[e][i] == i and rows[i][e] == i for i in range(n))),
        None,
    )
    if identity is None:
        raise ValueError("table has no identity element")
    inverse = []
    for i in range(n):
        j = next((j for j in range(n) if rows[i][j] == identity), None)
        if j is None or rows[j][i] != identity:
            raise ValueError(f"element {i} has no two-sided inverse")
        inverse.append(j)
    group = FiniteGroup(
        elements=list(range(n)),
        index={i: i for i in range(n)},
        identity=identity,
        inverse=inverse,
        generators=list(range(n)),
        name=name,
        _mul_elem=None,
        _table=rows,
    )
    group.validate()
    return group


# ---------------------------------------------------------------------------
# builtin families

def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return group_from_permutations([(0,)], name="C1")
    shift = tuple((i + 1) % n for i in range(n))
    return group_from_permutations([shift], name=f"C{n}")


def dihedral_group(order: int) -> FiniteGroup:
    if order % 2 or order < 2:
        raise ValueError("dihedral order must be even and >= 2")
    n = order // 2
    if n == 1:
        return group_from_permutations([(1, 0)], name="D2")
    rot = tuple((i + 1) % n for i in range(n))
    flip = tuple((-i) % n for i in range(n))
    return group_from_permutations([rot, flip], name=f"D{order}")


def symmetric_group(n: int) -> FiniteGroup:
    if n < 2:
        return cyclic_group(1)
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return group_from_permutations([cycle, swap], name=f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    if n < 3:
        return cyclic_group(1)
    three = tuple([1, 2, 0] + list(range(3, n)))
    if n % 2:
        big = tuple(list(range(1, n)) + [0])
    else:
        big = tuple([0] + list(range(2, n)) + [1])
    return group_from_permutations([three, big], name=f"A{n}")


# ---------------------------------------------------------------------------
# conjugacy classes and subgroup machinery

def conjugacy_classes(
    group: FiniteGroup, order_limit: int = DEFAULT_ORDER_LIMIT
) -> ConjugacyClasses:
    if group.order > order_limit:
        raise SizeLimitError(
            f"group order {group.order} exceeds engine bound {order_limit}"
        )
    n = group.order
    class_of = [-1] * n
    reps, sizes = [], []
    gens = group.generators
    for i in range(n):
        if class_of[i] != -1:
            continue
        c = len(reps)
        reps.append(i)
        orbit = [i]
        class_of[i] = c
        for x in orbit:
            for g in gens:
                y = group.conjugate(g, x)
                if class_of[y] == -1:
                    class_of[y] = c
                    orbit.append(y)
        sizes.append(len(orbit))
    if sum(sizes) != n:
        raise ConsistencyError("class sizes do not sum to the group order")
    inverse_class = tuple(class_of[group.inverse[r]] for r in reps)
    return ConjugacyClasses(tuple(class_of), tuple(reps), tuple(sizes), inverse_class)


def subgroup_closure(group: FiniteGroup, gen_indices: Sequence[int]) -> set[int]:
    """Indices of the subgroup generated by the given element indices."""
    members = {group.identity}
    gens = [g for g in dict.fromkeys(gen_indices) if g != group.identity]
    queue = [group.identity]
    for x in queue:
        for g in gens:
            y = group.mul(x, g)
            if y not in members:
                members.add(y)
                queue.append(y)
    return members


def derived_subgroup_index(group: FiniteGroup) -> int:
    """Index of the commutator subgroup, computed as the normal closure of
    the commutators of the generators."""
    gens = group.generators
    comms = set()
    for a in gens:
        for b in gens:
            c = group.mul(
                group.mul(group.inverse[a], group.inverse[b]), group.mul(a, b)
            )
            if c != group.identity:
                comms.add(c)
    if not comms:
        return group.order
    closure_gens = list(comms)
    while True:
        subgroup = subgroup_closure(group, closure_gens)
        new = [
            y
            for h in closure_gens
            for g in gens
            if (y := group.conjugate(g, h)) not in subgroup
        ]
        if not new:
            break
        closure_gens.extend(dict.fromkeys(new))
    if group.order % len(subgroup):
        raise ConsistencyError("derived subgroup order does not divide |G|")
    return group.order // len(subgroup)


# ---------------------------------------------------------------------------
# character degrees

def _splitting_prime(order: int, exponent: int) -> int:
    k = order // exponent + 1
    while True:
        candidate = k * exponent + 1
        if candidate > order and is_prime(candidate):
            return candidate
        k += 1


def _class_matrices(group: FiniteGroup, cc: ConjugacyClasses) -> list[list[list[int]]]:
    """Structure constants a_ijk with K_i K_j = sum_k a_ijk K_k, laid out
    as c matrices M_i = (a_ijk)_jk.  One pass of |G| * c products."""
    c = len(cc.reps)
    mats = [[[0] * c for _ in range(c)] for _ in range(c)]
    inverse = group.inverse
    class_of = cc.class_of
    for k, zk in enumerate(cc.reps):
        for x in range(group.order):
            i = class_of[x]
            j = class_of[group.mul(inverse[x], zk)]
            mats[i][j][k] += 1
    return mats


def _refine_space(basis, combo, L, rng):
    """Split an invariant subspace into eigenspaces of `combo`.

    basis: list of independent vectors, or None meaning the full space.
    Returns a list of bases whose dimensions sum to the input dimension.
    """
    if basis is None:
        rmat = combo
        dim = len(combo)
    else:
        dim = len(basis)
        images = [
            [sum(row[t] * vec[t] for t in range(len(vec))) % L for row in combo]
            for vec in basis
        ]
        rmat_cols = solve_in_span(basis, images, L)
        rmat = [[rmat_cols[j][i] for j in range(dim)] for i in range(dim)]
    poly = charpoly(rmat, L)
    pieces = []
    total = 0
    for z in distinct_roots(poly, L, rng):
        shifted = [
            [(rmat[i][j] - (z if i == j else 0)) % L for j in range(dim)]
            for i in range(dim)
        ]
        kernel = nullspace(shifted, L)
        if basis is None:
            vecs = kernel
        else:
            vecs = [
                [
                    sum(y[t] * basis[t][idx] for t in range(dim)) % L
                    for idx in range(len(basis[0]))
                ]
                for y in kernel
            ]
        total += len(vecs)
        pieces.append(vecs)
    if total != dim:
        raise ConsistencyError("eigenspace dimensions do not sum up")
    return pieces


def irreducible_degrees(
    group: FiniteGroup,
    seed: int = 0,
    order_limit: int = DEFAULT_ORDER_LIMIT,
    class_limit: int = DEFAULT_CLASS_LIMIT,
    max_rounds: int = 64,
) -> DegreeMultiset:
    """Exact irreducible character degree multiset of a finite group."""
    if group.order > order_limit:
        raise SizeLimitError(
            f"group order {group.order} exceeds engine bound {order_limit}"
        )
    if group.order == 1:
        return DegreeMultiset((1,))
    cc = conjugacy_classes(group, order_limit=order_limit)
    c = len(cc.reps)
    if c > class_limit:
        raise SizeLimitError(f"{c} classes exceeds engine bound {class_limit}")
    exponent = 1
    for rep in cc.reps:
        exponent = math.lcm(exponent, group.element_order(rep))
    L = _splitting_prime(group.order, exponent)
    mats = _class_matrices(group, cc)

    rng = random.Random(seed)
    spaces: list = [None]

    def fully_split() -> bool:
        return all(s is not None and len(s) == 1 for s in spaces)

    for _ in range(max_rounds):
        if fully_split():
            break
        weights = [rng.randrange(L) for _ in range(c)]
        combo = [[0] * c for _ in range(c)]
        for i in range(c):
            wi = weights[i]
            if wi == 0:
                continue
            mat_i = mats[i]
            for j in range(c):
                row = combo[j]
                src = mat_i[j]
                for k in range(c):
                    if src[k]:
                        row[k] = (row[k] + wi * src[k]) % L
        next_spaces = []
        for s in spaces:
            if s is not None and len(s) == 1:
                next_spaces.append(s)
            else:
                next_spaces.extend(_refine_space(s, combo, L, rng))
        spaces = next_spaces
    if not fully_split():
        raise EngineSplitError(
            f"common eigenspaces not separated after {max_rounds} rounds"
        )

    size_inv = [pow(sz, -1, L) for sz in cc.sizes]
    identity_class = cc.class_of[group.identity]
    degrees = []
    for (w,) in spaces:
        w0 = w[identity_class] % L
        if w0 == 0:
            raise ConsistencyError("eigenvector vanishes at the identity class")
        scale = pow(w0, -1, L)
        omega = [wi * scale % L for wi in w]
        s = sum(
            omega[j] * omega[cc.inverse_class[j]] * size_inv[j] for j in range(c)
        ) % L
        if s == 0:
            raise ConsistencyError("orthogonality sum vanished mod L")
        d_squared = group.order * pow(s, -1, L) % L
        if not 1 <= d_squared <= group.order:
            raise ConsistencyError(f"degree^2 = {d_squared} out of range")
        d = math.isqrt(d_squared)
        if d * d != d_squared:
            raise ConsistencyError(f"degree^2 = {d_squared} is not a square")
        degrees.append(d)
    degrees.sort()
    result = DegreeMultiset(tuple(degrees))
    if len(degrees) != c or result.sum_of_squares() != group.order:
        raise ConsistencyError("degree multiset fails the sum-of-squares check")
    return result
