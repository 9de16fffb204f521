import pytest

from ppchars import engine, symmetric
from ppchars.errors import SizeLimitError


def test_cyclic():
    g = engine.cyclic_group(5)
    g.validate()
    assert g.order == 5
    cc = engine.conjugacy_classes(g)
    assert len(cc.reps) == 5 and set(cc.sizes) == {1}
    assert engine.irreducible_degrees(g).degrees == (1, 1, 1, 1, 1)
    assert engine.derived_subgroup_index(g) == 5


def test_dihedral_10():
    g = engine.dihedral_group(10)
    g.validate()
    cc = engine.conjugacy_classes(g)
    assert sorted(cc.sizes) == [1, 2, 2, 5]
    degrees = engine.irreducible_degrees(g)
    assert degrees.degrees == (1, 1, 2, 2)
    assert degrees.pprime_count(5) == 4
    assert engine.derived_subgroup_index(g) == 2


def test_group_from_affine_generators():
    # x -> x + 1 and x -> 2x on Z/5 generate the full affine group, order 20
    add = tuple((i + 1) % 5 for i in range(5))
    dbl = tuple(2 * i % 5 for i in range(5))
    g = engine.group_from_permutations([add, dbl])
    assert g.order == 20
    assert engine.derived_subgroup_index(g) == 4


def test_symmetric_groups_match_hook_lengths():
    for n in (4, 5):
        g = engine.symmetric_group(n)
        got = engine.irreducible_degrees(g).degrees
        expected = tuple(sorted(d for _, d in symmetric.symmetric_degrees(n)))
        assert got == expected
    assert engine.irreducible_degrees(engine.symmetric_group(4)).degrees == (1, 1, 2, 3, 3)
    assert engine.irreducible_degrees(engine.symmetric_group(5)).degrees == (1, 1, 4, 4, 5, 5, 6)


def test_a5():
    g = engine.alternating_group(5)
    assert g.order == 60
    cc = engine.conjugacy_classes(g)
    assert sorted(cc.sizes) == [1, 12, 12, 15, 20]
    degrees = engine.irreducible_degrees(g)
    assert degrees.degrees == (1, 3, 3, 4, 5)
    assert engine.pprime_degree_count(degrees, 5) == 4
    assert engine.derived_subgroup_index(g) == 1


def test_a6_known_degree_list():
    degrees = engine.irreducible_degrees(engine.alternating_group(6))
    assert degrees.degrees == (1, 5, 5, 8, 8, 9, 10)
    assert degrees.pprime_count(5) == 4


def test_multiset_invariants_across_corpus():
    for g in (
        engine.cyclic_group(12),
        engine.dihedral_group(16),
        engine.symmetric_group(4),
        engine.alternating_group(5),
    ):
        degrees = engine.irreducible_degrees(g)
        cc = engine.conjugacy_classes(g)
        assert degrees.sum_of_squares() == g.order
        assert len(degrees.degrees) == len(cc.reps)
        assert degrees.linear_count() == engine.derived_subgroup_index(g)
        assert sum(cc.sizes) == g.order
        assert all(g.order % s == 0 for s in cc.sizes)


def test_inverse_class_is_involution():
    cc = engine.conjugacy_classes(engine.symmetric_group(5))
    inv = cc.inverse_class
    assert inv[0] == 0
    assert all(inv[inv[c]] == c for c in range(len(inv)))


def test_determinism_across_seeds():
    g = engine.alternating_group(6)
    base = engine.irreducible_degrees(g, seed=0).degrees
    for seed in (1, 7, 123456):
        assert engine.irreducible_degrees(g, seed=seed).degrees == base


def test_class_limit_guard():
    with pytest.raises(SizeLimitError):
        engine.irreducible_degrees(engine.cyclic_group(81))


def test_order_limit_guard():
    g = engine.symmetric_group(7)  # order 5040
    with pytest.raises(SizeLimitError):
        engine.irreducible_degrees(g)
    # but an explicit higher limit lets it through
    degrees = engine.irreducible_degrees(g, order_limit=5100)
    assert degrees.sum_of_squares() == 5040


def test_closure_limit_guard():
    cycle = tuple(list(range(1, 9)) + [0])
    swap = (1, 0, 2, 3, 4, 5, 6, 7, 8)
    with pytest.raises(SizeLimitError):
        engine.group_from_permutations([cycle, swap], max_order=1000)


def test_group_from_table_roundtrip():
    g = engine.dihedral_group(8)
    table = g.multiplication_table()
    h = engine.group_from_table(table)
    assert h.order == 8
    assert engine.irreducible_degrees(h).degrees == (1, 1, 1, 1, 2)


def test_group_from_table_rejects_garbage():
    with pytest.raises(ValueError):
        engine.group_from_table([[0, 1], [0, 1]])


def test_group_from_table_identity_not_at_zero():
    # relabel D10 so the identity sits at index 3; degrees must not change
    g = engine.dihedral_group(10)
    table = g.multiplication_table()
    n = g.order
    sigma = [(i + 3) % n for i in range(n)]  # new -> old
    sigma_inv = [0] * n
    for new, old in enumerate(sigma):
        sigma_inv[old] = new
    relabeled = [
        [sigma_inv[table[sigma[a]][sigma[b]]] for b in range(n)]
        for a in range(n)
    ]
    h = engine.group_from_table(relabeled)
    assert h.identity == sigma_inv[0] != 0
    assert engine.irreducible_degrees(h).degrees == (1, 1, 2, 2)
    assert engine.derived_subgroup_index(h) == 2


def test_trivial_group():
    g = engine.cyclic_group(1)
    assert engine.irreducible_degrees(g).degrees == (1,)
