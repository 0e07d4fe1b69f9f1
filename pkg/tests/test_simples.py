import random
from math import factorial

from groupoidreps.algebra import phi
from groupoidreps.cyclo import Cyc, Mat
from groupoidreps.groupoid import compose, hom, identity_morphism
from groupoidreps.simples import (
    all_simples,
    branching_report,
    build_simple,
    conjugacy_classes,
    removable_node_restrictions,
    restriction_multiplicities,
    simple_class_function,
    total_dim_check,
    verify_complete,
    young_induction_check,
)
from groupoidreps.wreath import enum_group, generators, wreath_identity, wreath_inv, wreath_mul


def test_dimensions_by_example():
    assert sorted(m.total_dim for m in all_simples(2, 2)) == [1, 1, 1, 1, 2]
    assert sorted(m.total_dim for m in all_simples(1, 3)) == [1, 1, 2]
    assert sorted(m.total_dim for m in all_simples(3, 1)) == [1, 1, 1]


def test_trivial_component_module():
    mod = build_simple(2, 3, ((3,), ()))
    assert mod.total_dim == 1
    f = mod.objects[0]
    for m in hom(f, f, 2):
        assert mod.action_block(m) == Mat.identity(2, 1)


def test_mixed_color_module():
    mod = build_simple(2, 2, ((1,), (1,)))
    assert mod.block_dim == 1 and mod.total_dim == 2
    assert len(mod.objects) == 2


def test_identity_blocks():
    for mod in all_simples(2, 2):
        for f in mod.objects:
            assert mod.action_block(identity_morphism(f)) == Mat.identity(2, mod.block_dim)


def test_functoriality_exhaustive():
    for ell, d in [(2, 2), (2, 3), (3, 2)]:
        for mod in all_simples(ell, d):
            objs = mod.objects
            for f in objs:
                for g in objs:
                    for m1 in hom(f, g, ell):
                        a1 = mod.action_block(m1)
                        for h in objs:
                            for m2 in hom(g, h, ell):
                                lhs = mod.action_block(compose(m2, m1))
                                assert lhs == mod.action_block(m2) * a1


def test_eq5_total_dims():
    for ell, d in [(1, 4), (2, 2), (2, 3), (3, 2), (4, 2)]:
        for mod in all_simples(ell, d):
            assert total_dim_check(mod)


def test_total_dim_example_d4():
    mod = build_simple(2, 4, ((2, 1), (1,)))
    assert mod.block_dim == 2 and mod.total_dim == 8  # (4!/(3! 1!)) * 2


def test_young_induction_index():
    for mod in all_simples(2, 3):
        for f in mod.objects:
            assert young_induction_check(mod, f)
    mod = build_simple(2, 2, ((1,), (1,)))
    assert young_induction_check(mod, (1, 2))


def test_characters_examples():
    s0, s1 = generators(2, 2)
    m11 = build_simple(2, 2, ((1,), (1,)))
    assert m11.char_wreath(s0).is_zero()
    msign = build_simple(2, 2, ((1, 1), ()))
    assert msign.char_wreath(s1) == Cyc.rational(2, -1)
    for mod in all_simples(2, 2):
        assert mod.char_wreath(wreath_identity(2, 2)) == Cyc.rational(2, mod.total_dim)


def test_characters_constant_on_classes():
    rnd = random.Random(2)
    group = enum_group(2, 3)
    for mod in all_simples(2, 3):
        for _ in range(20):
            x = rnd.choice(group)
            g = rnd.choice(group)
            conj = wreath_mul(wreath_mul(g, x), wreath_inv(g))
            assert mod.char_wreath(x) == mod.char_wreath(conj)


def test_trivial_character():
    # the trivial module lives on the all-color-l component (xi^(l c) = 1)
    cf = simple_class_function(build_simple(2, 2, ((), (2,))))
    assert all(v.is_one() for v in cf.values.values())
    # on the all-color-1 component the diagonal part acts by its determinant
    from groupoidreps.wreath import generators

    mod = build_simple(2, 2, ((2,), ()))
    assert mod.char_wreath(generators(2, 2)[0]) == Cyc.rational(2, -1)


def test_conjugacy_class_sizes():
    for ell, d in [(1, 3), (2, 2), (2, 3), (3, 2)]:
        classes = conjugacy_classes(ell, d)
        assert sum(size for _rep, size in classes) == ell**d * factorial(d)


def test_phi_action_representation():
    rnd = random.Random(3)
    group = enum_group(2, 2)
    for mod in all_simples(2, 2):
        for _ in range(10):
            x, y = rnd.choice(group), rnd.choice(group)
            lhs = mod.act_alg(phi(x)) * mod.act_alg(phi(y))
            assert lhs == mod.act_alg(phi(wreath_mul(x, y)))


def test_verify_complete_grid():
    for ell, d in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (4, 2)]:
        rep = verify_complete(ell, d)
        assert rep["ok"], (ell, d, rep)


def test_removable_nodes():
    assert removable_node_restrictions(((2,), (1,))) == [((1,), (1,)), ((2,), ())]
    assert removable_node_restrictions(((3,), ())) == [((2,), ())]


def test_branching_examples():
    mults = restriction_multiplicities(build_simple(2, 2, ((1,), (1,))))
    assert mults == {((1,), ()): 1, ((), (1,)): 1}
    mults = restriction_multiplicities(build_simple(2, 3, ((3,), ())))
    assert mults == {((2,), ()): 1}


def test_branching_grid():
    for ell, d in [(2, 2), (2, 3), (3, 2)]:
        rep = branching_report(ell, d)
        assert rep["ok"], (ell, d, rep)
