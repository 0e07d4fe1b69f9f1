from groupoidreps.gelfand import build_gelfand, inv_statistic, involutions, verify_gelfand
from groupoidreps.groupoid import compose, hom, identity_morphism
from groupoidreps.perms import compose_perms, identity_perm
from groupoidreps.simples import all_simples
from groupoidreps.wreath import WreathElem


def test_involutions():
    assert len(involutions((1, 1), 2)) == 2
    assert len(involutions((1, 2), 2)) == 1
    # involutions of S_3: 4 of them (identity + three transpositions)
    assert len(involutions((1, 1, 1), 1)) == 4


def test_inv_statistic_examples():
    f = (1, 1)
    swap = hom(f, f, 2)[1]
    ident = identity_morphism(f)
    assert inv_statistic(swap, ident) == 0
    assert inv_statistic(swap, swap) == 1
    g = identity_morphism((1, 1, 1))
    for w in involutions((1, 1, 1), 1):
        assert inv_statistic(g, w) == 0


def test_total_dims():
    assert build_gelfand(2, 2).total_dim == 6  # 2 + 1 + 1 + 2
    model = build_gelfand(1, 2)
    assert model.total_dim == 2


def test_conjugation_stays_involutive():
    for ell, d in [(2, 2), (2, 3), (3, 2)]:
        model = build_gelfand(ell, d)
        for f in model.objects:
            for g in model.objects:
                for s in hom(f, g, ell):
                    for w in model.basis[f]:
                        _sign, conj = model.act_on_involution(s, w)
                        assert compose_perms(conj.perm, conj.perm) == identity_perm(d)


def test_signed_action_functorial():
    for ell, d in [(1, 3), (2, 2), (2, 3), (3, 2)]:
        model = build_gelfand(ell, d)
        for f in model.objects:
            for g in model.objects:
                for s1 in hom(f, g, ell):
                    for h in model.objects:
                        for s2 in hom(g, h, ell):
                            s21 = compose(s2, s1)
                            for w in model.basis[f]:
                                sg1, c1 = model.act_on_involution(s1, w)
                                sg2, c2 = model.act_on_involution(s2, c1)
                                sg, c = model.act_on_involution(s21, w)
                                assert (sg, c) == (sg1 * sg2, c2)


def test_character_example():
    model = build_gelfand(1, 2)
    assert model.char_wreath(WreathElem(1, (2, 1), (0, 0))).is_zero()


def test_involution_count_equals_sum_of_dims():
    for ell, d in [(1, 4), (2, 2), (2, 3), (3, 2), (4, 2)]:
        model = build_gelfand(ell, d)
        assert model.total_dim == sum(m.total_dim for m in all_simples(ell, d))


def test_verify_gelfand():
    for ell, d in [(1, 2), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)]:
        rep = verify_gelfand(ell, d)
        assert rep["ok"], (ell, d, rep)
