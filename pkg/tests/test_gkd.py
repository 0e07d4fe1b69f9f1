import pytest

from groupoidreps.cyclo import Cyc
from groupoidreps.gkd import (
    build_quotient_simple,
    restriction_check,
    endo_structure,
    gamma_cross_section,
    gkd_conjugacy_classes,
    rotation_eigenspace_check,
    quotient_groupoid,
    quotient_labels,
    quotient_structure_report,
    reflection_span_check,
    quotient_simples_check,
    theta_morphism,
    theta_object,
    theta_type,
)
from groupoidreps.groupoid import canonical_morphism, identity_morphism, type_of

GRID = [
    (2, 2, 1),
    (2, 2, 2),
    (2, 2, 3),
    (3, 3, 1),
    (3, 3, 2),
    (3, 3, 3),
    (4, 2, 2),
    (4, 4, 2),
    (2, 1, 2),
    (4, 2, 1),
]


def test_theta_examples():
    assert theta_object((1, 2), 1, 2) == (2, 1)
    assert theta_type((2, 0), 1) == (0, 2)
    # theta_k applied k times is the identity
    f = (1, 3, 2)
    out = f
    for _ in range(3):
        out = theta_object(out, 1, 3)
    assert out == f
    m = canonical_morphism((1, 2), (2, 1), 2)
    tm = theta_morphism(m, 1, 2)
    assert tm.perm == m.perm and tm.source == (2, 1) and tm.target == (1, 2)


def test_two_color_two_dot_quotient():
    Q = quotient_groupoid(2, 2, 2)
    assert len(Q.orbits) == 2
    types = sorted(type_of(Q.rep(i), 2) for i in range(2))
    assert types == [(1, 1), (2, 0)]
    for i in range(2):
        for j in range(2):
            assert len(Q.hom(i, j)) == (2 if i == j else 0)
    infos = [endo_structure(Q, i) for i in range(2)]
    by_type = {tuple(info["type"]): info for info in infos}
    assert by_type[(2, 0)]["stabilizer_order"] == 1  # endos form S_2
    assert by_type[(1, 1)]["stabilizer_order"] == 2  # endos form H_2
    assert all(info["cardinality_ok"] for info in infos)


def test_one_object_case():
    Q = quotient_groupoid(2, 2, 1)
    assert len(Q.orbits) == 1
    assert len(Q.hom(0, 0)) == 1


def test_total_quotient_dimension():
    Q = quotient_groupoid(2, 2, 2)
    assert len(Q.all_qmorphisms()) == 4


def test_psi_unit_and_example():
    Q = quotient_groupoid(2, 2, 1)
    ps = Q.psi(Q.identity(0))
    assert ps.terms == {
        identity_morphism((1,)): Cyc.one(2),
        identity_morphism((2,)): Cyc.one(2),
    }


def test_structure_reports():
    for ell, k, d in GRID:
        rep = quotient_structure_report(ell, k, d)
        assert rep["ok"], (ell, k, d, rep)


def test_reflection_span():
    for ell, k, d in GRID + [(3, 1, 2)]:
        rep = reflection_span_check(ell, k, d)
        assert rep["ok"], (ell, k, d, rep)


def test_phi_to_quotient_rejects_nonmembers():
    from groupoidreps.wreath import generators

    Q = quotient_groupoid(2, 2, 2)
    s0 = generators(2, 2)[0]
    with pytest.raises(ValueError):
        Q.phi_to_quotient(s0)


def test_labels_222():
    labels = quotient_labels(2, 2, 2)
    assert len(labels) == 4
    mods = [build_quotient_simple(2, 2, 2, p, m) for (_l, p, m) in labels]
    assert [m.total_dim for m in mods] == [1, 1, 1, 1]
    # the two labels over ((1),(1)) are distinguished by the sign of the
    # color-swapping endomorphism
    pair = [m for m in mods if m.p == ((1,), (1,))]
    assert len(pair) == 2
    Q = pair[0].Q
    oi = pair[0].component[0]
    rot = [q for q in Q.hom(oi, oi) if q != Q.identity(oi)][0]
    vals = sorted(str(m.action_block(rot).rows[0][0].coeffs) for m in pair)
    assert vals == [str((Cyc.rational(2, -1)).coeffs), str((Cyc.one(2)).coeffs)]


def test_quotient_simples():
    for ell, k, d in GRID:
        rep = quotient_simples_check(ell, k, d)
        assert rep["ok"], (ell, k, d, rep)


def test_label_count_matches_class_count():
    for ell, k, d in GRID:
        labels = quotient_labels(ell, k, d)
        assert len(labels) == len(gkd_conjugacy_classes(ell, k, d))


def test_restriction():
    for ell, k, d in GRID:
        rep = restriction_check(ell, k, d)
        assert rep["ok"], (ell, k, d, rep)


def test_rotation_eigenspaces():
    for ell, k, d in GRID:
        rep = rotation_eigenspace_check(ell, k, d)
        assert rep["ok"], (ell, k, d, rep)


def test_gamma_cross_section():
    gamma = gamma_cross_section(2, 2, 2)
    assert gamma == [(0, 2), (1, 1)]
    # one representative per orbit, covering all types
    from groupoidreps.tableaux import compositions

    shift = 1
    covered = set()
    for lam in gamma:
        covered |= {theta_type(lam, t) for t in range(2)}
    assert covered == set(compositions(2, 2))


def test_off_grid_clifford_labels():
    # lambda = (2,2) at (2,2,4): the label set uses orbit representatives and
    # stabilizer characters, matching the 13 conjugacy classes of W(D_4)
    labels = quotient_labels(2, 2, 4)
    assert len(labels) == 13
    assert len(gkd_conjugacy_classes(2, 2, 4)) == 13
