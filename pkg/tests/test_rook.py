from groupoidreps.rook import (
    RookAlgebraElem,
    eps1,
    rook_compose,
    rook_elements,
    rook_epimorphism_check,
    rook_identity,
    rook_images,
    rook_monoid_order,
)


def test_orders():
    assert rook_monoid_order(2) == 7
    assert rook_monoid_order(3) == 34
    assert rook_monoid_order(4) == 209
    for d in range(5):
        assert len(rook_elements(d)) == rook_monoid_order(d)


def test_composition():
    e1 = eps1(3)
    assert e1 == (0, 2, 3)
    assert rook_compose(e1, e1) == e1  # idempotent
    swap = (2, 1, 3)
    assert rook_compose(swap, e1) == (0, 1, 3)
    assert rook_compose(e1, swap) == (2, 0, 3)
    assert rook_compose(rook_identity(3), e1) == e1


def test_s0_image_squares_to_identity():
    for d in (1, 2, 3):
        t0 = rook_images(d)[0]
        e = RookAlgebraElem.basis(d, rook_identity(d))
        assert t0 * t0 == e


def test_key_proof_identity():
    # eps1 s1 eps1 s1 = s1 eps1 s1 eps1 = identity transformation on {3..d}
    d = 3
    ep = RookAlgebraElem.basis(d, eps1(d))
    s1 = rook_images(d)[1]
    lhs = ep * s1 * ep * s1
    rhs = s1 * ep * s1 * ep
    tail = RookAlgebraElem.basis(d, (0, 0, 3))
    assert lhs == rhs == tail


def test_epimorphism_check():
    for d in (1, 2, 3, 4):
        rep = rook_epimorphism_check(d)
        assert rep["ok"], (d, rep)
        assert rep["dim"] == rook_monoid_order(d)
