import pytest

from flaghom import reference as ref
from flaghom.bases import h_flagged
from flaghom.compositions import compositions_of
from flaghom.kohnert import (build_Da, diagram_weight, is_southwest,
                             kohnert_closure, kohnert_moves,
                             kohnert_polynomial, phi, phi_inverse)
from flaghom.polynomials import Poly


def test_move_examples():
    assert kohnert_moves(frozenset({(1, 2)})) == {frozenset({(1, 1)})}
    assert kohnert_moves(frozenset({(1, 1)})) == set()
    assert kohnert_moves(ref.KOHNERT_START) == ref.KOHNERT_RESULTS


def test_move_skips_occupied_positions():
    # the topmost vacancy may sit below an occupied cell
    D = frozenset({(1, 3), (1, 2)})
    assert kohnert_moves(D) == {frozenset({(1, 3), (1, 1)}), frozenset({(1, 2), (1, 1)})}


def test_closure_examples():
    assert kohnert_closure(frozenset({(1, 2)})) == {
        frozenset({(1, 2)}), frozenset({(1, 1)})}
    assert kohnert_closure(frozenset()) == {frozenset()}
    assert len(kohnert_closure(build_Da((0, 2)))) == 3


def test_polynomial_examples():
    assert kohnert_polynomial(frozenset()) == Poly.one()
    x1, x2 = Poly.variable(1), Poly.variable(2)
    assert kohnert_polynomial(frozenset({(1, 2)})) == x1 + x2
    assert kohnert_polynomial(build_Da((1, 1))) == h_flagged((1, 1))


def test_build_Da_examples():
    assert build_Da(ref.SHAPE_A) == ref.DA_CELLS
    assert build_Da((0, 0, 0)) == frozenset()
    assert build_Da((0, 2)) == frozenset({(1, 2), (2, 2)})
    assert is_southwest(build_Da((2, 0, 3)))


def test_phi_examples():
    a = (2, 1)
    D = build_Da(a)
    assert phi(D, a) == ((2, 0), (0, 1))
    assert phi(frozenset({(1, 1)}), (0, 1)) == ((0, 0), (1, 0))
    # weights map to column sums
    for T in kohnert_closure(D):
        L = phi(T, a)
        cols = tuple(sum(row[j] for row in L) for j in range(len(a)))
        assert cols == diagram_weight(T, len(a))


def test_phi_inverse_covers_all_matrices():
    a = (0, 2)
    closure = kohnert_closure(build_Da(a))
    mats = [((0, 0), (i, 2 - i)) for i in range(3)]
    for L in mats:
        assert phi_inverse(L, a) in closure
    assert {phi(T, a) for T in closure} == set(mats)


def test_phi_roundtrip_small():
    for n in (1, 2, 3):
        for d in range(4):
            for a in compositions_of(d, n):
                for T in kohnert_closure(build_Da(a, n)):
                    assert phi_inverse(phi(T, a), a) == T


def test_phi_rejects_outside_closure():
    # two cells in one column cannot appear in any closure element
    with pytest.raises(ValueError):
        phi(frozenset({(1, 1), (1, 2)}), (1, 1))
    # rows increasing within a window violate the drop structure
    with pytest.raises(ValueError):
        phi(frozenset({(1, 1), (2, 2)}), (0, 2))
    with pytest.raises(ValueError):
        phi_inverse(((0, 1), (1, 0)), (1, 1))


def test_character_identity_small():
    for n in (1, 2, 3):
        for d in range(4):
            for a in compositions_of(d, n):
                assert kohnert_polynomial(build_Da(a, n)) == h_flagged(a, n), a
