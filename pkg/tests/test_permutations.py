from itertools import permutations as all_perms

import pytest

from flaghom.permutations import (apply_transposition, grassmannian_perm,
                                  k_bruhat_covers, length, pad_perm,
                                  strip_fixed)


def test_strip_fixed_points():
    assert strip_fixed((1, 2, 3)) == ()
    assert strip_fixed((2, 1, 3, 4)) == (2, 1)
    assert pad_perm((2, 1), 4) == (2, 1, 3, 4)


def test_length_is_inversion_count():
    for w in all_perms(range(1, 5)):
        brute = sum(1 for i in range(4) for j in range(i + 1, 4) if w[i] > w[j])
        assert length(w) == brute


def _covers_brute(u, k, window):
    u = pad_perm(u, window)
    out = set()
    for j in range(k + 1, window + 1):
        for i in range(1, k + 1):
            w = apply_transposition(u, i, j)
            if length(w) == length(u) + 1:
                out.add(w)
    return out


def test_cover_examples():
    assert k_bruhat_covers((), 1) == {(2, 1)}
    assert k_bruhat_covers((1,), 1, universe=1) == set()
    assert k_bruhat_covers((2, 1), 2) == {(2, 3, 1), (3, 1, 2)}


def test_covers_match_brute_force():
    for base in all_perms(range(1, 4)):
        for k in (1, 2, 3):
            got = k_bruhat_covers(base, k)
            # a window two positions past the support cannot add covers
            assert got == _covers_brute(base, k, len(base) + 2)
            for w in got:
                assert length(w) == length(strip_fixed(base)) + 1


@pytest.mark.parametrize("lam, k, want", [
    ((2,), 2, (1, 4, 2, 3)),
    ((), 1, ()),
    ((1,), 1, (2, 1)),
])
def test_grassmannian_examples(lam, k, want):
    assert grassmannian_perm(lam, k) == want


def test_grassmannian_shape_and_descent():
    for lam in [(1,), (2,), (2, 1), (3, 1), (2, 2)]:
        for k in (2, 3):
            v = grassmannian_perm(lam, k)
            w = pad_perm(v, max(len(v), k) + 1)
            descents = [i for i in range(1, len(w)) if w[i - 1] > w[i]]
            assert descents in ([], [k])
            padded = lam + (0,) * (k - len(lam))
            for i in range(1, k + 1):
                assert padded[k - i] == w[i - 1] - i


def test_grassmannian_rejects_long_partitions():
    with pytest.raises(ValueError):
        grassmannian_perm((2, 1, 1), 2)
