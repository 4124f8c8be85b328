"""Weak compositions, partitions, and the partial orders on them.

A weak composition is a tuple of nonnegative integers; trailing zeros are
insignificant for equality, so values used as dictionary keys should be
passed through :func:`strip` first.  Operations that depend on the ambient
length (reversal, diagram building) take the declared length from the tuple
itself or from an explicit ``n``.
"""

from itertools import combinations


def strip(a):
    """Drop trailing zeros: the canonical representative of a composition."""
    a = tuple(a)
    end = len(a)
    while end and a[end - 1] == 0:
        end -= 1
    return a[:end]


def pad(a, n):
    """Extend with zeros to length n (a may not be longer than n)."""
    a = tuple(a)
    if len(a) > n:
        raise ValueError(f"composition {a} longer than ambient {n}")
    return a + (0,) * (n - len(a))


def comp_eq(a, b):
    return strip(a) == strip(b)


def size(a):
    return sum(a)


def is_partition(a):
    a = tuple(a)
    return all(a[i] >= a[i + 1] for i in range(len(a) - 1))


def sort_and_reverse(a):
    """Return (sort(a), rev(a)): parts in weakly decreasing order, and the
    reversal over the declared length of a."""
    a = tuple(a)
    return tuple(sorted(a, reverse=True)), tuple(reversed(a))


def sort_comp(a):
    return tuple(sorted(a, reverse=True))


def rev(a, n=None):
    """Reversal over the window of length n (default: the declared length)."""
    if n is not None:
        a = pad(a, n)
    return tuple(reversed(tuple(a)))


def dominance_leq(a, b):
    """True iff every prefix sum of a is <= the matching prefix sum of b."""
    a, b = tuple(a), tuple(b)
    n = max(len(a), len(b))
    sa = sb = 0
    for i in range(n):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


def dominance_key(a, n):
    """Sort key realizing a fixed linear extension of dominance order.

    Pointwise-smaller prefix sums give a lexicographically smaller key, so
    sorting by this key lists dominated compositions first; ties are broken
    lexicographically by the composition itself.
    """
    a = pad(strip(a), n)
    prefix = []
    s = 0
    for x in a:
        s += x
        prefix.append(s)
    return (s, tuple(prefix), a)


def key_poset_leq(a, b):
    """Key-poset comparison: a_i <= b_i for all i, and every strict descent
    a_i > a_j (i < j) forces the strict descent b_i > b_j."""
    n = max(len(a), len(b))
    a, b = pad(tuple(a), n), pad(tuple(b), n)
    if any(a[i] > b[i] for i in range(n)):
        return False
    for i, j in combinations(range(n), 2):
        if a[i] > a[j] and not b[i] > b[j]:
            return False
    return True


def young_leq(lam, mu):
    """Containment order on partitions: lam_i <= mu_i for all i."""
    n = max(len(lam), len(mu))
    lam, mu = pad(tuple(lam), n), pad(tuple(mu), n)
    return all(lam[i] <= mu[i] for i in range(n))


def compositions_of(k, nparts):
    """All weak compositions of k into exactly nparts parts, lexicographically."""
    if nparts == 0:
        if k == 0:
            yield ()
        return
    for first in range(k + 1):
        for rest in compositions_of(k - first, nparts - 1):
            yield (first,) + rest


def partitions_of(k, max_part=None):
    """All partitions of k with parts bounded by max_part, largest part first."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, first):
            yield (first,) + rest


def relabel(a, I, J):
    """Move the parts of a sitting at indices I (1-based, sorted) to the
    indices J, preserving order; all other parts of the result are zero.

    Rejects inputs where a has a nonzero part outside I or |I| != |J|.
    """
    I, J = sorted(I), sorted(J)
    if len(I) != len(J):
        raise ValueError("index sets must have equal size")
    a = tuple(a)
    iset = set(I)
    for pos, part in enumerate(a, start=1):
        if part != 0 and pos not in iset:
            raise ValueError(f"nonzero part at index {pos} outside {I}")
    out = [0] * (max(J) if J else 0)
    for i, j in zip(I, J):
        out[j - 1] = a[i - 1] if i - 1 < len(a) else 0
    return tuple(out)
