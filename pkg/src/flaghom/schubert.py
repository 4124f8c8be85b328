"""Pieri chains in k-Bruhat order, the Schubert expansion of the flagged
homogeneous basis, and a divided-difference Schubert oracle used purely for
cross-checking."""

from .permutations import apply_transposition, length, strip_fixed
from .polynomials import Poly, divided_difference


def horizontal_strip_targets(u, k, m):
    """All w reachable from u by a saturated k-Bruhat chain of length m whose
    transpositions t_{i,j} use pairwise distinct j.  m = 0 gives {u}."""
    u = strip_fixed(u)
    out = set()

    def extend(w, used, steps):
        if steps == m:
            out.add(w)
            return
        lw = length(w)
        for j in range(k + 1, max(len(w), k) + 2):
            if j in used:
                continue
            for i in range(1, k + 1):
                w2 = apply_transposition(w, i, j)
                if length(w2) == lw + 1:
                    extend(w2, used | {j}, steps + 1)

    extend(u, frozenset(), 0)
    return out


def pieri_multiply(expansion, m, k):
    """Push a Schubert expansion through one Pieri step: each source w moves
    to every horizontal m-strip target in k-Bruhat order, once per target."""
    out = {}
    for u, coef in expansion.items():
        for w in horizontal_strip_targets(u, k, m):
            out[w] = out.get(w, 0) + coef
    return {w: c for w, c in out.items() if c}


def h_schubert_expansion(b):
    """Schubert coefficients of the flagged homogeneous element of b: the
    number of chains of horizontal (b_k)-strips in k-Bruhat order."""
    expansion = {(): 1}
    for k, part in enumerate(tuple(b), start=1):
        expansion = pieri_multiply(expansion, part, k)
    return expansion


def schubert_product_expansion(a, b):
    """Schubert expansion of the product of two flagged homogeneous
    elements, via the one-row grassmannian factorization of each."""
    expansion = {(): 1}
    for comp in (tuple(a), tuple(b)):
        for k, part in enumerate(comp, start=1):
            expansion = pieri_multiply(expansion, part, k)
    return expansion


_oracle_cache = {}


def _schubert_poly(w):
    """Divided-difference recursion from the staircase monomial of the
    longest element above w."""
    w = strip_fixed(w)
    if w in _oracle_cache:
        return _oracle_cache[w]
    m = len(w)
    if m == 0:
        return Poly.one()
    if all(w[i] == m - i for i in range(m)):
        poly = Poly.monomial(tuple(range(m - 1, 0, -1)))
    else:
        i = next(i for i in range(1, m) if w[i - 1] < w[i])
        higher = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1:]
        poly = divided_difference(_schubert_poly(higher), i)
    _oracle_cache[w] = poly
    return poly


def schubert_oracle(w, n):
    """The Schubert polynomial of w, which must fit in x_1..x_n, i.e. w can
    permute [m] only for m <= n + 1."""
    w = strip_fixed(w)
    if len(w) > n + 1:
        raise ValueError(f"{w} needs more than {n} variables")
    return _schubert_poly(w)


def evaluate_expansion(expansion, n):
    """Recombine a Schubert expansion through the oracle."""
    out = Poly.zero()
    for w, coef in expansion.items():
        out = out + coef * schubert_oracle(w, n)
    return out
