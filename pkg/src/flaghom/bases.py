"""The flagged homogeneous basis, key polynomials, Demazure atoms, and the
Kostka-type coefficients connecting them."""

from dataclasses import dataclass, field

from .compositions import (compositions_of, dominance_key, pad, rev, size,
                           strip)
from .fillings import enumerate_fillings, weight_of
from .polynomials import Poly, grlex_key


def h_complete(k, m):
    """The complete homogeneous polynomial h_k(x_1, ..., x_m)."""
    if k == 0:
        return Poly.one()
    if m == 0:
        return Poly.zero()
    out = Poly()
    for c in compositions_of(k, m):
        out = out + Poly.monomial(c)
    return out


def h_sym(lam, m):
    """h_lam(x_1, ..., x_m) for a partition lam."""
    out = Poly.one()
    for part in lam:
        out = out * h_complete(part, m)
    return out


def h_flagged(a, n=None):
    """The flagged product h_{a_1}(x_1) h_{a_2}(x_1,x_2) ... h_{a_i}(x_1..x_i)."""
    a = tuple(a)
    if n is not None and n < len(strip(a)):
        raise ValueError(f"ambient {n} smaller than length of {a}")
    out = Poly.one()
    for i, part in enumerate(a, start=1):
        out = out * h_complete(part, i)
    return out


def h_flagged_matrix_oracle(a):
    """Independent model: sum of x^{col(L)} over lower triangular natural
    matrices L with row sums a.  Must agree with h_flagged."""
    a = tuple(a)
    n = len(a)
    out = Poly.zero()

    def rows(i, cols):
        nonlocal out
        if i > n:
            out = out + Poly.monomial(tuple(cols))
            return
        for c in compositions_of(a[i - 1], i):
            rows(i + 1, [cols[j] + (c[j] if j < i else 0) for j in range(n)])

    rows(1, [0] * n)
    return out


def schur_ssyt(lam, n):
    """Schur polynomial by direct SSYT weight sum; independent of key route."""
    out = Poly.zero()
    for rows in enumerate_fillings(tuple(lam), n, "SSYT"):
        out = out + Poly.monomial(weight_of(rows, n))
    return out


def key_polynomial(a, n=None):
    """Weight generating function of the SSKT of shape a."""
    a = tuple(a)
    n = len(a) if n is None else n
    out = Poly.zero()
    for rows in enumerate_fillings(a, n, "SSKT"):
        out = out + Poly.monomial(weight_of(rows, n))
    return out


def demazure_atom(a, n=None):
    """Weight generating function of the rSSAF of shape rev(a), with the
    alphabet reversed (variable i becomes x_{n+1-i})."""
    a = tuple(a)
    n = len(a) if n is None else n
    shape = rev(a, n)
    out = Poly.zero()
    for rows in enumerate_fillings(shape, n, "rSSAF"):
        out = out + Poly.monomial(rev(weight_of(rows, n), n))
    return out


def ktilde(a, b):
    """Number of rSSAF of shape a and weight b (0 on degree mismatch)."""
    a, b = strip(a), strip(b)
    if size(a) != size(b):
        return 0
    n = max(len(a), len(b), 1)
    return len(enumerate_fillings(pad(a, n), n, "rSSAF", weight=pad(b, n)))


def ktilde_upper(a, b):
    """Number of SSKT of shape rev(a) and weight rev(b) (0 on mismatch)."""
    a, b = strip(a), strip(b)
    if size(a) != size(b):
        return 0
    n = max(len(a), len(b), 1)
    return len(enumerate_fillings(rev(a, n), n, "SSKT", weight=rev(b, n)))


def kostka(lam, b):
    """Classical Kostka number: SSYT of shape lam and weight b."""
    lam, b = tuple(lam), strip(b)
    if size(lam) != size(b):
        return 0
    n = max(len(lam), len(b), 1)
    return len(enumerate_fillings(lam, n, "SSYT", weight=pad(b, n)))


@dataclass
class BasisExpansion:
    """Integer coefficients of an element against a named target basis."""

    basis: str
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {strip(k): v for k, v in self.terms.items() if v}

    def coefficient(self, index):
        return self.terms.get(strip(index), 0)

    def sorted_terms(self, n=None):
        n = max((len(k) for k in self.terms), default=0) if n is None else n
        return [(pad(k, max(n, len(k))), self.terms[k])
                for k in sorted(self.terms, key=lambda k: grlex_key(k, n))]

    def to_json(self, n=None):
        return {
            "basis": self.basis,
            "terms": [{"index": list(k), "coef": v} for k, v in self.sorted_terms(n)],
        }


def expand_h_into_keys(b, n=None):
    """Key-basis expansion of the flagged homogeneous element indexed by b."""
    b = tuple(b)
    n = max(len(strip(b)), 1) if n is None else n
    terms = {}
    for a in compositions_of(size(b), n):
        c = ktilde(a, b)
        if c:
            terms[strip(a)] = c
    return BasisExpansion("key", terms)


def expand_h_into_atoms(b, n=None):
    """Atom-basis expansion of the flagged homogeneous element indexed by b."""
    b = tuple(b)
    n = max(len(strip(b)), 1) if n is None else n
    terms = {}
    for a in compositions_of(size(b), n):
        c = ktilde_upper(a, b)
        if c:
            terms[strip(a)] = c
    return BasisExpansion("atom", terms)


def h_basis_family(degrees, n):
    """The flagged homogeneous elements of the given total degrees in n
    variables, listed along the fixed linear extension of dominance order.
    Suitable as the triangular family for express_in_basis."""
    family = []
    for d in sorted(set(degrees)):
        for a in sorted(compositions_of(d, n), key=lambda a: dominance_key(a, n)):
            family.append((a, h_flagged(a, n)))
    return family


def key_basis_family(degrees, n):
    """Key polynomials of the given degrees, dominance-extension order."""
    family = []
    for d in sorted(set(degrees)):
        for a in sorted(compositions_of(d, n), key=lambda a: dominance_key(a, n)):
            family.append((a, key_polynomial(a, n)))
    return family
