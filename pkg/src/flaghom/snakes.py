"""Snakes of key diagrams, special snake tabloids, the signed inverse of the
flagged Kostka matrix, and the sign-reversing involution that proves the
expansion.  The rim hook analogues on partition shapes live here too, as an
independent cross-check."""

from dataclasses import dataclass
from itertools import product

from .bases import BasisExpansion
from .compositions import key_poset_leq, pad, size, strip
from .fillings import enumerate_fillings, is_member, key_diagram, shape_of

# ---------------------------------------------------------------------------
# connectivity


def weakly_connected(u, v):
    """Share a column, or adjacent columns with the left cell weakly higher."""
    (c1, r1), (c2, r2) = u, v
    if c1 == c2:
        return True
    if c2 < c1:
        (c1, r1), (c2, r2) = (c2, r2), (c1, r1)
    return c2 == c1 + 1 and r1 >= r2


def connected(u, v):
    """Vertically or horizontally adjacent."""
    (c1, r1), (c2, r2) = u, v
    return abs(c1 - c2) + abs(r1 - r2) == 1


def components(cells, related):
    """Equivalence classes of the transitive closure of a cell relation."""
    cells = list(cells)
    parent = {u: u for u in cells}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for i, u in enumerate(cells):
        for v in cells[i + 1:]:
            if related(u, v):
                parent[find(u)] = find(v)
    groups = {}
    for u in cells:
        groups.setdefault(find(u), set()).add(u)
    return list(groups.values())


def weakly_connected_components(cells):
    return components(cells, weakly_connected)


def connected_components(cells):
    return components(cells, connected)


# ---------------------------------------------------------------------------
# snakes


def complement_shape(S, b):
    """Shape of D(b) minus S if it is again left-justified, else None."""
    b = tuple(b)
    S = frozenset(S)
    host = key_diagram(b)
    if not S <= host:
        raise ValueError("cells lie outside the key diagram")
    rest = host - S
    a = [0] * len(b)
    for c, r in rest:
        a[r - 1] += 1
    for r, part in enumerate(a, start=1):
        if any((c, r) not in rest for c in range(1, part + 1)):
            return None
    return tuple(a)


def _no_snake_triple(S):
    """No (c, s), (c+1, s), (c+1, r) in S with r < s."""
    S = frozenset(S)
    for c, s in S:
        if (c + 1, s) in S and any((c + 1, r) in S for r in range(1, s)):
            return False
    return True


def is_snake(S, b):
    """Weakly connected, complement a key-poset-lower key diagram, and free
    of the horizontal-pair-with-lower-right-cell triple.  The empty set is
    accepted vacuously."""
    S = frozenset(S)
    if not S:
        return True
    a = complement_shape(S, b)
    if a is None or not key_poset_leq(a, b):
        return False
    if len(weakly_connected_components(S)) != 1:
        return False
    return _no_snake_triple(S)


def lowest_column_one_cell(b):
    r = next((i for i, part in enumerate(strip(b), start=1) if part > 0), None)
    return None if r is None else (1, r)


def is_special_snake(S, b):
    """A snake that is empty or contains the lowest cell in column 1."""
    S = frozenset(S)
    if not S:
        return True
    anchor = lowest_column_one_cell(b)
    return anchor in S and is_snake(S, b)


def snake_height(S):
    """Number of distinct rows met (1 for the empty snake)."""
    return len({r for _, r in S}) if S else 1


def snake_sign(S):
    return (-1) ** (snake_height(S) - 1)


def _special_pieces(d, predicate):
    """Special pieces of the residual shape d: subsets containing the anchor
    cell whose complement shape passes the given predicate, generated as row
    segment unions (complement compositions e with e_anchor = 0)."""
    d = tuple(d)
    anchor = lowest_column_one_cell(d)
    if anchor is None:
        return
    _, i = anchor
    host = key_diagram(d)
    ranges = [range(d[r - 1] + 1) if r != i else (0,) for r in range(1, len(d) + 1)]
    for e in product(*ranges):
        S = host - key_diagram(e)
        if predicate(S, e, d):
            yield frozenset(S), tuple(e)


def _snake_predicate(S, e, d):
    return (
        key_poset_leq(e, d)
        and len(weakly_connected_components(S)) == 1
        and _no_snake_triple(S)
    )


def special_snakes(b):
    """All (snake, residual shape) pairs for the special snakes of D(b)."""
    return list(_special_pieces(b, _snake_predicate))


@dataclass(frozen=True)
class SnakeTabloid:
    """An ordered decomposition of a key diagram into special snakes; the
    ith snake is taken from the residual diagram and is empty exactly when
    residual row i is."""

    shape: tuple
    snakes: tuple

    def weight(self):
        return tuple(len(S) for S in self.snakes)

    def sign(self):
        out = 1
        for S in self.snakes:
            out *= snake_sign(S)
        return out

    def to_json(self):
        return {
            "shape": list(self.shape),
            "snakes": [sorted(map(list, S)) for S in self.snakes],
            "weight": list(self.weight()),
            "sign": self.sign(),
        }


def _tabloids(shape, pieces):
    shape = tuple(shape)
    n = len(shape)
    out = []

    def go(d, i, acc):
        if i > n:
            if any(d):
                return
            out.append(tuple(acc))
            return
        if d[i - 1] == 0:
            go(d, i + 1, acc + [frozenset()])
            return
        for S, e in pieces(d):
            go(e, i + 1, acc + [S])

    go(shape, 1, [])
    return out


def enumerate_special_snake_tabloids(b):
    """All special snake tabloids of shape b, depth first in the order the
    snakes are generated."""
    b = tuple(b)
    return [
        SnakeTabloid(b, snakes)
        for snakes in _tabloids(b, lambda d: _special_pieces(d, _snake_predicate))
    ]


def validate_special_snake_tabloid(b, snakes):
    """Check an explicit snake sequence against the tabloid conditions."""
    b = tuple(b)
    if len(snakes) != len(b):
        return False
    d = b
    for i, S in enumerate(snakes, start=1):
        S = frozenset(S)
        if d[i - 1] == 0:
            if S:
                return False
            continue
        if not S or not S <= key_diagram(d) or not is_special_snake(S, d):
            return False
        d = complement_shape(S, d)
        if d is None:
            return False
        d = pad(strip(d), len(b))
    return not any(d)


def inverse_ktilde(a, b):
    """Signed count of special snake tabloids of shape b and weight a."""
    a = strip(a)
    if size(a) != size(tuple(b)):
        return 0
    total = 0
    for U in enumerate_special_snake_tabloids(b):
        if strip(U.weight()) == a:
            total += U.sign()
    return total


def expand_key_into_h(b, n=None):
    """Signed expansion of the key polynomial of b in the flagged
    homogeneous basis, read off the snake tabloids of shape b.  The window
    n is accepted for interface symmetry but the coefficients are
    window-independent."""
    b = tuple(b)
    terms = {}
    for U in enumerate_special_snake_tabloids(b):
        w = strip(U.weight())
        terms[w] = terms.get(w, 0) + U.sign()
    return BasisExpansion("h-flagged", terms)


# ---------------------------------------------------------------------------
# rim hooks (independent oracle on partition shapes)


def is_rim_hook(S, mu):
    """Rim hook of the partition mu, as a subset of the left-justified
    diagram of rev(mu): connected, complement again of that form, and free
    of 2 x 2 blocks."""
    mu = tuple(mu)
    host_shape = tuple(reversed(mu))
    S = frozenset(S)
    if not S:
        return True
    e = complement_shape(S, host_shape)
    if e is None or any(e[i] > e[i + 1] for i in range(len(e) - 1)):
        return False
    if len(connected_components(S)) != 1:
        return False
    return not any(
        (c + 1, r) in S and (c, r + 1) in S and (c + 1, r + 1) in S
        for c, r in S
    )


def _rim_hook_predicate(S, e, d):
    if any(e[i] > e[i + 1] for i in range(len(e) - 1)):
        return False
    if len(connected_components(S)) != 1:
        return False
    return not any(
        (c + 1, r) in S and (c, r + 1) in S and (c + 1, r + 1) in S
        for c, r in S
    )


def enumerate_special_rim_hook_tabloids(mu):
    """Tabloids of shape rev(mu) whose pieces are special rim hooks; same
    recursion as the snake tabloids with the rim hook conditions instead."""
    shape = tuple(reversed(tuple(mu)))
    return [
        SnakeTabloid(shape, snakes)
        for snakes in _tabloids(shape, lambda d: _special_pieces(d, _rim_hook_predicate))
    ]


# ---------------------------------------------------------------------------
# fillings carrying a snake of ones, and the sign-reversing involution


def gset_enumerate(S, b, n=None):
    """Fillings of D(b) that are 1 on the special snake S and restrict to an
    SSKT on the complement key diagram."""
    b = tuple(b)
    n = len(b) if n is None else n
    S = frozenset(S)
    if not is_special_snake(S, b):
        raise ValueError("not a special snake of the diagram")
    a = complement_shape(S, b)
    out = []
    for inner in enumerate_fillings(pad(a, len(b)), n, "SSKT"):
        rows = tuple(
            inner[r - 1] + (1,) * (b[r - 1] - a[r - 1])
            for r in range(1, len(b) + 1)
        )
        out.append(rows)
    return out


def s_attacks(S, rows, b):
    """Ordered attacking pairs (x, y) of equal entry 1 with x in the snake,
    y above x or in the column to its right, and, when the columns differ,
    no snake cell immediately left of y."""
    b = tuple(b)
    S = frozenset(S)
    out = []
    for cx, rx in sorted(S):
        if rows[rx - 1][cx - 1] != 1:
            continue
        for ry in range(rx + 1, len(b) + 1):
            if b[ry - 1] >= cx and rows[ry - 1][cx - 1] == 1:
                out.append(((cx, rx), (cx, ry)))
        for ry in range(1, rx):
            if b[ry - 1] >= cx + 1 and rows[ry - 1][cx] == 1:
                if (cx, ry) not in S:
                    out.append(((cx, rx), (cx + 1, ry)))
    return out


def in_gset(S, rows, b, n=None):
    b = tuple(b)
    n = len(b) if n is None else n
    S = frozenset(S)
    if shape_of(rows) != b:
        return False
    a = complement_shape(S, b)
    if a is None:
        return False
    if any(rows[r - 1][c - 1] != 1 for c, r in S):
        return False
    inner = tuple(rows[r - 1][: a[r - 1]] for r in range(1, len(b) + 1))
    return is_member(inner, "SSKT", n)


def iota(S, rows, b, n=None):
    """The involution: flip the block B(y) of the distinguished attack in or
    out of the snake.  x is the rightmost then topmost first cell of an
    attack, y the rightmost then lowest partner of x, and B(y) is y together
    with everything right of it in its row.  The filling is untouched.

    Only defined on pairs where the filling is 1 on the snake, an SSKT off
    it, but not an SSKT outright, and the first part of b is positive.
    """
    b = tuple(b)
    n = len(b) if n is None else n
    if not b or b[0] == 0:
        raise ValueError("first part of the shape must be positive")
    S = frozenset(S)
    if not is_special_snake(S, b) or not in_gset(S, rows, b, n):
        raise ValueError("pair is outside the domain of the involution")
    if is_member(rows, "SSKT", n):
        raise ValueError("filling is already an SSKT")
    attacks = s_attacks(S, rows, b)
    if not attacks:
        raise ValueError("no attack found; pair is outside the domain")
    x = max((xx for xx, _ in attacks), key=lambda cell: (cell[0], cell[1]))
    y = max((yy for xx, yy in attacks if xx == x), key=lambda cell: (cell[0], -cell[1]))
    cy, ry = y
    block = frozenset((c, ry) for c in range(cy, b[ry - 1] + 1))
    return S ^ block, rows
