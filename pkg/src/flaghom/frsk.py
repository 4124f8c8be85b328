"""Row insertion on reverse SSYT, the flagged insertion on SSKT, the two
RSK correspondences built from them, and the column-set maps relating the
classical and flagged pictures.

Matrices are tuples of row tuples with 1-based (i, j) semantics; a biword is
a list of (top, bottom) pairs kept in the canonical order: top entries
weakly increasing, bottom entries weakly decreasing within a constant top.
"""

from .compositions import pad, strip
from .fillings import is_member, shape_of


def biword_from_matrix(A):
    """Multiset of pairs (i, j) with multiplicity A[i][j], canonically ordered."""
    pairs = []
    for i, row in enumerate(A, start=1):
        for j in range(len(row), 0, -1):
            pairs.extend([(i, j)] * row[j - 1])
    return pairs


def canonical_biword(pairs):
    return sorted(pairs, key=lambda p: (p[0], -p[1]))


def matrix_from_biword(pairs, n=None):
    if n is None:
        n = max((max(i, j) for i, j in pairs), default=0)
    M = [[0] * n for _ in range(n)]
    for i, j in pairs:
        M[i - 1][j - 1] += 1
    return tuple(tuple(r) for r in M)


def is_lower_triangular(A):
    return all(A[i][j] == 0 for i in range(len(A)) for j in range(i + 1, len(A[i])))


def row_sums(A):
    return tuple(sum(row) for row in A)


def col_sums(A):
    width = max((len(r) for r in A), default=0)
    return tuple(sum(row[j] for row in A if len(row) > j) for j in range(width))


# ---------------------------------------------------------------------------
# classical insertion and RSK


def rsk_insert_trace(P, j):
    """Insert j into a reverse SSYT.  Returns the new tableau and the bumping
    chain [(column, row), ...]; the final chain entry is the appended cell.

    Row by row from the bottom, j lands in the leftmost position of the row
    not occupied by a weakly larger entry, displacing its occupant upward.
    """
    rows = [list(r) for r in P]
    chain = []
    r = 1
    while True:
        if r > len(rows):
            rows.append([])
        row = rows[r - 1]
        pos = next((t for t, v in enumerate(row) if v < j), len(row))
        chain.append((pos + 1, r))
        if pos == len(row):
            row.append(j)
            break
        j, row[pos] = row[pos], j
        r += 1
    return tuple(tuple(r) for r in rows), chain


def rsk_insert(P, j):
    return rsk_insert_trace(P, j)[0]


def rsk(A):
    """Fold the biword of A through row insertion; the recording tableau
    takes the top letter at each new cell.  Returns (P, Q)."""
    P = ()
    Q = []
    for i, j in biword_from_matrix(A):
        P, chain = rsk_insert_trace(P, j)
        c, r = chain[-1]
        while len(Q) < r:
            Q.append([])
        if len(Q[r - 1]) != c - 1:
            raise AssertionError("new cell not at the end of its row")
        Q[r - 1].append(i)
    return P, tuple(tuple(r) for r in Q)


def _rightmost_cell(rows, value):
    """Rightmost, then topmost cell (column, row) holding the given value."""
    best = None
    for t, row in enumerate(rows, 1):
        for idx in range(len(row) - 1, -1, -1):
            if row[idx] == value:
                if best is None or (idx + 1, t) > best:
                    best = (idx + 1, t)
                break
    return best


def _uninsert(rows, r):
    """Reverse the bumping chain that ended by appending the last cell of row
    r; returns the expelled bottom value."""
    v = rows[r - 1].pop()
    for t in range(r - 1, 0, -1):
        row = rows[t - 1]
        pos = max(idx for idx, val in enumerate(row) if val > v)
        row[pos], v = v, row[pos]
    return v


def rsk_inverse(P, Q, n=None):
    """Recover the matrix from a (reverse SSYT, SSYT) pair of equal shape."""
    P = [list(r) for r in P]
    Q = [list(r) for r in Q]
    if [len(r) for r in P] != [len(r) for r in Q]:
        raise ValueError("tableau shapes differ")
    pairs = []
    while any(Q):
        i = max(max(row) for row in Q if row)
        c, r = _rightmost_cell(Q, i)
        if c != len(Q[r - 1]):
            raise ValueError("largest recording entry is not removable")
        Q[r - 1].pop()
        pairs.append((i, _uninsert(P, r)))
        while P and not P[-1]:
            P.pop()
            Q.pop()
    pairs.reverse()
    if pairs != canonical_biword(pairs):
        raise ValueError("pair is not an RSK image")
    return matrix_from_biword(pairs, n)


# ---------------------------------------------------------------------------
# flagged insertion and flagged RSK


def _count_geq(rows, c, j, n):
    """Entries weakly greater than j in column c; column 0 is the basement."""
    if c == 0:
        return n - j + 1
    return sum(1 for row in rows if len(row) >= c and row[c - 1] >= j)


def flagged_insert_trace(S, j, n):
    """Insert j into an SSKT with ambient window [n].

    Repeatedly: take the rightmost column (weakly left of the previous one)
    holding strictly fewer entries weakly >= j than the column to its left,
    then put j in the topmost position of that column that is free of weakly
    larger entries and sits immediately right of an entry >= j (basement
    included), displacing any smaller occupant.

    Returns the new filling (window rows) and the chain [(column, row), ...].
    """
    rows = [list(r) for r in S]
    if len(rows) > n:
        raise ValueError("filling taller than ambient window")
    while len(rows) < n:
        rows.append([])
    if not 1 <= j <= n:
        raise ValueError(f"entry {j} outside [{n}]")
    chain = []
    bound = None
    while True:
        hi = max((len(r) for r in rows), default=0) + 1
        if bound is not None:
            hi = min(hi, bound)
        col = next(
            (c for c in range(hi, 0, -1)
             if _count_geq(rows, c, j, n) < _count_geq(rows, c - 1, j, n)),
            None,
        )
        if col is None:
            raise ValueError("no admissible column; input is not an SSKT")
        target = None
        for r in range(n, 0, -1):
            row = rows[r - 1]
            left = r if col == 1 else (row[col - 2] if len(row) >= col - 1 else None)
            if left is None or left < j:
                continue
            if len(row) >= col:
                if row[col - 1] < j:
                    target = r
                    break
            elif len(row) == col - 1:
                target = r
                break
        if target is None:
            raise ValueError("no admissible position; input is not an SSKT")
        chain.append((col, target))
        row = rows[target - 1]
        if len(row) >= col:
            j, row[col - 1] = row[col - 1], j
            bound = col
        else:
            row.append(j)
            break
    return tuple(tuple(r) for r in rows), chain


def flagged_insert(S, j, n):
    return flagged_insert_trace(S, j, n)[0]


def frsk(L):
    """The flagged correspondence on a lower triangular matrix: fold the
    biword through flagged insertion, recording top letters at new cells.

    Each pair (i, j) is inserted with the basement window [i] of its top
    letter; the window in force grows as the biword is consumed, which is
    what pins first-column entries to their row indices on the recording
    side.  Returns (S, T), an (SSKT, rSSAF) pair of equal shape.
    """
    if not is_lower_triangular(L):
        raise ValueError("matrix is not lower triangular")
    n = len(L)
    S = ()
    T = [[] for _ in range(n)]
    for i, j in biword_from_matrix(L):
        S, chain = flagged_insert_trace(pad_rows(S, i), j, i)
        c, r = chain[-1]
        if len(T[r - 1]) != c - 1:
            raise AssertionError("recording cell out of step")
        T[r - 1].append(i)
    return pad_rows(S, n), tuple(tuple(r) for r in T)


def frsk_inverse(S, T):
    """Invert the flagged correspondence by reverse bumping: repeatedly strip
    the rightmost largest recording entry and un-insert through the reverse
    SSYT picture of the insertion filling.  Rejects pairs outside the image."""
    n = max(len(S), len(T))
    S = tuple(pad_rows(S, n))
    Trows = [list(r) for r in pad_rows(T, n)]
    if shape_of(S) != tuple(len(r) for r in Trows):
        raise ValueError("fillings have different shapes")
    if not is_member(S, "SSKT", n) or not is_member(T, "rSSAF", n):
        raise ValueError("pair is not an (SSKT, rSSAF) pair")
    pairs = []
    while any(Trows):
        i = max(max(row) for row in Trows if row)
        c, r = _rightmost_cell(Trows, i)
        if c != len(Trows[r - 1]):
            raise ValueError("largest recording entry is not removable")
        Trows[r - 1].pop()
        a = shape_of(S)
        P = [list(row) for row in tau(S)]
        r_P = max(t for t, row in enumerate(P, 1) if len(row) == c)
        j = _uninsert(P, r_P)
        while P and not P[-1]:
            P.pop()
        a_prev = list(a)
        a_prev[r - 1] -= 1
        S = tau_dagger(tuple(tuple(row) for row in P), pad(strip(tuple(a_prev)), n))
        pairs.append((i, j))
    pairs.reverse()
    if pairs != canonical_biword(pairs):
        raise ValueError("pair is not a flagged RSK image")
    M = matrix_from_biword(pairs, n)
    if not is_lower_triangular(M):
        raise ValueError("recovered matrix is not lower triangular")
    return M


def pad_rows(rows, n):
    rows = tuple(tuple(r) for r in rows)
    return rows + ((),) * (n - len(rows))


# ---------------------------------------------------------------------------
# column-set maps between the flagged and classical pictures


def _column_multisets(rows):
    cols = {}
    for row in rows:
        for c, e in enumerate(row, start=1):
            cols.setdefault(c, []).append(e)
    return cols


def _stack_columns(cols, descending):
    width = max(cols, default=0)
    heights = [len(cols[c]) for c in range(1, width + 1)]
    if sorted(heights, reverse=True) != heights:
        raise ValueError("column sets do not stack to a partition")
    out = []
    t = 1
    while any(h >= t for h in heights):
        row = [sorted(cols[c], reverse=descending)[t - 1]
               for c in range(1, width + 1) if heights[c - 1] >= t]
        out.append(tuple(row))
        t += 1
    return tuple(out)


def tau(S):
    """The reverse SSYT with the same column sets as the SSKT S."""
    return _stack_columns(_column_multisets(S), descending=True)


def rho(T):
    """The SSYT with the same column sets as the rSSAF T."""
    return _stack_columns(_column_multisets(T), descending=False)


def tau_dagger(P, a):
    """Rebuild a filling of the key diagram of a from the column sets of the
    reverse SSYT P: columns right to left, rows bottom to top, always taking
    the smallest remaining entry that keeps rows weakly decreasing.

    The result is an SSKT exactly when P is in the image of tau restricted
    to shape a; raises if a column multiset cannot be placed at all.
    """
    a = tuple(a)
    cols = _column_multisets(P)
    width = max(cols, default=0)
    if width != max(a, default=0):
        raise ValueError("width of P differs from the shape")
    rows = [[0] * a[r - 1] for r in range(1, len(a) + 1)]
    for c in range(width, 0, -1):
        hosts = [r for r in range(1, len(a) + 1) if a[r - 1] >= c]
        remaining = sorted(cols.get(c, []))
        if len(remaining) != len(hosts):
            raise ValueError("column multiset size differs from the shape")
        for r in hosts:
            floor = rows[r - 1][c] if a[r - 1] >= c + 1 else None
            pick = next((t for t, e in enumerate(remaining) if floor is None or e >= floor), None)
            if pick is None:
                raise ValueError("column multiset cannot keep rows decreasing")
            rows[r - 1][c - 1] = remaining.pop(pick)
    return tuple(tuple(r) for r in rows)


def rho_inverse(Q, n=None):
    """Rebuild the rSSAF with the column sets of the SSYT Q: columns left to
    right, entries smallest first, each into the topmost position immediately
    right of a weakly lesser entry (basement allowed)."""
    cols = _column_multisets(Q)
    width = max(cols, default=0)
    top = max((max(v) for v in cols.values()), default=0)
    n = top if n is None else n
    if n < top:
        raise ValueError(f"ambient {n} smaller than the largest entry")
    rows = [[] for _ in range(n)]
    for c in range(1, width + 1):
        for e in sorted(cols[c]):
            spot = None
            for r in range(n, 0, -1):
                if len(rows[r - 1]) != c - 1:
                    continue
                left = r if c == 1 else rows[r - 1][c - 2]
                if left <= e:
                    spot = r
                    break
            if spot is None:
                raise ValueError("no admissible position; not an SSYT column stack")
            rows[spot - 1].append(e)
    return tuple(tuple(r) for r in rows)


def lift_F(A):
    """Push a square natural matrix into the lower triangle twice the size:
    the biword pair (i, j) becomes (i + n, j)."""
    n = len(A)
    F = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            F[n + i][j] = A[i][j]
    return tuple(tuple(r) for r in F)
