"""Idempotent path algebra over depth-k lexicographic weights.

A lexicographic weight is either ZERO (no path; absorbing for the
product, neutral for the sum), or a non-increasing tuple of at most k
levels; the empty tuple UNIT is the neutral element of the product.
The sum picks the smaller operand in tuple order (ZERO largest, and a
sequence precedes every strict extension of itself, so a track that
already ended in a minimum beats its continuations).  The product
chains two descents: it fails to ZERO when the tail of the left factor
lies below the head of the right one, otherwise it concatenates and
truncates to depth k.

Square matrices over this structure give shortest lexicographic path
weights through powers of the incidence matrix; the classical linear
solvers (Jacobi, Gauss-Seidel, Jordan pivoting, greedy elimination)
all compute the smallest solution of ``Y = A (x) Y (+) B``, which is
``closure(A) (x) B``.  Dense matrices here are the oracle path, kept to
modest sizes; the graph-native algorithms live in ``geodesics``.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import DimensionMismatch
from .graphs import WeightedGraph

# ZERO is None; every other value is a non-increasing tuple of levels.
LexWeight = Optional[tuple[int, ...]]

ZERO: LexWeight = None
UNIT: LexWeight = ()

MAX_DENSE_NODES = 2048


def lex_weight(seq: Sequence[int], k: int) -> LexWeight:
    """Weight of a raw level sequence: ZERO if it ascends anywhere,
    otherwise its first k values."""
    seq = tuple(seq)
    for a, b in zip(seq, seq[1:]):
        if b > a:
            return ZERO
    return seq[:k]


def lex_compare(a: LexWeight, b: LexWeight) -> int:
    """-1, 0 or 1; ZERO is the maximum, UNIT the minimum."""
    if a is None and b is None:
        return 0
    if a is None:
        return 1
    if b is None:
        return -1
    return -1 if a < b else (0 if a == b else 1)


def lex_min(a: LexWeight, b: LexWeight) -> LexWeight:
    """The sum of the dioid: keeps the smaller operand."""
    if a is None:
        return b
    if b is None:
        return a
    return a if a <= b else b


def lex_chain(a: LexWeight, b: LexWeight, k: int) -> LexWeight:
    """The product of the dioid: chain prefix ``a`` with suffix ``b``.

    Exact as long as ``a`` is not itself a truncation that hid its true
    last element (prepending single edges, as all the iterative solvers
    and graph algorithms do, is always exact).  Chains of truncated
    prefixes must use the tail-tracked ops below instead.
    """
    if a is None or b is None:
        return ZERO
    if not a:
        return b[:k]
    if not b:
        return a[:k]
    if a[-1] < b[0]:
        return ZERO
    return (a + b)[:k]


# Tail-tracked elements: (window, true last element of the underlying
# sequence).  Truncating first_k hides the sequence's tail, yet the tail
# still decides whether a further suffix may be chained; tracking it keeps
# the product associative, which matrix squaring silently relies on.
Tracked = Optional[tuple[tuple[int, ...], int]]

UNIT_T: Tracked = ((), 0)


def lift(w: LexWeight) -> Tracked:
    """Plain (untruncated) weight to its tail-tracked form."""
    if w is None:
        return None
    return (w, w[-1]) if w else UNIT_T


def exact_chain(a: Tracked, b: Tracked, k: int) -> Tracked:
    if a is None or b is None:
        return None
    wa, ta = a
    wb, tb = b
    if not wa:
        return (wb[:k], tb)
    if not wb:
        return (wa[:k], ta)
    if ta < wb[0]:
        return None
    return ((wa + wb)[:k], tb)


def exact_min(a: Tracked, b: Tracked) -> Tracked:
    """Smaller window wins; on a window tie the larger tail dominates
    (it chains with everything the smaller one does)."""
    if a is None:
        return b
    if b is None:
        return a
    if a[0] != b[0]:
        return a if a[0] < b[0] else b
    return a if a[1] >= b[1] else b


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

LexMatrix = list  # list[list[LexWeight]], rows of equal length


def zero_matrix(rows: int, cols: Optional[int] = None) -> LexMatrix:
    cols = rows if cols is None else cols
    return [[ZERO] * cols for _ in range(rows)]


def identity_matrix(n: int) -> LexMatrix:
    m = zero_matrix(n)
    for i in range(n):
        m[i][i] = UNIT
    return m


def incidence_matrix(g: WeightedGraph, k: int) -> LexMatrix:
    """Symmetric matrix with the one-edge weight on every edge slot."""
    if g.num_nodes > MAX_DENSE_NODES:
        raise DimensionMismatch(
            f"dense algebra capped at {MAX_DENSE_NODES} nodes; "
            "use the graph-native algorithms"
        )
    ew = g.require_edge_weights()
    a = zero_matrix(g.num_nodes)
    for eid, (u, v) in enumerate(g.edges):
        w = lex_weight((ew[eid],), k)
        a[u][v] = w
        a[v][u] = w
    return a


def mat_add(a: LexMatrix, b: LexMatrix) -> LexMatrix:
    if len(a) != len(b) or (a and len(a[0]) != len(b[0])):
        raise DimensionMismatch("matrix shapes differ")
    return [[lex_min(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_mul(a: LexMatrix, b: LexMatrix, k: int) -> LexMatrix:
    n, inner = len(a), len(b)
    if a and len(a[0]) != inner:
        raise DimensionMismatch("matrix shapes do not chain")
    cols = len(b[0]) if b else 0
    out = zero_matrix(n, cols)
    for i in range(n):
        row_a = a[i]
        row_out = out[i]
        for t in range(inner):
            x = row_a[t]
            if x is None:
                continue
            row_b = b[t]
            for j in range(cols):
                y = row_b[j]
                if y is None:
                    continue
                row_out[j] = lex_min(row_out[j], lex_chain(x, y, k))
    return out


def _mat_mul_tracked(a, b, k):
    n, cols = len(a), len(b[0])
    out = [[None] * cols for _ in range(n)]
    for i in range(n):
        row_a = a[i]
        row_out = out[i]
        for t in range(len(b)):
            x = row_a[t]
            if x is None:
                continue
            row_b = b[t]
            for j in range(cols):
                y = row_b[j]
                if y is None:
                    continue
                row_out[j] = exact_min(row_out[j], exact_chain(x, y, k))
    return out


def closure(a: LexMatrix, k: int) -> LexMatrix:
    """Least fixpoint of repeated squaring of (identity + a).

    Entry (i, j) is the minimal depth-k lexicographic weight over all
    walks from i to j; stationary after ceil(log2(n-1)) squarings since
    an elementary path has at most n nodes.  Squaring chains truncated
    prefixes, so it runs on the tail-tracked elements internally.
    """
    n = len(a)
    m = [[lift(x) for x in row] for row in mat_add(identity_matrix(n), a)]
    while True:
        m2 = _mat_mul_tracked(m, m, k)
        if m2 == m:
            return [[None if x is None else x[0] for x in row] for row in m]
        m = m2


# ---------------------------------------------------------------------------
# linear solvers for Y = A (x) Y (+) B
# ---------------------------------------------------------------------------


def _solve_jacobi(a: LexMatrix, b: LexMatrix, k: int) -> LexMatrix:
    y = zero_matrix(len(b), len(b[0]))
    while True:
        y2 = mat_add(mat_mul(a, y, k), b)
        if y2 == y:
            return y
        y = y2


def _solve_gauss_seidel(a: LexMatrix, b: LexMatrix, k: int) -> LexMatrix:
    # strictly-lower part uses the previous sweep, strictly-upper the
    # current one: rows are updated bottom-up within a sweep.
    n, cols = len(b), len(b[0])
    y = zero_matrix(n, cols)
    while True:
        changed = False
        for i in range(n - 1, -1, -1):
            for c in range(cols):
                acc = b[i][c]
                for j in range(n):
                    if j == i:
                        continue
                    acc = lex_min(acc, lex_chain(a[i][j], y[j][c], k))
                if acc != y[i][c]:
                    y[i][c] = acc
                    changed = True
        if not changed:
            return y


def _solve_jordan(a: LexMatrix, b: LexMatrix, k: int) -> LexMatrix:
    # pivoting chains accumulated (truncated) paths, hence tracked elements
    n = len(a)
    c = [[lift(x) for x in row] for row in a]
    for p in range(n):
        for i in range(n):
            cip = c[i][p]
            if cip is None:
                continue
            for j in range(n):
                c[i][j] = exact_min(c[i][j], exact_chain(cip, c[p][j], k))
    for i in range(n):
        c[i][i] = exact_min(c[i][i], UNIT_T)
    bt = [[lift(x) for x in row] for row in b]
    y = _mat_mul_tracked(c, bt, k)
    return [[None if x is None else x[0] for x in row] for row in y]


def _solve_gondran(a: LexMatrix, b: LexMatrix, k: int) -> LexMatrix:
    # greedy elimination: the smallest remaining b entry is already the
    # solution for its row; substitute and shrink the system.
    n, cols = len(b), len(b[0])
    y = zero_matrix(n, cols)
    for c in range(cols):
        work = [b[i][c] for i in range(n)]
        settled = [False] * n
        for _ in range(n):
            i0 = None
            for i in range(n):
                if not settled[i] and (
                    i0 is None or lex_compare(work[i], work[i0]) < 0
                ):
                    i0 = i
            settled[i0] = True
            y[i0][c] = work[i0]
            if work[i0] is None:
                continue
            for i in range(n):
                if not settled[i]:
                    work[i] = lex_min(work[i], lex_chain(a[i][i0], work[i0], k))
        # unreachable rows keep ZERO
    return y


_SOLVERS = {
    "jacobi": _solve_jacobi,
    "gauss_seidel": _solve_gauss_seidel,
    "jordan": _solve_jordan,
    "gondran": _solve_gondran,
}


def linear_solve(a: LexMatrix, b: LexMatrix, k: int, method: str = "jacobi") -> LexMatrix:
    """Smallest solution of ``Y = A (x) Y (+) B``; equals closure(A) (x) B."""
    if len(a) != len(b):
        raise DimensionMismatch("A rows != B rows")
    if not b or not b[0]:
        raise DimensionMismatch("B must have at least one column")
    try:
        fn = _SOLVERS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return fn(a, [row[:] for row in b], k)


def flooding_distance_matrix(g: WeightedGraph) -> list[list[Optional[int]]]:
    """Pairwise ultrametric flooding distance: min over paths of max edge.

    The depth-1 instantiation of the path algebra where chains need not
    descend (the lexicographic product only follows descents, so it
    covers node-to-minima geodesics; between arbitrary nodes the flood
    must be allowed to climb over passes).  None means unreachable,
    the diagonal is 0.
    """
    if g.num_nodes > MAX_DENSE_NODES:
        raise DimensionMismatch(
            f"dense algebra capped at {MAX_DENSE_NODES} nodes"
        )
    ew = g.require_edge_weights()
    n = g.num_nodes
    d: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0
    for eid, (u, v) in enumerate(g.edges):
        w = ew[eid]
        if d[u][v] is None or w < d[u][v]:
            d[u][v] = d[v][u] = w
    for t in range(n):
        dt = d[t]
        for i in range(n):
            dit = d[i][t]
            if dit is None:
                continue
            row = d[i]
            for j in range(n):
                if dt[j] is None:
                    continue
                via = dit if dit > dt[j] else dt[j]
                if row[j] is None or via < row[j]:
                    row[j] = via
    return d


def distances_to_minima(g: WeightedGraph, k: int, method: str = "closure"):
    """Per-node minimal depth-k weight to the regional minima, with labels.

    Matrix-algebra counterpart of the graph-native algorithms: solve one
    column per minimum and reduce.  Returns (distances, labeling) where
    minima themselves sit at UNIT.  Ties between minima resolve to the
    smallest label.
    """
    from .flooding import minima_of_flooding, minima_sets
    from .graphs import Labeling, UNSET

    labeling = minima_of_flooding(g)
    sets = minima_sets(labeling)
    a = incidence_matrix(g, k)
    n = g.num_nodes
    b = zero_matrix(n, len(sets))
    for c, nodes in enumerate(sets):
        for m in nodes:
            b[m][c] = UNIT
    if method == "closure":
        y = mat_mul(closure(a, k), b, k)
    else:
        y = linear_solve(a, b, k, method)
    dist: list[LexWeight] = []
    labels = []
    for i in range(n):
        best, lab = ZERO, UNSET
        for c in range(len(sets)):
            if lex_compare(y[i][c], best) < 0:
                best, lab = y[i][c], c + 1
        dist.append(best)
        labels.append(lab)
    return dist, Labeling(tuple(labels), "nodes")
