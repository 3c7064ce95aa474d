"""Exact linear algebra over rationals: fraction-free null spaces, a two-phase
simplex with Bland's rule, and integer max-flow.  Everything here is exact;
no floating point."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integer_rows(rows, ncols):
    """Scale each row by the lcm of its denominators; returns int rows."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
    return out


def _reduce_row(row):
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    if g > 1:
        row[:] = [x // g for x in row]
    return row


def nullspace(rows, ncols):
    """Exact basis of {v : M v = 0} for the matrix with the given rows.

    Fraction-free elimination: rows are scaled to integers and updated by
    cross-multiplication, with a gcd reduction per step; the pivot in each
    column is the first row (in scan order) with a nonzero entry.  The basis
    is the reduced-echelon parameterization: one vector per free column, with
    that free coordinate set to 1.  Returns a list of Fraction tuples.
    """
    M = _integer_rows(rows, ncols)
    nrows = len(M)
    pivots = []  # (row, col)
    rank = 0
    for col in range(ncols):
        pr = None
        for r in range(rank, nrows):
            if M[r][col] != 0:
                pr = r
                break
        if pr is None:
            continue
        M[rank], M[pr] = M[pr], M[rank]
        piv = M[rank][col]
        for r in range(nrows):
            if r == rank or M[r][col] == 0:
                continue
            f = M[r][col]
            M[r] = _reduce_row([piv * a - f * b for a, b in zip(M[r], M[rank])])
        pivots.append((rank, col))
        rank += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, c in pivots:
            v[c] = Fraction(-M[r][free], M[r][c])
        basis.append(tuple(v))
    return basis


def matvec(rows, v):
    return [sum(Fraction(a) * Fraction(x) for a, x in zip(row, v)) for row in rows]


class Infeasible(Exception):
    pass


class Unbounded(Exception):
    pass


def _bland_pivot(T, basis, nrows, ncols):
    """One simplex pivot with Bland's rule on tableau T (last row = reduced
    costs, last column = rhs).  Returns False when optimal."""
    enter = None
    for j in range(ncols):
        if T[nrows][j] < 0:
            enter = j
            break
    if enter is None:
        return False
    leave = None
    best = None
    for i in range(nrows):
        if T[i][enter] > 0:
            ratio = T[i][ncols] / T[i][enter]
            if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                best = ratio
                leave = i
    if leave is None:
        raise Unbounded()
    piv = T[leave][enter]
    T[leave] = [x / piv for x in T[leave]]
    for i in range(nrows + 1):
        if i != leave and T[i][enter] != 0:
            f = T[i][enter]
            T[i] = [a - f * b for a, b in zip(T[i], T[leave])]
    basis[leave] = enter
    return True


def simplex_solve(A, b, c):
    """Exact simplex: minimize c.x subject to A x = b, x >= 0.

    Two phases, Bland's rule throughout (finite termination).  Returns
    (x, objective) as Fractions; raises Infeasible / Unbounded.
    """
    m = len(A)
    n = len(c)
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    c = [Fraction(x) for x in c]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # phase 1: artificial variables n..n+m-1
    ncols = n + m
    T = []
    for i in range(m):
        row = A[i] + [Fraction(0)] * m + [b[i]]
        row[n + i] = Fraction(1)
        T.append(row)
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    # express phase-1 cost in terms of nonbasic vars
    for i in range(m):
        cost = [a - bb for a, bb in zip(cost, T[i])]
    T.append(cost)
    basis = list(range(n, n + m))
    while _bland_pivot(T, basis, m, ncols):
        pass
    if T[m][ncols] != 0:  # phase-1 optimum is -sum(artificials)
        raise Infeasible()
    # drive artificial variables out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            enter = next((j for j in range(n) if T[i][j] != 0), None)
            if enter is None:
                continue  # redundant row; artificial stays basic at zero
            piv = T[i][enter]
            T[i] = [x / piv for x in T[i]]
            for r in range(m + 1):
                if r != i and T[r][enter] != 0:
                    f = T[r][enter]
                    T[r] = [a - f * bb for a, bb in zip(T[r], T[i])]
            basis[i] = enter
    # phase 2: swap in the real objective, restricted to original columns
    T2 = [row[:n] + [row[ncols]] for row in T[:m]]
    cost = c + [Fraction(0)]
    for i in range(m):
        if basis[i] < n and cost[basis[i]] != 0:
            f = cost[basis[i]]
            cost = [a - f * bb for a, bb in zip(cost, T2[i])]
    T2.append(cost)
    while _bland_pivot(T2, basis, m, n):
        pass
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T2[i][n]
    obj = sum(ci * xi for ci, xi in zip(c, x))
    return x, obj


def feasible_point(A, b):
    """A point with A x = b, x >= 0, or None."""
    try:
        x, _ = simplex_solve(A, b, [Fraction(0)] * len(A[0]))
        return x
    except Infeasible:
        return None


class MaxFlow:
    """Dinic's algorithm over exact integer capacities."""

    def __init__(self, n):
        self.n = n
        self.adj = [[] for _ in range(n)]

    def add_edge(self, u, v, cap):
        self.adj[u].append([v, cap, len(self.adj[v])])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1])

    def _bfs(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        queue = [s]
        for u in queue:
            for e in self.adj[u]:
                if e[1] > 0 and level[e[0]] < 0:
                    level[e[0]] = level[u] + 1
                    queue.append(e[0])
        self.level = level
        return level[t] >= 0

    def _dfs(self, u, t, f):
        if u == t:
            return f
        while self.it[u] < len(self.adj[u]):
            e = self.adj[u][self.it[u]]
            v = e[0]
            if e[1] > 0 and self.level[v] == self.level[u] + 1:
                d = self._dfs(v, t, min(f, e[1]))
                if d > 0:
                    e[1] -= d
                    self.adj[v][e[2]][1] += d
                    return d
            self.it[u] += 1
        return 0

    def max_flow(self, s, t):
        flow = 0
        while self._bfs(s, t):
            self.it = [0] * self.n
            while True:
                f = self._dfs(s, t, float("inf"))
                if f == 0:
                    break
                flow += f
        return flow
