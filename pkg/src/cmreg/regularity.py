"""Castelnuovo-Mumford regularity via minimal Betti tables over Q, plus an
independent linear-algebra oracle.

Regularity of an A-module is always computed after passage to Q (adjoin the
defining relations to the presentation): the syzygy formula
reg(M) = max{j - i : beta_ij != 0} needs a minimal resolution over the
polynomial ring, and the regularities over A and Q agree.

The oracle computes beta_ij = dim Tor_i(M, K)_j from the Koszul complex on
the variables, entirely by row reduction on graded pieces.  It shares no
code path with the Groebner engine, which is the point.
"""

from __future__ import annotations

from itertools import combinations

from .freemod import (
    GradedFreeModule,
    ModulePresentation,
    free_presentation,
    map_from_columns,
    piece_basis,
    span_matrix,
    vec_degree,
    vector_coords,
)
from .groebner import DEFAULT_DEGREE_CAP
from .linalg import rank, reduce_vector, row_reduce
from .resolution import BettiTable, resolve_over_Q
from .rings import QuotientRing, monomial_mul


def present_over_Q(M: ModulePresentation) -> ModulePresentation:
    """The same graded module, presented over the ambient polynomial ring:
    relations of M plus z_j times each cover basis element."""
    ring = M.ring
    if not isinstance(ring, QuotientRing):
        return M
    Q = ring.base
    F = GradedFreeModule(Q, M.cover.twists)
    cols = [tuple(c) for c in M.relations.columns()]
    zero = Q.zero
    for z in ring.relations:
        for k in range(F.rank):
            cols.append(tuple(z if i == k else zero for i in range(F.rank)))
    if not cols:
        return free_presentation(Q, F.twists)
    twists = tuple(vec_degree(F, c) for c in cols)
    return ModulePresentation(map_from_columns(twists, F, cols))


def regularity(M: ModulePresentation, degree_cap=DEFAULT_DEGREE_CAP):
    """max{j - i} over the minimal Betti table; NEG_INF for the zero module."""
    MQ = present_over_Q(M)
    R = resolve_over_Q(MQ, minimal=True, degree_cap=degree_cap)
    return BettiTable.from_resolution(R).regularity()


def reg_of_shift(M: ModulePresentation, a: int, degree_cap=DEFAULT_DEGREE_CAP):
    """regularity(M(a)), which equals regularity(M) - a."""
    return regularity(M.shift(a), degree_cap=degree_cap)


# -- graded pieces of a Q-presentation, by pure linear algebra ----------------


class GradedPieces:
    """Exact graded pieces M_s of a Q-presentation on a degree window.

    Each piece gets a coordinate basis (the ambient monomial basis columns
    away from the relation-rowspace pivots) plus multiplication maps by the
    variables, all through row reduction.
    """

    def __init__(self, M: ModulePresentation, lo: int, hi: int):
        ring = M.ring
        if isinstance(ring, QuotientRing):
            raise ValueError("GradedPieces expects a presentation over Q")
        self.M = M
        self.ring = ring
        self.field = ring.field
        self.lo = lo
        self.hi = hi
        self._amb = {}
        self._amb_index = {}
        self._rref = {}
        self._free_cols = {}
        self._mult = {}
        F = M.cover
        cols = M.relations.columns()
        for s in range(lo, hi + 1):
            basis = piece_basis(F, s)
            rows = span_matrix(F, cols, s, basis)
            rref, piv = row_reduce(rows, self.field)
            pivset = set(piv)
            self._amb[s] = basis
            self._amb_index[s] = {be: i for i, be in enumerate(basis)}
            self._rref[s] = (rref, piv)
            self._free_cols[s] = [c for c in range(len(basis)) if c not in pivset]

    def dim(self, s: int) -> int:
        if s < self.lo or s > self.hi:
            return 0
        return len(self._free_cols[s])

    def coords(self, v, s: int):
        """Coordinates of a degree-s vector of the cover in the piece basis
        of M_s (after killing the relation rowspace)."""
        amb = vector_coords(self.M.cover, v, s, self._amb[s])
        rref, piv = self._rref[s]
        red = reduce_vector(amb, rref, piv, self.field)
        return [red[c] for c in self._free_cols[s]]

    def mult_matrix(self, var: int, s: int):
        """Matrix of x_var: M_s -> M_{s+1}, columns indexed by the M_s
        basis, rows by the M_{s+1} basis."""
        key = (var, s)
        if key in self._mult:
            return self._mult[key]
        n_src = self.dim(s)
        n_tgt = self.dim(s + 1)
        step = tuple(1 if i == var else 0 for i in range(self.ring.nvars))
        cols = []
        for c in self._free_cols.get(s, []):
            k, e = self._amb[s][c]
            amb = [self.field.zero] * len(self._amb[s + 1])
            amb[self._amb_index[s + 1][(k, monomial_mul(e, step))]] = self.field.one
            rref, piv = self._rref[s + 1]
            red = reduce_vector(amb, rref, piv, self.field)
            cols.append([red[i] for i in self._free_cols[s + 1]])
        out = [[cols[c][r] for c in range(n_src)] for r in range(n_tgt)]
        self._mult[key] = out
        return out


def _koszul_subsets(d: int, i: int):
    return list(combinations(range(d), i))


def _koszul_matrix(pieces: GradedPieces, i: int, j: int):
    """Matrix of the Koszul differential K_i -> K_{i-1} on internal degree j,
    with (K_i)_j = sum over i-subsets S of M_{j-i}.  For i = 0 the target is
    zero and an empty matrix with the right column count is returned."""
    d = pieces.ring.nvars
    field = pieces.field
    srcs = _koszul_subsets(d, i)
    sdim = pieces.dim(j - i)
    ncols = sdim * len(srcs)
    if i == 0:
        return [], 0, ncols
    tgts = _koszul_subsets(d, i - 1)
    tgt_index = {S: t for t, S in enumerate(tgts)}
    tdim = pieces.dim(j - i + 1)
    nrows = tdim * len(tgts)
    rows = [[field.zero] * ncols for _ in range(nrows)]
    for si, S in enumerate(srcs):
        for r, var in enumerate(S):
            T = tuple(v for v in S if v != var)
            ti = tgt_index[T]
            mm = pieces.mult_matrix(var, j - i)
            sign_neg = r % 2 == 1
            for a in range(tdim):
                row = rows[ti * tdim + a]
                for b in range(sdim):
                    val = mm[a][b]
                    if sign_neg:
                        val = field.neg(val)
                    row[si * sdim + b] = field.add(row[si * sdim + b], val)
    return rows, nrows, ncols


def betti_oracle(M: ModulePresentation, deg_cap=None) -> BettiTable:
    """Graded Betti numbers beta_ij for j <= deg_cap by Koszul homology:
    beta_ij = dim H_i(K(x) tensor M)_j, all linear algebra on graded pieces.

    The default window grows with the relation degrees as well as the
    generator degrees, since second syzygies can sit as high as a sum of
    two relation degrees (two generators of an ideal with coprime leading
    forms already show this).  A smaller explicit cap sets the partial flag.
    """
    MQ = present_over_Q(M)
    ring = MQ.ring
    d = ring.nvars
    twists = MQ.cover.twists
    if not twists:
        return BettiTable({}, minimal=True, window=None, partial=False)
    lo = min(twists)
    rel_twists = sorted(MQ.relations.source.twists, reverse=True)
    recommended = max(list(twists) + rel_twists) + d + 2
    if len(rel_twists) >= 2:
        pair = rel_twists[0] + rel_twists[1] - lo
        recommended = max(recommended, pair + d + 2)
    if deg_cap is None:
        deg_cap = recommended
    partial = deg_cap < recommended
    pieces = GradedPieces(MQ, lo - 1, deg_cap + 1)
    entries = {}
    for i in range(d + 1):
        for j in range(lo, deg_cap + 1):
            di, _, nc_i = _koszul_matrix(pieces, i, j)
            dnext, _, _ = _koszul_matrix(pieces, i + 1, j)
            ker = nc_i - rank(di, pieces.field)
            b = ker - rank(dnext, pieces.field)
            if b:
                entries[(i, j)] = b
    return BettiTable(
        entries, minimal=True, window=(lo, deg_cap), partial=partial
    )
