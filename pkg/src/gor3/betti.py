"""Graded Betti numbers of Artinian quotients via Koszul homology.

beta_{i,j} is the degree-j dimension of the i-th homology of the Koszul
complex on the variables tensored with R/I; the quotient is handled through
its standard monomials per degree.  Everything is bounded because the
quotient is Artinian: the top twist is socle degree + n.  The exterior
basis is ordered lexicographically on index subsets, frozen for
determinism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .ideals import GradedIdeal
from .linalg import ExactMatrix
from .monomials import monomial_index, monomials_of_degree


@dataclass
class BettiTable:
    n: int
    entries: dict = dc_field(default_factory=dict)

    def beta(self, i, j) -> int:
        return self.entries.get((i, j), 0)

    def nonzero(self):
        return sorted(self.entries.items())

    def triples(self):
        return [(i, j, v) for (i, j), v in self.nonzero()]

    def max_shift(self) -> int:
        return max((j for (_, j) in self.entries), default=0)

    def column_shifts(self, i) -> dict:
        """shift -> multiplicity in homological position i."""
        return {j: v for (k, j), v in self.entries.items() if k == i}

    def is_gorenstein_symmetric(self) -> bool:
        """beta_{i,j} == beta_{n-i, D-j} with D the top shift."""
        top = self.column_shifts(self.n)
        if len(top) != 1:
            return False
        D = next(iter(top))
        for (i, j), v in self.entries.items():
            if self.beta(self.n - i, D - j) != v:
                return False
        return True

    def staircase(self) -> str:
        """Text layout with rows j - i and columns i."""
        if not self.entries:
            return "(empty)"
        imax = max(i for (i, _) in self.entries)
        rows = sorted({j - i for (i, j) in self.entries})
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, len(str(imax)), 1)
        lines = []
        header = "      " + " ".join(f"{i:>{width}}" for i in range(imax + 1))
        lines.append(header)
        for r in range(rows[0], rows[-1] + 1):
            cells = []
            for i in range(imax + 1):
                v = self.beta(i, i + r)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>4}: " + " ".join(cells))
        return "\n".join(lines)

    def as_dict(self):
        return {"n": self.n,
                "triples": [[i, j, v] for i, j, v in self.triples()]}


def _quotient_data(I: GradedIdeal, t_max):
    """Per-degree standard-monomial dimensions and the multiplication maps
    x_k : (R/I)_t -> (R/I)_{t+1} as column lists."""
    n, field = I.n, I.field
    pieces = [I.graded_piece(t) for t in range(t_max + 2)]
    dims = [p.ambient_dim - p.dim for p in pieces]
    mult = []
    for t in range(t_max + 1):
        piece = pieces[t]
        above = pieces[t + 1]
        std_src = piece.standard_columns
        src_monos = monomials_of_degree(n, t)
        idx_above = monomial_index(n, t + 1)
        maps_t = []
        for k in range(n):
            cols = []
            for c in std_src:
                e = list(src_monos[c])
                e[k] += 1
                cols.append(above.reduce_monomial_std(idx_above[tuple(e)]))
            maps_t.append(cols)
        mult.append(maps_t)
    return dims, mult


def betti_table(I: GradedIdeal, j_max=None) -> BettiTable:
    """Exact graded Betti numbers of R/I (I Artinian)."""
    n, field = I.n, I.field
    s = I.socle_report().socle_degree
    top = s + n
    if j_max is None:
        j_max = top
    elif j_max < top:
        raise ValueError(
            f"j_max = {j_max} is below the top twist {top}; entries would be cut off")
    dims, mult = _quotient_data(I, j_max)
    subsets = {i: list(itertools.combinations(range(n), i))
               for i in range(n + 1)}

    def chain_dim(i, j):
        t = j - i
        if i < 0 or i > n or t < 0 or t > j_max:
            return 0
        return len(subsets[i]) * dims[t]

    def differential_rank(i, j):
        """Rank of K_i(j) -> K_{i-1}(j)."""
        t = j - i
        if i < 1 or i > n or t < 0 or t + 1 > j_max:
            return 0
        rows_dim = chain_dim(i - 1, j)
        cols_dim = chain_dim(i, j)
        if rows_dim == 0 or cols_dim == 0:
            return 0
        src = subsets[i]
        tgt_pos = {S: a for a, S in enumerate(subsets[i - 1])}
        d_src = dims[t]
        d_tgt = dims[t + 1]
        zero = field.zero
        rows = [[zero] * cols_dim for _ in range(rows_dim)]
        for b, S in enumerate(src):
            for pos, k in enumerate(S):
                T = tuple(x for x in S if x != k)
                a = tgt_pos[T]
                block = mult[t][k]
                negate = pos % 2 == 1
                for cc in range(d_src):
                    col_vals = block[cc]
                    col_index = b * d_src + cc
                    base = a * d_tgt
                    for rr in range(d_tgt):
                        v = col_vals[rr]
                        if not field.is_zero(v):
                            rows[base + rr][col_index] = (
                                field.neg(v) if negate else v)
        return ExactMatrix(field, rows, cols=cols_dim).rank()

    table = {}
    for j in range(j_max + 1):
        ranks = [differential_rank(i, j) for i in range(n + 2)]
        for i in range(n + 1):
            beta = chain_dim(i, j) - ranks[i] - ranks[i + 1]
            if beta:
                table[(i, j)] = beta
    return BettiTable(n=n, entries=table)


def has_linear_resolution(I: GradedIdeal) -> bool:
    """Linear resolution: syzygies in degree d+i-1 and a single top twist
    at 2d+n-2, for an ideal equigenerated in degree d."""
    eq = I.is_equigenerated()
    if eq is None:
        from .ideals import NotEquigeneratedError

        raise NotEquigeneratedError(
            "linear resolution is defined for equigenerated ideals")
    d, _ = eq
    n = I.n
    table = betti_table(I)
    for (i, j), v in table.entries.items():
        if i == 0:
            continue
        if 1 <= i <= n - 1 and j != d + i - 1:
            return False
        if i == n and (j != 2 * d + n - 2 or v != 1):
            return False
    return table.beta(n, 2 * d + n - 2) == 1


def socle_decomposition_from_betti(I: GradedIdeal) -> dict:
    """Socle degrees with multiplicities, read off the top Betti shifts."""
    table = betti_table(I)
    return {j - I.n: v for (i, j), v in table.entries.items() if i == I.n}
