"""Sparse exact linear algebra over the rationals.

Matrices are stored as dicts keyed by (row, col) with nonzero Fraction
entries.  Rank comes from a fraction-free Bareiss elimination on a
denominator-cleared integer copy with sparsest-column pivoting; a second,
deliberately different elimination (plain rational RREF, leftmost-column
pivoting) backs the nullspace and serves as an independent cross-check
route in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .poly import as_scalar


class ExactMatrix:

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                self.set(r, c, v)

    @classmethod
    def from_columns(cls, nrows, columns):
        """Build from an iterable of sparse columns (dicts row -> value)."""
        cols = list(columns)
        m = cls(nrows, len(cols))
        for c, col in enumerate(cols):
            for r, v in col.items():
                m.set(r, c, v)
        return m

    def set(self, r, c, v):
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError((r, c))
        v = as_scalar(v)
        if v:
            self.entries[(r, c)] = v
        else:
            self.entries.pop((r, c), None)

    def get(self, r, c):
        return self.entries.get((r, c), Fraction(0))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def transpose(self):
        out = ExactMatrix(self.ncols, self.nrows)
        for (r, c), v in self.entries.items():
            out.entries[(c, r)] = v
        return out

    def mul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %s x %s" % (self.shape, other.shape))
        # index other by row for the sparse product
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = ExactMatrix(self.nrows, other.ncols)
        acc = {}
        for (r, k), u in self.entries.items():
            for c, v in by_row.get(k, ()):
                key = (r, c)
                acc[key] = acc.get(key, Fraction(0)) + u * v
        for key, v in acc.items():
            if v:
                out.entries[key] = v
        return out

    def _integer_rows(self):
        """Rows scaled to integers (row scaling preserves rank)."""
        rows = {}
        for (r, c), v in self.entries.items():
            rows.setdefault(r, {})[c] = v
        out = []
        for r, row in rows.items():
            den = 1
            for v in row.values():
                den = den * v.denominator // gcd(den, v.denominator)
            ints = {c: int(v * den) for c, v in row.items()}
            g = 0
            for v in ints.values():
                g = gcd(g, abs(v))
            if g > 1:
                ints = {c: v // g for c, v in ints.items()}
            out.append(ints)
        return out

    def rank(self):
        """Fraction-free Bareiss elimination with sparsest-column pivoting."""
        rows = self._integer_rows()
        rank = 0
        prev = 1
        active_cols = set()
        for row in rows:
            active_cols.update(row)
        while rows:
            counts = {}
            for row in rows:
                for c in row:
                    counts[c] = counts.get(c, 0) + 1
            if not counts:
                break
            col = min(counts, key=lambda c: (counts[c], c))
            piv_i = min(
                (i for i, row in enumerate(rows) if col in row),
                key=lambda i: (len(rows[i]), i),
            )
            piv_row = rows.pop(piv_i)
            piv = piv_row[col]
            new_rows = []
            for row in rows:
                if col in row:
                    f = row.pop(col)
                    merged = {}
                    for c in set(row) | set(piv_row):
                        if c == col:
                            continue
                        v = row.get(c, 0) * piv - f * piv_row.get(c, 0)
                        v //= prev
                        if v:
                            merged[c] = v
                    if merged:
                        new_rows.append(merged)
                elif row:
                    new_rows.append({c: v * piv // prev for c, v in row.items()})
            rows = new_rows
            prev = piv
            rank += 1
        return rank

    def _rref(self):
        """Plain rational row reduction, leftmost-column pivoting.

        Returns (rref rows as dicts, pivot column list).
        """
        rows = {}
        for (r, c), v in self.entries.items():
            rows.setdefault(r, {})[c] = v
        work = [dict(row) for row in rows.values() if row]
        done = []
        pivots = []
        for col in range(self.ncols):
            piv_i = None
            for i, row in enumerate(work):
                if col in row:
                    piv_i = i
                    break
            if piv_i is None:
                continue
            piv_row = work.pop(piv_i)
            pv = piv_row[col]
            piv_row = {c: v / pv for c, v in piv_row.items()}
            for rowset in (work, done):
                for i, row in enumerate(rowset):
                    f = row.get(col)
                    if f is None:
                        continue
                    merged = {}
                    for c in set(row) | set(piv_row):
                        v = row.get(c, Fraction(0)) - f * piv_row.get(c, Fraction(0))
                        if v:
                            merged[c] = v
                    rowset[i] = merged
            work = [row for row in work if row]
            done = [row for row in done if row]
            done.append(piv_row)
            pivots.append(col)
        return done, pivots

    def rref_rank(self):
        _, pivots = self._rref()
        return len(pivots)

    def nullspace_info(self):
        """Canonical kernel basis plus the free column each vector owns.

        Every basis vector has entry 1 at its own free column and entry 0
        at every other free column.
        """
        done, pivots = self._rref()
        pivot_by_col = {}
        for row, col in zip(done, pivots):
            pivot_by_col[col] = row
        free = [c for c in range(self.ncols) if c not in pivot_by_col]
        basis = []
        for fc in free:
            vec = [Fraction(0)] * self.ncols
            vec[fc] = Fraction(1)
            for col, row in pivot_by_col.items():
                v = row.get(fc)
                if v:
                    vec[col] = -v
            basis.append(tuple(vec))
        return basis, free

    def nullspace(self):
        return self.nullspace_info()[0]

    def __repr__(self):
        return "ExactMatrix(%dx%d, %d nonzero)" % (self.nrows, self.ncols, len(self.entries))


def rank_of_vectors(vectors, length):
    """Rank of a list of coordinate vectors (tuples/lists of scalars)."""
    m = ExactMatrix(len(vectors), length)
    for r, vec in enumerate(vectors):
        for c, v in enumerate(vec):
            if v:
                m.set(r, c, v)
    return m.rank()
