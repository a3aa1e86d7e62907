"""Linear matroids: a matrix plus one label per column."""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from . import exact_linalg as la
from .errors import ContractLoopError, InputError
from .exact_linalg import ExactMatrix


class LinearMatroid:
    """Column matroid of ``rep`` with ground set ``labels``.

    Instances are immutable; every operation returns a new matroid.  Flats
    are never materialised, closure questions go through `in_span`.
    """

    __slots__ = ("rep", "labels", "_index")

    def __init__(self, rep: ExactMatrix, labels: Sequence[Hashable] | None = None):
        if labels is None:
            labels = range(rep.ncols)
        labels = tuple(labels)
        if len(labels) != rep.ncols:
            raise InputError(f"{len(labels)} labels for {rep.ncols} columns")
        index = {e: j for j, e in enumerate(labels)}
        if len(index) != len(labels):
            raise InputError("matroid labels must be distinct")
        self.rep = rep
        self.labels = labels
        self._index = index

    @classmethod
    def identity(cls, labels: Sequence[Hashable], domain=la.RATIONAL) -> "LinearMatroid":
        labels = tuple(labels)
        return cls(ExactMatrix.identity(len(labels), domain), labels)

    @property
    def domain(self):
        return self.rep.domain

    @property
    def rank(self) -> int:
        return la.rank(self.rep)

    def __len__(self):
        return len(self.labels)

    def __contains__(self, e):
        return e in self._index

    def index(self, e) -> int:
        try:
            return self._index[e]
        except (KeyError, TypeError):
            raise InputError(f"unknown matroid element {e!r}") from None

    def column(self, e) -> tuple:
        return self.rep.column(self.index(e))

    def rank_of(self, elems: Iterable[Hashable]) -> int:
        return la.rank(self.rep, [self.index(e) for e in elems])

    def is_independent(self, elems: Iterable[Hashable]) -> bool:
        elems = list(elems)
        return self.rank_of(elems) == len(elems)

    def in_span(self, target, elems: Iterable[Hashable]) -> bool:
        """Whether ``target`` (an element label or a raw vector) lies in the
        span of ``elems``."""
        gens = [self.index(e) for e in elems]
        if isinstance(target, (tuple, list)):
            return la.in_span(self.rep, target, gens)
        return la.in_span(self.rep, self.index(target), gens)

    def is_loop(self, e) -> bool:
        return not any(self.column(e))

    def is_coloop(self, e) -> bool:
        j = self.index(e)
        others = [i for i in range(len(self.labels)) if i != j]
        return la.rank(self.rep, others) == la.rank(self.rep) - 1

    def delete(self, e) -> "LinearMatroid":
        j = self.index(e)
        return LinearMatroid(self.rep.drop_column(j), self.labels[:j] + self.labels[j + 1:])

    def contract(self, e) -> "LinearMatroid":
        """X/e.  Pivots on the first nonzero entry of column ``e``, clears the
        column from every other row, drops the pivot row and the column, then
        keeps a row basis so that rows == rank."""
        j = self.index(e)
        col = self.rep.column(j)
        piv = next((i for i, x in enumerate(col) if x), None)
        if piv is None:
            raise ContractLoopError(f"cannot contract loop {e!r}")
        dom = self.domain
        prow = self.rep.rows[piv]
        inv = dom.inv(prow[j])
        rows = []
        for i, row in enumerate(self.rep.rows):
            if i == piv:
                continue
            f = row[j]
            if f:
                f = dom.reduce(f * inv)
                row = tuple(dom.reduce(x - f * y) for x, y in zip(row, prow))
            rows.append(row[:j] + row[j + 1:])
        rep = ExactMatrix._trusted(rows, self.rep.ncols - 1, dom)
        return LinearMatroid(la.row_basis(rep), self.labels[:j] + self.labels[j + 1:])

    def move_column(self, e, vec: Sequence) -> "LinearMatroid":
        """Replace the vector of ``e`` by ``vec``; labels are unchanged."""
        return LinearMatroid(self.rep.with_column(self.index(e), vec), self.labels)

    def restrict(self, elems: Iterable[Hashable]) -> "LinearMatroid":
        """Deletion of everything outside ``elems`` (kept in label order)."""
        keep = set(elems)
        for e in keep:
            self.index(e)
        cols = [j for j, e in enumerate(self.labels) if e in keep]
        return LinearMatroid(self.rep.select_columns(cols),
                             [self.labels[j] for j in cols])

    def compact(self) -> "LinearMatroid":
        """Same matroid with the representation trimmed to a row basis."""
        rep = la.row_basis(self.rep)
        return self if rep is self.rep else LinearMatroid(rep, self.labels)

    def __eq__(self, other):
        if not isinstance(other, LinearMatroid):
            return NotImplemented
        return self.labels == other.labels and self.rep == other.rep

    def __hash__(self):
        return hash((self.labels, self.rep))

    def __repr__(self):
        return f"LinearMatroid(labels={list(self.labels)!r}, rank={self.rank}, domain={self.domain})"
