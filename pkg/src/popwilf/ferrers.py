"""Ferrers boards, transversals, containment inside a board, shape-Wilf checks.

Boards are drawn in French notation: rows lengthen toward the bottom, and
row 1 is the bottom (longest) row.  Cell (i, j) is row i, column j.  A
transversal assigns one 1 per row and column, stored column -> row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .permutation import Permutation


class NotShapeWilfEquivalentError(ValueError):
    """Board-level avoider counts differ where a pairing was requested."""


@dataclass(frozen=True)
class FerrersBoard:
    """Weakly decreasing positive row lengths, bottom row first.

    The empty board () is allowed; the coloring bijections squash down to
    it when every cell is gray.
    """

    row_lengths: tuple

    def __post_init__(self):
        rl = tuple(int(x) for x in self.row_lengths)
        object.__setattr__(self, "row_lengths", rl)
        if any(x <= 0 for x in rl):
            raise ValueError("row lengths must be positive")
        if any(a < b for a, b in zip(rl, rl[1:])):
            raise ValueError("row lengths must weakly decrease bottom to top")

    @property
    def n_rows(self):
        return len(self.row_lengths)

    @property
    def n_cols(self):
        return self.row_lengths[0] if self.row_lengths else 0

    def row_length(self, r):
        return self.row_lengths[r - 1]

    def column_height(self, c):
        return sum(1 for x in self.row_lengths if x >= c)

    def contains_cell(self, r, c):
        return 1 <= r <= self.n_rows and 1 <= c <= self.row_lengths[r - 1]

    @property
    def supports_transversal(self):
        n = self.n_rows
        if self.n_cols != n:
            return False
        return all(self.row_lengths[i - 1] >= n + 1 - i for i in range(1, n + 1))

    @property
    def is_square(self):
        return len(set(self.row_lengths)) <= 1 and self.n_cols == self.n_rows

    @classmethod
    def square(cls, n):
        return cls((n,) * n)

    @classmethod
    def from_string(cls, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError("board notation is a parenthesized list, e.g. (5,5,4,3,3)")
        return cls(tuple(int(tok) for tok in text[1:-1].split(",")))

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.row_lengths) + ")"


@dataclass(frozen=True)
class Transversal:
    """One 1 per row and per column; rows[c-1] is the row of column c's 1."""

    board: FerrersBoard
    rows: tuple

    def __post_init__(self):
        rows = tuple(int(x) for x in self.rows)
        object.__setattr__(self, "rows", rows)
        n = self.board.n_rows
        if len(rows) != self.board.n_cols or sorted(rows) != list(range(1, n + 1)):
            raise ValueError("assignment is not a row/column bijection")
        for c, r in enumerate(rows, start=1):
            if not self.board.contains_cell(r, c):
                raise ValueError(f"cell ({r},{c}) lies outside the board")

    def row_of(self, c):
        return self.rows[c - 1]

    def column_of(self, r):
        return self.rows.index(r) + 1

    def as_permutation(self):
        return Permutation(self.rows)

    def __str__(self):
        return str(self.as_permutation())


def boards(n):
    """All n-row, n-column boards supporting a transversal, in ascending
    lexicographic order of their row-length tuples."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []

    def grow(prefix):
        i = len(prefix) + 1
        if i > n:
            out.append(FerrersBoard(tuple(prefix)))
            return
        lo = n + 1 - i
        hi = prefix[-1] if prefix else n
        for lam in range(lo, hi + 1):
            grow(prefix + [lam])

    grow([n])
    # grow() emits in descending-suffix order under the loop above; re-sort
    out.sort(key=lambda b: b.row_lengths)
    return out


def transversals(board):
    """Every transversal exactly once, lexicographic by the row assignment."""
    if not board.supports_transversal:
        return
    n = board.n_rows
    used = [False] * (n + 1)
    rows = []

    def place(c):
        if c > n:
            yield Transversal(board, tuple(rows))
            return
        for r in range(1, n + 1):
            if not used[r] and board.contains_cell(r, c):
                used[r] = True
                rows.append(r)
                yield from place(c + 1)
                rows.pop()
                used[r] = False

    yield from place(1)


def contains_classical_in_board(T, sigma):
    """Board containment of a classical pattern: some row set R and column
    set C induce sigma's permutation matrix with all |R|x|C| cells inside."""
    sigma = tuple(sigma)
    m = len(sigma)
    n = T.board.n_cols
    if m > n:
        return False
    for cols in combinations(range(1, n + 1), m):
        rows = [T.row_of(c) for c in cols]
        # all m^2 rectangle cells inside reduces to the top-right corner
        if not T.board.contains_cell(max(rows), cols[-1]):
            continue
        order = sorted(rows)
        if all(order.index(rows[j]) + 1 == sigma[j] for j in range(m)):
            return True
    return False


def contains_pop_in_board(T, p):
    """Board containment of a pattern: value order constrained on comparable
    labels only, all k^2 rectangle cells inside the board."""
    k = p.size
    n = T.board.n_cols
    if k > n:
        return False
    pairs = p.hasse_pairs()
    for cols in combinations(range(1, n + 1), k):
        rows = [T.row_of(c) for c in cols]
        if not T.board.contains_cell(max(rows), cols[-1]):
            continue
        if all(rows[a - 1] < rows[b - 1] for a, b in pairs):
            return True
    return False


def essential_occurrence(T, p):
    """Reduced witness of containment on a square board (drops the rows of
    the isolated-label columns).  Returns (rows, columns) or None.

    Rows list the 1s of the non-isolated columns; every rectangle cell is
    inside the board automatically on a square.  Exists iff T contains p.
    """
    if not T.board.is_square:
        raise ValueError("essential occurrences are defined on square boards")
    iso = p.isolated_vertices()
    return _essential_in_region(T, p, iso, row_floor=0, col_floor=0)


def _essential_in_region(T, p, designated_isolated, row_floor, col_floor):
    """Essential occurrence with all columns > col_floor and the non-isolated
    1s in rows > row_floor; isolation designation supplied by the caller."""
    k = p.size
    n = T.board.n_cols
    iso = frozenset(designated_isolated)
    active = [j for j in range(1, k + 1) if j not in iso]
    pairs = [(a, b) for a, b in p.hasse_pairs() if a in active and b in active]
    for cols in combinations(range(col_floor + 1, n + 1), k):
        rows = []
        ok = True
        for j in active:
            r = T.row_of(cols[j - 1])
            if r <= row_floor:
                ok = False
                break
            rows.append(r)
        if not ok:
            continue
        by_label = {j: T.row_of(cols[j - 1]) for j in active}
        if all(by_label[a] < by_label[b] for a, b in pairs):
            return tuple(sorted(rows)), cols
    return None


def count_board_avoiders(board, p):
    return sum(1 for T in transversals(board) if not contains_pop_in_board(T, p))


@dataclass(frozen=True)
class ShapeWilfReport:
    pop_a: str
    pop_b: str
    n_max: int
    rows: tuple  # (board string, count_a, count_b)

    @property
    def equivalent(self):
        return all(a == b for _, a, b in self.rows)

    @property
    def counterexample(self):
        for name, a, b in self.rows:
            if a != b:
                return name
        return None

    def to_json(self):
        return json.dumps({
            "pop_a": self.pop_a,
            "pop_b": self.pop_b,
            "n_max": self.n_max,
            "boards": [{"board": name, "count_a": a, "count_b": b, "equal": a == b}
                       for name, a, b in self.rows],
            "equivalent": self.equivalent,
            "counterexample": self.counterexample,
        }, indent=2)


def shape_wilf_check(p, q, n_max, budget=6):
    """Compare transversal-avoider counts on every board of size <= n_max."""
    from .permutation import BudgetError, _pop_label

    if budget is not None and n_max > budget:
        raise BudgetError(
            f"board sweep size {n_max} exceeds budget {budget}; raise it explicitly")
    rows = []
    for n in range(1, n_max + 1):
        for board in boards(n):
            rows.append((str(board),
                         count_board_avoiders(board, p),
                         count_board_avoiders(board, q)))
    return ShapeWilfReport(_pop_label(p), _pop_label(q), n_max, tuple(rows))
