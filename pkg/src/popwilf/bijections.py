"""The four constructive maps, each paired with its inverse.

* an insertion encoding over {0,1,2} giving the transversal bijection
  between the avoiders of {132,231,321} and of {123,213,312} on any board;
* a West-style rank bijection on permutations (rank <= k-2 entries pinned,
  top-rank entries redistributed);
* a three-step transposition pipeline reducing one Wilf pair to the
  West map;
* two gray/white coloring bijections on square-board transversals, one for
  patterns split below an isolated block, one for disjoint sums.

Every map is validated by exhaustive round-trip and image-membership
sweeps in the test suite; the constructions themselves only assume their
stated hypotheses, which the checkers here enforce.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ferrers import (
    FerrersBoard,
    NotShapeWilfEquivalentError,
    Transversal,
    _essential_in_region,
    contains_pop_in_board,
    transversals,
)
from .permutation import (
    Permutation,
    RankOverflowError,
    _occurrence_search,
    _rank_at,
    left_multiply_adjacent,
)
from .poset import LabeledPoset, delete_labels, parse_pop, standardise, induced_subposet


class HypothesisError(ValueError):
    """The supplied pattern pair does not satisfy a map's preconditions."""


class EncodingUndefinedError(ValueError):
    """Encoding was requested for a transversal containing the pattern."""


class MalformedWordError(ValueError):
    """Letter 1/2 at a forced stage, or 0 at a free stage."""


# --- insertion encoding ------------------------------------------------------

VARIANT_P = "p"              # avoid {123, 213, 312}; candidates first & second
VARIANT_P_PRIME = "p_prime"  # avoid {132, 231, 321}; candidates first & last

_VARIANT_POSETS = {
    VARIANT_P: parse_pop("pop 3: c[3>2], i[1]"),
    VARIANT_P_PRIME: parse_pop("pop 3: c[2>3], i[1]"),
}


def variant_poset(variant):
    try:
        return _VARIANT_POSETS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; use 'p' or 'p_prime'") from None


class EncodingWord(tuple):
    """Word over {0,1,2}: 0 at forced stages, 1/2 picking a suitable cell."""

    def __new__(cls, letters):
        letters = tuple(int(x) for x in letters)
        if any(x not in (0, 1, 2) for x in letters):
            raise ValueError("letters must be 0, 1 or 2")
        return super().__new__(cls, letters)

    @classmethod
    def from_string(cls, text):
        return cls(int(tok) for tok in text.strip().split(","))

    def __str__(self):
        return ",".join(str(x) for x in self)


class InsertionState:
    """Partial top-to-bottom insertion: placed 1s plus the gray row/column marks."""

    def __init__(self, board):
        self.board = board
        self.placed = []       # (row, col) in placement order, top row first
        self.gray_cols = set()

    @property
    def stage(self):
        return len(self.placed) + 1

    def top_white_row(self):
        return self.board.n_rows - len(self.placed)

    def white_cells(self):
        row = self.top_white_row()
        return [c for c in range(1, self.board.row_length(row) + 1)
                if c not in self.gray_cols]

    def place(self, col):
        row = self.top_white_row()
        cells = self.white_cells()
        if col not in cells:
            raise ValueError(f"column {col} is not white in row {row}")
        stage = self.stage
        self.placed.append((row, col))
        self.gray_cols.add(col)
        if len(cells) == 1 and self.gray_cols != set(range(1, stage + 1)):
            raise AssertionError(
                "gray prefix structure violated after a single-cell stage")

    def done(self):
        return len(self.placed) == self.board.n_rows

    def to_transversal(self):
        rows = [0] * self.board.n_cols
        for r, c in self.placed:
            rows[c - 1] = r
        return Transversal(self.board, tuple(rows))


def suitable_positions(state, variant):
    """Columns of the top white row where a 1 may go without creating the
    variant's pattern: the first and second white cells for 'p', the first
    and last for 'p_prime', cut to one by the width-one and rectangle rules.

    The rectangle trigger: a placed 1 strictly left of the first white cell
    in a row no higher than the second white cell's column height.  Such a 1
    closes the rectangle on any occurrence through the second candidate (for
    'p') or the first (for 'p_prime'), so only the other candidate survives.
    The trigger height is the second white cell's, not the last's: that is
    where the completion oracle localizes the binding corner.
    """
    cells = state.white_cells()
    if not cells:
        raise ValueError("no white cells remain in the top white row")
    if len(cells) == 1:
        return [cells[0]]
    c_first, c_second = cells[0], cells[1]
    height = state.board.column_height(c_second)
    forced = any(c < c_first and r <= height for r, c in state.placed)
    if variant == VARIANT_P:
        candidates = [cells[0], cells[1]]
    elif variant == VARIANT_P_PRIME:
        candidates = [cells[0], cells[-1]]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if forced:
        return [candidates[0]] if variant == VARIANT_P else [candidates[1]]
    return candidates


def _partial_contains(board, placed, p):
    """Does the partial filling already realize p (with the rectangle rule)?"""
    from itertools import combinations

    k = p.size
    if len(placed) < k:
        return False
    pairs = p.hasse_pairs()
    by_col = sorted(placed, key=lambda rc: rc[1])
    for combo in combinations(by_col, k):
        rows = [r for r, _ in combo]
        cols = [c for _, c in combo]
        if not board.contains_cell(max(rows), cols[-1]):
            continue
        if all(rows[a - 1] < rows[b - 1] for a, b in pairs):
            return True
    return False


def completion_avoids(state, variant):
    """Completion-existence oracle: can the remaining rows be filled so the
    final transversal avoids the variant's pattern?"""
    p = variant_poset(variant)
    board = state.board
    if _partial_contains(board, state.placed, p):
        return False
    if state.done():
        return True
    for col in state.white_cells():
        child = InsertionState(board)
        child.placed = list(state.placed)
        child.gray_cols = set(state.gray_cols)
        child.place(col)
        if completion_avoids(child, variant):
            return True
    return False


def oracle_suitable_positions(state, variant):
    """Suitable cells decided by the completion oracle instead of the rule."""
    out = []
    for col in state.white_cells():
        child = InsertionState(state.board)
        child.placed = list(state.placed)
        child.gray_cols = set(state.gray_cols)
        child.place(col)
        if completion_avoids(child, variant):
            out.append(col)
    return out


def certify_suitable_rule(board, variant):
    """Compare the constructive rule against the oracle at every reachable
    live insertion state; returns the list of disagreements."""
    disagreements = []

    def walk(state):
        if state.done():
            return
        rule = sorted(suitable_positions(state, variant))
        oracle = oracle_suitable_positions(state, variant)
        if rule != oracle:
            disagreements.append((str(board), [tuple(x) for x in state.placed],
                                  rule, oracle))
        for col in oracle:
            child = InsertionState(board)
            child.placed = list(state.placed)
            child.gray_cols = set(state.gray_cols)
            child.place(col)
            walk(child)

    walk(InsertionState(board))
    return disagreements


def encode(T, variant):
    """Replay T's 1s top to bottom, recording 0 at forced stages and 1/2 for
    the first/second suitable cell at free stages."""
    p = variant_poset(variant)
    if contains_pop_in_board(T, p):
        raise EncodingUndefinedError(
            f"transversal {T} contains the {variant} pattern; encoding undefined")
    state = InsertionState(T.board)
    letters = []
    while not state.done():
        row = state.top_white_row()
        col = T.column_of(row)
        candidates = suitable_positions(state, variant)
        if len(candidates) == 1:
            if col != candidates[0]:
                raise EncodingUndefinedError(
                    f"1 in row {row} sits at column {col}, not the forced column")
            letters.append(0)
        else:
            if col not in candidates:
                raise EncodingUndefinedError(
                    f"1 in row {row} sits at column {col}, not a suitable cell")
            letters.append(1 if col == candidates[0] else 2)
        state.place(col)
    return EncodingWord(letters)


def decode(word, board, variant):
    """Rebuild the unique avoiding transversal realizing the word."""
    word = EncodingWord(word)
    if len(word) != board.n_rows:
        raise MalformedWordError(
            f"word length {len(word)} does not match board size {board.n_rows}")
    state = InsertionState(board)
    for i, letter in enumerate(word, start=1):
        candidates = suitable_positions(state, variant)
        if letter == 0:
            if len(candidates) != 1:
                raise MalformedWordError(f"letter 0 at free stage {i}")
            col = candidates[0]
        else:
            if len(candidates) != 2:
                raise MalformedWordError(f"letter {letter} at forced stage {i}")
            col = candidates[letter - 1]
        state.place(col)
    return state.to_transversal()


def theorem16_map(T, inverse=False):
    """Board bijection between the avoiders of the two variants: encode under
    one variant, decode the same word under the other."""
    src, dst = (VARIANT_P_PRIME, VARIANT_P) if inverse else (VARIANT_P, VARIANT_P_PRIME)
    return decode(encode(T, src), T.board, dst)


# --- West-style rank bijection ----------------------------------------------


def _j_orientation(p, lo_label, hi_label):
    """'desc' when the occurrence ends value-descending (hi below lo),
    'asc' when ascending."""
    if (hi_label, lo_label) in p.relation:
        return "desc"
    if (lo_label, hi_label) in p.relation:
        return "asc"
    raise HypothesisError(f"labels {lo_label},{hi_label} are incomparable")


def _reconstruct(size, iso, low_rel, low, top_labels, j_pairs):
    from .poset import transitive_closure

    pairs = set(low_rel)
    pairs.update((x, t) for x in low for t in top_labels)
    pairs.update(j_pairs)
    return LabeledPoset(size, transitive_closure(pairs))


def west_hypotheses(p, p_prime):
    """Check the rank-bijection preconditions; returns the shared isolated set.

    Both patterns have size k with the same isolated labels I, k-2 not in I,
    labels k-1 and k above every label of [k-2] minus I, identical induced
    order on [k-2] minus I, and oppositely oriented chains on {k-1, k}.
    """
    k = p.size
    if p_prime.size != k or k < 2:
        raise HypothesisError("patterns must share a size k >= 2")
    iso = p.isolated_vertices()
    if iso != p_prime.isolated_vertices():
        raise HypothesisError("isolated vertex sets differ")
    if k - 2 >= 1 and (k - 2) in iso:
        raise HypothesisError(f"label {k - 2} must not be isolated")
    low = [x for x in range(1, k - 1) if x not in iso]
    for q in (p, p_prime):
        for x in low:
            if (x, k - 1) not in q.relation or (x, k) not in q.relation:
                raise HypothesisError(
                    f"labels k-1,k must sit above label {x} in both patterns")
    _, low_rel = induced_subposet(p, low)
    _, low_rel2 = induced_subposet(p_prime, low)
    if low_rel != low_rel2:
        raise HypothesisError("induced low-label posets differ")
    o1 = _j_orientation(p, k - 1, k)
    o2 = _j_orientation(p_prime, k - 1, k)
    if {o1, o2} != {"asc", "desc"}:
        raise HypothesisError("the {k-1,k} chains must be oriented oppositely")
    for q, o in ((p, o1), (p_prime, o2)):
        j_pair = {(k, k - 1)} if o == "desc" else {(k - 1, k)}
        if q != _reconstruct(k, iso, low_rel, low, (k - 1, k), j_pair):
            raise HypothesisError("pattern carries relations beyond the stated form")
    return iso


def _feasible(bounds, values):
    left = sorted(values)
    for b in bounds:
        pick = next((x for x in left if x > b), None)
        if pick is None:
            return False
        left.remove(pick)
    return True


def _fill(bounds, values, prefer_large):
    """Fill slots left to right with values above each slot's bound.

    Smallest-fitting is exchange-safe as is; largest-fitting checks that the
    remainder stays fillable before committing.
    """
    left = sorted(values)
    out = []
    for i, b in enumerate(bounds):
        pick = None
        if prefer_large:
            for x in reversed(left):
                if x > b and _feasible(bounds[i + 1:], [y for y in left if y != x]):
                    pick = x
                    break
        else:
            pick = next((x for x in left if x > b), None)
        if pick is None:
            raise ValueError("no admissible value for a slot; input violates the map's domain")
        left.remove(pick)
        out.append(pick)
    return out


def _rank_profile(w, p):
    """(slots, values, bounds): the rank-(k-1) positions, their entries, and
    per slot the value of the nearest rank-(k-2) entry to its left (0 if none)."""
    k = p.size
    ranks = [_rank_at(w, p, i) for i in range(1, len(w) + 1)]
    slots = [i for i in range(1, len(w) + 1) if ranks[i - 1] == k - 1]
    values = [w[i - 1] for i in slots]
    bounds = []
    for i in slots:
        b = 0
        for j in range(i - 1, 0, -1):
            if ranks[j - 1] == k - 2:
                b = w[j - 1]
                break
        bounds.append(b)
    return slots, values, bounds


def west_map(p, p_prime, w):
    """Rank bijection: entries of rank <= k-2 stay put; the rank-(k-1)
    entries are refilled left to right, ascending when the target pair ends
    value-descending and descending when it ends value-ascending."""
    west_hypotheses(p, p_prime)
    k = p.size
    w = Permutation(w)
    slots, values, bounds = _rank_profile(w, p)
    if not slots:
        return w
    target_asc = _j_orientation(p_prime, k - 1, k) == "asc"
    refill = _fill(bounds, values, prefer_large=target_asc)
    out = list(w)
    for i, x in zip(slots, refill):
        out[i - 1] = x
    return Permutation(out)


def west_map_inverse(p, p_prime, y):
    """Inverse of west_map(p, p_prime, .): the map fixes the low-rank
    entries and preserves which positions hold top-rank entries, so the
    preimage is the unique arrangement of those entries whose forward image
    is the input.  Arrangements are scanned in lexicographic order."""
    from itertools import permutations as _permutations

    west_hypotheses(p, p_prime)
    y = Permutation(y)
    slots, values, _ = _rank_profile(y, p_prime)
    if not slots:
        return y
    for arrangement in _permutations(sorted(values)):
        w = list(y)
        for i, x in zip(slots, arrangement):
            w[i - 1] = x
        w = Permutation(w)
        try:
            if west_map(p, p_prime, w) == y:
                return w
        except (RankOverflowError, ValueError):
            continue
    raise ValueError(f"{y} has no preimage; input is outside the map's range")


# --- three-step pipeline (transpositions around the West map) -----------------


def theorem13_hypotheses(p, p_prime):
    """Both patterns size k, same isolated labels including k-1 but not k-3,
    labels k-2 and k above [k-3] minus I with identical induced order there,
    and oppositely oriented chains on {k-2, k}."""
    k = p.size
    if p_prime.size != k or k < 4:
        raise HypothesisError("patterns must share a size k >= 4")
    iso = p.isolated_vertices()
    if iso != p_prime.isolated_vertices():
        raise HypothesisError("isolated vertex sets differ")
    if (k - 1) not in iso:
        raise HypothesisError(f"label {k - 1} must be isolated")
    if (k - 3) in iso:
        raise HypothesisError(f"label {k - 3} must not be isolated")
    low = [x for x in range(1, k - 2) if x not in iso]
    for q in (p, p_prime):
        for x in low:
            if (x, k - 2) not in q.relation or (x, k) not in q.relation:
                raise HypothesisError(
                    f"labels k-2,k must sit above label {x} in both patterns")
    _, low_rel = induced_subposet(p, low)
    _, low_rel2 = induced_subposet(p_prime, low)
    if low_rel != low_rel2:
        raise HypothesisError("induced low-label posets differ")
    o1 = _j_orientation(p, k - 2, k)
    o2 = _j_orientation(p_prime, k - 2, k)
    if {o1, o2} != {"asc", "desc"}:
        raise HypothesisError("the {k-2,k} chains must be oriented oppositely")
    for q, o in ((p, o1), (p_prime, o2)):
        j_pair = {(k, k - 2)} if o == "desc" else {(k - 2, k)}
        if q != _reconstruct(k, iso, low_rel, low, (k - 2, k), j_pair):
            raise HypothesisError("pattern carries relations beyond the stated form")
    return iso


def _top_rank_positions(w, q):
    K = q.size
    return [i for i in range(1, len(w) + 1)
            if _rank_at(w, q, i, allow_full=True) == K]


def theorem13_map(p, p_prime, w, inverse=False):
    """Transpose each top-rank entry with its left neighbour, apply the West
    map for the reduced pair, transpose at the same positions again."""
    theorem13_hypotheses(p, p_prime)
    k = p.size
    q = delete_labels(p, {k - 1})
    q_prime = delete_labels(p_prime, {k - 1})
    w = Permutation(w)
    tops = _top_rank_positions(w, q_prime if inverse else q)
    if any(b - a == 1 for a, b in zip(tops, tops[1:])):
        raise ValueError("adjacent top-rank entries; input does not avoid the pattern")
    swaps = [i - 1 for i in tops]
    u = left_multiply_adjacent(w, swaps, convention="position")
    if inverse:
        v = west_map_inverse(q, q_prime, u)
    else:
        v = west_map(q, q_prime, u)
    return left_multiply_adjacent(v, swaps, convention="position")


# --- rank pairing (default inner bijection) -----------------------------------


@dataclass(frozen=True)
class Pairing:
    """Bijection between two avoider sets on one board, paired by rank in
    the lexicographic enumeration."""

    board: FerrersBoard
    forward_map: tuple  # ((T_a, T_b), ...)

    def forward(self, T):
        for a, b in self.forward_map:
            if a == T:
                return b
        raise KeyError(f"{T} is not in the source avoider set")

    def backward(self, T):
        for a, b in self.forward_map:
            if b == T:
                return a
        raise KeyError(f"{T} is not in the target avoider set")


@lru_cache(maxsize=None)
def rank_bijection(board, p, p_prime):
    """Pair the i-th lexicographic avoider of p with the i-th of p_prime;
    errors when the board's counts differ (not shape-Wilf data)."""
    side_a = [T for T in transversals(board) if not contains_pop_in_board(T, p)]
    side_b = [T for T in transversals(board) if not contains_pop_in_board(T, p_prime)]
    if len(side_a) != len(side_b):
        raise NotShapeWilfEquivalentError(
            f"board {board}: {len(side_a)} avoiders vs {len(side_b)}")
    return Pairing(board, tuple(zip(side_a, side_b)))


# --- coloring bijection for patterns split below an isolated block -----------


def theorem12_hypotheses(p, p_prime):
    """Same nonempty isolated set I with min i1; every label of [i1, k]
    minus I above every label of [i1-1]; identical induced order on
    [i1, k] minus I; the induced low posets may differ (they carry the
    shape-Wilf-equivalent pair the rewrite swaps)."""
    k = p.size
    if p_prime.size != k:
        raise HypothesisError("patterns must share a size")
    iso = p.isolated_vertices()
    if iso != p_prime.isolated_vertices():
        raise HypothesisError("isolated vertex sets differ")
    if not iso:
        raise HypothesisError("the construction needs at least one isolated vertex")
    i1 = min(iso)
    low = list(range(1, i1))
    high = [x for x in range(i1, k + 1) if x not in iso]
    for q in (p, p_prime):
        for x in high:
            for y in low:
                if (y, x) not in q.relation:
                    raise HypothesisError(
                        f"label {x} must sit above label {y} in both patterns")
    _, j_rel = induced_subposet(p, high)
    _, j_rel2 = induced_subposet(p_prime, high)
    if j_rel != j_rel2:
        raise HypothesisError("induced high-label posets differ")
    for q in (p, p_prime):
        _, low_rel = induced_subposet(q, low)
        from .poset import transitive_closure

        pairs = set(low_rel) | set(j_rel)
        pairs.update((y, x) for x in high for y in low)
        if q != LabeledPoset(k, transitive_closure(pairs)):
            raise HypothesisError("pattern carries relations beyond the stated form")
    return iso, i1


def _squash_white(T, white_test):
    """Split T by a per-cell white test: gray out rows/columns of gray 1s,
    then return (kept_rows, kept_cols, F_prime, f_prime).

    The white cell set must be down-left closed; the squashed shape is then
    a Ferrers board and the white 1s induce a transversal of it.
    """
    board = T.board
    n = board.n_rows
    gray_rows, gray_cols = set(), set()
    for c in range(1, board.n_cols + 1):
        r = T.row_of(c)
        if not white_test(r, c):
            gray_rows.add(r)
            gray_cols.add(c)
    kept_rows = [r for r in range(1, n + 1) if r not in gray_rows]
    kept_cols = [c for c in range(1, board.n_cols + 1) if c not in gray_cols]
    lengths = []
    for r in kept_rows:
        width = sum(1 for c in kept_cols
                    if board.contains_cell(r, c) and white_test(r, c))
        lengths.append(width)
    f_board = FerrersBoard(tuple(lengths))
    row_index = {r: i + 1 for i, r in enumerate(kept_rows)}
    col_index = {c: i + 1 for i, c in enumerate(kept_cols)}
    rows = [0] * len(kept_cols)
    for c in kept_cols:
        rows[col_index[c] - 1] = row_index[T.row_of(c)]
    f_prime = Transversal(f_board, tuple(rows))
    return kept_rows, kept_cols, f_prime


def _restore(T, kept_rows, kept_cols, f_second):
    """Put the rewritten white 1s back among the untouched gray 1s."""
    board = T.board
    rows = list(T.rows)
    for c in kept_cols:
        new_local_row = f_second.row_of(kept_cols.index(c) + 1)
        rows[c - 1] = kept_rows[new_local_row - 1]
    return Transversal(board, tuple(rows))


def theorem12_map(p, p_prime, T, inner=None, inverse=False):
    """Coloring bijection: cells with an essential occurrence of the high
    part strictly above-right stay white, rows/columns of gray 1s are
    frozen, and the white sub-transversal is rewritten by the inner pairing
    for the two low patterns.

    inner, when given, is a callable board -> Pairing replacing the default
    rank pairing; with inverse=True the caller supplies the reversed one.
    """
    iso, i1 = theorem12_hypotheses(p, p_prime)
    if inverse:
        p, p_prime = p_prime, p
    if not T.board.is_square:
        raise ValueError("the construction is defined on square boards")
    k = p.size
    if i1 == 1:
        return T  # empty low block: the patterns coincide and nothing moves
    high_labels = list(range(i1, k + 1))
    _, high_rel = induced_subposet(p, high_labels)
    U = standardise(high_labels, high_rel)
    designated = frozenset(x - i1 + 1 for x in iso)
    low_p = standardise(range(1, i1), induced_subposet(p, range(1, i1))[1])
    low_pp = standardise(range(1, i1), induced_subposet(p_prime, range(1, i1))[1])

    def white(r, c):
        return _essential_in_region(T, U, designated, row_floor=r, col_floor=c) is not None

    kept_rows, kept_cols, f_prime = _squash_white(T, white)
    if not kept_rows:
        return T
    pairing = inner(f_prime.board) if inner else rank_bijection(f_prime.board, low_p, low_pp)
    f_second = pairing.forward(f_prime)
    return _restore(T, kept_rows, kept_cols, f_second)


# --- coloring bijection for disjoint sums -------------------------------------


def theorem14_map(p, q, q_prime, T, inner=None, inverse=False):
    """Disjoint-sum rewrite: the columns left of the first p-occurrence stay,
    the square of remaining rows/columns is rewritten by the inner pairing
    from q-avoiders to q_prime-avoiders."""
    if inverse:
        q, q_prime = q_prime, q
    if not T.board.is_square:
        raise ValueError("the construction is defined on square boards")
    word = T.rows
    n = len(word)
    j0 = None
    for j in range(1, n + 1):
        if _occurrence_search(word[:j], p):
            j0 = j
            break
    if j0 is None:
        return T  # T avoids p outright: mapped to itself

    # columns 1..j0 and the rows of their 1s stay (white); the rest is rewritten
    kept_rows, kept_cols, f_prime = _squash_white(T, lambda r, c: c > j0)
    if len(kept_rows) != len(kept_cols) or not f_prime.board.is_square:
        raise ValueError("white-row extraction did not leave a square board")
    pairing = inner(f_prime.board) if inner else rank_bijection(f_prime.board, q, q_prime)
    f_second = pairing.forward(f_prime)
    return _restore(T, kept_rows, kept_cols, f_second)
