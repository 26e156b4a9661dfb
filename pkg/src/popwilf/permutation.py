"""Permutations, pattern occurrence detection, and exact avoider counting.

The counting engine walks the tree of order-isomorphism types: a length-m
avoider extends to length m+1 by appending a new rightmost element of each
possible relative rank.  A freshly created occurrence must use the new
element (as the last element of the occurrence), so each level only needs
an ends-at-last check, done vectorized over the whole level with numpy.
Prefix pruning is sound because an occurrence survives every extension.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .poset import LabeledPoset, format_pop


class BudgetError(RuntimeError):
    """Requested horizon exceeds the configured compute budget."""


class RankOverflowError(ValueError):
    """Rank was requested in a permutation that contains the full pattern."""


DEFAULT_HORIZON_BUDGET = 9


class Permutation(tuple):
    """One-line permutation of 1..n.  Comma-free text when n <= 9."""

    def __new__(cls, values):
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{values} is not a permutation of 1..{len(values)}")
        return super().__new__(cls, values)

    @classmethod
    def from_string(cls, text):
        text = text.strip()
        if "," in text:
            return cls(int(tok) for tok in text.split(","))
        return cls(int(ch) for ch in text)

    def __str__(self):
        if len(self) <= 9:
            return "".join(str(v) for v in self)
        return ",".join(str(v) for v in self)

    def __repr__(self):
        return f"Permutation({str(self)!r})"

    def inverse(self):
        inv = [0] * len(self)
        for pos, val in enumerate(self, start=1):
            inv[val - 1] = pos
        return Permutation(inv)

    def reverse(self):
        return Permutation(self[::-1])

    def complement(self):
        n = len(self)
        return Permutation(n + 1 - v for v in self)


@dataclass(frozen=True)
class CountSequence:
    """Avoider counts a_1..a_N for one pattern."""

    pop: str
    counts: tuple
    horizon: int

    def to_csv(self):
        lines = ["n,count"]
        lines += [f"{n},{c}" for n, c in enumerate(self.counts, start=1)]
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps({"pop": self.pop, "horizon": self.horizon,
                           "counts": list(self.counts)})


def _pop_label(p):
    try:
        return format_pop(p)
    except ValueError:
        return f"poset(size={p.size}, relation={sorted(p.relation)})"


def _occurrence_search(values, p, want_witness=False):
    """Find index sets realizing p in a value sequence; positions ascend.

    Depth-first over positions for labels 1..k in order, pruning on every
    comparable pair as soon as both ends are placed; the first witness found
    is the lexicographically least one.
    """
    k = p.size
    m = len(values)
    if m < k:
        return None if want_witness else False
    # constraints[t] = pairs (s, sign) with s < t: sign +1 means s below t
    constraints = [[] for _ in range(k + 1)]
    for a, b in p.relation:
        lo, hi = min(a, b), max(a, b)
        constraints[hi].append((lo, 1 if (lo, hi) == (a, b) else -1))
    chosen = [0] * k

    def place(label, start):
        if label > k:
            return True
        for pos in range(start, m - (k - label)):
            v = values[pos]
            ok = True
            for other, sign in constraints[label]:
                w = values[chosen[other - 1]]
                if (w < v) != (sign > 0):
                    ok = False
                    break
            if ok:
                chosen[label - 1] = pos
                if place(label + 1, pos + 1):
                    return True
        return False

    found = place(1, 0)
    if want_witness:
        return tuple(chosen) if found else None
    return found


def contains_pop(pi, p, witness=False):
    """Does pi contain the pattern?  Optionally return 0-based witness positions.

    An occurrence is a subsequence whose j-th element is below its m-th
    element in value exactly when label j is below label m; incomparable
    labels carry no constraint.
    """
    result = _occurrence_search(tuple(pi), p, want_witness=True)
    if witness:
        return result
    return result is not None


@lru_cache(maxsize=None)
def _pattern_chains(p):
    from .poset import from_classical

    return tuple(from_classical(sigma) for sigma in sorted(p.pattern_set()))


def contains_pop_via_patterns(pi, p):
    """Second detector: containment of some member of pattern_set(p)."""
    pi = tuple(pi)
    return any(_occurrence_search(pi, chain) for chain in _pattern_chains(p))


def _hasse_constraints(p):
    """Covering pairs of p: checking them on a totally ordered value set
    is equivalent to checking the full closure."""
    return tuple(p.hasse_pairs())


def _extend_level(level, p_size, hasse, combos_cache):
    """One BFS level: append each relative rank, drop patterns where the new
    last element completes an occurrence.  Vectorized over the level."""
    m = level.shape[1]
    parents = np.repeat(level, m + 1, axis=0)
    ranks = np.tile(np.arange(1, m + 2, dtype=level.dtype), level.shape[0])
    children = np.where(parents >= ranks[:, None], parents + 1, parents)
    children = np.concatenate([children, ranks[:, None]], axis=1)

    k = p_size
    if m + 1 < k:
        return children
    key = (m + 1, k)
    if key not in combos_cache:
        combos_cache[key] = list(combinations(range(m), k - 1))
    contains = np.zeros(children.shape[0], dtype=bool)
    last = children[:, m]
    for combo in combos_cache[key]:
        ok = np.ones(children.shape[0], dtype=bool)
        for a, b in hasse:
            col_a = last if a == k else children[:, combo[a - 1]]
            col_b = last if b == k else children[:, combo[b - 1]]
            ok &= col_a < col_b
            if not ok.any():
                break
        contains |= ok
        if contains.all():
            break
    return children[~contains]


def _count_range(level, start_n, stop_n, p_size, hasse):
    """Avoider counts for lengths start_n..stop_n, continuing from a level."""
    combos_cache = {}
    counts = []
    for _ in range(start_n, stop_n + 1):
        level = _extend_level(level, p_size, hasse, combos_cache)
        counts.append(int(level.shape[0]))
    return counts, level


def _worker_count(args):
    shard, start_n, stop_n, p_size, hasse = args
    counts, _ = _count_range(shard, start_n, stop_n, p_size, hasse)
    return counts


def default_workers():
    env = os.environ.get("POPWILF_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def count_avoiders(p, horizon, workers=None, budget=DEFAULT_HORIZON_BUDGET):
    """Exact |S_n(p)| for n = 1..horizon.

    Results are bit-identical for any worker count: workers receive disjoint
    row shards of one BFS level and the per-length counts add up.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if budget is not None and horizon > budget:
        raise BudgetError(
            f"horizon {horizon} exceeds budget {budget}; pass a larger budget explicitly")
    if workers is None:
        workers = default_workers()

    hasse = _hasse_constraints(p)
    dtype = np.int8 if horizon < 127 else np.int16
    level = np.ones((1, 1), dtype=dtype)  # the single pattern of length 1
    counts = [1]
    combos_cache = {}

    split_at = 5 if (workers > 1 and horizon > 6) else horizon
    n = 1
    while n < min(split_at, horizon):
        level = _extend_level(level, p.size, hasse, combos_cache)
        counts.append(int(level.shape[0]))
        n += 1
    if n < horizon:
        shards = np.array_split(level, workers)
        jobs = [(shard, n + 1, horizon, p.size, hasse) for shard in shards
                if shard.shape[0]]
        if workers > 1 and len(jobs) > 1:
            import multiprocessing

            with multiprocessing.Pool(workers) as pool:
                results = pool.map(_worker_count, jobs)
        else:
            results = [_worker_count(job) for job in jobs]
        tail = [0] * (horizon - n)
        for part in results:
            for i, c in enumerate(part):
                tail[i] += c
        counts.extend(tail)
    return CountSequence(_pop_label(p), tuple(counts[:horizon]), horizon)


def count_avoiders_naive(p, horizon):
    """Filter-everything oracle for small horizons; independent of the BFS."""
    from itertools import permutations

    counts = []
    for n in range(1, horizon + 1):
        counts.append(sum(1 for w in permutations(range(1, n + 1))
                          if not contains_pop(w, p)))
    return CountSequence(_pop_label(p), tuple(counts), horizon)


def avoiders(p, n):
    """All avoiders in S_n, lexicographically, via prefix-pruned DFS."""
    hasse = _hasse_constraints(p)
    k = p.size

    def ends_at_last(prefix):
        m = len(prefix)
        if m < k:
            return False
        last = prefix[-1]
        for combo in combinations(range(m - 1), k - 1):
            ok = True
            for a, b in hasse:
                va = last if a == k else prefix[combo[a - 1]]
                vb = last if b == k else prefix[combo[b - 1]]
                if not va < vb:
                    ok = False
                    break
            if ok:
                return True
        return False

    prefix = []
    used = [False] * (n + 1)

    def descend():
        if len(prefix) == n:
            yield Permutation(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            used[v] = True
            if not ends_at_last(prefix):
                yield from descend()
            prefix.pop()
            used[v] = False

    yield from descend()


@lru_cache(maxsize=None)
def _prefix_hasse(p, r):
    sub = LabeledPoset(r, frozenset((a, b) for a, b in p.relation
                                    if a <= r and b <= r))
    return tuple(sub.hasse_pairs())


def _rank_at(w, p, position, allow_full=False):
    w = tuple(w)
    k = p.size
    i = position - 1
    for r in range(min(k, position), 0, -1):
        hasse = _prefix_hasse(p, r)
        for combo in combinations(range(i), r - 1):
            idx = combo + (i,)
            if all(w[idx[a - 1]] < w[idx[b - 1]] for a, b in hasse):
                if r == k and not allow_full:
                    raise RankOverflowError(
                        f"entry at position {position} completes the full pattern")
                return r
    return 1


def p_rank(w, p, position):
    """Largest r such that some subsequence ending at position realizes the
    sub-pattern on labels 1..r.  1-based position; ranges 1..k-1 on avoiders."""
    return _rank_at(w, p, position, allow_full=False)


def p_ranks(w, p):
    """Rank of every position, 1-based list."""
    return [p_rank(w, p, i) for i in range(1, len(w) + 1)]


def left_multiply_adjacent(w, indices, convention="position"):
    """Apply adjacent transpositions s_m for each m in indices, in order.

    convention='position': s_m swaps the entries at positions m and m+1.
    convention='value':    s_m swaps the values m and m+1 wherever they sit.
    The two agree on the identity permutation; the bijection pipeline uses
    the position form, which the round-trip oracle validates.
    """
    vals = list(w)
    n = len(vals)
    for m in indices:
        if not 1 <= m <= n - 1:
            raise ValueError(f"transposition index {m} out of range 1..{n - 1}")
        if convention == "position":
            vals[m - 1], vals[m] = vals[m], vals[m - 1]
        elif convention == "value":
            i, j = vals.index(m), vals.index(m + 1)
            vals[i], vals[j] = vals[j], vals[i]
        else:
            raise ValueError(f"unknown convention {convention!r}")
    return Permutation(vals)
