"""Labeled posets on {1..k}: the patterns whose avoidance this package studies.

A pattern here is a strict partial order on the labels 1..k.  A classical
permutation pattern is the special case of a total order (a chain).  The
relation is stored transitively closed so comparability queries are set
lookups; Hasse edges are recovered on demand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class PopSyntaxError(ValueError):
    """Raised on malformed pattern text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def transitive_closure(pairs):
    """Close a set of (a, b) strict-order pairs under transitivity."""
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(closed):
            for c, d in list(closed):
                if b == c and (a, d) not in closed:
                    closed.add((a, d))
                    changed = True
    return frozenset(closed)


@dataclass(frozen=True)
class LabeledPoset:
    """A strict partial order on labels {1..size}, transitively closed.

    ``(a, b) in relation`` means a is below b.  Invariants: irreflexive,
    antisymmetric, transitively closed; enforced at construction.
    """

    size: int
    relation: frozenset

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("poset size must be non-negative")
        labels = set(range(1, self.size + 1))
        for a, b in self.relation:
            if a not in labels or b not in labels:
                raise ValueError(f"relation pair {(a, b)} uses labels outside 1..{self.size}")
            if a == b:
                raise ValueError(f"relation is not irreflexive: {(a, b)}")
            if (b, a) in self.relation:
                raise ValueError(f"relation is not antisymmetric: {(a, b)} and {(b, a)}")
        if transitive_closure(self.relation) != self.relation:
            raise ValueError("relation is not transitively closed")

    @classmethod
    def build(cls, size, pairs):
        """Construct from any generating set of pairs; closes transitively."""
        return cls(size, transitive_closure(pairs))

    def less(self, a, b):
        return (a, b) in self.relation

    def comparable(self, a, b):
        return (a, b) in self.relation or (b, a) in self.relation

    def hasse_pairs(self):
        """Covering pairs (a, b): a below b with nothing strictly between."""
        out = []
        for a, b in sorted(self.relation):
            if not any((a, c) in self.relation and (c, b) in self.relation
                       for c in range(1, self.size + 1)):
                out.append((a, b))
        return out

    def isolated_vertices(self):
        """Labels comparable to nothing."""
        touched = {a for pair in self.relation for a in pair}
        return frozenset(range(1, self.size + 1)) - touched

    def connected_components(self):
        """Components of the comparability graph, as sorted frozensets of labels."""
        adj = {v: set() for v in range(1, self.size + 1)}
        for a, b in self.relation:
            adj[a].add(b)
            adj[b].add(a)
        seen = set()
        comps = []
        for v in range(1, self.size + 1):
            if v in seen:
                continue
            stack, comp = [v], set()
            while stack:
                u = stack.pop()
                if u in comp:
                    continue
                comp.add(u)
                stack.extend(adj[u] - comp)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def all_chains(self):
        """True iff every comparability component is totally ordered."""
        for comp in self.connected_components():
            for a, b in combinations(sorted(comp), 2):
                if not self.comparable(a, b):
                    return False
        return True

    def minimal_elements(self, among=None):
        labels = sorted(among) if among is not None else range(1, self.size + 1)
        labels = list(labels)
        return [v for v in labels if not any((u, v) in self.relation for u in labels)]

    def linear_extensions(self):
        """All label orderings compatible with the order, lexicographically.

        Backtracks over minimal elements in ascending label order, which
        yields the extensions in ascending lexicographic order.
        """
        out = []
        remaining = set(range(1, self.size + 1))
        prefix = []

        def descend():
            if not remaining:
                out.append(tuple(prefix))
                return
            for v in self.minimal_elements(remaining):
                remaining.remove(v)
                prefix.append(v)
                descend()
                prefix.pop()
                remaining.add(v)

        descend()
        return out

    def pattern_set(self):
        """Classical patterns whose simultaneous avoidance equals avoiding self.

        These are the group-theoretic inverses of the linear extensions,
        each extension read as the permutation sending position i to its
        i-th label.
        """
        patterns = set()
        for ext in self.linear_extensions():
            inv = [0] * self.size
            for pos, lab in enumerate(ext, start=1):
                inv[lab - 1] = pos
            patterns.add(tuple(inv))
        return patterns

    def reverse(self):
        """Rename every label i to size+1-i, keeping the order relation."""
        n = self.size
        return LabeledPoset(n, frozenset((n + 1 - a, n + 1 - b) for a, b in self.relation))

    def complement(self):
        """Order dual: flip every relation pair, labels unchanged."""
        return LabeledPoset(self.size, frozenset((b, a) for a, b in self.relation))

    def __str__(self):
        return format_pop(self)


def from_classical(sigma):
    """Chain poset of a classical pattern: j below m iff sigma_j < sigma_m."""
    values = tuple(sigma)
    k = len(values)
    if sorted(values) != list(range(1, k + 1)):
        raise ValueError(f"{values} is not a permutation of 1..{k}")
    pairs = {(j, m) for j in range(1, k + 1) for m in range(1, k + 1)
             if values[j - 1] < values[m - 1]}
    return LabeledPoset(k, frozenset(pairs))


def standardise(labels, relation):
    """Relabel arbitrary distinct positive labels to 1..r preserving order."""
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct")
    rank = {lab: i + 1 for i, lab in enumerate(sorted(labels))}
    pairs = set()
    for a, b in relation:
        if a in rank and b in rank:
            pairs.add((rank[a], rank[b]))
    return LabeledPoset(len(labels), frozenset(pairs))


def induced_subposet(p, labels):
    """Relation of p restricted to a label subset; labels kept as-is.

    Returns (labels, relation) rather than a poset, since the labels are
    generally not 1..r; feed the result to standardise when a pattern is
    needed.
    """
    labels = frozenset(labels)
    if not labels <= set(range(1, p.size + 1)):
        raise ValueError("label set is not a subset of the poset's labels")
    rel = frozenset((a, b) for a, b in p.relation if a in labels and b in labels)
    return labels, rel


def delete_labels(p, labels):
    """Standardised poset on the complement of a label set."""
    keep = set(range(1, p.size + 1)) - set(labels)
    kept, rel = induced_subposet(p, keep)
    return standardise(kept, rel)


def ordinal_sum(p, q):
    """Stack q above p: q's labels shift up by |p|, every p-vertex below every q-vertex."""
    k = p.size
    pairs = set(p.relation)
    pairs.update((a + k, b + k) for a, b in q.relation)
    pairs.update((a, b + k) for a in range(1, k + 1) for b in range(1, q.size + 1))
    return LabeledPoset(k + q.size, transitive_closure(pairs))


def disjoint_sum(p, q):
    """Place q beside p: q's labels shift up by |p|, no cross relations."""
    k = p.size
    pairs = set(p.relation)
    pairs.update((a + k, b + k) for a, b in q.relation)
    return LabeledPoset(k + q.size, frozenset(pairs))


def block_reversal(p, block, block_size=None):
    """Complement the labels inside one contiguous, component-closed block.

    The block must be a union of comparability components occupying a
    contiguous label range {lo..hi}; label i inside becomes lo+hi-i, labels
    outside stay fixed, the order relation is carried along unchanged.
    """
    block = frozenset(block)
    if not block:
        return p
    lo, hi = min(block), max(block)
    if block != frozenset(range(lo, hi + 1)):
        raise ValueError("block labels are not contiguous")
    if block_size is not None and len(block) != block_size:
        raise ValueError("block size mismatch")
    for comp in p.connected_components():
        if comp & block and not comp <= block:
            raise ValueError("block is not a union of components")
    rename = {i: (lo + hi - i if i in block else i) for i in range(1, p.size + 1)}
    return LabeledPoset(p.size, frozenset((rename[a], rename[b]) for a, b in p.relation))


# --- text grammar -----------------------------------------------------------
#
#   pop <k>: <component>(, <component>)*
#   component := c[l1>l2>...>lm]   chain, top label first
#              | i[l]              isolated vertex

_HEADER = re.compile(r"pop\s+(\d+)\s*:\s*")


def parse_pop(text):
    """Parse the chain/isolated-vertex pattern grammar; round-trips with format_pop."""
    text = text.strip()
    m = _HEADER.match(text)
    if not m:
        raise PopSyntaxError("expected 'pop <k>:' header", 0)
    size = int(m.group(1))
    pos = m.end()
    pairs = set()
    seen = set()

    def read_int(at):
        m2 = re.compile(r"\d+").match(text, at)
        if not m2:
            raise PopSyntaxError("expected a label", at)
        return int(m2.group()), m2.end()

    first = True
    while pos < len(text) or first:
        if not first:
            if pos >= len(text):
                break
            if text[pos] != ",":
                raise PopSyntaxError("expected ','", pos)
            pos += 1
        while pos < len(text) and text[pos] == " ":
            pos += 1
        if pos >= len(text):
            if first:
                raise PopSyntaxError("expected a component", pos)
            raise PopSyntaxError("trailing comma", pos)
        kind = text[pos]
        if kind not in "ci":
            raise PopSyntaxError("expected component 'c[...]' or 'i[...]'", pos)
        pos += 1
        if pos >= len(text) or text[pos] != "[":
            raise PopSyntaxError("expected '['", pos)
        pos += 1
        chain = []
        while True:
            lab, pos = read_int(pos)
            if lab in seen:
                raise PopSyntaxError(f"label {lab} repeated", pos)
            if not 1 <= lab <= size:
                raise PopSyntaxError(f"label {lab} outside 1..{size}", pos)
            seen.add(lab)
            chain.append(lab)
            if pos < len(text) and text[pos] == ">":
                if kind == "i":
                    raise PopSyntaxError("isolated vertex takes a single label", pos)
                pos += 1
                continue
            break
        if pos >= len(text) or text[pos] != "]":
            raise PopSyntaxError("expected ']'", pos)
        pos += 1
        for top, below in zip(chain, chain[1:]):
            pairs.add((below, top))
        first = False
    if seen != set(range(1, size + 1)):
        missing = sorted(set(range(1, size + 1)) - seen)
        raise PopSyntaxError(f"labels {missing} missing", len(text))
    return LabeledPoset.build(size, pairs)


def format_pop(p):
    """Serialize a chain-component poset: chains before isolated vertices,
    each kind ordered by smallest label."""
    comps = []
    for comp in sorted(p.connected_components(), key=lambda c: (len(c) == 1, min(c))):
        labels = sorted(comp)
        if len(labels) == 1:
            comps.append(f"i[{labels[0]}]")
            continue
        for a, b in combinations(labels, 2):
            if not p.comparable(a, b):
                raise ValueError("poset has a non-chain component; not serializable")
        top_first = sorted(labels, key=lambda v: sum((v, u) in p.relation for u in labels))
        comps.append("c[" + ">".join(str(v) for v in top_first) + "]")
    return f"pop {p.size}: " + ", ".join(comps)


@lru_cache(maxsize=None)
def _chain_posets(size):
    from itertools import permutations
    return tuple(from_classical(perm) for perm in permutations(range(1, size + 1)))


def chain_posets(size):
    """All total orders on {1..size}, i.e. the classical patterns of that length."""
    return list(_chain_posets(size))
