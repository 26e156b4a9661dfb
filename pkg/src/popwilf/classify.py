"""Chain-component pattern families of sizes 3..5 and their Wilf classes.

Families are generated from the tuple notations the tables use: a tuple
names chains top label first, with isolated vertices after semicolons.
Counting is exact brute force through the horizon; classes are groups of
members with identical count sequences, which is necessary for (not proof
of) Wilf equivalence and is labeled as such in reports.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import permutations

from .permutation import BudgetError, count_avoiders
from .poset import LabeledPoset, delete_labels, format_pop, parse_pop
from .reference import (
    DIMITROV_CHAINS,
    DIMITROV_EXPECTED,
    EXPECTED_FAMILY_SIZES,
    KNOWN_SEQUENCES,
    TABLE_ROWS,
)

FAMILY_TAGS = (
    "size3-connected",
    "size3-2chain",
    "t4-ii",
    "t4-iii",
    "t5-i",
    "t5-ii",
    "t5-iii",
    "t5-iv",
)


def pop_from_tuple(notation):
    """Parse a table tuple like '(1,5;2,4;3)' into a pattern: semicolons
    separate components, multi-label groups are chains top label first,
    single labels are isolated vertices."""
    text = notation.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad tuple notation {notation!r}")
    groups = [tok.split(",") for tok in text[1:-1].split(";")]
    labels = [int(x) for grp in groups for x in grp]
    size = len(labels)
    parts = []
    for grp in groups:
        vals = [int(x) for x in grp]
        if len(vals) == 1:
            parts.append(f"i[{vals[0]}]")
        else:
            parts.append("c[" + ">".join(str(v) for v in vals) + "]")
    return parse_pop(f"pop {size}: " + ", ".join(parts))


def tuple_from_pop(p):
    """Inverse of pop_from_tuple: chains first (longest first, ties by
    smallest label), then isolated vertices, matching the tables' shapes."""
    text = format_pop(p)
    body = text.split(":", 1)[1]
    chains, isolated = [], []
    for comp in re.findall(r"[ci]\[[^\]]*\]", body):
        if comp.startswith("c"):
            chains.append(comp[2:-1].split(">"))
        else:
            isolated.append(comp[2:-1])
    chains.sort(key=lambda ch: (-len(ch), min(int(x) for x in ch)))
    isolated.sort(key=int)
    groups = [",".join(ch) for ch in chains] + isolated
    return "(" + ";".join(groups) + ")"


@dataclass(frozen=True)
class PopFamily:
    tag: str
    members: tuple  # (notation string, LabeledPoset) pairs


def generate_family(tag):
    """Every labeling of the tag's shape, in the tables' tuple notation."""
    if tag == "size3-connected":
        members = [(f"({a},{b},{c})", pop_from_tuple(f"({a},{b},{c})"))
                   for a, b, c in permutations((1, 2, 3))]
    elif tag == "size3-2chain":
        members = [(f"({a},{b};{d})", pop_from_tuple(f"({a},{b};{d})"))
                   for d in (1, 2, 3)
                   for a, b in permutations(sorted({1, 2, 3} - {d}))]
    elif tag == "t4-ii":
        members = [(f"({a},{b},{c};{d})", pop_from_tuple(f"({a},{b},{c};{d})"))
                   for a, b, c, d in permutations((1, 2, 3, 4))]
    elif tag == "t4-iii":
        members = [(f"({a},{b};{c},{d})", pop_from_tuple(f"({a},{b};{c},{d})"))
                   for a, b, c, d in permutations((1, 2, 3, 4))]
    elif tag == "t5-i":
        members = [(f"({a},{b},{c},{d};{e})",
                    pop_from_tuple(f"({a},{b},{c},{d};{e})"))
                   for a, b, c, d, e in permutations((1, 2, 3, 4, 5))]
    elif tag == "t5-ii":
        members = [(f"({a},{b},{c};{d};{e})",
                    pop_from_tuple(f"({a},{b},{c};{d};{e})"))
                   for a, b, c, d, e in permutations((1, 2, 3, 4, 5))
                   if d < e]
    elif tag == "t5-iii":
        members = [(f"({a},{b},{c};{d},{e})",
                    pop_from_tuple(f"({a},{b},{c};{d},{e})"))
                   for a, b, c, d, e in permutations((1, 2, 3, 4, 5))]
    elif tag == "t5-iv":
        members = []
        for e in (1, 2, 3, 4, 5):
            rest = sorted({1, 2, 3, 4, 5} - {e})
            for a, b in permutations(rest, 2):
                c, d = sorted(set(rest) - {a, b})
                for cd in ((c, d), (d, c)):
                    members.append((f"({a},{b};{cd[0]},{cd[1]};{e})",
                                    pop_from_tuple(f"({a},{b};{cd[0]},{cd[1]};{e})")))
    else:
        raise ValueError(f"unknown family tag {tag!r}")
    assert len(members) == EXPECTED_FAMILY_SIZES[tag]
    return PopFamily(tag, tuple(members))


def symmetry_reduce(family):
    """Orbits under label reversal and order complementation, each orbit a
    sorted tuple of member notations; representatives are the members whose
    serialization is lexicographically least."""
    by_poset = {}
    for notation, p in family.members:
        by_poset.setdefault(p, []).append(notation)
    orbits = []
    seen = set()
    for notation, p in family.members:
        if p in seen:
            continue
        orbit_posets = set()
        frontier = [p]
        while frontier:
            x = frontier.pop()
            if x in orbit_posets:
                continue
            orbit_posets.add(x)
            frontier.extend([x.reverse(), x.complement()])
        orbit_posets &= set(by_poset)  # symmetry images stay inside the family
        seen |= orbit_posets
        notations = sorted(n for x in orbit_posets for n in by_poset[x])
        representative = min(format_pop(x) for x in orbit_posets)
        orbits.append((representative, tuple(notations)))
    orbits.sort()
    return orbits


@dataclass(frozen=True)
class WilfClass:
    representative: str  # lexicographically least member notation
    members: tuple
    counts: tuple
    oeis: str | None


@dataclass(frozen=True)
class WilfClassReport:
    family: str
    horizon: int
    classes: tuple

    def class_of(self, notation):
        for cls in self.classes:
            if notation in cls.members:
                return cls
        raise KeyError(notation)


_COUNT_CACHE = {}


def _cached_counts(p, horizon, workers):
    key = (p, horizon)
    if key not in _COUNT_CACHE:
        _COUNT_CACHE[key] = count_avoiders(p, horizon, workers=workers,
                                           budget=None).counts
    return _COUNT_CACHE[key]


def wilf_classes(family, horizon=8, workers=None, budget=8):
    """Partition the family by exact count-sequence equality through the
    horizon.  Every distinct pattern is counted honestly; equal posets
    reached through different tuples share one computation."""
    if budget is not None and horizon > budget:
        raise BudgetError(
            f"horizon {horizon} exceeds budget {budget}; raise it explicitly")
    groups = {}
    for notation, p in family.members:
        groups.setdefault(_cached_counts(p, horizon, workers), []).append(notation)
    classes = []
    for counts, notations in groups.items():
        members = tuple(sorted(notations))
        classes.append(WilfClass(min(members), members, counts,
                                 match_sequence(counts)))
    classes.sort(key=lambda c: (c.counts, c.representative))
    return WilfClassReport(family.tag, horizon, tuple(classes))


def known_sequences():
    """The catalogued sequences the tables cite, through n = 8."""
    return dict(KNOWN_SEQUENCES)


def match_sequence(counts):
    """Identify a count prefix against the bundled sequences; the whole
    given prefix must agree, and a unique match is required."""
    counts = tuple(counts)
    if not counts:
        return None
    hits = [name for name, ref in KNOWN_SEQUENCES.items()
            if counts[:len(ref)] == ref[:len(counts)]]
    return hits[0] if len(hits) == 1 else None


# --- reduction formula for extreme isolated labels ----------------------------


@dataclass(frozen=True)
class ReductionReport:
    pop: str
    inner: str
    removed: int  # s: number of extreme isolated labels removed
    rows: tuple   # (n, brute count, formula value or None, equal)
    printed_split_consistent: bool

    @property
    def formula_holds_for(self):
        return tuple(n for n, _, _, equal in self.rows if equal)


def _extreme_isolated(p):
    iso = p.isolated_vertices()
    k = p.size
    i = 0
    while (i + 1) in iso:
        i += 1
    t = 0
    while (k - t) in iso and k - t > i:
        t += 1
    return i, t


def gk_reduction_check(p, n_max=7):
    """Compare |S_n(p)| against n!/(n-s)! * |S_{n-s}(q)| where q drops the
    extreme isolated labels.  The published case split assigns the product
    to n < k and 0 to n >= k; the report records where the formula actually
    holds, and whether the printed split survives enumeration (it does not)."""
    k = p.size
    i, t = _extreme_isolated(p)
    s = i + t
    if s == 0:
        raise ValueError("pattern has no extreme isolated labels to remove")
    removed = set(range(1, i + 1)) | set(range(k - t + 1, k + 1))
    q = delete_labels(p, removed)
    brute = count_avoiders(p, n_max, budget=None).counts
    inner_counts = count_avoiders(q, n_max, budget=None).counts if q.size else None

    def inner_avoiders(m):
        if q.size == 0:
            return 0  # the empty pattern occurs in everything
        return 1 if m == 0 else inner_counts[m - 1]

    rows = []
    split_ok = True
    for n in range(1, n_max + 1):
        if n < s:
            formula = None
        else:
            formula = (math.factorial(n) // math.factorial(n - s)
                       * inner_avoiders(n - s))
        equal = formula is not None and formula == brute[n - 1]
        rows.append((n, brute[n - 1], formula, equal))
        if n < s:
            continue  # the printed split's expression is undefined here
        printed = formula if n < k else 0
        if printed != brute[n - 1]:
            split_ok = False
    from .permutation import _pop_label

    return ReductionReport(_pop_label(p), _pop_label(q), s, tuple(rows), split_ok)


# --- the conjectured equality chains ------------------------------------------


@dataclass(frozen=True)
class ConjectureReport:
    horizon: int
    chains: tuple  # per chain: (members, per-member counts, all equal, matches expected)

    @property
    def verdict(self):
        return all(equal and matches for _, _, equal, matches in self.chains)


def dimitrov_check(horizon=8):
    """Verify the three conjectured equality chains by counting each member
    and comparing against the classified type-I rows they reduce to."""
    if horizon > 8:
        raise BudgetError("the conjecture data stops at n = 8")
    chains = []
    for members, expected in zip(DIMITROV_CHAINS, DIMITROV_EXPECTED):
        counts = [count_avoiders(pop_from_tuple(m), horizon, budget=None).counts
                  for m in members]
        equal = len(set(counts)) == 1
        matches = all(c == expected[:horizon] for c in counts)
        chains.append((members, tuple(counts), equal, matches))
    return ConjectureReport(horizon, tuple(chains))


def reference_rows(tag):
    return TABLE_ROWS[tag]


def chain_component_pops(size):
    """Every pattern of the given size all of whose components are chains:
    set partitions of the labels, each block totally ordered in every way."""
    labels = list(range(1, size + 1))

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for part in partitions(rest):
            for i in range(len(part)):
                yield part[:i] + [[first] + part[i]] + part[i + 1:]
            yield [[first]] + part

    out = []
    for part in partitions(labels):
        orderings = [[]]
        for block in part:
            new = []
            for chain in permutations(block):
                for prefix in orderings:
                    new.append(prefix + [chain])
            orderings = new
        for choice in orderings:
            pairs = set()
            for chain in choice:
                # chain lists labels bottom to top
                for lo, hi in zip(chain, chain[1:]):
                    pairs.add((lo, hi))
            out.append(LabeledPoset.build(size, pairs))
    return sorted(set(out), key=lambda p: sorted(p.relation))
