"""Batch verification drivers: each check sweeps a claim's full stated
range and returns a JSON-ready dict with a "pass" verdict and, on failure,
a minimal counterexample."""

from __future__ import annotations

from .bijections import (
    VARIANT_P,
    VARIANT_P_PRIME,
    certify_suitable_rule,
    decode,
    encode,
    theorem12_map,
    theorem13_map,
    theorem14_map,
    theorem16_map,
    variant_poset,
    west_map,
    west_map_inverse,
)
from .classify import chain_component_pops, gk_reduction_check, pop_from_tuple
from .ferrers import (
    FerrersBoard,
    Transversal,
    boards,
    contains_pop_in_board,
    count_board_avoiders,
    essential_occurrence,
    shape_wilf_check,
    transversals,
)
from .permutation import avoiders, count_avoiders
from .poset import (
    LabeledPoset,
    block_reversal,
    chain_posets,
    disjoint_sum,
    ordinal_sum,
    parse_pop,
)

THEOREM13_PAIR = ("pop 5: c[3>5>1>2], i[4]", "pop 5: c[5>3>1>2], i[4]")
THEOREM12_PAIR = ("pop 5: c[5>1>2>3], i[4]", "pop 5: c[5>3>2>1], i[4]")


def _fail(report, **counterexample):
    report["pass"] = False
    report.setdefault("counterexample", counterexample)
    return report


def check_theorem_16(n_max=5):
    """Board-count equality on every board, full encode/decode round-trips,
    and the worked (5,5,4,4,3) example, bit-exact."""
    p, pp = variant_poset(VARIANT_P), variant_poset(VARIANT_P_PRIME)
    report = {"check": "theorem-1.6", "n_max": n_max, "pass": True,
              "boards": 0, "roundtrips": 0}
    for n in range(1, n_max + 1):
        for board in boards(n):
            if count_board_avoiders(board, p) != count_board_avoiders(board, pp):
                return _fail(report, board=str(board))
            report["boards"] += 1
            for T in transversals(board):
                if not contains_pop_in_board(T, p):
                    image = theorem16_map(T)
                    if contains_pop_in_board(image, pp):
                        return _fail(report, board=str(board), transversal=str(T))
                    if theorem16_map(image, inverse=True) != T:
                        return _fail(report, board=str(board), transversal=str(T))
                    report["roundtrips"] += 1
                if not contains_pop_in_board(T, pp):
                    image = theorem16_map(T, inverse=True)
                    if contains_pop_in_board(image, p) or theorem16_map(image) != T:
                        return _fail(report, board=str(board), transversal=str(T))
                    report["roundtrips"] += 1
    board = FerrersBoard((5, 5, 4, 4, 3))
    word = encode(Transversal(board, (4, 5, 3, 1, 2)), VARIANT_P)
    image = decode(word, board, VARIANT_P_PRIME)
    report["worked_example"] = {"word": str(word), "image": str(image)}
    if str(word) != "2,1,0,2,0" or str(image) != "41532":
        return _fail(report, worked_example=report["worked_example"])
    return report


def check_suitable_rule(n_max=5):
    """Constructive suitable-cell rule vs the completion oracle at every
    insertion state of every board, both variants."""
    report = {"check": "suitable-rule", "n_max": n_max, "pass": True,
              "disagreements": []}
    for n in range(1, n_max + 1):
        for board in boards(n):
            for variant in (VARIANT_P, VARIANT_P_PRIME):
                for item in certify_suitable_rule(board, variant):
                    report["disagreements"].append({"variant": variant,
                                                    "state": item})
    if report["disagreements"]:
        report["pass"] = False
    return report


def check_lemma_21(n_max=5, size_max=4):
    """Ordinary board containment vs essential-occurrence existence on all
    square boards, for every chain-component pattern of bounded size."""
    report = {"check": "lemma-2.1", "n_max": n_max, "size_max": size_max,
              "pass": True, "comparisons": 0}
    pops = [q for k in range(1, size_max + 1) for q in chain_component_pops(k)]
    for n in range(1, n_max + 1):
        board = FerrersBoard.square(n)
        for T in transversals(board):
            for q in pops:
                direct = contains_pop_in_board(T, q)
                reduced = essential_occurrence(T, q) is not None
                report["comparisons"] += 1
                if direct != reduced:
                    return _fail(report, board=str(board), transversal=str(T),
                                 pop=str(q))
    return report


def check_theorem_11(n_base=4, n_sum=5):
    """Ordinal sums preserve board-count equality: for pairs established
    equal on all boards <= n_base, p (+) v and p' (+) v stay equal on all
    boards <= n_sum, v a single vertex."""
    report = {"check": "theorem-1.1", "n_base": n_base, "n_sum": n_sum,
              "pass": True, "pairs": []}
    vertex = LabeledPoset(1, frozenset())
    pairs = [
        (variant_poset(VARIANT_P), variant_poset(VARIANT_P_PRIME)),
        (parse_pop("pop 3: c[3>2>1]"), parse_pop("pop 3: c[1>2>3]")),
    ]
    for p, pp in pairs:
        base = shape_wilf_check(p, pp, n_base)
        summed = shape_wilf_check(ordinal_sum(p, vertex), ordinal_sum(pp, vertex),
                                  n_sum)
        report["pairs"].append({"pair": [str(p), str(pp)],
                                "base_equal": base.equivalent,
                                "sum_equal": summed.equivalent})
        if not (base.equivalent and summed.equivalent):
            return _fail(report, pair=[str(p), str(pp)],
                         board=base.counterexample or summed.counterexample)
    return report


def check_theorem_12(n_max=5, count_n=7):
    """Coloring bijection suite on squares plus independent count equality."""
    p, pp = (parse_pop(t) for t in THEOREM12_PAIR)
    report = {"check": "theorem-1.2", "n_max": n_max, "count_n": count_n,
              "pass": True, "squares": []}
    for n in range(1, n_max + 1):
        board = FerrersBoard.square(n)
        side_a = [T for T in transversals(board) if not contains_pop_in_board(T, p)]
        side_b = [T for T in transversals(board) if not contains_pop_in_board(T, pp)]
        image = [theorem12_map(p, pp, T) for T in side_a]
        ok = (sorted(t.rows for t in image) == sorted(t.rows for t in side_b)
              and all(theorem12_map(p, pp, y, inverse=True) == T
                      for T, y in zip(side_a, image)))
        report["squares"].append({"n": n, "avoiders": len(side_a), "ok": ok})
        if not ok:
            return _fail(report, n=n)
    counts_a = count_avoiders(p, count_n).counts
    counts_b = count_avoiders(pp, count_n).counts
    report["counts"] = {"a": counts_a, "b": counts_b}
    if counts_a != counts_b:
        return _fail(report, counts=report["counts"])
    return report


def check_theorem_13(n_max=6, reference_counts=(1, 2, 6, 24, 115, 619, 3612)):
    """Three-step pipeline suite on the worked pair, plus the pair's counts
    against its classified row."""
    p, pp = (parse_pop(t) for t in THEOREM13_PAIR)
    report = {"check": "theorem-1.3", "n_max": n_max, "pass": True, "sizes": []}
    for n in range(1, n_max + 1):
        side_a = list(avoiders(p, n))
        side_b = list(avoiders(pp, n))
        image = [theorem13_map(p, pp, w) for w in side_a]
        ok = (sorted(image) == sorted(side_b)
              and all(theorem13_map(p, pp, y, inverse=True) == w
                      for w, y in zip(side_a, image)))
        report["sizes"].append({"n": n, "avoiders": len(side_a), "ok": ok})
        if not ok:
            return _fail(report, n=n)
    counts = count_avoiders(p, len(reference_counts)).counts
    report["counts"] = counts
    if counts != tuple(reference_counts):
        return _fail(report, counts=counts)
    return report


def check_west(n_max=6):
    """Rank-bijection suite on the reduced pair from the pipeline's worked
    instance (the chains 2143 and 2134)."""
    from .poset import delete_labels

    p, pp = (parse_pop(t) for t in THEOREM13_PAIR)
    q, qp = delete_labels(p, {4}), delete_labels(pp, {4})
    report = {"check": "west", "pair": [str(q), str(qp)], "n_max": n_max,
              "pass": True, "sizes": []}
    for n in range(1, n_max + 1):
        side_a = list(avoiders(q, n))
        side_b = list(avoiders(qp, n))
        image = [west_map(q, qp, w) for w in side_a]
        ok = (sorted(image) == sorted(side_b)
              and all(west_map_inverse(q, qp, y) == w
                      for w, y in zip(side_a, image)))
        report["sizes"].append({"n": n, "avoiders": len(side_a), "ok": ok})
        if not ok:
            return _fail(report, n=n)
    return report


def check_theorem_14(n_max=5, count_n=7):
    """Disjoint-sum rewrite suite for p = 21, q = 12, q' = 21, plus count
    equality of p+q and p+q'."""
    chain21 = parse_pop("pop 2: c[1>2]")
    chain12 = parse_pop("pop 2: c[2>1]")
    report = {"check": "theorem-1.4", "n_max": n_max, "count_n": count_n,
              "pass": True, "squares": []}
    pq = disjoint_sum(chain21, chain12)
    pqp = disjoint_sum(chain21, chain21)
    for n in range(1, n_max + 1):
        board = FerrersBoard.square(n)
        side_a = [T for T in transversals(board) if not contains_pop_in_board(T, pq)]
        side_b = [T for T in transversals(board) if not contains_pop_in_board(T, pqp)]
        image = [theorem14_map(chain21, chain12, chain21, T) for T in side_a]
        ok = (sorted(t.rows for t in image) == sorted(t.rows for t in side_b)
              and all(theorem14_map(chain21, chain12, chain21, y, inverse=True) == T
                      for T, y in zip(side_a, image)))
        report["squares"].append({"n": n, "avoiders": len(side_a), "ok": ok})
        if not ok:
            return _fail(report, n=n)
    counts_a = count_avoiders(pq, count_n).counts
    counts_b = count_avoiders(pqp, count_n).counts
    report["counts"] = {"p+q": counts_a, "p+q'": counts_b}
    if counts_a != counts_b:
        return _fail(report, counts=report["counts"])
    return report


def _chain_pairs(size_cap):
    for ka in range(1, size_cap):
        for kb in range(1, size_cap - ka + 1):
            for a in chain_posets(ka):
                for b in chain_posets(kb):
                    yield a, b


def check_theorem_15(size_cap=5, n_max=7):
    """Disjoint sums commute up to counts: |S_n(p+q)| = |S_n(q+p)| for all
    chain pairs within the size cap."""
    report = {"check": "theorem-1.5", "size_cap": size_cap, "n_max": n_max,
              "pass": True, "pairs": 0}
    cache = {}

    def counts(p):
        if p not in cache:
            cache[p] = count_avoiders(p, n_max, budget=None).counts
        return cache[p]

    for a, b in _chain_pairs(size_cap):
        if counts(disjoint_sum(a, b)) != counts(disjoint_sum(b, a)):
            return _fail(report, p=str(a), q=str(b))
        report["pairs"] += 1
    return report


def check_lemma_31(size_cap=5):
    """Label identity: reversing the first block, the whole poset, then the
    second block turns p+q into q+p, exactly."""
    report = {"check": "lemma-3.1", "size_cap": size_cap, "pass": True,
              "pairs": 0}
    for a, b in _chain_pairs(size_cap):
        s = disjoint_sum(a, b)
        step = block_reversal(s, range(1, a.size + 1))
        step = step.reverse()
        step = block_reversal(step, range(1, b.size + 1))
        if step != disjoint_sum(b, a):
            return _fail(report, p=str(a), q=str(b))
        report["pairs"] += 1
    return report


GK_SAMPLES = (
    "pop 3: c[2>1], i[3]",
    "pop 4: c[1>2>3], i[4]",
    "pop 4: c[2>3], i[1], i[4]",
    "pop 4: c[3>4>2], i[1]",
    "pop 5: c[2>4>3], i[1], i[5]",
    "pop 3: i[1], i[2], i[3]",
)


def check_gk_51(n_max=7):
    """Empirical validity region of the extreme-isolated reduction formula
    on the bundled samples; the printed case split must fail enumeration on
    the flagship sample (its |S_3| is 3, not 0)."""
    report = {"check": "gk-5.1", "n_max": n_max, "pass": True, "samples": []}
    for text in GK_SAMPLES:
        r = gk_reduction_check(parse_pop(text), n_max)
        report["samples"].append({
            "pop": r.pop, "inner": r.inner, "removed": r.removed,
            "rows": [list(row) for row in r.rows],
            "formula_holds_for": list(r.formula_holds_for),
            "printed_split_consistent": r.printed_split_consistent,
        })
        if any(not equal for n, _, _, equal in r.rows if n >= r.removed):
            return _fail(report, pop=r.pop)
    flagship = report["samples"][0]
    report["flagged_inconsistent"] = not flagship["printed_split_consistent"]
    if not report["flagged_inconsistent"]:
        return _fail(report, note="printed case split unexpectedly consistent")
    return report


CHECKS = {
    "1.1": check_theorem_11,
    "1.2": check_theorem_12,
    "1.3": check_theorem_13,
    "1.4": check_theorem_14,
    "1.5": check_theorem_15,
    "1.6": check_theorem_16,
    "lemma-2.1": check_lemma_21,
    "lemma-3.1": check_lemma_31,
    "gk-5.1": check_gk_51,
}
