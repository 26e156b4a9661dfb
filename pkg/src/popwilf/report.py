"""Rendering: classification tables as Markdown/CSV/JSON, and the figure
written next to any delimited output."""

from __future__ import annotations

import json

from .classify import pop_from_tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def _isolated_group(notation):
    try:
        p = pop_from_tuple(notation)
    except ValueError:
        from .poset import parse_pop

        p = parse_pop(notation)
    return tuple(sorted(p.isolated_vertices()))


def _grouped(report):
    groups = {}
    for cls in report.classes:
        groups.setdefault(_isolated_group(cls.representative), []).append(cls)
    return sorted(groups.items())


def emit_table(report, fmt="md"):
    """One classification report as a document; classes carrying the same
    isolated labels are grouped the way the published tables separate them."""
    if fmt == "md":
        lines = [f"## Wilf classes: {report.family} (horizon {report.horizon})", ""]
        row = 1
        for iso, classes in _grouped(report):
            label = ",".join(str(x) for x in iso) if iso else "none"
            lines.append(f"**isolated labels: {label}**")
            lines.append("")
            lines.append("| no. | members | counts (n=1..{}) | sequence |".format(
                report.horizon))
            lines.append("|---|---|---|---|")
            for cls in classes:
                members = " ".join(cls.members)
                counts = ",".join(str(c) for c in cls.counts)
                lines.append(f"| {row} | {members} | {counts} | {cls.oeis or ''} |")
                row += 1
            lines.append("")
        return "\n".join(lines)
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["family", "group", "class", "representative", "member"]
                        + [f"n{i}" for i in range(1, report.horizon + 1)]
                        + ["sequence"])
        row = 1
        for iso, classes in _grouped(report):
            label = " ".join(str(x) for x in iso) if iso else "none"
            for cls in classes:
                for member in cls.members:
                    writer.writerow([report.family, label, row,
                                     cls.representative, member,
                                     *cls.counts, cls.oeis or ""])
                row += 1
        return buf.getvalue()
    if fmt == "json":
        payload = {"family": report.family, "horizon": report.horizon,
                   "groups": []}
        for iso, classes in _grouped(report):
            payload["groups"].append({
                "isolated_labels": list(iso),
                "classes": [{"representative": cls.representative,
                             "members": list(cls.members),
                             "counts": list(cls.counts),
                             "sequence": cls.oeis} for cls in classes]})
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit_tables(reports, fmt="md"):
    if fmt == "json":
        return "[" + ",\n".join(emit_table(r, "json").rstrip() for r in reports) + "]\n"
    return "\n".join(emit_table(r, fmt) for r in reports)


def render_classes_figure(report, path):
    """Log-scale growth of every class's count sequence."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs = range(1, report.horizon + 1)
    for cls in report.classes:
        ax.plot(xs, cls.counts, marker="o", markersize=3, linewidth=1,
                label=cls.representative)
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("avoiders")
    ax.set_title(f"{report.family}: {len(report.classes)} classes "
                 f"(n = 1..{report.horizon})")
    if len(report.classes) <= 16:
        ax.legend(fontsize=6, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_sequence_figure(seq, path):
    """Single count sequence, log scale."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(range(1, seq.horizon + 1), seq.counts, marker="o")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("avoiders")
    ax.set_title(seq.pop)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
