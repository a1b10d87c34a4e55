"""Deterministic Graphviz DOT output for interval diagrams.

Nodes are one-line notations (two-line labels add the lexicographically
smallest reduced word), sorted by (length, one-line); edges point from
lower cover to upper element with ``rankdir=BT`` so diagrams read bottom-up.
Optional highlighting fills every element that is boolean over its whole
support.  Output is byte-stable for a given interval.
"""

from __future__ import annotations

from .criteria import boolean_over_support_bruhat, boolean_over_support_weak
from .orders import BRUHAT, check_order, interval
from .perms import Perm, format_perm, length
from .posets import FinitePoset
from .words import canonical_word, format_word

HIGHLIGHT_FILL = "#f4cccc"


def poset_to_dot(
    P: FinitePoset,
    labeler=None,
    highlight: frozenset | set = frozenset(),
    name: str = "poset",
) -> str:
    """Render any finite poset; ``labeler`` maps a label to (id, text)."""
    if labeler is None:
        labeler = lambda lab: (str(lab), str(lab))
    ids = {}
    rows = []
    for lab in P.labels:
        node_id, text = labeler(lab)
        ids[lab] = node_id
        rows.append((node_id, text, lab in highlight))
    rows.sort(key=lambda r: r[0])
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=box, fontname="monospace"];']
    for node_id, text, hot in rows:
        style = f', style=filled, fillcolor="{HIGHLIGHT_FILL}"' if hot else ""
        lines.append(f'  "{node_id}" [label="{text}"{style}];')
    edges = sorted(
        (ids[P.labels[i]], ids[P.labels[j]]) for i, j in P.cover_pairs_idx()
    )
    for lo, hi in edges:
        lines.append(f'  "{lo}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def interval_to_dot(
    bottom: Perm, top: Perm, order: str, highlight_support: bool = False
) -> str:
    """DOT text for the interval [bottom, top] in the chosen order.

    >>> text = interval_to_dot((1, 2, 3, 4), (2, 1, 4, 3), "bruhat")
    >>> text.count("->")
    4
    """
    check_order(order)
    P = interval(bottom, top, order)
    flag = boolean_over_support_bruhat if order == BRUHAT else boolean_over_support_weak
    highlight = frozenset(w for w in P.labels if highlight_support and flag(w))

    def labeler(w: Perm):
        key = f"{length(w):02d}.{format_perm(w)}"
        return key, f"{format_perm(w)}\\n{format_word(canonical_word(w))}"

    return poset_to_dot(P, labeler, highlight, name="interval")
