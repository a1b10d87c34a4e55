"""Emit Graphviz DOT diagrams for a few intervals.

Writes .dot files next to this script (render with `dot -Tsvg file.dot`).
The CLI does the same job: permorders hasse --bottom 1234 --top 4321
--order bruhat --highlight-support -o out.dot

    python demos/04_hasse_diagrams.py
"""

from pathlib import Path

from permorders import interval_to_dot, parse_perm

HERE = Path(__file__).resolve().parent

jobs = [
    # (name, bottom, top, order, highlight elements boolean over support?)
    ("diamond_2143", "1234", "2143", "bruhat", False),
    ("ring_s2_3412", "1324", "3412", "bruhat", False),
    ("bruhat_s4", "1234", "4321", "bruhat", True),
    ("weak_s4", "1234", "4321", "weak", True),
]

for name, bottom, top, order, highlight in jobs:
    text = interval_to_dot(parse_perm(bottom), parse_perm(top), order, highlight)
    path = HERE / f"{name}.dot"
    path.write_text(text, encoding="utf-8")
    nodes = text.count("[label=")
    edges = text.count(" -> ")
    hot = text.count("fillcolor")
    note = f", {hot} highlighted" if highlight else ""
    print(f"wrote {path.name}: {nodes} nodes, {edges} cover edges{note}")

print()
print("the highlighted elements of bruhat_s4.dot are exactly those whose")
print("interval over every letter of their support is boolean - 15 of 24.")
