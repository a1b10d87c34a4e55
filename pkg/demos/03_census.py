"""Counting well-behaved intervals and checking the closed formulas.

Each census section counts intervals of one shape (ideals, intervals over a
single adjacent transposition, elements boolean over their support) and
compares the count with a Fibonacci/Catalan-flavoured closed form.

    python demos/03_census.py
"""

from permorders import census_rows, count_bruhat_atom_boolean, fibonacci, verify

# ---------------------------------------------------------------------------
# one census section, printed as a small table
# ---------------------------------------------------------------------------

print("boolean intervals [s_k, w] in Bruhat order, degrees 3..6")
print(f"{'n':>3} {'k':>3} {'counted':>9} {'formula':>9}")
for n in range(3, 7):
    for k in range(1, n):
        row = count_bruhat_atom_boolean(n, k)
        print(f"{row.n:>3} {row.k:>3} {row.counted:>9} {row.formula:>9}")
print()

# the counts are built constructively (witness words glued around s_k), so
# degree 9 is still fast
row = count_bruhat_atom_boolean(9, 4)
print("degree 9, k=4:", row.counted, "tops;", "matches formula" if row.match else "MISMATCH")
print("..and that formula is 16 * F(6) * F(8) =", 16 * fibonacci(6) * fibonacci(8))
print()

# ---------------------------------------------------------------------------
# several sections at once
# ---------------------------------------------------------------------------

rows = census_rows(["poi", "support"], [4, 5])
print("ideal and support censuses for degrees 4 and 5")
for r in rows:
    k = "-" if r.k is None else r.k
    flag = "ok" if r.match else "MISMATCH"
    print(f"  n={r.n} k={k} {r.order:7s} {r.cls:24s} {r.counted:>6} vs {r.formula:<6} {flag}")
print()

# ---------------------------------------------------------------------------
# the full gate, as the CLI's `verify` runs it
# ---------------------------------------------------------------------------

rows, ok = verify([3, 4, 5])
print(f"verify over degrees 3..5: {len(rows)} rows,", "all match" if ok else "MISMATCHES")
