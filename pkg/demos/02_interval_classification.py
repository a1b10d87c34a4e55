"""Interval extraction and lattice-law classification, two ways.

Every interval [v, w] in Bruhat or weak order is a finite poset; the library
can build it explicitly and test the lattice laws on the meet/join tables,
or answer instantly from closed-form rules on the endpoints.  This script
shows both routes agreeing.

    python demos/02_interval_classification.py
"""

from permorders import (
    classify,
    classify_interval_report,
    classify_poi_report,
    format_perm,
    generator,
    identity,
    interval,
    parse_perm,
)


def show(rep):
    names = ("lattice", "modular", "distributive", "boolean")
    for route in ("predicate", "structural"):
        part = getattr(rep, route)
        if part is None:
            print(f"  {route:10s} (no rule / not requested)")
            continue
        verdicts = "  ".join(f"{n}={'y' if v else 'n'}" for n, v in zip(names, part.flags))
        print(f"  {route:10s} {verdicts}")
    if rep.agree is not None:
        print("  routes agree:", rep.agree)
    print()


# ---------------------------------------------------------------------------
# principal order ideals [e, w]
# ---------------------------------------------------------------------------

for text, order in (("2143", "bruhat"), ("3412", "weak"), ("45312", "weak")):
    w = parse_perm(text)
    rep = classify_poi_report(w, order, structural=True)
    print(f"ideal below {format_perm(w)} in the {order} order")
    show(rep)

# ---------------------------------------------------------------------------
# intervals over a single adjacent transposition
# ---------------------------------------------------------------------------

# bottom s_2, top 3412: a rank-3 lattice that is *not* modular (it contains
# a crown-free 10-element ring)
rep = classify_interval_report(generator(4, 2), parse_perm("3412"), "bruhat", structural=True)
print("interval [1324, 3412] in Bruhat order")
show(rep)

# bottom s_1, top 3214: boolean, even though 3214 itself is not
rep = classify_interval_report(generator(4, 1), parse_perm("3214"), "bruhat", structural=True)
print("interval [2134, 3214] in Bruhat order")
show(rep)

# ---------------------------------------------------------------------------
# raw structural classification of any extracted interval
# ---------------------------------------------------------------------------

P = interval(identity(4), parse_perm("4321"), "bruhat")
print(f"whole Bruhat order of degree 4: {P.size} elements,", classify(P))

Q = interval(identity(4), parse_perm("4321"), "weak")
print(f"whole weak order of degree 4:   {Q.size} elements,", classify(Q))
