"""Tour of the permutation and reduced-word layer.

Run from anywhere after installing the package:

    python demos/01_permutations_and_words.py
"""

from permorders import (
    all_perms,
    canonical_word,
    format_perm,
    format_word,
    inverse,
    left_descents,
    length,
    longest_element,
    move_closure,
    multiply,
    parse_perm,
    reduced_words,
    right_descents,
    support,
)

# ---------------------------------------------------------------------------
# one-line notation and the group operations
# ---------------------------------------------------------------------------

w = parse_perm("35142")
print("w           =", format_perm(w))
print("w inverse   =", format_perm(inverse(w)))
print("w * w^-1    =", format_perm(multiply(w, inverse(w))))
print("length(w)   =", length(w), "inversions")
print("descents    right:", sorted(right_descents(w)), " left:", sorted(left_descents(w)))
print()

# ---------------------------------------------------------------------------
# every reduced word, and the moves connecting them
# ---------------------------------------------------------------------------

words = sorted(reduced_words(w))
print(f"{format_perm(w)} has {len(words)} reduced words:")
for word in words:
    print("   ", format_word(word))
print("canonical (lexicographically least):", format_word(canonical_word(w)))
print("letters used (support):", sorted(support(w)))

# starting from any single reduced word, commutation moves (swap far-apart
# letters) and braid moves (aba <-> bab) reach all the others
closure = move_closure(canonical_word(w), len(w))
print("closure under moves finds the same set:", closure == set(words))
print()

# ---------------------------------------------------------------------------
# a couple of classical counts, recomputed
# ---------------------------------------------------------------------------

print("|R(4321)| =", len(reduced_words((4, 3, 2, 1))), "(expected 16)")

top = longest_element(5)
print("longest element of degree 5:", format_perm(top), "with length", length(top))

fixed_points = sum(1 for u in all_perms(4) if u == inverse(u))
print("involutions in degree 4:", fixed_points)
