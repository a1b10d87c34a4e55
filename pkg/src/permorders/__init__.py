"""Interval structure in the Bruhat and weak orders of symmetric groups.

The package answers, for desk-scale symmetric groups, which intervals are
lattices / modular / distributive / boolean — three ways at once: closed
pattern- and word-criteria, literal poset classification, and counting
formulas — and insists that all routes agree.
"""

from .census import (
    BOOLEAN,
    LATTICE,
    MODDIST,
    SUPPORT,
    CensusRow,
    atom_boolean_formula,
    atom_boolean_tops,
    atom_lattice_formula,
    catalan,
    census_rows,
    count_boolean_over_support,
    count_bruhat_atom_boolean,
    count_bruhat_atom_lattice,
    count_poi_classes,
    count_weak_atom,
    fibonacci,
    support_formula,
    verify,
    weak_atom_boolean_total,
    weak_atom_formula,
)
from .criteria import (
    CriteriaReport,
    boolean_over_support_bruhat,
    boolean_over_support_weak,
    bruhat_atom_interval_boolean,
    bruhat_atom_interval_class,
    bruhat_atom_interval_lattice,
    classify_interval_report,
    classify_poi_report,
    poi_bruhat_class,
    poi_weak_class,
    weak_interval_class,
)
from .hasse import interval_to_dot, poset_to_dot
from .orders import (
    BRUHAT,
    WEAK,
    bruhat_covers_down,
    bruhat_leq,
    covers_down,
    ideal,
    interval,
    leq,
    weak_covers_down,
    weak_leq,
)
from .patterns import avoids, contains, is_boolean_element, is_free, is_fully_commutative
from .perms import (
    Perm,
    all_perms,
    format_perm,
    generator,
    identity,
    inverse,
    left_action,
    left_descents,
    length,
    longest_element,
    make_perm,
    multiply,
    parse_perm,
    right_action,
    right_descents,
)
from .posets import (
    FinitePoset,
    LatticeReport,
    classify,
    from_cover_file,
    from_cover_lines,
    is_boolean,
    is_distributive,
    is_lattice,
    is_modular,
    meet_join_tables,
    poset_isomorphic,
    to_cover_lines,
)
from .words import (
    Word,
    canonical_word,
    evaluate,
    format_word,
    is_product_of_distinct_generators,
    is_reduced,
    move_closure,
    reduced_words,
    support,
)

__version__ = "0.1.0"
