"""Pattern avoidance in reading words of standard skew tableaux.

Exact counts, exhaustive oracles and explicit bijections for the classes
``L_{n,k;r}`` (which include the alternating permutations) and for skew
shapes in general.  The hot loops run in a compiled extension when it is
available; ``skewpat.kernels.BACKEND`` says which one was loaded.
"""

from .bijections import (
    GoodTableau,
    build_132,
    build_213,
    build_231,
    build_312,
    good_of_perm,
    good_to_syt,
    k2_bijection,
    k2_bijection_inverse,
    map_132,
    map_213,
    map_231,
    map_312,
    perm_of_good,
    rect_bijection,
    rect_bijection_inverse,
    slide_move,
    syt_to_good,
    transport,
)
from .core import (
    ClassSpec,
    ContainmentError,
    LengthMismatchError,
    MembershipError,
    NotBasicError,
    Partition,
    SkewpatError,
    SkewShape,
    SkewTableau,
    avoids,
    class_shape,
    complement,
    conjugate,
    contains_pattern,
    descent_set,
    inverse,
    is_involution,
    is_member,
    lis_length,
    normalize_shape,
    reading_word,
    reverse,
    reverse_complement,
    rotate_complement,
    standardize,
)
from .counting import (
    catalan,
    count_123,
    count_132,
    count_213,
    count_231,
    count_312,
    count_321,
    count_A2n1_1234,
    count_A2n_1234,
    count_class_monotone,
    count_subpartitions,
    hook_count,
    skew_count,
)
from .enumeration import (
    CountReport,
    EnumerationLimitError,
    all_class,
    all_syt,
    basic_shapes,
    count_avoiders,
    count_class_avoiders,
    reading_words,
    subpartitions,
)
from .kernels import BACKEND
from .rsk import (
    InsertionResult,
    TableauPair,
    doubly_map,
    doubly_map_inverse,
    modified_rsk,
    modified_rsk_inverse,
    modified_rsk_odd,
    modified_rsk_odd_inverse,
    rsk_inverse,
    schensted_insert,
)

__version__ = "0.1.0"
