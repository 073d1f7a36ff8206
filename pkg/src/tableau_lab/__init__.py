"""Rectangular Kostka numbers, LIS-constrained permutations and the
bijections between them."""

from .bijection import (
    BijectionParams,
    enumerate_m_blocks,
    extract_q,
    forward_base,
    forward_skew,
    inverse_base,
    inverse_skew,
)
from .complement import column_complement, column_precedes, tableau_complement
from .enumeration import (
    count_colored_noncrossing,
    count_perm_class,
    count_syt_hook,
    enumerate_ssyt,
    enumerate_syt,
    kostka,
    rect_catalan,
    superfactorial,
)
from .errors import (
    DomainError,
    MembershipError,
    ResourceError,
    ShapeError,
    TableauLabError,
    ValidationError,
)
from .rsk import (
    TableauPair,
    has_block_head,
    has_disjoint_lis_block,
    has_lis_prefix,
    lis_length,
    rsk,
    rsk_inverse,
)
from .tableaux import (
    Diagram,
    RectShape,
    SkewWeight,
    Tableau,
    classify_tableau,
    content_of,
    expand_skew_weight,
    rect_subtract_shape,
    rect_subtract_tableau,
    rectangle,
)
