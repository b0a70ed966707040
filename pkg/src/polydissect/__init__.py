"""Bijective enumeration of polygon dissections via nested sets and set partitions."""

from .bijections import (
    decode_triple,
    encode_triple,
    gamma,
    gamma_inv,
    induced_action,
    phi,
    phi_inv,
)
from .core import (
    InternallyOrderedPartition,
    NestedSet,
    ParenthesizedList,
    Partition2,
    Triple,
    ValidationError,
    block_order,
    dumps,
    from_json,
    loads,
    to_json,
    validate,
)
from .counting import (
    DissectionType,
    assoc_stirling2,
    distinguished_count,
    kirkman_cayley,
    type_count,
)
from .dissect import (
    PolygonDissection,
    dissection_from_parenthesization,
    dissection_type,
    parenthesization_from_dissection,
    render_svg,
)
from .trees import (
    LevelTree,
    nested_set_from_tree,
    ordered_tree_from_parenthesization,
    tree_from_nested_set,
)

__version__ = "0.1.0"
