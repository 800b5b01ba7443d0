"""Base-functor steps and the indexed carriers built from them."""

from .carriers import (
    EMPTY_ELIST,
    EMPTY_HEAP,
    EMPTY_OLIST,
    EMPTY_STREE,
    EList,
    Heap,
    OList,
    STree,
    elist,
    in_heap,
    in_list,
    in_olist,
    in_stree,
    olist,
    olist_to_plain,
    out_heap,
    out_list,
    out_olist,
    out_stree,
    validate,
)
from .steps import (
    LEAF,
    NIL,
    Cons,
    Either,
    HNode,
    Indexed,
    Leaf,
    Left,
    Nil,
    OCons,
    Right,
    SNode,
    either,
    evidence_holds,
    fanout,
    identity,
    index_of,
    map_step,
    mk_hnode,
    mk_ocons,
    mk_snode,
    require_evidence,
    step_index,
)
