"""
Kalmbach embeddings of set-labelled bounded posets.
"""

from .poset import (
    SetPoset,
    set_label,
    maximal_chains,
    parse_set,
    parse_poset,
    emit_poset,
)
from .embedding import (
    ChainBlock,
    EmbeddingMap,
    EmbeddingReport,
    chain_block,
    interval_label,
    kalmbach_embedding,
    verify_embedding,
    state_classification,
    full_state_check,
)

__all__ = [
    # Posets
    "SetPoset",
    "set_label",
    "maximal_chains",
    "parse_set",
    "parse_poset",
    "emit_poset",

    # Embedding
    "ChainBlock",
    "EmbeddingMap",
    "EmbeddingReport",
    "chain_block",
    "interval_label",
    "kalmbach_embedding",
    "verify_embedding",
    "state_classification",
    "full_state_check",
]
