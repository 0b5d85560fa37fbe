from legis.vector.embedding import (
    DEFAULT_DIMENSION,
    CallableEmbedder,
    EmbeddingBackend,
    MockEmbedder,
    cosine_distance,
    feature_hash_vector,
)
from legis.vector.hnsw import (
    DEFAULT_EF_CONSTRUCTION,
    DEFAULT_EF_SEARCH,
    DEFAULT_M,
    INDEX_FORMAT_VERSION,
    HnswIndex,
    brute_force_knn,
)

__all__ = [
    "CallableEmbedder",
    "DEFAULT_DIMENSION",
    "DEFAULT_EF_CONSTRUCTION",
    "DEFAULT_EF_SEARCH",
    "DEFAULT_M",
    "EmbeddingBackend",
    "HnswIndex",
    "INDEX_FORMAT_VERSION",
    "MockEmbedder",
    "brute_force_knn",
    "cosine_distance",
    "feature_hash_vector",
]
