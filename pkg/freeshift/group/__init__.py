from .freegroup import (
    IDENTITY,
    GroupSpec,
    SiteSet,
    Word,
    ball,
    ball_size,
    ball_tree,
    distance,
    format_word,
    generator_pairs,
    geodesic_hull,
    geodesic_suffixes,
    is_spanning_tree,
    left_ball,
    parent_structure,
    parse_word,
    reduce,
    word_length,
)

__all__ = [
    "IDENTITY",
    "GroupSpec",
    "SiteSet",
    "Word",
    "ball",
    "ball_size",
    "ball_tree",
    "distance",
    "format_word",
    "generator_pairs",
    "geodesic_hull",
    "geodesic_suffixes",
    "is_spanning_tree",
    "left_ball",
    "parent_structure",
    "parse_word",
    "reduce",
    "word_length",
]
