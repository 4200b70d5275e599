"""Exact computation in Thompson's group F.

Elements are exact piecewise-linear homeomorphisms of [0, 1] with dyadic
breakpoints and power-of-two slopes.  The package builds, for any finite set
of nontrivial free-group words, explicit elements of F at which none of the
words evaluates to the identity.
"""
from ._backend import BACKEND
from .dyadic import DyadicRational, parse_dyadic
from .interpolate import DyadicPartition, interpolate, segment_map
from .plmap import (
    FElement,
    abelianization,
    compose,
    equals,
    evaluate,
    identity,
    in_derived_subgroup,
    inverse,
    is_identity,
    make_element,
    preimage,
    standard_generator,
)
from .render import render_svg
from .witness import (
    PartialDyadicMap,
    WitnessReport,
    complete,
    constraints_from_word,
    default_partition,
    multi_witness,
    universal_witness,
    witness_for_word,
)
from .words import (
    FreeWord,
    combine_identity,
    commutator,
    embed_two_vars,
    enumerate_reduced,
    evaluate_word,
    parse_word,
    primitive_root,
)

__version__ = "0.1.0"

__all__ = [
    "abelianization",
    "BACKEND",
    "combine_identity",
    "commutator",
    "complete",
    "compose",
    "constraints_from_word",
    "default_partition",
    "DyadicPartition",
    "DyadicRational",
    "embed_two_vars",
    "enumerate_reduced",
    "equals",
    "evaluate",
    "evaluate_word",
    "FElement",
    "FreeWord",
    "identity",
    "in_derived_subgroup",
    "interpolate",
    "inverse",
    "is_identity",
    "make_element",
    "multi_witness",
    "parse_dyadic",
    "parse_word",
    "PartialDyadicMap",
    "preimage",
    "primitive_root",
    "render_svg",
    "segment_map",
    "standard_generator",
    "universal_witness",
    "witness_for_word",
    "WitnessReport",
]
