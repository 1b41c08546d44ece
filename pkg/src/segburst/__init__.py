"""Codes for segmented burst-deletion channels.

A word of length n = b*gamma is cut into gamma segments of length b. Each
segment may lose one burst of exactly t consecutive symbols, and the receiver
does not know where the segments start. Every segment is encoded into a
one-burst syndrome class with extra boundary constraints, so the decoder can
find each segment's start and repair it.
"""
from .channel import (all_error_patterns, apply_channel, apply_channel_random, burst_ball,
                      confusable_neighbors, segmented_ball)
from .codec import (Codebook, build_codebook, class_constraints, decode, encode, rate,
                    satisfies, search_scheme)
from .errors import (AmbiguousError, ConfigurationError, ConstructionError, DecodeError,
                     LengthMismatchError, NoCandidateError, NotInCodebookError, ParameterError)
from .harness import ExperimentConfig, emit, verify_exhaustive, verify_montecarlo
from .labeling import DEFAULT_SCHEME, LabelingScheme, certify, label, recover_from_burst
from .redundancy import redundancy_report, table_one
from .seq_core import ChannelParams, burst_pattern, indicator_vector, is_dense, segment
from .syndrome import a_syndromes, decode_one_burst, f_syndrome, window_layout, window_parities

__all__ = [
    "a_syndromes",
    "all_error_patterns",
    "AmbiguousError",
    "apply_channel",
    "apply_channel_random",
    "build_codebook",
    "burst_ball",
    "burst_pattern",
    "certify",
    "ChannelParams",
    "class_constraints",
    "Codebook",
    "ConfigurationError",
    "confusable_neighbors",
    "ConstructionError",
    "decode",
    "decode_one_burst",
    "DecodeError",
    "DEFAULT_SCHEME",
    "emit",
    "encode",
    "ExperimentConfig",
    "f_syndrome",
    "indicator_vector",
    "is_dense",
    "label",
    "LabelingScheme",
    "LengthMismatchError",
    "NoCandidateError",
    "NotInCodebookError",
    "ParameterError",
    "rate",
    "recover_from_burst",
    "redundancy_report",
    "satisfies",
    "search_scheme",
    "segment",
    "segmented_ball",
    "table_one",
    "verify_exhaustive",
    "verify_montecarlo",
    "window_layout",
    "window_parities",
]

__version__ = "0.1.0"
