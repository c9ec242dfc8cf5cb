"""Pattern-avoiding permutations, their word-pair codec, and exact bounds.

The packages fit together bottom-up: :mod:`permcodec.perms` holds the
containment oracle and avoidance-class enumeration, :mod:`permcodec.coloring`
the red/blue coloring and ABCD marking, :mod:`permcodec.words` the CB-free
word counts, :mod:`permcodec.codec` the encoders and greedy decoders,
:mod:`permcodec.bounds` the exact bound comparisons, and
:mod:`permcodec.cli` the command-line front end.

Everything is pure and safe for concurrent use.
"""

from .bounds import (BOUND_BASE, CountReport, ZSqrt3, growth_table,
                     headline_value, pair_bound_below_headline,
                     verify_16, verify_bounds, verify_headline)
from .codec import (PATTERN_1324, CodePair, DecodeFailure, decode, encode,
                    reconstruct_132, reconstruct_213, uv_encode_132)
from .coloring import (BLUE, RED, ColoredPermutation, color, position_word,
                       value_word)
from .perms import (DEFAULT_ENUMERATION_CAP, EnumerationCapError, Perm,
                    as_perm, avoids, catalan, contains, count_avoiders,
                    count_avoiders_with_first, enumerate_avoiders,
                    ltr_minima, rtl_maxima)
from .words import (as_type_word, cb_free_closed_form, count_cb_free,
                    enumerate_cb_free, gf_coefficients, is_cb_free,
                    series_quotient)

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "BOUND_BASE",
    "CodePair",
    "ColoredPermutation",
    "CountReport",
    "DecodeFailure",
    "DEFAULT_ENUMERATION_CAP",
    "EnumerationCapError",
    "PATTERN_1324",
    "Perm",
    "RED",
    "ZSqrt3",
    "as_perm",
    "as_type_word",
    "avoids",
    "catalan",
    "cb_free_closed_form",
    "color",
    "contains",
    "count_avoiders",
    "count_avoiders_with_first",
    "count_cb_free",
    "decode",
    "encode",
    "enumerate_avoiders",
    "enumerate_cb_free",
    "gf_coefficients",
    "growth_table",
    "headline_value",
    "is_cb_free",
    "ltr_minima",
    "pair_bound_below_headline",
    "position_word",
    "reconstruct_132",
    "reconstruct_213",
    "rtl_maxima",
    "series_quotient",
    "uv_encode_132",
    "value_word",
    "verify_16",
    "verify_bounds",
    "verify_headline",
]
