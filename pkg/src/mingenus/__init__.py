"""Minimal genus function of Sigma_g x T^2, computed exactly on integer homology."""
__version__ = "0.1.0"

from .errors import (BudgetExceededError, ContextMismatchError, DomainError, InvalidIndexError,
                     MinGenusError, ParseError, PreconditionError, UnsupportedContextError)
from .homology import (ClassH2, GenusContext, basis_class, divisibility, intersect, pair_with_F,
                       parse_class, self_intersection)
from .mapclass import GeneratorMove, act, apply_word, generator_set, parse_move, parse_word
from .normalform import NormalizationResult, full_normalize, is_normal
from .genus import (Case, GenusResult, TensorFactorization, adjunction_bound, complexity_x,
                    complexity_xc, decompose_tensor, minimal_genus, thurston_norm_pushforward)
from .twisted import TwistedClass, parse_twisted, twisted_minimal_genus
from .surfcalc import check_transcript, replay_construction
from .autgroup import (CandidateAutomorphism, bounded_word_search, check_membership_in_H,
                       exotic_phi, word_search)

__all__ = [n for n in dir() if not n.startswith("_")]
