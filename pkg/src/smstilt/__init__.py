"""Two-term tilting combinatorics and simple-minded systems of
self-injective Nakayama algebras: triangulations of the punctured
polygon, Brauer trees, two-term complexes, configurations of the stable
AR-quiver, and the mutation-transport map connecting them."""

from .modcat import Algebra, Ind
from .disc import Arc, Triangulation, all_arcs, compatible, enumerate_triangulations, flip, fold, unfold
from .brauer import BrauerTree, brauer_iso, kauer_mutate, psi, star_mutation_sequence
from .complexes import Arrow, Stalk, TwoTerm, hom_complex_dim, is_silting, is_tilting, phi, two_term_mutate
from .smscfg import Configuration, enumerate_configurations, is_configuration, omega_insert, prune_type, sms_mutate, tilde
from .transport import canonical_sequence, exchange_quiver, fmap, verify

__all__ = [
    "Algebra", "Ind", "Arc", "Triangulation", "BrauerTree", "TwoTerm",
    "Stalk", "Arrow", "Configuration",
    "all_arcs", "compatible", "enumerate_triangulations", "flip", "fold", "unfold",
    "brauer_iso", "kauer_mutate", "psi", "star_mutation_sequence",
    "hom_complex_dim", "is_silting", "is_tilting", "phi", "two_term_mutate",
    "enumerate_configurations", "is_configuration", "omega_insert",
    "prune_type", "sms_mutate", "tilde",
    "canonical_sequence", "exchange_quiver", "fmap", "verify",
]
