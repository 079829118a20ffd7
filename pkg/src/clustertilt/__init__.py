"""Cluster categories of simply-laced Dynkin quivers.

The package builds the orbit category of the bounded derived category of a
path algebra combinatorially, computes Hom and Ext spaces in it, enumerates
tilting objects with their exchange structure, and presents endomorphism
algebras of tilting objects as quivers with relations.
"""

from .category import CategorySummary, CHom, ClusterCategory
from .clustertilted import (
    AlgebraPresentation,
    apr_mutate,
    endo_presentation,
    exchange_simples,
    module_category,
    theorem_b_verify,
)
from .errors import ClusterTiltError
from .quiver import QuiverSpec, parse_quiver, recognize_dynkin
from .tilting import TiltingObject, complements, enumerate_tilting

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation",
    "CategorySummary",
    "CHom",
    "ClusterCategory",
    "ClusterTiltError",
    "QuiverSpec",
    "TiltingObject",
    "apr_mutate",
    "complements",
    "endo_presentation",
    "enumerate_tilting",
    "exchange_simples",
    "module_category",
    "parse_quiver",
    "recognize_dynkin",
    "theorem_b_verify",
    "__version__",
]
