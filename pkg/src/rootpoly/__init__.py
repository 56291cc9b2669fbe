"""Root polytopes of semi-balanced digraphs via Jaeger trees."""

from .digraph import DirectedGraph, GraphError, is_semi_balanced, semi_balanced_layering
from .invariants import (NotSemiBalanced, h_star_from_ehrhart, interior_disconnected,
                         interior_polynomial)
from .polynomial import Polynomial
from .ribbon import Basis, RibbonStructure, enumerate_jaeger_trees, is_jaeger, tour

__all__ = [
    "Basis", "DirectedGraph", "GraphError", "NotSemiBalanced", "Polynomial",
    "RibbonStructure", "enumerate_jaeger_trees", "h_star_from_ehrhart",
    "interior_disconnected", "interior_polynomial", "is_jaeger", "is_semi_balanced",
    "semi_balanced_layering", "tour",
]
