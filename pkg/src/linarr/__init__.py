"""Fundamental groups of complements of real line arrangements."""

from .classify import NotCovered, StructureReport, classify, is_big, structure, transverse_union
from .geometry import Arrangement, Line, analyze, load_arrangement, normalize
from .presentation import AFFINE, PROJECTIVE, GroupStructure, Presentation, abelianization, hom_count
from .vankampen import compute_presentation

__version__ = "0.1.0"
