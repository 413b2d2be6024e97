"""Monopole Floer homology of mapping tori of prime-order surface automorphisms over P^1."""

from .exactnum import CyclotomicNumber, conjugate, invert, root_power
from .floer import LocalSystem, assign_gradings, build_complex, floer_complex
from .gspin import SignedEigen, Spectrum, character, local_term, solve_spectrum, spectrum_from_signed
from .homology import closed_form, compute_homology, cross_check, local_homology, plain_homology
from .surface import CyclicCurve, RamificationData, genus, ramification_from_curve, validate_realizable

__version__ = "0.1.0"

__all__ = [
    "CyclotomicNumber", "conjugate", "invert", "root_power",
    "LocalSystem", "assign_gradings", "build_complex", "floer_complex",
    "SignedEigen", "Spectrum", "character", "local_term", "solve_spectrum", "spectrum_from_signed",
    "closed_form", "compute_homology", "cross_check", "local_homology", "plain_homology",
    "CyclicCurve", "RamificationData", "genus", "ramification_from_curve", "validate_realizable",
]
