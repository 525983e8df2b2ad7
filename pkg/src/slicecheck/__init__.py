"""Donaldson lattice-embedding obstructions to sliceness for the Montesinos
family M(0; [m1+1, n1+2], [m2+1, n2+2], q)."""

from .arith import Inertia, Rational, SymIntMatrix, det_exact, is_negative_definite, signature_exact
from .contfrac import ContinuedFraction, evaluate, family_expansion, rational_to_negcf
from .goeritz import family_determinant, family_signature, goeritz_matrix, square_det_sequence
from .lattice import (Aborted, EmbeddingWitness, Exhausted, Witness, enumerate_norm_vectors,
                      find_embedding, verify_witness)
from .montesinos import FamilyParams, MontesinosData, family_to_montesinos, is_knot, knot_determinant, nr_value
from .pipeline import SliceVerdict, obstruct
from .plumbing import (PlumbingGraph, blow_down, build_family_raw, build_family_reduced, build_star_plumbing,
                       intersection_form, neumann_raymond, reduce, tree_determinant, zero_absorb)

__version__ = "0.1.0"
