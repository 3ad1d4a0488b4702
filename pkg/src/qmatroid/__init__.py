"""q-matroids over finite fields: subspace lattices, axiom systems and their
translations."""

from .axioms import AxiomReport, Verdict, Witness, check_matroid, check_rank, check_system
from .classify import classify
from .crypto import ConversionPath, cycles, roundtrip_verify
from .errors import AxiomViolation, QMatroidError
from .family import SubspaceFamily
from .fixtures import fixture
from .gf import ExtField, PrimeField, ext_field_build
from .matroid import ClosureMap, FamilyKind, QMatroid, dual, from_rank_table, uniform
from .representable import (
    GeneratorMatrix,
    SpreadRankInput,
    build_spread,
    matroid_from_matrix,
    rank_via_spread_formula,
    representable_matroid,
)
from .subspace import Subspace, get_lattice

__version__ = "0.1.0"

__all__ = [
    "AxiomReport", "AxiomViolation", "ClosureMap", "ConversionPath", "ExtField", "FamilyKind",
    "GeneratorMatrix", "PrimeField", "QMatroid", "QMatroidError", "SpreadRankInput", "Subspace",
    "SubspaceFamily", "Verdict", "Witness", "build_spread", "check_matroid", "check_rank",
    "check_system", "classify", "cycles", "dual", "ext_field_build", "fixture", "from_rank_table",
    "get_lattice", "matroid_from_matrix", "rank_via_spread_formula", "representable_matroid",
    "roundtrip_verify", "uniform",
]
