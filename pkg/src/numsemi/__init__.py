"""Exact computation on numerical semigroups.

Frobenius numbers, Apery sets, factorizations and Betti elements for
arbitrary coprime generator lists, telescopic/free structure with
certificates, and closed-form engines for consecutive triangular and
tetrahedral generator families — every closed form backed by a
brute-force oracle it is verified against.
"""

from numsemi._kernels import BACKEND
from numsemi.arith import (
    INT64_MAX,
    binomial,
    gcd,
    gcd_list,
    tetrahedral,
    triangular,
)
from numsemi.core import (
    AperySet,
    NumericalSemigroup,
    RsPartition,
    apery_oracle,
    betti_oracle,
    contains,
    embedding_dimension,
    evaluate,
    factorizations,
    frobenius_oracle,
    minimal_generators,
    representation,
    rs_partition,
)
from numsemi.errors import InvariantViolation, NotCoprimeError
from numsemi.figurate import (
    CstarForm,
    Direction,
    PermutationReport,
    TelescopicClass,
    baker_a,
    brauer_arithmetic_frobenius,
    choose4_family,
    choose4_generators,
    choose5_counterexample,
    figurate_embedding_dimension,
    frobenius_tetrahedral,
    frobenius_triangular,
    tetrahedral_apery,
    tetrahedral_betti,
    tetrahedral_cstar,
    tetrahedral_direction,
    tetrahedral_generators,
    tetrahedral_pair_gcd,
    tetrahedral_presentation,
    triangular_apery,
    triangular_betti,
    triangular_cstar,
    triangular_direction,
    triangular_generators,
    triangular_pair_gcd,
    triangular_presentation,
)
from numsemi.telescopic import (
    FreeDecomposition,
    NotFree,
    NotTelescopic,
    Presentation,
    TelescopicCertificate,
    brauer_shockley_frobenius,
    cstar_constants,
    divide_chain,
    free_apery,
    free_betti,
    free_frobenius,
    free_presentation,
    is_free,
    is_telescopic,
    johnson_reduce,
)

__version__ = "0.1.0"

__all__ = [
    "AperySet",
    "BACKEND",
    "CstarForm",
    "Direction",
    "FreeDecomposition",
    "INT64_MAX",
    "InvariantViolation",
    "NotCoprimeError",
    "NotFree",
    "NotTelescopic",
    "NumericalSemigroup",
    "PermutationReport",
    "Presentation",
    "RsPartition",
    "TelescopicCertificate",
    "TelescopicClass",
    "apery_oracle",
    "baker_a",
    "betti_oracle",
    "binomial",
    "brauer_arithmetic_frobenius",
    "brauer_shockley_frobenius",
    "choose4_family",
    "choose4_generators",
    "choose5_counterexample",
    "contains",
    "cstar_constants",
    "divide_chain",
    "embedding_dimension",
    "evaluate",
    "factorizations",
    "figurate_embedding_dimension",
    "free_apery",
    "free_betti",
    "free_frobenius",
    "free_presentation",
    "frobenius_oracle",
    "frobenius_tetrahedral",
    "frobenius_triangular",
    "gcd",
    "gcd_list",
    "is_free",
    "is_telescopic",
    "johnson_reduce",
    "minimal_generators",
    "representation",
    "rs_partition",
    "tetrahedral",
    "tetrahedral_apery",
    "tetrahedral_betti",
    "tetrahedral_cstar",
    "tetrahedral_direction",
    "tetrahedral_generators",
    "tetrahedral_pair_gcd",
    "tetrahedral_presentation",
    "triangular",
    "triangular_apery",
    "triangular_betti",
    "triangular_cstar",
    "triangular_direction",
    "triangular_generators",
    "triangular_pair_gcd",
    "triangular_presentation",
]
