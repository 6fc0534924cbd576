"""prism-covers: certify manifold covers of one-cusped hyperbolic prism orbifolds.

A cover of the orientable double of a prism orbifold is given by a transitive
permutation representation of its rotation group. This package provides:

- **Catalog**: the rigid-cusped prism signatures and their published columns
- **Certificates**: relator, manifold, cusp and first-homology tests for reps
- **Geometry**: upper half-space embedding, matrix reps, cusp and volume
- **Filters**: cusp-killing, double-cover and minimum-degree obstructions
- **Enumeration**: low-index subgroups by coset-table backtracking

Usage:
    from prism_covers import lookup, read_reps, is_manifold

    sig = lookup("O333_2")
    rep = read_reps("sigma_2_1.rep")[0]
    is_manifold(sig, rep).manifold

CLI:
    prism-covers catalog --name O333_2
    prism-covers check --sig O333_2 --reps sigma_2_1.rep
    prism-covers geometry --sig O333_1 --volume
    prism-covers enumerate --sig O333_2 -k 24 -o o333_2.rep
"""

__version__ = "0.1.0"

from prism_covers.core.catalog import lookup, make_signature
from prism_covers.core.permutation import (
    canonical_form,
    cusp_orbits,
    is_manifold,
    read_reps,
    validate_rep,
    write_reps,
)
from prism_covers.models.rep import Permutation, PermRep
from prism_covers.models.signature import PrismSignature
from prism_covers.utils.errors import PrismCoversError

__all__ = [
    "__version__",
    "PermRep",
    "Permutation",
    "PrismCoversError",
    "PrismSignature",
    "canonical_form",
    "cusp_orbits",
    "is_manifold",
    "lookup",
    "make_signature",
    "read_reps",
    "validate_rep",
    "write_reps",
]
