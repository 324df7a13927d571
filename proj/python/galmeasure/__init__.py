"""Exact measures on Galois cover scenarios via finite group counting.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface.
"""

from ._core import (
    ClosedForm,
    ResourceError,
    Scenario,
    ValidationError,
    catalog_ids,
    catalog_is_tower,
    run_cli,
    verify_refinement,
    __version__,
)

__all__ = [
    "ClosedForm",
    "ResourceError",
    "Scenario",
    "ValidationError",
    "catalog_ids",
    "catalog_is_tower",
    "run_cli",
    "verify_refinement",
    "__version__",
]
