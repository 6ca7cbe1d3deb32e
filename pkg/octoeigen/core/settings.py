"""
Numeric defaults for the solvers and checkers.
"""

from pydantic import BaseModel, ConfigDict, Field


class SolverSettings(BaseModel):
    """Tolerances and iteration budgets shared by the eigen solvers and the CLI."""

    model_config = ConfigDict(frozen=True)

    nullity_tol: float = Field(1e-7, gt=0, description="Singular values below tol * sigma_max count as zero")
    dedup_tol: float = Field(1e-7, gt=0, description="Real eigenvalues closer than tol * |M| merge")
    max_iter: int = Field(200, ge=1, description="Alternating eigen-search iteration budget")
    search_tol: float = Field(1e-10, gt=0, description="Eigen-search stopping residual")
    polish_threshold: float = Field(1e-4, gt=0, description="Residual below which Gauss-Newton polishing starts")
    identity_tol: float = Field(1e-12, gt=0, description="Tolerance for identities that hold for every input")
    triple_restarts: int = Field(200, ge=1, description="Restarts of the orthogonal triple search")
    tie_tol: float = Field(1e-8, gt=0, description="Relative gap under which smallest singular values tie")


DEFAULT_SETTINGS = SolverSettings()
