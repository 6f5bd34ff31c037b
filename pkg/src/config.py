import os

from pydantic import BaseModel, Field


def _env_float(name: str, default: str) -> float:
    return float(os.getenv(f"CHEVALLEY_{name}", default))


def _env_int(name: str, default: str) -> int:
    return int(os.getenv(f"CHEVALLEY_{name}", default))


class ToleranceSettings(BaseModel):
    """
    Numerical tolerances, all relative to a Frobenius-norm scale of the data.

    :return: configured tolerance settings object
    """

    inverse: float = Field(default_factory=lambda: _env_float("TOL_INVERSE", "1e-9"))
    singular_pivot: float = Field(default_factory=lambda: _env_float("TOL_SINGULAR_PIVOT", "1e-12"))
    eigen_gap: float = Field(default_factory=lambda: _env_float("TOL_EIGEN_GAP", "1e-8"))
    eigen_reconstruction: float = Field(default_factory=lambda: _env_float("TOL_EIGEN_RECONSTRUCTION", "1e-8"))
    root_residual: float = Field(default_factory=lambda: _env_float("TOL_ROOT_RESIDUAL", "1e-10"))
    generic: float = Field(default_factory=lambda: _env_float("TOL_GENERIC", "1e-6"))
    moment: float = Field(default_factory=lambda: _env_float("TOL_MOMENT", "1e-10"))
    stability: float = Field(default_factory=lambda: _env_float("TOL_STABILITY", "1e-12"))
    witness: float = Field(default_factory=lambda: _env_float("TOL_WITNESS", "1e-7"))
    orbit: float = Field(default_factory=lambda: _env_float("TOL_ORBIT", "1e-6"))
    diagonal_residue: float = Field(default_factory=lambda: _env_float("TOL_DIAGONAL_RESIDUE", "1e-7"))
    reconstruction_guard: float = Field(default_factory=lambda: _env_float("TOL_RECONSTRUCTION_GUARD", "1e-6"))
    branch_cut: float = Field(default_factory=lambda: _env_float("TOL_BRANCH_CUT", "1e-9"))
    branch_margin: float = Field(default_factory=lambda: _env_float("TOL_BRANCH_MARGIN", "1e-6"))


class LimitSettings(BaseModel):
    """
    Iteration counts and size caps guarding the brute-force computations.

    :return: configured limit settings object
    """

    root_max_iter: int = Field(default_factory=lambda: _env_int("ROOT_MAX_ITER", "200"))
    group_enumeration_cap: int = Field(default_factory=lambda: _env_int("GROUP_ENUMERATION_CAP", "1000000"))
    reynolds_group_cap: int = Field(default_factory=lambda: _env_int("REYNOLDS_GROUP_CAP", "100000"))
    monomial_cap: int = Field(default_factory=lambda: _env_int("MONOMIAL_CAP", "100000"))
    sampling_attempts: int = Field(default_factory=lambda: _env_int("SAMPLING_ATTEMPTS", "100"))
    gauge_condition_cap: float = Field(default_factory=lambda: _env_float("GAUGE_CONDITION_CAP", "1e6"))
    stability_group_cap: int = Field(default_factory=lambda: _env_int("STABILITY_GROUP_CAP", "2000"))
    separation_points: int = Field(default_factory=lambda: _env_int("SEPARATION_POINTS", "200"))


class RunDefaults(BaseModel):
    """
    Defaults of the command-line run configuration.

    :return: configured run defaults
    """

    tol: float = Field(default_factory=lambda: _env_float("TOL", "1e-9"))
    trials: int = Field(default_factory=lambda: _env_int("TRIALS", "100"))
    max_degree: int = Field(default_factory=lambda: _env_int("MAX_DEGREE", "8"))
    seed: int = Field(default_factory=lambda: _env_int("SEED", "42"))
    generation_degree: int = Field(default_factory=lambda: _env_int("GENERATION_DEGREE", "4"))


class LoggingSettings(BaseModel):
    """
    Console logging settings.

    :return: configured logging settings
    """

    level: str = Field(default_factory=lambda: os.getenv("CHEVALLEY_LOG_LEVEL", "INFO").upper())


class Settings(BaseModel):
    """
    Root application settings.

    :return: consolidated settings instance
    """

    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)
    limits: LimitSettings = Field(default_factory=LimitSettings)
    run: RunDefaults = Field(default_factory=RunDefaults)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


settings = Settings()
