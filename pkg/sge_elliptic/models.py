"""Pydantic models for the elliptic, theta and solution domain types."""

import cmath
import math
from enum import Enum
from typing import Annotated, List, Optional

import numpy as np
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    computed_field,
    field_validator,
    model_validator,
)

from sge_elliptic.exceptions import (
    ComplementarityError,
    DomainError,
    GridError,
    NonConvergence,
    SuperluminalVelocity,
)

# Absolute complementarity tolerance, scaled up for large moduli such as 1/k
COMPLEMENTARITY_TOL = 1e-12


def _to_complex(value) -> complex:
    if isinstance(value, str):
        return complex(value.replace(" ", ""))
    return complex(value)


Cplx = Annotated[complex, BeforeValidator(_to_complex)]


class SolutionKind(str, Enum):
    """Available N=1 solution representations."""

    BREATHER_DIRECT = "breather_direct"
    KINK_DIRECT = "kink_direct"
    SEPARATRIX = "separatrix"
    THETA_REP_BREATHER = "theta_rep_breather"
    THETA_REP_KINK = "theta_rep_kink"

    def __str__(self) -> str:
        """Return string representation."""
        return self.value


class TrainKind(str, Enum):
    """Spatially periodic train types."""

    KINK = "kink"
    BREATHER = "breather"

    def __str__(self) -> str:
        """Return string representation."""
        return self.value


class VerifySuite(str, Enum):
    """Verification suites exposed on the command line."""

    LANDEN = "landen"
    MODULAR_CASES = "modular-cases"
    RECIPROCAL = "reciprocal"
    BRIDGE_BREATHER = "bridge-breather"
    BRIDGE_KINK = "bridge-kink"
    PERIODS = "periods"
    TRAINS = "trains"
    RESIDUAL = "residual"
    ALL = "all"

    def __str__(self) -> str:
        """Return string representation."""
        return self.value


class CommandName(str, Enum):
    """Top-level CLI commands."""

    EVAL = "eval"
    VERIFY = "verify"
    BRIDGE = "bridge"
    SPECTRUM = "spectrum"

    def __str__(self) -> str:
        """Return string representation."""
        return self.value


class OutputFormat(str, Enum):
    """Output formats for command results."""

    CSV = "csv"
    REPORT = "report"

    def __str__(self) -> str:
        """Return string representation."""
        return self.value


class Modulus(BaseModel):
    """Elliptic modulus pair (k, k′) with k² + k′² = 1."""

    model_config = ConfigDict(frozen=True)

    k: Cplx = Field(description="Elliptic modulus", examples=[0.6])
    k_prime: Cplx = Field(description="Complementary modulus", examples=[0.8])

    @model_validator(mode="after")
    def check_complementarity(self) -> "Modulus":
        """Reject pairs whose squares do not sum to one."""
        values = (self.k, self.k_prime)
        if not all(cmath.isfinite(v) for v in values):
            raise ComplementarityError(f"Non-finite modulus pair {values}")
        scale = max(1.0, abs(self.k) ** 2, abs(self.k_prime) ** 2)
        defect = abs(self.k**2 + self.k_prime**2 - 1)
        if defect > COMPLEMENTARITY_TOL * scale:
            raise ComplementarityError(
                f"k² + k′² − 1 = {defect:.3e} for k={self.k}, k′={self.k_prime}"
            )
        return self

    @classmethod
    def from_k(cls, k: complex) -> "Modulus":
        """Build from k with the principal root k′ = √(1 − k²)."""
        k = complex(k)
        return cls(k=k, k_prime=cmath.sqrt(1 - k * k))

    @classmethod
    def from_pair(cls, k: complex, k_prime: complex) -> "Modulus":
        """Build from an explicit pair on any branch."""
        return cls(k=complex(k), k_prime=complex(k_prime))

    @property
    def m(self) -> complex:
        """Parameter m = k²."""
        return self.k * self.k

    @property
    def complement(self) -> "Modulus":
        """The swapped pair (k′, k)."""
        return Modulus(k=self.k_prime, k_prime=self.k)

    def is_real_unit(self) -> bool:
        """True for real 0 ≤ k < 1."""
        return self.k.imag == 0 and 0.0 <= self.k.real < 1.0


class PeriodRatio(BaseModel):
    """Period ratio τ = iK′/K on the upper half-plane."""

    model_config = ConfigDict(frozen=True)

    tau: Cplx = Field(description="Period ratio", examples=["1j", "0.5+1j"])

    @field_validator("tau")
    @classmethod
    def validate_upper_half_plane(cls, v: complex) -> complex:
        """Require Im τ > 0."""
        if not cmath.isfinite(v) or v.imag <= 0:
            raise DomainError(f"τ must lie in the upper half-plane, got {v}")
        return v


class Nome(BaseModel):
    """Nome q = exp(iπτ)."""

    model_config = ConfigDict(frozen=True)

    q: Cplx = Field(description="Nome", examples=[math.exp(-math.pi)])

    @field_validator("q")
    @classmethod
    def validate_unit_disc(cls, v: complex) -> complex:
        """Require |q| < 1."""
        if not abs(v) < 1:
            raise NonConvergence(f"Nome must satisfy |q| < 1, got |q| = {abs(v)}")
        return v


class QuarterPeriods(BaseModel):
    """Quarter periods K and K′."""

    model_config = ConfigDict(frozen=True)

    K: Cplx = Field(description="Real quarter period K(k)")
    K_prime: Cplx = Field(description="Imaginary quarter period K(k′)")

    @property
    def tau(self) -> complex:
        """iK′/K."""
        return 1j * self.K_prime / self.K


class ThetaArgs(BaseModel):
    """Argument l (period 1) and parameter B of the one-dimensional theta."""

    model_config = ConfigDict(frozen=True)

    l: Cplx = Field(description="Theta argument, period 1", examples=[0.2])
    B: Cplx = Field(description="Theta parameter, Im B > 0", examples=["1j"])

    @field_validator("B")
    @classmethod
    def validate_B(cls, v: complex) -> complex:
        """Require Im B > 0."""
        if not v.imag > 0:
            raise DomainError(f"Theta parameter needs Im B > 0, got {v}")
        return v


class JefPoint(BaseModel):
    """Argument u and modulus of a Jacobi elliptic function."""

    model_config = ConfigDict(frozen=True)

    u: Cplx = Field(description="Argument", examples=[0.4])
    m: Modulus = Field(description="Modulus pair")

    @classmethod
    def at(cls, u: complex, k: complex) -> "JefPoint":
        """Point at u with the principal complement of k."""
        return cls(u=u, m=Modulus.from_k(k))


class BreatherSpectrum(BaseModel):
    """Breather branch points E1 = e^{−iφ}/16 and E2 = E1*."""

    model_config = ConfigDict(frozen=True)

    phi: float = Field(description="Spectral angle in [π, 2π]", examples=[1.5 * math.pi])

    @field_validator("phi")
    @classmethod
    def validate_phi(cls, v: float) -> float:
        """Keep φ in [π, 2π]."""
        if not (math.pi - 1e-12 <= v <= 2 * math.pi + 1e-12):
            raise DomainError(f"Breather angle φ must lie in [π, 2π], got {v}")
        return v

    @computed_field
    @property
    def E1(self) -> complex:
        return cmath.exp(-1j * self.phi) / 16

    @computed_field
    @property
    def E2(self) -> complex:
        return self.E1.conjugate()


class KinkSpectrum(BaseModel):
    """Kink branch points E1 = −e^{η}/16 < E2 = −e^{−η}/16 < 0."""

    model_config = ConfigDict(frozen=True)

    eta: float = Field(description="Spectral gap parameter, η > 0", examples=[1.0])

    @field_validator("eta")
    @classmethod
    def validate_eta(cls, v: float) -> float:
        """Require η > 0."""
        if not v > 0:
            raise DomainError(f"Kink gap η must be positive, got {v}")
        return v

    @computed_field
    @property
    def E1(self) -> float:
        return -math.exp(self.eta) / 16

    @computed_field
    @property
    def E2(self) -> float:
        return -math.exp(-self.eta) / 16


class SolutionParams(BaseModel):
    """Everything needed to evaluate one N=1 solution."""

    model_config = ConfigDict(frozen=True)

    kind: SolutionKind
    modulus: Modulus = Field(description="k_b, k_k or the theta-side k")
    t0: float = Field(default=0.0, description="Time offset")
    l_re: float = Field(default=0.0, description="Re(l) of the theta line")
    a: Cplx = Field(default=0.0, description="Rate of Im l = a·t")
    B: Optional[Cplx] = Field(default=None, description="Theta parameter τ")
    sqrt_k_prime: Optional[Cplx] = Field(
        default=None, description="Chosen branch of √k′ on the theta side"
    )

    @model_validator(mode="after")
    def check_theta_line(self) -> "SolutionParams":
        """Theta kinds need their Re(l), Re(B) conditions.

        The kink lattice reached through −1/τ = 2(τ_k − 1) has a non-zero
        real part, so only Re(l) is enforced for kinks.
        """
        if self.kind == SolutionKind.THETA_REP_BREATHER:
            expected_l, expected_b = (0.0,), (0.5, -0.5)
        elif self.kind == SolutionKind.THETA_REP_KINK:
            expected_l, expected_b = (0.25, -0.25), None
        else:
            return self
        if self.B is None:
            raise DomainError(f"{self.kind} requires the theta parameter B")
        if not any(abs(self.l_re - v) < 1e-12 for v in expected_l):
            raise DomainError(f"{self.kind} requires Re(l) in {expected_l}, got {self.l_re}")
        if expected_b and not any(abs(self.B.real - v) < 1e-9 for v in expected_b):
            raise DomainError(f"{self.kind} requires Re(B) in {expected_b}, got {self.B.real}")
        return self


class TrainParams(BaseModel):
    """Kink or breather train driven by velocity v and spatial period L."""

    model_config = ConfigDict(frozen=True)

    kind: TrainKind = TrainKind.KINK
    v: float = Field(default=0.0, description="Kink velocity, |v| < 1", examples=[0.3])
    L: float = Field(description="Spatial period", gt=0, examples=[6.0])
    x0: float = Field(default=0.0, description="Spatial offset")
    n_max: int = Field(default=20, ge=0, description="Truncation count")

    @field_validator("v")
    @classmethod
    def validate_v(cls, v: float) -> float:
        """Reject |v| ≥ 1."""
        if abs(v) >= 1:
            raise SuperluminalVelocity(f"Train velocity must satisfy |v| < 1, got {v}")
        return v

    @computed_field
    @property
    def kappa(self) -> float:
        return 1.0 / math.sqrt(1.0 - self.v * self.v)

    @computed_field
    @property
    def w(self) -> float:
        return -self.v * self.kappa

    @computed_field
    @property
    def B(self) -> complex:
        shift = 0.5 if self.kind == TrainKind.BREATHER else 0.0
        return complex(shift, self.kappa * self.L / (2 * math.pi))


class Sl2zElement(BaseModel):
    """Integer matrix (a b; c d) with determinant one."""

    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    c: int
    d: int

    @model_validator(mode="after")
    def check_determinant(self) -> "Sl2zElement":
        """Require ad − bc = 1."""
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"Determinant of {self.as_tuple()} is not 1")
        return self

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def apply(self, tau: complex) -> complex:
        """Möbius action (aτ + b)/(cτ + d)."""
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def compose(self, other: "Sl2zElement") -> "Sl2zElement":
        """Matrix product self·other, acting as other first."""
        return Sl2zElement(
            a=self.a * other.a + self.b * other.c,
            b=self.a * other.b + self.b * other.d,
            c=self.c * other.a + self.d * other.c,
            d=self.c * other.b + self.d * other.d,
        )

    def equivalent(self, other: "Sl2zElement") -> bool:
        """Equal as elements of PSL(2,Z)."""
        mine, theirs = self.as_tuple(), other.as_tuple()
        return mine == theirs or mine == tuple(-x for x in theirs)


class ModularCase(BaseModel):
    """One row of the six-case modular table."""

    model_config = ConfigDict(frozen=True)

    case_id: int = Field(ge=1, le=6)
    tau_map: str = Field(description="Printed τ map", examples=["1/τ"])
    matrix: Sl2zElement = Field(description="Matrix acting on the upper half-plane")
    modulus_map: str = Field(description="Printed (k̃, k̃′)", examples=["(k′, k)"])


class BreatherBridge(BaseModel):
    """Direct-side breather data matched to its theta-side lattice."""

    model_config = ConfigDict(frozen=True)

    k_b: float
    k_b_prime: float
    K_b: float
    K_b_prime: float
    tau_b: Cplx
    q_b: Cplx
    tau_1: Cplx
    q_tilde: Cplx
    k1: Cplx
    k1_prime: Cplx
    K1: Cplx
    sqrt_k1_prime: Cplx
    branch: int
    a: Cplx = Field(description="Rate from 4ia = 1/K_b")
    a_strip: Cplx = Field(description="Rate from 2K₁a = 1/(2√k′₁)")
    t0: float


class KinkBridge(BaseModel):
    """Direct-side kink data matched to its theta-side lattice."""

    model_config = ConfigDict(frozen=True)

    k_k: float
    k_k_prime: float
    K_k: float
    K_k_prime: float
    tau_k: Cplx
    k: Cplx
    k_prime: Cplx
    K: Cplx
    K_prime: Cplx
    tau: Cplx
    sqrt_k_prime: Cplx
    a: Cplx
    k1: float = Field(description="Reciprocal modulus 1/k′_k")


class ModularChain(BaseModel):
    """Kink↔breather chain of moduli and period ratios."""

    model_config = ConfigDict(frozen=True)

    phi: Cplx
    tau_b: Cplx
    tau_1: Cplx
    tau_2: Cplx
    tau_3: Cplx
    tau_k: Cplx
    s_b: Cplx
    s_b_prime: Cplx
    s_2: Cplx
    s_2_prime: Cplx
    s_1_prime: Cplx
    k3: Cplx
    h: Cplx
    h_prime: Cplx
    lambda_b: Cplx
    lambda_k: Optional[Cplx] = None
    k_k: Optional[Cplx] = None


class CheckResult(BaseModel):
    """One verification line: name, residual, tolerance."""

    name: str
    residual: float
    tolerance: float

    @computed_field
    @property
    def passed(self) -> bool:
        return bool(math.isfinite(self.residual) and self.residual <= self.tolerance)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


class GridSpec(BaseModel):
    """Inclusive uniform grid parsed from `min:max:step`."""

    model_config = ConfigDict(frozen=True)

    t_min: float
    t_max: float
    step: float = Field(gt=0)

    @model_validator(mode="after")
    def check_points(self) -> "GridSpec":
        """Require at least two points."""
        if self.t_max <= self.t_min:
            raise GridError(f"Grid needs t_max > t_min, got {self.t_min}:{self.t_max}")
        return self

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Parse `min:max:step`."""
        parts = text.split(":")
        if len(parts) != 3:
            raise GridError(f"Grid must look like min:max:step, got {text!r}")
        try:
            t_min, t_max, step = (float(p) for p in parts)
        except ValueError as e:
            raise GridError(f"Grid must look like min:max:step, got {text!r}") from e
        if not step > 0:
            raise GridError(f"Grid step must be positive, got {step}")
        return cls(t_min=t_min, t_max=t_max, step=step)

    def points(self) -> np.ndarray:
        """Grid points, endpoint included within half a step."""
        count = int(math.floor((self.t_max - self.t_min) / self.step + 0.5)) + 1
        return self.t_min + self.step * np.arange(count)


class RunConfig(BaseModel):
    """Parsed command-line run."""

    command: CommandName
    kind: Optional[SolutionKind] = None
    H: Optional[float] = None
    phi: Optional[float] = None
    eta: Optional[float] = None
    v: Optional[float] = None
    x: float = 0.0
    x0: float = 0.0
    sign: int = 1
    k: Optional[float] = None
    grid: Optional[GridSpec] = None
    tol: Optional[float] = Field(default=None, gt=0)
    suite: Optional[VerifySuite] = None
    out: Optional[str] = None
    output_format: OutputFormat = OutputFormat.CSV


class FieldSample(BaseModel):
    """Grid of (t, q(t)) with branch-continuous real q and its log argument w."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    t: np.ndarray
    q: np.ndarray
    w: np.ndarray

    def rows(self) -> List[tuple]:
        """(t, q, Re w, Im w) rows."""
        return [
            (float(t), float(q), float(w.real), float(w.imag))
            for t, q, w in zip(self.t, self.q, self.w)
        ]

