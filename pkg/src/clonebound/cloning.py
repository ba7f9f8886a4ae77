"""Error calculus for two-state copying machines.

A copying machine acting on original x blank x machine sends each input
state s of a prescribed pair {phi, psi} to an output vector V(s) living in
the composite space of dimension d1*d2*danc. The output splits as

    V(s) = (s x s) x q(s)  +  perp(s),

where q(s) collects the amplitudes along the perfectly-copied subspace and
perp(s) is orthogonal to it. The error size of the copy is
x(s) = ||perp(s)|| = sin(angle between V(s) and the nearest ideal product
state Id(s) = s x s x k(s)), with k(s) = q(s)/||q(s)||.

The absolute error of a machine on the pair is x(phi) + x(psi); the
relative error divides that by sin(angle(Id(phi), Id(psi))), i.e. by how
distinguishable the two ideal outputs themselves are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import InequalityReport
from .statespace import (
    Projector,
    angle,
    as_state,
    check_unit,
    inner,
    measure_prob,
    normalize,
    basis_state,
    tensor,
)

# ||q|| at or below this counts as a degenerate (direction-free) ideal.
DEGENERATE_TOL = 1e-12
# sin(ideal angle) below this makes the relative error undefined.
UNDEFINED_RE_TOL = 1e-12


def canonical_phase(phi: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Rephase ``psi`` so that <phi|psi> is real and nonnegative."""
    ov = np.vdot(phi, psi)
    # np.angle(0) = 0, so a vanishing overlap leaves psi untouched.
    return psi * np.exp(-1j * np.angle(ov))


@dataclass(frozen=True)
class TwoStateSet:
    """The pair of states to be copied, with cached overlap geometry.

    ``psi`` is stored with its global phase fixed so that <phi|psi> = z
    is real and nonnegative; every quantity below depends only on moduli,
    and the canonical phase keeps constructed-cloner inner products real.
    """

    phi: np.ndarray
    psi: np.ndarray
    z: float
    delta: float

    @classmethod
    def from_states(cls, phi, psi) -> "TwoStateSet":
        phi = check_unit(as_state(phi))
        psi = check_unit(as_state(psi))
        if phi.shape != psi.shape:
            raise ValueError("phi and psi must share one dimension")
        psi = canonical_phase(phi, psi)
        z = min(abs(np.vdot(phi, psi)), 1.0)
        return cls(phi=phi, psi=psi, z=float(z), delta=float(np.arccos(z)))

    @classmethod
    def at_overlap(cls, z: float, dim: int = 2) -> "TwoStateSet":
        """Canonical pair phi = e1, psi = z e1 + sqrt(1 - z^2) e2."""
        if not 0.0 <= z <= 1.0:
            raise ValueError(f"overlap z must be in [0, 1], got {z!r}")
        if dim < 2:
            raise ValueError("need dimension >= 2")
        phi = basis_state(dim, 0)
        psi = z * basis_state(dim, 0) + np.sqrt(1.0 - z * z) * basis_state(dim, 1)
        return cls.from_states(phi, psi)

    @property
    def dim(self) -> int:
        return self.phi.shape[0]

    @property
    def delta_product(self) -> float:
        """Angle between phi x phi and psi x psi, equal to arccos(z^2)."""
        return float(np.arccos(min(self.z * self.z, 1.0)))


@dataclass(frozen=True)
class FactorDims:
    """Factor dimensions of the composite output space.

    ``danc`` = 1 means no auxiliary machine mode; copies must live in the
    same space as originals (d1 = d2).
    """

    d1: int
    d2: int
    danc: int = 1

    def __post_init__(self):
        if self.d1 != self.d2:
            raise ValueError(f"copy dimension {self.d2} must equal original {self.d1}")
        if self.d1 < 2 or self.danc < 1:
            raise ValueError("need d1 = d2 >= 2 and danc >= 1")

    @property
    def total(self) -> int:
        return self.d1 * self.d2 * self.danc


@dataclass(frozen=True)
class CloneAnalysis:
    """Decomposition of one output vector against its intended input.

    ``ideal`` and ``k`` are None when ||q|| = 0: the output is entirely
    orthogonal to the copied subspace, the error angle is pi/2, and every
    unit machine vector attains it, so no single ideal is distinguished.
    """

    v: np.ndarray
    q: np.ndarray
    perp_norm: float
    x: float
    delta_s: float
    k: Optional[np.ndarray]
    ideal: Optional[np.ndarray]
    dims: FactorDims

    @property
    def degenerate(self) -> bool:
        return self.ideal is None


def analyze_output(v, s, dims: FactorDims) -> CloneAnalysis:
    """Split an output vector into its ideal-copy part and its error part.

    Parameters
    ----------
    v : array_like
        Unit output vector in the composite space, length dims.total.
    s : array_like
        The unit input state the output is judged against, length dims.d1.
    dims : FactorDims
        Factor layout of ``v``.
    """
    v = check_unit(as_state(v))
    s = check_unit(as_state(s))
    if v.shape[0] != dims.total:
        raise ValueError(f"output has dimension {v.shape[0]}, expected {dims.total}")
    if s.shape[0] != dims.d1:
        raise ValueError(f"input has dimension {s.shape[0]}, expected {dims.d1}")

    grid = v.reshape(dims.d1, dims.d2, dims.danc)
    q = np.einsum("a,b,abj->j", s.conj(), s.conj(), grid)
    ss = np.multiply.outer(s, s)
    perp = (grid - ss[:, :, None] * q[None, None, :]).reshape(-1)
    perp_norm = float(np.linalg.norm(perp))
    q_norm = float(np.linalg.norm(q))

    if q_norm > DEGENERATE_TOL:
        k = q / q_norm
        ideal = tensor(tensor(s, s), k)
    else:
        k = None
        ideal = None
    return CloneAnalysis(
        v=v,
        q=q,
        perp_norm=perp_norm,
        x=perp_norm,
        delta_s=float(np.arccos(min(q_norm, 1.0))),
        k=k,
        ideal=ideal,
        dims=dims,
    )


def absolute_error(a_phi: CloneAnalysis, a_psi: CloneAnalysis) -> float:
    """Total error size x(phi) + x(psi), in [0, 2]."""
    if a_phi.dims != a_psi.dims:
        raise ValueError("analyses were made over different factor layouts")
    return a_phi.x + a_psi.x


@dataclass(frozen=True)
class ClonerResult:
    """Full record of one machine applied to one two-state set.

    ``re`` and ``ideal_angle`` are None when undefined: either output is
    degenerate, or the two ideal outputs coincide and the relative error
    would divide by zero.
    """

    set: TwoStateSet
    dims: FactorDims
    a_phi: CloneAnalysis
    a_psi: CloneAnalysis
    ae: float
    re: Optional[float]
    ideal_angle: Optional[float]


def analyze_pair(set_: TwoStateSet, v_phi, v_psi, dims: FactorDims) -> ClonerResult:
    """Analyze both outputs of a machine and assemble the error record."""
    a_phi = analyze_output(v_phi, set_.phi, dims)
    a_psi = analyze_output(v_psi, set_.psi, dims)
    ae = absolute_error(a_phi, a_psi)
    if a_phi.degenerate or a_psi.degenerate:
        ideal_angle = None
        re = None
    else:
        ideal_angle = angle(a_phi.ideal, a_psi.ideal)
        sin_ideal = np.sin(ideal_angle)
        re = ae / sin_ideal if sin_ideal >= UNDEFINED_RE_TOL else None
    return ClonerResult(
        set=set_, dims=dims, a_phi=a_phi, a_psi=a_psi,
        ae=ae, re=re, ideal_angle=ideal_angle,
    )


def relative_error(r: ClonerResult) -> Optional[float]:
    """Absolute error divided by sin(angle between the ideal outputs).

    Returns None (undefined) when the ideal outputs coincide, which
    happens exactly for identical input states.

    Raises
    ------
    ValueError
        If either branch has a degenerate ideal.
    """
    if r.a_phi.degenerate or r.a_psi.degenerate:
        raise ValueError("relative error needs non-degenerate ideals on both branches")
    sin_ideal = np.sin(angle(r.a_phi.ideal, r.a_psi.ideal))
    if sin_ideal < UNDEFINED_RE_TOL:
        return None
    return r.ae / float(sin_ideal)


def unitarity_residual(r: ClonerResult) -> float:
    """|<V(phi)|V(psi)> - <phi|psi>|; zero for outputs of a genuine unitary."""
    return abs(inner(r.a_phi.v, r.a_psi.v) - inner(r.set.phi, r.set.psi))


def inequality_chain(r: ClonerResult, tol: float = 1e-10):
    """The two angle restrictions every unitary-produced output pair obeys.

    Report 1:  angle(Id(phi), Id(psi)) <= delta(phi) + delta(psi)
                                          + angle(V(phi), V(psi)).
    Report 2:  delta(phi) + delta(psi) >= angle(phi x phi, psi x psi)
                                          - angle(phi, psi).

    Both follow from the triangle inequality; the second is the key
    constraint behind the lower bounds, and the optimal machines meet it
    with equality.
    """
    if r.a_phi.degenerate or r.a_psi.degenerate:
        raise ValueError("inequality chain needs non-degenerate ideals")
    ideal_angle = angle(r.a_phi.ideal, r.a_psi.ideal)
    out_angle = angle(r.a_phi.v, r.a_psi.v)
    report1 = InequalityReport.compare(
        ideal_angle, r.a_phi.delta_s + r.a_psi.delta_s + out_angle, tol
    )
    big = angle(tensor(r.set.phi, r.set.phi), tensor(r.set.psi, r.set.psi))
    report2 = InequalityReport.compare(
        big - r.set.delta, r.a_phi.delta_s + r.a_psi.delta_s, tol
    )
    return report1, report2


def lifted_prob(a: CloneAnalysis, p: Projector, mode: int) -> float:
    """Outcome probability of a single-particle projector on output mode 1 or 2."""
    if mode not in (1, 2):
        raise ValueError(f"mode must be 1 or 2, got {mode!r}")
    if p.ambient_dim != a.dims.d1:
        raise ValueError(
            f"projector acts on dimension {p.ambient_dim}, expected {a.dims.d1}"
        )
    grid = a.v.reshape(a.dims.d1, a.dims.d2, a.dims.danc)
    if mode == 1:
        coeff = np.einsum("ri,ijk->rjk", p.basis.conj(), grid)
    else:
        coeff = np.einsum("rj,ijk->irk", p.basis.conj(), grid)
    prob = float(np.sum(np.abs(coeff) ** 2))
    return min(max(prob, 0.0), 1.0)


def measurement_deviation(a: CloneAnalysis, s, p: Projector, mode: int,
                          tol: float = 1e-10) -> InequalityReport:
    """Deviation of copy statistics from input statistics, bounded by x.

    Checks |P(outcome on mode | V) - P(outcome | s)| <= x for the given
    single-particle projector lifted to output mode 1 or 2. For a perfect
    copy the left side vanishes for every projector.
    """
    s = check_unit(as_state(s))
    lhs = abs(lifted_prob(a, p, mode) - measure_prob(p, s))
    return InequalityReport.compare(lhs, a.x, tol)
