"""Potentials, complexified-Hamiltonian splits, turning points, asymptote geometry.

Everything here is a pure function of its inputs; the other modules build on
these primitives.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


class DomainError(ValueError):
    """Input outside the domain of an operation."""


def _require_finite(*values):
    for v in values:
        if isinstance(v, complex):
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise DomainError(f"non-finite value {v!r}")
        elif not math.isfinite(v):
            raise DomainError(f"non-finite value {v!r}")


def wrap_angle(a: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    a = math.fmod(a, TWO_PI)
    if a <= -math.pi:
        a += TWO_PI
    elif a > math.pi:
        a -= TWO_PI
    return a


def angle_distance(a: float, b: float) -> float:
    return abs(wrap_angle(a - b))


@dataclass(frozen=True)
class PotentialSpec:
    """One member of the potential family V(z) = [z^2/2] - g*(iz)^power.

    power is 2n+1 for parity "odd" (the main family) and 2n for parity
    "even" (sector classification only).  Pure potentials (oscillator=False)
    use the canonical normalization g = 1.
    """

    n: int = 1
    g: float = 1.0
    oscillator: bool = False
    parity: str = "odd"

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if not math.isfinite(self.g) or self.g < 0:
            raise DomainError(f"coupling g must be finite and >= 0, got {self.g!r}")
        if self.parity not in ("odd", "even"):
            raise DomainError(f"parity must be 'odd' or 'even', got {self.parity!r}")
        if not self.oscillator and self.g != 1.0:
            raise DomainError("pure potential uses the canonical normalization g = 1")

    @property
    def power(self) -> int:
        return 2 * self.n + 1 if self.parity == "odd" else 2 * self.n

    @property
    def pure(self) -> bool:
        return not self.oscillator

    def require_odd(self, what: str = "this operation"):
        if self.parity != "odd":
            raise DomainError(f"{what} supports only parity='odd' potentials")

    def require_pure(self, what: str = "this operation"):
        if self.oscillator:
            raise DomainError(f"{what} supports only the pure potential (oscillator=False)")


@dataclass(frozen=True)
class PhasePoint:
    """Real coordinates of the doubled phase space: z = x+iy, pi = p-iq."""

    x: float
    y: float
    p: float
    q: float

    def __post_init__(self):
        _require_finite(self.x, self.y, self.p, self.q)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @property
    def momentum(self) -> complex:
        return complex(self.p, -self.q)

    def norm(self) -> float:
        return math.sqrt(self.x**2 + self.y**2 + self.p**2 + self.q**2)

    def distance(self, other: "PhasePoint") -> float:
        return math.sqrt(
            (self.x - other.x) ** 2
            + (self.y - other.y) ** 2
            + (self.p - other.p) ** 2
            + (self.q - other.q) ** 2
        )


@dataclass(frozen=True)
class HGValue:
    """Real and imaginary part of the complexified Hamiltonian."""

    H: float
    G: float


@dataclass(frozen=True)
class TurningPointSet:
    energy: float
    points: tuple


@dataclass(frozen=True)
class Family:
    """One of the 2n closed-orbit families: sign of the energy plus an index m.

    m runs 0..n-1 ordered by the argument of the family's right turning
    point, starting nearest the negative imaginary axis.
    """

    sign: int
    m: int

    def __post_init__(self):
        if self.sign not in (+1, -1):
            raise DomainError("family sign must be +1 or -1")
        if int(self.m) != self.m or self.m < 0:
            raise DomainError("family index m must be a non-negative integer")

    @classmethod
    def parse(cls, name: str) -> "Family":
        try:
            kind, m = name.split("-")
            return cls({"pos": +1, "neg": -1}[kind], int(m))
        except (ValueError, KeyError):
            raise DomainError(f"bad family name {name!r}; expected 'pos-m' or 'neg-m'")

    def __str__(self):
        return f"{'pos' if self.sign > 0 else 'neg'}-{self.m}"


def _ipow(w: complex, k: int) -> complex:
    # integer power by repeated multiplication; avoids exp/log branch issues
    out = 1 + 0j
    base = w
    while k:
        if k & 1:
            out *= base
        base *= base
        k >>= 1
    return out


def eval_potential(spec: PotentialSpec, z: complex) -> complex:
    """V(z) = [z^2/2 if oscillator] - g*(iz)^power."""
    z = complex(z)
    _require_finite(z)
    v = -spec.g * _ipow(1j * z, spec.power)
    if spec.oscillator:
        v += 0.5 * z * z
    return v


def potential_derivative(spec: PotentialSpec, z: complex) -> complex:
    """dV/dz, analytic."""
    z = complex(z)
    _require_finite(z)
    k = spec.power
    dv = -spec.g * k * 1j * _ipow(1j * z, k - 1)
    if spec.oscillator:
        dv += z
    return dv


def complex_hamiltonian(spec: PotentialSpec, pt: PhasePoint) -> complex:
    return 0.5 * pt.momentum**2 + eval_potential(spec, pt.z)


def split_hg(spec: PotentialSpec, pt: PhasePoint) -> HGValue:
    """H = Re(pi^2/2 + V(z)), G = Im(...): drive and constraint of the doubled system."""
    h = complex_hamiltonian(spec, pt)
    return HGValue(h.real, h.imag)


def turning_points(spec: PotentialSpec, energy: float) -> TurningPointSet:
    """All 2n+1 complex roots of V(z) = E for the pure odd potential, sorted by argument."""
    spec.require_pure("turning_points")
    spec.require_odd("turning_points")
    _require_finite(energy)
    if energy == 0.0:
        raise DomainError("E = 0 is degenerate: all turning points collapse at the origin")
    npow = spec.power
    # (iz)^npow = -E/g: closed-form modulus and argument, then one Newton polish
    radius = (abs(energy) / spec.g) ** (1.0 / npow)
    base = math.pi if energy > 0 else 0.0
    pts = []
    for k in range(npow):
        w = radius * cmath.exp(1j * (base + TWO_PI * k) / npow)
        z = -1j * w
        for _ in range(2):
            z -= (eval_potential(spec, z) - energy) / potential_derivative(spec, z)
        pts.append(z)
    pts.sort(key=lambda z: cmath.phase(z))
    return TurningPointSet(energy, tuple(pts))


def family_turning_angle(n: int, family: Family) -> float:
    """Argument of the family's right turning point (the PT pair is at angle and pi-angle)."""
    if not 0 <= family.m <= n - 1:
        raise DomainError(f"family index {family.m} out of range for n={n}")
    if family.sign > 0:
        return math.pi * (4 * family.m + 1 - 2 * n) / (2 * (2 * n + 1))
    return math.pi * (4 * family.m + 3 - 2 * n) / (2 * (2 * n + 1))


def family_pair(spec: PotentialSpec, energy: float, family: Family):
    """The (right, left) turning points connected by the family's stem trajectory."""
    if family.sign * energy <= 0:
        raise DomainError(f"energy {energy} inconsistent with family {family}")
    theta = family_turning_angle(spec.n, family)
    pts = turning_points(spec, energy).points
    right = min(pts, key=lambda z: angle_distance(cmath.phase(z), theta))
    left = min(pts, key=lambda z: angle_distance(cmath.phase(z), math.pi - theta))
    return right, left


def _asymptote_angles(npow: int):
    """Directions of the Stokes-line asymptotes for potential power npow, in (-pi, pi]."""
    count = npow + 2
    anchor = -npow * math.pi / (2 * count)
    return tuple(sorted(wrap_angle(anchor + TWO_PI * j / count) for j in range(count)))


def stokes_asymptotes(spec: PotentialSpec):
    """The 2n+3 equally spaced asymptote directions; the positive imaginary axis is one of them."""
    spec.require_pure("stokes_asymptotes")
    spec.require_odd("stokes_asymptotes")
    return _asymptote_angles(spec.power)
