"""Closed-orbit actions and Bohr-Sommerfeld levels for the pure potentials.

The action over a stem orbit reduces to radial segments between the origin
and turning points. Each segment carries the same scalar integral
I_N = int_0^1 sqrt(1 - s^N) ds; the family dependence sits in the complex
geometry of the segments and in branch flips picked up while winding around
branch cuts for negative energies.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.special import gamma, roots_jacobi

from .core import DomainError, Family, PotentialSpec, family_turning_angle

GJ_NODES = 64


@dataclass(frozen=True)
class ActionResult:
    spec: PotentialSpec
    family: Family
    E: float
    S: float
    method: str  # "closed-form" | "quadrature"
    extended: bool = False  # True for the generic-n formula not printed for n<=2

    @property
    def scaling_exponent(self) -> float:
        n = self.spec.n
        return (2 * n + 3) / (4 * n + 2)


@lru_cache(maxsize=None)
def _endpoint_integral(npow: int) -> float:
    """I_N = int_0^1 sqrt(1-s^N) ds by Gauss-Jacobi with the (1-s)^(1/2) weight split off."""
    x, w = roots_jacobi(GJ_NODES, 0.5, 0.0)
    total = 0.0
    for xi, wi in zip(x, w):
        s = 0.5 * (xi + 1.0)
        q = sum(s**j for j in range(npow))  # (1-s^N)/(1-s)
        total += wi * math.sqrt(q)
    return total / (2.0 * math.sqrt(2.0))


def _endpoint_integral_exact(npow: int) -> float:
    return gamma(1.0 + 1.0 / npow) * math.sqrt(math.pi) / (2.0 * gamma(1.5 + 1.0 / npow))


def _check_family(spec: PotentialSpec, family: Family, energy: float):
    spec.require_pure("action integrals")
    spec.require_odd("action integrals")
    if not 0 <= family.m <= spec.n - 1:
        raise DomainError(f"family {family} out of range for n={spec.n}")
    if family.sign * energy <= 0:
        raise DomainError(f"E={energy} inconsistent with family {family}")


def _contour_legs(n: int, family: Family):
    """Radial pieces of the deformed stem contour, in path order.

    Each entry is (angle, kind): kind "in" = left turning point to origin,
    "out" = origin to right turning point, "cut" = out-and-back excursion
    around a branch cut (doubles the segment and flips the square-root
    branch for everything after it).
    """
    theta = family_turning_angle(n, family)
    if family.sign > 0:
        return [(math.pi - theta, "in"), (theta, "out")]
    if n == 1:
        cuts = [-math.pi / 2]
    elif n == 2 and family.m == 1:
        cuts = [-math.pi / 2]
    elif n == 2 and family.m == 0:
        inner = family_turning_angle(n, Family(-1, 1))
        cuts = [math.pi - inner, -math.pi / 2, inner]
    else:
        raise DomainError(
            "negative-energy contour topology is only worked out for n <= 2; "
            "use the classical orbit action for larger n"
        )
    return [(math.pi - theta, "in")] + [(c, "cut") for c in cuts] + [(theta, "out")]


def _contour_sum(n: int, family: Family) -> float:
    """Sum of Re contributions of the contour pieces, in units of |z_t| sqrt(2|E|) I_N.

    The square-root branch starts as +-i*sqrt(2|E|) (for E<0; +-sqrt for E>0)
    and flips across every cut excursion; the overall sign is fixed by S > 0.
    """
    branch = 1.0 + 0j if family.sign > 0 else -1j
    total = 0.0
    for angle, kind in _contour_legs(n, family):
        seg = (cmath.exp(1j * angle) * branch).real
        if kind == "in":
            total -= seg
        elif kind == "out":
            total += seg
        else:
            total += 2.0 * seg
            branch = -branch
    return abs(total)


def action_numeric(spec: PotentialSpec, family: Family, E: float) -> ActionResult:
    """Action over the family's stem orbit by contour quadrature.

    2 Re of the momentum integral between the PT pair of turning points,
    deformed to radial segments through the origin; Gauss-Jacobi quadrature
    absorbs the square-root endpoint behavior at the turning points.
    """
    _check_family(spec, family, E)
    npow = spec.power
    radius = abs(E) ** (1.0 / npow)
    amp = radius * math.sqrt(2.0 * abs(E)) * _endpoint_integral(npow)
    s_val = _contour_sum(spec.n, family) * amp
    return ActionResult(spec, family, E, s_val, "quadrature")


# closed-form factors printed for n = 1, 2: prefactor * factor * |E|^((2n+3)/(4n+2))
def _closed_factor(n: int, family: Family) -> float:
    if n == 1:
        return 1.0 if family.sign > 0 else math.sqrt(3.0)
    if n == 2:
        if family.sign > 0:
            return math.cos(3 * math.pi / 10) if family.m == 0 else math.cos(math.pi / 10)
        if family.m == 0:
            return 1.0 + 2.0 * math.sin(3 * math.pi / 10) + math.sin(math.pi / 10)
        return 1.0 + math.sin(3 * math.pi / 10)
    raise DomainError(f"no closed-form action printed for n={n}; use action_numeric")


def action_closed_form(n: int, family: Family, E: float) -> ActionResult:
    """Gamma-function actions for n = 1, 2; generic-n positive families as a derived extension."""
    spec = PotentialSpec(n=n)
    _check_family(spec, family, E)
    nu = (2 * n + 3) / (4 * n + 2)
    scale = abs(E) ** nu
    if n == 1:
        pref = math.sqrt(6 * math.pi) * gamma(4 / 3) / gamma(11 / 6)
        s_val = pref * _closed_factor(n, family) * scale
        return ActionResult(spec, family, E, s_val, "closed-form")
    if n == 2:
        pref = 2.0 * math.sqrt(2 * math.pi) * gamma(6 / 5) / gamma(17 / 10)
        s_val = pref * _closed_factor(n, family) * scale
        return ActionResult(spec, family, E, s_val, "closed-form")
    if family.sign > 0:
        # derived extension: 4 cos(theta_m) sqrt(2) |E|^nu I_N in gamma form
        theta = family_turning_angle(n, family)
        s_val = (
            4.0
            * math.cos(theta)
            * math.sqrt(2.0)
            * _endpoint_integral_exact(spec.power)
            * scale
        )
        return ActionResult(spec, family, E, s_val, "closed-form", extended=True)
    raise DomainError(
        f"no closed-form action for negative families at n={n}; use action_numeric"
    )


def action(spec: PotentialSpec, family: Family, E: float) -> ActionResult:
    """Closed form where the paper prints one, quadrature otherwise."""
    try:
        return action_closed_form(spec.n, family, E)
    except DomainError:
        return action_numeric(spec, family, E)


def level_energy(spec: PotentialSpec, family: Family, k: int) -> float:
    """Invert S(E_k) = pi*(2k+1) using the exact power-law scaling of S."""
    if k < 0:
        raise DomainError("level index k must be >= 0")
    s_unit = action(spec, family, float(family.sign)).S
    n = spec.n
    return family.sign * (math.pi * (2 * k + 1) / s_unit) ** ((4 * n + 2) / (2 * n + 3))


def orbit_period(spec: PotentialSpec, family: Family, E: float) -> float:
    """Classical period T = dS/dE from the power-law form of the action."""
    nu = (2 * spec.n + 3) / (4 * spec.n + 2)
    s_unit = action(spec, family, float(family.sign)).S
    return nu * s_unit * abs(E) ** (nu - 1.0)


def semiclassical_levels(spec: PotentialSpec, family: Family, k_max: int):
    """Bohr-Sommerfeld levels S(E_k) = pi*(2k+1) for k = 0..k_max.

    Negative families are emitted as predictions only: no boundary problem
    realizing them is known.
    """
    from .spectral import Classification, SpectrumResult, sector_center_ray

    spec.require_pure("semiclassical_levels")
    levels = [(k, level_energy(spec, family, k), "semiclassical") for k in range(k_max + 1)]
    ray = sector_center_ray(spec.n, family.m) if family.sign > 0 else None
    return SpectrumResult(
        spec=spec,
        ray=ray,
        classification=Classification.discrete(family.m),
        levels=tuple(levels),
        prediction_only=family.sign < 0,
    )
