"""Audit predicates for cusp-length inequalities on finite-type surfaces.

An essential surface mapped into a one-cusped manifold, with punctures on a
common horocusp, obeys the budget

    sum of cusp slope lengths <= 6 * |euler characteristic|.

The constant 6 is the product of the circle-packing density ratio 3/pi
(Boroczky) and the Gauss-Bonnet area 2*pi*|chi|, using that a surface
horocusp region has area equal to its boundary length.  These checks are
predicates over user-supplied geometric data; certifying that a surface is
actually essential is out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INEQUALITY_TOL = 1e-9

# Boundary-length budget per unit of |chi| for essential surfaces:
# (3/pi) * 2*pi = 6.
CUSP_LENGTH_BUDGET_PER_CHI = 6.0

# Packing bound: a union of embedded horocusp regions covers at most 3/pi
# of a finite-area hyperbolic surface.
HOROCUSP_AREA_RATIO = 3.0 / math.pi


@dataclass(frozen=True)
class SurfaceType:
    """Finite-type surface: genus, punctures and boundary circles."""

    genus: int
    punctures: int
    boundary_circles: int = 0

    def __post_init__(self) -> None:
        if min(self.genus, self.punctures, self.boundary_circles) < 0:
            raise ValueError("surface data must be nonnegative integers")


@dataclass(frozen=True)
class SurfaceAudit:
    """A surface together with the slope lengths at its listed punctures.

    The list covers exactly the punctures mapped to the distinguished cusp;
    unlisted punctures contribute 0 to the budget check.
    """

    surface: SurfaceType
    cusp_slope_lengths: tuple[float, ...]

    def __post_init__(self) -> None:
        lengths = tuple(float(x) for x in self.cusp_slope_lengths)
        if any(not math.isfinite(x) or x <= 0.0 for x in lengths):
            raise ValueError("cusp slope lengths must be positive and finite")
        if len(lengths) > self.surface.punctures:
            raise ValueError(
                f"{len(lengths)} lengths listed for a surface with "
                f"{self.surface.punctures} punctures"
            )
        object.__setattr__(self, "cusp_slope_lengths", lengths)


@dataclass(frozen=True)
class AuditVerdict:
    name: str
    passed: bool
    lhs: float
    rhs: float
    slack: float  # rhs - lhs
    sharp: bool   # equality within tolerance


def _verdict(name: str, lhs: float, rhs: float) -> AuditVerdict:
    slack = rhs - lhs
    return AuditVerdict(
        name=name,
        passed=lhs <= rhs + INEQUALITY_TOL,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        sharp=abs(slack) <= INEQUALITY_TOL,
    )


def euler_characteristic(s: SurfaceType) -> int:
    return 2 - 2 * s.genus - s.punctures - s.boundary_circles


def check_cusp_length_inequality(audit: SurfaceAudit) -> AuditVerdict:
    """Total listed slope length against the 6|chi| budget (chi < 0 required)."""
    chi = euler_characteristic(audit.surface)
    if chi >= 0:
        raise ValueError(
            f"inequality applies only to surfaces with chi < 0, got chi = {chi}"
        )
    total = math.fsum(audit.cusp_slope_lengths)
    return _verdict("cusp_length_budget", total, CUSP_LENGTH_BUDGET_PER_CHI * abs(chi))


def boroczky_check(horocusp_area: float, surface_area: float) -> AuditVerdict:
    """Packing bound: horocusp area at most (3/pi) of the surface area."""
    if horocusp_area <= 0.0 or surface_area <= 0.0:
        raise ValueError("areas must be positive")
    return _verdict("horocusp_area_ratio", horocusp_area, HOROCUSP_AREA_RATIO * surface_area)


def gauss_bonnet_area(s: SurfaceType) -> float:
    """Hyperbolic area 2*pi*|chi| of a finite-area surface with chi < 0."""
    chi = euler_characteristic(s)
    if chi >= 0:
        raise ValueError(f"no hyperbolic area for chi = {chi} >= 0")
    return 2.0 * math.pi * abs(chi)


def horocusp_boundary_area_identity(boundary_length: float) -> float:
    """Area of a surface horocusp region equals its boundary length.

    In the half-plane, the region y >= y0 modulo a horizontal translation of
    length t has hyperbolic area t/y0 and horocycle boundary length t/y0.
    Returns the input; exists so audits can cite the identity explicitly.
    """
    if not (boundary_length > 0.0 and math.isfinite(boundary_length)):
        raise ValueError(f"boundary length must be positive, got {boundary_length}")
    return boundary_length


def punctured_sphere_feasible(n: int, slope_length: float) -> bool:
    """Whether an essential n-punctured sphere with n-1 punctures on the
    filling slope is consistent with the 6|chi| budget: 6(n-2) >= (n-1)*len.

    For slope_length > 6 this fails for every n >= 3, which is the
    contradiction behind the six-theorem.
    """
    if n < 3:
        raise ValueError(f"spheres with fewer than 3 punctures do not occur here (n={n})")
    if slope_length <= 0.0:
        raise ValueError(f"slope length must be positive, got {slope_length}")
    return 6.0 * (n - 2) >= (n - 1) * slope_length


@dataclass(frozen=True)
class DoubledSurfaceBound:
    n_ceiling: float
    feasible: bool  # whether the supplied n satisfies n <= n_ceiling


def doubled_surface_chain(
    n: int, j: int, slope_length: float, epsilon: float
) -> DoubledSurfaceBound:
    """Puncture-count ceiling from doubling along geodesic boundary.

    Doubling a planar surface with n punctures, j of whose horocusps touch
    the boundary, and feeding the 6|chi| budget of the double with the
    (6 + epsilon) length floor of the n - j interior cusps gives

        2*epsilon*n <= 2j(6 + epsilon) - 12,

    so n <= (2j(6 + epsilon) - 12) / (2*epsilon).  With j = 0 the ceiling is
    negative: every configuration needs a cusp meeting the boundary.
    """
    if epsilon <= 0.0 or not math.isfinite(epsilon):
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    if not 0 <= j <= n:
        raise ValueError(f"expected 0 <= j <= n, got j={j}, n={n}")
    if slope_length < 6.0 + epsilon:
        raise ValueError(
            f"slope length {slope_length} is below the 6 + epsilon margin"
        )
    ceiling = (2.0 * j * (6.0 + epsilon) - 12.0) / (2.0 * epsilon)
    return DoubledSurfaceBound(ceiling, n <= ceiling)
