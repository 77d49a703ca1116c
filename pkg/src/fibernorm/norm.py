"""The induced norm on the second homology lattice and its positivity cone.

The norm of a class z in Z^k is the exact dot product with the trace
functional of the field built from the monodromy action.  Its
nonnegativity locus is a lattice half-space, hence a cone: closed under
addition and positive scaling.  For the fiber class of a genus-g fibration
the expected value is 2g-2, twice that for the simplicial (Gromov) norm;
reports state the measured values and the signed discrepancy, they never
assert the coincidence.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement, product

from .bundle import euler_pairing_fiber
from .errors import DimensionMismatch, NegativeNorm
from .exact import DEFAULT_PRIME_BUDGET, IntPolynomial
from .numberfield import TraceFunctional, build_order, norm_value, trace_functional

HomologyClass = tuple[int, ...]


class ConeRegion(Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class ConeDescription:
    """The half-space cone cut out by one integer functional."""

    functional: TraceFunctional

    def value(self, z):
        return norm_value(self.functional, z)

    def contains(self, z):
        return self.value(z) >= 0

    def strictly_contains(self, z):
        return self.value(z) > 0


@dataclass(frozen=True)
class ConeCounterexample:
    """A witness that a cone axiom failed (never produced by a half-space)."""

    kind: str  # "scaling" or "addition"
    z: tuple[int, ...]
    other: tuple[int, ...] | None
    scale: int | None
    value: int


@dataclass(frozen=True)
class DiagramMismatch:
    """A basis class whose claimed doubled value is wrong (1-based index)."""

    index: int
    expected: int
    actual: int


@dataclass(frozen=True)
class NormReport:
    """Measured norm data for one homology class of one bundle.

    gromov_value is twice the norm when the norm is nonnegative and None
    otherwise (the simplicial norm comparison only makes sense inside the
    cone); negative_fiber_norm flags that situation.  discrepancy =
    norm_at_fiber - (2g - 2), reported signed.
    """

    genus: int
    singularities: tuple[int, ...]
    rank: int
    charpoly: IntPolynomial
    functional: TraceFunctional
    fiber_class: tuple[int, ...]
    norm_at_fiber: int
    thurston_fiber_target: int
    discrepancy: int
    gromov_value: int | None
    dual_euler_value: int
    negative_fiber_norm: bool


def norm_on_h2(bundle, prime_budget=DEFAULT_PRIME_BUDGET):
    """Trace functional of the order built from the bundle's action matrix."""
    return trace_functional(build_order(bundle.action, prime_budget))


def cone_membership(cone, z):
    value = cone.value(z)
    if value > 0:
        return ConeRegion.INTERIOR
    if value == 0:
        return ConeRegion.BOUNDARY
    return ConeRegion.OUTSIDE


def cone_axiom_check(cone, box_radius, scale_max):
    """Exhaustively verify the cone axioms on a lattice box.

    Every interior class must stay interior under scaling by 1..scale_max
    and under addition with every other interior class in the box.  A
    half-space can never fail; running the check guards the membership
    code itself.  Returns None, or the first counterexample in scan order.
    """
    if box_radius < 1:
        raise ValueError("box radius must be at least 1")
    if scale_max < 2:
        raise ValueError("scale bound must be at least 2")
    k = len(cone.functional.t)
    span = range(-box_radius, box_radius + 1)
    interior = [z for z in product(span, repeat=k) if cone_membership(cone, z) is ConeRegion.INTERIOR]
    for z in interior:
        for c in range(1, scale_max + 1):
            scaled = tuple(c * x for x in z)
            if cone_membership(cone, scaled) is not ConeRegion.INTERIOR:
                return ConeCounterexample(
                    kind="scaling", z=z, other=None, scale=c, value=cone.value(scaled)
                )
    for z1, z2 in combinations_with_replacement(interior, 2):
        total = tuple(a + b for a, b in zip(z1, z2))
        if cone_membership(cone, total) is not ConeRegion.INTERIOR:
            return ConeCounterexample(
                kind="addition", z=z1, other=z2, scale=None, value=cone.value(total)
            )
    return None


def enumerate_cone_points(cone, box_radius):
    """Lattice points of the box with nonnegative norm, lexicographic order."""
    if box_radius < 0:
        raise ValueError("box radius must be nonnegative")
    k = len(cone.functional.t)
    span = range(-box_radius, box_radius + 1)
    return [z for z in product(span, repeat=k) if cone.value(z) >= 0]


def gromov_from_thurston(n):
    """Simplicial norm from the embedded-surface norm: exactly twice."""
    if n < 0:
        raise NegativeNorm(f"norm value {n} is negative")
    return 2 * n


def diagram_consistency(cone, basis_values):
    """Check claimed simplicial values on the standard basis against doubling.

    For every basis vector inside the cone, the claimed value must be
    exactly twice the norm.  Returns None or the first mismatch
    (1-based index).
    """
    t = cone.functional.t
    values = tuple(int(x) for x in basis_values)
    if len(values) != len(t):
        raise DimensionMismatch(
            f"basis values have length {len(values)}, functional has length {len(t)}"
        )
    for i, norm in enumerate(t):
        if norm < 0:
            continue
        if values[i] != 2 * norm:
            return DiagramMismatch(index=i + 1, expected=2 * norm, actual=values[i])
    return None


def fiber_class_report(bundle, z_fiber, prime_budget=DEFAULT_PRIME_BUDGET):
    """Measure the norm on a claimed fiber class and report, never assert.

    The caller reads the discrepancy against the genus target 2g-2; the
    report also carries the doubled (simplicial) value and the Euler
    pairing of the fiber.
    """
    order = build_order(bundle.action, prime_budget)
    functional = trace_functional(order)
    z = tuple(int(x) for x in z_fiber)
    if len(z) != bundle.rank:
        raise DimensionMismatch(f"class has length {len(z)}, bundle has rank {bundle.rank}")
    n = norm_value(functional, z)
    target = euler_pairing_fiber(bundle.genus)
    return NormReport(
        genus=bundle.genus,
        singularities=bundle.sing.prongs,
        rank=bundle.rank,
        charpoly=order.min_poly,
        functional=functional,
        fiber_class=z,
        norm_at_fiber=n,
        thurston_fiber_target=target,
        discrepancy=n - target,
        gromov_value=2 * n if n >= 0 else None,
        dual_euler_value=target,
        negative_fiber_norm=n < 0,
    )
