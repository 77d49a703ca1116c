"""The number field generated by the dominant eigenvalue, on its power basis.

The lattice carrying everything is Z[lambda] with basis 1, lambda, ...,
lambda^{k-1}; elements are plain integer coordinate vectors in that
basis.  Because the minimal polynomial is monic, reducing products of
basis powers keeps all coordinates integral, and the trace of an element
can be computed three independent ways:

  * trace of its multiplication matrix (exact),
  * the linear functional built from Newton power sums (exact),
  * summing the element over all complex embeddings (numeric check).
"""

from dataclasses import dataclass

from .errors import (
    DegenerateMonodromy,
    DimensionMismatch,
    IrreducibilityUnverified,
    NotAField,
)
from .exact import (
    DEFAULT_PRIME_BUDGET,
    CertificateStatus,
    IntMatrix,
    char_poly,
    irreducibility_certificate,
    matrix_min_poly,
    newton_power_sums,
)
from .roots import complex_roots


class EmbeddingMismatch(ArithmeticError):
    """The numeric embedding sum was not close enough to an integer."""


@dataclass(frozen=True)
class TraceFunctional:
    """Integer vector t with t[j] = trace(lambda^j); the norm is z . t."""

    t: tuple[int, ...]


class NumberFieldOrder:
    """A degree-k field presented on the power-basis lattice Z[lambda].

    Construction requires a monic minimal polynomial of degree >= 2 whose
    irreducibility certificate is a definite yes; build_order produces
    one from a matrix and refuses anything degenerate.
    """

    __slots__ = ("min_poly", "degree", "certificate", "_powers", "_traces", "_roots")

    def __init__(self, min_poly, certificate):
        if not min_poly.is_monic or min_poly.degree < 2:
            raise ValueError("order needs a monic minimal polynomial of degree >= 2")
        if certificate.status is not CertificateStatus.IRREDUCIBLE:
            raise ValueError("order needs an Irreducible certificate")
        self.min_poly = min_poly
        self.degree = min_poly.degree
        self.certificate = certificate
        k = self.degree
        powers = [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]
        for _ in range(k - 1):
            powers.append(self._times_generator(powers[-1]))
        self._powers = powers
        self._traces = tuple(newton_power_sums(min_poly, k - 1))
        self._roots = tuple(complex_roots(min_poly))

    def _times_generator(self, coords):
        # Multiply by lambda: shift, then fold lambda^k = -(lower terms).
        k = self.degree
        top = coords[-1]
        shifted = (0,) + coords[:-1]
        if not top:
            return shifted
        return tuple(s - top * self.min_poly.coeffs[i] for i, s in enumerate(shifted))

    def element(self, coords):
        out = tuple(int(x) for x in coords)
        if len(out) != self.degree:
            raise DimensionMismatch(
                f"element has {len(out)} coordinates, order has degree {self.degree}"
            )
        return out

    def embeddings(self):
        """Numeric images of the generator under all complex embeddings."""
        return self._roots

    def __repr__(self):
        return f"NumberFieldOrder(min_poly={list(self.min_poly.coeffs)!r})"


def build_order(A, prime_budget=DEFAULT_PRIME_BUDGET):
    """The field of the matrix: order with the characteristic polynomial.

    Requires the characteristic polynomial to be the minimal polynomial
    and certifiably irreducible, so that the field really has degree k.
    """
    cp = char_poly(A)
    if cp != matrix_min_poly(A) or cp.degree < 2:
        raise DegenerateMonodromy(
            "characteristic and minimal polynomial differ (or degree < 2)"
        )
    certificate = irreducibility_certificate(cp, prime_budget)
    if certificate.status is CertificateStatus.REDUCIBLE:
        raise NotAField(f"characteristic polynomial splits: degrees {certificate.factor_degrees}")
    if certificate.status is CertificateStatus.UNDECIDED:
        raise IrreducibilityUnverified(
            f"irreducibility undecided within the first {prime_budget} primes"
        )
    return NumberFieldOrder(cp, certificate)


def mult_matrix(order, a):
    """Matrix of multiplication by a in the power basis; exact integers.

    Row i holds the coordinates of a * lambda^i reduced by the minimal
    polynomial.
    """
    coords = order.element(a)
    k = order.degree
    rows = []
    for i in range(k):
        acc = [0] * k
        for j, c in enumerate(coords):
            if c:
                power = order._powers[i + j]
                for idx in range(k):
                    acc[idx] += c * power[idx]
        rows.append(acc)
    return IntMatrix(rows)


def trace_via_mult(order, a):
    """Trace as the trace of the multiplication matrix."""
    return mult_matrix(order, a).trace()


def trace_via_newton(order, a):
    """Trace as the linear functional of Newton power sums."""
    coords = order.element(a)
    return sum(c * t for c, t in zip(coords, order._traces))


def trace_via_embeddings(order, a, tol=1e-8):
    """Trace by summing the element over all complex embeddings.

    Purely a numeric cross-check: the sum must land within tol of an
    integer or EmbeddingMismatch is raised to flag a root-finding or
    logic bug.
    """
    coords = order.element(a)
    total = 0j
    for root in order.embeddings():
        value = 0j
        for c in reversed(coords):
            value = value * root + c
        total += value
    nearest = round(total.real)
    if abs(total.imag) > tol or abs(total.real - nearest) > tol:
        raise EmbeddingMismatch(f"embedding sum {total} is not integral within {tol}")
    return nearest


def trace_functional(order):
    """The trace vector (trace(1), trace(lambda), ..., trace(lambda^{k-1}))."""
    return TraceFunctional(order._traces)


def norm_value(functional, z):
    """Value of the trace norm on an integer vector: the exact dot product."""
    zt = tuple(int(x) for x in z)
    if len(zt) != len(functional.t):
        raise DimensionMismatch(
            f"class has length {len(zt)}, functional has length {len(functional.t)}"
        )
    return sum(a * b for a, b in zip(zt, functional.t))
