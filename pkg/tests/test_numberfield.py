"""Orders, multiplication matrices, and the three trace routes."""

import random

import pytest

from fibernorm.errors import (
    DegenerateMonodromy,
    DimensionMismatch,
    IrreducibilityUnverified,
    NotAField,
    NotPrimitive,
)
from fibernorm.exact import CertificateStatus, IntMatrix, IntPolynomial, irreducibility_certificate
from fibernorm.numberfield import (
    EmbeddingMismatch,
    NumberFieldOrder,
    build_order,
    mult_matrix,
    norm_value,
    trace_functional,
    trace_via_embeddings,
    trace_via_mult,
    trace_via_newton,
)
from fibernorm.perron import primitivity_check

QUAD = IntMatrix([[2, 1], [1, 1]])
TRIB = IntMatrix([[1, 1, 0], [1, 0, 1], [1, 0, 0]])


def _random_certified_matrix(rng, max_k=4):
    while True:
        k = rng.randint(2, max_k)
        matrix = IntMatrix([[rng.randint(0, 3) for _ in range(k)] for _ in range(k)])
        try:
            primitivity_check(matrix)
            return matrix, build_order(matrix)
        except Exception:
            continue


def _random_unimodular_pair(rng, k, ops=8):
    """A unimodular integer matrix and its exact inverse.

    Built as a product of elementary row operations, applying the inverse
    operations on the other side, so U * Uinv == I by construction.
    """
    u = IntMatrix.identity(k)
    uinv = IntMatrix.identity(k)
    for _ in range(ops):
        i, j = rng.sample(range(k), 2)
        kind = rng.choice(("add", "swap"))
        if kind == "add":
            c = rng.choice((-2, -1, 1, 2))
            e = [[1 if a == b else 0 for b in range(k)] for a in range(k)]
            e[i][j] = c
            einv = [[1 if a == b else 0 for b in range(k)] for a in range(k)]
            einv[i][j] = -c
        else:
            e = [[1 if a == b else 0 for b in range(k)] for a in range(k)]
            e[i][i] = e[j][j] = 0
            e[i][j] = e[j][i] = 1
            einv = e
        u = IntMatrix(e) * u
        uinv = uinv * IntMatrix(einv)
    assert u * uinv == IntMatrix.identity(k)
    return u, uinv


def test_build_order_examples():
    order = build_order(QUAD, 5)
    assert order.min_poly == IntPolynomial([1, -3, 1])
    assert order.degree == 2
    order = build_order(TRIB, 5)
    assert order.min_poly == IntPolynomial([-1, -1, -1, 1])
    assert order.degree == 3
    with pytest.raises(DegenerateMonodromy):
        build_order(IntMatrix([[2, 0], [0, 2]]), 5)


def test_build_order_refuses_reducible_and_undecided():
    with pytest.raises(NotAField):
        build_order(IntMatrix([[0, 1], [1, 0]]), 5)
    companion_x4_plus_1 = IntMatrix(
        [[0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
    )
    with pytest.raises(IrreducibilityUnverified):
        build_order(companion_x4_plus_1, 10)


def test_order_constructor_enforces_certificate():
    p = IntPolynomial([1, -3, 1])
    with pytest.raises(ValueError):
        NumberFieldOrder(p, irreducibility_certificate(IntPolynomial([-1, 0, 1])))
    with pytest.raises(ValueError):
        NumberFieldOrder(IntPolynomial([1, 2]), irreducibility_certificate(p))


def test_mult_matrix_examples():
    order = build_order(QUAD, 5)
    assert mult_matrix(order, (0, 1)) == IntMatrix([[0, 1], [-1, 3]])
    assert mult_matrix(order, (1, 0)) == IntMatrix.identity(2)
    assert mult_matrix(order, (1, 1)) == IntMatrix([[1, 1], [-1, 4]])
    with pytest.raises(DimensionMismatch):
        mult_matrix(order, (1, 0, 0))


def test_trace_examples():
    order = build_order(QUAD, 5)
    assert trace_via_mult(order, (0, 1)) == 3
    assert trace_via_mult(order, (1, 0)) == 2
    assert trace_via_mult(order, (1, 1)) == 5
    assert trace_via_newton(order, (0, 1)) == 3
    assert trace_via_newton(order, (0, 0)) == 0
    assert trace_via_embeddings(order, (0, 1), tol=1e-8) == 3
    # lambda^2 = 3*lambda - 1 has trace 7
    assert trace_via_mult(order, (-1, 3)) == 7
    assert trace_via_embeddings(order, (-1, 3), tol=1e-8) == 7
    trib_order = build_order(TRIB, 5)
    assert trace_via_newton(trib_order, (0, 0, 1)) == 3
    assert trace_via_embeddings(trib_order, (1, 0, 0), tol=1e-8) == 3


def test_trace_functional_examples():
    assert trace_functional(build_order(QUAD)).t == (2, 3)
    assert trace_functional(build_order(TRIB)).t == (3, 1, 3)
    fournacci = IntMatrix([[0, 0, 0, 1], [1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
    assert trace_functional(build_order(fournacci)).t == (4, 1, 3, 7)


def test_norm_value_examples():
    f = trace_functional(build_order(QUAD))
    assert norm_value(f, (1, 1)) == 5
    assert norm_value(f, (0, 0)) == 0
    assert norm_value(f, (-1, 1)) == 1
    with pytest.raises(DimensionMismatch):
        norm_value(f, (1, 1, 1))


def test_three_way_trace_agreement():
    rng = random.Random(1618)
    for _ in range(30):
        _, order = _random_certified_matrix(rng)
        for _ in range(10):
            a = tuple(rng.randint(-10, 10) for _ in range(order.degree))
            exact = trace_via_mult(order, a)
            assert trace_via_newton(order, a) == exact
            assert trace_via_embeddings(order, a, tol=1e-8) == exact


def test_trace_linearity_exhaustive_scalars():
    rng = random.Random(271)
    _, order = _random_certified_matrix(rng)
    k = order.degree
    for _ in range(5):
        a = tuple(rng.randint(-10, 10) for _ in range(k))
        b = tuple(rng.randint(-10, 10) for _ in range(k))
        ta, tb = trace_via_mult(order, a), trace_via_mult(order, b)
        for p in range(-5, 6):
            for q in range(-5, 6):
                combo = tuple(p * x + q * y for x, y in zip(a, b))
                assert trace_via_mult(order, combo) == p * ta + q * tb


def test_trace_invariant_under_unimodular_conjugation():
    rng = random.Random(846)
    for _ in range(10):
        _, order = _random_certified_matrix(rng)
        a = tuple(rng.randint(-5, 5) for _ in range(order.degree))
        m = mult_matrix(order, a)
        u, uinv = _random_unimodular_pair(rng, order.degree)
        assert (u * m * uinv).trace() == m.trace()


def test_functional_starts_with_degree_and_follows_traces():
    rng = random.Random(919)
    for _ in range(10):
        matrix, order = _random_certified_matrix(rng)
        t = trace_functional(order).t
        assert t[0] == order.degree
        for j in range(order.degree):
            assert t[j] == (matrix**j).trace()


def test_embeddings_guard_trips_on_absurd_tolerance():
    # deterministic: this sum lands a few ulps away from the integer 8
    order = build_order(TRIB, 5)
    assert trace_via_embeddings(order, (7, -13, 0), tol=1e-8) == 8
    with pytest.raises(EmbeddingMismatch):
        trace_via_embeddings(order, (7, -13, 0), tol=1e-18)
