"""Floating-point root finding for integer polynomials.

Used only as a numeric cross-check (field embeddings, spectral gap); the
exact integer paths elsewhere never depend on these values.
"""

import cmath

_MAX_SWEEPS = 600
_STEP_TOL = 1e-13


def cauchy_bound(p):
    """Radius beyond which a polynomial has no roots (Cauchy's bound)."""
    lead = abs(p.coeffs[-1])
    return 1.0 + max(abs(c) for c in p.coeffs[:-1]) / lead if p.degree > 0 else 1.0


def complex_roots(p):
    """All complex roots of p, via Durand-Kerner simultaneous iteration.

    Deterministic start points on a circle of the Cauchy radius, updated
    in place (Gauss-Seidel style).  Returns roots sorted by real part,
    then imaginary part.
    """
    n = p.degree
    if n <= 0:
        return []
    lead = p.coeffs[-1]
    coeffs = [c / lead for c in p.coeffs]
    if n == 1:
        return [complex(-coeffs[0])]

    def value(z):
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    radius = cauchy_bound(p)
    # Offset angle keeps the start points off the real axis and off any
    # root symmetry line.
    z = [radius * cmath.exp(1j * (2 * cmath.pi * i / n + 0.37)) for i in range(n)]
    for _ in range(_MAX_SWEEPS):
        worst = 0.0
        for i in range(n):
            den = 1.0 + 0j
            for j in range(n):
                if j != i:
                    den *= z[i] - z[j]
            if den == 0:
                z[i] += 1e-8 + 1e-8j
                worst = float("inf")
                continue
            step = value(z[i]) / den
            z[i] -= step
            worst = max(worst, abs(step) / (1.0 + abs(z[i])))
        if worst <= _STEP_TOL:
            break
    return sorted(z, key=lambda w: (w.real, w.imag))
