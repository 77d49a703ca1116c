"""Exact integer polynomials, square integer matrices, and certificates.

Everything in this module is arbitrary precision and uses only exact
arithmetic (the characteristic polynomial comes from the Faddeev-LeVerrier
recursion, whose interior divisions are exact), so results are
bit-for-bit reproducible.  All values are immutable once built.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from math import comb

from .errors import BadReductionPrime

# Deterministic cap on the monic-factor enumeration used by the
# reducibility search; past it the certificate stays Undecided.
_FACTOR_SEARCH_CAP = 200_000
_FACTOR_SEARCH_MAX_DEGREE = 8

DEFAULT_PRIME_BUDGET = 10


def _check_int(value):
    if not isinstance(value, int):
        raise TypeError(f"expected an integer, got {type(value).__name__}")
    return value


class IntPolynomial:
    """Polynomial with integer coefficients, ascending degree order.

    ``coeffs[0]`` is the constant term.  The zero polynomial is stored
    with an empty coefficient tuple and reports degree -1.

    >>> IntPolynomial([1, -3, 1]).degree
    2
    >>> IntPolynomial([1, -3, 1])(2)
    -1
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cleaned = [_check_int(c) for c in coeffs]
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        self.coeffs = tuple(cleaned)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        result = 0 * x
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def div_rem(self, divisor):
        """Exact division by a monic divisor: returns (quotient, remainder)."""
        if not divisor.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.coeffs
        shift = len(rem) - len(d)
        if shift < 0:
            return IntPolynomial(), self
        quot = [0] * (shift + 1)
        for i in reversed(range(shift + 1)):
            c = rem[i + len(d) - 1]
            if c:
                quot[i] = c
                for j, b in enumerate(d):
                    rem[i + j] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem)


class IntMatrix:
    """Square matrix of arbitrary-precision integers.  Immutable."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        tupled = tuple(tuple(_check_int(x) for x in row) for row in rows)
        if not tupled:
            raise ValueError("matrix must have at least one row")
        k = len(tupled)
        if any(len(row) != k for row in tupled):
            raise ValueError("matrix must be square")
        self.rows = tupled

    @classmethod
    def identity(cls, k):
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @property
    def k(self):
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]!r})"

    def __add__(self, other):
        self._check_same_size(other)
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        self._check_same_size(other)
        return IntMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([[other * x for x in row] for row in self.rows])
        if not isinstance(other, IntMatrix):
            return NotImplemented
        self._check_same_size(other)
        cols = other.transpose().rows
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __rmul__(self, scalar):
        return self * _check_int(scalar)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("matrix powers need a nonnegative integer exponent")
        result = IntMatrix.identity(self.k)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def apply(self, vector):
        """Matrix times column vector, as a tuple of ints."""
        v = tuple(_check_int(x) for x in vector)
        if len(v) != self.k:
            raise ValueError("vector length does not match matrix size")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.k))

    def transpose(self):
        return IntMatrix(list(zip(*self.rows)))

    def _check_same_size(self, other):
        if self.k != other.k:
            raise ValueError("matrix sizes differ")


def char_poly(A):
    """Monic characteristic polynomial det(xI - A), ascending coefficients.

    Faddeev-LeVerrier recursion; every division is by the step index and
    exact, so arithmetic stays in the integers throughout.
    """
    k = A.k
    ident = IntMatrix.identity(k)
    n_mat = IntMatrix([[0] * k for _ in range(k)])
    cs = [1]  # descending: coefficient of x^k, x^{k-1}, ...
    for m in range(1, k + 1):
        n_mat = A * n_mat + cs[-1] * ident
        t = (A * n_mat).trace()
        q, r = divmod(-t, m)
        if r:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        cs.append(q)
    return IntPolynomial(list(reversed(cs)))


def _solve_exact(columns, target):
    """Solve sum_i x_i * columns[i] = target over the rationals.

    Returns a list of Fractions, or None when the system is inconsistent.
    Plain Gaussian elimination on exact fractions.
    """
    n_rows = len(target)
    n_cols = len(columns)
    aug = [[Fraction(col[r]) for col in columns] + [Fraction(target[r])] for r in range(n_rows)]
    pivots = []
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n_rows):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    for r in range(row, n_rows):
        if aug[r][n_cols] != 0:
            return None
    solution = [Fraction(0)] * n_cols
    for r, col in enumerate(pivots):
        solution[col] = aug[r][n_cols]
    return solution


def matrix_min_poly(A):
    """Monic minimal polynomial of A over the rationals.

    Found as the smallest linear dependence among I, A, A^2, ...; the
    result always divides char_poly(A) and has integer coefficients.
    """
    k = A.k
    powers = [IntMatrix.identity(k)]
    for d in range(1, k + 1):
        powers.append(powers[-1] * A)
        columns = [[p.rows[i][j] for i in range(k) for j in range(k)] for p in powers[:d]]
        target = [powers[d].rows[i][j] for i in range(k) for j in range(k)]
        solution = _solve_exact(columns, target)
        if solution is not None:
            if any(x.denominator != 1 for x in solution):
                raise ArithmeticError("minimal polynomial came out non-integral")
            return IntPolynomial([-int(x) for x in solution] + [1])
    raise ArithmeticError("no annihilating polynomial up to the matrix dimension")


def newton_power_sums(p, J):
    """Power sums (p_0, ..., p_J) of the roots of a monic polynomial.

    Newton's identities on the coefficients, all exact.  When p is the
    characteristic polynomial of A, p_j equals tr(A^j).
    """
    if not p.is_monic:
        raise ValueError("power sums need a monic polynomial")
    if J < 0:
        raise ValueError("J must be nonnegative")
    k = p.degree
    if k < 1:
        raise ValueError("polynomial must have degree at least 1")
    # e[i] = i-th elementary symmetric function of the roots.
    e = [0] * (k + 1)
    for i in range(1, k + 1):
        e[i] = (-1) ** i * p.coeffs[k - i]
    sums = [k]
    for j in range(1, J + 1):
        s = 0
        for i in range(1, min(j, k) + 1):
            if i == j:
                s += (-1) ** (j - 1) * j * e[j]
            else:
                s += (-1) ** (i - 1) * e[i] * sums[j - i]
        sums.append(s)
    return tuple(sums)


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def first_primes(count):
    """The first ``count`` primes, ascending."""
    primes = []
    n = 2
    while len(primes) < count:
        if is_prime(n):
            primes.append(n)
        n += 1
    return primes


# --- arithmetic in F_q[x]: plain ascending coefficient lists -----------------

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a, b, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return _fp_trim(out)


def _fp_sub(a, b, q):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % q
    return _fp_trim(out)


def _fp_monic(a, q):
    inv = pow(a[-1], -1, q)
    return [(x * inv) % q for x in a]


def _fp_divmod(a, b, q):
    b = _fp_monic(list(b), q)
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _fp_trim(rem)
    quot = [0] * (len(rem) - db)
    for i in reversed(range(len(quot))):
        c = rem[i + db]
        if c:
            quot[i] = c
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - c * y) % q
    return _fp_trim(quot), _fp_trim(rem)


def _fp_gcd(a, b, q):
    a, b = list(a), list(b)
    while b:
        _, r = _fp_divmod(a, b, q)
        a, b = b, r
    return _fp_monic(a, q) if a else []


def _fp_powmod(base, exponent, modulus, q):
    result = [1]
    base = _fp_divmod(base, modulus, q)[1]
    while exponent:
        if exponent & 1:
            result = _fp_divmod(_fp_mul(result, base, q), modulus, q)[1]
        base = _fp_divmod(_fp_mul(base, base, q), modulus, q)[1]
        exponent >>= 1
    return result


def _fp_derivative(a, q):
    return _fp_trim([(i * a[i]) % q for i in range(1, len(a))])


def _fp_pth_root(a, q):
    # a is a polynomial in x^q over F_q; Frobenius fixes the coefficients.
    return [a[i] for i in range(0, len(a), q)]


def _fp_squarefree_parts(f, q):
    """Squarefree decomposition of monic f: list of (factor, multiplicity)."""
    if len(f) <= 1:
        return []
    parts = []
    deriv = _fp_derivative(f, q)
    if not deriv:
        for factor, mult in _fp_squarefree_parts(_fp_pth_root(f, q), q):
            parts.append((factor, mult * q))
        return parts
    c = _fp_gcd(f, deriv, q)
    w = _fp_divmod(f, c, q)[0]
    i = 1
    while w != [1]:
        y = _fp_gcd(w, c, q)
        z = _fp_divmod(w, y, q)[0]
        if z != [1]:
            parts.append((z, i))
        w = y
        c = _fp_divmod(c, y, q)[0]
        i += 1
    if c != [1]:
        for factor, mult in _fp_squarefree_parts(_fp_pth_root(c, q), q):
            parts.append((factor, mult * q))
    return parts


def _fp_distinct_degrees(f, q):
    """Degrees of the irreducible factors of monic squarefree f.

    Distinct-degree factorization: gcd against x^{q^i} - x peels off the
    product of all degree-i factors; counting is enough here, no
    equal-degree splitting is needed.
    """
    out = []
    fstar = list(f)
    h = _fp_divmod([0, 1], fstar, q)[1]
    i = 1
    while len(fstar) - 1 >= 2 * i:
        h = _fp_powmod(h, q, fstar, q)
        g = _fp_gcd(fstar, _fp_sub(h, [0, 1], q), q)
        if g != [1]:
            out.append((i, (len(g) - 1) // i))
            fstar = _fp_divmod(fstar, g, q)[0]
            h = _fp_divmod(h, fstar, q)[1]
        i += 1
    if len(fstar) - 1 >= 1:
        out.append((len(fstar) - 1, 1))
    return out


def factor_mod_p(p, q):
    """Multiset of irreducible factor degrees of p over F_q, sorted.

    Multiplicities are respected, so the returned degrees always sum to
    deg p.  The prime must not divide the leading coefficient.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if p.coeffs[-1] % q == 0:
        raise BadReductionPrime(f"prime {q} divides the leading coefficient")
    f = _fp_trim([c % q for c in p.coeffs])
    f = _fp_monic(f, q)
    degrees = []
    for factor, mult in _fp_squarefree_parts(f, q):
        for degree, count in _fp_distinct_degrees(factor, q):
            degrees.extend([degree] * (count * mult))
    return tuple(sorted(degrees))


class CertificateStatus(Enum):
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """Outcome of the rational irreducibility test.

    Irreducible always carries the witness prime at which the polynomial
    stays in one piece of full degree.  Reducible carries the degrees of
    an exact rational split that was actually found.  Undecided is an
    honest answer, not an error.
    """

    status: CertificateStatus
    witness_prime: int | None = None
    factor_degrees: tuple[int, ...] | None = None


def _proper_subset_sums(degrees, full):
    """Achievable proper factor degrees given one mod-q degree pattern."""
    bits = 1
    for d in degrees:
        bits |= bits << d
    return {d for d in range(1, full) if bits >> d & 1}


def _signed_divisors(n):
    """Divisors of |n| with both signs, smallest magnitude first."""
    n = abs(n)
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out.extend((d, -d))
    return out


def _bounded_factor_search(p, candidate_degrees):
    """Look for a monic integer factor whose degree is in the candidate set.

    Coefficients are enumerated inside the elementary-symmetric bound that
    the Cauchy root radius gives; the search is skipped wholesale when the
    candidate space exceeds a fixed cap, keeping runtime deterministic.
    """
    k = p.degree
    if k > _FACTOR_SEARCH_MAX_DEGREE:
        return None
    a0 = p.coeffs[0]
    if a0 == 0:
        return IntPolynomial([0, 1])
    root_bound = 1 + max(abs(c) for c in p.coeffs[:-1])
    for d in sorted(candidate_degrees):
        if d > k // 2:
            continue
        if d == 1:
            for r in _signed_divisors(a0):
                if p(r) == 0:
                    return IntPolynomial([-r, 1])
            continue
        constants = [c for c in _signed_divisors(a0) if abs(c) <= root_bound**d]
        bounds = [comb(d, d - j) * root_bound ** (d - j) for j in range(1, d)]
        total = len(constants)
        for b in bounds:
            total *= 2 * b + 1
            if total > _FACTOR_SEARCH_CAP:
                break
        if total > _FACTOR_SEARCH_CAP:
            continue
        ranges = [range(-b, b + 1) for b in bounds]
        for constant in constants:
            for middle in product(*ranges):
                candidate = IntPolynomial([constant, *middle, 1])
                _, rem = p.div_rem(candidate)
                if rem.is_zero:
                    return candidate
    return None


def irreducibility_certificate(p, prime_budget=DEFAULT_PRIME_BUDGET):
    """Certify irreducibility of a monic integer polynomial over Q.

    A single reduction prime where the polynomial stays irreducible of
    full degree is a witness.  Failing that, the degree patterns across
    the prime budget are intersected; if they leave room for a proper
    factor, a bounded coefficient search tries to produce one exactly.
    Everything else is Undecided: in particular polynomials that are
    irreducible over Q but split at every prime never get a witness here.
    """
    if not p.is_monic or p.degree < 1:
        raise ValueError("certificate needs a monic polynomial of degree >= 1")
    if prime_budget < 1:
        raise ValueError("prime budget must be at least 1")
    k = p.degree
    possible = None
    for q in first_primes(prime_budget):
        degrees = factor_mod_p(p, q)
        if degrees == (k,):
            return IrreducibilityCertificate(
                CertificateStatus.IRREDUCIBLE, witness_prime=q, factor_degrees=(k,)
            )
        sums = _proper_subset_sums(degrees, k)
        possible = sums if possible is None else possible & sums
        if not possible:
            break
    if possible:
        factor = _bounded_factor_search(p, possible)
        if factor is not None:
            return IrreducibilityCertificate(
                CertificateStatus.REDUCIBLE,
                factor_degrees=tuple(sorted((factor.degree, k - factor.degree))),
            )
    return IrreducibilityCertificate(CertificateStatus.UNDECIDED)
