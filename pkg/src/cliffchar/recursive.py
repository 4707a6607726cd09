"""Recursive characteristic-polynomial algorithm, determinant, adjugate, inverse.

The coefficient convention throughout the package is

    phi_U(lambda) = lambda^N - C_(1) lambda^(N-1) - ... - C_(N-1) lambda - C_(N)

with N = 2^((n+1)//2).  C_(1) is the trace (N times the scalar part) and
-C_(N) is the determinant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Multivector, Rational, Signature


class SingularElementError(ZeroDivisionError):
    """Raised when inverting a multivector with determinant 0."""


def _normalize(x: Rational) -> Rational:
    """Collapse integral Fractions to int (keeps later arithmetic fast)."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class CharPoly:
    """Coefficients C_(1) .. C_(N) of the characteristic polynomial."""

    sig: Signature
    coeffs: tuple[Rational, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.sig.N:
            raise ValueError(
                f"expected {self.sig.N} coefficients for {self.sig}, got {len(self.coeffs)}"
            )

    def c(self, k: int) -> Rational:
        """C_(k), 1-based."""
        return self.coeffs[k - 1]

    @property
    def trace(self) -> Rational:
        return self.coeffs[0]

    @property
    def det(self) -> Rational:
        return -self.coeffs[-1]


@dataclass(frozen=True)
class RecursionTrace:
    """Auxiliary elements U_(1) .. U_(N) alongside the coefficients."""

    u_seq: tuple[Multivector, ...]
    c_seq: tuple[Rational, ...]


def charpoly_recursive(u: Multivector) -> tuple[CharPoly, RecursionTrace]:
    """U_(1) = U;  C_(k) = (N/k) <U_(k)>_0;  U_(k+1) = U (U_(k) - C_(k))."""
    sig = u.sig
    N = sig.N
    u_seq = [u]
    c_seq: list[Rational] = []
    uk = u
    for k in range(1, N + 1):
        ck = _normalize(Fraction(N, k) * uk.scalar_part())
        c_seq.append(ck)
        if k < N:
            uk = u * (uk - ck)
            u_seq.append(uk)
    if not u_seq[-1].is_scalar():
        raise AssertionError("U_(N) has a non-scalar part; recursion contract broken")
    return CharPoly(sig, tuple(c_seq)), RecursionTrace(tuple(u_seq), tuple(c_seq))


def det(u: Multivector) -> Rational:
    """Det(U) = -C_(N)."""
    cp, _ = charpoly_recursive(u)
    return cp.det


def adj(u: Multivector) -> Multivector:
    """Adjugate: Adj(U) = C_(N-1) - U_(N-1), so U Adj(U) = Det(U) e."""
    _, trace = charpoly_recursive(u)
    return trace.c_seq[-2] - trace.u_seq[-2]


def inverse(u: Multivector) -> Multivector:
    _, trace = charpoly_recursive(u)
    d = -trace.c_seq[-1]
    if d == 0:
        raise SingularElementError(f"element of {u.sig} has determinant 0")
    return (trace.c_seq[-2] - trace.u_seq[-2]) / d


def _newton_coeffs(xs: list[int], ys: list[Rational]) -> list[Rational]:
    """Exact monomial coefficients (ascending) of the interpolating polynomial."""
    m = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    # Horner expansion of the Newton form into monomial coefficients
    poly = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        # poly <- poly * (x - xs[i]) + dd[i]
        for k in range(m - 1, 0, -1):
            poly[k] = poly[k - 1] - xs[i] * poly[k]
        poly[0] = dd[i] - xs[i] * poly[0]
    return poly


def charpoly_via_interpolation(u: Multivector) -> CharPoly:
    """Recover all coefficients from -Det(lambda e - U) at lambda = 0..N.

    The negated characteristic polynomial -phi_U is a degree-N polynomial
    with leading coefficient -1; N+1 exact evaluations determine it, and the
    remaining coefficients are read off directly.
    """
    sig = u.sig
    N = sig.N
    xs = list(range(N + 1))
    ys = [-det(Multivector.scalar(sig, lam) - u) for lam in xs]
    poly = _newton_coeffs(xs, ys)  # ascending: poly[i] = coeff of lambda^i
    if poly[N] != -1:
        raise AssertionError("interpolated polynomial is not monic of degree N")
    coeffs = tuple(_normalize(poly[N - k]) for k in range(1, N + 1))
    return CharPoly(sig, coeffs)


def cayley_hamilton_residual(u: Multivector) -> Multivector:
    """U^N - sum_k C_(k) U^(N-k); identically the zero multivector."""
    sig = u.sig
    N = sig.N
    cp, _ = charpoly_recursive(u)
    power = Multivector.identity(sig)
    powers = [power]
    for _ in range(N):
        power = power * u
        powers.append(power)
    residual = powers[N]
    for k in range(1, N + 1):
        residual = residual - cp.c(k) * powers[N - k]
    return residual
