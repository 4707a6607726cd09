"""Dense multivector arithmetic for real Clifford algebras Cl(p,q).

Multivectors are stored as flat arrays of 2^n exact rational coordinates,
one per basis blade.  Blades are indexed by bit sets: bit a of the index is
set iff generator e_{a+1} occurs in the blade, so blade 0 is the identity
element e and the coordinate order is the increasing-bit-pattern order.
Generators e_1 .. e_p square to +1 and e_{p+1} .. e_n to -1.

All values are immutable; every operation is a pure function.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Union

Rational = Union[int, Fraction]

MAX_N = 12  # core arithmetic bound; closed-form formulas stop at n = 6


class SignatureMismatchError(ValueError):
    """Operands live in different algebras Cl(p,q)."""


@dataclass(frozen=True)
class Signature:
    """The pair (p, q): p generators square to +1, q to -1."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"p and q must be nonnegative, got ({self.p},{self.q})")
        if not 1 <= self.p + self.q <= MAX_N:
            raise ValueError(f"need 1 <= p+q <= {MAX_N}, got n={self.p + self.q}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def N(self) -> int:
        """Degree of the characteristic polynomial: 2^((n+1)//2)."""
        return 1 << ((self.n + 1) // 2)

    @property
    def dim(self) -> int:
        """Number of basis blades, 2^n."""
        return 1 << self.n

    def __repr__(self):
        return f"Cl({self.p},{self.q})"


def blade_grade(bits: int) -> int:
    """Grade of a blade = number of generators in it."""
    return bits.bit_count()


def _swap_parity(a: int, b: int) -> int:
    """Parity of the transposition count merging blade a's generators past b's.

    Counts pairs (i in a, j in b) with i > j; each such pair costs one
    generator swap when sorting the concatenated product.
    """
    swaps = 0
    a >>= 1
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return swaps & 1


def blade_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Product of two basis blades: (sign, result_bits) with result = a XOR b.

    The sign combines the swap parity with one factor -1 per repeated
    generator of negative square (index > p).
    """
    parity = _swap_parity(a, b)
    # repeated generators annihilate; those beyond the first p square to -1
    parity ^= ((a & b) >> sig.p).bit_count() & 1
    return (-1 if parity else 1), a ^ b


@lru_cache(maxsize=32)
def _sign_rows(p: int, q: int) -> tuple[tuple[int, ...], ...]:
    """Full 2^n x 2^n sign table; result indices are i^j, computed inline."""
    sig = Signature(p, q)
    dim = sig.dim
    return tuple(
        tuple(blade_product(i, j, sig)[0] for j in range(dim)) for i in range(dim)
    )


@lru_cache(maxsize=32)
def _grades(n: int) -> tuple[int, ...]:
    return tuple(b.bit_count() for b in range(1 << n))


def _mul_dense(a, b, rows, dim):
    out = [0] * dim
    for i, ai in enumerate(a):
        if ai:
            row = rows[i]
            for j, bj in enumerate(b):
                if bj:
                    if row[j] > 0:
                        out[i ^ j] += ai * bj
                    else:
                        out[i ^ j] -= ai * bj
    return out


def _mul_inline(a, b, sig, dim):
    # fallback for n > 8 where the full sign table would be too large
    out = [0] * dim
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    s, k = blade_product(i, j, sig)
                    if s > 0:
                        out[k] += ai * bj
                    else:
                        out[k] -= ai * bj
    return out


@dataclass(frozen=True)
class ConjugationSpec:
    """A grade-wise sign map U -> sum_k signs[k] <U>_k with signs in {+1,-1}."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("conjugation signs must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.signs) - 1

    def __mul__(self, other: "ConjugationSpec") -> "ConjugationSpec":
        """Composition of two conjugations = pointwise product of signs."""
        if len(self.signs) != len(other.signs):
            raise ValueError("conjugation specs defined for different n")
        return ConjugationSpec(tuple(a * b for a, b in zip(self.signs, other.signs)))


def identity_spec(n: int) -> ConjugationSpec:
    return ConjugationSpec((1,) * (n + 1))


def grade_involution(n: int) -> ConjugationSpec:
    """Sign (-1)^k: flips odd grades."""
    return ConjugationSpec(tuple(-1 if k & 1 else 1 for k in range(n + 1)))


def reversion(n: int) -> ConjugationSpec:
    """Sign (-1)^(k(k-1)/2): reverses generator order inside blades."""
    return ConjugationSpec(tuple(-1 if (k * (k - 1) // 2) & 1 else 1 for k in range(n + 1)))


def clifford_conjugation(n: int) -> ConjugationSpec:
    """Sign (-1)^(k(k+1)/2): grade involution composed with reversion."""
    return ConjugationSpec(tuple(-1 if (k * (k + 1) // 2) & 1 else 1 for k in range(n + 1)))


def quad_conjugation(n: int) -> ConjugationSpec:
    """Sign (-1)^binom(k,4): flips grades congruent to 4..7 mod 8."""
    return ConjugationSpec(tuple(-1 if comb(k, 4) & 1 else 1 for k in range(n + 1)))


class Multivector:
    """An element of Cl(p,q): 2^n exact rational blade coordinates."""

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs: Iterable[Rational]):
        coeffs = tuple(coeffs)
        if len(coeffs) != sig.dim:
            raise ValueError(f"expected {sig.dim} coordinates, got {len(coeffs)}")
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig, (0,) * sig.dim)

    @classmethod
    def scalar(cls, sig: Signature, c: Rational) -> "Multivector":
        coeffs = [0] * sig.dim
        coeffs[0] = c
        return cls(sig, coeffs)

    @classmethod
    def identity(cls, sig: Signature) -> "Multivector":
        return cls.scalar(sig, 1)

    @classmethod
    def basis_blade(cls, sig: Signature, bits: int, c: Rational = 1) -> "Multivector":
        if not 0 <= bits < sig.dim:
            raise ValueError(f"blade index {bits} out of range for {sig}")
        coeffs = [0] * sig.dim
        coeffs[bits] = c
        return cls(sig, coeffs)

    @classmethod
    def basis_vector(cls, sig: Signature, a: int, c: Rational = 1) -> "Multivector":
        """Generator e_a, 1-based index."""
        if not 1 <= a <= sig.n:
            raise ValueError(f"generator index {a} out of range for {sig}")
        return cls.basis_blade(sig, 1 << (a - 1), c)

    # -- ring structure ----------------------------------------------------

    def _check_sig(self, other: "Multivector"):
        if self.sig != other.sig:
            raise SignatureMismatchError(f"{self.sig} vs {other.sig}")

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._check_sig(other)
            return Multivector(self.sig, (x + y for x, y in zip(self.coeffs, other.coeffs)))
        if isinstance(other, (int, Fraction)):
            return self + Multivector.scalar(self.sig, other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Multivector):
            self._check_sig(other)
            return Multivector(self.sig, (x - y for x, y in zip(self.coeffs, other.coeffs)))
        if isinstance(other, (int, Fraction)):
            return self - Multivector.scalar(self.sig, other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Multivector.scalar(self.sig, other) - self
        return NotImplemented

    def __neg__(self):
        return Multivector(self.sig, (-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._check_sig(other)
            sig = self.sig
            if sig.n <= 8:
                out = _mul_dense(self.coeffs, other.coeffs, _sign_rows(sig.p, sig.q), sig.dim)
            else:
                out = _mul_inline(self.coeffs, other.coeffs, sig, sig.dim)
            return Multivector(sig, out)
        if isinstance(other, (int, Fraction)):
            return Multivector(self.sig, (x * other for x in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Multivector(self.sig, (other * x for x in self.coeffs))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of multivector by zero scalar")
            return Multivector(self.sig, (Fraction(x, 1) / other for x in self.coeffs))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("multivector powers must be nonnegative integers")
        result = Multivector.identity(self.sig)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.sig == other.sig and all(
                x == y for x, y in zip(self.coeffs, other.coeffs)
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.sig, self.coeffs))

    # -- grade structure ---------------------------------------------------

    def grade_project(self, k: int) -> "Multivector":
        """Zero every coordinate whose blade grade differs from k."""
        if not 0 <= k <= self.sig.n:
            raise ValueError(f"grade {k} out of range for {self.sig}")
        grades = _grades(self.sig.n)
        return Multivector(
            self.sig, (c if g == k else 0 for c, g in zip(self.coeffs, grades))
        )

    def scalar_part(self) -> Rational:
        return self.coeffs[0]

    def is_scalar(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def conjugate(self, spec: ConjugationSpec) -> "Multivector":
        if spec.n != self.sig.n:
            raise ValueError(f"spec for n={spec.n} applied in {self.sig}")
        signs = spec.signs
        grades = _grades(self.sig.n)
        return Multivector(
            self.sig,
            (c if signs[g] == 1 else -c for c, g in zip(self.coeffs, grades)),
        )

    def involute(self) -> "Multivector":
        return self.conjugate(grade_involution(self.sig.n))

    def reverse(self) -> "Multivector":
        return self.conjugate(reversion(self.sig.n))

    def conj(self) -> "Multivector":
        """Clifford conjugation: grade involution composed with reversion."""
        return self.conjugate(clifford_conjugation(self.sig.n))

    def quad(self) -> "Multivector":
        """The extra involution with sign (-1)^binom(k,4) on grade k."""
        return self.conjugate(quad_conjugation(self.sig.n))

    # -- misc ----------------------------------------------------------------

    def __repr__(self):
        from .expr import format_multivector

        return f"<{self.sig} {format_multivector(self)}>"


# -- functional aliases used throughout the package and tests ---------------


def geometric_product(u: Multivector, v: Multivector) -> Multivector:
    return u * v


def add(u: Multivector, v: Multivector) -> Multivector:
    return u + v


def scale(c: Rational, u: Multivector) -> Multivector:
    return c * u


def grade_project(u: Multivector, k: int) -> Multivector:
    return u.grade_project(k)


def scalar_part(u: Multivector) -> Rational:
    return u.scalar_part()


def conjugate(u: Multivector, spec: ConjugationSpec) -> Multivector:
    return u.conjugate(spec)


def random_multivector(
    sig: Signature, rng: random.Random, low: int = -9, high: int = 9
) -> Multivector:
    """Uniform integer coordinates in [low, high], dense over all blades."""
    return Multivector(sig, [rng.randint(low, high) for _ in range(sig.dim)])


def all_signatures(max_n: int, min_n: int = 1) -> list[Signature]:
    """Every (p,q) with min_n <= p+q <= max_n, ordered by n then p."""
    return [
        Signature(p, n - p) for n in range(min_n, max_n + 1) for p in range(n + 1)
    ]
