"""Independent ground truth via a faithful complex matrix representation.

Generators are realized as Kronecker products of 2x2 Pauli-type matrices:
for even n an irreducible set on dimension 2^(n/2); for odd n a direct sum
of two blocks of dimension 2^((n-1)/2) whose last generators differ by sign
(this keeps the map faithful).  Generators with negative square are the
positive-square ones multiplied by the imaginary unit.  The total matrix
dimension always equals N = 2^((n+1)//2).

All entries are exact Gaussian rationals stored as (real, imag) pairs;
there is no floating point anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import Multivector, Rational, Signature
from .recursive import CharPoly, _normalize, charpoly_recursive

Complex = tuple[Rational, Rational]  # (re, im)

_ZERO: Complex = (0, 0)
_ONE: Complex = (1, 0)
_I: Complex = (0, 1)


class RepresentationError(AssertionError):
    """A coefficient that must be real came out with nonzero imaginary part."""


@dataclass(frozen=True)
class ComplexMatrix:
    """Dense square matrix of exact complex rationals."""

    entries: tuple[tuple[Complex, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, dim: int) -> "ComplexMatrix":
        return cls(
            tuple(
                tuple(_ONE if i == j else _ZERO for j in range(dim))
                for i in range(dim)
            )
        )

    @classmethod
    def zero(cls, dim: int) -> "ComplexMatrix":
        return cls(tuple((_ZERO,) * dim for _ in range(dim)))

    def __add__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        return ComplexMatrix(
            tuple(
                tuple((a[0] + b[0], a[1] + b[1]) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        return ComplexMatrix(
            tuple(
                tuple((a[0] - b[0], a[1] - b[1]) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __neg__(self) -> "ComplexMatrix":
        return ComplexMatrix(
            tuple(tuple((-re, -im) for re, im in row) for row in self.entries)
        )

    def scale(self, c: Complex) -> "ComplexMatrix":
        cr, ci = c
        return ComplexMatrix(
            tuple(
                tuple((cr * re - ci * im, cr * im + ci * re) for re, im in row)
                for row in self.entries
            )
        )

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        dim = self.dim
        cols = other.entries
        out = []
        for row in self.entries:
            acc_re = [0] * dim
            acc_im = [0] * dim
            for k, (ar, ai) in enumerate(row):
                if ar == 0 and ai == 0:
                    continue
                crow = cols[k]
                for j, (br, bi) in enumerate(crow):
                    if br == 0 and bi == 0:
                        continue
                    acc_re[j] += ar * br - ai * bi
                    acc_im[j] += ar * bi + ai * br
            out.append(tuple((acc_re[j], acc_im[j]) for j in range(dim)))
        return ComplexMatrix(tuple(out))

    def trace(self) -> Complex:
        re = sum(self.entries[i][i][0] for i in range(self.dim))
        im = sum(self.entries[i][i][1] for i in range(self.dim))
        return (re, im)

    def shift(self, c: Complex) -> "ComplexMatrix":
        """self - c * I (used by the Faddeev-LeVerrier loop)."""
        cr, ci = c
        rows = []
        for i, row in enumerate(self.entries):
            row = list(row)
            row[i] = (row[i][0] - cr, row[i][1] - ci)
            rows.append(tuple(row))
        return ComplexMatrix(tuple(rows))


def _kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    out = []
    for ra in a.entries:
        for rb in b.entries:
            row = []
            for ar, ai in ra:
                for br, bi in rb:
                    row.append((ar * br - ai * bi, ar * bi + ai * br))
            out.append(tuple(row))
    return ComplexMatrix(tuple(out))


def _block_diag(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    da, db = a.dim, b.dim
    rows = [ra + (_ZERO,) * db for ra in a.entries]
    rows += [(_ZERO,) * da + rb for rb in b.entries]
    return ComplexMatrix(tuple(rows))


_SIGMA1 = ComplexMatrix(((_ZERO, _ONE), (_ONE, _ZERO)))
_SIGMA2 = ComplexMatrix(((_ZERO, (0, -1)), (_I, _ZERO)))
_SIGMA3 = ComplexMatrix(((_ONE, _ZERO), (_ZERO, (-1, 0))))


def _even_generators(m: int) -> list[ComplexMatrix]:
    """m anticommuting generators squaring to +I on dimension 2^(m/2)."""
    sites = m // 2
    gammas = []
    for k in range(sites):
        for sigma in (_SIGMA1, _SIGMA2):
            mat = ComplexMatrix.identity(1)
            for s in range(sites):
                factor = _SIGMA3 if s < k else (sigma if s == k else ComplexMatrix.identity(2))
                mat = _kron(mat, factor)
            gammas.append(mat)
    return gammas


@dataclass
class Representation:
    """Generator matrices for Cl(p,q); blade matrices are cached on demand."""

    sig: Signature
    gamma: tuple[ComplexMatrix, ...]
    _blade_cache: dict[int, ComplexMatrix] = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.gamma[0].dim

    def blade_matrix(self, bits: int) -> ComplexMatrix:
        """Matrix of the canonical blade with the given generator bit set."""
        cached = self._blade_cache.get(bits)
        if cached is not None:
            return cached
        if bits == 0:
            mat = ComplexMatrix.identity(self.dim)
        else:
            low = bits & -bits
            mat = self.gamma[low.bit_length() - 1] @ self.blade_matrix(bits ^ low)
        self._blade_cache[bits] = mat
        return mat


def build_representation(sig: Signature) -> Representation:
    n, p = sig.n, sig.p
    if n % 2 == 0:
        gammas = _even_generators(n)
    else:
        base = _even_generators(n - 1)
        chirality = ComplexMatrix.identity(1 << ((n - 1) // 2))
        for g in base:
            chirality = chirality @ g
        # (e1...e_{n-1})^2 = (-1)^((n-1)(n-2)/2) I; rescale so the square is +I
        if ((n - 1) * (n - 2) // 2) % 2 == 1:
            chirality = chirality.scale(_I)
        gammas = [_block_diag(g, g) for g in base]
        gammas.append(_block_diag(chirality, -chirality))
    # generators past the first p square to -1
    gammas = [g if a < p else g.scale(_I) for a, g in enumerate(gammas)]
    return Representation(sig, tuple(gammas))


def beta(u: Multivector, rep: Representation) -> ComplexMatrix:
    """The image of U: sum of blade coordinates times blade matrices."""
    if u.sig != rep.sig:
        raise ValueError(f"element of {u.sig} fed to a representation of {rep.sig}")
    out = ComplexMatrix.zero(rep.dim)
    for bits, c in enumerate(u.coeffs):
        if c:
            out = out + rep.blade_matrix(bits).scale((c, 0))
    return out


def matrix_charpoly(m: ComplexMatrix, sig: Signature) -> CharPoly:
    """Faddeev-LeVerrier on an exact complex matrix, in the package convention.

    M_(1) = M;  C_(k) = tr(M_(k)) / k;  M_(k+1) = M (M_(k) - C_(k) I).
    Every coefficient must come out exactly real.
    """
    N = m.dim
    if N != sig.N:
        raise ValueError(f"matrix dimension {N} does not match N={sig.N} of {sig}")
    coeffs = []
    mk = m
    for k in range(1, N + 1):
        tr_re, tr_im = mk.trace()
        ck = (Fraction(tr_re) / k, Fraction(tr_im) / k)
        if ck[1] != 0:
            raise RepresentationError(f"coefficient C_({k}) has imaginary part {ck[1]}")
        coeffs.append(_normalize(ck[0]))
        if k < N:
            mk = m @ mk.shift(ck)
    return CharPoly(sig, tuple(coeffs))


@dataclass(frozen=True)
class OracleReport:
    """Per-coefficient exact deltas between the available coefficient paths."""

    sig: Signature
    results: dict[str, tuple[Rational, ...]]
    deltas: dict[str, tuple[Rational, ...]]

    @property
    def ok(self) -> bool:
        return all(all(d == 0 for d in ds) for ds in self.deltas.values())


def oracle_compare(u: Multivector, rep: Representation | None = None) -> OracleReport:
    """Run the recursive, matrix, and (n <= 6) closed-form paths and diff them."""
    from .closedform import charpoly_closed

    sig = u.sig
    if rep is None:
        rep = build_representation(sig)
    results = {"recursive": charpoly_recursive(u)[0].coeffs}
    results["matrix"] = matrix_charpoly(beta(u, rep), sig).coeffs
    if sig.n <= 6:
        results["closed"] = charpoly_closed(u).coeffs
    reference = results["recursive"]
    deltas = {
        name: tuple(a - b for a, b in zip(vals, reference))
        for name, vals in results.items()
        if name != "recursive"
    }
    return OracleReport(sig, results, deltas)
