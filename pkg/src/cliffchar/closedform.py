"""Closed-form basis-free characteristic polynomial coefficients, n <= 6.

Two independent routes are provided:

* ``charpoly_closed`` evaluates the generator form: a fixed product F of
  conjugated slots, summed over all arrangements of k copies of U and N-k
  copies of the identity.  The sum is evaluated exactly via a polynomial in
  a central formal variable (each slot contributes a binomial e + z*conj(U)),
  which regroups the tuple sum by bilinearity without changing its value.
  ``charpoly_closed_tuplesum`` keeps the literal one-tuple-at-a-time sum and
  is used to cross-validate the regrouped evaluation.

* ``charpoly_explicit`` (n = 4 and n = 5 only) evaluates literally
  transcribed term lists, serving as a second implementation that shares no
  code with the generator route.

Special-case formulas (pure scalars, squares-are-scalar elements, rotors)
live here too, together with the rotor predicate and a rational rotor
generator for tests.

Conjugation shorthand used in the tables: ``u`` the element itself,
``h`` grade involution, ``t`` reversion, ``a`` Clifford conjugation;
a ``q`` suffix applies the quad conjugation (grade-4..7 sign flip), and
``(ht)q`` style atoms quad-conjugate the product of the letters inside.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb, isqrt
from typing import Callable, Sequence

from .core import Multivector, Rational, Signature
from .recursive import CharPoly, _normalize


class UnsupportedDimensionError(ValueError):
    """No closed-form formula exists in this package for the given n."""


class NotInvolutoryError(ValueError):
    """Element does not satisfy <U>_0 = 0 with U^2 a pure scalar."""


class NotRotorError(ValueError):
    """Element is not in the rotor group of its algebra."""


_CONJ: dict[str, Callable[[Multivector], Multivector]] = {
    "u": lambda m: m,
    "h": Multivector.involute,
    "t": Multivector.reverse,
    "a": Multivector.conj,
}

# Generator forms: per n, a list of weighted products.  A node is either a
# leaf (conjugation code applied to the next slot) or ("q", children) which
# quad-conjugates the product of its children.  Slots are numbered by
# left-to-right leaf order.
_Node = "str | tuple"
_FORMS: dict[int, tuple[tuple[Rational, tuple], ...]] = {
    1: ((1, ("u", "h")),),
    2: ((1, ("u", "a")),),
    3: ((1, ("u", "h", "t", "a")),),
    4: ((1, ("u", "a", ("q", ("h", "t")))),),
    5: ((1, ("u", "a", "h", "t", ("q", ("h", "t", "u", "a")))),),
    6: (
        (Fraction(1, 3), ("u", "t", "h", "a", ("q", ("h", "a", "u", "t")))),
        (
            Fraction(2, 3),
            (
                "u",
                "t",
                (
                    "q",
                    (
                        ("q", ("h", "a")),
                        ("q", (("q", ("h", "a")), ("q", ("u", "t")))),
                    ),
                ),
            ),
        ),
    ),
}


def _arity(n: int) -> int:
    return 1 << ((n + 1) // 2)


def _node_value(node, slots) -> Multivector:
    if isinstance(node, str):
        return _CONJ[node](next(slots))
    _, children = node
    prod = _node_value(children[0], slots)
    for child in children[1:]:
        prod = prod * _node_value(child, slots)
    return prod.quad()


def generator_F(n: int, xs: Sequence[Multivector]) -> Multivector:
    """Evaluate the coefficient generator on one explicit tuple of arguments."""
    if n not in _FORMS:
        raise UnsupportedDimensionError(f"no generator form for n={n}")
    if len(xs) != _arity(n):
        raise ValueError(f"generator for n={n} takes {_arity(n)} arguments, got {len(xs)}")
    sig = xs[0].sig
    if sig.n != n:
        raise ValueError(f"arguments live in {sig}, generator is for n={n}")
    total = Multivector.zero(sig)
    for weight, nodes in _FORMS[n]:
        slots = iter(xs)
        prod = _node_value(nodes[0], slots)
        for node in nodes[1:]:
            prod = prod * _node_value(node, slots)
        total = total + weight * prod
    return total


def _poly_mul(p: list[Multivector], q: list[Multivector], sig: Signature) -> list[Multivector]:
    out = [Multivector.zero(sig) for _ in range(len(p) + len(q) - 1)]
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] = out[i + j] + pi * qj
    return out


def _node_poly(node, u: Multivector, e: Multivector) -> list[Multivector]:
    """Slot-counting polynomial of a node: coefficient of z^k sums the node
    over all ways of placing k copies of U in its slots."""
    if isinstance(node, str):
        return [e, _CONJ[node](u)]
    _, children = node
    poly = _node_poly(children[0], u, e)
    for child in children[1:]:
        poly = _poly_mul(poly, _node_poly(child, u, e), u.sig)
    return [c.quad() for c in poly]


def closed_coefficient_multivectors(u: Multivector) -> list[Multivector]:
    """C_(1) .. C_(N) of the generator route, kept as full multivectors.

    Each entry is (-1)^(k+1) times the tuple sum of the generator; the
    formulas guarantee every entry is a pure scalar, and callers assert it.
    """
    n = u.sig.n
    if n not in _FORMS:
        raise UnsupportedDimensionError(f"closed-form coefficients need n <= 6, got n={n}")
    e = Multivector.identity(u.sig)
    N = _arity(n)
    total = [Multivector.zero(u.sig) for _ in range(N + 1)]
    for weight, nodes in _FORMS[n]:
        poly = _node_poly(nodes[0], u, e)
        for node in nodes[1:]:
            poly = _poly_mul(poly, _node_poly(node, u, e), u.sig)
        for k in range(N + 1):
            total[k] = total[k] + weight * poly[k]
    return [total[k] if k % 2 == 1 else -total[k] for k in range(1, N + 1)]


def charpoly_closed(u: Multivector) -> CharPoly:
    """All coefficients from the generator form; exact, n <= 6."""
    mvs = closed_coefficient_multivectors(u)
    coeffs = []
    for k, mv in enumerate(mvs, start=1):
        if not mv.is_scalar():
            raise AssertionError(f"closed-form C_({k}) has a non-scalar part")
        coeffs.append(_normalize(Fraction(mv.scalar_part())))
    return CharPoly(u.sig, tuple(coeffs))


def charpoly_closed_tuplesum(u: Multivector) -> CharPoly:
    """Reference path: enumerate every tuple explicitly and sum generator_F."""
    n = u.sig.n
    if n not in _FORMS:
        raise UnsupportedDimensionError(f"closed-form coefficients need n <= 6, got n={n}")
    sig = u.sig
    e = Multivector.identity(sig)
    N = _arity(n)
    coeffs = []
    for k in range(1, N + 1):
        acc = Multivector.zero(sig)
        for positions in combinations(range(N), k):
            xs = [u if i in positions else e for i in range(N)]
            acc = acc + generator_F(n, xs)
        if k % 2 == 0:
            acc = -acc
        if not acc.is_scalar():
            raise AssertionError(f"closed-form C_({k}) has a non-scalar part")
        coeffs.append(_normalize(Fraction(acc.scalar_part())))
    return CharPoly(sig, tuple(coeffs))


# -- literal term lists, n = 4 -----------------------------------------------

_EXPLICIT_4: tuple[tuple[str, ...], ...] = (
    ("u", "a", "hq", "tq"),
    ("u a", "u hq", "u tq", "a hq", "a tq", "(ht)q"),
    ("u a hq", "u a tq", "u (ht)q", "a (ht)q"),
    ("u a (ht)q",),
)

# -- literal term lists, n = 5 -----------------------------------------------

_EXPLICIT_5: tuple[tuple[str, ...], ...] = (
    ("u", "a", "h", "t", "hq", "tq", "uq", "aq"),
    (
        "u a", "u h", "u t", "u hq", "u tq", "u uq", "u aq",
        "h t", "a t", "a h", "a tq", "a hq", "h hq", "a uq",
        "(ht)q", "(hu)q", "(ha)q",
        "t aq", "t uq", "t tq", "h tq",
        "(ua)q", "(ta)q", "(tu)q",
        "h uq", "h aq", "a aq", "t hq",
    ),
    (
        "u a h", "u a t", "u h t", "a h t",
        "u a hq", "u a tq", "u a uq",
        "u h hq", "u h tq", "u h uq", "u h aq",
        "u t hq",
        "a h hq", "a h tq",
        "h t hq", "h t tq", "h t uq", "h t aq",
        "u t tq", "u t uq", "u t aq",
        "a h uq", "a h aq",
        "a t hq", "a t tq", "a t uq", "a t aq",
        "u a aq",
        "h (hu)q",
        "u (ht)q", "u (hu)q", "u (ha)q", "u (tu)q", "u (ta)q", "u (ua)q",
        "a (ht)q", "a (hu)q", "a (ha)q", "a (tu)q", "a (ta)q", "a (ua)q",
        "h (ht)q", "h (ha)q", "h (tu)q", "h (ta)q", "h (ua)q",
        "t (ht)q", "t (hu)q", "t (ha)q", "t (tu)q", "t (ta)q", "t (ua)q",
        "(htu)q", "(hta)q", "(hua)q", "(tua)q",
    ),
    (
        "u a h t",
        "u a h hq", "u a h tq", "u a h uq", "u a h aq",
        "u a t hq", "u a t tq", "u a t uq", "u a t aq",
        "u h t hq", "u h t tq", "u h t uq",
        "a h t tq", "a h t uq", "a h t aq",
        "u h t aq",
        "a h (ht)q", "a h (hu)q",
        "u a (tu)q", "u a (ta)q", "u a (ua)q", "u a (ht)q", "u a (hu)q",
        "u a (ha)q",
        "u h (ht)q", "u h (hu)q", "u h (ha)q", "u h (tu)q", "u h (ta)q",
        "a h (ha)q",
        "u h (ua)q",
        "u t (ht)q", "u t (hu)q", "u t (ha)q", "u t (tu)q", "u t (ta)q",
        "u t (ua)q",
        "u (htu)q", "u (hta)q", "u (hua)q", "u (tua)q",
        "a h t hq",
        "a h (tu)q", "a h (ta)q", "a h (ua)q",
        "a t (ht)q", "a t (hu)q", "a t (ha)q", "a t (tu)q", "a t (ta)q",
        "a t (ua)q",
        "a (htu)q", "a (hta)q", "a (hua)q", "a (tua)q",
        "h t (ht)q", "h t (hu)q", "h t (ha)q", "h t (tu)q", "h t (ta)q",
        "h t (ua)q",
        "h (htu)q", "h (hta)q", "h (hua)q", "h (tua)q",
        "t (htu)q", "t (hta)q", "t (hua)q", "t (tua)q",
        "(htua)q",
    ),
    (
        "u a h t hq", "u a h t tq", "u a h t uq", "u a h t aq",
        "u a h (ht)q", "u a h (hu)q", "u a h (ha)q", "u a h (tu)q",
        "u a h (ta)q", "u a h (ua)q",
        "u a t (ht)q", "u a t (hu)q", "u a t (ha)q", "u a t (tu)q",
        "u a t (ta)q", "u a t (ua)q",
        "u a (htu)q", "u a (hta)q", "u a (hua)q", "u a (tua)q",
        "u h t (ht)q", "u h t (hu)q", "u h t (ha)q", "u h t (tu)q",
        "u h t (ta)q", "u h t (ua)q",
        "u h (htu)q", "u h (hta)q", "u h (hua)q", "u h (tua)q",
        "u t (htu)q", "u t (hta)q", "u t (hua)q", "u t (tua)q",
        "u (htua)q",
        "a h t (ht)q", "a h t (hu)q", "a h t (ha)q", "a h t (tu)q",
        "a h t (ta)q", "a h t (ua)q",
        "a h (htu)q", "a h (hta)q", "a h (hua)q", "a h (tua)q",
        "a t (htu)q", "a t (hta)q", "a t (hua)q", "a t (tua)q",
        "a (htua)q",
        "h t (htu)q", "h t (hta)q", "h t (hua)q", "h t (tua)q",
        "h (htua)q",
        "t (htua)q",
    ),
    (
        "u a h t (ht)q", "u a h t (hu)q", "u a h t (ha)q", "u a h t (tu)q",
        "u a h t (ta)q", "u a h t (ua)q",
        "u a h (htu)q", "u a h (hta)q", "u a h (hua)q", "u a h (tua)q",
        "u a t (htu)q", "u a t (hta)q", "u a t (hua)q", "u a t (tua)q",
        "u a (htua)q",
        "u h t (htu)q", "u h t (hta)q", "u h t (hua)q", "u h t (tua)q",
        "u h (htua)q",
        "u t (htua)q",
        "a h t (htu)q", "a h t (hta)q", "a h t (hua)q", "a h t (tua)q",
        "a h (htua)q",
        "a t (htua)q",
        "h t (htua)q",
    ),
    (
        "u a h t (htu)q", "u a h t (hta)q", "u a h t (hua)q", "u a h t (tua)q",
        "u a h (htua)q", "u a t (htua)q", "u h t (htua)q", "a h t (htua)q",
    ),
    ("u a h t (htua)q",),
)

_EXPLICIT_TABLES = {4: _EXPLICIT_4, 5: _EXPLICIT_5}


def _atom_value(code: str, base: dict[str, Multivector]) -> Multivector:
    val = base.get(code)
    if val is not None:
        return val
    if code.startswith("("):
        letters = code[1:-2]  # strip "(" and ")q"
        prod = base[letters[0]]
        for letter in letters[1:]:
            prod = prod * base[letter]
        val = prod.quad()
    elif code.endswith("q"):
        val = base[code[0]].quad()
    else:
        raise KeyError(code)
    base[code] = val
    return val


def _eval_term_list(
    u: Multivector, terms: tuple[str, ...], base: dict, cache: dict
) -> Multivector:
    total = Multivector.zero(u.sig)
    for term in terms:
        atoms = tuple(term.split())
        prefix = ()
        val = None
        for atom in atoms:
            prefix = prefix + (atom,)
            cached = cache.get(prefix)
            if cached is None:
                av = _atom_value(atom, base)
                cached = av if val is None else val * av
                cache[prefix] = cached
            val = cached
        total = total + val
    return total


def explicit_coefficient_multivectors(u: Multivector) -> list[Multivector]:
    """C_(1) .. C_(N) of the term-list route, kept as full multivectors."""
    n = u.sig.n
    table = _EXPLICIT_TABLES.get(n)
    if table is None:
        raise UnsupportedDimensionError(f"explicit term lists exist for n in (4, 5), got n={n}")
    base = {"u": u, "h": u.involute(), "t": u.reverse(), "a": u.conj()}
    cache: dict = {}
    out = []
    for k, terms in enumerate(table, start=1):
        acc = _eval_term_list(u, terms, base, cache)
        out.append(-acc if k % 2 == 0 else acc)
    return out


def charpoly_explicit(u: Multivector) -> CharPoly:
    """Literal transcribed term lists for n = 4 and n = 5."""
    coeffs = []
    for k, mv in enumerate(explicit_coefficient_multivectors(u), start=1):
        if not mv.is_scalar():
            raise AssertionError(f"explicit C_({k}) has a non-scalar part")
        coeffs.append(_normalize(Fraction(mv.scalar_part())))
    return CharPoly(u.sig, tuple(coeffs))


# -- special cases -----------------------------------------------------------


def charpoly_scalar(u: Rational, sig: Signature) -> CharPoly:
    """C_(i) = (-1)^(i+1) binom(N,i) u^i for a pure scalar element u*e."""
    N = sig.N
    coeffs = tuple(
        _normalize((-1) ** (i + 1) * comb(N, i) * Fraction(u) ** i)
        for i in range(1, N + 1)
    )
    return CharPoly(sig, coeffs)


def charpoly_involutory(u: Multivector) -> CharPoly:
    """Coefficients of elements with zero scalar part and scalar square.

    Requires <U>_0 = 0 and U^2 a pure scalar; then odd coefficients vanish
    and C_(2s) = (-1)^(s-1) binom(N/2, s) (U^2)^s.
    """
    if u.scalar_part() != 0:
        raise NotInvolutoryError("element has a nonzero scalar part")
    square = u * u
    if not square.is_scalar():
        raise NotInvolutoryError("element's square has a non-scalar part")
    u2 = Fraction(square.scalar_part())
    N = u.sig.N
    coeffs: list[Rational] = []
    for k in range(1, N + 1):
        if k % 2 == 1:
            coeffs.append(0)
        else:
            s = k // 2
            coeffs.append(_normalize((-1) ** (s - 1) * comb(N // 2, s) * u2**s))
    return CharPoly(u.sig, tuple(coeffs))


def is_rotor(u: Multivector) -> bool:
    """Even, reverse-unitary, and grade-1-preserving under sandwiching."""
    sig = u.sig
    if u.involute() != u:
        return False
    rev = u.reverse()
    if rev * u != Multivector.identity(sig):
        return False
    for a in range(1, sig.n + 1):
        sandwich = u * Multivector.basis_vector(sig, a) * rev
        if sandwich.grade_project(1) != sandwich:
            return False
    return True


def _rotor_coeffs(u: Multivector) -> list[Multivector]:
    """Theorem-form coefficient expressions for rotors, n = 1..5."""
    sig = u.sig
    n = sig.n
    e = Multivector.identity(sig)
    t = u.reverse()
    if n == 1:
        return [2 * u, -e]
    if n == 2:
        return [u + t, -e]
    if n == 3:
        c13 = 2 * (u + t)
        c2 = -(4 * e + u * u + t * t)
        return [c13, c2, c13, -e]
    uq = u.quad()
    tq = t.quad()
    if n == 4:
        c13 = u + t + uq + tq
        c2 = -(2 * e + u * uq + u * tq + t * uq + t * tq)
        return [c13, c2, c13, -e]
    if n == 5:
        u2 = u * u
        t2 = t * t
        u2q = u2.quad()
        t2q = t2.quad()
        mixed = u * uq + u * tq + t * uq + t * tq
        c17 = 2 * (u + t + uq + tq)
        c26 = -(8 * e + u2 + t2 + u2q + t2q + 4 * mixed)
        c35 = 10 * (u + t + uq + tq) + 2 * (
            u2 * uq + u2 * tq + t2 * uq + t2 * tq
            + u * u2q + u * t2q + t * u2q + t * t2q
        )
        c4 = -(
            18 * e
            + 8 * mixed
            + 4 * (u2q + t2q + u2 + t2)
            + u2 * u2q + u2 * t2q + t2 * u2q + t2 * t2q
        )
        return [c17, c26, c35, c4, c35, c26, c17, -e]
    raise UnsupportedDimensionError(f"rotor formulas exist for n <= 5, got n={n}")


def charpoly_rotor(u: Multivector) -> CharPoly:
    """Simplified coefficient formulas valid on the rotor group, n <= 5."""
    if u.sig.n > 5:
        raise UnsupportedDimensionError(f"rotor formulas exist for n <= 5, got n={u.sig.n}")
    if not is_rotor(u):
        raise NotRotorError(f"element of {u.sig} is not a rotor")
    coeffs = []
    for k, mv in enumerate(_rotor_coeffs(u), start=1):
        if not mv.is_scalar():
            raise AssertionError(f"rotor C_({k}) has a non-scalar part")
        coeffs.append(_normalize(Fraction(mv.scalar_part())))
    return CharPoly(u.sig, tuple(coeffs))


def _random_unit_vector(sig: Signature, rng: random.Random) -> Multivector:
    """Grade-1 element with rational coordinates and square exactly +1 or -1."""
    n, p = sig.n, sig.p
    while True:
        w = [rng.randint(-4, 4) for _ in range(n)]
        s = sum(w[i] * w[i] for i in range(p)) - sum(w[i] * w[i] for i in range(p, n))
        if s == 0:
            continue
        r = isqrt(abs(s))
        if r * r != abs(s):
            continue
        coeffs = [0] * sig.dim
        for i, wi in enumerate(w):
            coeffs[1 << i] = _normalize(Fraction(wi, r))
        return Multivector(sig, coeffs)


def random_rotor(sig: Signature, seed: int, pairs: int | None = None) -> Multivector:
    """Product of 2*pairs rational unit vectors with square-product +1."""
    rng = random.Random(seed)
    if pairs is None:
        pairs = rng.randint(1, 2)
    if pairs == 0:
        return Multivector.identity(sig)
    if sig.n < 2:
        raise ValueError("random rotors need n >= 2")
    while True:
        vectors = [_random_unit_vector(sig, rng) for _ in range(2 * pairs)]
        square_product = 1
        for v in vectors:
            square_product *= (v * v).scalar_part()
        if square_product == 1:
            break
    rotor = vectors[0]
    for v in vectors[1:]:
        rotor = rotor * v
    return rotor
