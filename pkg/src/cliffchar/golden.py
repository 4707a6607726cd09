"""Fixed verification cases with published coefficient values.

Each case pins either the full coefficient list or a subset of coefficients
for a concrete element, plus (optionally) the fact that the scalar-square
shortcut must refuse the element.  These run inside ``verify`` and in the
acceptance suite.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .core import Signature, all_signatures


@dataclass(frozen=True)
class GoldenCase:
    name: str
    signature: tuple[int, int]
    expr: str
    expect_C: tuple[int, ...] | None = None
    expect_partial: dict[int, int] = field(default_factory=dict)
    reject_involutory: bool = False


def golden_cases(max_n: int = 6) -> list[GoldenCase]:
    cases = [
        GoldenCase(
            name="cl50_square_root_of_one",
            signature=(5, 0),
            expr="e1 + e5 + e15",
            expect_C=(0, 4, 0, -6, 0, 4, 0, -1),
        ),
        GoldenCase(
            name="cl50_nonscalar_square",
            signature=(5, 0),
            expr="e1 + e2 + e45",
            expect_partial={1: 0, 2: 4, 3: 0, 5: 0, 7: 0},
            reject_involutory=True,
        ),
        GoldenCase(
            name="cl50_odd_vanishing_boundary",
            signature=(5, 0),
            expr="e3 + e12 + e15 + e45 + e234",
            expect_partial={1: 0, 3: 0, 5: -64},
        ),
    ]
    for sig in all_signatures(max_n):
        N = sig.N
        for u in (0, 1, 2, -3):
            expect = tuple((-1) ** (i + 1) * comb(N, i) * u**i for i in range(1, N + 1))
            cases.append(
                GoldenCase(
                    name=f"scalar_u{u}_p{sig.p}q{sig.q}",
                    signature=(sig.p, sig.q),
                    expr=str(u),
                    expect_C=expect,
                )
            )
    return cases
