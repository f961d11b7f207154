"""q-numbers at q = exp(i pi / ell), q-factorials and Lie superfactorials.

q-numbers are evaluated as real sines, [x]_q = sin(x pi / ell) / sin(pi / ell),
with mpmath at a configurable number of significand bits.  In classical mode
(q = 1) everything stays an exact Fraction.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import prod

import mpmath
from mpmath import mp

from .lie import LieType, exponents_of

DEFAULT_PRECISION = 128


def default_precision() -> int:
    return int(os.environ.get("FUSIONCAT_PREC", DEFAULT_PRECISION))


@dataclass(frozen=True)
class QContext:
    ell: int = 0
    precision: int = 0
    classical: bool = False

    def __post_init__(self):
        if self.precision == 0:
            object.__setattr__(self, "precision", default_precision())
        if not self.classical and self.ell < 1:
            raise ValueError("quantum context needs ell >= 1")

    @classmethod
    def at_level(cls, dual_coxeter: int, k: int, precision: int = 0) -> "QContext":
        if k < 1:
            raise ValueError("level must be a positive integer")
        return cls(ell=k + dual_coxeter, precision=precision)

    @classmethod
    def classical_mode(cls, precision: int = 0) -> "QContext":
        return cls(ell=0, precision=precision, classical=True)

    def tolerance(self):
        return mpmath.mpf(2) ** -(self.precision - 16)


def qnumber(x, ctx: QContext):
    x = Fraction(x)
    if ctx.classical:
        return x
    if x == 0:
        return mpmath.mpf(0)
    with mp.workprec(ctx.precision):
        a = mp.pi / ctx.ell
        return mp.sin(mpmath.mpf(x.numerator) / x.denominator * a) / mp.sin(a)


def qproduct(args, ctx: QContext):
    """Product of q-numbers over an explicit argument list (empty product = 1)."""
    if ctx.classical:
        return prod((Fraction(a) for a in args), start=Fraction(1))
    with mp.workprec(ctx.precision):
        out = mpmath.mpf(1)
        for a in args:
            out *= qnumber(a, ctx)
        return out


def qfactorial(s, ctx: QContext):
    """[s]!_q for an integer s, or the product over an explicit argument list."""
    if isinstance(s, int):
        if s < 0:
            raise ValueError("q-factorial of a negative integer")
        return qproduct(range(1, s + 1), ctx)
    return qproduct(s, ctx)


def tilde_factorial_B(s: int) -> list:
    """[s/2][s-1][s-2]...[1]; for s = 1 this is just [1/2]."""
    return [Fraction(s, 2)] + list(range(s - 1, 0, -1))


def tilde_factorial_C(s: int) -> list:
    """s/2, (s-1)/2, ..., 1/2 with the middle term (s+1)/2 left unhalved."""
    mid = (s + 1) // 2
    return [Fraction(j) if j == mid else Fraction(j, 2) for j in range(s, 0, -1)]


_F4 = (
    [Fraction(1, 2)] * 2 + [1] * 3 + [Fraction(3, 2)] + [2] * 3 + [Fraction(5, 2)] * 2
    + [3] * 3 + [Fraction(7, 2)] + [4] * 2 + [Fraction(9, 2)] + [5] * 2
    + [Fraction(11, 2)] + [6, 7, 8]
)
_G2 = [Fraction(5, 3), Fraction(4, 3), 3, 2, 1, Fraction(1, 3)]


def superfactorial_arguments(t: LieType) -> list:
    """The multiset of q-number arguments whose product is sfac_G[q]."""
    exps = exponents_of(t)
    if t.simply_laced:
        return [n for s in exps for n in range(1, s + 1)]
    if t.family == "B":
        return [a for s in exps for a in tilde_factorial_B(s)]
    if t.family == "C":
        return [a for s in exps for a in tilde_factorial_C(s)]
    if t.family == "F4":
        return list(_F4)
    return list(_G2)


def superfactorial(t: LieType, ctx: QContext):
    return qproduct(superfactorial_arguments(t), ctx)
