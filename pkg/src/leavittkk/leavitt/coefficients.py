"""Gaussian rational coefficients (sympy's ``QQ_I``) and their display."""

from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ_I

__all__ = ["QQ_I", "ONE", "ZERO", "I", "coeff", "conj", "format_coeff", "is_real_integer"]

ONE = QQ_I(1, 0)
ZERO = QQ_I(0, 0)
I = QQ_I(0, 1)


def coeff(re=0, im=0):
    """Build a coefficient from ints/Fractions, or pass a coefficient through."""
    if isinstance(re, type(ONE)):
        return re
    return QQ_I(Fraction(re), Fraction(im))


def conj(c):
    return QQ_I(c.x, -c.y)


def _rat(q) -> str:
    q = Fraction(int(q.numerator), int(q.denominator))
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_coeff(c) -> str:
    """``3``, ``-1/2``, ``i``, ``-2/3*i``, ``1/2+3*i``."""
    re, im = c.x, c.y
    if im == 0:
        return _rat(re)
    if im == 1:
        imag = "i"
    elif im == -1:
        imag = "-i"
    else:
        imag = f"{_rat(im)}*i"
    if re == 0:
        return imag
    return f"{_rat(re)}{'' if imag.startswith('-') else '+'}{imag}"


def is_real_integer(c) -> bool:
    return c.y == 0 and c.x.denominator == 1
