"""Canonical ASCII serialization of exact rationals, e.g. "-28/3"."""

from __future__ import annotations

from fractions import Fraction


def fmt_q(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_q(s: str) -> Fraction:
    return Fraction(s.strip())
