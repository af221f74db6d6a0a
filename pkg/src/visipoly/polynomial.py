"""Dense polynomials with exact non-negative integer coefficients."""

from __future__ import annotations

import json
from itertools import zip_longest
from math import comb
from typing import Iterable, Sequence


class Polynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of ``x**k``.

    Canonical form drops trailing zeros, the zero polynomial is ``(0,)``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = (0,)):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        if any(c < 0 for c in cs):
            raise ValueError(f"negative coefficient in {cs}")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.coeffs,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return poly_mul(self, other)

    def __call__(self, t: int) -> int:
        return poly_eval_int(self, t)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        return self.to_human()

    def to_human(self) -> str:
        """``1 + 8x + 28x^2 + ...``"""
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def to_latex(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{{{k}}}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json_obj(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "Polynomial":
        return cls(int(c) for c in obj["coeffs"])

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_json_obj(json.loads(text))


ZERO = Polynomial([0])
ONE = Polynomial([1])


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return Polynomial(x + y for x, y in zip_longest(a.coeffs, b.coeffs, fillvalue=0))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return Polynomial(out)


def binomial_expand(k: int) -> Polynomial:
    """Coefficients of ``(1+x)**k``."""
    if k < 0:
        raise ValueError("binomial_expand needs k >= 0")
    return Polynomial(comb(k, i) for i in range(k + 1))


def poly_eval_int(p: Polynomial, t: int) -> int:
    if t < 0:
        raise ValueError("evaluation point must be non-negative")
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_sum(polys: Iterable[Polynomial]) -> Polynomial:
    acc = [0]
    for p in polys:
        if len(p.coeffs) > len(acc):
            acc.extend([0] * (len(p.coeffs) - len(acc)))
        for k, c in enumerate(p.coeffs):
            acc[k] += c
    return Polynomial(acc)


def from_counts(counts: Sequence[int]) -> Polynomial:
    return Polynomial(counts)
