"""Exact affine expressions and predicates over the order ``n`` and size ``m``.

The catalogs of facets and candidate vertices are written with these objects so
that every coefficient, coordinate and condition can be both evaluated exactly
(``fractions.Fraction``) and rendered back to a readable formula for the JSON
dumps.  Only what the tables need is supported: polynomials of degree <= 2 in
``n`` and ``m``, residues ``(expr) mod k`` and floors of rational expressions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


class _Atom:
    """Non-polynomial term (residue or floor) that is linear in the expression."""

    __slots__ = ("inner", "_key")

    def evaluate(self, n: int, m: int) -> Fraction:
        raise NotImplementedError

    def __hash__(self) -> int:
        return hash(self._key)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Atom) and self._key == other._key


class _Mod(_Atom):
    __slots__ = ("modulus",)

    def __init__(self, inner: "Expr", modulus: int):
        self.inner = inner
        self.modulus = modulus
        self._key = ("mod", frozenset(inner.terms.items()), modulus)

    def evaluate(self, n: int, m: int) -> Fraction:
        value = self.inner.evaluate(n, m)
        if value.denominator != 1:
            raise ValueError(f"residue of non-integer {value} in {self.render()}")
        # Python's % already returns the non-negative residue for a positive modulus.
        return Fraction(value.numerator % self.modulus)

    def render(self) -> str:
        inner = self.inner.render()
        if self.inner.is_simple():
            return f"{inner} mod {self.modulus}"
        return f"({inner}) mod {self.modulus}"


class _Floor(_Atom):
    def __init__(self, inner: "Expr"):
        self.inner = inner
        self._key = ("floor", frozenset(inner.terms.items()))

    def evaluate(self, n: int, m: int) -> Fraction:
        return Fraction(math.floor(self.inner.evaluate(n, m)))

    def render(self) -> str:
        return f"floor({self.inner.render()})"


# monomial keys: () constant, ("n",), ("m", "n"), ... sorted var tuples; atoms are _Atom
_VAR_ORDER = {"n": 0, "m": 1}


class Expr:
    """Linear combination of monomials in (n, m) and residue/floor atoms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[object, Number] | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    # construction -------------------------------------------------------
    @staticmethod
    def lift(value: "Expr | Number") -> "Expr":
        if isinstance(value, Expr):
            return value
        return Expr({(): value})

    def __add__(self, other):
        other = Expr.lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Expr(out)

    __radd__ = __add__

    def __neg__(self):
        return Expr({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-Expr.lift(other))

    def __rsub__(self, other):
        return Expr.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, Expr):
            if any(isinstance(k, _Atom) for k in self.terms) and len(other.terms) > 1:
                raise TypeError("cannot multiply residue terms by a non-constant")
            out: dict = {}
            for k1, v1 in self.terms.items():
                for k2, v2 in other.terms.items():
                    if isinstance(k1, _Atom) or isinstance(k2, _Atom):
                        if k1 == () or k2 == ():
                            key = k2 if k1 == () else k1
                        else:
                            raise TypeError("cannot multiply residue terms by a non-constant")
                    else:
                        key = tuple(sorted(k1 + k2))
                    out[key] = out.get(key, 0) + v1 * v2
            return Expr(out)
        return Expr({k: v * other for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, k: Number):
        return Expr({key: v / Fraction(k) for key, v in self.terms.items()})

    def __mod__(self, k: int):
        return Expr({_Mod(self, k): 1})

    # evaluation -----------------------------------------------------------
    def evaluate(self, n: int, m: int) -> Fraction:
        env = {"n": n, "m": m}
        total = Fraction(0)
        for key, coef in self.terms.items():
            if isinstance(key, _Atom):
                total += coef * key.evaluate(n, m)
            else:
                total += coef * reduce(lambda acc, v: acc * env[v], key, 1)
        return total

    def __call__(self, n: int, m: int) -> Fraction:
        return self.evaluate(n, m)

    def is_constant(self) -> bool:
        return all(k == () for k in self.terms)

    def is_simple(self) -> bool:
        """True when the rendering needs no parentheses (a single unscaled symbol)."""
        if len(self.terms) != 1:
            return False
        (key, coef), = self.terms.items()
        return coef == 1 and not isinstance(key, _Atom) and len(key) <= 1

    # comparison builders ----------------------------------------------------
    def le(self, other) -> "Cond":
        return Cmp(self, "<=", Expr.lift(other))

    def ge(self, other) -> "Cond":
        return Cmp(self, ">=", Expr.lift(other))

    def lt(self, other) -> "Cond":
        return Cmp(self, "<", Expr.lift(other))

    def eq(self, other) -> "Cond":
        return Cmp(self, "==", Expr.lift(other))

    def ne(self, other) -> "Cond":
        return Cmp(self, "!=", Expr.lift(other))

    def isin(self, values: Iterable[int]) -> "Cond":
        return In(self, frozenset(values))

    # rendering ---------------------------------------------------------------
    def render(self) -> str:
        if not self.terms:
            return "0"
        den = reduce(math.lcm, (v.denominator for v in self.terms.values()), 1)
        parts = []
        # keep the written order of monomials, then residues, constant last
        for key in sorted(self.terms, key=lambda k: 2 if k == () else isinstance(k, _Atom)):
            coef = self.terms[key] * den
            parts.append((coef, _render_key(key)))
        text = ""
        for i, (coef, sym) in enumerate(parts):
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            if sym == "":
                body = str(mag)
            elif mag == 1:
                body = sym
            else:
                body = f"{mag}{sym}"
            if i == 0:
                text = ("-" if sign == "-" else "") + body
            else:
                text += f" {sign} {body}"
        if len(parts) == 1 and den == 1 and text.startswith("("):
            return text[1:-1]
        if den != 1:
            return f"({text})/{den}" if len(parts) > 1 else f"{text}/{den}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Expr({self.render()!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Expr) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))


def _render_key(key) -> str:
    if isinstance(key, _Floor):
        return key.render()
    if isinstance(key, _Atom):
        return f"({key.render()})"
    if key == ():
        return ""
    out = ""
    for var in sorted(set(key), key=_VAR_ORDER.get):
        power = key.count(var)
        out += var if power == 1 else f"{var}^{power}"
    return out


def floor(expr: Expr) -> Expr:
    return Expr({_Floor(Expr.lift(expr)): 1})


def atoms(expr: Expr) -> dict:
    """Map rendered atom -> coefficient; used to compare closed forms structurally."""
    return {(_render_key(k) if k != () else "1"): v for k, v in expr.terms.items()}


n = Expr({("n",): 1})
m = Expr({("m",): 1})


# -- predicates ------------------------------------------------------------------

class Cond:
    def holds(self, n: int, m: int) -> bool:
        raise NotImplementedError

    def __call__(self, n: int, m: int) -> bool:
        return self.holds(n, m)

    def __and__(self, other: "Cond") -> "Cond":
        return All(self, other)

    def __or__(self, other: "Cond") -> "Cond":
        return Any_(self, other)

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


class _Always(Cond):
    def holds(self, n, m):
        return True

    def render(self):
        return "no condition"


ALWAYS = _Always()

_OPS = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "<": lambda a, b: a < b,
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
}


class Cmp(Cond):
    def __init__(self, lhs: Expr, op: str, rhs: Expr):
        self.lhs, self.op, self.rhs = lhs, op, rhs

    def holds(self, n, m):
        return _OPS[self.op](self.lhs.evaluate(n, m), self.rhs.evaluate(n, m))

    def render(self):
        op = {"==": "=", "!=": "!="}.get(self.op, self.op)
        return f"{self.lhs.render()} {op} {self.rhs.render()}"


class In(Cond):
    def __init__(self, expr: Expr, values: frozenset):
        self.expr, self.values = expr, values

    def holds(self, n, m):
        return self.expr.evaluate(n, m) in self.values

    def render(self):
        vals = ", ".join(str(v) for v in sorted(self.values))
        return f"{self.expr.render()} in {{{vals}}}"


class All(Cond):
    def __init__(self, *parts: Cond):
        flat: list[Cond] = []
        for p in parts:
            flat.extend(p.parts if isinstance(p, All) else [p])
        self.parts = [p for p in flat if p is not ALWAYS]

    def holds(self, n, m):
        return all(p.holds(n, m) for p in self.parts)

    def render(self):
        if not self.parts:
            return ALWAYS.render()
        return " and ".join(_wrap(p) for p in self.parts)


class Any_(Cond):
    def __init__(self, *parts: Cond):
        flat: list[Cond] = []
        for p in parts:
            flat.extend(p.parts if isinstance(p, Any_) else [p])
        self.parts = flat

    def holds(self, n, m):
        return any(p.holds(n, m) for p in self.parts)

    def render(self):
        return " or ".join(_wrap(p) for p in self.parts)


def _wrap(cond: Cond) -> str:
    text = cond.render()
    return f"({text})" if isinstance(cond, (All, Any_)) and len(cond.parts) > 1 else text
