"""Exact polynomials with big-integer (or ``Fraction``) coefficients.

``UniPoly`` is dense in one variable; ``BiPoly`` is sparse in two.  Both
are immutable and hashable, compare equal iff their canonical forms agree,
and serialize to JSON with coefficients as decimal strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Any, Iterable, Mapping

from parkfn.errors import ConsistencyError, InvalidInputError

Coeff = int | Fraction


def _norm(c: Any) -> Coeff:
    if isinstance(c, bool):
        raise InvalidInputError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise InvalidInputError(f"coefficient {c!r} is not an exact rational")


def _coeff_str(c: Coeff) -> str:
    return str(c)


def _parse_coeff(s: Any) -> Coeff:
    if isinstance(s, int) and not isinstance(s, bool):
        return s
    if isinstance(s, str):
        try:
            return _norm(Fraction(s))
        except (ValueError, ZeroDivisionError):
            pass
    raise InvalidInputError(f"bad coefficient {s!r}")


def _term_str(c: Coeff, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    if isinstance(c, Fraction):
        return f"({c}){mono}"
    return f"{c}{mono}"


def _join(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


class UniPoly:
    """Dense univariate polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Any] = (), var: str = "q"):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Coeff, ...] = tuple(cs)
        self.var = var

    @classmethod
    def const(cls, c: Any, var: str = "q") -> UniPoly:
        return cls([c], var)

    @classmethod
    def monomial(cls, c: Any, deg: int, var: str = "q") -> UniPoly:
        if deg < 0:
            raise InvalidInputError(f"negative degree {deg}")
        return cls([0] * deg + [c], var)

    @classmethod
    def x(cls, var: str = "q") -> UniPoly:
        return cls([0, 1], var)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> Coeff:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def _lift(self, other: Any) -> UniPoly | None:
        if isinstance(other, UniPoly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise InvalidInputError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        try:
            return UniPoly([other], self.var)
        except InvalidInputError:
            return None

    def __add__(self, other: Any) -> UniPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly((self[i] + o[i] for i in range(n)), self.var)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly((-c for c in self.coeffs), self.var)

    def __sub__(self, other: Any) -> UniPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> UniPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> UniPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly((), self.var)
        out: list[Coeff] = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UniPoly:
        if not isinstance(e, int) or e < 0:
            raise InvalidInputError(f"exponent must be a nonnegative int, got {e!r}")
        result = UniPoly([1], self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        o = self._lift(other)
        return o is not None and self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __call__(self, x: Any) -> Any:
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> UniPoly:
        return UniPoly((i * c for i, c in enumerate(self.coeffs) if i), self.var)

    def coeff_sum(self) -> Coeff:
        return sum(self.coeffs, 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def to_integral(self) -> UniPoly:
        """Same polynomial with int coefficients; raises if any coefficient is fractional."""
        if not self.is_integral():
            bad = [c for c in self.coeffs if not isinstance(c, int)]
            raise ConsistencyError(f"non-integer coefficients {bad[:3]}")
        return self

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mono = "" if d == 0 else self.var if d == 1 else f"{self.var}^{d}"
            terms.append(_term_str(c, mono))
        return _join(terms)

    def to_dict(self) -> dict:
        return {"var": self.var, "coeffs": [_coeff_str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, d: Mapping) -> UniPoly:
        try:
            return cls([_parse_coeff(c) for c in d["coeffs"]], d.get("var", "q"))
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"bad polynomial object: {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, s: str) -> UniPoly:
        return cls.from_dict(json.loads(s))


class BiPoly:
    """Sparse polynomial in two variables (default ``q`` and ``t``)."""

    __slots__ = ("terms", "vars")

    def __init__(self, terms: Mapping[tuple[int, int], Any] | None = None, vars: tuple[str, str] = ("q", "t")):
        clean: dict[tuple[int, int], Coeff] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise InvalidInputError(f"negative exponent in {(a, b)}")
            c = _norm(c)
            if c:
                clean[(a, b)] = c
        self.terms = dict(sorted(clean.items()))
        self.vars = tuple(vars)

    @classmethod
    def const(cls, c: Any) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def q(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> BiPoly:
        return cls({(0, 1): 1})

    def _lift(self, other: Any) -> BiPoly | None:
        if isinstance(other, BiPoly):
            return other
        try:
            return BiPoly({(0, 0): other}, self.vars)
        except InvalidInputError:
            return None

    def __add__(self, other: Any) -> BiPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -c for k, c in self.terms.items()}, self.vars)

    def __sub__(self, other: Any) -> BiPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other: Any) -> BiPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], Coeff] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in o.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiPoly:
        if not isinstance(e, int) or e < 0:
            raise InvalidInputError(f"exponent must be a nonnegative int, got {e!r}")
        result = BiPoly.const(1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other: Any) -> bool:
        o = self._lift(other)
        return o is not None and self.terms == o.terms

    def __hash__(self) -> int:
        return hash(("BiPoly", tuple(self.terms.items())))

    def coeff(self, a: int, b: int) -> Coeff:
        return self.terms.get((a, b), 0)

    def coeff_sum(self) -> Coeff:
        return sum(self.terms.values(), 0)

    def subs_t(self, value: Any) -> UniPoly:
        """Substitute a number for the second variable, leaving a polynomial in the first."""
        out: dict[int, Any] = {}
        for (a, b), c in self.terms.items():
            out[a] = out.get(a, 0) + c * value**b
        deg = max(out, default=-1)
        return UniPoly([out.get(i, 0) for i in range(deg + 1)], self.vars[0])

    def subs_q(self, value: Any) -> UniPoly:
        out: dict[int, Any] = {}
        for (a, b), c in self.terms.items():
            out[b] = out.get(b, 0) + c * value**a
        deg = max(out, default=-1)
        return UniPoly([out.get(i, 0) for i in range(deg + 1)], self.vars[1])

    def __repr__(self) -> str:
        return f"BiPoly({self.terms!r})"

    def __str__(self) -> str:
        q, t = self.vars
        terms = []
        for (a, b), c in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            parts = []
            if a:
                parts.append(q if a == 1 else f"{q}^{a}")
            if b:
                parts.append(t if b == 1 else f"{t}^{b}")
            terms.append(_term_str(c, "*".join(parts)))
        return _join(terms)

    def to_dict(self) -> dict:
        q, t = self.vars
        return {"terms": [{q: a, t: b, "c": _coeff_str(c)} for (a, b), c in self.terms.items()]}

    @classmethod
    def from_dict(cls, d: Mapping, vars: tuple[str, str] = ("q", "t")) -> BiPoly:
        q, t = vars
        try:
            return cls({(int(e[q]), int(e[t])): _parse_coeff(e["c"]) for e in d["terms"]}, vars)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"bad bivariate polynomial object: {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, s: str) -> BiPoly:
        return cls.from_dict(json.loads(s))


def fraction_str(x: Fraction | int) -> str:
    """``"num/den"`` (always with a denominator) for JSON and CLI output."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
