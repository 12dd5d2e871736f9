"""Exact scalars: rationals, prime fields, and k[t] / k(t) over either.

Elements use ordinary Python operators. Rationals are plain
:class:`fractions.Fraction` values; everything else is one of the small
immutable classes below. Canonical forms are maintained by every
operation, so structural equality is mathematical equality.
"""
from __future__ import annotations

import math
import random as _random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence


class NotAFieldError(ValueError):
    """Raised when a field-only operation is applied over k[t]."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, math.isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


class Mod:
    """Residue class modulo a prime ``p``; the value lives in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other):
        if type(other) is Mod:
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def inverse(self) -> "Mod":
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError("division by 0 in F_%d" % self.p)
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(o, self.p) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if type(other) is Mod:
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Poly:
    """Polynomial in one variable over a base field (coefficients low to high).

    The zero polynomial has an empty coefficient tuple. Leading
    coefficients are never zero.
    """

    __slots__ = ("coeffs", "base")

    def __init__(self, coeffs: Sequence[Any], base: "FieldSpec"):
        cs = [base.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.base = base

    @classmethod
    def _raw(cls, coeffs, base):
        # coeffs already coerced; only trims
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(cs)
        obj.base = base
        return obj

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.base.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        inv = self.base.one / self.coeffs[-1]
        return Poly._raw([c * inv for c in self.coeffs], self.base)

    def _lift(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            if other.base != self.base:
                raise ValueError("polynomials over different base fields")
            return other
        try:
            return Poly._raw([self.base.coerce(other)], self.base)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(out, self.base)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs], self.base)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._raw((), self.base)
        zero = self.base.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._raw(out, self.base)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly._raw([self.base.one], self.base)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly._raw((), self.base), self
        inv_lead = self.base.one / o.coeffs[-1]
        quot = [self.base.zero] * (dq + 1)
        od = len(o.coeffs) - 1
        for k in range(dq, -1, -1):
            c = rem[k + od] * inv_lead
            quot[k] = c
            if c:
                for j, y in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * y
        return Poly._raw(quot, self.base), Poly._raw(rem[:od], self.base)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return RatFunc(self, other)
        c = self.base.coerce(other)
        return self * (self.base.one / c)

    def __rtruediv__(self, other):
        return RatFunc(self._lift(other), self)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar or anything closed under + and *."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return self.base.zero if acc is None else acc

    def derivative(self) -> "Poly":
        return Poly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.base)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.base == other.base and self.coeffs == other.coeffs
        if isinstance(other, RatFunc):
            return other == self
        if isinstance(other, (int, Fraction, Mod)):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0]) if self.coeffs else hash(0)
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            s = self.base.format(c)
            if i > 0 and c == 1:
                s = ""
            elif i > 0 and self.base.kind == "Q" and c == -1:
                s = "-"
            if i == 0:
                terms.append(s)
            elif not s or s == "-":
                terms.append(f"{s}{var}" if i == 1 else f"{s}{var}^{i}")
            elif i == 1:
                terms.append(f"{s}*{var}")
            else:
                terms.append(f"{s}*{var}^{i}")
        return "+".join(terms)

    def __repr__(self):
        return f"Poly({self.format()!r})"

    __str__ = format


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return ``(g, s, r)`` with ``s*a + r*b = g`` and ``g`` monic."""
    base = a.base
    zero, one = Poly._raw((), base), Poly._raw([base.one], base)
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = base.one / r0.lead
    return r0 * inv, s0 * inv, t0 * inv


class RatFunc:
    """Reduced fraction ``num/den`` of polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num = num
            self.den = Poly._raw([num.base.one], num.base)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.lead
        if lead != 1:
            inv = num.base.one / lead
            num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @property
    def base(self):
        return self.num.base

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc._from_poly(other)
        try:
            c = self.base.coerce(other)
        except (TypeError, ValueError):
            return None
        return RatFunc._from_poly(Poly._raw([c], self.base))

    @staticmethod
    def _from_poly(p: Poly) -> "RatFunc":
        obj = RatFunc.__new__(RatFunc)
        obj.num = p
        obj.den = Poly._raw([p.base.one], p.base)
        return obj

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        obj = RatFunc.__new__(RatFunc)
        obj.num, obj.den = -self.num, self.den
        return obj

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RatFunc._from_poly(Poly._raw((), self.base))
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self.den.degree == 0 and self.num == other
        if isinstance(other, (int, Fraction, Mod)):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den.degree == 0:
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def format(self, var: str = "t") -> str:
        if self.den.degree == 0:
            return self.num.format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"

    def __repr__(self):
        return f"RatFunc({self.format()!r})"

    __str__ = format


_KINDS = ("Q", "Fp", "poly", "ratfunc")


@dataclass(frozen=True)
class FieldSpec:
    """One of ℚ, F_p, k[t] or k(t) with k ∈ {ℚ, F_p}.

    ``k[t]`` is carried here as well because families are written over
    it, but it is not a field; :attr:`is_field` tells them apart.
    """

    kind: str
    p: int = 0
    base: Optional["FieldSpec"] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp" and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.kind in ("poly", "ratfunc"):
            if self.base is None or self.base.kind not in ("Q", "Fp"):
                raise ValueError("k[t] and k(t) need a base of kind Q or Fp")

    # constructors -------------------------------------------------------
    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("Fp", p)

    @classmethod
    def polynomials(cls, base: "FieldSpec") -> "FieldSpec":
        return cls("poly", 0, base)

    @classmethod
    def rational_functions(cls, base: "FieldSpec") -> "FieldSpec":
        return cls("ratfunc", 0, base)

    # properties ---------------------------------------------------------
    @property
    def is_field(self) -> bool:
        return self.kind != "poly"

    @property
    def is_finite(self) -> bool:
        return self.kind == "Fp"

    @property
    def characteristic(self) -> int:
        if self.kind == "Fp":
            return self.p
        if self.kind == "Q":
            return 0
        return self.base.characteristic

    @property
    def ground(self) -> "FieldSpec":
        """The prime-or-rational field underneath (self for Q / F_p)."""
        return self if self.kind in ("Q", "Fp") else self.base

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    @property
    def t(self):
        if self.kind == "poly":
            return Poly._raw([self.base.zero, self.base.one], self.base)
        if self.kind == "ratfunc":
            return RatFunc._from_poly(Poly._raw([self.base.zero, self.base.one], self.base))
        raise ValueError("only k[t] and k(t) have a variable")

    # element handling ---------------------------------------------------
    def coerce(self, x):
        k = self.kind
        if k == "Fp":
            if type(x) is Mod:
                if x.p != self.p:
                    raise ValueError(f"F_{x.p} element in F_{self.p}")
                return x
            if isinstance(x, int):
                return Mod(x, self.p)
            if isinstance(x, Fraction):
                return Mod(x.numerator, self.p) / x.denominator
            raise TypeError(f"cannot coerce {x!r} into F_{self.p}")
        if k == "Q":
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if k == "poly":
            if isinstance(x, Poly):
                if x.base != self.base:
                    raise ValueError("polynomial over a different base field")
                return x
            if isinstance(x, RatFunc):
                if x.den.degree != 0:
                    raise ValueError(f"{x} is not a polynomial")
                return x.num
            return Poly._raw([self.base.coerce(x)], self.base)
        # ratfunc
        if isinstance(x, RatFunc):
            if x.base != self.base:
                raise ValueError("rational function over a different base field")
            return x
        if isinstance(x, Poly):
            if x.base != self.base:
                raise ValueError("polynomial over a different base field")
            return RatFunc._from_poly(x)
        return RatFunc._from_poly(Poly._raw([self.base.coerce(x)], self.base))

    def poly(self, coeffs: Sequence[Any]) -> Poly:
        """Polynomial with coefficients in the ground field."""
        return Poly(coeffs, self.ground)

    def random(self, rng: _random.Random, bound: int = 10):
        """Uniform over F_p; small integers over Q; low-degree polynomials otherwise."""
        if self.kind == "Fp":
            return Mod(rng.randrange(self.p), self.p)
        if self.kind == "Q":
            return Fraction(rng.randint(-bound, bound))
        coeffs = [self.base.random(rng, bound) for _ in range(bound)]
        return self.coerce(Poly._raw(coeffs, self.base))

    def format(self, x) -> str:
        x = self.coerce(x)
        if self.kind == "Q":
            return f"{x.numerator}/{x.denominator}"
        if self.kind == "Fp":
            return str(x.v)
        return x.format()

    def parse(self, s) -> Any:
        if isinstance(s, int):
            return self.coerce(s)
        s = str(s).replace(" ", "")
        if self.kind == "Q":
            return Fraction(s)
        if self.kind == "Fp":
            if "/" in s:
                a, b = s.split("/")
                return Mod(int(a), self.p) / int(b)
            return Mod(int(s), self.p)
        if self.kind == "poly":
            return _parse_poly(s, self.base)
        m = re.fullmatch(r"\((.*)\)/\((.*)\)", s)
        if m:
            return RatFunc(_parse_poly(m.group(1), self.base), _parse_poly(m.group(2), self.base))
        return self.coerce(_parse_poly(s, self.base))

    # serialization ------------------------------------------------------
    def to_json(self) -> dict:
        if self.kind == "Q":
            return {"kind": "Q"}
        if self.kind == "Fp":
            return {"kind": "Fp", "p": self.p}
        return {"kind": self.kind, "base": self.base.to_json()}

    @classmethod
    def from_json(cls, d) -> "FieldSpec":
        if isinstance(d, str):
            return cls.from_flag(d)
        kind = d["kind"]
        if kind == "Q":
            return cls.rationals()
        if kind == "Fp":
            return cls.prime(int(d["p"]))
        return cls(kind, 0, cls.from_json(d["base"]))

    @classmethod
    def from_flag(cls, s: str) -> "FieldSpec":
        """Parse the command-line spelling ``q`` or ``p=<prime>``."""
        s = s.strip().lower()
        if s in ("q", "qq", "rationals"):
            return cls.rationals()
        m = re.fullmatch(r"(?:p=|f_?)(\d+)", s)
        if not m:
            raise ValueError(f"bad field flag {s!r}; expected 'q' or 'p=<prime>'")
        return cls.prime(int(m.group(1)))

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F_{self.p}"
        if self.kind == "poly":
            return f"{self.base}[t]"
        return f"{self.base}(t)"


def _parse_poly(s: str, base: FieldSpec) -> Poly:
    if s in ("", "0"):
        return Poly._raw((), base)
    # a '-' following a digit, ')' or 't' starts a new term
    s = re.sub(r"(?<=[0-9t)])-", "+-", s)
    coeffs: dict[int, Any] = {}
    for term in s.split("+"):
        if not term:
            continue
        m = re.fullmatch(r"(-?)([0-9/]*)\*?(t(?:\^(\d+))?)?", term)
        if not m or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse polynomial term {term!r}")
        sign, c, var, exp = m.groups()
        coef = base.parse(c) if c else base.one
        if sign:
            coef = -coef
        deg = 0 if not var else (int(exp) if exp else 1)
        coeffs[deg] = coeffs.get(deg, base.zero) + coef
    top = max(coeffs)
    return Poly([coeffs.get(i, base.zero) for i in range(top + 1)], base)


QQ = FieldSpec.rationals()


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime(p)
