# --- ybhomology/scalar.py ---
"""Exact scalars: polynomials and reduced rational functions in one variable y.

Coefficients are Python ints whenever they are integral and ``Fraction``
otherwise, so the integer polynomials that dominate the R_m operators never
pay for rational arithmetic. Division, gcd and primitive parts go through
``sympy.Poly`` over QQ.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from sympy import QQ, Poly, Rational, Symbol
from sympy.polys.polyerrors import ExactQuotientFailed

from ybhomology.errors import ParseError, PoleError, ScalarDivisionError

Number = Union[int, Fraction]

Y_SYMBOL = Symbol("y")

# Exponents beyond this are rejected by the parser
MAX_EXPONENT = 4096


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(a: Number, b: Number) -> Number:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


class IntPoly:
    """Immutable polynomial in y; ``coeffs[i]`` is the coefficient of y^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "IntPoly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, c: Number) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: Number, power: int) -> "IntPoly":
        return cls([0] * power + [c])

    # -- queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations
    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return other.scale(a[0])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPoly(out)

    def scale(self, c: Number) -> "IntPoly":
        if c == 0:
            return ZERO_POLY
        if c == 1:
            return self
        return IntPoly._raw(tuple(_norm(x * c) for x in self.coeffs))

    def shift(self, power: int) -> "IntPoly":
        if not self.coeffs or power == 0:
            return self
        return IntPoly._raw((0,) * power + self.coeffs)

    def __pow__(self, e: int) -> "IntPoly":
        result = ONE_POLY
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division with remainder over Q."""
        if other.is_zero():
            raise ScalarDivisionError("polynomial division by zero")
        q, r = to_sympy_poly(self).div(to_sympy_poly(other))
        return from_sympy_poly(q), from_sympy_poly(r)

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        if other.is_one():
            return self
        if other.is_zero():
            raise ScalarDivisionError("polynomial division by zero")
        try:
            return from_sympy_poly(to_sympy_poly(self).exquo(to_sympy_poly(other)))
        except ExactQuotientFailed:
            raise ArithmeticError(f"{other} does not divide {self}") from None

    def content(self) -> Number:
        """Positive rational c with self/c integral and primitive (0 for zero)."""
        if not self.coeffs:
            return 0
        return abs(_div(self.lead, self.primitive().lead))

    def primitive(self) -> "IntPoly":
        """Integer primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        _, cleared = to_sympy_poly(self).clear_denoms(convert=True)
        _, prim = cleared.primitive()
        out = from_sympy_poly(prim)
        return -out if out.lead < 0 else out

    def gcd(self, other: "IntPoly") -> "IntPoly":
        """Primitive gcd with positive leading coefficient."""
        if self.is_zero():
            return other.primitive()
        if other.is_zero() or self.is_const() or other.is_const():
            return self.primitive() if other.is_zero() else ONE_POLY
        return from_sympy_poly(to_sympy_poly(self).gcd(to_sympy_poly(other))).primitive()

    def __call__(self, point: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return _norm(acc) if isinstance(acc, Fraction) else acc


def to_sympy_poly(p: IntPoly) -> Poly:
    coeffs = [Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
              for c in reversed(p.coeffs)]
    return Poly(coeffs or [0], Y_SYMBOL, domain=QQ)


def from_sympy_poly(p: Poly) -> IntPoly:
    return IntPoly(Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs()))


ZERO_POLY = IntPoly._raw(())
ONE_POLY = IntPoly._raw((1,))
Y_POLY = IntPoly._raw((0, 1))


class RatFunc:
    """Reduced fraction num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: IntPoly = ONE_POLY):
        if not isinstance(num, IntPoly):
            num = IntPoly.const(num)
        if den.is_zero():
            raise ScalarDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = ZERO_POLY, ONE_POLY
        elif not den.is_const():
            g = num.gcd(den)
            if not g.is_one():
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lead
        if lc != 1:
            inv = _div(1, lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly = ONE_POLY) -> "RatFunc":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def coerce(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, IntPoly):
            return cls._raw(value)
        if isinstance(value, str):
            return parse_ratfunc(value)
        return cls._raw(IntPoly.const(value))

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_one(self) -> bool:
        return self.num.coeffs == (1,) and self.den.coeffs == (1,)

    def is_poly(self) -> bool:
        return self.den.coeffs == (1,)

    def __bool__(self) -> bool:
        return bool(self.num.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            if isinstance(other, (int, Fraction, IntPoly)):
                other = RatFunc.coerce(other)
            else:
                return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RatFunc({format_ratfunc(self)!r})"

    def __str__(self) -> str:
        return format_ratfunc(self)

    def __add__(self, other) -> "RatFunc":
        other = RatFunc.coerce(other)
        a, b = self, other
        if not a.num.coeffs:
            return b
        if not b.num.coeffs:
            return a
        if a.den.coeffs == (1,) and b.den.coeffs == (1,):
            return RatFunc._raw(a.num + b.num)
        if b.den.coeffs == (1,):
            # gcd(a.num + b.num*a.den, a.den) = gcd(a.num, a.den) = 1
            return RatFunc._raw(a.num + b.num * a.den, a.den)
        if a.den.coeffs == (1,):
            return b + a
        if a.den == b.den:
            return RatFunc(a.num + b.num, a.den)
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = RatFunc.coerce(other)
        a, b = self, other
        if not a.num.coeffs or not b.num.coeffs:
            return ZERO
        if a.den.coeffs == (1,) and b.den.coeffs == (1,):
            return RatFunc._raw(a.num * b.num)
        # cross cancellation keeps the product reduced
        g1 = a.num.gcd(b.den) if not b.den.is_const() else ONE_POLY
        g2 = b.num.gcd(a.den) if not a.den.is_const() else ONE_POLY
        num = a.num.exact_div(g1) * b.num.exact_div(g2)
        den = a.den.exact_div(g2) * b.den.exact_div(g1)
        lc = den.lead
        if lc != 1:
            inv = _div(1, lc)
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ScalarDivisionError("division by zero rational function")
        lc = self.num.lead
        inv = _div(1, lc)
        return RatFunc._raw(self.den.scale(inv), self.num.scale(inv))

    def __truediv__(self, other) -> "RatFunc":
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._raw(self.num ** e, self.den ** e)

    def eval_at(self, point: Number) -> Number:
        d = self.den(point)
        if d == 0:
            raise PoleError(self, point)
        return _div(self.num(point), d)


ZERO = RatFunc._raw(ZERO_POLY)
ONE = RatFunc._raw(ONE_POLY)
Y = RatFunc._raw(Y_POLY)
Y2 = RatFunc._raw(IntPoly._raw((0, 0, 1)))


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Exact a (op) b; ``op`` is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=None)
def quantum_int(k: int) -> RatFunc:
    """[k]_{y^2} = 1 + y^2 + ... + y^(2k-2); [0] = 0."""
    if k < 0:
        raise ValueError("quantum_int needs k >= 0")
    coeffs = [0] * max(2 * k - 1, 0)
    for j in range(k):
        coeffs[2 * j] = 1
    return RatFunc._raw(IntPoly(coeffs))


@lru_cache(maxsize=None)
def quantum_factorial(k: int) -> RatFunc:
    if k < 0:
        raise ValueError("quantum_factorial needs k >= 0")
    result = ONE
    for j in range(1, k + 1):
        result = result * quantum_int(j)
    return result


def eval_at(a: RatFunc, point: Number) -> Number:
    return a.eval_at(point)


def y_power(e: int) -> RatFunc:
    return RatFunc._raw(IntPoly.monomial(1, e))


# -- text format ---------------------------------------------------------

def _format_coeff(c: Number) -> str:
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def format_poly(p: IntPoly, var: str = "y") -> str:
    """Ascending powers, e.g. ``1 - y^2`` or ``3/2*y^4``."""
    parts = []
    for power, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if power == 0:
            body = _format_coeff(mag)
        else:
            mono = var if power == 1 else f"{var}^{power}"
            body = mono if mag == 1 else f"{_format_coeff(mag)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def format_ratfunc(a: RatFunc) -> str:
    if a.is_poly():
        return format_poly(a.num)
    return f"({format_poly(a.num)})/({format_poly(a.den)})"


_TOKENS = "+-*/^()"


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit() or ch == ".":
            j = i
            while j < len(text) and (text[j].isdigit() or text[j] == "."):
                j += 1
            try:
                tokens.append(("num", Fraction(text[i:j]), i))
            except ValueError:
                raise ParseError(text, i, "malformed number") from None
            i = j
        elif ch == "y":
            tokens.append(("y", None, i))
            i += 1
        elif ch in _TOKENS:
            tokens.append((ch, None, i))
            i += 1
        else:
            raise ParseError(text, i, f"unexpected character {ch!r}")
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over + - * / ^ ( ), numbers and y."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def take(self, kind: str):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            raise ParseError(self.text, tok[2], f"expected {kind!r}, found {tok[0]!r}")
        self.pos += 1
        return tok

    def parse(self) -> RatFunc:
        value = self.expr()
        self.take("end")
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.peek() in "+-":
            op = self.take(self.peek())[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.unary()
        while True:
            kind = self.peek()
            if kind == "*":
                self.take("*")
                value = value * self.unary()
            elif kind == "/":
                tok = self.take("/")
                rhs = self.unary()
                if rhs.is_zero():
                    raise ParseError(self.text, tok[2], "division by zero")
                value = value / rhs
            elif kind in ("num", "y", "("):
                # juxtaposition, e.g. 2y or (1+y)(1-y)
                value = value * self.power()
            else:
                return value

    def unary(self) -> RatFunc:
        if self.peek() == "-":
            self.take("-")
            return -self.unary()
        if self.peek() == "+":
            self.take("+")
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            sign = 1
            if self.peek() == "-":
                self.take("-")
                sign = -1
            tok = self.take("num")
            exp = tok[1]
            if exp.denominator != 1:
                raise ParseError(self.text, tok[2], "exponent must be an integer")
            if exp > MAX_EXPONENT:
                raise ParseError(self.text, tok[2], f"exponent exceeds {MAX_EXPONENT}")
            if sign < 0 and base.is_zero():
                raise ParseError(self.text, tok[2], "negative power of zero")
            return base ** (sign * int(exp))
        return base

    def atom(self) -> RatFunc:
        kind = self.peek()
        if kind == "num":
            return RatFunc.coerce(_norm(self.take("num")[1]))
        if kind == "y":
            self.take("y")
            return Y
        if kind == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        tok = self.tokens[self.pos]
        raise ParseError(self.text, tok[2], f"unexpected {kind!r}")


def parse_ratfunc(text: str) -> RatFunc:
    if not isinstance(text, str):
        return RatFunc.coerce(text)
    return _Parser(text).parse()
