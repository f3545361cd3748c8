"""Exact sparse multivariate polynomials over the rationals or a prime field.

Monomials are fixed-width exponent tuples, coefficients are Fractions (over Q)
or canonical residues 0..p-1 (over F_p). Values are immutable and every
operation is re-entrant; there are no shared mutable caches.

Owns the monomial orders (lex, graded lex, graded reverse lex, positive weight
with lex tiebreak), the polynomial text grammar, and the order/field syntax
used by the CLI: ``lex:3,1,2`` lists the variable ranking in ascending order,
``weight:w1,...,wn:lex:r1,...,rn`` adds positive rational weights, and fields
are spelled ``Q`` or ``F7``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_VARS = 16

Monomial = tuple[int, ...]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals when p is None, else the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"field characteristic must be prime, got {self.p}")

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def coerce(self, value):
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ValueError(
                    f"denominator {value.denominator} not invertible modulo {self.p}"
                )
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def text(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"


QQ = Field(None)


def GF(p: int) -> Field:
    return Field(p)


def parse_field(text: str) -> Field:
    s = text.strip()
    if s == "Q":
        return QQ
    if s.startswith("F") and s[1:].isdigit():
        return Field(int(s[1:]))
    raise ValueError(f"cannot parse field from {text!r} (expected Q or F<p>)")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


class MonomialOrder:
    """A total monomial order on a fixed number of variables.

    ranking lists the variables in ascending order: ranking[-1] is the most
    significant variable. key(m) returns a tuple that sorts monomials, so
    max(terms, key=order.key) is the leading monomial.
    """

    KINDS = ("lex", "grlex", "grevlex", "weight")

    __slots__ = ("kind", "nvars", "ranking", "weights", "_desc")

    def __init__(self, kind: str, nvars: int, ranking=None, weights=None):
        if kind not in self.KINDS:
            raise ValueError(f"kind must be one of {self.KINDS}, got {kind!r}")
        if not 1 <= nvars <= MAX_VARS:
            raise ValueError(f"nvars must be in 1..{MAX_VARS}, got {nvars}")
        rank = tuple(int(v) for v in (ranking if ranking is not None else range(1, nvars + 1)))
        if sorted(rank) != list(range(1, nvars + 1)):
            raise ValueError(f"ranking must be a permutation of 1..{nvars}: {rank}")
        if kind == "weight":
            if weights is None:
                raise ValueError("weight order needs weights")
            w = tuple(Fraction(x) for x in weights)
            if len(w) != nvars or any(x <= 0 for x in w):
                raise ValueError(f"weights must be {nvars} positive rationals: {weights}")
        else:
            if weights is not None:
                raise ValueError(f"{kind} order takes no weights")
            w = None
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "ranking", rank)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "_desc", tuple(v - 1 for v in reversed(rank)))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialOrder is immutable")

    def key(self, mono: Monomial):
        desc = self._desc
        if self.kind == "lex":
            return tuple(mono[i] for i in desc)
        if self.kind == "grlex":
            return (sum(mono), tuple(mono[i] for i in desc))
        if self.kind == "grevlex":
            return (sum(mono), tuple(-mono[v - 1] for v in self.ranking))
        total = sum(w * e for w, e in zip(self.weights, mono))
        return (total, tuple(mono[i] for i in desc))

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def variable_ascending(self) -> tuple[int, ...]:
        """Variables sorted ascending under this order (applied to degree-1 monomials)."""
        units = {
            v: tuple(1 if i == v - 1 else 0 for i in range(self.nvars))
            for v in range(1, self.nvars + 1)
        }
        return tuple(sorted(units, key=lambda v: self.key(units[v])))

    def induced_lex(self) -> "MonomialOrder":
        """The lex order whose variable ranking matches this order's ordering of the variables."""
        return MonomialOrder("lex", self.nvars, self.variable_ascending())

    def text(self) -> str:
        rank = ",".join(str(v) for v in self.ranking)
        if self.kind == "weight":
            ws = ",".join(str(w) for w in self.weights)
            return f"weight:{ws}:lex:{rank}"
        return f"{self.kind}:{rank}"

    def _signature(self):
        return (self.kind, self.nvars, self.ranking, self.weights)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and self._signature() == other._signature()

    def __hash__(self) -> int:
        return hash(self._signature())

    def __repr__(self) -> str:
        return f"MonomialOrder({self.text()!r}, nvars={self.nvars})"


def lex_order(nvars: int, ranking=None) -> MonomialOrder:
    return MonomialOrder("lex", nvars, ranking)


def parse_order(text: str, nvars: int) -> MonomialOrder:
    s = text.strip()
    head, _, rest = s.partition(":")
    if head in ("lex", "grlex", "grevlex"):
        ranking = [int(v) for v in rest.split(",")] if rest else None
        return MonomialOrder(head, nvars, ranking)
    if head == "weight":
        fields = rest.split(":")
        if len(fields) != 3 or fields[1] != "lex":
            raise ValueError(
                f"weight order must look like weight:w1,...,wn:lex:r1,...,rn, got {text!r}"
            )
        weights = [Fraction(w) for w in fields[0].split(",")]
        ranking = [int(v) for v in fields[2].split(",")] if fields[2] else None
        return MonomialOrder("weight", nvars, ranking, weights)
    raise ValueError(f"cannot parse order from {text!r}")


class Poly:
    """A sparse polynomial: dict from exponent tuple to nonzero coefficient."""

    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars: int, field: Field, terms):
        if nvars < 1:
            raise ValueError(f"nvars must be positive, got {nvars}")
        clean = {}
        for mono, coeff in dict(terms).items():
            m = tuple(int(e) for e in mono)
            if len(m) != nvars or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {mono} for {nvars} variables")
            c = field.coerce(coeff)
            if c != field.zero:
                clean[m] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, nvars: int, field: Field, terms: dict) -> "Poly":
        # internal fast path: terms already canonical, zero coefficients removed
        obj = object.__new__(cls)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def zero(cls, nvars: int, field: Field = QQ) -> "Poly":
        return cls._raw(nvars, field, {})

    @classmethod
    def constant(cls, value, nvars: int, field: Field = QQ) -> "Poly":
        c = field.coerce(value)
        if c == field.zero:
            return cls.zero(nvars, field)
        return cls._raw(nvars, field, {(0,) * nvars: c})

    @classmethod
    def variable(cls, index: int, nvars: int, field: Field = QQ) -> "Poly":
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        mono = tuple(1 if i == index - 1 else 0 for i in range(nvars))
        return cls._raw(nvars, field, {mono: field.one})

    def _check_compatible(self, other: "Poly") -> None:
        if self.nvars != other.nvars or self.field != other.field:
            raise ValueError("polynomials live in different rings")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.field, frozenset(self.terms.items())))

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other, self.nvars, self.field)
        self._check_compatible(other)
        field = self.field
        zero = field.zero
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = field.add(out.get(m, zero), c)
            if v == zero:
                out.pop(m, None)
            else:
                out[m] = v
        return Poly._raw(self.nvars, field, out)

    def __radd__(self, other) -> "Poly":
        return self.__add__(other)

    def __neg__(self) -> "Poly":
        field = self.field
        return Poly._raw(self.nvars, field, {m: field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other, self.nvars, self.field)
        return self.__add__(other.__neg__())

    def __rsub__(self, other) -> "Poly":
        return (-self).__add__(other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = self.field.coerce(other)
            if c == self.field.zero:
                return Poly.zero(self.nvars, self.field)
            field = self.field
            return Poly._raw(
                self.nvars, field, {m: field.mul(v, c) for m, v in self.terms.items()}
            )
        self._check_compatible(other)
        field = self.field
        zero = field.zero
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = field.add(out.get(m, zero), field.mul(c1, c2))
                if v == zero:
                    out.pop(m, None)
                else:
                    out[m] = v
        return Poly._raw(self.nvars, field, out)

    def __rmul__(self, other) -> "Poly":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Poly.constant(1, self.nvars, self.field)
        for _ in range(exponent):
            result = result * self
        return result

    def term_mul(self, mono: Monomial, coeff) -> "Poly":
        """Multiply by coeff * x^mono in one pass."""
        field = self.field
        c = field.coerce(coeff)
        if c == field.zero:
            return Poly.zero(self.nvars, field)
        return Poly._raw(
            self.nvars,
            field,
            {tuple(a + b for a, b in zip(m, mono)): field.mul(v, c) for m, v in self.terms.items()},
        )

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(m) for m in self.terms)

    def degree_in(self, index: int) -> int:
        """Largest exponent of the given variable (zero polynomial rejected)."""
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(m[index - 1] for m in self.terms)

    def evaluate(self, point):
        values = [self.field.coerce(v) for v in point]
        if len(values) != self.nvars:
            raise ValueError(f"point has {len(values)} coordinates, need {self.nvars}")
        field = self.field
        total = field.zero
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term = field.mul(term, v**e if field.p is None else pow(v, e, field.p))
            total = field.add(total, term)
        return total

    def __repr__(self) -> str:
        return f"Poly({polynomial_text(self)!r}, nvars={self.nvars}, field={self.field.text()})"


def leading_term(f: Poly, order: MonomialOrder) -> tuple[Monomial, object]:
    """The order-maximal (monomial, coefficient) pair of a nonzero polynomial."""
    if not f.terms:
        raise ValueError("the zero polynomial has no leading term")
    m = max(f.terms, key=order.key)
    return m, f.terms[m]


def coefficients_in_last_variable(f: Poly) -> list[Poly]:
    """Write a nonzero f as sum g_k * (last variable)^k; returns [g_0, ..., g_d] in n-1 variables."""
    if not f.terms:
        raise ValueError("the zero polynomial has no last-variable expansion")
    if f.nvars < 2:
        raise ValueError("need at least two variables to split off the last one")
    d = max(m[-1] for m in f.terms)
    slices: list[dict] = [{} for _ in range(d + 1)]
    for m, c in f.terms.items():
        slices[m[-1]][m[:-1]] = c
    return [Poly._raw(f.nvars - 1, f.field, s) for s in slices]


class PolynomialSyntaxError(ValueError):
    """Rejected polynomial text, carrying the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
        elif ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolynomialSyntaxError("variable needs a numeric index", i)
            toks.append(("var", text[i:j], i))
            i = j
        elif ch in "+-*^()/":
            toks.append((ch, ch, i))
            i += 1
        else:
            raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, tokens, nvars: int, field: Field):
        self.tokens = tokens
        self.pos = 0
        self.nvars = nvars
        self.field = field

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.take()
        if tok[0] != kind:
            raise PolynomialSyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> Poly:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolynomialSyntaxError(f"unexpected trailing {tok[1]!r}", tok[2])
        return value

    def expr(self) -> Poly:
        negate = False
        if self.peek()[0] in ("+", "-"):
            negate = self.take()[0] == "-"
        value = self.term()
        if negate:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value - rhs if op == "-" else value + rhs
        return value

    def term(self) -> Poly:
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> Poly:
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("int")
            base = base ** int(tok[1])
        return base

    def base(self) -> Poly:
        tok = self.take()
        kind, text, pos = tok
        if kind == "int":
            numerator = int(text)
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.expect("int")
                denominator = int(den_tok[1])
                if denominator == 0:
                    raise PolynomialSyntaxError("zero denominator", den_tok[2])
                return Poly.constant(Fraction(numerator, denominator), self.nvars, self.field)
            return Poly.constant(numerator, self.nvars, self.field)
        if kind == "var":
            index = int(text[1:])
            if not 1 <= index <= self.nvars:
                raise PolynomialSyntaxError(
                    f"variable {text} out of range for {self.nvars} variables", pos
                )
            return Poly.variable(index, self.nvars, self.field)
        if kind == "(":
            value = self.expr()
            self.expect(")")
            return value
        if kind == "-":
            return -self.factor()
        raise PolynomialSyntaxError(f"expected a number, variable, or parenthesis, found {text!r}", pos)


def parse_polynomial(text: str, nvars: int, field: Field = QQ) -> Poly:
    """Parse the polynomial grammar: integers, rationals a/b, x1..xn, + - * ^, parentheses."""
    if not 1 <= nvars <= MAX_VARS:
        raise ValueError(f"nvars must be in 1..{MAX_VARS}, got {nvars}")
    return _Parser(_tokenize(text), nvars, field).parse()


def _term_text(mono: Monomial, coeff, field: Field, first: bool) -> str:
    body = "*".join(
        f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(mono) if e
    )
    if field.p is None:
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
    else:
        negative = False
        magnitude = coeff
    if body and magnitude == field.one:
        core = body
    elif body:
        core = f"{magnitude}*{body}"
    else:
        core = str(magnitude)
    if first:
        return ("-" if negative else "") + core
    return ("- " if negative else "+ ") + core


def polynomial_text(f: Poly, order: MonomialOrder | None = None) -> str:
    """Render with terms in decreasing order; parse_polynomial inverts this exactly."""
    if not f.terms:
        return "0"
    if order is None:
        order = lex_order(f.nvars)
    monos = sorted(f.terms, key=order.key, reverse=True)
    pieces = [_term_text(m, f.terms[m], f.field, i == 0) for i, m in enumerate(monos)]
    return " ".join(pieces)
