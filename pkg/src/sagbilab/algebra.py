"""Exact sparse multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction`; exponent vectors are tuples of
non-negative ints.  A :class:`Polynomial` carries its ambient variable names,
and every operation returns a new, canonical polynomial (no zero
coefficients are ever stored).
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Exponent = Tuple[int, ...]

# Exponents emulate machine-width integers; coefficients are unbounded.
MAX_EXPONENT = 2**63 - 1


class DimensionError(ValueError):
    pass


class RingMismatchError(ValueError):
    pass


class UndefinedInitialTermError(ValueError):
    pass


class SubstitutionError(ValueError):
    pass


class ExponentOverflowError(OverflowError):
    pass


class ParseError(ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on exponent vectors of a fixed length.

    ``kind`` is one of ``"lex"``, ``"grlex"``, ``"grevlex"``, ``"weight"``
    or ``"block"``.  ``priority`` lists variable indices from most to least
    significant.  For ``"weight"`` the weight vector is compared first and
    ties are broken lexicographically.  For ``"block"``, ``blocks`` holds
    disjoint index tuples (most significant block first) and ``inner`` one
    order per block, each defined on that block's sub-vector.

    Orders are compared through :meth:`key`: a larger key is a larger
    monomial.
    """

    kind: str
    nvars: int
    priority: Tuple[int, ...] = ()
    weight: Tuple[int, ...] = ()
    blocks: Tuple[Tuple[int, ...], ...] = ()
    inner: Tuple["MonomialOrder", ...] = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex", "weight", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if not self.priority:
            object.__setattr__(self, "priority", tuple(range(self.nvars)))
        if sorted(self.priority) != list(range(self.nvars)):
            raise ValueError("priority must be a permutation of the variable indices")
        if self.kind == "weight":
            if len(self.weight) != self.nvars:
                raise DimensionError("weight vector length does not match the variable count")
            if any(w < 0 for w in self.weight):
                raise ValueError("weights must be non-negative for a well-order")
        if self.kind == "block":
            flat = sorted(i for b in self.blocks for i in b)
            if flat != list(range(self.nvars)):
                raise ValueError("blocks must partition the variable indices")
            if len(self.inner) != len(self.blocks):
                raise ValueError("one inner order per block is required")
            for b, o in zip(self.blocks, self.inner):
                if o.nvars != len(b):
                    raise DimensionError("inner order size does not match its block")

    def key(self, e: Exponent):
        cache = self._cache
        k = cache.get(e)
        if k is not None:
            return k
        if len(e) != self.nvars:
            raise DimensionError(f"exponent {e} has length {len(e)}, expected {self.nvars}")
        p = self.priority
        kind = self.kind
        if kind == "lex":
            k = tuple(e[i] for i in p)
        elif kind == "grlex":
            k = (sum(e),) + tuple(e[i] for i in p)
        elif kind == "grevlex":
            k = (sum(e),) + tuple(-e[i] for i in reversed(p))
        elif kind == "weight":
            k = (sum(w * x for w, x in zip(self.weight, e)),) + tuple(e[i] for i in p)
        else:
            k = tuple(o.key(tuple(e[i] for i in b)) for b, o in zip(self.blocks, self.inner))
        if len(cache) < 500_000:
            cache[e] = k
        return k

    def is_graded(self):
        """True when total degree is compared first."""
        if self.kind in ("grlex", "grevlex"):
            return True
        if self.kind == "weight":
            return len(set(self.weight)) == 1 and self.weight[0] > 0
        return False

    def describe(self, vars=None):
        """Readable form; with ``vars`` the priority is spelled out as
        ``x > y > ...``."""
        if self.kind == "block":
            inner = ", ".join(o.describe() for o in self.inner)
            return f"block({list(map(list, self.blocks))}; {inner})"
        extra = f", weight={list(self.weight)}" if self.kind == "weight" else ""
        if vars is not None:
            return f"{self.kind}({' > '.join(vars[i] for i in self.priority)}{extra})"
        return f"{self.kind}(priority={list(self.priority)}{extra})"


def lex(nvars, priority=None):
    return MonomialOrder("lex", nvars, tuple(priority or ()))


def grlex(nvars, priority=None):
    return MonomialOrder("grlex", nvars, tuple(priority or ()))


def grevlex(nvars, priority=None):
    return MonomialOrder("grevlex", nvars, tuple(priority or ()))


def weight_order(weight, priority=None):
    weight = tuple(int(w) for w in weight)
    return MonomialOrder("weight", len(weight), tuple(priority or ()), weight=weight)


def block_order(blocks, inner):
    blocks = tuple(tuple(b) for b in blocks)
    nvars = sum(len(b) for b in blocks)
    return MonomialOrder("block", nvars, blocks=blocks, inner=tuple(inner))


def order_from_name(name, nvars):
    """Build an order from a CLI-style name: lex, grlex, grevlex or
    ``weight:w1,w2,...`` (weight, ties broken by lex)."""
    table = {"lex": lex, "grlex": grlex, "grevlex": grevlex}
    if name.lower().startswith("weight:"):
        try:
            w = tuple(int(v) for v in name.split(":", 1)[1].split(","))
        except ValueError:
            raise ValueError(f"bad weight vector in {name!r}") from None
        if len(w) != nvars:
            raise DimensionError(f"weight vector has {len(w)} entries, ring has {nvars} variables")
        return weight_order(w)
    try:
        return table[name.lower()](nvars)
    except KeyError:
        raise ValueError(f"unknown order {name!r}; expected one of {sorted(table)}") from None


def compare(order: MonomialOrder, a: Exponent, b: Exponent) -> Cmp:
    if len(a) != len(b):
        raise DimensionError(f"cannot compare exponents of lengths {len(a)} and {len(b)}")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    if ka == kb:
        return Cmp.EQUAL
    return Cmp.GREATER if ka > kb else Cmp.LESS


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Term:
    coefficient: Fraction
    exponent: Exponent


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficients must be int, str or Fraction, not {type(c).__name__}")


class Polynomial:
    """Sparse polynomial in ``vars`` with rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Optional[Mapping[Sequence[int], object]] = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: Dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise DimensionError(f"exponent {e} does not fit ring {self.vars}")
            if any(x < 0 for x in e):
                raise ValueError("negative exponents are not allowed")
            if any(x > MAX_EXPONENT for x in e):
                raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
            c = _coerce(c)
            if c:
                c = clean.get(e, 0) + c
                if c:
                    clean[e] = c
                else:
                    clean.pop(e, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms):
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, vars):
        return cls._raw(tuple(vars), {})

    @classmethod
    def constant(cls, vars, c):
        vars = tuple(vars)
        c = _coerce(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def monomial(cls, vars, exponent, c=1):
        return cls(vars, {tuple(exponent): c})

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        try:
            i = vars.index(name)
        except ValueError:
            raise ValueError(f"{name!r} is not a variable of {vars}") from None
        e = [0] * len(vars)
        e[i] = 1
        return cls._raw(vars, {tuple(e): Fraction(1)})

    @classmethod
    def parse(cls, text, vars=None):
        return parse(text, vars)

    # -- basic queries -------------------------------------------------
    @property
    def nvars(self):
        return len(self.vars)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        t = self.terms
        return not t or (len(t) == 1 and not any(next(iter(t))))

    def constant_value(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def support(self):
        return set(self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading_exponent(self, order):
        if not self.terms:
            raise UndefinedInitialTermError("the zero polynomial has no initial term")
        return max(self.terms, key=order.key)

    def initial_term(self, order) -> Term:
        e = self.leading_exponent(order)
        return Term(self.terms[e], e)

    def leading_coefficient(self, order):
        return self.terms[self.leading_exponent(order)]

    def monic(self, order):
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    def sorted_terms(self, order):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Polynomial):
            return self.constant(self.vars, other)
        if other.vars != self.vars:
            raise RingMismatchError(f"ring {other.vars} does not match {self.vars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = -c
            else:
                s -= c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.vars, out)

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.vars)
        return Polynomial._raw(self.vars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.vars)
        _check_overflow(self, other)
        out: Dict[Exponent, Fraction] = {}
        get = out.get
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return Polynomial._raw(self.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def mul_term(self, c, e):
        """Multiply by the single term ``c * x^e``."""
        c = _coerce(c)
        if not c or not self.terms:
            return Polynomial.zero(self.vars)
        return Polynomial._raw(
            self.vars, {tuple(x + y for x, y in zip(ea, e)): c * ca for ea, ca in self.terms.items()}
        )

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        if self.terms and k and max(max(e) for e in self.terms) * k > MAX_EXPONENT:
            raise ExponentOverflowError("power would overflow the exponent range")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, c):
        return self.scale(1 / _coerce(c))

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.vars!r}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # -- structural helpers -------------------------------------------
    def embed(self, vars):
        """Re-express this polynomial in a ring whose variables include ours."""
        vars = tuple(vars)
        try:
            idx = [vars.index(v) for v in self.vars]
        except ValueError:
            raise RingMismatchError(f"{self.vars} is not contained in {vars}") from None
        n = len(vars)
        out = {}
        for e, c in self.terms.items():
            new = [0] * n
            for i, x in zip(idx, e):
                new[i] = x
            out[tuple(new)] = c
        return Polynomial._raw(vars, out)

    def to_json(self):
        items = sorted(self.terms.items(), reverse=True)
        return {"vars": list(self.vars), "terms": [{"c": str(c), "e": list(e)} for e, c in items]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["vars"], {tuple(t["e"]): Fraction(t["c"]) for t in data["terms"]})


def _check_overflow(a, b):
    ma = max(max(e) for e in a.terms)
    mb = max(max(e) for e in b.terms)
    if ma + mb > MAX_EXPONENT:
        raise ExponentOverflowError("product would overflow the exponent range")


def support(f: Polynomial):
    return f.support()


def initial_term(f: Polynomial, order: MonomialOrder) -> Term:
    return f.initial_term(order)


class _EveryDegree:
    def __repr__(self):
        return "EVERY_DEGREE"


EVERY_DEGREE = _EveryDegree()


def is_homogeneous(f: Polynomial):
    """Common total degree of all terms, None when mixed.

    The zero polynomial returns the marker :data:`EVERY_DEGREE`.
    """
    if not f.terms:
        return EVERY_DEGREE
    degrees = {sum(e) for e in f.terms}
    return degrees.pop() if len(degrees) == 1 else None


def substitute(f: Polynomial, images: Mapping[str, Polynomial], target_vars=None) -> Polynomial:
    """Ring homomorphism sending each variable of ``f`` to ``images[var]``.

    Variables that do not occur in ``f`` need no image.
    """
    used = [i for i in range(f.nvars) if any(e[i] for e in f.terms)]
    missing = [f.vars[i] for i in used if f.vars[i] not in images]
    if missing:
        raise SubstitutionError(f"no image given for {', '.join(missing)}")
    rings = {images[f.vars[i]].vars for i in used}
    if target_vars is not None:
        rings.add(tuple(target_vars))
    if len(rings) > 1:
        raise RingMismatchError("images do not live in a common ring")
    if not rings:
        target = f.vars
    else:
        target = rings.pop()
    powers: Dict[Tuple[int, int], Polynomial] = {}

    def power(i, k):
        key = (i, k)
        p = powers.get(key)
        if p is None:
            if k == 1:
                p = images[f.vars[i]]
            else:
                p = power(i, k // 2) * power(i, k - k // 2)
            powers[key] = p
        return p

    result = Polynomial.zero(target)
    one = Polynomial.constant(target, 1)
    for e, c in f.terms.items():
        t = one
        for i in used:
            if e[i]:
                t = t * power(i, e[i])
        result = result + t.scale(c)
    return result


# ---------------------------------------------------------------------------
# text form

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("nat", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, vars):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = list(vars) if vars is not None else None
        self.fixed = vars is not None
        self.terms = []

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def var_index(self, name, pos):
        if name in self.vars:
            return self.vars.index(name)
        if self.fixed:
            raise ParseError(f"unknown variable {name!r}", pos)
        self.vars.append(name)
        return len(self.vars) - 1

    def parse(self):
        if self.vars is None:
            self.vars = []
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        self.term(sign)
        while self.peek()[0] in "+-":
            sign = 1 if self.take()[0] == "+" else -1
            self.term(sign)
        self.take("end")
        n = len(self.vars)
        out = {}
        for c, powers in self.terms:
            e = [0] * n
            for i, k in powers:
                e[i] += k
            e = tuple(e)
            out[e] = out.get(e, 0) + c
        return Polynomial(self.vars, out)

    def term(self, sign):
        tok = self.peek()
        coeff = Fraction(1)
        powers = []
        if tok[0] == "nat":
            self.take()
            coeff = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take("nat")
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                coeff = Fraction(tok[1], den[1])
            if self.peek()[0] == "*":
                self.take()
                self.factors(powers, required=True)
            elif self.peek()[0] == "var":
                self.factors(powers, required=True)
        elif tok[0] == "var":
            self.factors(powers, required=True)
        else:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected a term, found {what}", tok[2])
        self.terms.append((sign * coeff, powers))

    def factors(self, powers, required):
        tok = self.take("var")
        powers.append((self.var_index(tok[1], tok[2]), self.power()))
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                tok = self.take("var")
            elif kind == "var":
                tok = self.take()
            else:
                break
            powers.append((self.var_index(tok[1], tok[2]), self.power()))

    def power(self):
        if self.peek()[0] == "^":
            self.take()
            return self.take("nat")[1]
        return 1


def parse(text: str, vars: Optional[Sequence[str]] = None) -> Polynomial:
    """Parse ``text`` into a polynomial over ``vars``.

    Without ``vars`` the ring is made of the variables in order of first
    appearance.
    """
    return _Parser(text, vars).parse()


def _format_coeff(c: Fraction):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: Polynomial, order: Optional[MonomialOrder] = None) -> str:
    if not f.terms:
        return "0"
    order = order or grevlex(f.nvars)
    parts = []
    for e, c in f.sorted_terms(order):
        factors = []
        for name, k in zip(f.vars, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mono = "*".join(factors)
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def polys_from_strings(texts: Iterable[str], vars: Sequence[str]):
    return [parse(t, vars) for t in texts]
