"""Exact multivariate polynomials over Q under graded reverse lexicographic order.

Monomials are packed into a single Python int: variable ``i`` owns the 8-bit
field at ``8*i`` and the total degree sits above all variable fields.  With that
layout multiplication is integer addition, divisibility is one masked
subtraction, and the grevlex comparison key is ``(deg << S) - vars``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import UsageError

FIELD_BITS = 8
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1

LAYER_LETTERS = "xyz"


def layer_letter(layer):
    return LAYER_LETTERS[layer] if layer < len(LAYER_LETTERS) else f"v{layer}"


@dataclass(frozen=True)
class Variable:
    layer: int
    row: int
    col: int
    name: str


class VariableTable:
    """Ordered variables; position 0 is the largest variable."""

    def __init__(self, entries):
        entries = tuple(entries)
        if len({(v.layer, v.row, v.col) for v in entries}) != len(entries):
            raise UsageError("variable table has repeated (layer, row, col) entries")
        if len({v.name for v in entries}) != len(entries):
            raise UsageError("variable table has repeated names")
        self.entries = entries
        self.nvars = len(entries)
        self.shift = FIELD_BITS * self.nvars
        self.index = {v.name: i for i, v in enumerate(entries)}
        self.position = {(v.layer, v.row, v.col): i for i, v in enumerate(entries)}
        self._hash = hash(entries)
        # top bit of every variable field; used by the divisibility test
        self.guard = sum(1 << (FIELD_BITS * i + FIELD_BITS - 1) for i in range(self.nvars))
        self.var_mask = (1 << self.shift) - 1

    @classmethod
    def from_names(cls, names):
        """Generic table; variables are ordered as given."""
        return cls(Variable(0, 1, j + 1, name) for j, name in enumerate(names))

    def __len__(self):
        return self.nvars

    def __eq__(self, other):
        return isinstance(other, VariableTable) and self.entries == other.entries

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"VariableTable({[v.name for v in self.entries]})"

    def names(self):
        return [v.name for v in self.entries]

    def var(self, layer, row, col):
        """Index of the variable with the given jet layer and matrix position."""
        return self.position[(layer, row, col)]

    # packed-monomial helpers -------------------------------------------------

    def encode(self, exps):
        if len(exps) != self.nvars:
            raise UsageError(f"expected {self.nvars} exponents, got {len(exps)}")
        code = 0
        deg = 0
        for i, e in enumerate(exps):
            if e < 0 or e > MAX_EXPONENT:
                raise UsageError(f"exponent {e} out of range")
            code |= e << (FIELD_BITS * i)
            deg += e
        return code | (deg << self.shift)

    def encode_var(self, i, e=1):
        return (e << (FIELD_BITS * i)) | (e << self.shift)

    def decode(self, code):
        return tuple((code >> (FIELD_BITS * i)) & FIELD_MASK for i in range(self.nvars))

    def support(self, code):
        return tuple(i for i in range(self.nvars) if (code >> (FIELD_BITS * i)) & FIELD_MASK)

    def degree(self, code):
        return code >> self.shift

    def key(self, code):
        """Integer sort key; larger key means larger monomial."""
        return ((code >> self.shift) << self.shift) - (code & self.var_mask)

    def divides(self, d, m):
        return ((m | self.guard) - (d & self.var_mask)) & self.guard == self.guard and d >> self.shift <= m >> self.shift

    def lcm(self, a, b):
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([max(x, y) for x, y in zip(ea, eb)])

    def gcd(self, a, b):
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([min(x, y) for x, y in zip(ea, eb)])

    def coprime(self, a, b):
        return self.gcd(a, b) & self.var_mask == 0

    def check_code(self, code):
        if any(e > MAX_EXPONENT for e in self.decode(code)):
            raise OverflowError("monomial exponent exceeds packed field width")

    def format_monomial(self, code):
        parts = []
        for i, e in enumerate(self.decode(code)):
            if e == 1:
                parts.append(self.entries[i].name)
            elif e > 1:
                parts.append(f"{self.entries[i].name}^{e}")
        return "*".join(parts) if parts else "1"


def jet_table(m, n, k):
    """Variables x^(s)_{i,j}: highest jet layer first, row-major inside a layer.

    For (2, n, 2) this is z11 > ... > z2n > y11 > ... > y2n > x11 > ... > x2n.
    """
    entries = []
    for s in range(k, -1, -1):
        letter = layer_letter(s)
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                entries.append(Variable(s, i, j, f"{letter}[{i},{j}]"))
    return VariableTable(entries)


class MonomialOrder:
    """Graded reverse lexicographic order over a variable table."""

    kind = "grevlex"

    def __init__(self, table):
        self.table = table

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.table == other.table

    def __hash__(self):
        return hash(("grevlex", self.table))

    def __repr__(self):
        return f"MonomialOrder(grevlex, {self.table!r})"


class Monomial:
    """A monomial bound to a variable table."""

    __slots__ = ("table", "code")

    def __init__(self, table, code):
        self.table = table
        self.code = code

    @classmethod
    def from_exponents(cls, table, exps):
        return cls(table, table.encode(exps))

    @classmethod
    def from_dict(cls, table, exps):
        dense = [0] * table.nvars
        for name, e in exps.items():
            dense[table.index[name] if isinstance(name, str) else name] += e
        return cls.from_exponents(table, dense)

    @property
    def exponents(self):
        return self.table.decode(self.code)

    @property
    def sparse(self):
        return {i: e for i, e in enumerate(self.exponents) if e}

    @property
    def degree(self):
        return self.table.degree(self.code)

    def divides(self, other):
        _same_table(self.table, other.table)
        return self.table.divides(self.code, other.code)

    def is_squarefree(self):
        return all(e <= 1 for e in self.exponents)

    def __mul__(self, other):
        _same_table(self.table, other.table)
        code = self.code + other.code
        self.table.check_code(code)
        return Monomial(self.table, code)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.code == other.code and self.table == other.table

    def __hash__(self):
        return hash(self.code)

    def __str__(self):
        return self.table.format_monomial(self.code)

    def __repr__(self):
        return f"Monomial({self})"


def _same_table(a, b):
    if a is not b and a != b:
        raise UsageError("operands live over different variable tables")


def compare_monomials(a, b, order):
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    _same_table(a.table, order.table)
    _same_table(b.table, order.table)
    ka, kb = order.table.key(a.code), order.table.key(b.code)
    return (ka > kb) - (ka < kb)


def normalize_coefficient(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def divide_coefficient(a, b):
    if b == 1:
        return a
    if b == -1:
        return -a
    return normalize_coefficient(Fraction(a) / b)


class Polynomial:
    """Immutable polynomial with exact rational coefficients.

    ``coeffs`` maps packed monomial codes to nonzero ints or Fractions.
    """

    def __init__(self, order, coeffs=None):
        self.order = order
        self.table = order.table
        self.coeffs = {}
        if coeffs:
            for m, c in coeffs.items():
                if c:
                    self.coeffs[m] = normalize_coefficient(c)

    @classmethod
    def _raw(cls, order, coeffs):
        # trusted constructor: coeffs already canonical and zero-free
        p = cls.__new__(cls)
        p.order = order
        p.table = order.table
        p.coeffs = coeffs
        return p

    @classmethod
    def zero(cls, order):
        return cls._raw(order, {})

    @classmethod
    def constant(cls, order, c):
        return cls(order, {0: c})

    @classmethod
    def variable(cls, order, name_or_index):
        t = order.table
        i = t.index[name_or_index] if isinstance(name_or_index, str) else name_or_index
        return cls._raw(order, {t.encode_var(i): 1})

    @classmethod
    def from_terms(cls, order, terms):
        coeffs = {}
        for c, mono in terms:
            code = mono.code if isinstance(mono, Monomial) else mono
            coeffs[code] = coeffs.get(code, 0) + c
        return cls(order, coeffs)

    @classmethod
    def parse(cls, order, text):
        return parse_polynomial(order, text)

    # structure ---------------------------------------------------------------

    @cached_property
    def sorted_codes(self):
        key = self.table.key
        return sorted(self.coeffs, key=key, reverse=True)

    @property
    def terms(self):
        """(coefficient, Monomial) pairs in strictly descending order."""
        return [(self.coeffs[m], Monomial(self.table, m)) for m in self.sorted_codes]

    @cached_property
    def lm_code(self):
        if not self.coeffs:
            raise UsageError("zero polynomial has no leading monomial")
        return max(self.coeffs, key=self.table.key)

    @property
    def lm(self):
        return Monomial(self.table, self.lm_code)

    @property
    def lc(self):
        return self.coeffs[self.lm_code]

    @property
    def lt(self):
        return self.lc, self.lm

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def total_degree(self):
        return max((self.table.degree(m) for m in self.coeffs), default=-1)

    def variables(self):
        used = set()
        for m in self.coeffs:
            used.update(self.table.support(m))
        return sorted(used)

    # arithmetic --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.order is not self.order and other.order != self.order:
                raise UsageError("operands use different monomial orders or tables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.order, {0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = normalize_coefficient(v)
            else:
                out.pop(m, None)
        return Polynomial._raw(self.order, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.order, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return Polynomial.zero(self.order)
        return Polynomial._raw(
            self.order, {m: normalize_coefficient(v * c) for m, v in self.coeffs.items()}
        )

    def mul_term(self, c, code):
        """Multiply by the single term ``c * monomial(code)``."""
        if not c:
            return Polynomial.zero(self.order)
        out = {m + code: normalize_coefficient(v * c) for m, v in self.coeffs.items()}
        if out:
            self.table.check_code(max(out, key=self.table.degree))
        return Polynomial._raw(self.order, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        p = Polynomial(self.order, out)
        for m in p.coeffs:
            self.table.check_code(m)
        return p

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise UsageError("negative powers are not polynomials")
        result = Polynomial.constant(self.order, 1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial(self.order, {0: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table == other.table and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def normalized(self):
        """Scale to a primitive integer polynomial with positive leading coefficient."""
        if not self.coeffs:
            return self
        from math import gcd, lcm

        den = 1
        for c in self.coeffs.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        ints = {m: int(c * den) for m, c in self.coeffs.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        if ints[self.lm_code] < 0:
            g = -g
        return Polynomial._raw(self.order, {m: c // g for m, c in ints.items()})

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


# text format ---------------------------------------------------------------


def _format_coefficient(c):
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_polynomial(p):
    if not p.coeffs:
        return "0"
    out = []
    for code in p.sorted_codes:
        c = p.coeffs[code]
        neg = c < 0
        a = -c if neg else c
        mono = p.table.format_monomial(code)
        if mono == "1":
            body = _format_coefficient(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coefficient(a)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*(?:\[\d+,\d+\])?)(?:\^(\d+))?$")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")


def parse_polynomial(order, text):
    table = order.table
    text = text.strip()
    if not text:
        raise UsageError("empty polynomial text")
    pieces = _TERM_SPLIT.split(text)
    # split() yields [first, sign, term, sign, term, ...]
    if pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    coeffs = {}
    for sign, term in zip(pieces[0::2], pieces[1::2]):
        if not term:
            raise UsageError(f"malformed polynomial text: {text!r}")
        c = Fraction(1)
        exps = [0] * table.nvars
        for factor in term.split("*"):
            factor = factor.strip()
            if _NUMBER.match(factor):
                c *= Fraction(factor)
                continue
            match = _FACTOR.match(factor)
            if not match or match.group(1) not in table.index:
                raise UsageError(f"unknown factor {factor!r}")
            exps[table.index[match.group(1)]] += int(match.group(2) or 1)
        if sign == "-":
            c = -c
        code = table.encode(exps)
        coeffs[code] = coeffs.get(code, 0) + c
    return Polynomial(order, coeffs)


# determinants --------------------------------------------------------------


def determinant(matrix, order=None):
    """Cofactor expansion along the first row.

    Entries may be Polynomials or plain numbers (numbers need ``order``).
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise UsageError("determinant needs a square matrix")
    if order is None:
        for row in matrix:
            for entry in row:
                if isinstance(entry, Polynomial):
                    order = entry.order
                    break
            if order is not None:
                break
    if order is None:
        raise UsageError("cannot infer the polynomial ring from a numeric matrix")
    rows = [[_lift(order, e) for e in row] for row in matrix]
    return _cofactor(rows, order)


def _lift(order, entry):
    if isinstance(entry, Polynomial):
        if entry.order != order:
            raise UsageError("matrix entries use different variable tables")
        return entry
    return Polynomial(order, {0: entry})


def _cofactor(rows, order):
    size = len(rows)
    if size == 0:
        return Polynomial.constant(order, 1)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Polynomial.zero(order)
    for j, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _cofactor(minor, order)
        total = total - term if j % 2 else total + term
    return total

