"""Hilbert series as rational functions, closed forms, and a standard-monomial oracle."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from math import comb

from .errors import CapExceeded, UsageError


class InternalError(AssertionError):
    """An identity guaranteed by theory failed; signals a bug."""


# univariate integer polynomials as coefficient lists, lowest degree first


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_add(a, b, sign=1):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += sign * y
    return _trim(out)


def poly_det(matrix):
    size = len(matrix)
    if size == 0:
        return [1]
    if size == 1:
        return _trim(matrix[0][0])
    total = []
    for j, entry in enumerate(matrix[0]):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        total = poly_add(total, poly_mul(entry, poly_det(minor)), -1 if j % 2 else 1)
    return total


def series_coefficients(numerator, denom_pow, D):
    """Taylor coefficients 0..D of N(z) / (1 - z)^d."""
    out = []
    for k in range(D + 1):
        if denom_pow == 0:
            out.append(numerator[k] if k < len(numerator) else 0)
            continue
        total = 0
        for i, c in enumerate(numerator[: k + 1]):
            total += c * comb(k - i + denom_pow - 1, denom_pow - 1)
        out.append(total)
    return out


@dataclass(frozen=True)
class HilbertSeries:
    """z^shift * N(z) / (1 - z)^denom_pow, kept in canonical form."""

    shift: int
    numerator: tuple
    denom_pow: int

    @classmethod
    def make(cls, numerator, denom_pow=0, shift=0):
        N = _trim(numerator)
        if denom_pow < 0:
            raise UsageError("denominator power must be non-negative")
        if not N:
            return cls(0, (), 0)
        while N[0] == 0:
            N.pop(0)
            shift += 1
        while denom_pow > 0 and sum(N) == 0:
            # N = (1 - z) Q with Q_i = N_0 + ... + N_i
            Q, acc = [], 0
            for c in N[:-1]:
                acc += c
                Q.append(acc)
            N = _trim(Q)
            denom_pow -= 1
        return cls(shift, tuple(N), denom_pow)

    def canonical(self):
        return HilbertSeries.make(list(self.numerator), self.denom_pow, self.shift)

    def __mul__(self, other):
        return HilbertSeries.make(
            poly_mul(list(self.numerator), list(other.numerator)),
            self.denom_pow + other.denom_pow,
            self.shift + other.shift,
        )

    def __pow__(self, e):
        out = HilbertSeries.make([1])
        for _ in range(e):
            out = out * self
        return out

    def expand(self, D):
        """Coefficients of z^0..z^D."""
        if self.shift < 0:
            raise UsageError("series has terms of negative degree")
        body = series_coefficients(list(self.numerator), self.denom_pow, D - self.shift) if D >= self.shift else []
        return [0] * min(self.shift, D + 1) + body

    def as_dict(self):
        return {"numerator": list(self.numerator), "denom_pow": self.denom_pow, "shift": self.shift}

    def __str__(self):
        num = " + ".join(
            f"{c}" if i == 0 else (f"{c}*z" if i == 1 else f"{c}*z^{i}") for i, c in enumerate(self.numerator) if c
        ) or "0"
        head = f"z^{self.shift}*" if self.shift else ""
        return f"{head}({num})/(1-z)^{self.denom_pow}"


@dataclass
class HilbertFunction:
    values: list

    @property
    def D(self):
        return len(self.values) - 1


def series_from_shelling(h, d):
    return HilbertSeries.make(list(h), d)


def closed_form_conca_herzog(m, n, r):
    """Hilbert series of the variety of m x n matrices of rank <= r."""
    if not (0 <= r <= m <= n):
        raise UsageError(f"need 0 <= r <= m <= n, got m={m}, n={n}, r={r}")
    entries = [
        [[comb(m - i, k) * comb(n - j, k) for k in range(m + 1)] for j in range(1, r + 1)]
        for i in range(1, r + 1)
    ]
    det = poly_det(entries)
    low = comb(r, 2)
    if any(det[:low]):
        raise InternalError(f"determinant not divisible by z^{low} for (m, n, r) = ({m}, {n}, {r})")
    series = HilbertSeries.make(det[low:], r * (m + n - r))
    if series.shift < 0:
        raise InternalError("negative shift after canonicalization")
    return series


def closed_form_jets(which, n, m=None):
    """The printed closed forms: 'eq2' (needs m), 'eq3' and 'thm61'."""
    if which == "eq2":
        if m is None or not (1 <= m <= n):
            raise UsageError("eq2 needs 1 <= m <= n")
        base = HilbertSeries.make([comb(m - 1, k) * comb(n - 1, k) for k in range(m)], m + n - 1)
        return base ** 2
    if which == "eq3":
        if n < 3:
            raise UsageError("eq3 needs n >= 3")
        base = HilbertSeries.make([1, n - 2, (n - 1) * (n - 2) // 2], 2 * n + 2)
        return base ** 2
    if which == "thm61":
        if n < 2:
            raise UsageError("thm61 needs n >= 2")
        return HilbertSeries.make([1, n - 1], n + 1) ** 3
    raise UsageError(f"unknown closed form {which!r}")


# standard-monomial oracle --------------------------------------------------------


def _minimal(gens):
    gens = sorted(set(gens), key=lambda g: sum(e for _, e in g))
    kept = []
    for g in gens:
        gd = dict(g)
        if not any(all(gd.get(v, 0) >= e for v, e in h) for h in kept):
            kept.append(g)
    return frozenset(kept)


class _Oracle:
    def __init__(self, max_calls):
        self.memo = {}
        self.calls = 0
        self.max_calls = max_calls

    def free(self, nv, D):
        if nv == 0:
            return [1] + [0] * D
        return [comb(d + nv - 1, nv - 1) for d in range(D + 1)]

    def hf(self, gens, nv, D):
        if D < 0:
            return []
        gens = frozenset(g for g in gens if sum(e for _, e in g) <= D)
        if any(not g for g in gens):
            return [0] * (D + 1)
        if not gens:
            return self.free(nv, D)
        key = (gens, nv, D)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.calls += 1
        if self.calls > self.max_calls:
            raise CapExceeded(f"oracle exceeded {self.max_calls} recursive calls")
        counts = {}
        for g in gens:
            for v, _ in g:
                counts[v] = counts.get(v, 0) + 1
        if all(c == 1 for c in counts.values()):
            # pairwise coprime generators: prod (1 - z^deg) / (1 - z)^nv
            num = [1]
            for g in gens:
                deg = sum(e for _, e in g)
                num = poly_mul(num, [1] + [0] * (deg - 1) + [-1])
            out = series_coefficients(num, nv, D)
        else:
            x = min(counts, key=lambda v: (-counts[v], v))
            without = [g for g in gens if all(v != x for v, _ in g)]
            colon = []
            for g in gens:
                parts = []
                for v, e in g:
                    if v == x:
                        if e > 1:
                            parts.append((v, e - 1))
                    else:
                        parts.append((v, e))
                colon.append(tuple(parts))
            a = self.hf(_minimal(without), nv - 1, D)
            b = self.hf(_minimal(colon), nv, D - 1)
            out = [a[0]] + [a[d] + b[d - 1] for d in range(1, D + 1)]
        self.memo[key] = out
        return out


def hilbert_function_oracle(ideal, D, max_calls=5_000_000):
    """HF(0..D) of K[vars]/I by counting standard monomials of the monomial ideal I."""
    if D < 0:
        raise UsageError("truncation degree must be >= 0")
    table = ideal.table
    gens = [tuple(sorted(m.sparse.items())) for m in ideal.monomials()]
    oracle = _Oracle(max_calls)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20_000))
    try:
        values = oracle.hf(_minimal(gens), table.nvars, D)
    finally:
        sys.setrecursionlimit(limit)
    return HilbertFunction(values)


def brute_force_hilbert_function(ideal, D):
    """Enumerate every monomial up to degree D; only for tiny rings."""
    from itertools import combinations_with_replacement

    table = ideal.table
    out = []
    for d in range(D + 1):
        count = 0
        for combo in combinations_with_replacement(range(table.nvars), d):
            exps = [0] * table.nvars
            for i in combo:
                exps[i] += 1
            if not ideal.contains(table.encode(exps)):
                count += 1
        out.append(count)
    return HilbertFunction(out)


@dataclass
class Comparison:
    equal: bool
    divergence: int | None = None  # first degree where the coefficients differ
    lhs: list = field(default_factory=list)
    rhs: list = field(default_factory=list)

    def __bool__(self):
        return self.equal


def series_compare(A, B, D=None):
    """Exact comparison of two series, or of A's expansion against Hilbert-function values."""
    if isinstance(B, HilbertSeries) and D is None:
        return Comparison(A.canonical() == B.canonical())
    if isinstance(B, HilbertSeries):
        rhs = B.expand(D)
    else:
        rhs = list(B.values)
        D = len(rhs) - 1 if D is None else min(D, len(rhs) - 1)
        rhs = rhs[: D + 1]
    lhs = A.expand(D)
    for d, (x, y) in enumerate(zip(lhs, rhs)):
        if x != y:
            return Comparison(False, d, lhs, rhs)
    return Comparison(True, None, lhs, rhs)


# Conjecture checker ----------------------------------------------------------------


@dataclass
class ConjectureReport:
    m: int
    n: int
    r: int
    k: int
    D: int
    status: str  # 'agree', 'disagree' or 'capped'
    hf: list = field(default_factory=list)
    predicted: list = field(default_factory=list)
    divergence: int | None = None
    basis_size: int | None = None
    leading_gens: int | None = None
    note: str = ""


def check_conjecture(m, n, r, k, D=8, caps=None):
    """Compare HF of the jet ideal with the (k+1)-th power of the classical series."""
    from .groebner import buchberger_completion, leading_ideal
    from .jets import JetIdealSpec, jet_generators

    spec = JetIdealSpec(m, n, r, k)
    predicted_series = closed_form_conca_herzog(m, n, r - 1) ** (k + 1)
    predicted = predicted_series.expand(D)
    report = ConjectureReport(m, n, r, k, D, "capped", predicted=predicted)
    try:
        basis = buchberger_completion(jet_generators(spec), caps)
    except CapExceeded as exc:
        partial = exc.partial or []
        report.basis_size = len(partial)
        report.note = f"Groebner completion capped ({exc}); no verdict"
        return report
    L = leading_ideal(basis)
    report.basis_size = len(basis)
    report.leading_gens = len(L)
    try:
        hf = hilbert_function_oracle(L, D)
    except CapExceeded as exc:
        report.note = f"oracle capped ({exc}); no verdict"
        return report
    report.hf = hf.values
    cmp = series_compare(predicted_series, hf, D)
    report.status = "agree" if cmp.equal else "disagree"
    report.divergence = cmp.divergence
    return report
