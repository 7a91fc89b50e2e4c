"""Generators of jet ideals of determinantal varieties and the explicit basis for 2 x n, r = k = 2."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import Monomial, MonomialOrder, Polynomial, determinant, jet_table
from .errors import UsageError

FAMILIES = ("a", "b", "c", "d", "e", "f", "g")


@dataclass(frozen=True)
class JetIdealSpec:
    m: int
    n: int
    r: int
    k: int

    def __post_init__(self):
        if not (1 <= self.m <= self.n):
            raise UsageError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        if not (1 <= self.r <= self.m):
            raise UsageError(f"need 1 <= r <= m, got r={self.r}")
        if self.k < 0:
            raise UsageError(f"jet order must be >= 0, got k={self.k}")


@dataclass(frozen=True)
class Labeled:
    family: str
    index: tuple
    poly: Polynomial


def jet_order(m, n, k):
    return MonomialOrder(jet_table(m, n, k))


class JetMatrix:
    """X(t) with entry (i, j) = sum_s x^(s)_{i,j} t^s, truncated at t^k."""

    def __init__(self, m, n, k, order=None):
        self.m, self.n, self.k = m, n, k
        self.order = order or jet_order(m, n, k)
        table = self.order.table
        self.entries = [
            [
                [Polynomial.variable(self.order, table.var(s, i, j)) for s in range(k + 1)]
                for j in range(1, n + 1)
            ]
            for i in range(1, m + 1)
        ]

    def minor_series(self, rows, cols):
        """Coefficients f_0..f_k of the minor on the given 1-based rows and columns."""
        sub = [[self.entries[i - 1][j - 1] for j in cols] for i in rows]
        return _series_det(sub, self.k, self.order)


def _series_mul(a, b, k, order):
    out = []
    for l in range(k + 1):
        acc = Polynomial.zero(order)
        for s in range(l + 1):
            if a[s] and b[l - s]:
                acc = acc + a[s] * b[l - s]
        out.append(acc)
    return out


def _series_det(rows, k, order):
    size = len(rows)
    if size == 1:
        return list(rows[0][0])
    total = [Polynomial.zero(order) for _ in range(k + 1)]
    for j, entry in enumerate(rows[0]):
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = _series_mul(entry, _series_det(minor, k, order), k, order)
        if j % 2:
            total = [x - y for x, y in zip(total, term)]
        else:
            total = [x + y for x, y in zip(total, term)]
    return total


def labeled_jet_generators(spec):
    """All t-coefficients of all r x r minors of X(t) up to t^k.

    Ordered by row set, then column set, then t-degree.  Zero coefficients are
    kept out; for generic matrices none occur.
    """
    X = JetMatrix(spec.m, spec.n, spec.k)
    out = []
    for rows in combinations(range(1, spec.m + 1), spec.r):
        for cols in combinations(range(1, spec.n + 1), spec.r):
            for l, f in enumerate(X.minor_series(rows, cols)):
                if f:
                    out.append(Labeled(f"f{l}", (rows, cols), f))
    return out


def jet_generators(spec):
    return [g.poly for g in labeled_jet_generators(spec)]


# explicit basis for I^{2,n}_{2,2} -------------------------------------------


class _Vars:
    def __init__(self, order):
        self.order = order
        self.table = order.table

    def __call__(self, letter, i, j):
        layer = "xyz".index(letter)
        return Polynomial.variable(self.order, self.table.var(layer, i, j))


def _col(V, spec, c):
    # spec: sequence of (letter, row) describing one column, or None for 0
    return [V(letter, row, c) if letter else 0 for letter, row in spec]


def _det_columns(V, column_specs, cols):
    matrix_cols = [_col(V, s, c) for s, c in zip(column_specs, cols)]
    rows = [[col[i] for col in matrix_cols] for i in range(len(matrix_cols))]
    return determinant(rows, V.order)


def _det_rows(V, row_specs, cols):
    return determinant([[V(letter, row, c) for c in cols] for letter, row in row_specs], V.order)


class GammaBasis:
    """The families a..g for a 2 x n second-order jet ideal."""

    def __init__(self, n):
        if n < 2:
            raise UsageError(f"need n >= 2 columns, got {n}")
        self.n = n
        self.order = jet_order(2, n, 2)
        self.table = self.order.table
        self.V = _Vars(self.order)
        self.families = {name: {} for name in FAMILIES}
        for idx in indices("a", n):
            self.families["a"][idx] = self.a(*idx)
            self.families["b"][idx] = self.b(*idx)
            self.families["c"][idx] = self.c(*idx)
        for idx in indices("d", n):
            self.families["d"][idx] = self.d(*idx)
            self.families["e"][idx] = self.e(*idx)
        for idx in indices("f", n):
            self.families["f"][idx] = self.f(*idx)
        for idx in indices("g", n):
            self.families["g"][idx] = self.g(*idx)
        for lab in self.labeled():
            expected = expected_lm(self.table, lab.family, lab.index)
            if lab.poly.lm != expected:
                raise AssertionError(f"lm({lab.family}{lab.index}) = {lab.poly.lm}, expected {expected}")

    # formulas, valid for any column indices (repeated columns give 0)

    def a(self, p, q):
        return _det_rows(self.V, [("x", 1), ("x", 2)], (p, q))

    def b(self, p, q):
        return _det_rows(self.V, [("x", 1), ("y", 2)], (p, q)) + _det_rows(self.V, [("y", 1), ("x", 2)], (p, q))

    def c(self, p, q):
        V = self.V
        return (
            _det_rows(V, [("x", 1), ("z", 2)], (p, q))
            + _det_rows(V, [("z", 1), ("x", 2)], (p, q))
            + _det_rows(V, [("y", 1), ("y", 2)], (p, q))
        )

    def d(self, p, q, r):
        V = self.V
        return _det_rows(V, [("x", 2), ("y", 1), ("z", 2)], (p, q, r)) + _det_rows(
            V, [("x", 2), ("z", 1), ("y", 2)], (p, q, r)
        )

    def e(self, p, q, r):
        V = self.V
        return _det_rows(V, [("x", 1), ("y", 1), ("z", 2)], (p, q, r)) + _det_rows(
            V, [("z", 1), ("y", 1), ("x", 2)], (p, q, r)
        )

    def f(self, l, p, q, r):
        first = [(None, 0), ("x", 2), ("y", 1), ("y", 2)]
        rest = [("x", 2), ("y", 2), ("z", 1), ("z", 2)]
        return _det_columns(self.V, [first, rest, rest, rest], (l, p, q, r))

    def g(self, l, p, q, r):
        return _det_rows(self.V, [("x", 2), ("y", 2), ("z", 2), ("z", 1)], (l, p, q, r))

    def labeled(self):
        return [
            Labeled(name, idx, poly)
            for name in FAMILIES
            for idx, poly in sorted(self.families[name].items())
        ]

    def polynomials(self):
        return [lab.poly for lab in self.labeled()]

    def __len__(self):
        return sum(len(fam) for fam in self.families.values())


def gamma_basis(n):
    return GammaBasis(n)


def indices(family, n):
    cols = range(1, n + 1)
    if family in ("a", "b", "c"):
        return list(combinations(cols, 2))
    if family in ("d", "e"):
        return list(combinations(cols, 3))
    if family == "f":
        return [(l, p, q, r) for p, q, r in combinations(cols, 3) for l in range(1, p + 1)]
    if family == "g":
        return list(combinations(cols, 4))
    raise UsageError(f"unknown family {family!r}")


_LM_TABLE = {
    "a": lambda p, q: [("x", 1, q), ("x", 2, p)],
    "b": lambda p, q: [("x", 1, p), ("y", 2, q)],
    "c": lambda p, q: [("y", 1, q), ("y", 2, p)],
    "d": lambda p, q, r: [("x", 2, p), ("y", 1, q), ("z", 2, r)],
    "e": lambda p, q, r: [("x", 1, p), ("y", 1, q), ("z", 2, r)],
    "f": lambda l, p, q, r: [("x", 2, p), ("y", 1, l), ("y", 2, q), ("z", 2, r)],
    "g": lambda l, p, q, r: [("x", 2, l), ("y", 2, p), ("z", 1, r), ("z", 2, q)],
}


def expected_lm(table, family, index):
    """The printed leading monomial of a basis element."""
    exps = [0] * table.nvars
    for letter, row, col in _LM_TABLE[family](*index):
        exps[table.var("xyz".index(letter), row, col)] += 1
    return Monomial.from_exponents(table, exps)


# membership identities -------------------------------------------------------


def identity_rhs(G, family, index, flip=None):
    """Right-hand side expressing d, e, f or g through a, b, c (and d).

    ``flip`` negates the summand at that position; used to check that the
    comparison actually detects a wrong identity.
    """
    V = G.V

    def z2(j):
        return V("z", 2, j)

    def y2(j):
        return V("y", 2, j)

    def y1(j):
        return V("y", 1, j)

    def x2(j):
        return V("x", 2, j)

    if family == "d":
        p, q, r = index
        terms = [
            -z2(p) * G.b(q, r), z2(q) * G.b(p, r), -z2(r) * G.b(p, q),
            -y2(p) * G.c(q, r), y2(q) * G.c(p, r), -y2(r) * G.c(p, q),
        ]
    elif family == "e":
        p, q, r = index
        terms = [-y1(p) * G.c(q, r), y1(q) * G.c(p, r), -y1(r) * G.c(p, q)]
    elif family == "f":
        l, p, q, r = index
        terms = [
            z2(l) * z2(p) * G.a(q, r), -z2(l) * z2(q) * G.a(p, r), z2(l) * z2(r) * G.a(p, q),
            -z2(q) * x2(p) * G.c(l, r), z2(r) * x2(p) * G.c(l, q), -z2(r) * x2(q) * G.c(l, p),
            y2(l) * G.d(p, q, r),
        ]
    elif family == "g":
        l, p, q, r = index

        def w(i, j):
            return z2(i) * y2(j) - y2(i) * z2(j)

        terms = [
            w(q, r) * G.c(l, p), -w(p, r) * G.c(l, q), w(l, r) * G.c(p, q),
            w(p, q) * G.c(l, r), -w(l, q) * G.c(p, r), w(l, p) * G.c(q, r),
        ]
    else:
        raise UsageError(f"no identity for family {family!r}")
    if flip is not None:
        terms[flip] = -terms[flip]
    total = Polynomial.zero(G.order)
    for t in terms:
        total = total + t
    return total


@dataclass(frozen=True)
class IdentityResult:
    family: str
    index: tuple
    ok: bool


def verify_prop31(n, gamma=None):
    """Check each of the four membership identities at every admissible index."""
    G = gamma or gamma_basis(n)
    results = []
    for family in ("d", "e", "f", "g"):
        for idx in indices(family, n):
            lhs = G.families[family][idx]
            results.append(IdentityResult(family, idx, lhs == identity_rhs(G, family, idx)))
    return results


def corrected_f_identity(G, index):
    """An expansion of f_{l,p,q,r} through a, c and d that does hold.

    Differs from the printed one in the signs of the a-terms and in using a
    full 2 x 2 bracket in z_2 and x_2 for each c-term.
    """
    l, p, q, r = index
    V = G.V

    def w(i, j):
        return V("z", 2, i) * V("x", 2, j) - V("z", 2, j) * V("x", 2, i)

    zl = V("z", 2, l)
    return (
        -zl * V("z", 2, p) * G.a(q, r) + zl * V("z", 2, q) * G.a(p, r) - zl * V("z", 2, r) * G.a(p, q)
        + w(p, q) * G.c(l, r) - w(p, r) * G.c(l, q) + w(q, r) * G.c(l, p)
        + V("y", 2, l) * G.d(p, q, r)
    )
