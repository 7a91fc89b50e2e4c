"""Division with remainder, S-polynomials, Buchberger's criterion and completion."""

from __future__ import annotations

import heapq
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .algebra import Monomial, Polynomial, divide_coefficient, normalize_coefficient
from .errors import CapExceeded, UsageError

log = logging.getLogger(__name__)


@dataclass
class ReductionTrace:
    quotients: list  # (index into the divisor list, multiplier Polynomial)
    remainder: Polynomial

    def reconstruct(self, divisors):
        total = self.remainder
        for i, h in self.quotients:
            total = total + h * divisors[i]
        return total


@dataclass
class GBCheck:
    ok: bool
    witness: tuple | None = None  # (i, j, nonzero remainder)
    checked: int = 0
    skipped: int = 0

    def __bool__(self):
        return self.ok


@dataclass
class Caps:
    max_basis: int = 2000
    max_degree: int = 40
    max_pairs: int = 200_000

    def __post_init__(self):
        if min(self.max_basis, self.max_degree, self.max_pairs) <= 0:
            raise UsageError("resource caps must be positive")


@dataclass
class CompletionStats:
    reduced: int = 0
    zero: int = 0
    product_skips: int = 0
    chain_skips: int = 0
    added: list = field(default_factory=list)


class MonomialIdeal:
    """Minimal monomial generators, kept sorted descending."""

    def __init__(self, table, codes):
        self.table = table
        self.gens = minimalize(table, codes)

    @classmethod
    def from_monomials(cls, monomials):
        monomials = list(monomials)
        if not monomials:
            raise UsageError("cannot infer a variable table from no monomials")
        return cls(monomials[0].table, [m.code for m in monomials])

    def monomials(self):
        return [Monomial(self.table, c) for c in self.gens]

    def contains(self, code):
        return any(self.table.divides(g, code) for g in self.gens)

    def is_squarefree(self):
        return all(Monomial(self.table, g).is_squarefree() for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.table == other.table and self.gens == other.gens

    def __repr__(self):
        return f"MonomialIdeal({[str(m) for m in self.monomials()]})"


def minimalize(table, codes):
    """Drop generators divisible by another generator; sort descending."""
    key = table.key
    # ascending degree so that any divisor is seen before its multiples
    ordered = sorted(set(codes), key=lambda c: (table.degree(c), -key(c)))
    kept = []
    for c in ordered:
        if not any(table.divides(g, c) for g in kept):
            kept.append(c)
    return sorted(kept, key=key, reverse=True)


def _check_shared(polys):
    order = None
    for p in polys:
        if order is None:
            order = p.order
        elif p.order != order:
            raise UsageError("generators live over different variable tables")
    return order


def _divisor_data(table, polys):
    guard, var_mask = table.guard, table.var_mask
    out = []
    for p in polys:
        lm = p.lm_code
        tail = [(m, c) for m, c in p.coeffs.items() if m != lm]
        out.append((lm & var_mask, lm, p.lc, tail))
    return guard, out


def _reduce(table, coeffs, divisors, guard, strategy="first", quotients=None):
    """Full reduction of ``coeffs`` (consumed) against prepared divisors.

    Always cancels the largest reducible monomial of the current partial
    remainder; ``strategy`` picks the smallest ('first') or largest ('last')
    divisor index among those whose leading monomial divides it.
    """
    key = table.key
    heap = [(-key(m), m) for m in coeffs]
    heapq.heapify(heap)
    queued = set(coeffs)
    remainder = {}
    order = range(len(divisors)) if strategy == "first" else range(len(divisors) - 1, -1, -1)
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = coeffs.pop(m, None)
        if c is None:
            continue
        mg = m | guard
        hit = -1
        for i in order:
            dvars = divisors[i][0]
            if (mg - dvars) & guard == guard:
                hit = i
                break
        if hit < 0:
            remainder[m] = normalize_coefficient(c)
            continue
        _, lm, lc, tail = divisors[hit]
        q = divide_coefficient(c, lc)
        shift = m - lm
        if quotients is not None:
            qd = quotients.setdefault(hit, {})
            v = qd.get(shift, 0) + q
            if v:
                qd[shift] = v
            else:
                del qd[shift]
        for mt, ct in tail:
            nm = mt + shift
            nv = coeffs.get(nm, 0) - q * ct
            if nv:
                coeffs[nm] = nv
                if nm not in queued:
                    queued.add(nm)
                    heapq.heappush(heap, (-key(nm), nm))
            else:
                coeffs.pop(nm, None)
    return remainder


def normal_form(f, G, strategy="first", trace=True):
    """Reduce ``f`` against the list ``G``; returns a :class:`ReductionTrace`."""
    G = list(G)
    order = _check_shared([f] + G)
    if order is None:
        raise UsageError("nothing to reduce")
    if any(g.is_zero() for g in G):
        raise UsageError("divisors must be nonzero")
    table = f.table
    guard, divisors = _divisor_data(table, G)
    quotients = {} if trace else None
    rem = _reduce(table, dict(f.coeffs), divisors, guard, strategy, quotients)
    qs = []
    if trace:
        for i in sorted(quotients):
            h = Polynomial(order, quotients[i])
            if h:
                qs.append((i, h))
    return ReductionTrace(qs, Polynomial._raw(order, rem))


def remainder(f, G, strategy="first"):
    return normal_form(f, G, strategy=strategy, trace=False).remainder


def _s_coeffs(f, g):
    table = f.table
    lf, lg = f.lm_code, g.lm_code
    t = table.gcd(lf, lg)
    uf, ug = lg - t, lf - t  # lm(g)/t multiplies f, lm(f)/t multiplies g
    cf, cg = g.lc, f.lc
    out = {}
    for m, c in f.coeffs.items():
        out[m + uf] = c * cf
    for m, c in g.coeffs.items():
        nm = m + ug
        v = out.get(nm, 0) - c * cg
        if v:
            out[nm] = v
        else:
            out.pop(nm, None)
    return out


def s_polynomial(f, g):
    """(lt(g)/t) f - (lt(f)/t) g with t = gcd(lm f, lm g)."""
    if f.is_zero() or g.is_zero():
        raise UsageError("S-polynomial of a zero polynomial")
    _check_shared([f, g])
    return Polynomial(f.order, _s_coeffs(f, g))


def _pair_remainder(args):
    polys, i, j = args
    table = polys[0].table
    guard, divisors = _divisor_data(table, polys)
    return _reduce(table, _s_coeffs(polys[i], polys[j]), divisors, guard)


def is_groebner_basis(G, skip_coprime=True, jobs=1):
    """Buchberger's criterion over all pairs i < j in index order."""
    G = list(G)
    if not G:
        raise UsageError("empty generator set")
    order = _check_shared(G)
    if any(g.is_zero() for g in G):
        raise UsageError("generators must be nonzero")
    table = order.table
    pairs = []
    skipped = 0
    for j in range(len(G)):
        for i in range(j):
            if skip_coprime and table.coprime(G[i].lm_code, G[j].lm_code):
                skipped += 1
            else:
                pairs.append((i, j))
    pairs.sort()
    result = GBCheck(True, skipped=skipped)
    if jobs > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            remainders = pool.map(_pair_remainder, [(G, i, j) for i, j in pairs], chunksize=64)
            for (i, j), rem in zip(pairs, remainders):
                result.checked += 1
                if rem:
                    result.ok = False
                    result.witness = (i, j, Polynomial(order, rem))
                    break
        return result
    guard, divisors = _divisor_data(table, G)
    for i, j in pairs:
        rem = _reduce(table, _s_coeffs(G[i], G[j]), divisors, guard)
        result.checked += 1
        if rem:
            result.ok = False
            result.witness = (i, j, Polynomial(order, rem))
            break
    return result


def buchberger_completion(G, caps=None, use_chain=True, stats=None):
    """Extend ``G`` to a Gröbner basis.

    Input elements are kept verbatim; each new element is the normalized
    nonzero remainder of an S-pair.  Pairs are taken smallest lcm degree
    first, ties broken by creation index.  Pairs with coprime leading
    monomials are dropped, and with ``use_chain`` so are pairs settled by
    Buchberger's chain criterion.
    """
    caps = caps or Caps()
    stats = stats if stats is not None else CompletionStats()
    basis = [g for g in G if not g.is_zero()]
    if not basis:
        raise UsageError("empty generator set")
    order = _check_shared(basis)
    table = order.table
    guard, divisors = _divisor_data(table, basis)
    lms = [g.lm_code for g in basis]
    heap = []
    pending = set()
    counter = 0

    def add_pairs(k):
        nonlocal counter
        for i in range(k):
            if table.coprime(lms[i], lms[k]):
                stats.product_skips += 1
                continue
            lcm = table.lcm(lms[i], lms[k])
            heapq.heappush(heap, (table.degree(lcm), counter, i, k, lcm))
            pending.add((i, k))
            counter += 1

    for k in range(len(basis)):
        add_pairs(k)

    while heap:
        _, _, i, j, lcm = heapq.heappop(heap)
        pending.discard((i, j))
        if use_chain and _chain_skip(table, lms, pending, i, j, lcm):
            stats.chain_skips += 1
            continue
        if stats.reduced >= caps.max_pairs:
            raise CapExceeded(f"pair cap {caps.max_pairs} reached with {len(basis)} elements", basis)
        stats.reduced += 1
        rem = _reduce(table, _s_coeffs(basis[i], basis[j]), divisors, guard)
        if not rem:
            stats.zero += 1
            continue
        h = Polynomial._raw(order, rem).normalized()
        if h.total_degree() > caps.max_degree:
            raise CapExceeded(f"degree cap {caps.max_degree} exceeded by a new element", basis)
        if len(basis) >= caps.max_basis:
            raise CapExceeded(f"basis cap {caps.max_basis} reached", basis)
        basis.append(h)
        lms.append(h.lm_code)
        divisors.append(_divisor_data(table, [h])[1][0])
        stats.added.append(len(basis) - 1)
        log.debug("new element %d of degree %d from pair (%d, %d)", len(basis) - 1, h.total_degree(), i, j)
        add_pairs(len(basis) - 1)
    return basis


def _chain_skip(table, lms, pending, i, j, lcm):
    for k, lk in enumerate(lms):
        if k == i or k == j:
            continue
        if not table.divides(lk, lcm):
            continue
        a, b = (i, k) if i < k else (k, i)
        c, d = (j, k) if j < k else (k, j)
        if (a, b) not in pending and (c, d) not in pending:
            return True
    return False


def leading_ideal(G):
    G = [g for g in G if not g.is_zero()]
    if not G:
        raise UsageError("empty generator set")
    table = G[0].table
    return MonomialIdeal(table, [g.lm_code for g in G])
