"""The *-ordering on facets of Delta_0, shelling verification and h-vectors."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UsageError
from .srcomplex import FAMILY_TAGS, tagged_delta0_facets

STAR_FAMILY_RANK = {"F": 0, "E": 1, "D": 2, "C": 3, "A": 4}


@dataclass(frozen=True)
class TaggedFacet:
    family: str | None
    params: tuple | None
    mask: int


def star_compare(P, Q):
    """-1, 0, 1 for P < Q, P == Q, P > Q under the *-ordering."""
    if P.family is None or Q.family is None:
        raise UsageError("the *-ordering needs family-tagged facets")
    kp = (STAR_FAMILY_RANK[P.family], P.mask)
    kq = (STAR_FAMILY_RANK[Q.family], Q.mask)
    return (kp > kq) - (kp < kq)


def star_key(P):
    if P.family is None:
        raise UsageError("the *-ordering needs family-tagged facets")
    return STAR_FAMILY_RANK[P.family], P.mask


@dataclass
class ShellingOrder:
    facets: list  # TaggedFacet, F_1 first

    @property
    def masks(self):
        return [F.mask for F in self.facets]


def star_ordered_delta0(n):
    return ShellingOrder([TaggedFacet(tag, params, mask) for tag, params, mask in tagged_delta0_facets(n)])


@dataclass
class ShellingVerdict:
    valid: bool
    witness: tuple | None = None  # (i, j), 0-based, i < j
    reason: str = ""

    def __bool__(self):
        return self.valid


def restriction_sets(masks):
    """c(F_t): vertices v of F_t with F_t - F_s = {v} for some s < t."""
    out = []
    for t, Ft in enumerate(masks):
        c = 0
        for s in range(t):
            diff = Ft & ~masks[s]
            if diff and diff & (diff - 1) == 0:
                c |= diff
        out.append(c)
    return out


def verify_shelling(order):
    """Standard shelling condition, checked through restriction sets."""
    masks = order.masks if isinstance(order, ShellingOrder) else list(order)
    if not masks:
        return ShellingVerdict(True)
    sizes = {bin(m).count("1") for m in masks}
    if len(sizes) > 1:
        return ShellingVerdict(False, reason=f"not pure: facet sizes {sorted(sizes)}")
    if len(set(masks)) != len(masks):
        return ShellingVerdict(False, reason="repeated facet")
    c = restriction_sets(masks)
    for j in range(1, len(masks)):
        for i in range(j):
            if not (masks[j] & ~masks[i]) & c[j]:
                return ShellingVerdict(False, (i, j), f"F_{j + 1} - F_{i + 1} misses c(F_{j + 1})")
    return ShellingVerdict(True)


def violates_definition(masks, i, j):
    """Direct check that no k < j and v in F_j - F_i give F_j - F_k = {v}."""
    Fj = masks[j]
    allowed = Fj & ~masks[i]
    for k in range(j):
        diff = Fj & ~masks[k]
        if diff and diff & (diff - 1) == 0 and diff & allowed:
            return False
    return True


@dataclass
class HVector:
    h: list
    by_family: dict = field(default_factory=dict)  # tag -> list indexed by j
    restriction: list = field(default_factory=list)


def h_vector(order, check=True):
    if check:
        verdict = verify_shelling(order)
        if not verdict:
            raise UsageError(f"not a shelling: {verdict.reason}")
    masks = order.masks
    c = restriction_sets(masks)
    sizes = [bin(x).count("1") for x in c]
    top = max(sizes, default=0)
    h = [0] * (top + 1)
    by_family = {tag: [0] * 4 for tag in FAMILY_TAGS}
    for F, s in zip(order.facets, sizes):
        h[s] += 1
        if F.family is not None:
            fam = by_family[F.family]
            if s >= len(fam):
                fam.extend([0] * (s + 1 - len(fam)))
            fam[s] += 1
    return HVector(h, by_family, c)


def h_by_family(order):
    return h_vector(order).by_family


def expected_h(n):
    return [1, 3 * (n - 1), 3 * (n - 1) ** 2, (n - 1) ** 3]


def expected_h_by_family(n):
    """Closed forms for h_j(T), j = 1, 2, 3, as printed for the five families."""
    return {
        "A": {1: 0, 2: n * (n - 1) // 2, 3: n * (n - 1) * (2 * n - 1) // 6},
        "C": {1: n, 2: n * (n - 1), 3: n * (n - 1) * (n - 2) // 6},
        "D": {1: 1, 2: (n + 1) * (n - 2) // 2, 3: n * (n - 1) * (n - 2) // 6},
        "E": {1: n - 1, 2: (n - 1) * (n - 2) // 2, 3: n * (n - 1) * (n - 2) // 6},
        "F": {1: n - 3, 2: (n - 2) * (n - 3) // 2, 3: (n - 1) * (n - 2) * (n - 3) // 6},
    }
