"""GL(g) weight combinatorics at the boundary.

Dominant weights, duals, branching to GL(g-1), tensoring with exterior
powers of the dual standard representation, and the telescoping formula
for the alternating direct image.  Virtual bundles are finite signed sums
of (weight, twist) pairs with exact integer coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


def is_dominant(v: Sequence[int]) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


@dataclass(frozen=True)
class GlWeight:
    """Weakly decreasing integer vector; the empty weight is allowed."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not is_dominant(self.entries):
            raise ValueError(f"weight {self.entries} is not weakly decreasing")

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "W(" + ",".join(str(a) for a in self.entries) + ")"

    def dual(self) -> "GlWeight":
        """Reverse and negate (conjugation by the longest element of S_g)."""
        return GlWeight(tuple(-a for a in reversed(self.entries)))


def dual_weight(mu: GlWeight) -> GlWeight:
    return mu.dual()


def branch(mu: GlWeight) -> list[GlWeight]:
    """All GL(g-1) weights interlacing mu, in lexicographic order."""
    a = mu.entries
    if len(a) == 0:
        raise ValueError("cannot branch the empty weight")
    ranges = [range(a[i + 1], a[i] + 1) for i in range(len(a) - 1)]
    return [GlWeight(b) for b in itertools.product(*ranges)]


def straighten(v: Sequence[int]):
    """Straighten a virtual character index via the rho-shifted sort.

    Returns None when v + rho has a repeated entry (the zero character),
    otherwise (sign, GlWeight) with the sign of the sorting permutation.
    """
    n = len(v)
    shifted = [x + (n - 1 - i) for i, x in enumerate(v)]
    if len(set(shifted)) != n:
        return None
    order = sorted(range(n), key=lambda i: -shifted[i])
    # sign of the permutation taking `shifted` to strictly decreasing order
    sign = 1
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        cyc, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = order[j]
            cyc += 1
        if cyc % 2 == 0:
            sign = -sign
    sorted_shifted = sorted(shifted, reverse=True)
    weight = tuple(x - (n - 1 - i) for i, x in enumerate(sorted_shifted))
    return sign, GlWeight(weight)


class VirtualBundle:
    """Integer-linear combination of (GlWeight, twist) pairs."""

    __slots__ = ("genus", "_terms")

    def __init__(self, genus: int, terms: Mapping[tuple[GlWeight, int], int] = ()):
        self.genus = genus
        clean = {}
        for (wt, twist), c in dict(terms).items():
            if len(wt) != genus:
                raise ValueError("weight length must equal the bundle genus")
            if c:
                clean[(wt, twist)] = c
        self._terms = clean

    def items(self) -> list[tuple[tuple[GlWeight, int], int]]:
        return sorted(
            self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0].entries)
        )

    def coeff(self, wt: GlWeight, twist: int = 0) -> int:
        return self._terms.get((wt, twist), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        return (
            isinstance(other, VirtualBundle)
            and self.genus == other.genus
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.genus, frozenset(self._terms.items())))

    def __add__(self, other: "VirtualBundle") -> "VirtualBundle":
        if self.genus != other.genus:
            raise ValueError("genus mismatch")
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) + c
        return VirtualBundle(self.genus, terms)

    def __neg__(self):
        return VirtualBundle(self.genus, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n: int) -> "VirtualBundle":
        return VirtualBundle(self.genus, {k: n * c for k, c in self._terms.items()})

    def twisted(self, t: int) -> "VirtualBundle":
        return VirtualBundle(
            self.genus, {(wt, tw + t): c for (wt, tw), c in self._terms.items()}
        )

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (wt, twist), c in self.items():
            body = f"W({','.join(str(a) for a in wt.entries)})"
            if twist:
                body += f"<nu^{twist}>"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __repr__ = __str__


def wedge_dual_tensor(mu: GlWeight, k: int) -> VirtualBundle:
    """mu tensored with the k-th exterior power of the dual standard rep,
    as a signed sum of dominant weights.

    Computed through the straightening recursion; the simpler rule
    (subtract 1 from k entries, drop non-dominant results) is asserted to
    agree on every call.
    """
    n = len(mu)
    if not 0 <= k <= n:
        raise ValueError("k out of range")
    via_straighten: dict[tuple[GlWeight, int], int] = {}
    via_deletion: dict[tuple[GlWeight, int], int] = {}
    for subset in itertools.combinations(range(n), k):
        v = list(mu.entries)
        for i in subset:
            v[i] -= 1
        st = straighten(v)
        if st is not None:
            sign, wt = st
            key = (wt, 0)
            via_straighten[key] = via_straighten.get(key, 0) + sign
        if is_dominant(v):
            key = (GlWeight(tuple(v)), 0)
            via_deletion[key] = via_deletion.get(key, 0) + 1
    result = VirtualBundle(n, via_straighten)
    if result != VirtualBundle(n, via_deletion):
        raise AssertionError(
            f"straightening and deletion-rule results differ for mu={mu}, k={k}"
        )
    return result


def telescope_closed(a: GlWeight) -> VirtualBundle:
    """Closed form of the alternating direct image: g terms, k-th obtained
    by dropping a_k and lowering the tail, with sign (-1)^(g-k)."""
    g = len(a)
    if g == 0:
        raise ValueError("need a nonempty weight")
    terms: dict[tuple[GlWeight, int], int] = {}
    for k in range(1, g + 1):
        wt = GlWeight(
            tuple(a.entries[: k - 1]) + tuple(x - 1 for x in a.entries[k:])
        )
        terms[(wt, 0)] = terms.get((wt, 0), 0) + (-1) ** (g - k)
    return VirtualBundle(g - 1, terms)


def telescope_bruteforce(a: GlWeight) -> VirtualBundle:
    """Independent oracle: branch to GL(g-1), then tensor with the
    alternating sum of exterior powers of the dual standard rep."""
    g = len(a)
    if g == 0:
        raise ValueError("need a nonempty weight")
    total = VirtualBundle(g - 1)
    for b in branch(a):
        for k in range(g):
            term = wedge_dual_tensor(b, k)
            total = total + (term if k % 2 == 0 else -term)
    return total


def deletion_parity(a: GlWeight, k: int) -> bool:
    """GL(1,Z) parity filter for the k-th telescope term."""
    g = len(a)
    if not 1 <= k <= g:
        raise ValueError("k out of range")
    s = sum(a.entries[: k - 1]) + sum(x - 1 for x in a.entries[k:])
    return s % 2 == 0


def dominant_weights(g: int, lo: int, hi: int) -> Iterable[GlWeight]:
    """All dominant length-g weights with entries in [lo, hi]."""
    for c in itertools.combinations_with_replacement(range(hi, lo - 1, -1), g):
        yield GlWeight(c)
