"""Kite-chain midden harmonics: box-kite echoes shifted by multiples of 16.

Box-kite vertices never sit on "trident" cells of the doubled tables, so
adding 16k to every index yields another six-assessor family with the same
inner XOR.  Within one harmonic the 12 sail edges still make zero, but each
emanates a vertex of the *base* box-kite rather than its own shifted copy;
and once the chingons admit k = 1..3, the first harmonic anchors sails with
one member from each of the higher two.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .cdp import DEFAULT_LEVEL_CAP, Level
from .zd import (
    Assessor,
    BoxKite,
    DmzEdge,
    STRUT_PAIRS,
    VERTEX_LABELS,
    box_kite,
    dmz_edge,
)

HARMONIC_SHIFT = 16  # sedenion dimension; the midden echoes in steps of it


@dataclass(frozen=True)
class HarmonicFamily:
    """A box-kite's vertices shifted by 16k, labels preserved."""

    base: BoxKite
    k: int
    level: Level
    assessors: tuple[Assessor, ...]  # A..F order

    def vertex(self, label: str) -> Assessor:
        return self.assessors[VERTEX_LABELS.index(label)]

    def labeled(self) -> tuple[tuple[str, Assessor], ...]:
        return tuple(zip(VERTEX_LABELS, self.assessors))

    def strut_pair_rows(self) -> tuple[tuple[Assessor, Assessor], ...]:
        """(A, F), (B, E), (C, D) pairs, the layout the rosters print in."""
        return tuple(
            (self.vertex(p), self.vertex(q)) for p, q in STRUT_PAIRS
        )


def harmonic_family(
    bk: BoxKite, k: int, shift: int = HARMONIC_SHIFT, cap: int = DEFAULT_LEVEL_CAP
) -> HarmonicFamily:
    """Shift all six vertices by shift*k (k = 0 reproduces the base)."""
    if k < 0:
        raise ValueError(f"harmonic number must be >= 0, got {k}")
    offset = shift * k
    top = max(v.hi for v in bk.vertices) + offset
    n = max(bk.level.n, top.bit_length())
    if n > cap:
        raise ValueError(f"harmonic k={k} needs level {n}, beyond cap {cap}")
    level = Level(n, cap)
    shifted = tuple(
        Assessor(v.lo + offset, v.hi + offset, level) for v in bk.vertices
    )
    return HarmonicFamily(bk, k, level, shifted)


def harmonic_emanation(a: Assessor, b: Assessor) -> Optional[Assessor]:
    """Emanation of two same-family harmonic assessors.

    For the 12 sail edges the DMZ exists and the emanated assessor is a
    vertex of the base-line box-kite (both indices below the shift); strut
    opposites yield no edge and return None.
    """
    edge = dmz_edge(a, b)
    return None if edge is None else edge.emanated


def family_emanations(
    family: HarmonicFamily,
) -> tuple[tuple[str, str, Assessor], ...]:
    """DMZ emanations of all 12 edges of one harmonic family."""
    out = []
    for (la, va), (lb, vb) in combinations(family.labeled(), 2):
        edge = dmz_edge(va, vb)
        if edge is not None:
            out.append((la, lb, edge.emanated))
    return tuple(out)


@dataclass(frozen=True)
class CrossHarmonicSail:
    """A pairwise-DMZ triple with one member from each harmonic k = 1, 2, 3."""

    first: Assessor
    second: Assessor
    third: Assessor

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return (self.first.pair, self.second.pair, self.third.pair)


@dataclass(frozen=True)
class CrossHarmonicSails:
    base: BoxKite
    families: tuple[HarmonicFamily, HarmonicFamily, HarmonicFamily]
    # anchor assessor (k=1) -> its sails, sorted by second-member lo.
    by_anchor: tuple[tuple[Assessor, tuple[CrossHarmonicSail, ...]], ...]

    def sails_for(self, pair: tuple[int, int]) -> tuple[CrossHarmonicSail, ...]:
        for anchor, sails in self.by_anchor:
            if anchor.pair == pair:
                return sails
        raise KeyError(f"no first-harmonic assessor {pair}")


def cross_harmonic_sails(bk: BoxKite, cap: int = DEFAULT_LEVEL_CAP) -> CrossHarmonicSails:
    """For every first-harmonic assessor, the sails pairing it with one
    second- and one third-harmonic assessor, all three pairwise DMZ."""
    if cap < 6:
        raise ValueError("cross-harmonic sails need the chingons (cap >= 6)")
    fams = tuple(harmonic_family(bk, k, cap=cap) for k in (1, 2, 3))
    level = fams[-1].level
    lifted = [
        tuple(Assessor(v.lo, v.hi, level) for v in fam.assessors) for fam in fams
    ]

    def is_dmz(x: Assessor, y: Assessor) -> bool:
        return dmz_edge(x, y) is not None

    by_anchor = []
    for anchor in sorted(lifted[0]):
        sails = []
        for second in lifted[1]:
            if not is_dmz(anchor, second):
                continue
            for third in lifted[2]:
                if is_dmz(anchor, third) and is_dmz(second, third):
                    sails.append(CrossHarmonicSail(anchor, second, third))
        by_anchor.append((anchor, tuple(sorted(sails, key=lambda s: s.second.pair))))
    return CrossHarmonicSails(bk, fams, tuple(by_anchor))


def kite_chain_assessors(level: Level) -> tuple[Assessor, ...]:
    """Every base box-kite vertex plus all harmonics fitting the level."""
    out = []
    max_k = (level.dim // HARMONIC_SHIFT) - 1 if level.n >= 4 else 0
    for strut in range(1, 8):
        bk = box_kite(strut)
        for k in range(0, max_k + 1):
            fam = harmonic_family(bk, k, cap=level.n)
            for v in fam.assessors:
                out.append(Assessor(v.lo, v.hi, level))
    return tuple(sorted(out))


def kite_chain_diagonal_count(level: Level) -> int:
    """ZD diagonals carried by the kite-chain midden at the given level:
    two per assessor that makes zero with another chain member."""
    members = kite_chain_assessors(level)
    by_xor: dict[int, list[Assessor]] = {}
    for a in members:
        by_xor.setdefault(a.inner_xor, []).append(a)
    active: set[Assessor] = set()
    for group in by_xor.values():
        for a, b in combinations(group, 2):
            if a in active and b in active:
                continue
            if dmz_edge(a, b) is not None:
                active.add(a)
                active.add(b)
    return 2 * len(active)
