"""Assessors, diagonals, DMZ detection, and box-kite assembly.

An assessor is the plane spanned by two imaginary units (lo, hi); its two
diagonals e_lo + e_hi ("/") and e_lo - e_hi ("\\") are the zero-divisor
candidates.  Two assessors with the same inner XOR may have diagonals whose
product vanishes (a DMZ, "dyads making zero"); the edge joining them is
signed "+" when same-orientation diagonals annihilate and "-" when
opposite-orientation ones do.  Six assessors sharing an inner XOR assemble
into an octahedral box-kite: 12 signed edges, 4 sails (one all-minus triple
zigzag, three trefoils), and 3 struts of non-DMZ opposite pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cdp import (
    Level,
    LevelLike,
    Multivector,
    as_level,
    multiply,
    nato_rotation,
    table_for,
)

EDGE_PLUS = "+"
EDGE_MINUS = "-"

ORIENT_PLUS = "/"
ORIENT_MINUS = "\\"

VERTEX_LABELS = ("A", "B", "C", "D", "E", "F")

#: Strut-opposite vertex pairs of a box-kite.
STRUT_PAIRS = (("A", "F"), ("B", "E"), ("C", "D"))

#: The four sails; the first is the triple zigzag.
SAIL_LABELS = (("A", "B", "C"), ("A", "D", "E"), ("F", "D", "B"), ("F", "C", "E"))

#: The four vents (the faces that are not sails).
VENT_LABELS = (("A", "B", "D"), ("A", "C", "E"), ("F", "B", "C"), ("F", "D", "E"))


@dataclass(frozen=True, order=True)
class Assessor:
    """Index pair (lo, hi), lo < hi, spanning a candidate zero-divisor plane."""

    lo: int
    hi: int
    level: Level

    def __post_init__(self) -> None:
        if not (0 < self.lo < self.hi < self.level.dim):
            raise ValueError(
                f"assessor ({self.lo}, {self.hi}) invalid for {self.level.name}"
            )

    @property
    def inner_xor(self) -> int:
        return self.lo ^ self.hi

    @property
    def pair(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def diagonal(self, orientation: str) -> "Diagonal":
        return Diagonal(self, orientation)

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi})"


@dataclass(frozen=True)
class Diagonal:
    """Unit-coefficient dyad e_lo + e_hi ("/") or e_lo - e_hi ("\\")."""

    assessor: Assessor
    orientation: str

    def __post_init__(self) -> None:
        if self.orientation not in (ORIENT_PLUS, ORIENT_MINUS):
            raise ValueError(f"orientation must be '/' or '\\', got {self.orientation!r}")

    def multivector(self) -> Multivector:
        sign = 1 if self.orientation == ORIENT_PLUS else -1
        return Multivector(
            self.assessor.level, {self.assessor.lo: 1, self.assessor.hi: sign}
        )

    def __str__(self) -> str:
        sep = "+" if self.orientation == ORIENT_PLUS else "-"
        return f"(e{self.assessor.lo} {sep} e{self.assessor.hi})"


def assessors_for_strut(level: LevelLike, strut: int) -> tuple[Assessor, ...]:
    """The strut ensemble: all (lo, lo ^ G ^ strut) with 0 < lo < G = 2^(n-1),
    lo != strut.  Every member has inner XOR G + strut; there are G - 2."""
    lvl = as_level(level)
    if lvl.n < 2:
        raise ValueError("strut ensembles need n >= 2")
    g = lvl.generator
    if not 1 <= strut < g:
        raise ValueError(f"strut {strut} out of range 1..{g - 1}")
    return tuple(
        Assessor(lo, lo ^ g ^ strut, lvl)
        for lo in range(1, g)
        if lo != strut
    )


def dyad_product(d1: Diagonal, d2: Diagonal) -> Multivector:
    """Exact four-term expansion of the two dyads' product."""
    return multiply(d1.multivector(), d2.multivector())


@dataclass(frozen=True)
class DmzEdge:
    """A signed DMZ edge plus the assessor its products emanate."""

    sign: str
    emanated: Assessor


def dmz_edge(a1: Assessor, a2: Assessor) -> Optional[DmzEdge]:
    """Test whether two assessors' diagonals make zero.

    Returns "+" when the same-orientation pairing vanishes, "-" when the
    opposite-orientation pairing does, None when neither can (identical or
    degenerate planes, mismatched inner XOR, or plain non-cancellation).
    Only left products are computed; reversal follows by antisymmetry.
    """
    if a1.level != a2.level:
        raise ValueError(f"level mismatch: {a1.level.n} vs {a2.level.n}")
    if a1 == a2 or {a1.lo, a1.hi} & {a2.lo, a2.hi}:
        return None
    if a1.inner_xor != a2.inner_xor:
        return None
    lo = a1.lo ^ a2.lo
    hi = lo ^ a1.inner_xor
    emanated = Assessor(min(lo, hi), max(lo, hi), a1.level)
    if dyad_product(a1.diagonal(ORIENT_PLUS), a2.diagonal(ORIENT_PLUS)).is_zero:
        return DmzEdge(EDGE_PLUS, emanated)
    if dyad_product(a1.diagonal(ORIENT_PLUS), a2.diagonal(ORIENT_MINUS)).is_zero:
        return DmzEdge(EDGE_MINUS, emanated)
    return None


@dataclass(frozen=True)
class BoxKiteEdge:
    a: str
    b: str
    sign: str
    emanated: Assessor


@dataclass(frozen=True)
class BoxKite:
    """Octahedral lattice of 6 assessors sharing an inner XOR.

    Vertices are labeled so A, B, C form the triple zigzag (their lo parts a
    NATO triplet starting from the smallest) and F, E, D sit strut-opposite
    to A, B, C respectively.
    """

    strut: int
    level: Level
    vertices: tuple[Assessor, ...]
    edges: tuple[BoxKiteEdge, ...]

    @property
    def sails(self) -> tuple[tuple[str, str, str], ...]:
        return SAIL_LABELS

    @property
    def vents(self) -> tuple[tuple[str, str, str], ...]:
        return VENT_LABELS

    def vertex(self, label: str) -> Assessor:
        return self.vertices[VERTEX_LABELS.index(label)]

    def labeled_vertices(self) -> tuple[tuple[str, Assessor], ...]:
        return tuple(zip(VERTEX_LABELS, self.vertices))

    def edge(self, a: str, b: str) -> BoxKiteEdge:
        key = frozenset((a, b))
        for e in self.edges:
            if frozenset((e.a, e.b)) == key:
                return e
        raise KeyError(f"no edge {a}-{b} (strut pairs carry no edge)")

    def opposite(self, label: str) -> str:
        for p, q in STRUT_PAIRS:
            if label == p:
                return q
            if label == q:
                return p
        raise KeyError(label)

    def assessor_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(v.pair for v in self.vertices)


def assemble_box_kite(strut: int, assessors: tuple[Assessor, ...]) -> BoxKite:
    """Label six same-inner-XOR assessors A..F and sign their 12 edges.

    The zigzag is found from edge signs (the unique all-minus XOR-closed
    triple); A is its smallest lo, B and C follow in NATO rotation, and
    D, E, F are the strut opposites of C, B, A.
    """
    if len(assessors) != 6:
        raise ValueError(f"a box-kite needs 6 assessors, got {len(assessors)}")
    level = assessors[0].level
    by_lo = {a.lo: a for a in assessors}
    if len(by_lo) != 6:
        raise ValueError("assessor lo indices must be distinct")

    def partner(a: Assessor) -> Assessor:
        other = by_lo.get(a.lo ^ strut)
        if other is None:
            raise ValueError(f"no strut-opposite for {a} under strut {strut}")
        return other

    edge_cache: dict[frozenset[int], Optional[DmzEdge]] = {}

    def edge_between(x: Assessor, y: Assessor) -> Optional[DmzEdge]:
        key = frozenset((x.lo, y.lo))
        if key not in edge_cache:
            edge_cache[key] = dmz_edge(x, y)
        return edge_cache[key]

    los = sorted(by_lo)
    zigzags = []
    for i, p in enumerate(los):
        for q in los[i + 1 :]:
            r = p ^ q
            if r <= q or r not in by_lo:
                continue
            signs = [
                edge_between(by_lo[x], by_lo[y])
                for x, y in ((p, q), (q, r), (p, r))
            ]
            if all(e is not None and e.sign == EDGE_MINUS for e in signs):
                zigzags.append((p, q, r))
    if len(zigzags) != 1:
        raise ValueError(f"expected one all-minus sail for strut {strut}, found {zigzags}")
    rotation = nato_rotation(zigzags[0], level)
    a, b, c = (by_lo[i] for i in rotation)
    ordered = (a, b, c, partner(c), partner(b), partner(a))

    labeled = dict(zip(VERTEX_LABELS, ordered))
    opposite = dict(STRUT_PAIRS) | {q: p for p, q in STRUT_PAIRS}
    edges = []
    for i, p in enumerate(VERTEX_LABELS):
        for q in VERTEX_LABELS[i + 1 :]:
            if opposite[p] == q:
                continue
            e = edge_between(labeled[p], labeled[q])
            if e is None:
                raise ValueError(f"expected DMZ edge {p}-{q} for strut {strut}")
            edges.append(BoxKiteEdge(p, q, e.sign, e.emanated))
    return BoxKite(strut, level, ordered, tuple(edges))


def box_kite(strut: int) -> BoxKite:
    """The sedenion box-kite for a strut constant 1..7."""
    if not 1 <= strut <= 7:
        raise ValueError(f"sedenion strut constant must be 1..7, got {strut}")
    return assemble_box_kite(strut, assessors_for_strut(4, strut))


@dataclass(frozen=True)
class Sail:
    labels: tuple[str, str, str]
    kind: str  # "zigzag" | "trefoil"
    assessors: tuple[Assessor, ...]
    lo_triplet: tuple[int, int, int]


def sails(bk: BoxKite) -> tuple[Sail, ...]:
    """The four sails, classified by their minus-edge count (3 = zigzag,
    1 = trefoil); each sail's lo parts form a NATO triplet."""
    out = []
    for labels in bk.sails:
        members = tuple(bk.vertex(l) for l in labels)
        pairs = ((labels[0], labels[1]), (labels[1], labels[2]), (labels[0], labels[2]))
        minus = sum(1 for p, q in pairs if bk.edge(p, q).sign == EDGE_MINUS)
        kind = {3: "zigzag", 1: "trefoil"}.get(minus, f"{minus}-minus")
        rotation = nato_rotation((m.lo for m in members), bk.level)
        out.append(Sail(labels, kind, members, (rotation.a, rotation.b, rotation.c)))
    return tuple(out)


@dataclass(frozen=True)
class StrutProduct:
    """Both unit indices a strut-opposite pair's diagonal products land on."""

    pair: tuple[str, str]
    same_orientation_index: int
    opposite_orientation_index: int


def strut_products(bk: BoxKite) -> tuple[StrutProduct, ...]:
    """For each strut pair, the single unit index (up to +/-2 coefficient)
    produced by the same- and opposite-orientation diagonal products; over a
    box-kite these are exactly the generator index and the strut constant."""
    out = []
    for p, q in STRUT_PAIRS:
        vp, vq = bk.vertex(p), bk.vertex(q)
        indices = {}
        for name, orient in (("same", ORIENT_PLUS), ("opposite", ORIENT_MINUS)):
            product = dyad_product(vp.diagonal(ORIENT_PLUS), vq.diagonal(orient))
            terms = product.terms()
            if len(terms) != 1 or abs(terms[0][1]) != 2:
                raise ValueError(
                    f"strut product {p}-{q} did not collapse to one doubled unit: {product}"
                )
            indices[name] = terms[0][0]
        out.append(StrutProduct((p, q), indices["same"], indices["opposite"]))
    return tuple(out)


def dmz_fast(level: LevelLike, a1: tuple[int, int], a2: tuple[int, int]) -> bool:
    """Sign-table DMZ test for canonical same-inner-XOR assessor pairs.

    The four product terms pair up on two indices; cancellation is possible
    exactly when the four signs multiply to +1.  Used by the censuses, where
    building Multivector objects per pair would dominate the runtime.
    """
    table = table_for(level)
    s = table.signs
    (a, ah), (b, bh) = a1, a2
    return s[a][b] * s[ah][bh] * s[a][bh] * s[ah][b] == 1
