"""Pathion emanation tables: construction, classification, fold, partition.

Each of the 15 pathion strut ensembles has 14 assessors; tabulating which
row/column pairs emanate zero-divisors gives a 14x14 grid whose two long
diagonals are structurally empty (self products and strut opposites).  The
168 remaining cells are all filled for strut constants 1..8; for 9..15 only
72 fill, arranged as a 48-cell ring at border distance X = strut - 8 plus
24 cells carrying only the indices 8 and X.  Those seven sparse tables fold
onto the sedenion box-kite with strut constant X, and partition into three
box-kites sharing the pathion strut constant.
"""

from __future__ import annotations

import html
from dataclasses import dataclass
from typing import Optional

from .cdp import Level, LevelLike, as_level
from .zd import (
    Assessor,
    BoxKite,
    EDGE_MINUS,
    EDGE_PLUS,
    assemble_box_kite,
    assessors_for_strut,
    box_kite,
    dmz_edge,
)

PATHION = Level(5)

_HEX = "0123456789ABCDEF"

QUADRANTS = ("NW", "NE", "SW", "SE")


def hex_digit(index: int) -> str:
    """Indices 10..15 display as letters A..F, matching the table sources."""
    if not 0 <= index < 16:
        raise ValueError(f"hex digit wants 0..15, got {index}")
    return _HEX[index]


def heading_order(level: LevelLike, strut: int) -> tuple[Assessor, ...]:
    """Nested-parentheses heading order for a strut ensemble.

    Strut-opposite assessors get mirror placement (position i pairs with
    position count+1-i); the left half holds the smaller lo of each pair in
    ascending order, the right half their partners in reverse.
    """
    lvl = as_level(level)
    by_lo = {a.lo: a for a in assessors_for_strut(lvl, strut)}
    minima = sorted(lo for lo in by_lo if lo < (lo ^ strut))
    left = [by_lo[lo] for lo in minima]
    right = [by_lo[lo ^ strut] for lo in reversed(minima)]
    return tuple(left + right)


@dataclass(frozen=True)
class Cell:
    """A filled emanation cell: edge sign plus the emanated lo index."""

    sign: str
    lo: int


@dataclass(frozen=True)
class EmanationTable:
    strut: int
    level: Level
    headings: tuple[Assessor, ...]
    cells: tuple[tuple[Optional[Cell], ...], ...]

    @property
    def size(self) -> int:
        return len(self.headings)

    @property
    def excess(self) -> int:
        generator = self.level.generator >> 1
        return self.strut - generator if self.strut > generator else 0

    @property
    def filled_count(self) -> int:
        return sum(1 for row in self.cells for cell in row if cell is not None)

    def cell(self, r: int, c: int) -> Optional[Cell]:
        """0-indexed access."""
        return self.cells[r][c]

    def quadrant(self, r: int, c: int) -> str:
        """Quadrant of a 0-indexed cell; halves split at size/2."""
        half = self.size // 2
        return ("N" if r < half else "S") + ("W" if c < half else "E")


def build_emanation_table(strut: int, level: LevelLike = PATHION) -> EmanationTable:
    """Compute every off-diagonal cell by brute-force DMZ testing."""
    lvl = as_level(level)
    headings = heading_order(lvl, strut)
    rows = []
    for r, ra in enumerate(headings):
        row: list[Optional[Cell]] = []
        for c, ca in enumerate(headings):
            if r == c:
                row.append(None)
                continue
            edge = dmz_edge(ra, ca)
            row.append(None if edge is None else Cell(edge.sign, edge.emanated.lo))
        rows.append(tuple(row))
    return EmanationTable(strut, lvl, headings, tuple(rows))


@dataclass(frozen=True)
class Classification:
    """Observed structure of one emanation table."""

    strut: int
    kind: str  # "full" | "polarized" | "sky_high"
    filled: int
    excess: int
    # strut-8 polarization: quadrant -> the single edge sign seen there.
    quadrant_signs: Optional[tuple[tuple[str, str], ...]] = None
    # sky-high geometry (1-indexed ring rows/columns, counts, green details).
    ring_positions: Optional[tuple[int, int]] = None
    ring_filled: int = 0
    green_cells: int = 0
    green_signs: Optional[tuple[tuple[int, str], ...]] = None
    green_quadrants: Optional[tuple[tuple[int, tuple[str, ...]], ...]] = None


def ring_positions(t: EmanationTable) -> tuple[int, int]:
    """1-indexed row/column positions at border distance X."""
    x = t.excess
    if not x:
        raise ValueError(f"strut {t.strut} has no excess ring")
    return (x, t.size + 1 - x)


def is_ring_cell(t: EmanationTable, r: int, c: int) -> bool:
    """0-indexed; ring rows/columns minus their four intersections."""
    lo_pos, hi_pos = (p - 1 for p in ring_positions(t))
    on_r = r in (lo_pos, hi_pos)
    on_c = c in (lo_pos, hi_pos)
    return (on_r or on_c) and not (on_r and on_c)


def is_green_cell(t: EmanationTable, r: int, c: int) -> bool:
    cell = t.cells[r][c]
    generator = t.level.generator >> 1
    return cell is not None and cell.lo in (generator, t.excess)


def classify_table(t: EmanationTable) -> Classification:
    generator = t.level.generator >> 1  # 8 for pathion tables
    filled = t.filled_count
    if t.strut < generator:
        return Classification(t.strut, "full", filled, 0)
    if t.strut == generator:
        per_quadrant: dict[str, set[str]] = {q: set() for q in QUADRANTS}
        for r in range(t.size):
            for c in range(t.size):
                cell = t.cells[r][c]
                if cell is not None:
                    per_quadrant[t.quadrant(r, c)].add(cell.sign)
        signs = tuple(
            (q, "".join(sorted(per_quadrant[q]))) for q in QUADRANTS
        )
        return Classification(t.strut, "polarized", filled, 0, quadrant_signs=signs)

    x = t.excess
    ring_filled = 0
    green_signs: dict[int, set[str]] = {generator: set(), x: set()}
    green_quadrants: dict[int, set[str]] = {generator: set(), x: set()}
    green = 0
    for r in range(t.size):
        for c in range(t.size):
            cell = t.cells[r][c]
            if cell is None:
                continue
            if is_green_cell(t, r, c):
                green += 1
                green_signs[cell.lo].add(cell.sign)
                green_quadrants[cell.lo].add(t.quadrant(r, c))
            if is_ring_cell(t, r, c):
                ring_filled += 1
    return Classification(
        t.strut,
        "sky_high",
        filled,
        x,
        ring_positions=ring_positions(t),
        ring_filled=ring_filled,
        green_cells=green,
        green_signs=tuple((k, "".join(sorted(v))) for k, v in sorted(green_signs.items())),
        green_quadrants=tuple(
            (k, tuple(sorted(v))) for k, v in sorted(green_quadrants.items())
        ),
    )


def sky_high_fill_law(t: EmanationTable, r: int, c: int) -> bool:
    """Predicted fill for a sky-high cell: the row lo, column lo, or their
    XOR must hit the excess or the generator's half-index (the special
    strut-opposed assessor pair whose hi parts are 24 and 16+X)."""
    generator = t.level.generator >> 1
    if r == c:
        return False
    row_lo, col_lo = t.headings[r].lo, t.headings[c].lo
    if row_lo ^ col_lo == t.strut:
        return False
    return bool({row_lo, col_lo, row_lo ^ col_lo} & {t.excess, generator})


@dataclass(frozen=True)
class FoldResult:
    """Quarter-fold of a sky-high onto its excess-strut sedenion box-kite."""

    strut: int
    excess: int
    target: BoxKite
    # ((row, col) 1-indexed red cell) -> target vertex assessor.
    overlay: tuple[tuple[tuple[int, int], Assessor], ...]
    green_units: frozenset[int]


def fold(t: EmanationTable) -> FoldResult:
    """Fold along the row/column mid-lines: position p maps to p or
    size+1-p, collapsing each red cell onto the box-kite vertex named by its
    non-ring folded coordinate.  Green cells collapse onto units {8, X}."""
    x = t.excess
    if not x:
        raise ValueError(f"fold undefined for strut {t.strut} (no excess)")
    target = box_kite(x)
    g = target.level.generator
    by_pair = {v.pair: v for v in target.vertices}
    size = t.size

    def folded(pos: int) -> int:  # 1-indexed
        return pos if pos <= size // 2 else size + 1 - pos

    overlay = []
    green_units = set()
    for r in range(size):
        for c in range(size):
            cell = t.cells[r][c]
            if cell is None:
                continue
            if is_green_cell(t, r, c):
                green_units.add(cell.lo)
                continue
            fr, fc = folded(r + 1), folded(c + 1)
            others = {fr, fc} - {x}
            if len(others) != 1:
                raise ValueError(f"red cell ({r + 1}, {c + 1}) folds off-ring")
            q = others.pop()
            vertex = by_pair.get((q, q ^ g ^ x))
            if vertex is None:
                raise ValueError(f"folded coordinate {q} is not a vertex of strut {x}")
            overlay.append(((r + 1, c + 1), vertex))
    return FoldResult(t.strut, x, target, tuple(sorted(overlay)), frozenset(green_units))


def partition_sky_high(strut: int, level: LevelLike = PATHION) -> tuple[BoxKite, ...]:
    """Split a sky-high ensemble into 3 box-kites sharing its strut constant.

    The lo indices other than the shared strut-opposed pair {X, 8} fall into
    three orbits of the Klein group {0, 8, X, strut} under XOR; each orbit
    plus the shared pair carries one box-kite.  Ordered by zigzag lead.
    """
    lvl = as_level(level)
    generator = lvl.generator >> 1
    if not generator < strut < lvl.generator:
        raise ValueError(f"strut {strut} is not a sky-high constant")
    x = strut - generator
    by_lo = {a.lo: a for a in assessors_for_strut(lvl, strut)}
    shared = [by_lo[generator], by_lo[x]]
    rest = set(by_lo) - {generator, x}
    kites = []
    while rest:
        o = min(rest)
        orbit = {o, o ^ generator, o ^ x, o ^ strut}
        rest -= orbit
        members = tuple(by_lo[lo] for lo in sorted(orbit)) + tuple(shared)
        kites.append(assemble_box_kite(strut, members))
    return tuple(sorted(kites, key=lambda k: k.vertices[0].lo))


# ---------------------------------------------------------------------------
# Rendering


def render(t: EmanationTable, format: str) -> str:
    if format == "text":
        return render_text(t)
    if format == "csv":
        return render_csv(t)
    if format == "svg":
        return render_svg(t)
    raise ValueError(f"unsupported emanation-table format: {format!r}")


def _cell_text(cell: Optional[Cell], void: bool) -> str:
    if void:
        return "  "
    if cell is None:
        return " ."
    return cell.sign + hex_digit(cell.lo)


def render_text(t: EmanationTable) -> str:
    """Human-oriented grid: explicit +/- signs, hex cell entries, "." for
    expected-but-empty cells, blank on the void diagonals."""
    lines = [
        f"strut {t.strut} emanation table ({t.level.name})",
        "lo: " + " ".join(f"{a.lo:>2}" for a in t.headings),
        "hi: " + " ".join(f"{a.hi:>2}" for a in t.headings),
        "",
    ]
    header = "    " + " ".join(f"{hex_digit(a.lo):>2}" for a in t.headings)
    lines.append(header)
    for r, ra in enumerate(t.headings):
        void = {r, t.size - 1 - r}
        cells = " ".join(
            _cell_text(t.cells[r][c], c in void) for c in range(t.size)
        )
        lines.append(f"{hex_digit(ra.lo):>2}| " + cells)
    return "\n".join(lines) + "\n"


def render_csv(t: EmanationTable) -> str:
    """Round-trippable CSV: "strut" corner header, decimal lo headings,
    explicit-signed hex cells, empty string for empty cells."""
    lines = [",".join([str(t.strut)] + [str(a.lo) for a in t.headings])]
    for r, ra in enumerate(t.headings):
        row = [str(ra.lo)]
        for c in range(t.size):
            cell = t.cells[r][c]
            row.append("" if cell is None else cell.sign + hex_digit(cell.lo))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def parse_csv(text: str, level: LevelLike = PATHION) -> EmanationTable:
    lines = [line for line in text.strip().splitlines() if line]
    header = lines[0].split(",")
    strut = int(header[0])
    lvl = as_level(level)
    expected = heading_order(lvl, strut)
    los = [int(x) for x in header[1:]]
    if los != [a.lo for a in expected]:
        raise ValueError(f"heading order mismatch for strut {strut}")
    rows = []
    for line, heading in zip(lines[1:], expected):
        parts = line.split(",")
        if int(parts[0]) != heading.lo:
            raise ValueError(f"row heading mismatch: {parts[0]} vs {heading.lo}")
        row: list[Optional[Cell]] = []
        for raw in parts[1:]:
            if not raw:
                row.append(None)
            else:
                row.append(Cell(raw[0], _HEX.index(raw[1])))
        rows.append(tuple(row))
    return EmanationTable(strut, lvl, expected, tuple(rows))


_SVG_COLORS = {
    "void": "#ffffff",
    "gray": "#c8c8c8",
    "green": "#2e8b57",
    "red": "#c0392b",
}


def render_svg(t: EmanationTable, cell_px: int = 28) -> str:
    """SVG 1.1 grid: void diagonals white, unfilled cells gray, cells whose
    entry is the generator half-index or the excess green, the rest red."""
    size = t.size
    margin = cell_px  # heading strip
    legend_h = cell_px * 2
    width = margin + size * cell_px
    height = margin + size * cell_px + legend_h
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]

    def text(x: float, y: float, s: str, fill: str = "black") -> str:
        return (
            f'<text x="{x:.1f}" y="{y:.1f}" font-family="monospace" '
            f'font-size="{cell_px * 0.45:.1f}" text-anchor="middle" '
            f'fill="{fill}">{html.escape(s)}</text>'
        )

    for idx, a in enumerate(t.headings):
        cx = margin + idx * cell_px + cell_px / 2
        cy = margin * 0.7
        out.append(text(cx, cy, hex_digit(a.lo)))
        out.append(text(margin * 0.4, margin + idx * cell_px + cell_px * 0.65, hex_digit(a.lo)))

    for r in range(size):
        for c in range(size):
            cell = t.cells[r][c]
            if r == c or r + c == size - 1:
                color = _SVG_COLORS["void"]
            elif cell is None:
                color = _SVG_COLORS["gray"]
            elif t.excess and is_green_cell(t, r, c):
                color = _SVG_COLORS["green"]
            else:
                color = _SVG_COLORS["red"]
            x = margin + c * cell_px
            y = margin + r * cell_px
            out.append(
                f'<rect x="{x}" y="{y}" width="{cell_px}" height="{cell_px}" '
                f'fill="{color}" stroke="#555555" stroke-width="0.5"/>'
            )
            if cell is not None:
                label = cell.sign + hex_digit(cell.lo)
                out.append(
                    text(x + cell_px / 2, y + cell_px * 0.65, label, fill="white")
                )
    legend_y = margin + size * cell_px + cell_px * 0.7
    legend = (
        'cells show edge sign + emanated lo (hex); "-" = opposite-orientation '
        'diagonals annihilate, "+" = same-orientation'
    )
    out.append(
        f'<text x="{margin}" y="{legend_y:.1f}" font-family="monospace" '
        f'font-size="{cell_px * 0.38:.1f}">{html.escape(legend)}</text>'
    )
    palette = "white=void gray=empty green=strut-constant red=emanation"
    out.append(
        f'<text x="{margin}" y="{legend_y + cell_px * 0.8:.1f}" font-family="monospace" '
        f'font-size="{cell_px * 0.38:.1f}">{html.escape(palette)}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
