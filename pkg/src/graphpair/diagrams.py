"""Chord diagrams on oriented lines.

Line i carries points (i, 0), ..., (i, t_i); level 0 sits on the x-axis.
Chords form an ordered, oriented, signed perfect matching on the 2k points.
Every level-0 point must source its chord, and no chord joins two level-0
points.  The canonical point order labels the i-th chord's source 2i-1 and
its target 2i.

The deterministic constructions for the two hairy families route one chord
chain along each skeleton edge: chains run with the edge orientation along
circle edges and against it along spoke edges, entering and leaving the
exceptional tail-hair lines that host the skeleton vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .graphs import GraphError, y_condition

Point = Tuple[int, int]  # (line index 1..s, level 0..t_i)


@dataclass(frozen=True)
class Chord:
    src: Point
    dst: Point
    sign: int = 1


@dataclass(frozen=True)
class ChordDiagram:
    lines: tuple  # t_i per line
    chords: tuple

    @property
    def k(self) -> int:
        return len(self.chords)

    @property
    def s(self) -> int:
        return len(self.lines)

    def points(self) -> list:
        return [(i + 1, l) for i, t in enumerate(self.lines) for l in range(t + 1)]

    def canonical_positions(self) -> dict:
        """Point -> 1..2k; the i-th chord's source gets 2i-1, its target 2i."""
        pos = {}
        for i, c in enumerate(self.chords, start=1):
            pos[c.src] = 2 * i - 1
            pos[c.dst] = 2 * i
        return pos

    def validate(self) -> list:
        """Full list of violated invariants; empty means valid."""
        bad = []
        pts = self.points()
        if sum(t + 1 for t in self.lines) != 2 * self.k:
            bad.append(f"total point count {sum(t + 1 for t in self.lines)} != 2k = {2 * self.k}")
        touched = []
        pset = set(pts)
        for i, c in enumerate(self.chords, start=1):
            for end in (c.src, c.dst):
                if end not in pset:
                    bad.append(f"chord {i} endpoint {end} is not a diagram point")
            if c.src == c.dst:
                bad.append(f"chord {i} joins a point to itself")
            if c.sign not in (1, -1):
                bad.append(f"chord {i} sign must be +1 or -1")
            if c.src[1] == 0 and c.dst[1] == 0:
                bad.append(f"chord {i} joins two x-axis points")
            if c.dst[1] == 0:
                bad.append(f"chord {i} ends on the x-axis instead of starting there")
            touched += [c.src, c.dst]
        if sorted(touched) != sorted(pts):
            bad.append("chords do not form a perfect matching on the points")
        return bad

    def assert_valid(self):
        bad = self.validate()
        if bad:
            raise GraphError("invalid chord diagram: " + "; ".join(bad))

    def flip_sign(self, index: int) -> "ChordDiagram":
        """New diagram with the sign of chord `index` (0-based) negated."""
        chords = list(self.chords)
        c = chords[index]
        chords[index] = Chord(c.src, c.dst, -c.sign)
        return ChordDiagram(self.lines, tuple(chords))

    def to_json_dict(self) -> dict:
        return {
            "lines": list(self.lines),
            "chords": [
                {"src": list(c.src), "dst": list(c.dst), "sign": c.sign} for c in self.chords
            ],
        }

    @classmethod
    def from_json_dict(cls, d) -> "ChordDiagram":
        return cls(
            lines=tuple(d["lines"]),
            chords=tuple(
                Chord(tuple(c["src"]), tuple(c["dst"]), c.get("sign", 1)) for c in d["chords"]
            ),
        )

    def to_tikz(self) -> str:
        out = ["\\begin{tikzpicture}[x=1.2cm,y=0.9cm]"]
        for i, t in enumerate(self.lines, start=1):
            out.append(f"  \\draw[->,blue,thick] ({i},-0.4) -- ({i},{t + 0.6});")
            for l in range(t + 1):
                out.append(f"  \\fill ({i},{l}) circle (1.5pt);")
        for idx, c in enumerate(self.chords, start=1):
            (i1, l1), (i2, l2) = c.src, c.dst
            style = "dashed" if c.sign > 0 else "dashed,red"
            bend = "bend left=25" if i1 != i2 else "bend left=55"
            out.append(
                f"  \\draw[->,{style}] ({i1},{l1}) to[{bend}] "
                f"node[midway,above,font=\\tiny] {{{idx}}} ({i2},{l2});"
            )
        out.append("\\end{tikzpicture}")
        return "\n".join(out)


def negative_count(c: ChordDiagram) -> int:
    return sum(1 for ch in c.chords if ch.sign == -1)


def planetary_summary(c: ChordDiagram) -> list:
    """Per line: (fixed star on the axis, orbit count t_i)."""
    return [(True, t) for t in c.lines]


# -- construction helpers -----------------------------------------------------


class _Builder:
    """Accumulates lines and chord chains, then orders chords by the rule:
    higher-level sources first, ties by line index."""

    def __init__(self):
        self.lines: List[int] = []
        self._raw: List[Tuple[Point, Point]] = []

    def add_line(self, t: int) -> int:
        self.lines.append(t)
        return len(self.lines)

    def chain(self, source: Point, through: Sequence, sink: Point):
        """Chord chain source -> (line, in-level 1) -> ... -> sink, where
        `through` lists intermediate regular lines in flow order."""
        prev = source
        for line in through:
            self._raw.append((prev, (line, 1)))
            prev = (line, 0)
        self._raw.append((prev, sink))

    def build(self) -> ChordDiagram:
        ordered = sorted(self._raw, key=lambda c: (-c[0][1], c[0][0]))
        return ChordDiagram(tuple(self.lines), tuple(Chord(s, d) for s, d in ordered))


def rederive_chord_order(c: ChordDiagram) -> ChordDiagram:
    """Re-sort chords by the source rule (level desc, line asc)."""
    ordered = sorted(c.chords, key=lambda ch: (-ch.src[1], ch.src[0]))
    return ChordDiagram(c.lines, tuple(ordered))


def diagram_theta(p: int, q: int, r: int) -> ChordDiagram:
    """Chord diagram of the 2-loop hairy family.

    Lines: upper-edge hairs tail-first, then middle, then lower. The tail
    hair of the upper edge hosts the type-(I) vertex (two out-slots at
    levels 0 and 1); the tail hair of the lower edge hosts the type-(II)
    vertex (two in-slots at levels 1 and 2).
    """
    if p < 1 or r < 1 or q < 0:
        raise GraphError(f"theta family needs p >= 1, r >= 1, q >= 0; got ({p},{q},{r})")
    b = _Builder()
    upper = [b.add_line(2 if i == 0 else 1) for i in range(p)]
    middle = [b.add_line(1) for _ in range(q)]
    lower = [b.add_line(2 if i == 0 else 1) for i in range(r)]
    a_line, b_line = upper[0], lower[0]
    # upper chain: along the edge, arriving at the type-(II) line's level 2
    b.chain((a_line, 1), upper[1:], (b_line, 2))
    # middle chain runs against the edge orientation, arriving at level 1
    b.chain((a_line, 0), list(reversed(middle)), (b_line, 1))
    # lower chain: along the edge, closing into the type-(I) line's level 2
    b.chain((b_line, 0), lower[1:], (a_line, 2))
    d = b.build()
    d.assert_valid()
    return d


def c1_fixture() -> ChordDiagram:
    """The order-3 example diagram on two lines with t_1 = t_2 = 2."""
    return ChordDiagram(
        lines=(2, 2),
        chords=(
            Chord((1, 1), (2, 2)),
            Chord((1, 0), (2, 1)),
            Chord((2, 0), (1, 2)),
        ),
    )


def diagram_y(p1: int, p2: int, p3: int, p4: int, p5: int, p6: int) -> ChordDiagram:
    """Chord diagram of the 3-loop hairy family under conditions (1)-(3).

    Edges 1,2,3 are circle arcs (chains run with the orientation), edges
    4,5,6 spokes (chains run against it).  The skeleton vertices live on
    exceptional tail-hair lines: under (1) four 3-point lines, under (2)
    one 4-point and two 3-point lines, under (3) one 5-point and one
    3-point line.
    """
    hairs = (p1, p2, p3, p4, p5, p6)
    cond = y_condition(hairs)
    if cond is None:
        raise GraphError(f"hair vector {hairs} satisfies none of conditions (1)(2)(3)")
    b = _Builder()
    if cond == 1:
        bl_edge = 5 if p5 >= 1 else 3  # tail hair hosting the lower-left vertex
        lines = {}
        for idx in range(1, 7):
            special = {1: 2, 6: 2, 4: 2, bl_edge: 2}.get(idx, 1)
            lines[idx] = [
                b.add_line(special if i == 0 else 1) for i in range(hairs[idx - 1])
            ]
        a_top, a_cen = lines[1][0], lines[6][0]
        b_br, b_bl = lines[4][0], lines[bl_edge][0]
        # arrivals: circle chains land at level 2, spoke chains at level 1
        b.chain((a_top, 1), lines[1][1:], (b_bl, 2))                      # edge 1
        b.chain((b_br, 0), lines[2], (a_top, 2))                          # edge 2
        e3_through = lines[3][1:] if bl_edge == 3 else lines[3]
        b.chain((b_bl, 0), e3_through, (b_br, 2))                         # edge 3
        b.chain((a_cen, 1), list(reversed(lines[4][1:])), (b_br, 1))      # edge 4
        e5_through = list(reversed(lines[5][1:])) if bl_edge == 5 else list(reversed(lines[5]))
        b.chain((a_cen, 0), e5_through, (b_bl, 1))                        # edge 5
        b.chain((a_top, 0), list(reversed(lines[6][1:])), (a_cen, 2))     # edge 6
    elif cond == 2:
        l1 = [b.add_line(2 if i == 0 else 1) for i in range(p1)]
        l4 = [b.add_line(3 if i == 0 else 1) for i in range(p4)]
        l6 = [b.add_line(2 if i == 0 else 1) for i in range(p6)]
        a_top, a_cen, t3 = l1[0], l6[0], l4[0]
        b.chain((a_top, 1), l1[1:], (t3, 3))                              # edge 1
        b.chain((t3, 0), [], (a_top, 2))                                  # edge 2
        b.chain((a_cen, 1), list(reversed(l4[1:])), (t3, 2))              # edge 4
        b.chain((a_cen, 0), [], (t3, 1))                                  # edge 5
        b.chain((a_top, 0), list(reversed(l6[1:])), (a_cen, 2))           # edge 6
    else:
        l1 = [b.add_line(4 if i == 0 else 1) for i in range(p1)]
        l6 = [b.add_line(2 if i == 0 else 1) for i in range(p6)]
        t4, a6 = l1[0], l6[0]
        b.chain((t4, 1), l1[1:], (t4, 4))                                 # edge 1
        b.chain((a6, 1), [], (t4, 3))                                     # edge 4
        b.chain((a6, 0), [], (t4, 2))                                     # edge 5
        b.chain((t4, 0), list(reversed(l6[1:])), (a6, 2))                 # edge 6
    d = b.build()
    d.assert_valid()
    return d
