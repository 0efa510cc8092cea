"""Combinatorial ribbon presentations: disk/band trees with signed band-disk
crossings, built from signed chord diagrams.

Each oriented line of a diagram becomes a branch from the base disk to a
leaf; a line with a second chord source at level 1 becomes the two-leaf node
pattern.  A chord's source point names the pierced leaf disk, its target a
segment on the target line's trunk band, so crossing j is (trunk band of the
target's line, leaf of the source point).

The resolution closure iterates two deletion rules to a fixpoint:

* pull-out: a disk whose subtree is clear (no piercings, no crossings on
  subtree bands) retracts, deleting every crossing riding its trunk band;
* copy-assisted deletion: a crossing on a marked node-pattern leaf dies when
  an unstarred node-copy crossing rides the same band.

Both rules only delete crossings, and any deletion that removes an enabling
copy crossing removes its target too, so the fixpoint is order-independent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from .diagrams import ChordDiagram
from .graphs import GraphError

BASE = "base"
LEAF = "leaf"
NODE = "node"


@dataclass(frozen=True)
class Disk:
    id: str
    role: str


@dataclass(frozen=True)
class Band:
    id: str
    ends: tuple  # (child disk, parent disk): oriented toward the base


@dataclass(frozen=True)
class Crossing:
    id: str
    band: str
    disk: str  # the pierced disk
    sign: int = 1
    starred: bool = True


@dataclass(frozen=True)
class RibbonPresentation:
    disks: tuple
    bands: tuple
    crossings: tuple
    marked_q: tuple = ()  # node patterns: ((white leaf, white leaf), ...) per node
    node_copies: tuple = ()  # (copy disk id, source node id) added by cross-changes

    def __post_init__(self):
        ids = [d.id for d in self.disks]
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate disk ids")
        roles = {d.id: d.role for d in self.disks}
        if sum(1 for d in self.disks if d.role == BASE) != 1:
            raise GraphError("need exactly one base disk")
        parent = {}
        for b in self.bands:
            child, par = b.ends
            if child == par or child not in roles or par not in roles:
                raise GraphError(f"band {b.id} must join two different existing disks")
            if child in parent:
                raise GraphError(f"disk {child} hangs on two bands; bands must form a tree")
            parent[child] = b.id
        base = next(d.id for d in self.disks if d.role == BASE)
        if base in parent:
            raise GraphError("the base disk cannot hang on a band")
        for d in self.disks:
            if d.role != BASE and d.id not in parent:
                raise GraphError(f"disk {d.id} is disconnected from the base")
        band_ids = {b.id for b in self.bands}
        for c in self.crossings:
            if c.band not in band_ids or c.disk not in roles:
                raise GraphError(f"crossing {c.id} references missing band or disk")
            if c.sign not in (1, -1):
                raise GraphError(f"crossing {c.id} sign must be +1 or -1")

    # -- structure helpers --------------------------------------------------

    def base_disk(self) -> str:
        return next(d.id for d in self.disks if d.role == BASE)

    def parent_band(self, disk_id: str) -> Optional[Band]:
        for b in self.bands:
            if b.ends[0] == disk_id:
                return b
        return None

    def child_bands(self, disk_id: str) -> list:
        return [b for b in self.bands if b.ends[1] == disk_id]

    def role_of(self, disk_id: str) -> str:
        return next(d.role for d in self.disks if d.id == disk_id)

    def starred_crossings(self) -> list:
        return [c for c in self.crossings if c.starred]

    def piercings(self, disk_id: str) -> list:
        return [c for c in self.crossings if c.disk == disk_id]

    def crossings_on_band(self, band_id: str) -> list:
        return [c for c in self.crossings if c.band == band_id]

    def node_count(self) -> int:
        return sum(1 for d in self.disks if d.role == NODE)

    def to_json_dict(self) -> dict:
        return {
            "disks": [{"id": d.id, "role": d.role} for d in self.disks],
            "bands": [{"id": b.id, "ends": list(b.ends)} for b in self.bands],
            "crossings": [
                {"id": c.id, "band": c.band, "disk": c.disk, "sign": c.sign, "star": c.starred}
                for c in self.crossings
            ],
            "markedQ": [list(pair) for pair in self.marked_q],
        }


def from_signed_diagram(c: ChordDiagram) -> RibbonPresentation:
    """Ribbon presentation of a signed chord diagram.

    One branch per line; chord sources become pierced leaf disks, chord
    targets segments on trunk bands; every crossing is starred and carries
    its chord's sign.
    """
    c.assert_valid()
    sources = {}
    for ch in c.chords:
        sources.setdefault(ch.src[0], []).append(ch.src[1])
    disks = [Disk("D0", BASE)]
    bands: List[Band] = []
    trunk: Dict[int, str] = {}
    leaf_of: Dict[tuple, str] = {}
    marked: List[tuple] = []
    for i, t in enumerate(c.lines, start=1):
        levels = sorted(sources.get(i, []))
        if not levels or levels[0] != 0:
            raise GraphError(f"line {i} lacks a level-0 chord source")
        if len(levels) == 1:
            leaf = f"L{i}.0"
            disks.append(Disk(leaf, LEAF))
            bands.append(Band(f"B{i}", (leaf, "D0")))
            trunk[i] = f"B{i}"
            leaf_of[(i, 0)] = leaf
        elif len(levels) == 2:
            # two-source line: both leaves hang on a node, whose trunk
            # continues to the base; this is the marked pattern Q
            node = f"N{i}"
            disks.append(Disk(node, NODE))
            pair = []
            for l in levels:
                leaf = f"L{i}.{l}"
                disks.append(Disk(leaf, LEAF))
                bands.append(Band(f"B{i}.{l}", (leaf, node)))
                leaf_of[(i, l)] = leaf
                pair.append(leaf)
            bands.append(Band(f"B{i}", (node, "D0")))
            trunk[i] = f"B{i}"
            marked.append(tuple(pair))
        else:
            raise GraphError(f"line {i} carries {len(levels)} chord sources; at most 2 supported")
    crossings = []
    for j, ch in enumerate(c.chords, start=1):
        crossings.append(
            Crossing(f"c{j}", band=trunk[ch.dst[0]], disk=leaf_of[ch.src], sign=ch.sign)
        )
    return RibbonPresentation(
        tuple(disks), tuple(bands), tuple(crossings), marked_q=tuple(marked)
    )


def epsilon_variant(p: RibbonPresentation, eps: Sequence) -> RibbonPresentation:
    """Keep starred crossing j unstarred when eps_j = +1, delete it when -1.
    Unstarred crossings are untouched."""
    starred = p.starred_crossings()
    if len(eps) != len(starred):
        raise GraphError(f"need {len(starred)} entries, got {len(eps)}")
    if any(e not in (1, -1) for e in eps):
        raise GraphError("epsilon entries must be +1 or -1")
    decision = dict(zip((c.id for c in starred), eps))
    out = []
    for c in p.crossings:
        if not c.starred:
            out.append(c)
        elif decision[c.id] == 1:
            out.append(replace(c, starred=False))
    return replace(p, crossings=tuple(out))


def cross_change(
    p: RibbonPresentation, target_band: str, source_node: str
) -> RibbonPresentation:
    """Copy the node onto a new leaf banded to it, pierced unstarred by the
    target band."""
    if p.role_of(source_node) != NODE:
        raise GraphError(f"{source_node} is not a node")
    if not any(b.id == target_band for b in p.bands):
        raise GraphError(f"no band {target_band}")
    n = len(p.node_copies) + 1
    copy_disk = f"K{n}"
    while any(d.id == copy_disk for d in p.disks):
        n += 1
        copy_disk = f"K{n}"
    disks = p.disks + (Disk(copy_disk, LEAF),)
    bands = p.bands + (Band(f"BK{n}", (copy_disk, source_node)),)
    crossings = p.crossings + (
        Crossing(f"k{n}", band=target_band, disk=copy_disk, sign=1, starred=False),
    )
    return replace(
        p,
        disks=disks,
        bands=bands,
        crossings=crossings,
        node_copies=p.node_copies + ((copy_disk, source_node),),
    )


def standard_cross_changes(p: RibbonPresentation) -> RibbonPresentation:
    """The documented recipe: for each marked node pattern, copy the node
    onto the band piercing each of its white leaves."""
    out = p
    for pair in p.marked_q:
        for leaf in pair:
            band = out.parent_band(leaf)
            node = band.ends[1]
            for c in out.piercings(leaf):
                out = cross_change(out, c.band, node)
    return out


def resolution_closure(p: RibbonPresentation):
    """Fixpoint of the deletion rules; returns (reduced presentation,
    resolved disks).  A disk is resolved when nothing pierces it and no
    surviving crossing rides any band incident to it."""
    alive: Dict[str, Crossing] = {c.id: c for c in p.crossings}
    copy_of = {leaf: node for leaf, node in p.node_copies}
    node_of_marked = {}
    for pair in p.marked_q:
        for leaf in pair:
            band = p.parent_band(leaf)
            node_of_marked[leaf] = band.ends[1] if band else None

    children = {d.id: p.child_bands(d.id) for d in p.disks}
    parent = {d.id: p.parent_band(d.id) for d in p.disks}

    def clear_disks() -> Set[str]:
        pierced = {c.disk for c in alive.values()}
        banded = {c.band for c in alive.values()}
        clear: Set[str] = set()
        changed = True
        while changed:
            changed = False
            for d in p.disks:
                if d.id in clear or d.role == BASE:
                    continue
                if d.id in pierced:
                    continue
                ok = True
                for b in children[d.id]:
                    if b.id in banded or b.ends[0] not in clear:
                        ok = False
                        break
                if ok:
                    clear.add(d.id)
                    changed = True
        return clear

    changed = True
    while changed:
        changed = False
        # copy-assisted deletion: the move cancels a marked-leaf crossing
        # against a node-copy crossing riding the same band, consuming both
        for cid in sorted(alive):
            c = alive.get(cid)
            if c is None:
                continue
            node = node_of_marked.get(c.disk)
            if node is None:
                continue
            partner = None
            for oid in sorted(alive):
                other = alive[oid]
                if (
                    not other.starred
                    and other.band == c.band
                    and copy_of.get(other.disk) == node
                ):
                    partner = oid
                    break
            if partner is not None:
                del alive[cid]
                del alive[partner]
                changed = True
        # pull-out of clear subtrees
        for d in clear_disks():
            b = parent[d]
            if b is None:
                continue
            riding = [cid for cid, c in alive.items() if c.band == b.id]
            for cid in riding:
                del alive[cid]
                changed = True

    reduced = replace(p, crossings=tuple(c for c in p.crossings if c.id in alive))
    busy_disks = {c.disk for c in alive.values()}
    busy_bands = {c.band for c in alive.values()}
    resolved = frozenset(
        d.id
        for d in p.disks
        if d.id not in busy_disks
        and not any(b.id in busy_bands for b in children[d.id] + ([parent[d.id]] if parent[d.id] else []))
    )
    return reduced, resolved


def is_degenerate(p: RibbonPresentation) -> bool:
    """At least one white disk of a marked node pattern is resolved by the
    closure."""
    if not p.marked_q:
        raise GraphError("presentation has no marked node pattern")
    _, resolved = resolution_closure(p)
    return any(leaf in resolved for pair in p.marked_q for leaf in pair)


def is_trivial(p: RibbonPresentation) -> bool:
    """The closure deletes every crossing."""
    reduced, _ = resolution_closure(p)
    return not reduced.crossings


def sweep_epsilon(p: RibbonPresentation) -> list:
    """Every epsilon vector with its degeneracy/triviality verdict."""
    k = len(p.starred_crossings())
    rows = []
    for eps in itertools.product((1, -1), repeat=k):
        variant = epsilon_variant(p, eps)
        rows.append(
            {
                "epsilon": list(eps),
                "degenerate": is_degenerate(variant) if p.marked_q else None,
                "trivial": is_trivial(variant),
            }
        )
    return rows
