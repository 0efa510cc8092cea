"""Labeled plain graphs: vertex/edge kinds, hairy-graph builders, isomorphism,
and orientation-sign bookkeeping.

A plain graph has white / external-black / internal-black vertices and
dashed / solid edges.  A label is a total order on vertices-and-edges
together with an orientation (endpoint order) of every edge; comparing two
labels of the same graph yields a sign through a ParityTable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

WHITE = "white"
EXT_BLACK = "extBlack"
INT_BLACK = "intBlack"
DASHED = "dashed"
SOLID = "solid"

VERTEX_KINDS = (WHITE, EXT_BLACK, INT_BLACK)
EDGE_KINDS = (DASHED, SOLID)


class GraphError(ValueError):
    """Malformed graph data or violated structural precondition."""


@dataclass(frozen=True)
class Vertex:
    id: str
    kind: str


@dataclass(frozen=True)
class Edge:
    id: str
    kind: str
    src: str
    dst: str

    @property
    def pair(self) -> frozenset:
        return frozenset((self.src, self.dst))


@dataclass(frozen=True)
class Label:
    """Ordering of all generators (vertex and edge ids) plus edge orientations."""

    order: tuple
    orientations: Mapping[str, tuple]

    def generators(self) -> frozenset:
        return frozenset(self.order)


@dataclass(frozen=True)
class GradingParams:
    """Ambient dimension n and source dimension j, with n - j >= 2."""

    n: int = 5
    j: int = 3

    def __post_init__(self):
        if self.n < 4 or self.j < 2 or self.n - self.j < 2:
            raise GraphError(f"need n >= 4, j >= 2, n - j >= 2; got n={self.n}, j={self.j}")


@dataclass(frozen=True)
class ParityTable:
    """Parities (0 even, 1 odd) of the five generator kinds, plus the parity
    cost of reversing an edge of each kind."""

    generator_parity: tuple
    reversal_parity: tuple

    def __post_init__(self):
        gp = dict(self.generator_parity)
        rp = dict(self.reversal_parity)
        if set(gp) != set(VERTEX_KINDS) | set(EDGE_KINDS):
            raise GraphError(f"generator parity must cover all five kinds, got {sorted(gp)}")
        if set(rp) != set(EDGE_KINDS):
            raise GraphError(f"reversal parity must cover both edge kinds, got {sorted(rp)}")
        if not all(v in (0, 1) for v in list(gp.values()) + list(rp.values())):
            raise GraphError("parities must be 0 or 1")

    @classmethod
    def from_dimensions(cls, gp: GradingParams = GradingParams()) -> "ParityTable":
        """Default convention: dashed edges weigh n-1 and solid edges n-j;
        white vertices weigh n, black vertices j.  Reversing an edge costs
        the degree of the antipode on its propagator sphere: (-1)^n for
        dashed, (-1)^(n-j) for solid.  This is the unique nontrivial table
        under which the resolution families carry no orientation-reversing
        automorphisms and the counting identities hold exactly."""
        gen = (
            (DASHED, (gp.n - 1) % 2),
            (SOLID, (gp.n - gp.j) % 2),
            (WHITE, gp.n % 2),
            (EXT_BLACK, gp.j % 2),
            (INT_BLACK, gp.j % 2),
        )
        rev = ((DASHED, gp.n % 2), (SOLID, (gp.n - gp.j) % 2))
        return cls(generator_parity=gen, reversal_parity=rev)

    def parity_of(self, kind: str) -> int:
        return dict(self.generator_parity)[kind]

    def reversal_of(self, edge_kind: str) -> int:
        return dict(self.reversal_parity)[edge_kind]

    @classmethod
    def from_json_dict(cls, d: Mapping) -> "ParityTable":
        return cls(
            generator_parity=tuple(sorted(d["generator_parity"].items())),
            reversal_parity=tuple(sorted(d["reversal_parity"].items())),
        )

    def to_json_dict(self) -> dict:
        return {
            "generator_parity": dict(self.generator_parity),
            "reversal_parity": dict(self.reversal_parity),
        }


DEFAULT_PARITY = ParityTable.from_dimensions()


@dataclass(frozen=True)
class PlainGraph:
    """Immutable labeled plain graph.

    The label is the tuple `label_order` (a permutation of all vertex and edge
    ids) together with the src/dst orientation stored on each edge.
    `markings` optionally records metadata such as type-(I)/(II) vertex roles.
    """

    vertices: tuple
    edges: tuple
    label_order: tuple
    markings: tuple = ()

    def __post_init__(self):
        vids = [v.id for v in self.vertices]
        eids = [e.id for e in self.edges]
        ids = vids + eids
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate generator ids")
        if set(self.label_order) != set(ids) or len(self.label_order) != len(ids):
            raise GraphError("label order must be a permutation of all vertex and edge ids")
        vset = set(vids)
        for v in self.vertices:
            if v.kind not in VERTEX_KINDS:
                raise GraphError(f"unknown vertex kind {v.kind!r}")
        for e in self.edges:
            if e.kind not in EDGE_KINDS:
                raise GraphError(f"unknown edge kind {e.kind!r}")
            if e.src not in vset or e.dst not in vset:
                raise GraphError(f"edge {e.id} has dangling endpoint")
        self._check_valences()
        self._check_components()

    def _check_valences(self):
        deg = {v.id: {DASHED: 0, SOLID: 0} for v in self.vertices}
        for e in self.edges:
            deg[e.src][e.kind] += 1
            deg[e.dst][e.kind] += 1
        for v in self.vertices:
            d, s = deg[v.id][DASHED], deg[v.id][SOLID]
            if v.kind == WHITE and (d < 3 or s > 0):
                raise GraphError(f"white vertex {v.id} needs >= 3 dashed and no solid edges")
            if v.kind == INT_BLACK and (s < 3 or d > 0):
                raise GraphError(f"internal black vertex {v.id} needs >= 3 solid and no dashed edges")

    def _check_components(self):
        kind = {v.id: v.kind for v in self.vertices}
        adj = {v.id: set() for v in self.vertices}
        for e in self.edges:
            adj[e.src].add(e.dst)
            adj[e.dst].add(e.src)
        seen = set()
        for start in adj:
            if start in seen:
                continue
            comp, stack = [], [start]
            while stack:
                u = stack.pop()
                if u in seen:
                    continue
                seen.add(u)
                comp.append(u)
                stack.extend(adj[u] - seen)
            if not any(kind[u] == EXT_BLACK for u in comp):
                raise GraphError("every connected component needs an external black vertex")

    # -- basic accessors -------------------------------------------------

    def vertex(self, vid: str) -> Vertex:
        return self._vmap()[vid]

    def _vmap(self) -> dict:
        return {v.id: v for v in self.vertices}

    def _emap(self) -> dict:
        return {e.id: e for e in self.edges}

    def vertices_of_kind(self, kind: str) -> list:
        return [v for v in self.vertices if v.kind == kind]

    def edges_of_kind(self, kind: str) -> list:
        return [e for e in self.edges if e.kind == kind]

    def incident_edges(self, vid: str, kind: Optional[str] = None) -> list:
        out = []
        for e in self.edges:
            if vid in (e.src, e.dst) and (kind is None or e.kind == kind):
                out.append(e)
        return out

    @property
    def label(self) -> Label:
        return Label(self.label_order, {e.id: (e.src, e.dst) for e in self.edges})

    def marking_of(self, vid: str) -> Optional[str]:
        return dict(self.markings).get(vid)

    def relabel(self, order: Optional[Sequence] = None, flips: Iterable = ()) -> "PlainGraph":
        """Return the same underlying graph carrying a different label."""
        flips = set(flips)
        new_edges = tuple(
            Edge(e.id, e.kind, e.dst, e.src) if e.id in flips else e for e in self.edges
        )
        new_order = tuple(order) if order is not None else self.label_order
        return PlainGraph(self.vertices, new_edges, new_order, self.markings)

    def to_json_dict(self) -> dict:
        return {
            "vertices": [{"id": v.id, "kind": v.kind} for v in self.vertices],
            "edges": [
                {"id": e.id, "kind": e.kind, "src": e.src, "dst": e.dst} for e in self.edges
            ],
            "label": {"order": list(self.label_order)},
        }

    @classmethod
    def from_json_dict(cls, d: Mapping) -> "PlainGraph":
        return cls(
            vertices=tuple(Vertex(v["id"], v["kind"]) for v in d["vertices"]),
            edges=tuple(Edge(e["id"], e["kind"], e["src"], e["dst"]) for e in d["edges"]),
            label_order=tuple(d["label"]["order"]),
        )

    def to_dot(self) -> str:
        lines = ["graph plain {"]
        shape = {WHITE: "circle", EXT_BLACK: "circle", INT_BLACK: "square"}
        fill = {WHITE: "white", EXT_BLACK: "black", INT_BLACK: "black"}
        for v in self.vertices:
            lines.append(
                f'  "{v.id}" [shape={shape[v.kind]}, style=filled, fillcolor={fill[v.kind]}];'
            )
        for e in self.edges:
            style = "dashed" if e.kind == DASHED else "solid"
            lines.append(f'  "{e.src}" -- "{e.dst}" [style={style}, label="{e.id}"];')
        lines.append("}")
        return "\n".join(lines)


# -- order, admissibility, degrees ----------------------------------------


def order(g: PlainGraph) -> int:
    """Complexity |dashed edges| - |white vertices|."""
    return len(g.edges_of_kind(DASHED)) - len(g.vertices_of_kind(WHITE))


def first_betti(g: PlainGraph) -> int:
    comp = _component_count(g)
    return len(g.edges) - len(g.vertices) + comp


def _component_count(g: PlainGraph) -> int:
    adj = {v.id: set() for v in g.vertices}
    for e in g.edges:
        adj[e.src].add(e.dst)
        adj[e.dst].add(e.src)
    seen, n = set(), 0
    for start in adj:
        if start in seen:
            continue
        n += 1
        stack = [start]
        while stack:
            u = stack.pop()
            if u not in seen:
                seen.add(u)
                stack.extend(adj[u] - seen)
    return n


def is_admissible(g: PlainGraph) -> bool:
    """Every external black vertex carries at least one dashed edge."""
    for v in g.vertices_of_kind(EXT_BLACK):
        if not g.incident_edges(v.id, DASHED):
            return False
    return True


def is_good(g: PlainGraph) -> bool:
    """No internal black vertex, and every solid component is a simple path."""
    if g.vertices_of_kind(INT_BLACK):
        return False
    solid_adj = {}
    for e in g.edges_of_kind(SOLID):
        if e.src == e.dst:
            return False
        solid_adj.setdefault(e.src, []).append(e.dst)
        solid_adj.setdefault(e.dst, []).append(e.src)
    for vid, nbrs in solid_adj.items():
        if len(nbrs) > 2:
            return False
    # path components have exactly one more vertex than edges
    seen = set()
    for start in solid_adj:
        if start in seen:
            continue
        comp, stack = set(), [start]
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(n for n in solid_adj[u] if n not in comp)
        seen |= comp
        n_edges = sum(len(solid_adj[u]) for u in comp) // 2
        if n_edges != len(comp) - 1:
            return False
    return True


def top_degree(k: int, g: int, gp: GradingParams) -> int:
    """Cohomological degree k(n-j-2) + (j-1)(g-1) of order-k loop-order-g cycles."""
    if k < 1 or g < 1:
        raise GraphError(f"need k >= 1 and g >= 1, got k={k}, g={g}")
    return k * (gp.n - gp.j - 2) + (gp.j - 1) * (g - 1)


def support_check(g: PlainGraph, k: int) -> bool:
    """True iff g has >= 2k external black vertices with a dashed edge each.

    When true, the structural consequences (no white vertices, exactly k
    dashed edges, exactly 2k external black vertices) are re-verified.
    """
    if order(g) > k:
        raise GraphError(f"support_check needs order(g) <= k, got {order(g)} > {k}")
    ext_with_dashed = [
        v for v in g.vertices_of_kind(EXT_BLACK) if g.incident_edges(v.id, DASHED)
    ]
    if len(ext_with_dashed) < 2 * k:
        return False
    if g.vertices_of_kind(WHITE):
        raise GraphError("support_check: white vertex survived past the 2k threshold")
    if len(g.edges_of_kind(DASHED)) != k:
        raise GraphError("support_check: dashed edge count differs from k")
    if len(g.vertices_of_kind(EXT_BLACK)) != 2 * k:
        raise GraphError("support_check: external black vertex count differs from 2k")
    return True


# -- hairy-graph builders --------------------------------------------------


def _segment_edges(chain: Sequence, prefix: str) -> list:
    return [
        Edge(f"{prefix}{i}", DASHED, chain[i], chain[i + 1]) for i in range(len(chain) - 1)
    ]


def theta_graph(p: int, q: int, r: int, check: bool = True) -> PlainGraph:
    """Theta skeleton with p/q/r hairs on the upper/middle/lower edge.

    The upper edge runs left vertex -> right vertex; middle and lower run
    right -> left.  Hair attachment vertices are trivalent white, hair tips
    univalent external black.  `check=False` skips the cycle-family domain
    restriction (used for raw graph comparisons only).
    """
    if check and (p < 1 or r < 1 or q < 0):
        raise GraphError(f"theta family needs p >= 1, r >= 1, q >= 0; got ({p},{q},{r})")
    if p < 0 or q < 0 or r < 0:
        raise GraphError("hair counts must be nonnegative")
    vertices = [Vertex("vL", WHITE), Vertex("vR", WHITE)]
    up = [f"u{i}" for i in range(1, p + 1)]
    mid = [f"m{i}" for i in range(1, q + 1)]
    low = [f"l{i}" for i in range(1, r + 1)]
    for vid in up + mid + low:
        vertices.append(Vertex(vid, WHITE))
        vertices.append(Vertex(f"t{vid}", EXT_BLACK))
    edges = []
    edges += _segment_edges(["vL"] + up + ["vR"], "U")
    edges += _segment_edges(["vR"] + mid + ["vL"], "M")
    edges += _segment_edges(["vR"] + low + ["vL"], "L")
    for vid in up + mid + low:
        edges.append(Edge(f"H{vid}", DASHED, vid, f"t{vid}"))
    label = tuple(v.id for v in vertices) + tuple(e.id for e in edges)
    return PlainGraph(
        tuple(vertices), tuple(edges), label, markings=(("vL", "I"), ("vR", "II"))
    )


def build_theta(p: int, q: int, r: int) -> PlainGraph:
    return theta_graph(p, q, r, check=True)


Y_EDGE_ENDS = {
    1: ("top", "bl"),
    2: ("br", "top"),
    3: ("bl", "br"),
    4: ("br", "ctr"),
    5: ("bl", "ctr"),
    6: ("ctr", "top"),
}


def y_condition(hairs: Sequence) -> Optional[int]:
    """Which of the three admissible hair-count conditions holds, if any."""
    p = list(hairs)
    if len(p) != 6 or any(x < 0 for x in p):
        return None
    p1, p2, p3, p4, p5, p6 = p
    if p1 >= 1 and p6 >= 1 and p3 >= 1 and p4 >= 1:
        return 1
    if p1 >= 1 and p6 >= 1 and p4 >= 1 and p2 == p3 == p5 == 0:
        return 2
    if p1 >= 1 and p6 >= 1 and p2 == p3 == p4 == p5 == 0:
        return 3
    return None


def build_y(p1: int, p2: int, p3: int, p4: int, p5: int, p6: int) -> PlainGraph:
    """Y-in-circle skeleton (4 trivalent white vertices, 6 edges) with p_i
    hairs on edge i.  Edges 1,2,3 are the circle arcs, 4,5,6 the spokes."""
    hairs = (p1, p2, p3, p4, p5, p6)
    if y_condition(hairs) is None:
        raise GraphError(f"hair vector {hairs} satisfies none of conditions (1)(2)(3)")
    vertices = [Vertex(v, WHITE) for v in ("top", "bl", "br", "ctr")]
    edges = []
    for idx in range(1, 7):
        tail, head = Y_EDGE_ENDS[idx]
        attach = [f"e{idx}_{i}" for i in range(1, hairs[idx - 1] + 1)]
        for vid in attach:
            vertices.append(Vertex(vid, WHITE))
            vertices.append(Vertex(f"t{vid}", EXT_BLACK))
        edges += _segment_edges([tail] + attach + [head], f"E{idx}_")
        for vid in attach:
            edges.append(Edge(f"H{vid}", DASHED, vid, f"t{vid}"))
    label = tuple(v.id for v in vertices) + tuple(e.id for e in edges)
    markings = (("top", "I"), ("ctr", "I"), ("bl", "II"), ("br", "II"))
    return PlainGraph(tuple(vertices), tuple(edges), label, markings=markings)


# -- signs ------------------------------------------------------------------


def permutation_sign(perm: Sequence) -> int:
    """Sign of the permutation given as the image list of 0..n-1."""
    perm = list(perm)
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def label_sign(g: PlainGraph, a: Label, b: Label, pt: ParityTable = DEFAULT_PARITY) -> int:
    """Sign relating two labels of the same graph.

    The Koszul sign of reordering the odd-parity generators from a's order to
    b's, times a reversal factor for every edge whose orientation differs and
    whose kind reverses oddly.
    """
    if a.generators() != b.generators():
        raise GraphError("labels range over different generator sets")
    kind = {v.id: v.kind for v in g.vertices}
    kind.update({e.id: e.kind for e in g.edges})
    odd_a = [x for x in a.order if pt.parity_of(kind[x]) == 1]
    odd_b = [x for x in b.order if pt.parity_of(kind[x]) == 1]
    pos_b = {x: i for i, x in enumerate(odd_b)}
    sign = permutation_sign([pos_b[x] for x in odd_a])
    for e in g.edges:
        if a.orientations[e.id] != b.orientations[e.id]:
            if pt.reversal_of(e.kind) == 1:
                sign = -sign
    return sign


# -- isomorphism and canonical forms ----------------------------------------


def _neighbor_profile(g: PlainGraph, colors: Mapping) -> dict:
    prof = {v.id: [] for v in g.vertices}
    for e in g.edges:
        if e.src == e.dst:
            prof[e.src].append((e.kind, "loop"))
            prof[e.src].append((e.kind, "loop"))
        else:
            prof[e.src].append((e.kind, colors[e.dst]))
            prof[e.dst].append((e.kind, colors[e.src]))
    return prof


def _refine(g: PlainGraph, colors: dict) -> dict:
    while True:
        prof = _neighbor_profile(g, colors)
        sig = {v.id: (colors[v.id], tuple(sorted(prof[v.id]))) for v in g.vertices}
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {vid: palette[s] for vid, s in sig.items()}
        if len(set(new.values())) == len(set(colors.values())):
            return new
        colors = new


def _initial_colors(g: PlainGraph) -> dict:
    base = {v.id: (VERTEX_KINDS.index(v.kind),) for v in g.vertices}
    palette = {s: i for i, s in enumerate(sorted(set(base.values())))}
    return _refine(g, {vid: palette[s] for vid, s in base.items()})


def _encode(g: PlainGraph, ordering: Sequence) -> tuple:
    pos = {vid: i for i, vid in enumerate(ordering)}
    kinds = tuple(g.vertex(vid).kind for vid in ordering)
    edges = []
    for e in g.edges:
        i, j = pos[e.src], pos[e.dst]
        edges.append((min(i, j), max(i, j), e.kind))
    return (kinds, tuple(sorted(edges)))


def _canonical_search(g: PlainGraph):
    """All vertex orderings realizing the minimal certificate, plus that
    certificate.  Individualization-refinement backtracking."""
    best = {"cert": None, "orders": []}

    def rec(colors: dict):
        classes = {}
        for vid, c in colors.items():
            classes.setdefault(c, []).append(vid)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = c
                break
        if target is None:
            ordering = tuple(vid for _, vid in sorted((c, vid) for vid, c in colors.items()))
            cert = _encode(g, ordering)
            if best["cert"] is None or cert < best["cert"]:
                best["cert"] = cert
                best["orders"] = {ordering}
            elif cert == best["cert"]:
                best["orders"].add(ordering)
            return
        n = len(colors)
        for vid in sorted(classes[target]):
            nxt = dict(colors)
            nxt[vid] = n + 1  # pull out of its class
            palette = {c: i for i, c in enumerate(sorted(set(nxt.values())))}
            rec(_refine(g, {u: palette[c] for u, c in nxt.items()}))

    if not g.vertices:
        return ((), ()), [()]
    rec(_initial_colors(g))
    return best["cert"], sorted(best["orders"])


def canonical_certificate(g: PlainGraph) -> tuple:
    cert, _ = _canonical_search(g)
    return cert


def canonical_ordering(g: PlainGraph) -> tuple:
    _, orders = _canonical_search(g)
    return orders[0]


def automorphisms(g: PlainGraph) -> list:
    """All kind- and edge-preserving vertex bijections g -> g."""
    _, orders = _canonical_search(g)
    base = orders[0]
    auts = []
    for o in orders:
        auts.append({base[i]: o[i] for i in range(len(base))})
    return auts


def automorphism_count(g: PlainGraph) -> int:
    return len(automorphisms(g))


def iso(g1: PlainGraph, g2: PlainGraph):
    """A kind-preserving isomorphism g1 -> g2 as a vertex map, or None."""
    c1, o1 = _canonical_search(g1)
    c2, o2 = _canonical_search(g2)
    if c1 != c2:
        return None
    mapping = {o1[0][i]: o2[0][i] for i in range(len(o1[0]))}
    return mapping


def iso_edge_map(g1: PlainGraph, g2: PlainGraph, vmap: Mapping) -> dict:
    """Extend a vertex isomorphism to an edge bijection (multi-edges matched
    within parallel classes in id order)."""
    buckets = {}
    for e in g2.edges:
        buckets.setdefault((e.kind, e.pair), []).append(e.id)
    for key in buckets:
        buckets[key].sort()
    emap = {}
    for e in sorted(g1.edges, key=lambda e: e.id):
        key = (e.kind, frozenset((vmap[e.src], vmap[e.dst])))
        if not buckets.get(key):
            raise GraphError("vertex map is not an isomorphism")
        emap[e.id] = buckets[key].pop(0)
    return emap


def pushforward_label(g1: PlainGraph, g2: PlainGraph, vmap: Mapping) -> Label:
    """g1's label transported onto g2 along the isomorphism vmap."""
    emap = iso_edge_map(g1, g2, vmap)
    gmap = dict(emap)
    gmap.update({v.id: vmap[v.id] for v in g1.vertices})
    order_ = tuple(gmap[x] for x in g1.label_order)
    orientations = {}
    for e in g1.edges:
        orientations[emap[e.id]] = (vmap[e.src], vmap[e.dst])
    return Label(order_, orientations)


def iso_sign(g1: PlainGraph, g2: PlainGraph, vmap: Mapping, pt: ParityTable = DEFAULT_PARITY) -> int:
    """Sign comparing g1's label pushed along vmap with g2's own label."""
    return label_sign(g2, pushforward_label(g1, g2, vmap), g2.label, pt)


def has_orientation_reversing_automorphism(g: PlainGraph, pt: ParityTable = DEFAULT_PARITY) -> bool:
    return any(iso_sign(g, g, a, pt) == -1 for a in automorphisms(g))


def brute_force_isomorphisms(g1: PlainGraph, g2: PlainGraph) -> list:
    """Oracle: every kind-preserving bijection matching the edge multisets.
    Exponential; only for small graphs in tests."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return []
    by_kind1 = {k: sorted(v.id for v in g1.vertices_of_kind(k)) for k in VERTEX_KINDS}
    by_kind2 = {k: sorted(v.id for v in g2.vertices_of_kind(k)) for k in VERTEX_KINDS}
    if any(len(by_kind1[k]) != len(by_kind2[k]) for k in VERTEX_KINDS):
        return []

    def edge_multiset(g, vmap=None):
        out = []
        for e in g.edges:
            a, b = (vmap[e.src], vmap[e.dst]) if vmap else (e.src, e.dst)
            out.append((e.kind, tuple(sorted((a, b)))))
        return sorted(out)

    target = edge_multiset(g2)
    result = []
    perms = [
        itertools.permutations(by_kind2[k]) if by_kind1[k] else [()] for k in VERTEX_KINDS
    ]
    for combo in itertools.product(*perms):
        vmap = {}
        for k, images in zip(VERTEX_KINDS, combo):
            vmap.update(dict(zip(by_kind1[k], images)))
        if edge_multiset(g1, vmap) == target:
            result.append(vmap)
    return result
