"""Quivers, Dynkin recognition and the Euler form.

A quiver is a finite directed graph with integer vertex ids.  The engine
only accepts connected, simply-laced orientations of Dynkin diagrams
(families A, D, E); everything else is rejected up front with a typed error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import NotAcyclic, NotDynkin, ParseError, ValidationError


@dataclass(frozen=True)
class Arrow:
    idx: int
    src: int
    tgt: int


class QuiverSpec:
    """Normalized quiver: vertices sorted, arrow ids assigned by (src, tgt)."""

    def __init__(self, vertices, arrow_pairs):
        verts = sorted(set(int(v) for v in vertices))
        if not verts:
            raise ValidationError("quiver has no vertices")
        pairs = [(int(s), int(t)) for s, t in arrow_pairs]
        for s, t in pairs:
            if s == t:
                raise ValidationError(f"loop at vertex {s}")
            if s not in verts or t not in verts:
                raise ValidationError(f"arrow {s}->{t} uses unknown vertex")
        seen_edges = set()
        for s, t in pairs:
            edge = frozenset((s, t))
            if edge in seen_edges:
                raise ValidationError(f"parallel edge between {s} and {t}")
            seen_edges.add(edge)
        pairs.sort()
        self.vertices: tuple[int, ...] = tuple(verts)
        self.arrows: tuple[Arrow, ...] = tuple(
            Arrow(i, s, t) for i, (s, t) in enumerate(pairs)
        )
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        self.out = {v: [] for v in self.vertices}
        self.inc = {v: [] for v in self.vertices}
        for a in self.arrows:
            self.out[a.src].append(a)
            self.inc[a.tgt].append(a)
        self._check_connected()

    @property
    def n(self) -> int:
        return len(self.vertices)

    def _check_connected(self):
        if self.n == 1:
            return
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        nbrs = {v: set() for v in self.vertices}
        for a in self.arrows:
            nbrs[a.src].add(a.tgt)
            nbrs[a.tgt].add(a.src)
        while stack:
            v = stack.pop()
            for w in sorted(nbrs[v]):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n:
            raise ValidationError("quiver is not connected")

    def degree(self, v: int) -> int:
        return len(self.out[v]) + len(self.inc[v])

    def has_directed_cycle(self) -> bool:
        color = {v: 0 for v in self.vertices}

        def visit(v):
            color[v] = 1
            for a in self.out[v]:
                if color[a.tgt] == 1:
                    return True
                if color[a.tgt] == 0 and visit(a.tgt):
                    return True
            color[v] = 2
            return False

        return any(color[v] == 0 and visit(v) for v in self.vertices)

    def topological_order(self) -> list[int]:
        """Vertices with sources first; requires acyclicity."""
        indeg = {v: len(self.inc[v]) for v in self.vertices}
        ready = sorted(v for v in self.vertices if indeg[v] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.out[v]:
                indeg[a.tgt] -= 1
                if indeg[a.tgt] == 0:
                    # insertion keeps the ready list sorted
                    lo = 0
                    while lo < len(ready) and ready[lo] < a.tgt:
                        lo += 1
                    ready.insert(lo, a.tgt)
        if len(order) != self.n:
            raise NotAcyclic("quiver has a directed cycle")
        return order

    def reachable_from(self, v: int) -> set[int]:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for a in self.out[u]:
                if a.tgt not in seen:
                    seen.add(a.tgt)
                    stack.append(a.tgt)
        return seen

    def coreachable_to(self, v: int) -> set[int]:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for a in self.inc[u]:
                if a.src not in seen:
                    seen.add(a.src)
                    stack.append(a.src)
        return seen

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"id": a.idx, "src": a.src, "tgt": a.tgt} for a in self.arrows],
        }

    def text(self) -> str:
        if not self.arrows:
            return " ".join(str(v) for v in self.vertices)
        return " ".join(f"{a.src}->{a.tgt}" for a in self.arrows)

    def __eq__(self, other):
        return (
            isinstance(other, QuiverSpec)
            and self.vertices == other.vertices
            and [(a.src, a.tgt) for a in self.arrows]
            == [(a.src, a.tgt) for a in other.arrows]
        )

    def __hash__(self):
        return hash((self.vertices, tuple((a.src, a.tgt) for a in self.arrows)))


def parse_quiver(data) -> QuiverSpec:
    """Accept "1->2 2->3" text, a JSON dict, or a JSON string of either."""
    if isinstance(data, QuiverSpec):
        return data
    if isinstance(data, dict):
        return _from_dict(data)
    if not isinstance(data, str):
        raise ParseError(f"cannot parse quiver from {type(data).__name__}")
    text = data.strip()
    if not text:
        raise ParseError("empty quiver description")
    if text.startswith("{"):
        try:
            return _from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"bad quiver JSON: {e}") from e
    vertices: list[int] = []
    pairs = []
    for token in text.replace(",", " ").split():
        if "->" in token:
            left, _, right = token.partition("->")
            try:
                s, t = int(left), int(right)
            except ValueError as e:
                raise ParseError(f"bad arrow token {token!r}") from e
            pairs.append((s, t))
            vertices.extend((s, t))
        else:
            try:
                vertices.append(int(token))
            except ValueError as e:
                raise ParseError(f"bad vertex token {token!r}") from e
    return QuiverSpec(vertices, pairs)


def _from_dict(d: dict) -> QuiverSpec:
    try:
        vertices = d["vertices"]
        arrows = d.get("arrows", [])
        pairs = [(a["src"], a["tgt"]) for a in arrows]
    except (KeyError, TypeError) as e:
        raise ParseError(f"bad quiver JSON shape: {e}") from e
    return QuiverSpec(vertices, pairs)


_COXETER = {"A": lambda n: n + 1, "D": lambda n: 2 * n - 2, "E": {6: 12, 7: 18, 8: 30}}


@dataclass(frozen=True)
class DynkinClass:
    family: str
    rank: int

    @property
    def coxeter_number(self) -> int:
        if self.family == "E":
            return _COXETER["E"][self.rank]
        return _COXETER[self.family](self.rank)

    def __str__(self):
        return f"{self.family}{self.rank}"


def recognize_dynkin(q: QuiverSpec) -> DynkinClass:
    """Classify the underlying graph; oriented cycles are reported first."""
    if q.has_directed_cycle():
        raise NotAcyclic("orientation has a directed cycle")
    if len(q.arrows) != q.n - 1:
        raise NotDynkin("underlying graph is not a tree")
    degrees = {v: q.degree(v) for v in q.vertices}
    if any(d > 3 for d in degrees.values()):
        raise NotDynkin("vertex of degree > 3")
    branch = [v for v, d in degrees.items() if d == 3]
    if len(branch) > 1:
        raise NotDynkin("more than one branch vertex")
    if not branch:
        return DynkinClass("A", q.n)
    # one trivalent vertex: measure the three arm lengths
    b = branch[0]
    nbrs = {v: set() for v in q.vertices}
    for a in q.arrows:
        nbrs[a.src].add(a.tgt)
        nbrs[a.tgt].add(a.src)
    arms = []
    for start in sorted(nbrs[b]):
        length = 1
        prev, cur = b, start
        while True:
            nxt = [w for w in nbrs[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return DynkinClass("D", q.n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return DynkinClass("E", q.n)
    raise NotDynkin(f"arm lengths {tuple(arms)} are not Dynkin")


def dimvec(q: QuiverSpec, d) -> tuple[int, ...]:
    """Normalize a vertex->int mapping (or aligned sequence) to a tuple."""
    if isinstance(d, dict):
        extra = set(d) - set(q.vertices)
        if extra:
            raise ValidationError(f"dimension vector supported outside quiver: {sorted(extra)}")
        return tuple(int(d.get(v, 0)) for v in q.vertices)
    t = tuple(int(x) for x in d)
    if len(t) != q.n:
        raise ValidationError("dimension vector length mismatch")
    return t


def euler_form(q: QuiverSpec, d, e) -> int:
    """<d, e> = sum_v d_v e_v - sum_{a: u->w} d_u e_w."""
    dt, et = dimvec(q, d), dimvec(q, e)
    total = sum(x * y for x, y in zip(dt, et))
    for a in q.arrows:
        total -= dt[q.vindex[a.src]] * et[q.vindex[a.tgt]]
    return total


def symmetric_euler_form(q: QuiverSpec, d, e) -> int:
    return euler_form(q, d, e) + euler_form(q, e, d)
