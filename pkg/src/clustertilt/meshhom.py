"""Hom spaces of the mesh category on a translation-quiver window.

For a fixed source position X the functor Hom(X, -) is computed by a single
left-to-right pass: Hom(X, X) is one-dimensional on the empty path, and for
every later position z the mesh ending at z yields the presentation

    Hom(X, tau z) -> (+) Hom(X, m)  -> Hom(X, z) -> 0
                     m middle

whose cokernel is taken by exact rational elimination.  Basis vectors are
plain paths out of X (a candidate path through a middle, kept when its
column is not a pivot of the relation span), and every incoming arrow gets
an explicit matrix so that arbitrary path expressions can be re-expressed in
the chosen bases.  Dimensions are recomputed independently by the clipped
additive (hammock) recursion; any disagreement is a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import ComposabilityError, InternalError, WindowTooSmall
from .translation import ModuleRegion, TranslationQuiver, ZVertex

Path = tuple[int, ...]  # arrow ids, source to target


@dataclass
class PathExpression:
    """Rational combination of parallel paths in the window."""

    source: ZVertex
    target: ZVertex
    terms: dict[Path, Fraction]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.terms.values())

    def scaled(self, c) -> "PathExpression":
        c = Fraction(c)
        return PathExpression(
            self.source, self.target, {p: c * x for p, x in self.terms.items()}
        )

    def plus(self, other: "PathExpression") -> "PathExpression":
        if (self.source, self.target) != (other.source, other.target):
            raise ComposabilityError("cannot add maps with different endpoints")
        terms = dict(self.terms)
        for p, x in other.terms.items():
            terms[p] = terms.get(p, Fraction(0)) + x
        return PathExpression(self.source, self.target, terms)


def identity_expression(z: ZVertex) -> PathExpression:
    return PathExpression(z, z, {(): Fraction(1)})


@dataclass
class HomBasis:
    source: ZVertex
    target: ZVertex
    dim: int
    elements: tuple[PathExpression, ...]

    def to_json(self) -> dict:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "dim": self.dim,
        }


class _Node:
    __slots__ = ("dim", "paths", "in_mats")

    def __init__(self, dim: int, paths: tuple[Path, ...], in_mats: dict):
        self.dim = dim
        self.paths = paths
        # arrow id -> rows (one per basis vector of the arrow's source node)
        self.in_mats = in_mats


class MeshHom:
    def __init__(self, tq: TranslationQuiver, region: ModuleRegion):
        self.tq = tq
        self.region = region
        self._functors: dict[ZVertex, dict[ZVertex, _Node]] = {}
        self._hammocks: dict[ZVertex, dict[ZVertex, int]] = {}

    # -- functor construction ------------------------------------------------

    def _functor(self, x: ZVertex) -> dict[ZVertex, _Node]:
        cached = self._functors.get(x)
        if cached is not None:
            return cached
        if x not in self.tq.vertex_set:
            raise WindowTooSmall(f"source {x} is outside the window")
        nodes: dict[ZVertex, _Node] = {}
        seen_x = False
        for z in self.tq.positions_in_order():
            if z == x:
                in_mats = {a.idx: [] for a in self.tq.inc[z]}
                nodes[z] = _Node(1, ((),), in_mats)
                seen_x = True
                continue
            if not seen_x:
                continue
            mesh = self.tq.mesh(z)
            start = nodes.get(mesh.start)
            candidates: list[Path] = []
            segments: list[tuple[ZVertex, int, int, int]] = []  # (middle, ain, aout, offset)
            for middle, ain, aout in mesh.legs:
                m_node = nodes.get(middle)
                offset = len(candidates)
                if m_node is not None and m_node.dim:
                    for p in m_node.paths:
                        candidates.append(p + (ain,))
                segments.append((middle, ain, aout, offset))
            width = len(candidates)
            span = linalg.RowSpan(width)
            if start is not None and start.dim and width:
                for g in range(start.dim):
                    row = linalg.zeros(width)
                    for middle, ain, aout, offset in segments:
                        m_node = nodes.get(middle)
                        if m_node is None or not m_node.dim:
                            continue
                        img = m_node.in_mats[aout][g]
                        for j, val in enumerate(img):
                            row[offset + j] = val
                    span.add(row)
            pivots = set(span.pivots)
            basis_cols = [c for c in range(width) if c not in pivots]
            dim = len(basis_cols)
            paths = tuple(candidates[c] for c in basis_cols)
            in_mats: dict[int, list] = {}
            for middle, ain, aout, offset in segments:
                m_node = nodes.get(middle)
                rows = []
                if m_node is not None:
                    for j in range(m_node.dim):
                        red = span.reduce(linalg.unit(width, offset + j))
                        rows.append([red[c] for c in basis_cols])
                in_mats[ain] = rows
            nodes[z] = _Node(dim, paths, in_mats)
        if not seen_x:
            raise WindowTooSmall(f"source {x} is outside the window")
        self._functors[x] = nodes
        return nodes

    def hammock_dims(self, x: ZVertex) -> dict[ZVertex, int]:
        """Dimension-only recursion: f(z) = max(0, sum(middles) - f(tau z))."""
        cached = self._hammocks.get(x)
        if cached is not None:
            return cached
        dims: dict[ZVertex, int] = {}
        seen_x = False
        for z in self.tq.positions_in_order():
            if z == x:
                dims[z] = 1
                seen_x = True
                continue
            if not seen_x:
                continue
            mesh = self.tq.mesh(z)
            total = sum(dims.get(m, 0) for m, _, _ in mesh.legs)
            dims[z] = max(0, total - dims.get(mesh.start, 0))
        self._hammocks[x] = dims
        return dims

    # -- queries --------------------------------------------------------------

    def hom_derived(self, x: ZVertex, y: ZVertex) -> HomBasis:
        if y[0] < x[0]:
            return HomBasis(x, y, 0, ())
        if y not in self.tq.vertex_set:
            raise WindowTooSmall(f"target {y} is outside the window")
        nodes = self._functor(x)
        node = nodes.get(y)
        dim = node.dim if node is not None else 0
        expected = self.hammock_dims(x).get(y, 0)
        if dim != expected:
            raise InternalError(
                f"hammock and basis dimensions disagree at {x}->{y}: {expected} vs {dim}"
            )
        elements = tuple(
            PathExpression(x, y, {p: Fraction(1)}) for p in (node.paths if node else ())
        )
        return HomBasis(x, y, dim, elements)

    def hom_dim(self, x: ZVertex, y: ZVertex) -> int:
        return self.hom_derived(x, y).dim

    def coords(self, expr: PathExpression) -> list[Fraction]:
        """Coordinates of ``expr`` in the chosen basis of Hom(source, target)."""
        nodes = self._functor(expr.source)
        target_node = nodes.get(expr.target)
        dim = target_node.dim if target_node is not None else 0
        total = linalg.zeros(dim)
        for path, coeff in expr.terms.items():
            if not coeff:
                continue
            cur = [Fraction(1)]
            ok = True
            for aid in path:
                arrow = self.tq.arrows[aid]
                node = nodes.get(arrow.tgt)
                if node is None:
                    ok = False
                    break
                cur = linalg.mat_apply(node.in_mats[aid], cur)
                if not cur or linalg.is_zero_vec(cur):
                    cur = linalg.zeros(node.dim)
            if ok and dim:
                for j in range(dim):
                    total[j] += coeff * cur[j]
        return total

    def reduce(self, expr: PathExpression) -> PathExpression:
        """Re-express a path expression in the reduced basis of its Hom space."""
        basis = self.hom_derived(expr.source, expr.target)
        vec = self.coords(expr)
        terms: dict[Path, Fraction] = {}
        for c, el in zip(vec, basis.elements):
            if c:
                p = next(iter(el.terms))
                terms[p] = terms.get(p, Fraction(0)) + c
        return PathExpression(expr.source, expr.target, terms)

    def compose(self, f: PathExpression, g: PathExpression) -> PathExpression:
        """g after f, reduced: f: X -> Y, g: Y -> Z."""
        if f.target != g.source:
            raise ComposabilityError(
                f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}"
            )
        terms: dict[Path, Fraction] = {}
        for p1, c1 in f.terms.items():
            if not c1:
                continue
            for p2, c2 in g.terms.items():
                if not c2:
                    continue
                p = p1 + p2
                terms[p] = terms.get(p, Fraction(0)) + c1 * c2
        raw = PathExpression(f.source, g.target, terms)
        return self.reduce(raw)

    # -- automorphism transport ------------------------------------------------

    def _vertex_map(self, kind: str, power: int):
        tq = self.tq
        if kind == "tau":
            return lambda z: (z[0] - power, z[1])
        if kind == "shift":
            return lambda z: tq.shift(z, power)
        if kind == "F":
            return lambda z: tq.F(z, power)
        raise InternalError(f"unknown transport kind {kind!r}")

    def transport(self, expr: PathExpression, kind: str, power: int = 1) -> PathExpression:
        """Relabel a path expression along tau, [1] or F.

        Each arrow of each path is sent to the unique arrow between the
        image endpoints; leaving the window raises WindowTooSmall."""
        vmap = self._vertex_map(kind, power)
        new_terms: dict[Path, Fraction] = {}
        for path, coeff in expr.terms.items():
            cur = expr.source
            new_path = []
            for aid in path:
                arrow = self.tq.arrows[aid]
                if arrow.src != cur:
                    raise InternalError(f"path {path} does not chain at {cur}")
                s2, t2 = vmap(arrow.src), vmap(arrow.tgt)
                new_id = self.tq.arrow_id.get((s2, t2))
                if new_id is None:
                    raise WindowTooSmall(
                        f"transport of arrow {arrow.src}->{arrow.tgt} leaves the window"
                    )
                new_path.append(new_id)
                cur = arrow.tgt
            new_terms[tuple(new_path)] = coeff
        return PathExpression(vmap(expr.source), vmap(expr.target), new_terms)
