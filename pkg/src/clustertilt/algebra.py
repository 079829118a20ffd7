"""Finite-dimensional basic algebras presented through their Hom-space data.

The input is a family of spaces H(i,j) (where paths from i to j take
values), a bilinear extension product, and the promise that every diagonal
space is spanned by the identity.  From that the algebra derives its
radical, Gabriel arrows as a complement of rad^2, the nilpotency degree,
path evaluation, a generating set of relations that is minimal modulo the
arrow ideal acting on both sides, and enough module theory (pivot-path
projectives, covers, syzygies) to compute projective dimensions with a
bounded-depth witness for non-termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import InternalError

Path = tuple[int, ...]  # arrow indices, composable left to right


@dataclass(frozen=True)
class AlgArrow:
    idx: int
    src: int
    tgt: int


@dataclass
class Rep:
    """Representation of the Gabriel quiver: mats[a] maps the src component
    into the tgt component, one row per src basis vector."""

    dims: tuple[int, ...]
    mats: dict[int, list[list[Fraction]]]

    def is_zero(self) -> bool:
        return not any(self.dims)


class PresentedAlgebra:
    def __init__(self, labels, dims: dict, mult):
        """labels: vertex labels in order; dims[(i,j)]: dimension of the
        value space of paths i -> j; mult(i, j, k, x, y): value of a path
        i -> j valued x extended by a path j -> k valued y."""
        self.labels = list(labels)
        self.m = len(self.labels)
        self.dims = dims
        self.mult = mult
        for i in range(self.m):
            if dims[(i, i)] != 1:
                raise InternalError(
                    f"endomorphism space at vertex {self.labels[i]} is not scalar"
                )
        self._rad2 = self._radical_squares()
        self.arrows, self._arrow_coords = self._gabriel_arrows()
        self.out: dict[int, list[AlgArrow]] = {i: [] for i in range(self.m)}
        for a in self.arrows:
            self.out[a.src].append(a)
        self.nilpotency = self._nilpotency_degree()
        self.paths = self._enumerate_paths()
        self.pivot_paths = self._pivot_paths()
        self.relations = self._relations()
        self.dim_total = sum(dims[(i, j)] for i in range(self.m) for j in range(self.m))
        self._proj_cache: dict[int, Rep] = {}

    # -- structure ---------------------------------------------------------

    def _unit(self, i: int) -> list[Fraction]:
        return [Fraction(1)]

    def _radical_squares(self) -> dict:
        """Span of two-step radical products per pair; products landing on a
        diagonal must vanish (a nonzero one would make two distinct vertices
        isomorphic)."""
        rad2 = {}
        for i in range(self.m):
            for j in range(self.m):
                span = linalg.RowSpan(self.dims[(i, j)])
                for l in range(self.m):
                    if l == i or l == j:
                        continue
                    di, dj = self.dims[(i, l)], self.dims[(l, j)]
                    for b in range(di):
                        x = linalg.unit(di, b)
                        for c in range(dj):
                            y = linalg.unit(dj, c)
                            prod = self.mult(i, l, j, x, y)
                            if i == j and not linalg.is_zero_vec(prod):
                                raise InternalError(
                                    f"radical product lands on the diagonal at {i}"
                                )
                            span.add(prod)
                rad2[(i, j)] = span
        return rad2

    def _gabriel_arrows(self):
        arrows: list[AlgArrow] = []
        coords: list[list[Fraction]] = []
        for i in range(self.m):
            for j in range(self.m):
                if i == j:
                    continue
                d = self.dims[(i, j)]
                span = linalg.RowSpan(d)
                for row in self._rad2[(i, j)].rows:
                    span.add(list(row))
                for col in range(d):
                    if span.add(linalg.unit(d, col)):
                        arrows.append(AlgArrow(len(arrows), i, j))
                        coords.append(linalg.unit(d, col))
        return arrows, coords

    def _nilpotency_degree(self) -> int:
        """Smallest L with rad^L = 0."""
        level = {
            (i, j): [linalg.unit(self.dims[(i, j)], b) for b in range(self.dims[(i, j)])]
            for i in range(self.m)
            for j in range(self.m)
            if i != j
        }
        power = 1
        bound = self.dim_total_bound()
        while any(level.values()):
            nxt: dict = {}
            for (l, j), vecs in level.items():
                if not vecs:
                    continue
                for i in range(self.m):
                    if i == l:
                        continue
                    di = self.dims[(i, l)]
                    if not di:
                        continue
                    span = nxt.setdefault((i, j), linalg.RowSpan(self.dims[(i, j)]))
                    for b in range(di):
                        x = linalg.unit(di, b)
                        for y in vecs:
                            span.add(self.mult(i, l, j, x, y))
            level = {k: [list(r) for r in s.rows] for k, s in nxt.items()}
            power += 1
            if power > bound:
                raise InternalError("radical filtration does not terminate")
        return power

    def dim_total_bound(self) -> int:
        return sum(self.dims.values()) + 2

    def _enumerate_paths(self) -> dict:
        """paths[(i,j)]: list of (arrow path, value coords), lengths 0..L,
        generated in length order and arrow order inside each length."""
        paths: dict = {
            (i, j): [] for i in range(self.m) for j in range(self.m)
        }
        frontier = []
        for i in range(self.m):
            entry = ((), self._unit(i))
            paths[(i, i)].append(entry)
            frontier.append((i, i, entry))
        for _ in range(self.nilpotency):
            nxt = []
            for (i, j, (p, val)) in frontier:
                for a in self.out[j]:
                    nval = self.mult(i, j, a.tgt, val, self._arrow_coords[a.idx])
                    entry = (p + (a.idx,), nval)
                    paths[(i, a.tgt)].append(entry)
                    nxt.append((i, a.tgt, entry))
            frontier = nxt
        return paths

    def _pivot_paths(self) -> dict:
        """Per pair, the earliest paths whose values form a basis; doubles
        as the check that path values span every H(i,j)."""
        pivots: dict = {}
        for key, entries in self.paths.items():
            span = linalg.RowSpan(self.dims[key])
            chosen = []
            for p, val in entries:
                if span.add(val):
                    chosen.append((p, val))
            if len(chosen) != self.dims[key]:
                raise InternalError(
                    f"path values do not span the Hom space at {key}"
                )
            pivots[key] = chosen
        return pivots

    def _kernel_combos(self, key, entries):
        """Kernel of evaluation on the given path list, as coefficient
        vectors over the list."""
        rows = [val for _, val in entries]
        return linalg.kernel_basis(rows, self.dims[key])

    def _relations(self):
        """Relations per endpoint pair: kernel of evaluation on paths of
        length 2..L, reduced modulo arrow-ideal multiples of shorter kernel
        elements.  Each relation is a list of (path, coefficient) terms."""
        out = []
        for i in range(self.m):
            for j in range(self.m):
                long_paths = [
                    (p, val) for p, val in self.paths[(i, j)] if len(p) >= 2
                ]
                if not long_paths:
                    continue
                index = {p: pos for pos, (p, _) in enumerate(long_paths)}
                width = len(long_paths)
                kernel = self._kernel_combos((i, j), long_paths)
                if not kernel:
                    continue
                shifted = linalg.RowSpan(width)
                for l in range(self.m):
                    # arrow a: i -> l, kernel element l -> j, and mirrored
                    sub = [
                        (p, val)
                        for p, val in self.paths[(l, j)]
                        if 2 <= len(p) <= self.nilpotency - 1
                    ]
                    for combo in self._kernel_combos((l, j), sub):
                        for a in self.out[i]:
                            if a.tgt != l:
                                continue
                            vec = linalg.zeros(width)
                            for c, (p, _) in zip(combo, sub):
                                if c:
                                    vec[index[(a.idx,) + p]] += c
                            shifted.add(vec)
                    sub2 = [
                        (p, val)
                        for p, val in self.paths[(i, l)]
                        if 2 <= len(p) <= self.nilpotency - 1
                    ]
                    for combo in self._kernel_combos((i, l), sub2):
                        for a in self.out[l]:
                            if a.tgt != j:
                                continue
                            vec = linalg.zeros(width)
                            for c, (p, _) in zip(combo, sub2):
                                if c:
                                    vec[index[p + (a.idx,)]] += c
                            shifted.add(vec)
                for combo in kernel:
                    if shifted.add(list(combo)):
                        rel = [
                            (p, c)
                            for c, (p, _) in zip(combo, long_paths)
                            if c
                        ]
                        out.append((i, j, rel))
        return out

    @property
    def is_hereditary(self) -> bool:
        return not self.relations

    @property
    def has_cycles(self) -> bool:
        color = {}

        def dfs(v) -> bool:
            color[v] = 1
            for a in self.out[v]:
                c = color.get(a.tgt, 0)
                if c == 1:
                    return True
                if c == 0 and dfs(a.tgt):
                    return True
            color[v] = 2
            return False

        return any(color.get(v, 0) == 0 and dfs(v) for v in range(self.m))

    # -- module theory -------------------------------------------------------

    def simple(self, i: int) -> Rep:
        dims = tuple(1 if j == i else 0 for j in range(self.m))
        mats = {
            a.idx: [linalg.zeros(dims[a.tgt]) for _ in range(dims[a.src])]
            for a in self.arrows
        }
        return Rep(dims, mats)

    def projective(self, i: int) -> Rep:
        cached = self._proj_cache.get(i)
        if cached is not None:
            return cached
        dims = tuple(len(self.pivot_paths[(i, j)]) for j in range(self.m))
        mats = {}
        for a in self.arrows:
            rows = []
            basis_t = [val for _, val in self.pivot_paths[(i, a.tgt)]]
            for p, val in self.pivot_paths[(i, a.src)]:
                nval = self.mult(i, a.src, a.tgt, val, self._arrow_coords[a.idx])
                sol = linalg.solve_in_span(basis_t, nval)
                if sol is None:
                    raise InternalError("projective arrow action leaves the span")
                rows.append(sol)
            mats[a.idx] = rows
        rep = Rep(dims, mats)
        self._proj_cache[i] = rep
        return rep

    def _rep_path_action(self, rep: Rep, start_vertex: int, vec, path: Path):
        cur_v, cur = start_vertex, list(vec)
        for aid in path:
            a = self.arrows[aid]
            if a.src != cur_v:
                raise InternalError("path does not chain in representation action")
            cur = linalg.mat_apply(rep.mats[aid], cur)
            cur_v = a.tgt
            if not cur:
                cur = linalg.zeros(rep.dims[cur_v])
        return cur_v, cur

    def syzygy(self, rep: Rep) -> Rep:
        """Kernel of the projective cover, as a representation."""
        tops: list[tuple[int, list[Fraction]]] = []
        for i in range(self.m):
            span = linalg.RowSpan(rep.dims[i])
            for a in self.arrows:
                if a.tgt != i:
                    continue
                for row in rep.mats[a.idx]:
                    span.add(row)
            for col in range(rep.dims[i]):
                if span.add(linalg.unit(rep.dims[i], col)):
                    tops.append((i, linalg.unit(rep.dims[i], col)))
        copies = [(i, v, self.projective(i)) for i, v in tops]
        # cover map rows per vertex j, domain = stacked projective components
        cover: dict[int, list[list[Fraction]]] = {}
        offsets: dict[int, list[int]] = {j: [] for j in range(self.m)}
        for j in range(self.m):
            rows = []
            for i, v, proj in copies:
                offsets[j].append(len(rows))
                for p, _ in self.pivot_paths[(i, j)]:
                    _, img = self._rep_path_action(rep, i, v, p)
                    rows.append(img)
            cover[j] = rows
            if linalg.rank(rows, rep.dims[j]) != rep.dims[j]:
                raise InternalError("projective cover is not surjective")
        kernels = {
            j: linalg.kernel_basis(cover[j], rep.dims[j]) for j in range(self.m)
        }
        dims = tuple(len(kernels[j]) for j in range(self.m))
        mats = {}
        for a in self.arrows:
            rows = []
            for w in kernels[a.src]:
                img = linalg.zeros(len(cover[a.tgt]))
                for ci, (i, v, proj) in enumerate(copies):
                    seg = w[
                        offsets[a.src][ci] : offsets[a.src][ci] + proj.dims[a.src]
                    ]
                    if all(x == 0 for x in seg):
                        continue
                    moved = linalg.mat_apply(proj.mats[a.idx], seg)
                    base = offsets[a.tgt][ci]
                    for t, x in enumerate(moved):
                        img[base + t] += x
                sol = linalg.solve_in_span(kernels[a.tgt], img)
                if sol is None:
                    raise InternalError("syzygy is not arrow-stable")
                rows.append(sol)
            mats[a.idx] = rows
        return Rep(dims, mats)

    def pd_flag(self, rep: Rep, bound: int) -> tuple[str, int | None]:
        """("finite", d) or ("witnessed-infinite", None): the witness is a
        repeated syzygy dimension vector or an exhausted depth bound."""
        seen = {rep.dims}
        cur = rep
        for d in range(bound + 1):
            cur = self.syzygy(cur)
            if cur.is_zero():
                return ("finite", d)
            if cur.dims in seen:
                return ("witnessed-infinite", None)
            seen.add(cur.dims)
        return ("witnessed-infinite", None)

    def gldim_flag(self, bound: int) -> tuple[str, int | None]:
        worst = 0
        for i in range(self.m):
            flag, d = self.pd_flag(self.simple(i), bound)
            if flag != "finite":
                return ("witnessed-infinite", None)
            worst = max(worst, d)
        return ("finite", worst)
