"""Tilting theory in the orbit category: exceptional object sets, tilting
enumeration as maximal cliques of the Ext-compatibility graph, the
two-complement property of almost complete objects with their minimal
approximations, and the classical torsion pair of a tilting module.

Approximations are computed through the top of the restricted Hom functor:
every endomorphism ring in sight is one-dimensional, so the radical of
add T̄ consists exactly of the maps between distinct summands, and the
multiplicity of a summand in the minimal approximation is the dimension of
Hom modulo composites through the other summands.  Surjectivity and
minimality are then asserted outright instead of trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .category import ClusterCategory, CMorphism
from .errors import (
    InternalError,
    NotAlmostComplete,
    NotAModuleCollection,
    NotTilting,
)
from .translation import ZVertex


@dataclass(frozen=True)
class TiltingObject:
    summands: tuple[ZVertex, ...]


@dataclass
class ApproximationMap:
    target: ZVertex
    entries: list[tuple[ZVertex, CMorphism]]  # (summand, map summand -> target)


@dataclass
class ExchangePair:
    tbar: tuple[ZVertex, ...]
    M: ZVertex
    Mstar: ZVertex
    B: tuple[ZVertex, ...]
    Bprime: tuple[ZVertex, ...]
    T: TiltingObject
    Tprime: TiltingObject
    approx_M: ApproximationMap
    approx_Mstar: ApproximationMap


@dataclass
class TorsionPair:
    fac: tuple[ZVertex, ...]
    f_class: tuple[ZVertex, ...]


def _sorted_by_index(cat: ClusterCategory, objs) -> tuple[ZVertex, ...]:
    return tuple(sorted(objs, key=lambda z: cat.cluster.index[z]))


def is_exceptional(cat: ClusterCategory, objs) -> bool:
    objs = list(objs)
    for a in objs:
        for b in objs:
            if cat.ext1_cluster(a, b):
                return False
    return True


def _compatible_with_all(cat: ClusterCategory, x: ZVertex, objs) -> bool:
    return all(
        not cat.ext1_cluster(x, t) and not cat.ext1_cluster(t, x) for t in objs
    ) and not cat.ext1_cluster(x, x)


def is_tilting(cat: ClusterCategory, objs) -> bool:
    objs = list(dict.fromkeys(objs))
    rigid = is_exceptional(cat, objs)
    by_size = rigid and len(objs) == cat.n
    maximal = rigid and not any(
        _compatible_with_all(cat, x, objs) for x in cat.objects if x not in objs
    )
    if by_size != maximal:
        raise InternalError(
            "size-n and maximal-rigid characterizations disagree for "
            f"{sorted(objs)}"
        )
    return by_size


def _maximal_cliques(adj: list[int], n_vertices: int) -> list[tuple[int, ...]]:
    """All maximal cliques of a small graph, deterministic order."""
    out: list[tuple[int, ...]] = []

    def grow(clique: list, cand: int, excl: int):
        if cand == 0 and excl == 0:
            out.append(tuple(clique))
            return
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            clique.append(v)
            grow(clique, cand & adj[v], excl & adj[v])
            clique.pop()
            cand &= ~(1 << v)
            excl |= 1 << v

    grow([], (1 << n_vertices) - 1, 0)
    return sorted(out)


def enumerate_tilting(cat: ClusterCategory) -> list[TiltingObject]:
    """All tilting objects, via maximal cliques of the compatibility graph.

    Maximal rigid sets must all have exactly n elements; a deviation is a
    hard error rather than a filtered-out case."""
    objs = cat.objects
    m = len(objs)
    adj = [0] * m
    for i in range(m):
        if cat.ext1_cluster(objs[i], objs[i]):
            raise InternalError(f"object {objs[i]} has self-extensions")
        for j in range(i + 1, m):
            e_ij = cat.ext1_cluster(objs[i], objs[j])
            e_ji = cat.ext1_cluster(objs[j], objs[i])
            if (e_ij == 0) != (e_ji == 0):
                raise InternalError("Ext compatibility is not symmetric")
            if not e_ij:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    cliques = _maximal_cliques(adj, m)
    for c in cliques:
        if len(c) != cat.n:
            raise InternalError(
                f"maximal rigid set of size {len(c)} != n = {cat.n}"
            )
    result = []
    for c in cliques:
        summands = tuple(objs[i] for i in c)
        for t in summands:
            if cat.tau(t) in summands:
                raise InternalError("tilting object meets its own tau-shift")
        result.append(TiltingObject(summands))
    return result


# -- approximations ------------------------------------------------------------


def minimal_right_approximation(
    cat: ClusterCategory, target: ZVertex, tbar
) -> ApproximationMap:
    """Minimal right add T̄-approximation B -> target.

    Multiplicity of summand t = dim of Hom(t, target) modulo maps factoring
    through the other summands; the chosen lifts are the earliest basis
    vectors completing that quotient, which ties determinism to the path
    order of the Hom bases."""
    summands = _sorted_by_index(cat, tbar)
    entries: list[tuple[ZVertex, CMorphism]] = []
    for t in summands:
        if cat.end_dim(t) != 1:
            raise InternalError(f"endomorphisms of {t} are not scalars")
        basis_t = cat.basis(t, target)
        d = len(basis_t)
        if d == 0:
            continue
        rad = linalg.RowSpan(d)
        for u in summands:
            if u == t:
                continue
            tensor = cat.composition_tensor(t, u, target)
            for row_a in tensor:
                for vec in row_a:
                    rad.add(vec)
        for col in range(d):
            if rad.add(linalg.unit(d, col)):
                entries.append((t, basis_t[col]))
    _assert_right_approximation(cat, target, summands, entries, minimal=True)
    return ApproximationMap(target, entries)


def _covers(cat: ClusterCategory, target: ZVertex, summands, entries) -> bool:
    """Hom(t, B) -> Hom(t, target) surjective for every summand t."""
    for t in summands:
        d = len(cat.basis(t, target))
        if d == 0:
            continue
        span = linalg.RowSpan(d)
        for u, f in entries:
            for phi in cat.basis(t, u):
                span.add(cat.coords(cat.compose_cluster(phi, f)))
        if span.rank != d:
            return False
    return True


def _assert_right_approximation(cat, target, summands, entries, minimal: bool):
    if not _covers(cat, target, summands, entries):
        raise InternalError(f"approximation of {target} is not surjective")
    if minimal:
        for skip in range(len(entries)):
            reduced = entries[:skip] + entries[skip + 1 :]
            if _covers(cat, target, summands, reduced):
                raise InternalError(
                    f"approximation of {target} is not minimal at entry {skip}"
                )


# -- complements -----------------------------------------------------------------


def complements(cat: ClusterCategory, tbar) -> ExchangePair:
    """The exactly-two completions of an almost complete tilting object,
    packaged with both exchange approximations."""
    tbar = _sorted_by_index(cat, dict.fromkeys(tbar))
    if len(tbar) != cat.n - 1:
        raise NotAlmostComplete(
            f"expected {cat.n - 1} distinct summands, got {len(tbar)}"
        )
    if not is_exceptional(cat, tbar):
        raise NotAlmostComplete("summand set is not rigid")
    found = [
        x
        for x in cat.objects
        if x not in tbar and _compatible_with_all(cat, x, tbar)
    ]
    if len(found) != 2:
        raise InternalError(
            f"almost complete object has {len(found)} completions, not 2"
        )
    m, mstar = found
    for a, b in ((m, mstar), (mstar, m)):
        if cat.ext1_cluster(a, b) != 1:
            raise InternalError(
                f"exchange pair {a}, {b} has Ext dimension != 1"
            )
    t = TiltingObject(_sorted_by_index(cat, tbar + (m,)))
    tprime = TiltingObject(_sorted_by_index(cat, tbar + (mstar,)))
    approx_m = minimal_right_approximation(cat, m, tbar)
    approx_mstar = minimal_right_approximation(cat, mstar, tbar)
    return ExchangePair(
        tbar=tbar,
        M=m,
        Mstar=mstar,
        B=tuple(u for u, _ in approx_m.entries),
        Bprime=tuple(u for u, _ in approx_mstar.entries),
        T=t,
        Tprime=tprime,
        approx_M=approx_m,
        approx_Mstar=approx_mstar,
    )


# -- classical tilting modules and torsion pairs ----------------------------------


def _require_modules(cat: ClusterCategory, objs) -> tuple[ZVertex, ...]:
    objs = _sorted_by_index(cat, dict.fromkeys(objs))
    for z in objs:
        if cat.is_shifted_projective(z):
            raise NotAModuleCollection(f"{z} is a shifted projective")
    return objs


def ext1_modules(cat: ClusterCategory, x: ZVertex, y: ZVertex) -> int:
    """Ext^1 in mod H: a single derived Hom into the shifted target."""
    return cat.mesh.hom_derived(x, cat.tq.shift(y)).dim


def hom_modules(cat: ClusterCategory, x: ZVertex, y: ZVertex) -> int:
    return cat.mesh.hom_derived(x, y).dim


def is_tilting_module_H(cat: ClusterCategory, objs) -> bool:
    objs = _require_modules(cat, objs)
    if len(objs) != cat.n:
        return False
    return all(not ext1_modules(cat, a, b) for a in objs for b in objs)


def cogenerated_by(cat: ClusterCategory, x: ZVertex, gens) -> bool:
    """Whether the module at x embeds into a finite sum of the generator
    modules: the minimal left approximation is built from functor tops and
    tested for injectivity against every indecomposable module."""
    gens = list(dict.fromkeys(gens))
    if not gens:
        return False
    entries: list = []
    for g in gens:
        basis_g = cat.mesh.hom_derived(x, g).elements
        d = len(basis_g)
        if d == 0:
            continue
        rad = linalg.RowSpan(d)
        for u in gens:
            if u == g:
                continue
            for a in cat.mesh.hom_derived(x, u).elements:
                for b in cat.mesh.hom_derived(u, g).elements:
                    rad.add(cat.mesh.coords(cat.mesh.compose(a, b)))
        for col in range(d):
            if rad.add(linalg.unit(d, col)):
                entries.append((g, basis_g[col]))
    if not entries:
        return False
    for w in cat.region.modules:
        basis_w = cat.mesh.hom_derived(w, x).elements
        if not basis_w:
            continue
        rows = []
        for phi in basis_w:
            row: list = []
            for g, f in entries:
                row.extend(cat.mesh.coords(cat.mesh.compose(phi, f)))
            rows.append(row)
        if linalg.rank(rows, len(rows[0])) != len(basis_w):
            return False
    return True


def torsion_pair(cat: ClusterCategory, objs) -> TorsionPair:
    """Fac T and F_T of a tilting module, with the submodule description of
    F_T recomputed independently and compared."""
    objs = _require_modules(cat, objs)
    if not is_tilting_module_H(cat, objs):
        raise NotTilting(f"{sorted(objs)} is not a tilting module")
    modules = cat.region.modules
    fac = tuple(
        y for y in modules if all(not ext1_modules(cat, t, y) for t in objs)
    )
    f_class = tuple(
        x for x in modules if all(not hom_modules(cat, t, x) for t in objs)
    )
    for y in fac:
        for x in f_class:
            if hom_modules(cat, y, x):
                raise InternalError(
                    f"torsion pair is not Hom-orthogonal at {y}, {x}"
                )
    gens = [cat.tq.tau(t) for t in objs if t[0] > 0]
    sub = tuple(x for x in modules if cogenerated_by(cat, x, gens))
    if sub != f_class:
        raise InternalError(
            "torsion-free class differs from the submodule closure of tau T"
        )
    return TorsionPair(fac, f_class)
