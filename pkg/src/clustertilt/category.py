"""Cluster-category layer: orbit-sum Hom, Ext^1 via the shift, and
composition with F-twisted components.

Objects are canonical positions in the ClusterQuiver domain.  Morphism
spaces are direct sums of derived Hom into F-powers of the target, taken
over a guard range of powers; the extreme powers are asserted to contribute
zero, so the finite sum is a checked fact rather than an assumption.
Morphisms carry one path expression per power, and composition twists the
second factor by the F-power of the first before reducing in the mesh
category.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import ComposabilityError, InternalError, UnknownObject
from .meshhom import HomBasis, MeshHom, PathExpression, identity_expression
from .quiver import QuiverSpec, parse_quiver, recognize_dynkin
from .translation import (
    ZVertex,
    build_zquiver,
    cluster_ar_quiver,
    install_shift_and_F,
    knit,
    std_window,
)

GUARD_MIN = -3
GUARD_MAX = 3


@dataclass
class CMorphism:
    """Morphism in the orbit category: component i is a path expression
    from the source to F^i(target)."""

    source: ZVertex
    target: ZVertex
    comps: dict[int, PathExpression]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps.values())

    def scaled(self, c) -> "CMorphism":
        c = Fraction(c)
        return CMorphism(
            self.source, self.target, {i: e.scaled(c) for i, e in self.comps.items()}
        )

    def plus(self, other: "CMorphism") -> "CMorphism":
        if (self.source, self.target) != (other.source, other.target):
            raise ComposabilityError("cannot add morphisms with different endpoints")
        comps = dict(self.comps)
        for i, e in other.comps.items():
            comps[i] = comps[i].plus(e) if i in comps else e
        return CMorphism(self.source, self.target, comps)


@dataclass
class CHom:
    source: ZVertex
    target: ZVertex
    components: dict[int, HomBasis]  # only powers with nonzero dimension
    total: int

    def to_json(self) -> dict:
        return {
            "dims": {str(i): hb.dim for i, hb in sorted(self.components.items())},
            "total": self.total,
        }


@dataclass(frozen=True)
class CategorySummary:
    n: int
    h: int
    objects: int

    def to_json(self) -> dict:
        return {"n": self.n, "h": self.h, "objects": self.objects}


class ClusterCategory:
    """Facade owning the window, the knitted module region, the orbit
    quiver and the mesh Hom engine for one Dynkin quiver."""

    def __init__(self, q, window: tuple[int, int] | None = None):
        self.q: QuiverSpec = parse_quiver(q) if not isinstance(q, QuiverSpec) else q
        self.dynkin = recognize_dynkin(self.q)
        win = window if window is not None else std_window(self.dynkin)
        while True:
            tq = build_zquiver(self.q, win)
            region = knit(self.q, tq)
            install_shift_and_F(tq, region)
            cluster = cluster_ar_quiver(tq, region)
            # every F-power hit by the guard range must stay inside the
            # window on the right (left overflows are cut off by slice order)
            need = max(
                tq.F(z, i)[0] for z in cluster.domain for i in (1, 2, 3)
            )
            if need <= tq.kmax:
                break
            win = (win[0], need)
        self.tq = tq
        self.region = region
        self.cluster = cluster
        self.mesh = MeshHom(tq, region)
        self.objects: list[ZVertex] = list(cluster.domain)
        self.n = self.q.n
        self.h = region.h
        self._chom: dict[tuple[ZVertex, ZVertex], CHom] = {}
        self._tensors: dict = {}
        for z in self.objects:
            if cluster.canonical(tq.shift(z)) != cluster.tau_map[z]:
                raise InternalError(f"[1] and tau disagree on the orbit of {z}")

    # -- objects ---------------------------------------------------------------

    def summary(self) -> CategorySummary:
        return CategorySummary(self.n, self.h, self.h + self.n)

    def require_object(self, z: ZVertex) -> ZVertex:
        if z not in self.cluster.domain_set:
            raise UnknownObject(f"{z} is not a canonical object position")
        return z

    def canonical(self, z: ZVertex) -> ZVertex:
        return self.cluster.canonical(z)

    def is_shifted_projective(self, z: ZVertex) -> bool:
        return self.cluster.is_shifted_projective(z)

    def module_dims(self, z: ZVertex) -> tuple[int, ...]:
        return self.region.dims[z]

    def tau(self, z: ZVertex) -> ZVertex:
        return self.cluster.tau_map[self.require_object(z)]

    def tau_inv(self, z: ZVertex) -> ZVertex:
        return self.canonical(self.tq.tau_inv(self.require_object(z)))

    def shift_obj(self, z: ZVertex) -> ZVertex:
        """[1] composed with the orbit identification; equals tau on C."""
        return self.tau(z)

    # -- hom and ext -----------------------------------------------------------

    def hom_cluster(self, x: ZVertex, y: ZVertex) -> CHom:
        x = self.require_object(x)
        y = self.require_object(y)
        key = (x, y)
        cached = self._chom.get(key)
        if cached is not None:
            return cached
        components: dict[int, HomBasis] = {}
        for i in range(GUARD_MIN, GUARD_MAX + 1):
            target = self.tq.F(y, i)
            if target[0] < x[0]:
                dim = 0
            else:
                hb = self.mesh.hom_derived(x, target)
                dim = hb.dim
                if dim:
                    components[i] = hb
            if dim and i in (GUARD_MIN, GUARD_MAX):
                raise InternalError(
                    f"guard window violated: Hom(x, F^{i} y) != 0 for {x}, {y}"
                )
        if x[0] >= 0 and y[0] >= 0:
            if any(i not in (0, 1) for i in components):
                raise InternalError(
                    f"module pair {x}, {y} has components outside powers 0 and 1"
                )
        chom = CHom(x, y, components, sum(hb.dim for hb in components.values()))
        self._chom[key] = chom
        return chom

    def hom_dim(self, x: ZVertex, y: ZVertex) -> int:
        return self.hom_cluster(x, y).total

    def ext1_cluster(self, a: ZVertex, b: ZVertex) -> int:
        return self.hom_dim(a, self.shift_obj(b))

    # -- morphisms ---------------------------------------------------------------

    def basis(self, x: ZVertex, y: ZVertex) -> list[CMorphism]:
        chom = self.hom_cluster(x, y)
        out = []
        for i, hb in sorted(chom.components.items()):
            for el in hb.elements:
                out.append(CMorphism(x, y, {i: el}))
        return out

    def identity(self, z: ZVertex) -> CMorphism:
        return CMorphism(z, z, {0: identity_expression(z)})

    def zero_morphism(self, x: ZVertex, y: ZVertex) -> CMorphism:
        return CMorphism(x, y, {})

    def coords(self, m: CMorphism) -> list[Fraction]:
        """Coordinates in the basis() layout of Hom_C(source, target)."""
        chom = self.hom_cluster(m.source, m.target)
        out: list[Fraction] = []
        for i, hb in sorted(chom.components.items()):
            comp = m.comps.get(i)
            if comp is None:
                out.extend(linalg.zeros(hb.dim))
            else:
                out.extend(self.mesh.coords(comp))
        return out

    def morphism_from_coords(self, x: ZVertex, y: ZVertex, coords) -> CMorphism:
        basis = self.basis(x, y)
        if len(coords) != len(basis):
            raise InternalError("coordinate length does not match Hom basis")
        out = self.zero_morphism(x, y)
        for c, b in zip(coords, basis):
            if c:
                out = out.plus(b.scaled(c))
        return out

    def compose_cluster(self, f: CMorphism, g: CMorphism) -> CMorphism:
        """g after f; component k collects F^i(g_j) o f_i over i + j = k."""
        if f.target != g.source:
            raise ComposabilityError(
                f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}"
            )
        comps: dict[int, PathExpression] = {}
        for i, fi in f.comps.items():
            if fi.is_zero():
                continue
            for j, gj in g.comps.items():
                if gj.is_zero():
                    continue
                k = i + j
                if not GUARD_MIN <= k <= GUARD_MAX:
                    raise InternalError(f"composition leaves the guard window at {k}")
                twisted = self.mesh.transport(gj, "F", i)
                piece = self.mesh.compose(fi, twisted)
                comps[k] = comps[k].plus(piece) if k in comps else piece
        comps = {k: e for k, e in comps.items() if not e.is_zero()}
        return CMorphism(f.source, g.target, comps)

    def composition_tensor(self, x: ZVertex, y: ZVertex, z: ZVertex):
        """tensor[a][b] = coords of basis_b(y,z) o basis_a(x,y) in the basis
        of Hom_C(x, z); memoized."""
        key = (x, y, z)
        cached = self._tensors.get(key)
        if cached is not None:
            return cached
        bz = self.basis(x, y)
        bz2 = self.basis(y, z)
        tensor = [
            [self.coords(self.compose_cluster(a, b)) for b in bz2] for a in bz
        ]
        self._tensors[key] = tensor
        return tensor

    def end_dim(self, z: ZVertex) -> int:
        return self.hom_dim(z, z)
