"""Windowed stable translation quiver and the knitting of its module region.

Positions are pairs ``(k, v)`` with ``k`` a slice index and ``v`` a vertex of
the defining quiver Q.  For every arrow u -> w of Q the translation quiver
carries arrows ``(k, w) -> (k, u)`` and ``(k, u) -> (k+1, w)``; the
translation is ``tau(k, v) = (k-1, v)``.  Indecomposable projectives sit on
slice 0, and mesh additivity propagates K-theory classes across the window:
a position belongs to the module region while its class stays a positive
vector along its tau-orbit.  The orbit of the projective at v ends at an
injective position, which pins down the shift: ``[1]`` sends slice-0
positions one step past the matching injective and extends
tau-equivariantly.  ``F = tau^{-1} o [1]`` is the orbit identification used
by the cluster layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalError, WindowTooSmall
from .quiver import DynkinClass, QuiverSpec, recognize_dynkin

ZVertex = tuple[int, int]  # (slice, base vertex id)


@dataclass(frozen=True)
class ZArrow:
    idx: int
    src: ZVertex
    tgt: ZVertex


@dataclass(frozen=True)
class Mesh:
    """Mesh ending at ``end``: tau(end) -> middles -> end."""

    end: ZVertex
    start: ZVertex
    # one entry per middle: (middle, arrow middle->end, arrow start->middle)
    legs: tuple[tuple[ZVertex, int, int], ...]


class TranslationQuiver:
    def __init__(self, q: QuiverSpec, kmin: int, kmax: int):
        self.q = q
        self.kmin = kmin
        self.kmax = kmax
        topo = q.topological_order()
        self.base_forward = topo               # sources first
        self.base_backward = list(reversed(topo))  # sinks first
        self.vertices: list[ZVertex] = [
            (k, v) for k in range(kmin, kmax + 1) for v in self.base_backward
        ]
        self.vertex_set = set(self.vertices)
        arrows: list[ZArrow] = []
        arrow_id: dict[tuple[ZVertex, ZVertex], int] = {}

        def add(src: ZVertex, tgt: ZVertex):
            if src in self.vertex_set and tgt in self.vertex_set:
                a = ZArrow(len(arrows), src, tgt)
                arrows.append(a)
                arrow_id[(src, tgt)] = a.idx

        for k in range(kmin, kmax + 1):
            for qa in q.arrows:
                add((k, qa.tgt), (k, qa.src))
                add((k, qa.src), (k + 1, qa.tgt))
        self.arrows = tuple(arrows)
        self.arrow_id = arrow_id
        self.out: dict[ZVertex, list[ZArrow]] = {z: [] for z in self.vertices}
        self.inc: dict[ZVertex, list[ZArrow]] = {z: [] for z in self.vertices}
        for a in self.arrows:
            self.out[a.src].append(a)
            self.inc[a.tgt].append(a)
        # set by install_shift_and_F
        self.shift_offsets: dict[int, tuple[int, int]] | None = None
        self._shift_inverse: dict[int, tuple[int, int]] | None = None

    # -- structure ---------------------------------------------------------

    def tau(self, z: ZVertex) -> ZVertex:
        return (z[0] - 1, z[1])

    def tau_inv(self, z: ZVertex) -> ZVertex:
        return (z[0] + 1, z[1])

    def mesh(self, end: ZVertex) -> Mesh:
        """The mesh ending at ``end``; legs whose middle leaves the window
        are dropped (callers treat missing middles as zero)."""
        k, v = end
        start = (k - 1, v)
        legs = []
        for qa in self.q.inc[v]:  # u -> v gives middle (k-1, u)
            m = (k - 1, qa.src)
            ain = self.arrow_id.get((m, end))
            aout = self.arrow_id.get((start, m))
            if ain is not None and aout is not None:
                legs.append((m, ain, aout))
        for qa in self.q.out[v]:  # v -> w gives middle (k, w)
            m = (k, qa.tgt)
            ain = self.arrow_id.get((m, end))
            aout = self.arrow_id.get((start, m))
            if ain is not None and aout is not None:
                legs.append((m, ain, aout))
        return Mesh(end, start, tuple(legs))

    def positions_in_order(self) -> list[ZVertex]:
        """Slice-major order, sinks of Q first inside each slice.

        Within a slice the middle positions of a mesh precede its end, so a
        single left-to-right pass can process every mesh."""
        return list(self.vertices)

    # -- shift and orbit maps (set after knitting) --------------------------

    def set_shift(self, offsets: dict[int, tuple[int, int]]):
        """offsets[v] = (c, w) meaning [1](k, v) = (k + c, w)."""
        self.shift_offsets = offsets
        self._shift_inverse = {w: (c, v) for v, (c, w) in offsets.items()}
        if len(self._shift_inverse) != len(offsets):
            raise InternalError("shift is not a bijection on tau-orbits")

    def shift(self, z: ZVertex, power: int = 1) -> ZVertex:
        if self.shift_offsets is None:
            raise InternalError("shift requested before installation")
        k, v = z
        if power >= 0:
            for _ in range(power):
                c, v2 = self.shift_offsets[v]
                k, v = k + c, v2
        else:
            for _ in range(-power):
                c, v2 = self._shift_inverse[v]
                k, v = k - c, v2
        return (k, v)

    def F(self, z: ZVertex, power: int = 1) -> ZVertex:
        """F = tau^{-1} o [1], iterated."""
        if power >= 0:
            for _ in range(power):
                z = self.tau_inv(self.shift(z, 1))
        else:
            for _ in range(-power):
                z = self.shift(self.tau(z), -1)
        return z


@dataclass
class ModuleRegion:
    """Knitting output: K-theory classes over the window plus the module
    region with its projective/injective bookkeeping."""

    q: QuiverSpec
    classes: dict[ZVertex, tuple[int, ...]]
    modules: list[ZVertex]
    dims: dict[ZVertex, tuple[int, ...]]
    proj_pos: dict[int, ZVertex]
    inj_pos: dict[int, ZVertex]
    sigma: dict[int, int] = field(default_factory=dict)

    @property
    def h(self) -> int:
        return len(self.modules)


def std_window(dynkin: DynkinClass) -> tuple[int, int]:
    w = 2 * (dynkin.coxeter_number + 2)
    return (-w, w)


def build_zquiver(q: QuiverSpec, window: tuple[int, int] | None = None) -> TranslationQuiver:
    dynkin = recognize_dynkin(q)
    if window is None:
        window = std_window(dynkin)
    kmin, kmax = window
    if kmin > -2 or kmax < dynkin.coxeter_number:
        raise WindowTooSmall(f"window {window} cannot hold the module region")
    return TranslationQuiver(q, kmin, kmax)


def _projective_dims(q: QuiverSpec) -> dict[int, tuple[int, ...]]:
    out = {}
    for v in q.vertices:
        reach = q.reachable_from(v)
        out[v] = tuple(1 if w in reach else 0 for w in q.vertices)
    return out


def _injective_dims(q: QuiverSpec) -> dict[int, tuple[int, ...]]:
    out = {}
    for v in q.vertices:
        reach = q.coreachable_to(v)
        out[v] = tuple(1 if w in reach else 0 for w in q.vertices)
    return out


def knit(q: QuiverSpec, tq: TranslationQuiver) -> ModuleRegion:
    """Propagate classes by mesh additivity and carve out the module region.

    Classes are exact on every mesh: class(start) + class(end) = sum of the
    middles.  Slice 0 carries the projectives.  A tau-orbit stays in the
    module region while the propagated class is a nonzero nonnegative
    vector; the last position of each orbit must be an injective, and
    matching injectives to orbits must produce a permutation.
    """
    n = q.n
    pdims = _projective_dims(q)
    idims = _injective_dims(q)
    classes: dict[ZVertex, tuple[int, ...]] = {}
    for v in q.vertices:
        classes[(0, v)] = pdims[v]

    def mesh_sum(end: ZVertex, table) -> tuple[int, ...]:
        total = [0] * n
        k, v = end
        for qa in q.inc[v]:
            m = (k - 1, qa.src)
            if m in table:
                total = [a + b for a, b in zip(total, table[m])]
        for qa in q.out[v]:
            m = (k, qa.tgt)
            if m in table:
                total = [a + b for a, b in zip(total, table[m])]
        return tuple(total)

    # forward: class(k+1, v) = sum(middles of mesh at (k+1, v)) - class(k, v)
    for k in range(0, tq.kmax):
        for v in tq.base_backward:
            end = (k + 1, v)
            s = mesh_sum(end, classes)
            prev = classes[(k, v)]
            classes[end] = tuple(a - b for a, b in zip(s, prev))
    # backward: class(k, v) = sum(middles of mesh at (k+1, v)) - class(k+1, v)
    for k in range(-1, tq.kmin - 1, -1):
        for v in tq.base_forward:
            end = (k + 1, v)
            s = mesh_sum(end, classes)
            classes[(k, v)] = tuple(a - b for a, b in zip(s, classes[end]))

    def positive(c: tuple[int, ...]) -> bool:
        return any(x > 0 for x in c) and all(x >= 0 for x in c)

    modules: list[ZVertex] = []
    dims: dict[ZVertex, tuple[int, ...]] = {}
    orbit_end: dict[int, ZVertex] = {}
    for v in q.vertices:
        k = 0
        while True:
            c = classes[(k, v)]
            if not positive(c):
                if k == 0:
                    raise InternalError(f"projective class at (0,{v}) is not positive")
                break
            modules.append((k, v))
            dims[(k, v)] = c
            orbit_end[v] = (k, v)
            k += 1
            if k > tq.kmax:
                raise WindowTooSmall("module region reaches the window edge")

    # match orbit ends against injectives; demand a permutation
    inj_pos: dict[int, ZVertex] = {}
    sigma: dict[int, int] = {}
    by_dim = {idims[v]: v for v in q.vertices}
    if len(by_dim) != n:
        raise InternalError("injective dimension vectors collide")
    for v in q.vertices:
        end = orbit_end[v]
        w = by_dim.get(dims[end])
        if w is None:
            raise InternalError(f"orbit of {v} does not end at an injective")
        sigma[v] = w
        inj_pos[w] = end
    if len(inj_pos) != n:
        raise InternalError("orbit ends do not hit every injective once")

    modules.sort(key=lambda z: (z[0], tq.base_backward.index(z[1])))
    proj_pos = {v: (0, v) for v in q.vertices}
    return ModuleRegion(q, classes, modules, dims, proj_pos, inj_pos, sigma)


def install_shift_and_F(tq: TranslationQuiver, region: ModuleRegion) -> TranslationQuiver:
    """Define [1] on positions: [1](0, v) = tau^{-1}(pos I_v), extended
    tau-equivariantly; then F = tau^{-1} o [1].  The map must send arrows to
    arrows wherever both endpoint images stay inside the window, and F must
    be fixed-point free."""
    offsets = {}
    for v in tq.q.vertices:
        ik, iw = region.inj_pos[v]
        offsets[v] = (ik + 1, iw)
    tq.set_shift(offsets)

    for a in tq.arrows:
        s2, t2 = tq.shift(a.src), tq.shift(a.tgt)
        if s2 in tq.vertex_set and t2 in tq.vertex_set:
            if (s2, t2) not in tq.arrow_id:
                raise InternalError(f"[1] breaks arrow {a.src}->{a.tgt}")
    for z in tq.vertices:
        if tq.F(z) == z:
            raise InternalError(f"F fixes {z}")
    return tq


class ClusterQuiver:
    """AR-quiver of the orbit category: module region plus one slice of
    shifted projectives (represented by tau(pos P_v)), arrows and tau
    induced by F-orbit identification."""

    def __init__(self, tq: TranslationQuiver, region: ModuleRegion):
        self.tq = tq
        self.region = region
        shifted = [tq.tau(region.proj_pos[v]) for v in tq.q.vertices]
        self.domain: list[ZVertex] = sorted(
            region.modules + shifted, key=lambda z: (z[0], z[1])
        )
        self.domain_set = set(self.domain)
        self.index = {z: i for i, z in enumerate(self.domain)}
        self.arrows: list[tuple[ZVertex, ZVertex]] = []
        seen = set()
        for z in self.domain:
            for a in tq.out[z]:
                pair = (z, self.canonical(a.tgt))
                if pair not in seen:
                    seen.add(pair)
                    self.arrows.append(pair)
        self.arrows.sort(key=lambda p: (self.index[p[0]], self.index[p[1]]))
        self.tau_map = {z: self.canonical(tq.tau(z)) for z in self.domain}
        image = set(self.tau_map.values())
        if image != self.domain_set:
            raise InternalError("induced tau is not a permutation")

    def canonical(self, z: ZVertex) -> ZVertex:
        """The unique F-orbit representative inside the domain."""
        if z in self.domain_set:
            return z
        cur_up = cur_down = z
        for _ in range(64):
            cur_up = self.tq.F(cur_up, 1)
            if cur_up in self.domain_set:
                return cur_up
            cur_down = self.tq.F(cur_down, -1)
            if cur_down in self.domain_set:
                return cur_down
        raise InternalError(f"no orbit representative found for {z}")

    def is_shifted_projective(self, z: ZVertex) -> bool:
        return z[0] == -1

    def shifted_base(self, z: ZVertex) -> int:
        """For a shifted-projective representative tau(pos P_v), return v."""
        if not self.is_shifted_projective(z):
            raise InternalError(f"{z} is not a shifted projective")
        return z[1]


def cluster_ar_quiver(tq: TranslationQuiver, region: ModuleRegion) -> ClusterQuiver:
    return ClusterQuiver(tq, region)
