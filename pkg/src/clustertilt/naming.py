"""Human-typable object names and the presentation order of objects.

Modules are named by their dimension vector joined with dots ("1.1.0"),
shifted projectives as "P<v>[1]".  Resolution additionally accepts the
aliases "P<v>", "S<v>", "I<v>" and plain integers indexing the
presentation order (modules in knitting order, then shifted projectives
by vertex).  Dimension vectors of indecomposables are pairwise distinct
in finite type, so the scheme is unambiguous.
"""

from __future__ import annotations

import re

from .category import ClusterCategory
from .errors import UnknownObject
from .translation import ZVertex

_SHIFT_RE = re.compile(r"^P(\d+)\[1\]$")
_ALIAS_RE = re.compile(r"^([PSI])(\d+)$")
_DIMS_RE = re.compile(r"^\d+(\.\d+)+$")


def module_name(dims: tuple[int, ...]) -> str:
    return ".".join(str(d) for d in dims)


def object_name(cat: ClusterCategory, z: ZVertex) -> str:
    z = cat.canonical(z)
    if cat.is_shifted_projective(z):
        return f"P{cat.cluster.shifted_base(z)}[1]"
    return module_name(cat.module_dims(z))


def object_list(cat: ClusterCategory) -> list[ZVertex]:
    """Presentation order: module region in knitting order, then one
    shifted projective per vertex.  Integer object ids index this list."""
    shifts = [cat.canonical((-1, v)) for v in cat.q.vertices]
    return list(cat.region.modules) + shifts


def object_ids(cat: ClusterCategory) -> dict[ZVertex, int]:
    return {z: i for i, z in enumerate(object_list(cat))}


def resolve(cat: ClusterCategory, name) -> ZVertex:
    s = str(name).strip()
    if s.isdigit():
        lst = object_list(cat)
        idx = int(s)
        if idx < len(lst):
            return lst[idx]
        raise UnknownObject(f"object id {idx} out of range 0..{len(lst) - 1}")
    m = _SHIFT_RE.match(s)
    if m:
        v = int(m.group(1))
        if v not in cat.q.vertices:
            raise UnknownObject(f"no vertex {v} for {s!r}")
        return cat.canonical((-1, v))
    m = _ALIAS_RE.match(s)
    if m:
        kind, v = m.group(1), int(m.group(2))
        if v not in cat.q.vertices:
            raise UnknownObject(f"no vertex {v} for {s!r}")
        if kind == "P":
            return cat.region.proj_pos[v]
        if kind == "I":
            return cat.region.inj_pos[v]
        unit = tuple(1 if u == v else 0 for u in cat.q.vertices)
        return _by_dims(cat, unit, s)
    if _DIMS_RE.match(s) or (s.isdigit() and cat.n == 1):
        dims = tuple(int(p) for p in s.split("."))
        if len(dims) == cat.n:
            return _by_dims(cat, dims, s)
    raise UnknownObject(f"cannot resolve object name {s!r}")


def _by_dims(cat: ClusterCategory, dims: tuple[int, ...], name: str) -> ZVertex:
    for z in cat.objects:
        if not cat.is_shifted_projective(z) and cat.module_dims(z) == dims:
            return z
    raise UnknownObject(f"no module with dimension vector {name!r}")


def resolve_many(cat: ClusterCategory, names) -> tuple[ZVertex, ...]:
    return tuple(resolve(cat, s) for s in names)
