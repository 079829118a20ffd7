"""Graph views and DOT emitters.

Three AR-style views share one payload shape: the module AR-quiver (mode
H), the cluster AR-quiver (mode C), and the vertex-deleted model of a
tilting object (mode gamma).  The windowed derived quiver (mode D) keys
vertices by position instead of object id.  Everything is emitted in a
fixed order so output is byte-identical across runs.
"""

from __future__ import annotations

from . import naming
from .category import ClusterCategory
from .clustertilted import AlgebraPresentation, module_category
from .errors import ValidationError
from .tilting import TiltingObject

MODES = ("H", "C", "D", "gamma")


def _vertex_entry(cat: ClusterCategory, ids, z) -> dict:
    shifted = cat.is_shifted_projective(z)
    return {
        "id": ids[z],
        "name": naming.object_name(cat, z),
        "slice": z[0],
        "vertex": z[1],
        "dims": None if shifted else list(cat.module_dims(z)),
        "shifted": shifted,
    }


def ar_view(
    cat: ClusterCategory, mode: str = "C", tilting: TiltingObject | None = None
) -> dict:
    if mode not in MODES:
        raise ValidationError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode == "D":
        return _derived_view(cat)
    ids = naming.object_ids(cat)
    if mode == "H":
        verts = list(cat.region.modules)
        vset = set(verts)
        arrows = [
            (a.src, a.tgt)
            for z in verts
            for a in cat.tq.out[z]
            if a.tgt in vset
        ]
        tau = [
            (z, cat.tq.tau(z)) for z in verts if cat.tq.tau(z) in vset
        ]
        view = {}
    elif mode == "C":
        verts = list(cat.cluster.domain)
        arrows = list(cat.cluster.arrows)
        tau = [(z, cat.tau(z)) for z in verts]
        view = {}
    else:
        if tilting is None:
            raise ValidationError("gamma view needs a tilting object")
        model = module_category(cat, tilting)
        verts = list(cat.cluster.domain)
        arrows = list(cat.cluster.arrows)
        tau = [(z, cat.tau(z)) for z in verts]
        view = {
            "deleted": sorted(ids[z] for z in model.deleted),
            "projectives": sorted(ids[z] for z in model.projective_of),
            "gammaDims": {
                str(ids[z]): list(m.dims) for z, m in sorted(
                    model.modules.items(), key=lambda kv: ids[kv[0]]
                )
            },
            "tauGamma": sorted(
                [ids[a], ids[b]] for a, b in model.tau.items()
            ),
        }
    out = {
        "mode": mode,
        "vertices": [
            _vertex_entry(cat, ids, z) for z in sorted(verts, key=lambda z: ids[z])
        ],
        "arrows": sorted([ids[a], ids[b]] for a, b in arrows),
        "tau": sorted([ids[a], ids[b]] for a, b in tau),
    }
    out.update(view)
    return out


def _derived_view(cat: ClusterCategory) -> dict:
    tq = cat.tq
    verts = tq.positions_in_order()
    vset = set(verts)
    return {
        "mode": "D",
        "vertices": [
            {
                "key": f"{k},{v}",
                "slice": k,
                "vertex": v,
                "class": list(cat.region.classes[(k, v)]),
            }
            for (k, v) in verts
        ],
        "arrows": sorted(
            [f"{a.src[0]},{a.src[1]}", f"{a.tgt[0]},{a.tgt[1]}"]
            for z in verts
            for a in tq.out[z]
            if a.tgt in vset
        ),
        "tau": sorted(
            [f"{k},{v}", f"{k - 1},{v}"]
            for (k, v) in verts
            if (k - 1, v) in vset
        ),
    }


def _dims_label(entry: dict) -> str:
    if entry.get("dims") is not None:
        return naming.module_name(tuple(entry["dims"]))
    if "class" in entry:
        return ".".join(str(d) for d in entry["class"])
    return entry["name"]


def ar_dot(view: dict, graph_name: str = "ar") -> str:
    lines = [f"digraph {graph_name} {{", "  rankdir=LR;", '  node [shape=box];']
    key = "key" if view["mode"] == "D" else "id"
    for entry in view["vertices"]:
        vid = entry[key]
        label = f"({entry['slice']},{entry['vertex']}) d={_dims_label(entry)}"
        deco = ""
        if entry.get("id") is not None and "deleted" in view:
            if entry["id"] in view["deleted"]:
                deco = ", style=dotted, color=gray"
            elif entry["id"] in view.get("projectives", ()):
                deco = ", style=bold"
        lines.append(f'  "{vid}" [label="{label}"{deco}];')
    for a, b in view["arrows"]:
        lines.append(f'  "{a}" -> "{b}";')
    for a, b in view["tau"]:
        lines.append(f'  "{a}" -> "{b}" [style=dashed, constraint=false];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _relation_text(rel) -> str:
    terms = []
    for path, coeff in rel:
        word = "".join(f"a{i}" for i in path)
        terms.append(word if str(coeff) == "1" else f"({coeff}){word}")
    return " + ".join(terms)


def algebra_dot(pres: AlgebraPresentation, graph_name: str = "endo") -> str:
    lines = [f"digraph {graph_name} {{", "  rankdir=LR;", "  node [shape=ellipse];"]
    for i, label in enumerate(pres.labels):
        lines.append(f'  "{i}" [label="{label}"];')
    for k, (s, t) in enumerate(pres.arrows):
        lines.append(f'  "{s}" -> "{t}" [label="a{k}"];')
    for rel in pres.relations:
        first_path = rel[0][0]
        src = pres.arrows[first_path[0]][0]
        tgt = pres.arrows[first_path[-1]][1]
        lines.append(
            f'  "{src}" -> "{tgt}" [style=dashed, color=gray, '
            f'label="{_relation_text(rel)} = 0"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
