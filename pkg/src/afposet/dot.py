"""DOT renderers: Hasse diagrams, Bratteli diagrams, reconstructed spectra.

All output is deterministic; levels render as same-rank groups.
"""


def _quote(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def hasse_dot(h, name="hasse"):
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    by_level = {}
    for x, lv in sorted(h.levels.items()):
        by_level.setdefault(lv, []).append(x)
    for lv in sorted(by_level):
        members = " ".join(_quote(x) + ";" for x in sorted(by_level[lv]))
        lines.append(f"  {{ rank=same; {members} }}")
    for (a, b) in h.links:
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bratteli_dot(d, name="bratteli"):
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    for n in range(d.depth):
        ids = []
        for j, (dim, atom) in enumerate(d.levels[n]):
            node = f"n{n}_{j}"
            label = f"{dim}"
            lines.append(f"  {node} [label={_quote(label)}];")
            ids.append(node)
        members = " ".join(i + ";" for i in ids)
        lines.append(f"  {{ rank=same; {members} }}")
    for n, mat in enumerate(d.edges):
        for k, row in enumerate(mat):
            for j, mult in enumerate(row):
                for _ in range(mult):
                    lines.append(f"  n{n}_{j} -> n{n + 1}_{k};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def spectrum_dot(spec, name="prim"):
    from .topology import hasse

    return hasse_dot(hasse(spec.poset), name=name)
