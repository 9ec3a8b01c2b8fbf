"""Command-line front end: parse input files, run a pipeline stage, report.

Exit status: 0 success, 1 domain error (non-T0 basis, |det| != 1,
non-stable depth, ...), 2 parse error.  Output is byte-identical across
runs for identical inputs.
"""

import argparse
import json
import sys

from . import bratteli, dot, formats, ktheory, spectrum, topology
from .errors import DomainError, ParseError


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")


def _load_incidence(args):
    if getattr(args, "matrix", None):
        rows = formats.parse_matrix(_read(args.matrix))
        return ktheory.IncidenceMatrix(rows)
    if not args.input:
        raise ParseError("either an input poset file or --matrix is required")
    p = formats.parse_poset(_read(args.input))
    d = bratteli.build_diagram(p, args.depth)
    return ktheory.incidence_from_diagram(d)


def _emit(args, text, json_records):
    out = text if args.format != "json-lines" else (
        "\n".join(json.dumps(r, sort_keys=True) for r in json_records) + "\n")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _cmd_quotient(args):
    space = formats.parse_covering(_read(args.input))
    p = topology.quotient_by_covering(space)
    if args.format == "dot":
        text = dot.hasse_dot(topology.hasse(p))
    else:
        text = formats.print_poset(p)
    records = [{"kind": "poset", "points": list(p.points),
                "links": [list(l) for l in topology.hasse(p).links]}]
    _emit(args, text, records)


def _cmd_poset_check(args):
    p = formats.parse_poset(_read(args.input))
    h = topology.hasse(p)
    closed = topology.closed_sets(p)
    if args.format == "dot":
        text = dot.hasse_dot(h)
    else:
        lines = [formats.print_poset(p).rstrip("\n")]
        lines.append(f"levels: {h.n_levels}")
        lines.append(f"links: {len(h.links)}")
        lines.append(f"closed sets: {len(closed)}")
        text = "\n".join(lines) + "\n"
    records = [{"kind": "poset-check", "points": list(p.points),
                "levels": h.n_levels, "links": len(h.links),
                "closed_sets": len(closed)}]
    _emit(args, text, records)


def _cmd_bratteli(args):
    p = formats.parse_poset(_read(args.input))
    d = bratteli.build_diagram(p, args.depth)
    if args.format == "dot":
        text = dot.bratteli_dot(d)
    else:
        text = bratteli.level_dump(d)
    records = [{"kind": "level", "n": n, "dims": list(d.dims(n)),
                "edges": [list(r) for r in d.edges[n]] if n < len(d.edges)
                else None}
               for n in range(d.depth)]
    records.append({"kind": "stable", "level": d.stable_level})
    _emit(args, text, records)


def _cmd_spectrum(args):
    p = formats.parse_poset(_read(args.input))
    d = bratteli.build_diagram(p, args.depth)
    spec = spectrum.prim_poset(d)
    if args.format == "dot":
        text = dot.spectrum_dot(spec)
    else:
        lines = [spectrum.ideal_report(d).rstrip("\n")]
        lines.append("prim poset:")
        lines.append(formats.print_poset(spec.poset).rstrip("\n"))
        text = "\n".join(lines) + "\n"
    records = []
    for ideal in spectrum.ideal_subdiagrams(d):
        records.append({"kind": "ideal", "selected": sorted(ideal.selected),
                        "primitive": spectrum.is_primitive(ideal, d)})
    records.append({"kind": "prim-poset",
                    "points": list(spec.poset.points)})
    _emit(args, text, records)


def _cmd_k0(args):
    t = _load_incidence(args)
    result = ktheory.k0_group(t)
    text = f"K0 = {result.group}, det(T) = {result.determinant}\n"
    records = [{"kind": "k0", "rank": result.rank,
                "determinant": result.determinant,
                "basis": list(result.basis)}]
    _emit(args, text, records)


def _cmd_cone(args):
    t = _load_incidence(args)
    try:
        desc = ktheory.unipotent_cone(t)
    except DomainError:
        desc = ktheory.perron_cone(t, tolerance=args.tolerance)
    text = desc.describe()
    record = {"kind": "cone", "variant": desc.kind,
              "labels": list(desc.labels)}
    if desc.kind == "unipotent-symbolic":
        record["coefficient_matrices"] = [
            [list(r) for r in m] for m in desc.coefficient_matrices]
    else:
        record["eigenvalue"] = desc.eigenvalue
        record["eigenvector"] = list(desc.eigenvector)
    _emit(args, text, [record])


def _cmd_member(args):
    t = _load_incidence(args)
    v = formats.parse_vector(args.vector)
    try:
        verdict = ktheory.cone_membership(t, v, args.m_max)
    except ValueError as exc:
        raise DomainError(str(exc))
    text = str(verdict) + "\n"
    records = [{"kind": "member", "vector": list(v),
                "status": verdict.status, "witness": verdict.witness}]
    _emit(args, text, records)


def _cmd_roundtrip(args):
    p = formats.parse_poset(_read(args.input))
    ok = spectrum.roundtrip_check(p)
    text = f"roundtrip: {'OK' if ok else 'FAILED'}\n"
    _emit(args, text, [{"kind": "roundtrip", "ok": ok}])
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="afposet",
        description="finite T0 posets -> Bratteli diagrams -> primitive "
                    "spectra -> ordered K-theory, in exact arithmetic")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, needs_input=True, matrix_ok=False):
        if needs_input:
            sp.add_argument("input", nargs="?" if matrix_ok else None,
                            help="input file (poset or covering format)")
        sp.add_argument("--output", help="write the report here instead of stdout")
        sp.add_argument("--format", choices=["text", "dot", "json-lines"],
                        default="text")
        if matrix_ok:
            sp.add_argument("--matrix",
                            help="read the incidence matrix directly, "
                                 "bypassing the poset pipeline")

    sp = sub.add_parser("quotient", help="covering file -> quotient poset")
    common(sp)
    sp.set_defaults(func=_cmd_quotient)

    sp = sub.add_parser("poset-check", help="validate and summarize a poset file")
    common(sp)
    sp.set_defaults(func=_cmd_poset_check)

    sp = sub.add_parser("bratteli", help="build the Bratteli diagram")
    common(sp)
    sp.add_argument("--depth", type=int, default=None)
    sp.set_defaults(func=_cmd_bratteli)

    sp = sub.add_parser("spectrum", help="ideals and the primitive spectrum")
    common(sp)
    sp.add_argument("--depth", type=int, default=None)
    sp.set_defaults(func=_cmd_spectrum)

    sp = sub.add_parser("k0", help="K0 group of the stable incidence matrix")
    common(sp, matrix_ok=True)
    sp.add_argument("--depth", type=int, default=None)
    sp.set_defaults(func=_cmd_k0)

    sp = sub.add_parser("cone", help="positive-cone description")
    common(sp, matrix_ok=True)
    sp.add_argument("--depth", type=int, default=None)
    sp.add_argument("--tolerance", type=float, default=1e-12)
    sp.set_defaults(func=_cmd_cone)

    sp = sub.add_parser("member", help="cone membership of an integer vector")
    common(sp, matrix_ok=True)
    sp.add_argument("--depth", type=int, default=None)
    sp.add_argument("--vector", required=True,
                    help="comma- or space-separated integers")
    sp.add_argument("--m-max", type=int, default=64, dest="m_max")
    sp.set_defaults(func=_cmd_member)

    sp = sub.add_parser("roundtrip",
                        help="check spectrum(diagram(P)) is isomorphic to P")
    common(sp)
    sp.add_argument("--depth", type=int, default=None)
    sp.set_defaults(func=_cmd_roundtrip)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    for attr, low, strict in (("depth", 1, False), ("m_max", 0, False),
                              ("tolerance", 0.0, True)):
        val = getattr(args, attr, None)
        if val is not None and (val < low or (strict and val == low)):
            op = ">" if strict else ">="
            sys.stderr.write(f"error: --{attr.replace('_', '-')} must be "
                             f"{op} {low}\n")
            return 2
    try:
        rc = args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return 2
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
