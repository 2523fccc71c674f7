"""Command-line front end.

Exit-code contract: 0 for a positive answer (completable / certified /
comparison clean), 1 for the negative answer, 2 for usage errors, missing
files, and parse failures.  Output ordering is deterministic everywhere
(vertex ids ascending) so shell harnesses can assert on it verbatim.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import (
    catalog_from_json,
    catalog_to_json,
    certify_obstruction,
    containment_collisions,
    enumerate_catalog,
    extract_obstruction,
)
from .completion import Completed, NotOrientable, Opposing, complete
from .gamma import gamma_partition, gamma_sequence
from .graphs import PartialGraph, PogFormatError, export_dot, parse_pog, serialize_pog
from .interval import straight_enumeration, tucker_oracle
from .iso import canonical_form
from .search import compare_with_catalog

USAGE_ERROR = 2


class CliError(Exception):
    def __init__(self, message: str, code: int = USAGE_ERROR):
        super().__init__(message)
        self.code = code


def _load_pog(path: str) -> PartialGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return parse_pog(text)
    except PogFormatError as exc:
        raise CliError(f"{path}:{exc.line}: {exc.message}") from exc


def _fmt_pair(p) -> str:
    return f"({p[0]},{p[1]})"


def _fmt_sequence(seq) -> str:
    return "Γ".join(_fmt_pair(p) for p in seq)


def _result_payload(res) -> dict:
    if isinstance(res, Completed):
        return {"completable": True, "arcs": sorted(list(a) for a in res.arcs)}
    if isinstance(res, Opposing):
        w = res.witness
        return {
            "completable": False,
            "reason": "opposing",
            "first": list(w.first),
            "second": list(w.second),
            "sequence": [list(p) for p in w.sequence],
        }
    if isinstance(res, NotOrientable):
        v = res.violation
        return {
            "completable": False,
            "reason": "not_orientable",
            "component": res.component,
            "vertices": list(res.vertices),
            "violation": {"vertex": v.vertex, "pair": list(v.pair), "side": v.side},
        }
    raise AssertionError(res)


def _cmd_complete(args) -> int:
    pog = _load_pog(args.file)
    res = complete(pog)
    if args.json:
        print(json.dumps(_result_payload(res)))
        return 0 if isinstance(res, Completed) else 1
    if isinstance(res, Completed):
        arcs = " ".join(f"{t}->{h}" for t, h in sorted(res.arcs))
        print("COMPLETABLE" + (f": {arcs}" if arcs else ""))
        return 0
    if isinstance(res, Opposing):
        w = res.witness
        print(
            f"NOT COMPLETABLE: opposing {_fmt_pair(w.first)},{_fmt_pair(w.second)}; "
            f"sequence {_fmt_sequence(w.sequence)}"
        )
        return 1
    v = res.violation
    print(
        f"NOT COMPLETABLE: component {res.component} not local-tournament-orientable; "
        f"vertex {v.vertex} has non-adjacent {v.side}-neighbours {v.pair[0]},{v.pair[1]}"
    )
    return 1


def _cmd_certify(args) -> int:
    pog = _load_pog(args.file)
    cert = certify_obstruction(pog)
    if args.json:
        payload = {"obstruction": cert is not None}
        if cert is not None:
            payload["arc_count"] = cert.arc_count
            payload["all_vertices_in_sequence"] = cert.all_vertices_in_sequence
            payload["not_completable"] = _result_payload(cert.not_completable)
        print(json.dumps(payload))
        return 0 if cert is not None else 1
    if cert is None:
        res = complete(pog)
        if isinstance(res, Completed):
            print("NOT AN OBSTRUCTION: completable")
        else:
            print("NOT AN OBSTRUCTION: not minimal")
        return 1
    print("OBSTRUCTION")
    print(f"  arcs: {cert.arc_count}")
    if isinstance(cert.not_completable, Opposing):
        w = cert.not_completable.witness
        print(f"  opposing {_fmt_pair(w.first)},{_fmt_pair(w.second)}; sequence {_fmt_sequence(w.sequence)}")
        print(f"  shortest sequence covers all vertices: {'yes' if cert.all_vertices_in_sequence else 'no'}")
    else:
        print("  underlying graph not local-tournament-orientable")
    return 0


def _cmd_extract(args) -> int:
    pog = _load_pog(args.file)
    core = extract_obstruction(pog)
    if core is None:
        print("COMPLETABLE: nothing to extract")
        return 1
    text = serialize_pog(core)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote obstruction with {core.n} vertices to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_match(args) -> int:
    pog = _load_pog(args.file)
    try:
        entries = catalog_from_json(Path(args.catalog).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CliError(f"{args.catalog}: {exc.strerror or exc}") from exc
    except (ValueError, KeyError) as exc:
        raise CliError(f"{args.catalog}: invalid catalog JSON ({exc})") from exc
    if certify_obstruction(pog) is None:
        print("input is not an obstruction; nothing to match")
        return 1
    sig = canonical_form(pog).signature
    hits = [e for e in entries if e.canonical == sig]
    if not hits:
        print("no catalog entry matches (increase the catalog's max-n?)")
        return 1
    for e in hits:
        dual = " dual" if e.is_dual else ""
        print(f"{e.family}{tuple(e.params)}{dual} [{e.figure_ref}]")
    return 0


def _cmd_catalog(args) -> int:
    entries = enumerate_catalog(args.max_n, threads=args.threads)
    payload = catalog_to_json(entries)
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
        print(f"catalog: {len(entries)} entries (max n = {args.max_n}) -> {args.out}")
    else:
        sys.stdout.write(payload)
    if args.check_containment:
        hits = containment_collisions(entries)
        for big, small in hits:
            print(
                f"containment: {small.family}{tuple(small.params)} is contained in "
                f"{big.family}{tuple(big.params)}"
            )
        print(f"containment collisions: {len(hits)}")
    if args.dot_dir:
        dot_dir = Path(args.dot_dir)
        dot_dir.mkdir(parents=True, exist_ok=True)
        for i, e in enumerate(entries):
            name = f"{i:04d}_{e.family}" + ("_dual" if e.is_dual else "")
            (dot_dir / f"{name}.dot").write_text(export_dot(e.pog, name="obstruction"), encoding="utf-8")
        print(f"wrote {len(entries)} DOT files to {args.dot_dir}")
    if args.fig_dir:
        from .render import render_family_sheets

        written = render_family_sheets(entries, args.fig_dir)
        print(f"wrote {len(written)} figure sheets to {args.fig_dir}")
    return 0


def _cmd_enumerate(args) -> int:
    if args.catalog:
        try:
            entries = catalog_from_json(Path(args.catalog).read_text(encoding="utf-8"))
        except OSError as exc:
            raise CliError(f"{args.catalog}: {exc.strerror or exc}") from exc
    else:
        entries = enumerate_catalog(max(args.n, 3), threads=args.threads)
    report = compare_with_catalog(args.n, two_arc=args.two_arc, entries=entries)
    print(report.render())
    if args.pog_dir:
        from .search import minimal_obstructions

        pog_dir = Path(args.pog_dir)
        pog_dir.mkdir(parents=True, exist_ok=True)
        found = minimal_obstructions(args.n, two_arc=args.two_arc)
        for i, x in enumerate(found):
            (pog_dir / f"obstruction_{args.n}_{i:03d}.pog").write_text(
                serialize_pog(x), encoding="utf-8"
            )
        print(f"wrote {len(found)} POG files to {args.pog_dir}")
    if args.fig_dir and not report.ok:
        from .render import render_pog_files

        render_pog_files(report.missing_from_catalog, args.fig_dir, "missing_from_catalog")
        render_pog_files((e.pog for e in report.missing_from_search), args.fig_dir, "missing_from_search")
        print(f"wrote discrepancy figures to {args.fig_dir}")
    return 0 if report.ok else 1


def _cmd_recognize(args) -> int:
    pog = _load_pog(args.file)
    g = pog.underlying
    verdict = tucker_oracle(g)
    if verdict.is_pca:
        print("proper circular-arc: yes")
    else:
        w = verdict.witness
        print(f"proper circular-arc: no; witness {w.family} k={w.k} on vertices {list(w.vertices)}")
    order = straight_enumeration(g)
    if order is not None:
        print("proper interval: yes; straight enumeration " + " ".join(map(str, order.order)))
    else:
        print("proper interval: no")
    return 0 if verdict.is_pca else 1


def _cmd_gamma(args) -> int:
    pog = _load_pog(args.file)
    g = pog.underlying
    if (args.frm is None) != (args.to is None):
        raise CliError("--from and --to must be given together")
    if args.frm is not None:
        frm, to = tuple(args.frm), tuple(args.to)
        for pair in (frm, to):
            if not g.has_edge(*pair):
                raise CliError(f"pair {_fmt_pair(pair)} is not an orientation of an edge")
        seq = gamma_sequence(g, frm, to)
        if seq is None:
            print(f"no sequence: {_fmt_pair(frm)} and {_fmt_pair(to)} lie in different classes")
            return 1
        print(_fmt_sequence(seq))
        return 0
    gp = gamma_partition(g)
    for i, cls in enumerate(gp.classes):
        print(f"class {i}: " + " ".join(_fmt_pair(p) for p in cls))
    for i, edges in enumerate(gp.implication_classes):
        print(f"implication class {i}: " + " ".join(_fmt_pair(e) for e in edges))
    return 0


def _cmd_dot(args) -> int:
    pog = _load_pog(args.file)
    sys.stdout.write(export_dot(pog))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loctour",
        description="Local tournament orientation completion: completions, witnesses, and the obstruction catalog.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complete", help="complete a POG or print the blocking witness")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("certify", help="check the three obstruction conditions")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("extract", help="greedily extract a contained obstruction")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("match", help="identify an obstruction against a catalog JSON")
    p.add_argument("file")
    p.add_argument("--catalog", required=True)
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("catalog", help="generate, certify, and serialize the catalog")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--dot-dir")
    p.add_argument("--fig-dir")
    p.add_argument("--check-containment", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("enumerate", help="exhaustive search vs catalog at one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--two-arc", action="store_true")
    p.add_argument("--catalog")
    p.add_argument("--pog-dir")
    p.add_argument("--fig-dir")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("recognize", help="proper circular-arc verdict and straight enumeration")
    p.add_argument("file")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("gamma", help="forcing classes, or a shortest forcing sequence")
    p.add_argument("file")
    p.add_argument("--from", dest="frm", nargs=2, type=int, metavar=("U", "V"))
    p.add_argument("--to", dest="to", nargs=2, type=int, metavar=("X", "Y"))
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("dot", help="print DOT")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dot)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
