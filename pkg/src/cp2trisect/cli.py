"""Command line: ``cp2trisect verify|build|info``.

Exit codes: 0 when every check passes, 1 when a check fails (or is
inconclusive without ``--allow-unknown``), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ComplexError
from .report import Check, Report, emit_report
from .verify import TARGETS, run_target

BUILDERS = ("rp26", "t27", "cp29", "subdivided", "b14", "b147")


def _build(name: str):
    from .catalog import build_cp2_9, build_rp2_6, build_t2_7
    from .labels import original
    from .subdivision import relative_subdivide
    from .trisection import pair_intersection, trisect

    if name == "rp26":
        return build_rp2_6()
    if name == "t27":
        return build_t2_7()
    if name == "cp29":
        return build_cp2_9()
    sub = relative_subdivide(build_cp2_9(), [original(i) for i in (1, 4, 7)])
    if name == "subdivided":
        return sub
    t = trisect(sub)
    if name == "b14":
        return pair_intersection(t, 1, 4)
    return t.central


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cp2trisect", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a check suite and print a report")
    v.add_argument("target", choices=TARGETS + ("all",))
    v.add_argument("--samples", type=int, default=10_000)
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--flip-budget", type=int, default=100_000)
    v.add_argument("--sections", type=int, default=256)
    v.add_argument("--allow-unknown", action="store_true", help="do not fail on inconclusive checks")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", type=Path, help="write the report here instead of stdout")
    v.add_argument("--figures", type=Path, metavar="DIR", help="also render figures into DIR")
    v.add_argument("--mesh", type=Path, metavar="PATH", help="plmap: export the image mesh")

    b = sub.add_parser("build", help="write a named complex as a facet list")
    b.add_argument("name", choices=BUILDERS)
    b.add_argument("--out", type=Path)

    i = sub.add_parser("info", help="summarize a facet-list file")
    i.add_argument("path", type=Path)
    return p


def cmd_verify(args) -> int:
    if args.samples < 1 or args.sections < 2 or args.tol <= 0 or args.flip_budget < 0:
        print("cp2trisect: bad numeric option", file=sys.stderr)
        return 2
    targets = TARGETS if args.target == "all" else (args.target,)
    report = Report(
        args.target,
        seed=args.seed,
        tolerances={"tol": args.tol, "algebraic": 1e-12, "samples": args.samples,
                    "sections": args.sections, "flip_budget": args.flip_budget},
    )
    for t in targets:
        rows = run_target(t, samples=args.samples, tol=args.tol, seed=args.seed,
                          flip_budget=args.flip_budget, sections=args.sections,
                          mesh_path=args.mesh if t == "plmap" else None)
        if len(targets) > 1:
            rows = [Check(f"{t}/{r.name}", r.status, r.expected, r.observed, r.paper_ref) for r in rows]
        report.extend(rows)
    text = emit_report(report, args.format)
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.figures:
        from .plotting import write_figures

        for path in write_figures(args.figures, targets):
            print(f"figure: {path}", file=sys.stderr)
    return 0 if report.ok(args.allow_unknown) else 1


def cmd_build(args) -> int:
    from .io import dumps_complex

    text = dumps_complex(_build(args.name), header=f"{args.name}")
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_info(args) -> int:
    from .complex import classify_closed_surface, f_vector
    from .homology import homology_groups
    from .io import read_complex

    c = read_complex(args.path)
    counts, chi = f_vector(c)
    print(f"dim={c.dim} f={counts} chi={chi} facets={len(c.facets)}")
    print(f"homology={homology_groups(c)}")
    if c.dim == 2:
        print(f"surface={classify_closed_surface(c).name}")
    return 0


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "build":
            return cmd_build(args)
        return cmd_info(args)
    except (ComplexError, OSError) as exc:
        print(f"cp2trisect: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
