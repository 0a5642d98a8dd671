"""Command-line interface exposing every operation to shell pipelines.

Exit codes: 0 success, 1 validation or runtime failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bench as bench_mod
from . import fileio
from .mesh import Mesh, MeshError, validate, vertex_bits
from .ops import merge, soup_to_mesh, subset
from .parallel import set_num_workers
from .pipeline import mark_used, reindex

_FORMATS = {"obj", "bin"}


def _infer_format(path: str, override: str | None) -> str:
    if override:
        return override
    if path.endswith(".obj"):
        return "obj"
    if path.endswith(".rmx"):
        return "bin"
    raise MeshError(f"{path}: cannot infer format from extension (use --format)")


def _load(path: str, args, return_groups: bool = False):
    fmt = _infer_format(path, args.format)
    if fmt == "obj":
        return fileio.read_obj(path, dim=args.dim, return_groups=return_groups)
    mesh = fileio.read_bin(path)
    return (mesh, {}) if return_groups else mesh


def _save(mesh: Mesh, path: str, args) -> None:
    if _infer_format(path, args.format) == "obj":
        fileio.write_obj(mesh, path)
    else:
        fileio.write_bin(mesh, path)


def _parse_ranges(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return sorted(set(out))


def _say(args, message: str) -> None:
    if not args.quiet:
        print(message)


def _cmd_reindex(args) -> int:
    out, _ = reindex(_load(args.input, args))
    _save(out, args.output, args)
    _say(args, f"{args.output}: {out.n_vertices} vertices, {out.n_elements} elements")
    return 0


def _cmd_merge(args) -> int:
    meshes = [_load(p, args) for p in args.inputs]
    out = merge(meshes)
    _save(out, args.output, args)
    _say(args, f"{args.output}: {out.n_vertices} vertices, {out.n_elements} elements")
    return 0


def _cmd_soup(args) -> int:
    from .mesh import dereference
    out = soup_to_mesh(dereference(_load(args.input, args)))
    _save(out, args.output, args)
    _say(args, f"{args.output}: {out.n_vertices} vertices, {out.n_elements} elements")
    return 0


def _cmd_subset(args) -> int:
    mesh, groups = _load(args.input, args, return_groups=True)
    if args.group is not None:
        if args.group not in groups:
            raise MeshError(f"group {args.group!r} not present in {args.input}")
        keep = np.asarray(groups[args.group], dtype=np.int64)
    else:
        keep = np.asarray(_parse_ranges(args.keep), dtype=np.int64)
    out = subset(mesh, keep)
    _save(out, args.output, args)
    _say(args, f"{args.output}: {out.n_vertices} vertices, {out.n_elements} elements")
    return 0


def _cmd_gen(args) -> int:
    mesh = bench_mod.grid_quads(args.n)
    _save(mesh, args.output, args)
    _say(args, f"{args.output}: {mesh.n_vertices} vertices, {mesh.n_elements} quads")
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    records = bench_mod.run_bench(sizes, reps=args.reps)
    if not args.quiet:
        print(bench_mod.format_table(records))
    if args.csv:
        with open(args.csv, "w") as handle:
            bench_mod.write_csv(records, handle)
    return 0


def _cmd_validate(args) -> int:
    issues = validate(_load(args.input, args))
    for issue in issues:
        print(f"element {issue.element} slot {issue.slot}: "
              f"index {issue.index} out of range", file=sys.stderr)
    _say(args, f"{args.input}: {'OK' if not issues else f'{len(issues)} issue(s)'}")
    return 0 if not issues else 1


def _cmd_stats(args) -> int:
    mesh = _load(args.input, args)
    unique = len(np.unique(vertex_bits(mesh.vertices), axis=0)) if mesh.n_vertices else 0
    unused = mesh.n_vertices - int(mark_used(mesh).sum())
    print(f"vertices:  {mesh.n_vertices} (dim {mesh.dim})")
    print(f"elements:  {mesh.n_elements} (arity {mesh.arity})")
    print(f"duplicate vertices: {mesh.n_vertices - unique}")
    print(f"unused vertices:    {unused}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="remeshx",
                                     description="Indexed-mesh re-indexing toolkit")
    parser.add_argument("--threads", type=int, default=None, metavar="K",
                        help="worker count (default: REMESHX_THREADS or all cores)")
    parser.add_argument("--format", choices=sorted(_FORMATS), default=None,
                        help="force file format instead of inferring from extension")
    parser.add_argument("--dim", type=int, choices=(2, 3), default=None,
                        help="OBJ vertex dimension (default: inferred)")
    parser.add_argument("--quiet", action="store_true", help="suppress progress output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reindex", help="remove duplicate and unused vertices")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=_cmd_reindex)

    p = sub.add_parser("merge", help="merge meshes, welding shared vertices")
    p.add_argument("inputs", nargs="+")
    p.add_argument("output")
    p.set_defaults(func=_cmd_merge)

    p = sub.add_parser("soup", help="rebuild indexing from scratch (elements as fat tuples)")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=_cmd_soup)

    p = sub.add_parser("subset", help="compact mesh of selected elements")
    p.add_argument("input")
    p.add_argument("output")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--keep", metavar="RANGES", help="element positions, e.g. 0-3,7,9")
    group.add_argument("--group", metavar="NAME", help="OBJ group/material name")
    p.set_defaults(func=_cmd_subset)

    p = sub.add_parser("gen", help="generate the N x N benchmark quad grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time serial vs parallel re-indexing")
    p.add_argument("--sizes", required=True, metavar="N,N,...")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--csv", metavar="PATH", help="also write a CSV report")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("validate", help="check all element indices are in range")
    p.add_argument("input")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("stats", help="print vertex/element/duplicate/unused counts")
    p.add_argument("input")
    p.set_defaults(func=_cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is not None:
        set_num_workers(args.threads)
    try:
        return args.func(args)
    except (MeshError, OSError) as exc:
        print(f"remeshx: error: {exc}", file=sys.stderr)
        return 1
    finally:
        set_num_workers(None)


def entry() -> None:
    sys.exit(main())
