"""Command line interface: ``sdcyclic <command> ...``.

Exit codes: 0 success, 2 usage error, 3 resource cap exceeded,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import TextIO

from . import codes, graymap, oracle
from ._validation import check_field, check_s
from .exceptions import CapExceeded, DegreeMismatch, ReducibleModulus, SizeOverflow
from .solver import build_G, build_M, solve_recursive, truncate
from .ypoly import x_inverse

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_MISMATCH = 0, 2, 3, 4


@dataclass
class RunConfig:
    command: str
    s: int | None = None
    m: int = 1
    modulus: str | None = None
    format: str = "json"
    limit: int | None = None
    cap: int | None = codes.DEFAULT_CAP
    output: str | None = None
    jobs: int = 1

    def field(self):
        return check_field(self.m, self.modulus)


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cmd_enumerate(cfg: RunConfig, out: TextIO) -> int:
    s, F = check_s(cfg.s), cfg.field()
    total = codes.count_selfdual(s, F.m)
    stream = codes.enumerate_selfdual(s, F, cap=cfg.cap if cfg.limit is None else None)
    emitted = 0
    if cfg.format == "csv":
        out.write("family,s,m,modulus,k,t,b\n")
    for i, c in enumerate(stream):
        if cfg.limit is not None and i >= cfg.limit:
            break
        if cfg.format == "json":
            out.write(_dumps(c.to_json()) + "\n")
        else:
            b = " ".join(f"{v:#x}" for v in c.b)
            out.write(f"{c.family},{s},{F.m},{F.modulus:#x},{c.k},{c.t},{b}\n")
        emitted += 1
    if cfg.format == "json":
        out.write(_dumps({"summary": {"emitted": emitted, "total": total}}) + "\n")
    else:
        out.write(f"# emitted={emitted} total={total}\n")
    return EXIT_OK


def cmd_count(cfg: RunConfig, out: TextIO, all_cyclic: bool = False, by_family: bool = False) -> int:
    s, m = check_s(cfg.s), cfg.field().m
    if all_cyclic:
        out.write(f"{codes.count_all_cyclic(s, m)}\n")
    elif by_family:
        for fam, n in codes.count_by_family(s, m).items():
            out.write(f"{fam} {n}\n")
        out.write(f"total {codes.count_selfdual(s, m)}\n")
    else:
        out.write(f"{codes.count_selfdual(s, m)}\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out: TextIO, full: bool = False) -> int:
    s, F = check_s(cfg.s), cfg.field()
    ok = True
    expected = codes.count_by_family(s, F.m)
    specs = list(codes.enumerate_selfdual(s, F, cap=cfg.cap))
    for fam in codes.SD_FAMILIES:
        mine = [c for c in specs if c.family is fam]
        passed = sum(flag for _, flag in oracle.selfdual_among([c.as_case() for c in mine], cfg.jobs))
        good = passed == len(mine) == expected[fam]
        ok &= good
        out.write(f"{fam}: {passed}/{len(mine)} self-dual, formula {expected[fam]} {'PASS' if good else 'FAIL'}\n")
    if full:
        result = oracle.census(s, F, cap=cfg.cap, jobs=cfg.jobs)
        total = sum(v[0] for v in result["per_case"].values())
        found = result["selfdual"]
        for fam, (n, k) in result["per_case"].items():
            out.write(f"{fam}: {k}/{n} self-dual\n")
        same = set(found) == {c.as_case() for c in specs}
        good = same and total == codes.count_all_cyclic(s, F.m) and len(found) == len(specs)
        ok &= good
        out.write(f"census: {len(found)}/{total} self-dual {'PASS' if good else 'FAIL'}\n")
    out.write(f"count: {codes.count_selfdual(s, F.m)}\n")
    out.write("OK\n" if ok else "MISMATCH\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_tables(cfg: RunConfig, out: TextIO, M=None, G=None, xinv=None) -> int:
    if M is None and G is None and xinv is None:
        raise UsageError("tables needs one of --M, --G, --xinv")
    if M is not None:
        if M < 1:
            raise UsageError("--M must be >= 1")
        out.write("\n".join(build_M(M).to_strings()) + "\n")
    if G is not None:
        if G < 1:
            raise UsageError("--G must be >= 1")
        out.write("\n".join(build_G(G).to_strings()) + "\n")
    if xinv is not None:
        if xinv < 1:
            raise UsageError("--xinv must be >= 1")
        out.write(_dumps(x_inverse(xinv, cfg.field()).to_json()) + "\n")
    return EXIT_OK


def cmd_space(cfg: RunConfig, out: TextIO, l: int, delta: int = 0) -> int:
    if l < 1 or not 0 <= delta < l:
        raise UsageError("need l >= 1 and 0 <= delta < l")
    space = solve_recursive(l)
    if delta:
        space = truncate(space, delta)
    out.write(space.describe() + "\n")
    out.write(f"dim {space.dim}\n")
    return EXIT_OK


def cmd_gray(cfg: RunConfig, out: TextIO, index: int = 0) -> int:
    s, F = check_s(cfg.s), cfg.field()
    total = codes.count_selfdual(s, F.m)
    if not 0 <= index < total:
        raise UsageError(f"--index must be in 0..{total - 1}")
    spec = next(c for i, c in enumerate(codes.enumerate_selfdual(s, F, cap=None)) if i == index)
    cs = oracle.expand(spec.as_case(), cap=cfg.cap or oracle.ORACLE_CAP)
    image = graymap.gray_image(cs)
    gens = oracle.row_reduce(F, image.words)
    lee = graymap.lee_distribution(cs)
    ham = graymap.hamming_distribution(image)
    if cfg.format == "json":
        out.write(
            _dumps(
                {
                    "code": spec.to_json(),
                    "image_generators": [[f"{v:#x}" for v in row] for row in gens.tolist()],
                    "lee": {str(w): c for w, c in lee.counts.items()},
                    "hamming": {str(w): c for w, c in ham.counts.items()},
                    "quasi_cyclic": graymap.is_2_quasi_cyclic(image),
                    "self_dual": graymap.is_self_dual_field(image),
                }
            )
            + "\n"
        )
    else:
        out.write(f"# code {index}: {spec.describe()}\n")
        out.write("# image generators\n")
        for row in gens.tolist():
            out.write(",".join(f"{v:#x}" for v in row) + "\n")
        out.write("# lee distribution\n" + lee.to_csv())
        out.write("# hamming distribution\n" + ham.to_csv())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sdcyclic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_s=True):
        sp.add_argument("--s", type=int, required=need_s, help="length exponent, N = 2^s")
        sp.add_argument("--m", type=int, default=1, help="extension degree of GF(2^m)")
        sp.add_argument("--modulus", help="defining polynomial as hex, e.g. 0x7")
        sp.add_argument("--cap", type=int, default=codes.DEFAULT_CAP, help="resource cap")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    sp = sub.add_parser("enumerate", help="list the self-dual cyclic codes")
    common(sp)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--limit", type=int)

    sp = sub.add_parser("count", help="exact number of codes")
    common(sp)
    sp.add_argument("--all-cyclic", action="store_true")
    sp.add_argument("--by-family", action="store_true")

    sp = sub.add_parser("verify", help="check the enumeration with the brute-force oracle")
    common(sp)
    sp.add_argument("--full", action="store_true", help="also recount over all cyclic codes")
    sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("tables", help="print M_l, G_{2^lambda} or x^-1")
    common(sp, need_s=False)
    sp.add_argument("--M", type=int, dest="M")
    sp.add_argument("--G", type=int, dest="G")
    sp.add_argument("--xinv", type=int)

    sp = sub.add_parser("space", help="parametrisation of S_l or its truncation")
    common(sp, need_s=False)
    sp.add_argument("--l", type=int, required=True, dest="l")
    sp.add_argument("--delta", type=int, default=0)

    sp = sub.add_parser("gray", help="Gray image and weight distributions of one code")
    common(sp)
    sp.add_argument("--index", type=int, default=0)
    sp.add_argument("--format", choices=["json", "csv"], default="csv")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        s=getattr(args, "s", None),
        m=args.m,
        modulus=args.modulus,
        format=getattr(args, "format", "json"),
        limit=getattr(args, "limit", None),
        cap=args.cap,
        output=args.output,
        jobs=getattr(args, "jobs", 1),
    )
    if cfg.limit is not None and cfg.limit < 0:
        parser.error("--limit must be >= 0")
    out = open(cfg.output, "w", encoding="utf-8", newline="\n") if cfg.output else sys.stdout
    try:
        if args.command == "enumerate":
            return cmd_enumerate(cfg, out)
        if args.command == "count":
            return cmd_count(cfg, out, args.all_cyclic, args.by_family)
        if args.command == "verify":
            return cmd_verify(cfg, out, args.full)
        if args.command == "tables":
            return cmd_tables(cfg, out, args.M, args.G, args.xinv)
        if args.command == "space":
            return cmd_space(cfg, out, args.l, args.delta)
        return cmd_gray(cfg, out, args.index)
    except (UsageError, ValueError, DegreeMismatch, ReducibleModulus) as exc:
        print(f"sdcyclic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeOverflow, CapExceeded) as exc:
        print(f"sdcyclic: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
