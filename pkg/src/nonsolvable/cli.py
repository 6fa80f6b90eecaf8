"""Command-line entry point: one JSON document per invocation."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .actions import CapExceeded
from .class_l import identify_simple_by_order
from .config import DEFAULT, Config
from .constructions import BuiltGroup, from_recipe
from .group import GroupError, group_from_json, group_to_json
from .rarefied import check_rarefied, find_rarefied_subgroup
from .rs_series import nonsolvable_length, rs_series, verify_certificate
from .structure import socle_nonabelian, solvable_radical
from . import verify as V

EXIT_USAGE, EXIT_INPUT, EXIT_CAP, EXIT_VERIFY = 1, 2, 3, 4

SUITES = ("lambda-m", "lambda-F", "bound1", "generators", "exponent", "oracle",
          "subdirect", "rarefied", "certificate", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_group_source(source: str, config: Config = DEFAULT) -> BuiltGroup:
    """A JSON group file path, or a recipe string."""
    path = Path(source)
    if path.suffix == ".json" or path.is_file():
        try:
            data = json.loads(path.read_text())
        except FileNotFoundError as exc:
            raise GroupError(f"no such group file: {source}") from exc
        except json.JSONDecodeError as exc:
            raise GroupError(f"malformed group file {source}: {exc}") from exc
        G = group_from_json(data)
        if G.degree > config.degree_cap:
            raise CapExceeded(f"degree {G.degree} exceeds degree cap {config.degree_cap}")
        return BuiltGroup(G, {"file": str(path)})
    return from_recipe(source, config)


def _common(p: argparse.ArgumentParser, top: bool) -> None:
    kw = {} if top else {"default": argparse.SUPPRESS}
    p.add_argument("--config", metavar="PATH", **kw)
    p.add_argument("--seed", type=int, metavar="U64", **kw)
    p.add_argument("--mode", choices=("exact", "mc", "auto"), **kw)
    p.add_argument("--out", metavar="PATH", **kw)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nonsolvable", description="Nonsolvable length and RS-series computations.")
    _common(parser, True)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in ("lambda", "rs-series", "radical", "socle", "rarefied-check", "rarefied-find",
                 "oracle-check", "build"):
        sp = sub.add_parser(name)
        sp.add_argument("group", help="group JSON file or recipe such as alt:5, W:2, GLwr:q=4,d=2,n=1")
        _common(sp, False)
    sp = sub.add_parser("class-l")
    sp.add_argument("order", type=int)
    _common(sp, False)
    sp = sub.add_parser("verify")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--lo", type=int, default=5)
    sp.add_argument("--hi", type=int, default=630)
    sp.add_argument("--group", default=None, help="group for the generators and certificate suites")
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--instances", type=int, default=50)
    sp.add_argument("--n", type=int, default=3, help="tower height for the exponent suite")
    _common(sp, False)
    return parser


def _config(args) -> Config:
    cfg = Config.load(args.config) if args.config else DEFAULT
    return cfg.with_(seed=args.seed, mode=args.mode)


def _verify_suite(args, cfg: Config) -> list:
    s = args.suite
    reports = []
    if s in ("lambda-m", "all"):
        reports += V.verify_lambda_m(args.lo, args.hi, cfg)
    if s in ("lambda-F", "all"):
        reports += V.verify_lambda_F([(4, 2, 0), (4, 2, 1), (2, 3, 0)], cfg)
    if s in ("bound1", "all"):
        reports += V.verify_bound1(config=cfg)
    if s in ("generators", "all"):
        sources = [args.group] if args.group else ["alt:5", "W:2"]
        for src in sources:
            G = parse_group_source(src, cfg).group
            reports.append(V.verify_generators(G, args.trials, cfg.seed, src, cfg))
    if s in ("exponent", "all"):
        heights = [args.n] if s == "exponent" else [1, 2, 3]
        reports += [V.verify_exponent(n, cfg) for n in heights]
    if s in ("oracle", "all"):
        reports += V.oracle_cross_check(config=cfg)
    if s in ("subdirect", "all"):
        reports += V.verify_subdirect(args.instances, cfg.seed, cfg)
    if s in ("rarefied", "all"):
        reports += V.verify_rarefied_closure(config=cfg)
    if s in ("certificate", "all"):
        sources = [args.group] if args.group else ["W:1", "W:2", "W:3"]
        for src in sources:
            b = parse_group_source(src, cfg)
            cert = b.claimed_certificate or rs_series(b.group, cfg.mode, cfg, cfg.seed)
            r = verify_certificate(b.group, cert, cfg)
            r.instance = src
            reports.append(r)
    return reports


def _strip_timing(doc):
    """Timings go to stderr so that stdout depends only on the inputs."""
    if isinstance(doc, list):
        return [_strip_timing(d) for d in doc]
    if isinstance(doc, dict):
        return {k: _strip_timing(v) for k, v in doc.items() if k != "elapsed"}
    return doc


def dispatch(args, cfg: Config) -> tuple[object, int]:
    cmd = args.command
    mode, seed = cfg.mode, cfg.seed
    if cmd == "class-l":
        if args.order < 1:
            raise GroupError("order must be positive")
        return identify_simple_by_order(args.order).to_dict(), 0
    if cmd == "verify":
        reports = _verify_suite(args, cfg)
        for r in reports:
            print(f"{r.claim} [{r.instance}]: {r.verdict} ({r.elapsed:.2f}s)", file=sys.stderr)
        code = EXIT_VERIFY if any(r.verdict == "fail" for r in reports) else 0
        return [r.to_dict() for r in reports], code
    b = parse_group_source(args.group, cfg)
    G = b.group
    if cmd == "lambda":
        return nonsolvable_length(G, mode, cfg, seed).to_dict(), 0
    if cmd == "rs-series":
        return rs_series(G, mode, cfg, seed).to_json(), 0
    if cmd == "radical":
        R = solvable_radical(G, mode, cfg, seed)
        return {"order": R.order, "group": group_to_json(R)}, 0
    if cmd == "socle":
        soc = socle_nonabelian(G, mode, cfg, seed)
        return {**soc.to_dict(), "group": group_to_json(soc.socle)}, 0
    if cmd == "rarefied-check":
        return check_rarefied(G, mode, cfg, seed).to_dict(), 0
    if cmd == "rarefied-find":
        H, rep = find_rarefied_subgroup(G, seed, cfg, mode)
        return {"order": H.order, "group": group_to_json(H), "report": rep.to_dict()}, 0
    if cmd == "oracle-check":
        reports = V.oracle_cross_check({args.group: G}, cfg)
        code = EXIT_VERIFY if any(r.verdict == "fail" for r in reports) else 0
        return [r.to_dict() for r in reports], code
    if cmd == "build":
        cert = b.claimed_certificate
        doc = {"group": group_to_json(G), "provenance": b.provenance,
               "claimed_lambda": b.claimed_lambda,
               "certificate": cert.to_json() if cert is not None else None}
        return doc, 0
    raise UsageError(f"unknown command {cmd!r}")


def _emit(doc, out: str | None, command: str) -> None:
    if command == "build" and out:
        path = Path(out)
        path.write_text(json.dumps(doc["group"], sort_keys=True) + "\n")
        if doc["certificate"] is None:
            return
        cert_path = path.with_name(path.stem + ".cert.json")
        cert_path.write_text(json.dumps(doc["certificate"], sort_keys=True, indent=2) + "\n")
        return
    text = json.dumps(doc, sort_keys=True, indent=2, default=str) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a command is required")
        cfg = _config(args)
        doc, code = dispatch(args, cfg)
        _emit(_strip_timing(doc), args.out, args.command)
        return code
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GroupError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
