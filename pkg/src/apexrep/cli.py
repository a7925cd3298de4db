"""Command-line interface.

Exit codes: 0 success, 1 a check failed (or there was nothing to produce),
2 usage error, 3 unreadable or malformed input file, 4 invalid parameter,
5 invalid input (e.g. non-planar graph), 6 unsupported size, 7 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import (
    ContractViolationError,
    GraphParseError,
    InternalConsistencyError,
    InvalidInputError,
    InvalidParameterError,
    UnsupportedSizeError,
)
from .frontline import drawing_to_dict, synthesize as synthesize_drawing
from .graph import build_apex_gadget, format_graph, read_graph
from .planarity import phpc_decide
from .pure2dir import (
    arrangement_from_dict,
    arrangement_to_dict,
    synthesize as synthesize_arrangement,
)
from .render import render_svg
from .verifier import roundtrip_check, verify_reduction

COMMANDS = ("reduce", "decide", "synthesize", "verify", "roundtrip", "render", "selftest")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3
EXIT_PARAM, EXIT_INPUT, EXIT_SIZE, EXIT_INTERNAL = 4, 5, 6, 7


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    girth: int = 6
    k: int | None = None
    out: str | None = None
    format: str = "text"
    arrangement: str | None = None


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _need_input(cfg: RunConfig):
    if cfg.input is None:
        raise InvalidParameterError(f"{cfg.command} needs a graph file")
    return read_graph(cfg.input)


def _chains_dict(gadget) -> dict:
    return {f"{e[0]} {e[1]}": list(chain) for e, chain in gadget.chains.items()}


def _reduce(cfg: RunConfig) -> int:
    g = _need_input(cfg)
    gadget = build_apex_gadget(g, cfg.girth, cfg.k)
    if cfg.format == "json":
        _emit(_dumps({
            "apex": gadget.apex,
            "k": gadget.k,
            "girth_bound": gadget.g,
            "vertices": list(gadget.gadget.sorted_vertices),
            "edges": [list(e) for e in gadget.gadget.sorted_edges],
            "chains": _chains_dict(gadget),
        }), cfg.out)
        return EXIT_OK
    _emit(format_graph(gadget.gadget), cfg.out)
    if cfg.out is not None:
        _emit(_dumps({"apex": gadget.apex, "k": gadget.k, "chains": _chains_dict(gadget)}),
              cfg.out + ".chains.json")
    return EXIT_OK


def _decide(cfg: RunConfig) -> int:
    cert = phpc_decide(_need_input(cfg))
    if cfg.format == "json":
        body = {"phpc": "yes" if cert else "no", "ordering": list(cert.ordering) if cert else None}
        _emit(_dumps(body), cfg.out)
    else:
        _emit(f"yes {' '.join(cert.ordering)}\n" if cert else "no\n", cfg.out)
    return EXIT_OK


def _pipeline(cfg: RunConfig):
    g = _need_input(cfg)
    gadget = build_apex_gadget(g, cfg.girth, cfg.k)
    found = synthesize_drawing(g)
    if found is None:
        return g, gadget, None, None, None
    d, p = found
    return g, gadget, d, p, synthesize_arrangement(d, p, gadget)


def _synthesize(cfg: RunConfig) -> int:
    _, _, d, p, arr = _pipeline(cfg)
    if d is None:
        print("no front line drawing: the graph is a PHPC no-instance", file=sys.stderr)
        return EXIT_FAIL
    _emit(_dumps({"drawing": drawing_to_dict(d, p), "arrangement": arrangement_to_dict(arr)}), cfg.out)
    return EXIT_OK


def _verify(cfg: RunConfig) -> int:
    report = verify_reduction(_need_input(cfg), cfg.girth, cfg.k)
    _emit(report.to_json(), cfg.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _load_arrangement(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"{path}: {exc}") from exc
    return arrangement_from_dict(data.get("arrangement", data))


def _roundtrip(cfg: RunConfig) -> int:
    g = _need_input(cfg)
    if cfg.arrangement is not None:
        arr = _load_arrangement(cfg.arrangement)
        gadget = build_apex_gadget(g, cfg.girth, arr.k)
    else:
        g, gadget, d, _, arr = _pipeline(cfg)
        if d is None:
            print("no front line drawing: the graph is a PHPC no-instance", file=sys.stderr)
            return EXIT_FAIL
    ok = roundtrip_check(g, arr, gadget)
    _emit(_dumps({"roundtrip_planar": ok}) if cfg.format == "json" else f"{str(ok).lower()}\n", cfg.out)
    return EXIT_OK if ok else EXIT_FAIL


def _render(cfg: RunConfig) -> int:
    if cfg.arrangement is not None:
        g = _need_input(cfg)
        arr = _load_arrangement(cfg.arrangement)
        gadget = build_apex_gadget(g, cfg.girth, arr.k)
    else:
        _, gadget, d, _, arr = _pipeline(cfg)
        if d is None:
            print("no front line drawing: the graph is a PHPC no-instance", file=sys.stderr)
            return EXIT_FAIL
    _emit(render_svg(arr, gadget.apex, gadget.originals), cfg.out)
    return EXIT_OK


def _selftest(cfg: RunConfig) -> int:
    from .selftest import run

    outcomes = run()
    lines = [f"{'PASS' if o.ok else 'FAIL'}  {o.name} ({o.checked} checked)" for o in outcomes]
    for o in outcomes:
        lines += [f"  {o.name}: {f!r}" for f in o.failures[:3]]
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK if all(o.ok for o in outcomes) else EXIT_FAIL


HANDLERS = {
    "reduce": _reduce,
    "decide": _decide,
    "synthesize": _synthesize,
    "verify": _verify,
    "roundtrip": _roundtrip,
    "render": _render,
    "selftest": _selftest,
}


def run(cfg: RunConfig) -> int:
    if cfg.k is not None and (cfg.k < 3 or cfg.k % 2 == 0):
        print(f"error: --k must be odd and >= 3, got {cfg.k}", file=sys.stderr)
        return EXIT_PARAM
    try:
        return HANDLERS[cfg.command](cfg)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidParameterError as exc:
        print(f"invalid parameter: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except UnsupportedSizeError as exc:
        print(f"unsupported size: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InvalidInputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ContractViolationError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apexrep",
        description="Apex gadget reduction: build, decide, synthesize and verify segment representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name != "selftest":
            p.add_argument("input", help="graph file (one edge per line)")
        p.add_argument("--girth", type=int, default=6, help="girth bound g (default 6)")
        p.add_argument("--k", type=int, default=None, help="odd subdivision length overriding the one derived from --girth")
        p.add_argument("--out", default=None, help="write the main artifact here instead of stdout")
        p.add_argument("--format", choices=("text", "json", "svg"), default="text")
        if name in ("roundtrip", "render"):
            p.add_argument("--arrangement", default=None, help="arrangement JSON to use instead of synthesizing one")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        girth=args.girth,
        k=args.k,
        out=args.out,
        format=args.format,
        arrangement=getattr(args, "arrangement", None),
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
