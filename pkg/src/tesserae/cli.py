"""Command-line surface: counting, generating functions, entropy bounds."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import automaton as am
from . import gf as gfmod
from . import ising, poly, spectral

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_TILES = 2
EXIT_NO_TILINGS = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage errors are exit 1 here
        raise UsageError(message)


def _add_tiles(p: _Parser) -> None:
    p.add_argument("--tiles", required=True, help="preset name or tile file path")


def _add_width(p: _Parser, help_text: str = "strip width (rows)") -> None:
    p.add_argument("--width", type=int, required=True, help=help_text)


def _add_length(p: _Parser, required: bool = True, default: int | None = None,
                help_text: str = "rectangle length (columns)") -> None:
    p.add_argument("--length", type=int, required=required, default=default, help=help_text)


def build_parser() -> _Parser:
    top = _Parser(
        prog="tesserae",
        description="Exact strip-tiling counts, generating functions, and entropy bounds.",
    )
    sub = top.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def command(name: str, help_text: str) -> _Parser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit canonical JSON")
        return p

    p = command("count", "tilings of one rectangle")
    _add_tiles(p), _add_width(p), _add_length(p)
    p = command("series", "tiling counts for every length 0..L")
    _add_tiles(p), _add_width(p), _add_length(p)
    p = command("oracle", "brute-force recount of one rectangle")
    _add_tiles(p), _add_width(p), _add_length(p)
    p = command("gf", "rational generating function of a strip")
    _add_tiles(p), _add_width(p)
    p = command("faultfree", "fault-free block generating function and counts")
    _add_tiles(p), _add_width(p)
    _add_length(p, required=False, default=10, help_text="number of expansion steps")
    p = command("entropy", "entropy bounds for a strip width")
    _add_tiles(p), _add_width(p)
    p = command("upper", "scanning upper bound for plane tilings")
    _add_tiles(p)
    p = command("ising-bound", "Ising-model entropy bound for the T tetromino")
    p.add_argument("--beta", default=None, help='inverse temperature: "ln2/2" or a decimal')
    p.add_argument("--grid", type=int, default=1024, help="quadrature nodes per axis (power of two)")
    p = command("fylfot", "exhaustive fylfot-lattice weighted sum")
    _add_width(p, help_text="fylfot lattice rows"), _add_length(p, help_text="fylfot lattice columns")
    p = command("automaton-dot", "transfer automaton as a DOT digraph")
    _add_tiles(p), _add_width(p)
    return top


def _tileset(spec: str) -> poly.TileSet:
    if spec in poly.PRESETS:
        return poly.preset(spec)
    path = Path(spec)
    if not path.is_file():
        raise poly.TileError(f"{spec!r} is neither a preset nor a tile file")
    try:
        text = path.read_text()
    except OSError as exc:
        raise poly.TileError(f"cannot read tile file {spec!r}: {exc}") from exc
    return poly.parse_tile_file(text)


def _check_width(width: int) -> None:
    if width < 1:
        raise UsageError("--width must be at least 1")


def _check_length(length: int) -> None:
    if length < 0:
        raise UsageError("--length must be nonnegative")


def _parse_beta(text: str) -> float:
    cleaned = text.replace(" ", "").lower()
    if cleaned in ("ln2/2", "ln(2)/2", "(ln2)/2", "0.5*ln2", "0.5ln2"):
        return ising.BETA_TILING
    try:
        return float(cleaned)
    except ValueError:
        raise UsageError(f"cannot parse --beta {text!r}") from None


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _cmd_count(args) -> dict:
    _check_width(args.width), _check_length(args.length)
    auto = am.build_automaton(_tileset(args.tiles), args.width)
    n = am.count_rect(auto, args.length)
    return {"command": "count", "tiles": args.tiles, "width": args.width,
            "length": args.length, "count": str(n)}


def _cmd_series(args) -> dict:
    _check_width(args.width), _check_length(args.length)
    auto = am.build_automaton(_tileset(args.tiles), args.width)
    s = am.series(auto, args.length)
    return {"command": "series", "tiles": args.tiles, "width": args.width,
            "length": args.length, "series": [str(t) for t in s.terms]}


def _cmd_oracle(args) -> dict:
    _check_width(args.width), _check_length(args.length)
    try:
        cap = int(os.environ.get("TESSERAE_MAX_CELLS", "64"))
    except ValueError:
        raise UsageError("TESSERAE_MAX_CELLS must be an integer") from None
    n = am.brute_force_count(_tileset(args.tiles), args.width, args.length, max_cells=cap)
    return {"command": "oracle", "tiles": args.tiles, "width": args.width,
            "length": args.length, "count": str(n)}


def _cmd_gf(args) -> dict:
    _check_width(args.width)
    auto = am.build_automaton(_tileset(args.tiles), args.width)
    g = gfmod.strip_gf(auto)
    return {"command": "gf", "tiles": args.tiles, "width": args.width,
            "num": list(g.num), "den": list(g.den), "step": g.step}


def _cmd_faultfree(args) -> dict:
    _check_width(args.width), _check_length(args.length)
    auto = am.build_automaton(_tileset(args.tiles), args.width)
    g = gfmod.faultfree(gfmod.strip_gf(auto))
    terms = gfmod.expand(g, args.length)
    return {"command": "faultfree", "tiles": args.tiles, "width": args.width,
            "num": list(g.num), "den": list(g.den), "step": g.step,
            "terms": [str(t) for t in terms]}


def _cmd_entropy(args) -> dict:
    _check_width(args.width)
    tiles = _tileset(args.tiles)
    auto = am.build_automaton(tiles, args.width)
    g = gfmod.strip_gf(auto)
    report = spectral.strip_entropy(g, args.width)
    try:
        upper = _round12(spectral.entropy_upper(tiles))
    except spectral.SpectralError:
        upper = None  # mixed tile areas: the scanning bound is undefined
    return {"command": "entropy", "tiles": args.tiles, "width": args.width,
            "step": g.step, "lambda": _round12(report.lambda_),
            "sites_per_step": report.sites_per_step,
            "sigma_lower": _round12(report.sigma_lower), "sigma_upper": upper,
            "residual": _round12(report.residual)}


def _cmd_upper(args) -> dict:
    sigma = spectral.entropy_upper(_tileset(args.tiles))
    return {"command": "upper", "tiles": args.tiles, "sigma_upper": _round12(sigma)}


def _cmd_ising(args) -> dict:
    beta = ising.BETA_TILING if args.beta is None else _parse_beta(args.beta)
    if beta == ising.BETA_TILING:
        bound = ising.t_tetromino_bound(args.grid)
        return {"command": "ising-bound", "beta": _round12(bound.beta), "grid": bound.grid,
                "sigma_ising": _round12(bound.sigma_ising),
                "sigma_lower": _round12(bound.sigma_lower),
                "err_estimate": _round12(bound.err_estimate)}
    sigma = ising.onsager_entropy(beta, args.grid)
    err = abs(sigma - ising.onsager_entropy(beta, args.grid // 2)) if args.grid >= 128 else None
    return {"command": "ising-bound", "beta": _round12(beta), "grid": args.grid,
            "sigma_ising": _round12(sigma), "sigma_lower": None,
            "err_estimate": None if err is None else _round12(err)}


def _cmd_fylfot(args) -> dict:
    _check_width(args.width)
    if args.length < 1:
        raise UsageError("--length must be at least 1")
    total = ising.fylfot_sum(args.width, args.length)
    return {"command": "fylfot", "rows": args.width, "cols": args.length,
            "sum": str(total),
            "per_site_bound": _round12(math.log(total) / (16 * args.width * args.length))}


def _cmd_dot(args) -> dict:
    _check_width(args.width)
    auto = am.trim_reachable(am.build_automaton(_tileset(args.tiles), args.width))
    return {"command": "automaton-dot", "tiles": args.tiles, "width": args.width,
            "states": len(auto.states), "dot": am.to_dot(auto)}


_COMMANDS = {
    "count": _cmd_count,
    "series": _cmd_series,
    "oracle": _cmd_oracle,
    "gf": _cmd_gf,
    "faultfree": _cmd_faultfree,
    "entropy": _cmd_entropy,
    "upper": _cmd_upper,
    "ising-bound": _cmd_ising,
    "fylfot": _cmd_fylfot,
    "automaton-dot": _cmd_dot,
}


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"


def render_text(report: dict) -> str:
    if report["command"] == "automaton-dot":
        return report["dot"]
    lines = []
    for key, value in report.items():
        if isinstance(value, list):
            value = " ".join(str(v) for v in value)
        elif isinstance(value, float):
            value = f"{value:.12g}"
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise UsageError("a command is required (try --help)")
        report = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (poly.TileError, am.AutomatonError) as exc:
        print(f"tile error: {exc}", file=sys.stderr)
        return EXIT_BAD_TILES
    except gfmod.NoTilingsError as exc:
        print(f"no tilings: {exc}", file=sys.stderr)
        return EXIT_NO_TILINGS
    except (am.OracleLimitError, gfmod.RecurrenceError, spectral.SpectralError,
            ising.IsingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render_json(report) if args.json else render_text(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
