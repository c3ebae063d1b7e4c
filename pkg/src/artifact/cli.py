"""Command-line front end.

Exit status: 0 on success, 1 on usage or validation errors, 2 when a
numerical routine fails.  Single scalar results are printed bare; records
are printed as CSV with a header or, with ``--format json``, as JSON.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import IO, Sequence

from . import haidao, interpolation, solar
from .errors import NumericalFailure, ValidationError
from .piecewise import build_piecewise, build_piecewise_linear
from .tableio import _json_number, fmt, parse_qi_table, write_qi_table, write_rows

log = logging.getLogger("artifact")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _globals(parser: argparse.ArgumentParser, top: bool) -> None:
    # leaf parsers accept the global flags too, without clobbering top-level values
    parser.add_argument("--format", choices=("csv", "json"), default="csv" if top else argparse.SUPPRESS)
    parser.add_argument(
        "--plot", metavar="FILE", help="write a static figure (.svg or .png)", default=None if top else argparse.SUPPRESS
    )


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="artifact", description="Piecewise parabolic solar interpolation and gnomon surveys.")
    _globals(p, top=True)
    top = p.add_subparsers(dest="group", metavar="COMMAND", required=True, parser_class=_Parser)

    interp = top.add_parser("interp", help="single-piece quadratic interpolation")
    isub = interp.add_subparsers(dest="cmd", metavar="SUBCOMMAND", required=True, parser_class=_Parser)
    ev = isub.add_parser("eval", help="evaluate the interpolant at x")
    co = isub.add_parser("coeffs", help="power-basis coefficients a0, a1, a2")
    for sp in (ev, co):
        sp.add_argument("--n1", type=float, required=True)
        sp.add_argument("--n2", type=float)
        sp.add_argument("--d1", type=float, required=True)
        sp.add_argument("--d2", type=float, required=True)
        _globals(sp, top=False)
    ev.add_argument("--x", type=float, required=True)
    ev.add_argument("--strict", action="store_true", help="only accept 0 <= x < n1")
    ev.add_argument("--huangji", action="store_true", help="equal-interval form; n2 defaults to n1")

    sol = top.add_parser("solar", help="synthetic qi tables and error sweeps")
    ssub = sol.add_subparsers(dest="cmd", metavar="SUBCOMMAND", required=True, parser_class=_Parser)
    tab = ssub.add_parser("table", help="generate a qi table")
    tab.add_argument("--synthetic", action="store_true", help="use the sine solar model (only source)")
    tab.add_argument("--out", metavar="FILE")
    err = ssub.add_parser("error", help="interpolation error against the solar model")
    err.add_argument("--table", metavar="FILE", help="qi table file, '-' for stdin; default: synthetic")
    err.add_argument("--table-format", choices=("csv", "json"), default="csv")
    err.add_argument("--samples", type=int, default=10_000)
    err.add_argument("--method", choices=("linear", "parabolic", "both"), default="both")
    for sp in (tab, err):
        sp.add_argument("--amplitude", type=float, default=2.0, help="equation-of-center amplitude, du")
        sp.add_argument("--year", type=float, default=365.25, help="year length, days")
        sp.add_argument("--phase", type=float, default=0.0, help="days")
        sp.add_argument("--mode", choices=("ping", "ding"), default="ping")
        _globals(sp, top=False)

    hd = top.add_parser("haidao", help="double-gnomon island survey")
    hsub = hd.add_subparsers(dest="cmd", metavar="SUBCOMMAND", required=True, parser_class=_Parser)
    ht = hsub.add_parser("height", help="island height from two shadows")
    ht.add_argument("--gnomon", type=float, required=True)
    ht.add_argument("--sep", type=float, required=True)
    ht.add_argument("--front-shadow", type=float, required=True)
    ht.add_argument("--rear-shadow", type=float, required=True)
    ht.add_argument("--distance", action="store_true", help="also report distance to the island")
    sm = hsub.add_parser("simulate", help="shadows a surveyor would measure")
    sm.add_argument("--height", type=float, required=True)
    sm.add_argument("--distance", type=float, required=True)
    sm.add_argument("--gnomon", type=float, required=True)
    sm.add_argument("--sep", type=float, required=True)
    for sp in (ht, sm):
        _globals(sp, top=False)
    return p


def _record(out: IO[str], fields: dict, format: str) -> None:
    if format == "json":
        out.write(json.dumps({k: _json_number(v) for k, v in fields.items()}) + "\n")
    elif len(fields) == 1:
        out.write(fmt(next(iter(fields.values()))) + "\n")
    else:
        write_rows(out, list(fields), [list(fields.values())], "csv")


def _piece(args) -> interpolation.QiPiece:
    n2 = args.n1 if args.n2 is None else args.n2
    return interpolation.QiPiece(args.n1, n2, args.d1, args.d2)


def _cmd_interp(args, out) -> None:
    if args.cmd == "coeffs":
        if args.n2 is None:
            raise ValidationError("interp coeffs: --n2 is required")
        piece = _piece(args)
        poly = interpolation.coefficients(piece)
        _record(out, {"a0": poly.a0, "a1": poly.a1, "a2": poly.a2}, args.format)
    else:
        if args.huangji:
            if args.n2 is not None and args.n2 != args.n1:
                raise ValidationError("--huangji needs n2 == n1")
            piece = _piece(args)
            value = interpolation.eval_huangji(args.n1, args.d1, args.d2, args.x, strict=args.strict)
        else:
            if args.n2 is None:
                raise ValidationError("interp eval: --n2 is required without --huangji")
            piece = _piece(args)
            value = interpolation.eval_dayan(piece, args.x, strict=args.strict)
        _record(out, {"value": value}, args.format)
    if args.plot:
        from .plotting import plot_piece

        plot_piece(piece, args.plot)


def _model(args) -> solar.SolarModel:
    return solar.SolarModel(year_length=args.year, amplitude=args.amplitude, phase=args.phase)


def _cmd_solar(args, out) -> None:
    model = _model(args)
    if args.cmd == "table":
        if not args.synthetic:
            raise ValidationError("solar table: only --synthetic tables can be generated")
        table = solar.make_qi_table(model, args.mode)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                write_qi_table(table, fh, args.format)
        else:
            write_qi_table(table, out, args.format)
        if args.plot:
            from .plotting import plot_piecewise

            plot_piecewise(build_piecewise(table), args.plot, title=f"{args.mode} qi, A={fmt(args.amplitude)} du")
        return

    if args.samples < 1:
        raise ValidationError("--samples must be >= 1")
    if args.table is None:
        table = solar.make_qi_table(model, args.mode)
    else:
        table = parse_qi_table(args.table, args.table_format, start=solar.table_start(model, args.mode))
        if abs(table.year_length - model.year_length) > 1e-6:
            log.warning(
                "table year length %s differs from model year %s", fmt(table.year_length), fmt(model.year_length)
            )
    builders = {"linear": build_piecewise_linear, "parabolic": build_piecewise}
    methods = ("linear", "parabolic") if args.method == "both" else (args.method,)
    rows = []
    for method in methods:
        res = solar.error_sweep(model, builders[method](table), args.samples)
        rows.append([method, args.mode, args.samples, res.max_abs, res.mean_abs])
    write_rows(out, ["method", "mode", "samples", "max_abs", "mean_abs"], rows, args.format)
    if args.plot:
        from .plotting import plot_piecewise

        plot_piecewise(build_piecewise(table), args.plot)


def _cmd_haidao(args, out) -> None:
    if args.plot:
        raise ValidationError("--plot is not available for haidao commands")
    if args.cmd == "height":
        survey = haidao.GnomonSurvey(args.gnomon, args.sep, args.front_shadow, args.rear_shadow)
        fields = {"height": haidao.island_height(survey)}
        if args.distance:
            fields["distance"] = haidao.island_distance(survey)
        _record(out, fields, args.format)
    else:
        scene = haidao.IslandScene(args.height, args.distance, args.gnomon, args.sep)
        s = haidao.simulate_shadows(scene)
        _record(out, {"front_shadow": s.front_shadow, "rear_shadow": s.rear_shadow}, args.format)


_DISPATCH = {"interp": _cmd_interp, "solar": _cmd_solar, "haidao": _cmd_haidao}


def run(argv: Sequence[str] | None = None, stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("warning: %(message)s"))
    root = logging.getLogger("artifact")
    root.addHandler(handler)
    try:
        args = build_parser().parse_args(argv)
        _DISPATCH[args.group](args, stdout)
    except UsageError as exc:
        print(exc, file=stderr)
        return 1
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 0
    finally:
        root.removeHandler(handler)
    return 0


def main() -> None:
    sys.exit(run())
