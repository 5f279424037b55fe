"""Command-line front end: ``qtwist {build,verify,sweep,spectrum,catalog}``."""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import serialize
from .expression import ExpressionSyntaxError, parse_expression
from .spectral import rhat, spectra_agree, spectral_report
from .twist import TwistConfig, all_configs, build_boldR, paired_matrix, paired_word
from .uqsl2 import COPRODUCTS, GENERATORS, standard_data
from .verify import run_report, ybe_residual

DEFAULTS = {"expr": "[2]", "expr2": None, "q": 1.3, "diag": None, "twist": "+", "tol": None, "out": None}


def _settings(args: argparse.Namespace) -> dict:
    settings = dict(DEFAULTS)
    if getattr(args, "config", None):
        settings.update(json.loads(Path(args.config).read_text(encoding="utf-8")))
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def _expressions(settings: dict):
    expr = parse_expression(settings["expr"])
    expr2 = parse_expression(settings["expr2"]) if settings["expr2"] else expr
    if expr2.s != expr.s:
        raise ValueError(f"expressions have s={expr.s} and s={expr2.s} groups")
    return expr, expr2


def _config(settings: dict, s: int) -> TwistConfig:
    diag = settings["diag"] or "+" * s
    config = TwistConfig.from_signs(diag, settings["twist"])
    if config.s != s:
        raise ValueError(f"expression has s={s} uncontracted groups but diag={diag!r} has {config.s}")
    return config


def _emit(payload, out) -> None:
    text = serialize.dumps(payload) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_record(expr_text: str, config: TwistConfig, q: float, expr2_text: str | None = None) -> dict:
    expr = parse_expression(expr_text)
    expr2 = parse_expression(expr2_text) if expr2_text else expr
    if expr.s != config.s or expr2.s != config.s:
        raise ValueError(f"expression has s={expr.s} groups but config has s={config.s}")
    data = standard_data(q)
    m = paired_matrix(config, data, expr.widths, expr2.widths)
    record = {
        "q": data.q,
        "expr": str(expr),
        "config": str(config),
        "dim": m.shape[0],
        "legs_per_group": [sum(expr.widths), sum(expr2.widths)],
        "matrix": serialize.matrix_to_json(m),
        "word": str(build_boldR(config)),
        "expanded_word": str(paired_word(config, expr.widths, expr2.widths)),
    }
    if expr2_text:
        record["expr2"] = str(expr2)
    return record


def cmd_build(args) -> int:
    st = _settings(args)
    expr, expr2 = _expressions(st)
    config = _config(st, expr.s)
    _emit(build_record(st["expr"], config, st["q"], st["expr2"]), st["out"])
    return 0


def cmd_verify(args) -> int:
    st = _settings(args)
    expr, expr2 = _expressions(st)
    config = _config(st, expr.s)
    report = run_report(config, standard_data(st["q"]), expr.widths, expr2.widths, tol=st["tol"])
    payload = report.to_dict()
    payload["expr"] = str(expr)
    _emit(payload, st["out"])
    return 0 if report.passed else 1


def sweep(expr_text: str, q: float) -> dict:
    expr = parse_expression(expr_text)
    data = standard_data(q)
    legs = sum(expr.widths)
    records, reports = [], []
    for config in all_configs(expr.s):
        m = paired_matrix(config, data, expr.widths)
        rep = spectral_report(rhat(m, legs, data.n))
        ybe = ybe_residual(m, data.n) if 3 * legs <= 12 else None
        records.append({"config": str(config), "ybe_residual": ybe, **rep.to_dict()})
        reports.append(rep)
    classes: list[list[int]] = []
    for k, rep in enumerate(reports):
        for cls in classes:
            if spectra_agree(reports[cls[0]], rep):
                cls.append(k)
                break
        else:
            classes.append([k])
    summary = [
        {"configs": [records[k]["config"] for k in cls], "wz_feasible": reports[cls[0]].wz_feasible}
        for cls in classes
    ]
    return {"q": data.q, "expr": str(expr), "records": records, "spectral_classes": summary}


def cmd_sweep(args) -> int:
    st = _settings(args)
    _emit(sweep(st["expr"], st["q"]), st["out"])
    return 0


def cmd_spectrum(args) -> int:
    m, record = serialize.load_matrix_file(args.matrix)
    if args.no_flip:
        target = m
    else:
        legs = record.get("legs_per_group", [None])[0]
        if legs is None:
            legs = round(math.log2(m.shape[0]) / 2)
        target = rhat(m, legs)
    payload = spectral_report(target).to_dict()
    _emit(payload, args.out)
    return 0


def cmd_catalog(args) -> int:
    data = standard_data(args.q)
    payload = {
        "q": data.q,
        "n": data.n,
        "normalization": data.normalization,
        "r_fund": serialize.matrix_to_json(data.r_fund),
        "generators": [
            {"label": h, "matrix": serialize.matrix_to_json(data.fund[h]), "coproduct": [list(t) for t in COPRODUCTS[h]]}
            for h in GENERATORS
        ],
    }
    _emit(payload, args.out)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtwist", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, config=True):
        p.add_argument("--expr", help="contraction pattern, e.g. '[2] o [2]' (default [2])")
        p.add_argument("--q", type=float, help="deformation parameter (default 1.3)")
        p.add_argument("--out", help="write JSON here instead of stdout")
        if config:
            p.add_argument("--expr2", help="pattern for the second slot group (default: --expr)")
            p.add_argument("--diag", help="one '+' or '-' per group (default all '+')")
            p.add_argument("--twist", help="'+' or '-' (default '+')")
            p.add_argument("--tol", type=float, help="override every check tolerance")
            p.add_argument("--config", help="flat JSON file with the same keys; flags win")

    p = sub.add_parser("build", help="build the R-matrix for a pattern and configuration")
    common(p)
    p.set_defaults(func=cmd_build)
    p = sub.add_parser("verify", help="run every applicable check; exit 1 on failure")
    common(p)
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("sweep", help="spectra and Yang-Baxter residuals for all sign configurations")
    common(p, config=False)
    p.add_argument("--config", help="flat JSON file with the same keys; flags win")
    p.set_defaults(func=cmd_sweep)
    p = sub.add_parser("spectrum", help="spectral report of Rhat for a matrix written by build")
    p.add_argument("matrix")
    p.add_argument("--no-flip", action="store_true", help="analyse the matrix itself instead of P R")
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)
    p = sub.add_parser("catalog", help="dump the fundamental U_q sl(2) data")
    p.add_argument("--q", type=float, default=1.3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ExpressionSyntaxError) as exc:
        print(f"qtwist: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
