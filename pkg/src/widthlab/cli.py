"""Command-line interface.

Subcommands: gen, compute, verify-chain, table, audit, corpus,
hypercube-report, rank, separator.  Exit codes: 0 success/verified,
1 verification failed, 2 usage or precondition error, 3 malformed
input, 4 size cap exceeded.

All data output goes to stdout (or --output); warnings and progress go
to stderr so the data stream stays machine-clean.  Every report echoes
the run configuration: as a "config" object in JSON, as a single '#'
comment line in CSV.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import audit as audit_mod
from . import corpus as corpus_mod
from .closed_forms import build_N_table, build_R_table
from .errors import (
    DomainError,
    InvalidSeparator,
    InvariantViolation,
    MalformedInput,
    NotChordal,
    SizeLimitExceeded,
    WidthlabError,
)
from .graph import (
    complete,
    complete_binary_tree,
    hypercube,
    parse_edge_list,
    path,
    path_power,
    random_chordal,
    random_graph,
    random_tree,
    serialize_edge_list,
    star,
)
from .separators import (
    MIN_SEPARATOR_CAP,
    SEPARATOR_NUMBER_CAP,
    check_separator,
    chordal_clique_separator,
    min_balanced_separator,
    separator_number,
    separator_number_with_witness,
)
from .solvers import (
    BW_CAP,
    BW_CAP_DEEP,
    RANK_CAP,
    RANK_CAP_DEEP,
    TW_CAP,
    bandwidth,
    cycle_rank,
    pathwidth,
    separator_ranking,
    treewidth,
    verify_chain,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3
EXIT_SIZE = 4

ENV_CAP = "WIDTHLAB_CAP_N"


class UsageError(WidthlabError):
    pass


# ---------------------------------------------------------------------------
# Small helpers


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _csv(rows: list[list]) -> str:
    return "".join(",".join(_fmt(x) for x in row) + "\n" for row in rows)


def _config_dict(args, keys: list[str]) -> dict:
    cfg = {"subcommand": args.subcommand}
    for key in keys:
        cfg[key] = getattr(args, key.replace("-", "_"), None)
    return cfg


def _config_comment(cfg: dict) -> str:
    parts = " ".join(f"{k}={_fmt(v) if v is not None else '-'}" for k, v in cfg.items())
    return f"# config: {parts}\n"


def _emit(args, text: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_graph(args):
    if not args.input:
        raise UsageError("--input is required (use '-' for stdin)")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from exc
    return parse_edge_list(text)


def _effective_cap(args, default: int, deep_default: int | None = None) -> int:
    if args.cap_n is not None:
        cap = args.cap_n
    else:
        env = os.environ.get(ENV_CAP)
        if env is not None:
            try:
                cap = int(env)
            except ValueError:
                raise UsageError(f"{ENV_CAP} must be an integer, got {env!r}")
        elif deep_default is not None and args.deep:
            cap = deep_default
        else:
            cap = default
    if cap > default:
        print(
            f"warning: cap raised {default} -> {cap}; expect on the order of "
            f"2^{cap} subset states",
            file=sys.stderr,
        )
    return cap


def _parse_range(text: str, what: str) -> tuple[int, int]:
    """'a' or 'a:b' (inclusive)."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            a = b = int(parts[0])
        elif len(parts) == 2:
            a, b = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise UsageError(f"bad {what} range {text!r}; expected 'a' or 'a:b'")
    if a > b:
        raise UsageError(f"empty {what} range {text!r}")
    return a, b


# ---------------------------------------------------------------------------
# gen


_FAMILY_PARAMS = {
    "path": ("n",),
    "path_power": ("n", "k"),
    "hypercube": ("d",),
    "star": ("n",),
    "complete": ("n",),
    "complete_binary_tree": ("d",),
    "random": ("n", "p", "seed"),
    "random_tree": ("n", "seed"),
    "random_chordal": ("n", "width", "seed"),
}


def cmd_gen(args) -> int:
    family = args.family
    needed = _FAMILY_PARAMS[family]
    for name in needed:
        if getattr(args, name) is None:
            raise UsageError(f"family {family!r} requires --{name}")
    if family == "path":
        g = path(args.n)
    elif family == "path_power":
        g = path_power(args.n, args.k)
    elif family == "hypercube":
        g = hypercube(args.d)
    elif family == "star":
        g = star(args.n)
    elif family == "complete":
        g = complete(args.n)
    elif family == "complete_binary_tree":
        g = complete_binary_tree(args.d)
    elif family == "random":
        g = random_graph(args.n, args.p, args.seed)
    elif family == "random_tree":
        g = random_tree(args.n, args.seed)
    else:
        g = random_chordal(args.n, args.width, args.seed)
    header = "# widthlab gen " + " ".join(
        f"{name}={getattr(args, name)}" for name in ("family",) + needed
    )
    _emit(args, header + "\n" + serialize_edge_list(g))
    return EXIT_OK


# ---------------------------------------------------------------------------
# compute

_PARAM_NAMES = ("s", "s_strict", "tw", "pw", "bw", "r")


def _witness_compact(wit: dict) -> str:
    """Comma-free one-cell rendering of a witness dict for CSV output."""
    parts = []
    for key, val in wit.items():
        if isinstance(val, dict):
            val = " ".join(f"{k}:{v}" for k, v in val.items())
        elif isinstance(val, list):
            val = " ".join(map(str, val))
        parts.append(f"{key}={val}")
    return "|".join(parts)


def cmd_compute(args) -> int:
    g = _read_graph(args)
    wanted = [p.strip() for p in args.params.split(",") if p.strip()]
    for p in wanted:
        if p not in _PARAM_NAMES:
            raise UsageError(f"unknown parameter {p!r}; choose from {','.join(_PARAM_NAMES)}")
    values: dict = {}
    witnesses: dict = {}
    for p in wanted:
        if p == "s":
            values[p], witnesses[p] = separator_number_with_witness(
                g, strict=False, cap=_effective_cap(args, SEPARATOR_NUMBER_CAP)
            )
        elif p == "s_strict":
            values[p], witnesses[p] = separator_number_with_witness(
                g, strict=True, cap=_effective_cap(args, SEPARATOR_NUMBER_CAP)
            )
        elif p == "tw":
            values[p], order = treewidth(g, cap=_effective_cap(args, TW_CAP))
            witnesses[p] = {"elimination_order": list(order)}
        elif p == "pw":
            values[p], order = pathwidth(g, cap=_effective_cap(args, TW_CAP))
            witnesses[p] = {"layout": list(order)}
        elif p == "bw":
            values[p], layout = bandwidth(g, cap=_effective_cap(args, BW_CAP, BW_CAP_DEEP))
            witnesses[p] = {"layout": list(layout)}
        else:
            values[p], ranking = cycle_rank(g, cap=_effective_cap(args, RANK_CAP, RANK_CAP_DEEP))
            witnesses[p] = ranking.to_json_dict()
    cfg = _config_dict(args, ["input", "format", "params", "seed", "cap_n", "deep"])
    if args.format == "json":
        _emit(args, json.dumps({"config": cfg, "n": g.n, "values": values, "witnesses": witnesses}, indent=2) + "\n")
    elif args.format == "csv":
        header = ["n"] + wanted + [f"witness_{p}" for p in wanted]
        row = [g.n] + [values[p] for p in wanted]
        row += [_witness_compact(witnesses[p]) for p in wanted]
        _emit(args, _config_comment(cfg) + _csv([header, row]))
    else:
        lines = [f"n = {g.n}"] + [f"{p} = {values[p]}" for p in wanted]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-chain


def cmd_verify_chain(args) -> int:
    g = _read_graph(args)
    report = verify_chain(
        g,
        sep_cap=_effective_cap(args, SEPARATOR_NUMBER_CAP),
        tw_cap=_effective_cap(args, TW_CAP),
        bw_cap=_effective_cap(args, BW_CAP, BW_CAP_DEEP),
        rank_cap=_effective_cap(args, RANK_CAP, RANK_CAP_DEEP),
    )
    cfg = _config_dict(args, ["input", "format", "seed", "cap_n", "deep"])
    payload = report.to_json_dict()
    if args.format == "json":
        _emit(args, json.dumps({"config": cfg, **payload}, indent=2) + "\n")
    elif args.format == "csv":
        cols = ["n", "s", "s_strict", "tw", "pw", "bw", "r", "thm9_ok", "thm2_ok",
                "thm9_bound", "thm2_bound"]
        row = [report.n, report.s, report.s_strict, report.tw, report.pw, report.bw,
               report.r, report.thm9_ok, report.thm2_ok,
               report.thm9_bound_display, report.thm2_bound_display]
        _emit(args, _config_comment(cfg) + _csv([cols, row]))
    else:
        lines = [
            f"n        = {report.n}",
            f"s        = {report.s}",
            f"s~       = {report.s_strict}",
            f"tw       = {report.tw}",
            f"pw       = {report.pw}",
            f"bw       = {report.bw}",
            f"r        = {report.r}",
            f"chain    s <= tw <= pw <= r : {_fmt(report.s <= report.tw <= report.pw <= report.r)}",
            f"r <= s(1+log(n/s))          : {_fmt(report.thm9_bound_holds)} (bound {report.thm9_bound_display:.4f})",
            f"r <= 1 + s~ log n           : {_fmt(report.thm2_bound_holds)} (bound {report.thm2_bound_display:.4f})",
            f"thm9_ok  = {_fmt(report.thm9_ok)}",
            f"thm2_ok  = {_fmt(report.thm2_ok)}",
        ]
        if report.flags:
            lines.append("flags    = " + ", ".join(report.flags))
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if report.thm9_ok and report.thm2_ok else EXIT_FAILED


# ---------------------------------------------------------------------------
# table


def cmd_table(args) -> int:
    k_lo, k_hi = _parse_range(args.k, "k")
    if args.what == "R":
        if args.n is None:
            raise UsageError("table R requires --n")
        lo, hi = _parse_range(args.n, "n")
        entries = []
        for k in range(k_lo, k_hi + 1):
            table = build_R_table(k, hi)
            entries.extend((k, n, table.entries[n]) for n in range(lo, hi + 1))
        header = ["k", "n", "R"]
    else:
        if args.r is None:
            raise UsageError("table N requires --r")
        lo, hi = _parse_range(args.r, "r")
        entries = []
        for k in range(k_lo, k_hi + 1):
            table = build_N_table(k, hi)
            entries.extend((k, r, table.entries[r]) for r in range(lo, hi + 1))
        header = ["k", "r", "N"]
    cfg = _config_dict(args, ["what", "k", "n", "r", "format"])
    if args.format == "json":
        payload = [{header[0]: a, header[1]: b, "value": v} for a, b, v in entries]
        _emit(args, json.dumps({"config": cfg, "entries": payload}, indent=2) + "\n")
    else:
        _emit(args, _config_comment(cfg) + _csv([header] + [list(e) for e in entries]))
    return EXIT_OK


# ---------------------------------------------------------------------------
# audit


def _inputs_compact(inputs: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in inputs.items())


def cmd_audit(args) -> int:
    findings = audit_mod.audit_claims(args.k_max, args.r_max, args.n_max)
    summary = audit_mod.audit_summary(findings)
    internal_ok = audit_mod.audit_internal_ok(findings)
    cfg = _config_dict(args, ["k_max", "r_max", "n_max", "format"])
    if args.format == "json":
        payload = {
            "config": cfg,
            "findings": [f.to_json_dict() for f in findings],
            "summary": summary,
            "internal_ok": internal_ok,
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        rows = [["claim", "inputs", "printed", "oracle", "agree", "note"]]
        rows.extend(
            [f.claim, _inputs_compact(f.inputs), f.printed, f.oracle, f.agree, f.note]
            for f in findings
        )
        _emit(args, _config_comment(cfg) + _csv(rows))
    else:
        lines = []
        for f in findings:
            if f.agree is False:
                lines.append(
                    f"DISAGREE {f.claim} ({_inputs_compact(f.inputs)}): "
                    f"printed {f.printed} vs oracle {f.oracle}"
                )
        lines.append("")
        for claim, counts in summary.items():
            lines.append(
                f"{claim}: agree={counts['agree']} disagree={counts['disagree']} "
                f"out_of_domain={counts['out_of_domain']}"
            )
        _emit(args, "\n".join(lines) + "\n")
    for claim, counts in summary.items():
        print(
            f"audit summary {claim}: agree={counts['agree']} "
            f"disagree={counts['disagree']} out_of_domain={counts['out_of_domain']}",
            file=sys.stderr,
        )
    return EXIT_OK if internal_ok else EXIT_FAILED


# ---------------------------------------------------------------------------
# corpus


def cmd_corpus(args) -> int:
    def progress(done, total):
        print(f"corpus: {done}/{total} graphs checked", file=sys.stderr)

    records = corpus_mod.run_corpus(args.count, args.n_max, args.seed, progress=progress)
    violations = sum(0 if rec.ok() else 1 for rec in records)
    cfg = _config_dict(args, ["count", "n_max", "seed", "format"])
    if args.format == "json":
        payload = {
            "config": cfg,
            "graphs": [rec.to_json_dict() for rec in records],
            "summary": {"graphs": len(records), "violations": violations},
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        rows = [["index", "family", "n", "check", "ok"]]
        for rec in records:
            for check, ok in rec.checks.items():
                rows.append([rec.index, rec.family, rec.n, check, ok])
            if rec.error:
                rows.append([rec.index, rec.family, rec.n, "error", rec.error])
        _emit(args, _config_comment(cfg) + _csv(rows))
    else:
        lines = [f"graphs checked: {len(records)}", f"violations: {violations}"]
        for rec in records:
            if not rec.ok():
                bad = [c for c, ok in rec.checks.items() if not ok]
                lines.append(f"  FAIL #{rec.index} {rec.family}: {bad or rec.error}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if violations == 0 else EXIT_FAILED


# ---------------------------------------------------------------------------
# hypercube-report


def cmd_hypercube_report(args) -> int:
    report = audit_mod.hypercube_report(args.d, deep=args.deep)
    cfg = _config_dict(args, ["d", "deep", "format"])
    if args.format == "json":
        _emit(args, json.dumps({"config": cfg, **report}, indent=2) + "\n")
    elif args.format == "csv":
        rows = [["field", "value"]]

        def flat(prefix, obj):
            for key, val in obj.items():
                name = f"{prefix}.{key}" if prefix else key
                if isinstance(val, dict):
                    flat(name, val)
                else:
                    rows.append([name, val])

        flat("", report)
        _emit(args, _config_comment(cfg) + _csv(rows))
    else:
        bw = report["bw"]
        lines = [
            f"hypercube d={report['d']} (n={report['n']})",
            f"bandwidth:  exact={bw['exact']} printed-formula={bw['harper_printed']} "
            f"standard-formula={bw['harper_standard']} (using {bw['used']}, {bw['source']})",
            f"cycle rank: {report['r_exact']}",
            f"pathwidth:  {report['pw_exact']} (pw == bw: {_fmt(report['pw_equals_bw'])})",
            f"bound r <= R_bw(n):        {report['bounds']['recurrence_height']} "
            f"(holds: {_fmt(report['bounds']['recurrence_holds_for_r'])})",
            f"bound bw(1+log(n/bw)):     {report['bounds']['log_bound']['display']:.4f} "
            f"(holds: {_fmt(report['bounds']['log_bound']['holds_for_r'])})",
            f"bound bw*log(n/bw) (as printed): {report['bounds']['log_bound_no_leading_term']['display']:.4f} "
            f"(holds: {_fmt(report['bounds']['log_bound_no_leading_term']['holds_for_r'])})",
            f"older-chain contrast 1+(bw+1)d:  {report['bounds']['older_chain_contrast']['display']:.1f} "
            f"(exceeds n: {_fmt(report['bounds']['older_chain_contrast']['exceeds_order'])})",
        ]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# rank / separator


def cmd_rank(args) -> int:
    g = _read_graph(args)
    if args.k is not None:
        k = args.k
    else:
        k = max(separator_number(g, cap=_effective_cap(args, SEPARATOR_NUMBER_CAP)), 1)
    ranking = separator_ranking(g, k, cap=_effective_cap(args, MIN_SEPARATOR_CAP))
    cfg = _config_dict(args, ["input", "k", "format", "cap_n"])
    if args.format == "json":
        _emit(args, json.dumps({"config": cfg, "k": k, **ranking.to_json_dict()}, indent=2) + "\n")
    elif args.format == "csv":
        rows = [["vertex", "level"]] + [[v, l] for v, l in sorted(ranking.level.items())]
        _emit(args, _config_comment(cfg) + _csv(rows))
    else:
        lines = [f"k = {k}", f"height = {ranking.height}"]
        lines.extend(f"vertex {v}: level {l}" for v, l in sorted(ranking.level.items()))
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_separator(args) -> int:
    g = _read_graph(args)
    cfg = _config_dict(args, ["input", "strict", "chordal_clique", "format", "cap_n"])
    if args.chordal_clique:
        clique, cert = chordal_clique_separator(g, cap=_effective_cap(args, MIN_SEPARATOR_CAP))
        payload = {"clique": list(clique), "certificate": cert.to_json_dict()}
    else:
        size, witness = min_balanced_separator(
            g, strict=args.strict, cap=_effective_cap(args, MIN_SEPARATOR_CAP)
        )
        cert = check_separator(g, witness)
        payload = {"size": size, "certificate": cert.to_json_dict()}
    if args.format == "json":
        _emit(args, json.dumps({"config": cfg, **payload}, indent=2) + "\n")
    elif args.format == "csv":
        cert_d = payload["certificate"]
        rows = [
            ["x", "component_sizes", "balanced", "strictly_balanced"],
            [
                " ".join(map(str, cert_d["x"])),
                " ".join(map(str, cert_d["component_sizes"])),
                cert_d["balanced"],
                cert_d["strictly_balanced"],
            ],
        ]
        _emit(args, _config_comment(cfg) + _csv(rows))
    else:
        cert_d = payload["certificate"]
        lines = [
            f"x = {cert_d['x']}",
            f"component sizes = {cert_d['component_sizes']}",
            f"balanced = {_fmt(cert_d['balanced'])}",
            f"strictly balanced = {_fmt(cert_d['strictly_balanced'])}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="edge-list file, or '-' for stdin")
    common.add_argument("--output", help="output file (default stdout)")
    common.add_argument("--format", choices=("json", "csv", "text"), default=None,
                        help="output format (default json; table defaults to csv)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap-n", type=int, default=None, dest="cap_n",
                        help=f"override solver size caps (env {ENV_CAP} is a weaker override)")
    common.add_argument("--deep", action="store_true",
                        help="enable d=4 hypercube report and raised bandwidth/rank caps")

    ap = argparse.ArgumentParser(prog="widthlab", description=__doc__)
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a named graph family")
    p.add_argument("--family", required=True, choices=sorted(_FAMILY_PARAMS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--width", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compute", parents=[common], help="compute width parameters")
    p.add_argument("--params", default=",".join(_PARAM_NAMES))
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify-chain", parents=[common],
                       help="verify both inequality chains; exit 0 iff they hold")
    p.set_defaults(func=cmd_verify_chain)

    p = sub.add_parser("table", parents=[common], help="recurrence / adjoint tables")
    p.add_argument("what", choices=("R", "N"))
    p.add_argument("--k", required=True, help="k value or range a:b")
    p.add_argument("--n", help="n range for R tables")
    p.add_argument("--r", help="r range for N tables")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("audit", parents=[common], help="closed-form claims audit")
    p.add_argument("--k-max", type=int, default=4, dest="k_max")
    p.add_argument("--r-max", type=int, default=20, dest="r_max")
    p.add_argument("--n-max", type=int, default=40, dest="n_max")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("corpus", parents=[common], help="seeded property-check corpus run")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--n-max", type=int, default=10, dest="n_max")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("hypercube-report", parents=[common], help="hypercube width report")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_hypercube_report)

    p = sub.add_parser("rank", parents=[common], help="separator-based vertex ranking")
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("separator", parents=[common], help="balanced separator certificates")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--chordal-clique", action="store_true", dest="chordal_clique")
    p.set_defaults(func=cmd_separator)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.subcommand == "table" else "json"
    try:
        return args.func(args)
    except MalformedInput as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except SizeLimitExceeded as exc:
        print(f"error: size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (DomainError, NotChordal, InvalidSeparator, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"error: invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
