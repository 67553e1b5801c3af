"""Command-line front end: ``tricover analyze | classify | verify | n0``.

Every command prints a text table by default and a JSON report with
``--json``.  Exit codes: 0 ok, 1 usage, 2 mathematical rejection, 3 oracle
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Callable

from . import analyzer as an
from . import classifier as cl
from . import oracle as orc
from .cohomology import canonical_class, parse_target, target_json

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REJECTED = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    provenance: list = field(default_factory=list)
    status: str = "ok"

    def cite(self, result: str, source: str) -> None:
        self.provenance.append({"result": result, "source": source})

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
                "provenance": self.provenance,
                "status": self.status,
            },
            indent=2,
        )


def load_schema() -> dict:
    return json.loads(resources.files("tricover").joinpath("report_schema.json").read_text())


def validate_report(doc: dict) -> None:
    import jsonschema

    jsonschema.validate(doc, load_schema())


def _error(report: Report, message: str, source: str | None = None) -> Report:
    report.status = "error"
    report.results = {"error": message}
    if source:
        report.cite("error", source)
    return report


# -- commands ---------------------------------------------------------------


def cmd_analyze(m: int, r: int, max_power: int | None = None) -> tuple[Report, int]:
    N = m + 2 if max_power is None else max_power
    report = Report("analyze", {"dim": m, "degree": r, "max_power": N})
    try:
        params = an.CoverParams(m, r)
    except an.ParityError as exc:
        return _error(report, str(exc), "Theorem 3.1(1)"), EXIT_REJECTED
    curve_prop = "Prop 2.4" if params.odd else "Prop 2.10"
    s = an.splitting(params)
    res = report.results
    res["splitting"] = {"a1": s.a1, "a2": s.a2, "pushforward": s.pushforward()}
    report.cite("splitting", f"{curve_prop} (1.1)")

    res["blocks"] = []
    for n in range(N + 1):
        b = an.block_dims(params, n)
        res["blocks"].append(
            {"n": n, "degA": b.degA, "degB": b.degB, "degC": b.degC,
             "dimA": b.dimA, "dimB": b.dimB, "dimC": b.dimC, "h0": b.total}
        )
    report.cite("blocks", f"{curve_prop} proof, block decomposition A(n)+B(n)+C(n)")

    res["images"] = []
    for total in range(2, N + 1):
        for s1 in range(1, total // 2 + 1):
            p = an.beta_image(params, s1, total - s1)
            res["images"].append(
                {"s1": p.s1, "s2": p.s2, "coversA": p.coversA, "coversB": p.coversB,
                 "coversC": p.coversC, "image_dim": p.image_dim, "codim": p.codim}
            )
    report.cite("images", "(2.5.1)/(2.5.2) block image rule; codimensions lifted by Lemma 2.3(3)")

    res["profile"] = {str(k): v for k, v in an.generator_profile(params).items()}
    report.cite("profile.1", "h0(K_X) = r+m, complete canonical series (Theorem 3.1(2))")
    report.cite("profile", "Theorem 2.6" if params.odd else "Theorem 2.11")

    res["n0"] = {}
    for n in range(1, N + 1):
        v = an.n0_status(params, n)
        res["n0"][str(n)] = v.status.value
        report.cite(f"n0.{n}", v.source)
    res["assumptions"] = ["K_X ample (for N0)", "X pluriregular with base-point-free K_X"]
    return report, EXIT_OK


def cmd_classify(target: str) -> tuple[Report, int]:
    Y = parse_target(target)
    report = Report("classify", {"target": target_json(Y)})
    v = cl.classify(Y)
    res = report.results
    res["target"] = str(Y)
    res["allowed"] = v.allowed
    res["reason"] = v.reason
    res["canonical_class"] = canonical_class(Y).to_json()
    report.cite("canonical_class", "Theorem 3.3 proof (K_Y of each target)")
    report.cite("allowed", "Theorem 3.3 (3.3.2) K_Y = L^-2(1)")
    if not v.allowed:
        return report, EXIT_REJECTED
    res["L"] = v.L.to_json()
    res["pushforward"] = [D.to_json() for D in v.pushforward]
    res["complete_series"] = v.complete_series
    res["pluriregular"] = v.pluriregular
    res["pluriregular_range"] = [1, Y.dim - 1]
    report.cite("L", "Theorem 3.3 (3.3.2)")
    report.cite("pushforward", "Theorem 3.3 (3.3.1)")
    report.cite("complete_series", "Theorem 3.3, h0(L^-1(1)) = h0(L^-2(1)) = 0")
    report.cite("pluriregular", "Theorem 3.3, h^i(O), h^i(-L), h^i(-2L) = 0 for 0 < i < m")
    ex = cl.cyclic_example(Y)
    example: dict[str, Any] = {
        "branch_class": ex.branch_class.to_json(),
        "canonical_pullback_check": ex.canonical_pullback_check,
        "h0_KX": ex.h0_KX,
        "notes": list(ex.notes),
    }
    if ex.stated_branch_class is not None:
        example["stated_branch_class"] = ex.stated_branch_class.to_json()
    res["example"] = example
    report.cite("example", "Prop 3.4 cyclic construction")
    return report, EXIT_OK


def cmd_verify(
    m: int,
    r: int,
    max_total: int | None = None,
    coeffs: str = "distinct",
    seed: int = 0,
    guard: int = orc.DEFAULT_GUARD,
) -> tuple[Report, int]:
    T = m + 3 if max_total is None else max_total
    mode = "random" if coeffs == "random" else "distinct"
    inputs = {"dim": m, "degree": r, "max_total": T, "coeffs": coeffs}
    if mode == "random":
        inputs["seed"] = seed
    report = Report("verify", inputs)
    try:
        cov = orc.build_cover(m, r, mode, seed)
    except an.ParityError as exc:
        return _error(report, str(exc), "Theorem 3.1(1)"), EXIT_REJECTED
    try:
        reports = orc.verify_grid(cov, T, guard)
    except orc.OracleGuardError as exc:
        return _error(report, str(exc)), EXIT_USAGE
    res = report.results
    res["cover"] = {
        "m": m, "r": r, "d": cov.d, "coeff_mode": cov.coeff_mode,
        "seed": cov.seed, "f": str(cov.f),
    }
    two_g_minus_2 = 2 * cov.d - 6
    res["genus"] = {
        "hurwitz_genus": two_g_minus_2 // 2 + 1,
        "h0_theta_m": len(orc.section_basis(cov, m)),
        "two_g_minus_2": two_g_minus_2,
        "passes": orc.genus_check(cov),
    }
    res["reports"] = [
        {"s1": x.s1, "s2": x.s2, "oracle_rank": x.oracle_rank,
         "predicted_dim": x.predicted_dim, "target_dim": x.target_dim, "match": x.match}
        for x in reports
    ]
    ok = all(x.match for x in reports) and res["genus"]["passes"]
    res["all_match"] = ok
    report.cite("genus", "Riemann-Hurwitz vs h0(theta^m) = h0(K_C)")
    report.cite("reports.oracle_rank", "oracle")
    report.cite("reports.predicted_dim", "(2.5.1)/(2.5.2) block image rule")
    return report, EXIT_OK if ok else EXIT_MISMATCH


def cmd_n0(m: int, r: int, power: int) -> tuple[Report, int]:
    report = Report("n0", {"dim": m, "degree": r, "power": power})
    if power < 1:
        raise UsageError(f"--power must be >= 1, got {power}")
    try:
        params = an.CoverParams(m, r)
    except an.ParityError as exc:
        return _error(report, str(exc), "Theorem 3.1(1)"), EXIT_REJECTED
    v = an.n0_status(params, power)
    report.results = {"power": power, "status": v.status.value, "source": v.source}
    report.cite("status", v.source)
    return report, EXIT_OK


# -- text rendering ---------------------------------------------------------


def _sources(report: Report) -> dict[str, str]:
    return {p["result"]: p["source"] for p in report.provenance}


def render_text(report: Report) -> str:
    src = _sources(report)
    res = report.results
    lines = [f"{report.command}: " + ", ".join(f"{k}={v}" for k, v in report.inputs.items())]
    if report.status == "error":
        lines.append(f"error: {res['error']}" + (f"  [{src['error']}]" if "error" in src else ""))
        return "\n".join(lines)
    render = _RENDERERS[report.command]
    lines.extend(render(res, src))
    return "\n".join(lines)


def _table(header: list[str], rows: list[list[Any]]) -> list[str]:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]


def _render_analyze(res: dict, src: dict) -> list[str]:
    s = res["splitting"]
    out = [f"splitting: a1={s['a1']} a2={s['a2']}  pi_*O = {s['pushforward']}  [{src['splitting']}]"]
    out.append(f"blocks  [{src['blocks']}]")
    keys = ["n", "degA", "degB", "degC", "dimA", "dimB", "dimC", "h0"]
    out += _table(keys, [[b[k] for k in keys] for b in res["blocks"]])
    out.append(f"images  [{src['images']}]")
    keys = ["s1", "s2", "coversA", "coversB", "coversC", "image_dim", "codim"]
    out += _table(keys, [[im[k] for k in keys] for im in res["images"]])
    out.append(f"generators  [{src['profile']}; degree 1: {src['profile.1']}]")
    out += _table(["degree", "count"], [[k, v] for k, v in res["profile"].items()])
    out.append("N0")
    out += _table(["n", "status", "source"], [[n, st, src[f"n0.{n}"]] for n, st in res["n0"].items()])
    out.append("assuming: " + "; ".join(res["assumptions"]))
    return out


def _render_classify(res: dict, src: dict) -> list[str]:
    fmt = _fmt_class
    out = [
        f"target: {res['target']}  K_Y = {fmt(res['canonical_class'])}  [{src['canonical_class']}]",
        f"allowed: {res['allowed']}  [{src['allowed']}]",
        f"reason: {res['reason']}",
    ]
    if not res["allowed"]:
        return out
    out.append(f"L = {fmt(res['L'])}  [{src['L']}]")
    summands = ["O_Y" if fmt(D) in ("0", "O(0)") else _as_bundle(fmt(D)) for D in res["pushforward"]]
    out.append("pi_*O_X = " + " + ".join(summands) + f"  [{src['pushforward']}]")
    out.append(f"complete canonical series: {res['complete_series']}  [{src['complete_series']}]")
    lo, hi = res["pluriregular_range"]
    out.append(f"pluriregular (i={lo}..{hi}): {res['pluriregular']}  [{src['pluriregular']}]")
    ex = res["example"]
    out.append(f"cyclic example  [{src['example']}]")
    out.append(f"  branch class 3L = {fmt(ex['branch_class'])}")
    if "stated_branch_class" in ex:
        out.append(f"  stated ramification class = {fmt(ex['stated_branch_class'])}")
    out.append(f"  K_X = pi^*O(1): {ex['canonical_pullback_check']}")
    out.append(f"  h0(K_X) = {ex['h0_KX']}")
    out += [f"  note: {n}" for n in ex["notes"]]
    return out


def _as_bundle(text: str) -> str:
    return text if text.startswith("O(") else f"O({text})"


def _fmt_class(D: dict) -> str:
    if "O" in D:
        return f"O({D['O']})"
    parts = []
    for sym in ("H", "F"):
        c = D[sym]
        if c:
            parts.append(f"{'' if c == 1 else '-' if c == -1 else c}{sym}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def _render_verify(res: dict, src: dict) -> list[str]:
    c, g = res["cover"], res["genus"]
    out = [
        f"cover: z^3 = f, deg f = {c['d']}, mode = {c['coeff_mode']}, seed = {c['seed']}",
        f"f = {c['f']}",
        f"genus: Hurwitz g = {g['hurwitz_genus']}, h0(theta^m) = {g['h0_theta_m']}, "
        f"2g-2 = {g['two_g_minus_2']}, passes = {g['passes']}  [{src['genus']}]",
        f"ranks  [oracle_rank: {src['reports.oracle_rank']}; predicted_dim: {src['reports.predicted_dim']}]",
    ]
    keys = ["s1", "s2", "oracle_rank", "predicted_dim", "target_dim", "match"]
    out += _table(keys, [[x[k] for k in keys] for x in res["reports"]])
    out.append(f"all match: {res['all_match']}")
    return out


def _render_n0(res: dict, src: dict) -> list[str]:
    return [f"n={res['power']}: {res['status']}  [{src['status']}]"]


_RENDERERS: dict[str, Callable[[dict, dict], list[str]]] = {
    "analyze": _render_analyze,
    "classify": _render_classify,
    "verify": _render_verify,
    "n0": _render_n0,
}


# -- argument parsing -------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tricover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument("--out", metavar="PATH", help="also write the JSON report to PATH")

    p = sub.add_parser("analyze", help="closed-form profile for (m, r)")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-power", type=int)
    common(p)

    p = sub.add_parser("classify", help="admissibility of a minimal-degree target")
    p.add_argument("--target", required=True, help="pm:<m> | quadric:<m> | scroll:<e1,e2,...> | veronese")
    common(p)

    p = sub.add_parser("verify", help="certify image ranks on an explicit cyclic cover")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-total", type=int)
    p.add_argument("--coeffs", choices=["distinct", "random"], default="distinct")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--guard", type=int, default=orc.DEFAULT_GUARD, help=argparse.SUPPRESS)
    common(p)

    p = sub.add_parser("n0", help="projective normality of n K_X")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--power", type=int, required=True)
    common(p)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "analyze":
            report, code = cmd_analyze(args.dim, args.degree, args.max_power)
        elif args.command == "classify":
            try:
                report, code = cmd_classify(args.target)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        elif args.command == "verify":
            if args.max_total is not None and args.max_total < 2:
                raise UsageError("--max-total must be >= 2")
            report, code = cmd_verify(
                args.dim, args.degree, args.max_total, args.coeffs, args.seed, args.guard
            )
        else:
            report, code = cmd_n0(args.dim, args.degree, args.power)
    except UsageError as exc:
        print(f"tricover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # out-of-range dimension/degree
        print(f"tricover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    text = report.to_json()
    print(text if args.json else render_text(report))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if report.status == "error":
        print(f"tricover: {report.results['error']}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
