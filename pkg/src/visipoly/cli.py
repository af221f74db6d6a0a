"""Command-line interface: ``visipoly {gen,poly,mu,gamma,sep,verify}``.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input or no
closed form in range, 3 graph over the enumeration cap.  Results go to
stdout (or ``--out``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .closed_forms import (
    CLOSED_FAMILIES,
    HELM_READINGS,
    UnsupportedClosedForm,
    closed_form_dispatch,
    helm_polynomial_reading,
    wheel_expression,
)
from .graph import FAMILY_ARITY, FamilySpec, Graph, GraphError, build_family, iter_bits, to_mask
from .polynomial import Polynomial
from .separators import (
    NotMutualVisibilitySet,
    is_set_separator,
    is_shortest_separator,
    maximal_absolute_cq_visible,
    path_cut,
)
from .visibility import (
    DEFAULT_MAX_N,
    EnumerationCapError,
    maximum_mutual_visibility_set,
    visibility_polynomial_bruteforce,
)

EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_CAP = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


@dataclass
class RunReport:
    graph: dict | None
    method: str
    payload: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_json(self) -> str:
        # wall time is left out so identical runs give identical bytes
        body = {"graph": self.graph, "method": self.method, **self.payload}
        return json.dumps(body, indent=2)


def _graph_summary(g: Graph) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "family": g.family.to_json() if g.family else None,
    }


def _family_spec(tokens: list[str]) -> FamilySpec:
    name, *rest = tokens
    try:
        params = tuple(int(t) for t in rest)
    except ValueError:
        raise CliError(f"family parameters must be integers, got {rest}") from None
    if name not in FAMILY_ARITY:
        raise CliError(f"unknown family {name!r}")
    return FamilySpec(name, params)


def _load_graph(args) -> Graph:
    if args.infile and args.family:
        raise CliError("give either --in or --family, not both")
    if args.infile:
        return Graph.from_json(Path(args.infile).read_text())
    if args.family:
        return build_family(_family_spec(args.family))
    raise CliError("no graph given; use --in PATH or --family NAME PARAMS")


def _vertex_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise CliError(f"bad vertex list {text!r}") from None


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _diag(msg: str) -> None:
    print(msg, file=sys.stderr)


# commands


def cmd_gen(args) -> int:
    g = build_family(_family_spec([args.name, *args.params]))
    _emit(args, g.to_json())
    return 0


def _compute_poly(g: Graph, method: str, args):
    """Returns (polynomial, method actually used, closed-form result or None)."""
    if method in ("closed", "auto") and g.family and g.family.name in CLOSED_FAMILIES:
        try:
            res = closed_form_dispatch(g.family)
            return res.polynomial, "closed", res
        except UnsupportedClosedForm:
            if method == "closed":
                raise
    elif method == "closed":
        raise UnsupportedClosedForm("graph is not a theorem-backed family; use --method brute")
    p = visibility_polynomial_bruteforce(g, args.max_n, args.threads)
    return p, "brute", None


def cmd_poly(args) -> int:
    g = _load_graph(args)
    t0 = time.perf_counter()
    p, used, res = _compute_poly(g, args.method, args)
    report = RunReport(_graph_summary(g), used, wall_time=time.perf_counter() - t0)
    latex = res.symbolic if (args.symbolic and res is not None and res.symbolic) else p.to_latex()
    report.payload = {
        "polynomial": p.to_json_obj(),
        "human": p.to_human(),
        "latex": latex,
        "mu": p.degree,
    }
    if res is not None:
        report.payload["notes"] = res.notes
    _diag(f"{g.summary()}; method={used}; {report.wall_time:.3f}s")
    if args.format == "json":
        _emit(args, report.to_json())
    elif args.format == "latex":
        _emit(args, latex)
    else:
        lines = [f"method: {used}", p.to_human()]
        _emit(args, "\n".join(lines))
    return 0


def cmd_mu(args) -> int:
    g = _load_graph(args)
    t0 = time.perf_counter()
    best = maximum_mutual_visibility_set(g, args.max_n)
    witness = list(iter_bits(best))
    _diag(f"{g.summary()}; {time.perf_counter() - t0:.3f}s")
    if args.format == "json":
        _emit(args, RunReport(_graph_summary(g), "brute", {"mu": len(witness), "witness": witness}).to_json())
    else:
        _emit(args, f"mu: {len(witness)}\nwitness: {witness}")
    return 0


def cmd_gamma(args) -> int:
    g = _load_graph(args)
    q = _vertex_list(args.q)
    if any(not 0 <= v < g.n for v in q):
        raise CliError(f"Q has vertices outside 0..{g.n - 1}")
    fam = maximal_absolute_cq_visible(g, to_mask(q))
    members = [list(iter_bits(w)) for w in fam.members]
    if args.format == "json":
        payload = {"q": q, "members": members, "pairwise_disjoint": fam.pairwise_disjoint}
        _emit(args, RunReport(_graph_summary(g), "enumeration", payload).to_json())
    else:
        lines = [f"Q = {q}", f"|Gamma_Q| = {len(members)}"]
        lines += [f"  {m}" for m in members]
        lines.append(f"disjoint-visible: {'yes' if fam.pairwise_disjoint else 'no'}")
        _emit(args, "\n".join(lines))
    return 0


def cmd_sep(args) -> int:
    g = _load_graph(args)
    if args.pair is not None:
        if args.sep is None:
            raise CliError("--pair needs --sep")
        u, v = args.pair
        ok = is_shortest_separator(g, args.sep, u, v)
        result = {"sep": args.sep, "pair": [u, v], "shortest_separator": ok}
        text = f"{args.sep} separates {u} and {v}: {'yes' if ok else 'no'}"
    elif args.sets is not None:
        if args.sep is None:
            raise CliError("--sets needs --sep")
        a, b = (_vertex_list(s) for s in args.sets)
        ok = is_set_separator(g, args.sep, to_mask(a), to_mask(b))
        result = {"sep": args.sep, "a": a, "b": b, "set_separator": ok}
        text = f"{args.sep} is a set-separator for {a} | {b}: {'yes' if ok else 'no'}"
    else:
        cut = list(iter_bits(path_cut(g)))
        result = {"path_cut": cut}
        text = f"path-cut: {cut}"
    if args.format == "json":
        _emit(args, RunReport(_graph_summary(g), "separators", result).to_json())
    else:
        _emit(args, text)
    return 0


def _parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise CliError(f"bad range {text!r}; use LO..HI or a single integer") from None


def _first_mismatch(a: Polynomial, b: Polynomial):
    for k in range(max(len(a), len(b))):
        if a[k] != b[k]:
            return k, a[k], b[k]
    return None


THEOREMS = {
    "wheel": "V(W_n) = (1+x)^(n-1) + x + (n-1)x^2 + 2(n-1)x^3, n >= 8",
    "helm": "V(H_n) = V(W_n) + ((1+x)^(n-1) - 1) + (n-1)x^2 + sum_Q w_Q(x), n >= 8",
    "friendship": "V(F_n) = (1+x)^(2n) + x + 2n x^2 + n x^3",
    "shell": "V(S_n) = (1+x)^(n-1) + x + (n-1)x^2 + (2n-5)x^3, n >= 3",
    "bow": "V(B_m,n) = (1+x)^(m+n-2) + x + (m+n-2)x^2 + (2m+2n-10)x^3, m,n >= 3",
}


def _verify_rows(name: str, param_sets: list[tuple[int, ...]], args) -> list[dict]:
    rows = []
    for params in param_sets:
        spec = FamilySpec(name, params)
        g = build_family(spec)
        row: dict = {"params": list(params), "n_vertices": g.n}
        try:
            res = closed_form_dispatch(spec)
            closed, informational = res.polynomial, False
        except UnsupportedClosedForm:
            if not args.informational or name not in ("wheel", "helm"):
                raise
            informational = True
            closed = wheel_expression(params[0]) if name == "wheel" else None
        brute = visibility_polynomial_bruteforce(g, args.max_n, args.threads)
        if name == "helm":
            matches = [
                r for r in HELM_READINGS if helm_polynomial_reading(params[0], r, check=False) == brute
            ]
            row["helm_readings_matching"] = matches
            if closed is None:
                closed = helm_polynomial_reading(params[0], HELM_READINGS[1], check=False)
        mismatch = _first_mismatch(closed, brute)
        row.update(
            closed=closed,
            brute=brute,
            ok=mismatch is None,
            informational=informational,
            mismatch=None if mismatch is None else {"k": mismatch[0], "closed": str(mismatch[1]), "brute": str(mismatch[2])},
        )
        rows.append(row)
    return rows


def cmd_verify(args) -> int:
    name = args.name
    if name not in CLOSED_FAMILIES:
        raise CliError(f"no theorem to verify for family {name!r}")
    ranges = [_parse_range(r) for r in args.ranges if r.lower() != "x"]
    if len(ranges) != FAMILY_ARITY[name]:
        raise CliError(f"{name} needs {FAMILY_ARITY[name]} range(s)")
    if name == "bow":
        param_sets = [(m, n) for m in ranges[0] for n in ranges[1]]
    else:
        param_sets = [(n,) for n in ranges[0]]
    t0 = time.perf_counter()
    rows = _verify_rows(name, param_sets, args)
    _diag(f"verify {name}: {len(rows)} size(s) in {time.perf_counter() - t0:.2f}s")
    failed = [r for r in rows if not r["ok"] and not r["informational"]]

    if args.figure:
        from .plotting import coefficient_figure

        fig_rows = [(f"{name}({','.join(map(str, r['params']))})", r["brute"], r["closed"]) for r in rows]
        coefficient_figure(fig_rows, THEOREMS[name], args.figure)
        _diag(f"figure written to {args.figure}")

    if args.format == "json":
        out_rows = []
        for r in rows:
            r = dict(r)
            r["closed"] = r["closed"].to_json_obj()
            r["brute"] = r["brute"].to_json_obj()
            out_rows.append(r)
        payload = {"family": name, "theorem": THEOREMS[name], "rows": out_rows, "all_pass": not failed}
        _emit(args, RunReport(None, "verify", payload).to_json())
    else:
        _emit(args, _markdown_table(name, rows, not failed))
    if failed:
        bad = failed[0]
        mm = bad["mismatch"]
        _diag(
            f"MISMATCH {name}{tuple(bad['params'])}: x^{mm['k']} closed={mm['closed']} brute={mm['brute']}"
        )
        return EXIT_MISMATCH
    return 0


def _markdown_table(name: str, rows: list[dict], all_pass: bool) -> str:
    lines = [f"### {THEOREMS[name]}", ""]
    helm = name == "helm"
    header = "| params | \\|V\\| | closed form | brute force | status |"
    sep = "|---|---|---|---|---|"
    if helm:
        header += " w_Q reading matched |"
        sep += "---|"
    lines += [header, sep]
    for r in rows:
        if r["ok"]:
            status = "pass"
        else:
            mm = r["mismatch"]
            status = f"FAIL at x^{mm['k']}: {mm['closed']} vs {mm['brute']}"
        if r["informational"]:
            status += " (informational, outside theorem hypothesis)"
        line = (
            f"| {','.join(map(str, r['params']))} | {r['n_vertices']} | "
            f"{r['closed'].to_human()} | {r['brute'].to_human()} | {status} |"
        )
        if helm:
            line += f" {', '.join(r['helm_readings_matching']) or 'none'} |"
        lines.append(line)
    lines += ["", f"result: {'all pass' if all_pass else 'MISMATCH'}"]
    return "\n".join(lines)


# parser


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", metavar="PATH", help="graph JSON file")
    p.add_argument("--family", nargs="+", metavar="NAME_OR_PARAM", help="e.g. --family wheel 8")


def _add_common(p: argparse.ArgumentParser, *, enum: bool = True) -> None:
    p.add_argument("--format", choices=("human", "json", "latex"), default="human")
    p.add_argument("--out", metavar="PATH", help="write result here instead of stdout")
    if enum:
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help=f"enumeration cap (default {DEFAULT_MAX_N}, hard cap 25)")
        p.add_argument("--threads", type=int, default=0, help="worker processes (default: all cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="visipoly", description="Exact visibility polynomials of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family graph as canonical JSON")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("poly", help="visibility polynomial")
    _add_graph_source(p)
    _add_common(p)
    p.add_argument("--method", choices=("brute", "closed", "auto"), default="auto")
    p.add_argument("--symbolic", action="store_true", help="keep (1+x)^k unexpanded in LaTeX output")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("mu", help="mutual-visibility number with a witness set")
    _add_graph_source(p)
    _add_common(p)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("gamma", help="maximal absolute c_Q-visible sets")
    _add_graph_source(p)
    _add_common(p, enum=False)
    p.add_argument("--q", required=True, help="comma-separated vertices of Q")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("sep", help="path-cut and separator queries")
    _add_graph_source(p)
    _add_common(p, enum=False)
    p.add_argument("--sep", type=int)
    p.add_argument("--pair", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("--sets", nargs=2, metavar=("A", "B"), help="comma-separated vertex lists")
    p.set_defaults(func=cmd_sep)

    p = sub.add_parser("verify", help="check a closed form against brute force")
    p.add_argument("name", choices=CLOSED_FAMILIES)
    p.add_argument("ranges", nargs="+", help="LO..HI (bow takes two, optionally separated by x)")
    _add_common(p)
    p.add_argument("--figure", metavar="PNG", help="also plot the coefficients")
    p.add_argument("--informational", action="store_true", help="evaluate wheel/helm formulas below n=8 without counting failures")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        _diag(f"error: {exc}")
        return EXIT_CAP
    except CliError as exc:
        _diag(f"error: {exc}")
        return exc.code
    except (GraphError, UnsupportedClosedForm, NotMutualVisibilitySet, ValueError) as exc:
        _diag(f"error: {exc}")
        return EXIT_INVALID
    except OSError as exc:
        _diag(f"error: {exc}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
