"""Command-line front end.

Input files are plain text::

    # a comment
    n 5
    e 1 2
    e 2 3 4

Vertices are 1-based on the command line and in every output; the library
underneath is 0-based. Exit codes: 0 success, 2 unreadable input, 3 budget
exceeded, 4 brute-force and algebraic perfection verdicts disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .coloring import ColoringError, chromatic_number
from .covers import cover_ideal, edge_ideal, minimal_vertex_covers
from .hypergraph import Hypergraph, HypergraphError, expansion, is_graph, validate
from .invariants import (
    DEFAULT_MAX_N,
    DEFAULT_MAX_S,
    BudgetExceeded,
    chi_algebraic,
    chi_b_algebraic,
    dual_of_power,
    expansion_witness,
    persistence_scan,
    secant_generators,
    stabilization_union,
)
from .monomial import format_monomial
from .perfect import is_perfect_algebraic, is_perfect_bruteforce

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_DISAGREE = 4


class HypergraphParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line else msg)


def parse_hypergraph(text: str, *, strict: bool = False) -> Hypergraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise HypergraphParseError(f"non-integer field in {line!r}", lineno) from None
        if tag == "n":
            if n is not None:
                raise HypergraphParseError("duplicate 'n' header", lineno)
            if len(values) != 1 or values[0] < 1:
                raise HypergraphParseError("'n' takes one positive integer", lineno)
            n = values[0]
        elif tag == "e":
            if n is None:
                raise HypergraphParseError("edge before 'n' header", lineno)
            if any(not 1 <= v <= n for v in values):
                raise HypergraphParseError(f"vertex outside 1..{n}", lineno)
            if len(set(values)) < 2:
                raise HypergraphParseError("edge needs at least two distinct vertices", lineno)
            edges.append((lineno, [v - 1 for v in values]))
        else:
            raise HypergraphParseError(f"unknown record {tag!r}", lineno)
    if n is None:
        raise HypergraphParseError("missing 'n' header")
    try:
        return validate((e for _, e in edges), n, strict=strict)
    except HypergraphError as exc:
        raise HypergraphParseError(str(exc)) from None


def format_hypergraph(H: Hypergraph) -> str:
    lines = [f"n {H.n}"] + ["e " + " ".join(str(v + 1) for v in e) for e in H.edges]
    return "\n".join(lines) + "\n"


def _one_based(vs) -> list[int]:
    return [v + 1 for v in vs]


def _prime_str(P) -> str:
    return "(" + ", ".join(f"x{v + 1}" for v in P) + ")"


def _component_str(b) -> str:
    return "(" + ", ".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                           for i, e in enumerate(b) if e) + ")"


def _parse_prime(text: str) -> list[int]:
    try:
        return sorted({int(t) - 1 for t in text.replace(",", " ").split()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coverideals",
        description="Colorings, cover-ideal powers and associated primes of hypergraphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="hypergraph file ('-' for stdin)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--strict", action="store_true", help="reject nested edges")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    common.add_argument("--max-s", type=int, default=DEFAULT_MAX_S)

    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("chi", parents=[common], help="chromatic number")
    sp = sub.add_parser("chi-b", parents=[common], help="b-fold chromatic number")
    sp.add_argument("--b", type=int, required=True)
    sub.add_parser("covers", parents=[common], help="minimal vertex covers")
    sub.add_parser("cover-ideal", parents=[common])
    sub.add_parser("edge-ideal", parents=[common])
    for name in ("dual", "decompose", "ass-primes", "secant", "expand"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--s", type=int, required=True)
    sp = sub.add_parser("perfect", parents=[common])
    sp.add_argument("--method", choices=["brute", "algebraic", "both"], default="algebraic")
    sp = sub.add_parser("witness", parents=[common])
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--prime", type=_parse_prime, required=True,
                    help="1-based vertex list, e.g. 1,2,3")
    sp = sub.add_parser("persistence", parents=[common])
    sp.add_argument("--s-max", type=int, required=True)
    return p


def _certificate_json(c) -> dict:
    out = {"perfect": c.perfect, "method": c.method}
    if c.induced_set is not None:
        out["witness"] = {"induced_set": _one_based(c.induced_set), "chi": c.chi, "omega": c.omega}
    elif c.prime is not None:
        out["witness"] = {"s": c.power, "prime": _one_based(c.prime),
                          "associated": c.prime_is_associated}
    return out


def _certificate_text(c) -> str:
    if c.perfect:
        return "perfect"
    if c.induced_set is not None:
        return (f"imperfect: induced subgraph on {_one_based(c.induced_set)} "
                f"has chi={c.chi}, omega={c.omega}")
    what = "is associated but is not a clique" if c.prime_is_associated \
        else "is a clique but is not associated"
    return f"imperfect: at s={c.power}, {_prime_str(c.prime)} {what}"


def run(args: argparse.Namespace, H: Hypergraph, out) -> int:
    budget = {"max_n": args.max_n, "max_s": args.max_s}
    cmd = args.command
    result: dict = {"n": H.n}
    lines: list[str] = []

    if cmd == "chi":
        chi = chi_algebraic(H) if H.edges else chromatic_number(H)
        result["chi"] = chi
        lines.append(str(chi))
    elif cmd == "chi-b":
        chi_b = chi_b_algebraic(H, args.b)
        result.update(b=args.b, chi_b=chi_b)
        lines.append(str(chi_b))
    elif cmd == "covers":
        covers = minimal_vertex_covers(H)
        result["covers"] = [_one_based(W) for W in covers]
        lines += [" ".join(map(str, _one_based(W))) for W in covers]
    elif cmd in ("cover-ideal", "edge-ideal"):
        ideal = cover_ideal(H) if cmd == "cover-ideal" else edge_ideal(H)
        result["generators"] = [list(g) for g in ideal.gens]
        lines += [format_monomial(g) for g in ideal.gens]
    elif cmd in ("dual", "decompose", "ass-primes"):
        report = dual_of_power(H, args.s, **budget)
        result["s"] = args.s
        if cmd == "dual":
            result["generators"] = [list(g) for g in report.dual_generators]
            lines += [format_monomial(g) for g in report.dual_generators]
        elif cmd == "decompose":
            result["components"] = [list(b) for b in report.components]
            lines += [_component_str(b) for b in report.components]
        else:
            result["primes"] = [_one_based(P) for P in report.primes]
            lines += [_prime_str(P) for P in report.primes]
    elif cmd == "secant":
        gens = secant_generators(H, args.s)
        result.update(s=args.s, generators=[list(g) for g in gens])
        lines += [format_monomial(g) for g in gens]
    elif cmd == "expand":
        X = expansion(H, args.s)
        result.update(s=args.s, vertices=[[v.base + 1, v.shadow + 1] for v in X.vertices],
                      edges=[[[X.vertex(i).base + 1, X.vertex(i).shadow + 1] for i in e]
                             for e in X.edges])
        lines.append(f"n {X.graph.n}  # vertex x_i_j is numbered (i-1)*{args.s}+j")
        lines += ["e " + " ".join(str(i + 1) for i in e) for e in X.edges]
    elif cmd == "witness":
        P = args.prime
        if any(not 0 <= v < H.n for v in P):
            raise HypergraphParseError(f"--prime has a vertex outside 1..{H.n}")
        T = expansion_witness(H, args.s, P)
        result.update(s=args.s, prime=_one_based(P),
                      witness=None if T is None else [[v.base + 1, v.shadow + 1] for v in T])
        if T is None:
            lines.append(f"{_prime_str(P)} is not associated to J^{args.s}")
        else:
            lines.append(" ".join(f"x{v.base + 1},{v.shadow + 1}" for v in T))
    elif cmd == "persistence":
        steps = persistence_scan(H, args.s_max, **budget)
        union, index = stabilization_union(H, args.s_max, **budget)
        result.update(s_max=args.s_max,
                      steps=[{"s": s, "persists": ok} for s, ok in steps],
                      union_up_to_s_max=[_one_based(P) for P in union],
                      union_reached_at=index)
        lines += [f"Ass(J^{s}) in Ass(J^{s + 1}): {'yes' if ok else 'no'}" for s, ok in steps]
        lines.append(f"union up to s_max={args.s_max}: {len(union)} primes, "
                     f"first reached at s={index}")
    elif cmd == "perfect":
        if not is_graph(H):
            raise HypergraphParseError("perfection is only defined for graphs")
        certs = []
        if args.method in ("brute", "both"):
            certs.append(is_perfect_bruteforce(H))
        if args.method in ("algebraic", "both"):
            certs.append(is_perfect_algebraic(H, **budget))
        result["perfect"] = certs[0].perfect
        result["certificates"] = [_certificate_json(c) for c in certs]
        lines += [f"{c.method}: {_certificate_text(c)}" for c in certs]
        if len({c.perfect for c in certs}) > 1:
            result["disagreement"] = True
            _emit(args, result, ["DISAGREEMENT"] + lines, out)
            return EXIT_DISAGREE
        lines.insert(0, "perfect" if certs[0].perfect else "imperfect")

    _emit(args, result, lines, out)
    return EXIT_OK


def _emit(args, result, lines, out) -> None:
    if args.json:
        out.write(json.dumps(result, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + ("\n" if lines else ""))


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="ascii") as fh:
                text = fh.read()
        H = parse_hypergraph(text, strict=args.strict)
    except (OSError, UnicodeDecodeError, HypergraphParseError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    if H.isolated_vertices():
        err.write("warning: isolated vertices "
                  f"{_one_based(H.isolated_vertices())} never appear in covers\n")
    try:
        return run(args, H, out)
    except BudgetExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (HypergraphParseError, HypergraphError, ColoringError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
