"""Command-line interface.

Subcommands: ``info`` (classification and corrections), ``zeta`` (the two
determinant expressions), ``series`` (closed-path sums and coefficients),
``primes`` (prime cycles and the Euler product check), ``verify`` (the full
identity battery, on a file or on seeded random digraphs) and
``symmetrize`` (undirected graph to symmetric digraph, in file format).

Exit codes: 0 success / all checks passed, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from random import Random

from .algebra import TruncatedSeries
from .digraph import canonical_inverse_pairing, classify_arcs, symmetrize
from .fileformat import (
    FileFormatError,
    ParsedDigraph,
    parse_digraph_text,
    parse_graph_text,
    parse_rational,
    render_digraph_file,
)
from .paths import (
    DEFAULT_ENUM_LIMIT,
    EnumerationLimitError,
    closed_path_sum_bruteforce,
    enumerate_prime_cycles,
    euler_product_series,
)
from .randomgen import random_instance
from .verify import DEFAULT_ORDER, run_verification
from .zeta import (
    PRESET_NAMES,
    arc_corrections,
    closed_path_sums,
    hashimoto_zeta,
    ihara_zeta,
    preset_weights,
)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--preset",
        choices=PRESET_NAMES,
        help="weight preset overriding the file weights",
    )
    parser.add_argument(
        "--q",
        metavar="RAT",
        help="parameter for the bartholdi preset (rational, e.g. 1/2)",
    )
    parser.add_argument(
        "--machine",
        action="store_true",
        help="emit key=value lines instead of human-readable text",
    )
    parser.add_argument(
        "--max-enum",
        type=int,
        default=DEFAULT_ENUM_LIMIT,
        metavar="N",
        help="work budget for brute-force enumerations",
    )
    parser.add_argument(
        "--order",
        type=int,
        default=DEFAULT_ORDER,
        metavar="N",
        help="truncation order for series output and checks",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphzeta",
        description="Exact weighted zeta functions of finite digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="classification, pairing and corrections")
    p_info.add_argument("file")
    _add_common_flags(p_info)

    p_zeta = sub.add_parser("zeta", help="determinant expressions of the zeta function")
    p_zeta.add_argument("file")
    p_zeta.add_argument(
        "--form",
        choices=("hashimoto", "ihara", "both"),
        default="both",
        help="which determinant expression to compute",
    )
    _add_common_flags(p_zeta)

    p_series = sub.add_parser("series", help="closed-path sums and zeta coefficients")
    p_series.add_argument("file")
    _add_common_flags(p_series)

    p_primes = sub.add_parser("primes", help="prime cycles and the Euler product check")
    p_primes.add_argument("file")
    p_primes.add_argument("--max-len", type=int, default=6, metavar="L")
    _add_common_flags(p_primes)

    p_verify = sub.add_parser("verify", help="run the full identity battery")
    p_verify.add_argument("file", nargs="?")
    p_verify.add_argument("--random", action="store_true", help="verify random digraphs")
    p_verify.add_argument("--trials", type=int, default=20, metavar="T")
    p_verify.add_argument("--seed", type=int, default=0, metavar="S")
    _add_common_flags(p_verify)

    p_sym = sub.add_parser("symmetrize", help="symmetric digraph of an undirected graph")
    p_sym.add_argument("file")
    _add_common_flags(p_sym)

    return parser


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(0, f"cannot read {path}: {exc.strerror}") from None


def _apply_preset(parsed: ParsedDigraph, args: argparse.Namespace):
    if not args.preset:
        return parsed.weights
    q: Fraction | None = None
    if args.q is not None:
        q = parse_rational(args.q)
    return preset_weights(parsed.digraph, args.preset, q=q, tau_map=parsed.weights.tau)


def _load(args: argparse.Namespace):
    parsed = parse_digraph_text(_read_file(args.file))
    pairing = canonical_inverse_pairing(parsed.digraph, parsed.user_pairs)
    weights = _apply_preset(parsed, args)
    return parsed, pairing, weights


def _pair_list(pairs) -> str:
    return ", ".join(f"({u},{v})" for u, v in pairs) if pairs else "-"


def _id_list(ids) -> str:
    return ", ".join(ids) if ids else "-"


def cmd_info(args: argparse.Namespace) -> int:
    parsed, pairing, weights = _load(args)
    dg = parsed.digraph
    cls = classify_arcs(dg, pairing)
    corrections = arc_corrections(dg, pairing, weights)
    connected = dg.is_connected()
    out: list[str] = []
    if args.machine:
        out.append(f"name={parsed.name}")
        out.append(f"vertices={dg.vertex_count}")
        out.append(f"arcs={len(dg.arcs)}")
        out.append(f"connected={'true' if connected else 'false'}")
        out.append("class.forward=" + ",".join(cls.forward))
        out.append("class.backward=" + ",".join(cls.backward))
        out.append("class.surplus=" + ",".join(cls.surplus))
        out.append("class.loops=" + ",".join(cls.loops))
        out.append("class.one_way=" + ",".join(cls.one_way))
        out.append("pairs.two_way=" + ";".join(f"{u},{v}" for u, v in cls.two_way_pairs))
        out.append("pairs.loops=" + ";".join(f"{u},{v}" for u, v in cls.loop_pairs))
        out.append("pairs.one_way=" + ";".join(f"{u},{v}" for u, v in cls.one_way_pairs))
        for arc in dg.arcs:
            partner = pairing.inverse_of(arc.id)
            out.append(f"inverse.{arc.id}={partner if partner is not None else '-'}")
        for arc in dg.arcs:
            out.append(f"correction.{arc.id}={corrections[arc.id]}")
    else:
        out.append(f"digraph {parsed.name}: {dg.vertex_count} vertices, {len(dg.arcs)} arcs")
        if not connected:
            out.append("warning: not connected")
        out.append("vertex pairs:")
        out.append(f"  two-way (paired):   {_pair_list(cls.two_way_pairs)}")
        out.append(f"  loops:              {_pair_list(cls.loop_pairs)}")
        out.append(f"  one-way:            {_pair_list(cls.one_way_pairs)}")
        out.append("arc classes:")
        out.append(f"  forward (has inverse):   {_id_list(cls.forward)}")
        out.append(f"  backward (is inverse):   {_id_list(cls.backward)}")
        out.append(f"  surplus (no inverse):    {_id_list(cls.surplus)}")
        out.append(f"  loops (self-inverse):    {_id_list(cls.loops)}")
        out.append(f"  one-way (no inverse):    {_id_list(cls.one_way)}")
        out.append("inverse pairs:")
        shown = False
        for arc in dg.arcs:
            partner = pairing.inverse_of(arc.id)
            if partner is not None and (partner == arc.id or dg.position(arc.id) < dg.position(partner)):
                out.append(f"  {arc.id} <-> {partner}")
                shown = True
        if not shown:
            out.append("  (none)")
        out.append("corrections:")
        for arc in dg.arcs:
            out.append(f"  c[{arc.id}] = {corrections[arc.id]}")
    print("\n".join(out))
    return 0


def cmd_zeta(args: argparse.Namespace) -> int:
    parsed, pairing, weights = _load(args)
    dg = parsed.digraph
    out: list[str] = []
    status = 0
    hashimoto = ihara = None
    if args.form in ("hashimoto", "both"):
        hashimoto = hashimoto_zeta(dg, pairing, weights)
    if args.form in ("ihara", "both"):
        ihara, factors = ihara_zeta(dg, pairing, weights)

    if args.machine:
        if hashimoto is not None:
            out.append(f"hashimoto.num={hashimoto.num}")
            out.append(f"hashimoto.den={hashimoto.den}")
        if ihara is not None:
            out.append(f"ihara.num={ihara.num}")
            out.append(f"ihara.den={ihara.den}")
            out.append(f"ihara.factor.block={factors[0]}")
            out.append(f"ihara.factor.vertex={factors[1]}")
        if args.form == "both":
            out.append(f"main_theorem={'ok' if hashimoto == ihara else 'FAIL'}")
    else:
        if args.form == "both":
            agree = hashimoto == ihara
            if agree:
                out.append(f"Z = {hashimoto}")
            else:
                out.append(f"Z (hashimoto) = {hashimoto}")
                out.append(f"Z (ihara) = {ihara}")
            out.append(f"block factor = {factors[0]}")
            out.append(f"vertex factor = {factors[1]}")
            out.append("MAIN THEOREM: OK" if agree else "MAIN THEOREM: FAIL")
            if not agree:
                status = 1
        elif args.form == "hashimoto":
            out.append(f"Z = {hashimoto}")
        else:
            out.append(f"Z = {ihara}")
            out.append(f"block factor = {factors[0]}")
            out.append(f"vertex factor = {factors[1]}")
    print("\n".join(out))
    return status


def cmd_series(args: argparse.Namespace) -> int:
    if args.order < 1:
        print("error: --order must be at least 1", file=sys.stderr)
        return 2
    parsed, pairing, weights = _load(args)
    dg = parsed.digraph
    sums = closed_path_sums(dg, pairing, weights, args.order)
    brute: list[str] = []
    for m in range(1, args.order + 1):
        try:
            brute.append(str(closed_path_sum_bruteforce(dg, pairing, weights, m, args.max_enum)))
        except EnumerationLimitError:
            brute.append("-")
    zeta = hashimoto_zeta(dg, pairing, weights)
    coefficients = TruncatedSeries.from_rational_function(zeta, args.order)
    out: list[str] = []
    if args.machine:
        out.append("sums.trace=" + ",".join(str(v) for v in sums))
        out.append("sums.enumerated=" + ",".join(brute))
        out.append("zeta.series=" + ",".join(str(c) for c in coefficients.coeffs))
    else:
        out.append(" m | sum (trace) | sum (enumerated)")
        for m in range(1, args.order + 1):
            out.append(f"{m:>2} | {str(sums[m - 1]):>11} | {brute[m - 1]}")
        out.append(f"Z coefficients: {coefficients}")
    print("\n".join(out))
    return 0


def cmd_primes(args: argparse.Namespace) -> int:
    if args.max_len < 1:
        print("error: --max-len must be at least 1", file=sys.stderr)
        return 2
    parsed, pairing, weights = _load(args)
    dg = parsed.digraph
    try:
        primes = enumerate_prime_cycles(dg, pairing, weights, args.max_len, args.max_enum)
        euler = euler_product_series(dg, pairing, weights, args.max_len, args.max_enum)
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    zeta = hashimoto_zeta(dg, pairing, weights)
    reference = TruncatedSeries.from_rational_function(zeta, args.max_len)
    verdict = euler == reference
    out: list[str] = []
    if args.machine:
        for i, p in enumerate(primes):
            out.append(
                f"prime.{i}=period:{p.period};circ:{p.circ};section:" + ",".join(p.representative.section)
            )
        out.append(f"euler.series=" + ",".join(str(c) for c in euler.coeffs))
        out.append(f"euler_vs_hashimoto={'ok' if verdict else 'FAIL'}")
    else:
        out.append(f"prime cycles with period <= {args.max_len}: {len(primes)}")
        for p in primes:
            section = " ".join(p.representative.section)
            out.append(f"  period {p.period}: {section}  circ = {p.circ}")
        out.append(
            f"EULER == HASHIMOTO up to t^{args.max_len}: " + ("OK" if verdict else "FAIL")
        )
    print("\n".join(out))
    return 0 if verdict else 1


def _print_checks(checks, machine: bool) -> bool:
    all_ok = True
    for check in checks:
        ok = check.passed
        all_ok = all_ok and ok
        if machine:
            line = f"check.{check.name.replace(' ', '_')}={'pass' if ok else 'fail'}"
            if check.detail:
                line += f";{check.detail}"
            print(line)
        else:
            suffix = f"  [{check.detail}]" if check.detail else ""
            print(f"{'PASS' if ok else 'FAIL'} {check.name}{suffix}")
    return all_ok


def cmd_verify(args: argparse.Namespace) -> int:
    if args.random:
        rng = Random(args.seed)
        failures = 0
        for trial in range(1, args.trials + 1):
            dg, pairing, weights = random_instance(rng, shuffle_pairing=True)
            checks = run_verification(
                dg, pairing, weights, order=args.order, max_candidates=args.max_enum
            )
            ok = all(c.passed for c in checks)
            if not ok:
                failures += 1
                print(f"trial {trial}: FAIL")
                _print_checks([c for c in checks if not c.passed], args.machine)
            elif args.machine:
                print(f"trial.{trial}=pass")
        passed = args.trials - failures
        print(f"{passed}/{args.trials} PASS")
        return 0 if failures == 0 else 1

    if not args.file:
        print("error: verify needs a file or --random", file=sys.stderr)
        return 2
    parsed, pairing, weights = _load(args)
    checks = run_verification(
        parsed.digraph, pairing, weights, order=args.order, max_candidates=args.max_enum
    )
    all_ok = _print_checks(checks, args.machine)
    if not args.machine:
        print("all checks passed" if all_ok else "some checks FAILED")
    return 0 if all_ok else 1


def cmd_symmetrize(args: argparse.Namespace) -> int:
    name, graph = parse_graph_text(_read_file(args.file))
    dg, pairing = symmetrize(graph)
    sys.stdout.write(render_digraph_file(name, dg, pairing))
    return 0


_HANDLERS = {
    "info": cmd_info,
    "zeta": cmd_zeta,
    "series": cmd_series,
    "primes": cmd_primes,
    "verify": cmd_verify,
    "symmetrize": cmd_symmetrize,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
