"""Command-line front end: read posets, run expansions, cross-verify.

Exit codes: 0 success/PASS, 1 verification FAIL, 2 input error,
3 size guard exceeded.  The guard defaults to 10 elements and can be
overridden with --max-n or the QMN_MAX_N environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import identities, mn, qsym, rewrites, schur, surjections
from .compositions import format_composition, parse_composition
from .posets import PosetError, load_poset, random_poset
from .qsym import QsymExpr, equals, psi_to_monomial
from .surjections import PosetTooLarge

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _max_n(args) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get("QMN_MAX_N")
    return int(env) if env else surjections.DEFAULT_MAX_N


def _print_expr(expr: QsymExpr, as_json: bool):
    if as_json:
        print(json.dumps(expr.to_json_dict()))
    else:
        for alpha, coeff in expr.items():
            print(f"{format_composition(alpha)}\t{coeff.numerator}/{coeff.denominator}")


def _expand_in_basis(poset, basis, max_n) -> QsymExpr:
    expr = mn.mn_expansion(poset, max_n=max_n)
    if basis == "PsiHat":
        return expr
    if basis == "Psi":
        return qsym.psihat_to_psi(expr)
    return psi_to_monomial(expr)


def cmd_expand(args) -> int:
    poset = load_poset(args.poset)
    _print_expr(_expand_in_basis(poset, args.basis, _max_n(args)), args.json)
    return EXIT_OK


def cmd_oracle(args) -> int:
    poset = load_poset(args.poset)
    _print_expr(surjections.monomial_expansion(poset, max_n=_max_n(args)), args.json)
    return EXIT_OK


def _verify_poset(poset, max_n, corrupt=False):
    """Compare the two pipelines; returns (ok, first difference or None)."""
    via_mn = psi_to_monomial(mn.mn_expansion(poset, max_n=max_n))
    oracle = surjections.monomial_expansion(poset, max_n=max_n)
    if corrupt:
        bumped = dict(via_mn.terms)
        alpha = next(iter(sorted(bumped)), (1,))
        bumped[alpha] = bumped.get(alpha, Fraction(0)) + 1
        via_mn = QsymExpr("M", bumped)
    if equals(via_mn, oracle):
        return True, None
    for alpha in sorted(set(via_mn.terms) | set(oracle.terms)):
        a = via_mn.coefficient(alpha)
        b = oracle.coefficient(alpha)
        if a != b:
            return False, (alpha, a, b)
    return False, None


def cmd_verify(args) -> int:
    poset = load_poset(args.poset)
    ok, diff = _verify_poset(poset, _max_n(args), corrupt=args.selftest_corrupt)
    if ok:
        print("PASS")
        return EXIT_OK
    alpha, a, b = diff
    print(f"FAIL: coefficient of M_{format_composition(alpha)} differs: rule {a} vs oracle {b}")
    return EXIT_FAIL


def cmd_schur(args) -> int:
    table = schur.character_table(args.n)
    payload = {
        "n": args.n,
        "table": [
            {"lambda": format_composition(lam), "mu": format_composition(mu), "chi": value}
            for lam, mu, value in table
        ],
    }
    if args.json:
        print(json.dumps(payload))
    else:
        for row in payload["table"]:
            print(f"{row['lambda']}\t{row['mu']}\t{row['chi']}")
    return EXIT_OK


def cmd_chi(args) -> int:
    lam = parse_composition(args.lam)
    mu = parse_composition(args.mu)
    print(schur.chi(lam, mu))
    return EXIT_OK


def cmd_identities(args) -> int:
    d = parse_composition(args.d)
    total = identities.probabilistic_sum(d)
    q_ok = identities.q_probabilistic_sum(d) == identities.ONE
    lhs, rhs = identities.linext_identity_check(d)
    report = {
        "d": format_composition(d),
        "sum": f"{total.numerator}/{total.denominator}",
        "q_identity": q_ok,
        "linext_lhs": str(lhs),
        "linext_rhs": str(rhs),
    }
    if args.samples:
        freqs = identities.staircase_monte_carlo(d, args.samples, args.seed)
        report["monte_carlo"] = {
            format_composition(beta): f"{f.numerator}/{f.denominator}"
            for beta, f in sorted(freqs.items())
        }
    if args.json:
        print(json.dumps(report))
    else:
        for key, value in report.items():
            print(f"{key}\t{value}")
    ok = total == 1 and q_ok and lhs == rhs
    return EXIT_OK if ok else EXIT_FAIL


def cmd_random_check(args) -> int:
    max_n = _max_n(args)
    if args.n_max > max_n:
        raise PosetTooLarge(f"--n-max {args.n_max} exceeds guard {max_n}")
    main_ok = edge_ok = split_ok = 0
    for i in range(args.count):
        n = 1 + (i % args.n_max)
        poset = random_poset(n, Fraction(1, 2), seed=args.seed * 10**6 + i)
        ok, _ = _verify_poset(poset, max_n)
        main_ok += ok
        edge_ok += _check_add_edge(poset, max_n)
        split_ok += _check_split(poset, max_n)
    print(
        f"{main_ok}/{args.count} main, {edge_ok}/{args.count} addEdge, "
        f"{split_ok}/{args.count} splitWeight"
    )
    failures = 3 * args.count - main_ok - edge_ok - split_ok
    return EXIT_OK if failures == 0 else EXIT_FAIL


def _check_add_edge(poset, max_n) -> bool:
    pair = rewrites._first_incomparable_pair(poset)
    if pair is None:
        return True
    p1, p2 = rewrites.add_edge_pair(poset, *pair)
    lhs = surjections.monomial_expansion(poset, max_n=max_n)
    rhs = surjections.monomial_expansion(p1, max_n=max_n) + surjections.monomial_expansion(
        p2, max_n=max_n
    )
    if lhs != rhs:
        return False
    lhs_mn = mn.mn_expansion(poset, max_n=max_n)
    rhs_mn = mn.mn_expansion(p1, max_n=max_n) + mn.mn_expansion(p2, max_n=max_n)
    return lhs_mn == rhs_mn


def _check_split(poset, max_n) -> bool:
    vertex = next((x for x in range(poset.n) if poset.d[x] >= 2), None)
    if vertex is None or poset.n + 1 > max_n:
        return True
    p1, p2 = rewrites.split_weight(poset, vertex, 1, poset.d[vertex] - 1)
    lhs = surjections.monomial_expansion(poset, max_n=max_n)
    rhs = surjections.monomial_expansion(p1, max_n=max_n) - surjections.monomial_expansion(
        p2, max_n=max_n
    )
    if lhs != rhs:
        return False
    lhs_mn = mn.mn_expansion(poset, max_n=max_n)
    rhs_mn = mn.mn_expansion(p1, max_n=max_n) - mn.mn_expansion(p2, max_n=max_n)
    return lhs_mn == rhs_mn


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmn", description="Exact power sum expansions of weighted labeled posets."
    )
    parser.add_argument("--max-n", type=int, default=None, help="size guard override")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="power sum rule expansion of a poset file")
    p_expand.add_argument("--poset", required=True)
    p_expand.add_argument("--basis", choices=("M", "Psi", "PsiHat"), default="PsiHat")
    p_expand.add_argument("--json", action="store_true")
    p_expand.set_defaults(func=cmd_expand)

    p_oracle = sub.add_parser("oracle", help="brute-force monomial expansion")
    p_oracle.add_argument("--poset", required=True)
    p_oracle.add_argument("--json", action="store_true")
    p_oracle.set_defaults(func=cmd_oracle)

    p_verify = sub.add_parser("verify", help="compare rule against the brute-force oracle")
    p_verify.add_argument("--poset", required=True)
    p_verify.add_argument("--selftest-corrupt", action="store_true", help=argparse.SUPPRESS)
    p_verify.set_defaults(func=cmd_verify)

    p_schur = sub.add_parser("schur", help="character table for partitions of n")
    p_schur.add_argument("--n", type=int, required=True)
    p_schur.add_argument("--json", action="store_true")
    p_schur.set_defaults(func=cmd_schur)

    p_chi = sub.add_parser("chi", help="single character value")
    p_chi.add_argument("--lam", required=True, help="partition, e.g. 3,1")
    p_chi.add_argument("--mu", required=True, help="partition, e.g. 2,1,1")
    p_chi.set_defaults(func=cmd_chi)

    p_idents = sub.add_parser("identities", help="coarsening identity report for a composition")
    p_idents.add_argument("--d", required=True, help="composition, e.g. 1,2,2")
    p_idents.add_argument("--json", action="store_true")
    p_idents.add_argument("--samples", type=int, default=0)
    p_idents.add_argument("--seed", type=int, default=0)
    p_idents.set_defaults(func=cmd_identities)

    p_rand = sub.add_parser("random-check", help="batch property check on random posets")
    p_rand.add_argument("--count", type=int, required=True)
    p_rand.add_argument("--n-max", type=int, default=6)
    p_rand.add_argument("--seed", type=int, default=0)
    p_rand.set_defaults(func=cmd_random_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PosetTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (PosetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
