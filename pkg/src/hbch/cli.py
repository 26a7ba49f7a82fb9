"""Command-line front end.

Subcommands expose each pipeline stage with deterministic output: same
flags, same bytes.  Exit codes: 0 success, 1 internal invariant violation,
2 input validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cosets as cs
from . import hermitian as hm
from . import quantum as qt
from .errors import CodingError, NoSolution, NotCosetClosed

_INTERNAL = (NotCosetClosed, NoSolution)


def _parse_coset_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbch",
        description="BCH/homothetic-BCH codes, Hermitian self-orthogonality "
                    "bounds and quantum stabilizer parameters.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cosets", help="cyclotomic cosets of Z/NZ w.r.t. q^2")
    p.add_argument("--n", type=int, required=True, dest="n")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("bound", help="sharp self-orthogonality bound for BCH lengths")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("construct", help="build one stabilizer code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--lambda", type=int, default=1, dest="lam",
                   help="number of scaled root-of-unity copies (1 = plain BCH)")
    p.add_argument("--tau", type=int, default=None)
    p.add_argument("--cosets", type=_parse_coset_list, default=None,
                   help="explicit coset representatives, e.g. 1,2,3,5,6,7")
    p.add_argument("--zero", action="store_true", help="include the zero coset")
    p.add_argument("--lengthen", type=int, default=0)
    p.add_argument("--dump-generator", action="store_true")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("examples", help="run the bundled reproduction harness")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scan", help="scan a parameter grid for stabilizer codes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n1", type=int, action="append", default=None,
                   help="explicit length (repeatable); default: all case-form lengths")
    p.add_argument("--n1-max", type=int, default=0)
    p.add_argument("--lambdas", type=_parse_coset_list, default=None,
                   help="comma list of lambda values (1 = plain BCH route)")
    p.add_argument("--lambda-max", type=int, default=0)
    p.add_argument("--tau-max", type=int, required=True)
    p.add_argument("--zero", action="store_true", help="also try zero-coset variants")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    return parser


# ---------------------------------------------------------------------------
# subcommand bodies

def _cmd_cosets(args) -> int:
    system = cs.build_cosets(args.n, args.q)
    if args.format == "json":
        print(json.dumps({
            "N": system.modulus,
            "q": system.q,
            "multiplier": system.multiplier,
            "reps": list(system.reps),
            "cosets": [list(c) for c in system.cosets],
        }))
    elif args.format == "csv":
        print("rep,size,members")
        for rep, coset in zip(system.reps, system.cosets):
            print(f"{rep},{len(coset)},{' '.join(str(e) for e in coset)}")
    else:
        print(f"N={system.modulus} q={system.q} multiplier={system.multiplier} "
              f"cosets={len(system.cosets)}")
        for rep, coset in zip(system.reps, system.cosets):
            print(f"L[{rep}] = {{{', '.join(str(e) for e in coset)}}}")
    return 0


def _cmd_bound(args) -> int:
    row = hm.bound_report_row(args.q, args.s, args.n1)
    if args.format == "json":
        print(json.dumps(row))
    elif args.format == "csv":
        print("q,s,n1,cases,L_closed,L_brute,aly_bound,witness_x,witness_y,witness_k")
        wx = wy = wk = ""
        if row["witness"]:
            wx, wy, wk, _ = row["witness"]
        print(f"{row['q']},{row['s']},{row['n1']},{'/'.join(row['cases'])},"
              f"{row['L_closed'] if row['L_closed'] is not None else ''},"
              f"{row['L_brute'] if row['L_brute'] is not None else ''},"
              f"{row['aly_bound']},{wx},{wy},{wk}")
    else:
        print("q s n1 case L_closed L_brute aly_bound witness_x witness_y witness_k")
        print(hm.format_bound_row(row))
    return 0


def _construct_result(args) -> tuple[qt.PipelineResult, list[qt.QuantumParams]]:
    if args.lam == 1:
        result = qt.bch_pipeline(args.q, args.s, args.n1, tau=args.tau,
                                 coset_reps=args.cosets, include_zero=args.zero)
    else:
        result = qt.homothetic_pipeline(args.q, args.s, args.n1, args.lam,
                                        tau=args.tau, coset_reps=args.cosets,
                                        include_zero=args.zero)
    chain = []
    params = result.params
    for step in range(1, args.lengthen + 1):
        params = qt.lengthen(result.params, step)
        chain.append(params)
    return result, chain


def _cmd_construct(args) -> int:
    result, chain = _construct_result(args)
    if args.format == "json":
        out = {
            "params": result.params.to_dict(),
            "report": result.report,
            "lengthened": [p.to_dict() for p in chain],
        }
        if args.dump_generator:
            out["generator"] = result.code.to_text()
        print(json.dumps(out))
    elif args.format == "csv":
        print("q,n,k,d_designed,construction,s,n1,lambda,cosets,zero,lengthened")
        for p in [result.params] + chain:
            pv = p.provenance
            reps = " ".join(str(r) for r in pv.get("cosets", []))
            print(f"{p.q},{p.n},{p.k},{p.d_designed},{pv.get('construction')},"
                  f"{pv.get('s')},{pv.get('n1')},{pv.get('lambda')},{reps},"
                  f"{pv.get('include_zero')},{p.pure_chain}")
    else:
        print(result.params.param_string())
        print("record: " + result.params.record_line())
        rep = result.report
        detail = " ".join(f"{k}={rep[k]}" for k in
                          ("length", "rank", "coset_size_sum", "k_lower_bound",
                           "a_max", "L", "bound_source", "gram") if k in rep)
        print(detail)
        for p in chain:
            print(p.param_string())
        if args.dump_generator:
            print("generator:")
            sys.stdout.write(result.code.to_text())
    return 0


def reproduction_claims() -> list[dict]:
    """Re-derive the bundled reference constructions and check each claim."""
    specs = [
        ("binary length-186 base code", "[[186,126,>=9]]_2",
         dict(q=2, s=5, n1=93, lam=2, cosets=(1, 2, 3, 5, 6, 7)), 30, [1, 2, 3]),
        ("5-ary length-96 base code (seven cosets)", "[[96,68,>=8]]_5",
         dict(q=5, s=2, n1=48, lam=2, tau=7), 14, [1]),
        ("5-ary length-96 base code (six cosets)", "[[96,72,>=7]]_5",
         dict(q=5, s=2, n1=48, lam=2, tau=6), 12, [1, 2, 3]),
        ("8-ary length-91 BCH code", "[[91,55,>=11]]_8",
         dict(q=8, s=2, n1=91, lam=1, tau=9), 18, [1]),
    ]
    claims = []
    for name, expected, kw, want_rank, steps in specs:
        try:
            if kw["lam"] == 1:
                result = qt.bch_pipeline(kw["q"], kw["s"], kw["n1"],
                                         tau=kw.get("tau"),
                                         coset_reps=kw.get("cosets"))
            else:
                result = qt.homothetic_pipeline(kw["q"], kw["s"], kw["n1"], kw["lam"],
                                                tau=kw.get("tau"),
                                                coset_reps=kw.get("cosets"))
            got = result.params.param_string()
            ok = got == expected and result.report["rank"] == want_rank
            detail = f"got {got}, rank {result.report['rank']}"
            claims.append({"claim": name, "expected": expected, "ok": ok,
                           "detail": detail})
            for t in steps:
                lp = qt.lengthen(result.params, t)
                lexp = expected.replace(f"[[{result.params.n},",
                                        f"[[{result.params.n + t},")
                claims.append({
                    "claim": f"{name} lengthened by {t}",
                    "expected": lexp,
                    "ok": ok and lp.param_string() == lexp,
                    "detail": lp.param_string(),
                })
        except Exception as exc:  # report instead of aborting the harness
            claims.append({"claim": name, "expected": expected, "ok": False,
                           "detail": f"{type(exc).__name__}: {exc}"})
    return claims


def _cmd_examples(args) -> int:
    claims = reproduction_claims()
    if args.json:
        print(json.dumps(claims))
    else:
        for c in claims:
            status = "PASS" if c["ok"] else "FAIL"
            print(f"{status} {c['claim']}: expected {c['expected']} ({c['detail']})")
    return 0 if all(c["ok"] for c in claims) else 1


def _cmd_scan(args) -> int:
    lambdas = args.lambdas
    if lambdas is None:
        if args.lambda_max < 1:
            raise CodingError("give --lambdas or a positive --lambda-max")
        lambdas = tuple(range(1, args.lambda_max + 1))
    grid = qt.ScanGrid(
        pairs=((args.q, args.s),),
        n1_values=tuple(args.n1) if args.n1 else (),
        n1_max=args.n1_max or 5000,
        lambdas=tuple(lambdas),
        tau_max=args.tau_max,
        try_zero=args.zero,
        budget=args.budget,
        jobs=args.jobs,
    )
    results = qt.scan(grid)
    if args.format == "json":
        print(json.dumps([p.to_dict() for p in results]))
    elif args.format == "csv":
        print("q,n,k,d_designed,construction,s,n1,lambda,cosets,zero,lengthened")
        for p in results:
            pv = p.provenance
            reps = " ".join(str(r) for r in pv.get("cosets", []))
            print(f"{p.q},{p.n},{p.k},{p.d_designed},{pv.get('construction')},"
                  f"{pv.get('s')},{pv.get('n1')},{pv.get('lambda')},{reps},"
                  f"{pv.get('include_zero')},{p.pure_chain}")
    else:
        for p in results:
            print(p.record_line())
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "cosets": _cmd_cosets,
        "bound": _cmd_bound,
        "construct": _cmd_construct,
        "examples": _cmd_examples,
        "scan": _cmd_scan,
    }
    try:
        return handlers[args.command](args)
    except _INTERNAL as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except CodingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
