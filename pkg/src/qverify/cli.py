"""Command-line driver: ``qverify verify | list | cyclotomic``.

Exit codes: 0 when every case passes, 1 when any case fails or errors,
2 for usage or configuration errors.  Reports are JSON documents whose
bytes depend only on the configuration, never on scheduling; timings are
left out unless --timings is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .congruences import (
    CONGRUENCES,
    PRIMES,
    CongruenceCase,
    PrimeCase,
    odd_primes,
    prime_params,
    prime_sweep,
    verify_congruence,
    verify_prime_congruence,
)
from .errors import QVerifyError
from .identities import REGISTRY, IdentityCase, sample_case, verify_identity
from .oracles import ORACLES, oracle_params, run_oracle
from .qpoly import cyclotomic, render_poly
from .report import ERROR, FAIL, PASS, CheckReport

THREADS_ENV = "QVERIFY_THREADS"
SUITES = ("identities", "congruences", "primes", "oracles")
PRIME_LIMIT = 97
DEFAULT_TRIALS = 10


class UsageError(Exception):
    pass


def suite_of(ident: str) -> str:
    if ident in REGISTRY:
        return "identities"
    if ident in CONGRUENCES:
        return "congruences"
    if ident in PRIMES:
        return "primes"
    if ident in ORACLES:
        return "oracles"
    raise UsageError(f"unknown id {ident!r}; see 'qverify list'")


def _ids(suite: str) -> list:
    return list({"identities": REGISTRY, "congruences": CONGRUENCES, "primes": PRIMES, "oracles": ORACLES}[suite])


# -- job construction ----------------------------------------------------------------


def _n_values(args, default: list) -> list:
    if args.n is not None:
        return [args.n]
    if args.n_list:
        return list(args.n_list)
    if args.n_max is not None:
        return [n for n in default if n <= args.n_max]
    return default


def _identity_jobs(ident: str, args) -> list:
    spec = REGISTRY[ident]
    default = spec.n_values()
    jobs = []
    for n in _n_values(args, default):
        if "m" in spec.extras:
            lo, hi = spec.extras["m"]
            ms = [args.m] if args.m is not None else list(range(lo, hi + 1))
            extras = [{"m": m} for m in ms]
        else:
            extras = [{}]
        for extra in extras:
            for trial in range(args.trials):
                jobs.append(("identity", ident, n, extra, args.seed, trial, None))
    return jobs


def _congruence_jobs(ident: str, args) -> list:
    spec = CONGRUENCES[ident]
    jobs = []
    for n in _n_values(args, spec.n_values()):
        if spec.param is None:
            values = [None]
        else:
            given = getattr(args, spec.param)
            values = [given] if given is not None else (spec.param_values(n) if n >= 3 and n % 2 else [0 if spec.param == "d" else 1])
        for v in values:
            params = {} if spec.param is None else {spec.param: v}
            jobs.append(("congruence", ident, n, params, args.r))
    return jobs


def _prime_jobs(ident: str, args) -> list:
    spec = PRIMES[ident]
    primes = [args.p] if args.p is not None else odd_primes(PRIME_LIMIT)
    rs = [args.r] if args.r is not None else list(spec.rs)
    jobs = []
    for p in primes:
        for r in rs:
            given = getattr(args, spec.param) if spec.param else None
            if given is not None:
                jobs.append(("prime", ident, p, r, given))
            else:
                jobs.append(("prime_sweep", ident, p, r))
    return jobs


def _oracle_jobs(ident: str, args) -> list:
    return [("oracle", ident, n, args.seed) for n in _n_values(args, oracle_params(ident))]


_BUILDERS = {
    "identities": _identity_jobs,
    "congruences": _congruence_jobs,
    "primes": _prime_jobs,
    "oracles": _oracle_jobs,
}


def build_jobs(args) -> list:
    if args.id:
        idents = [(suite_of(args.id), args.id)]
    else:
        suites = SUITES if args.suite == "all" else (args.suite,)
        idents = [(s, i) for s in suites for i in _ids(s)]
    jobs = []
    for suite, ident in idents:
        jobs.extend(_BUILDERS[suite](ident, args))
    return jobs


def _corpus_jobs(path: str, args) -> list:
    try:
        with open(path, encoding="utf-8") as fh:
            records = json.load(fh)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read corpus {path}: {exc}") from None
    if not isinstance(records, list):
        raise UsageError("corpus must be a JSON array of case records")
    jobs = []
    for rec in records:
        if not isinstance(rec, dict) or "id" not in rec:
            raise UsageError(f"corpus record without id: {rec!r}")
        ident = rec["id"]
        suite = suite_of(ident)
        params = dict(rec.get("params", {}))
        seed = rec.get("seed", args.seed)
        n = rec.get("n")
        if suite == "identities":
            extra = {k: v for k, v in params.items() if k in REGISTRY[ident].extras}
            jobs.append(("identity", ident, n, extra, seed, rec.get("trial", 0), rec.get("sample")))
        elif suite == "congruences":
            r = params.pop("r", None)
            jobs.append(("congruence", ident, n, params, r))
        elif suite == "primes":
            p = params.pop("p", n)
            r = params.pop("r", 1)
            value = next(iter(params.values()), None)
            jobs.append(("prime", ident, p, r, value))
        else:
            jobs.append(("oracle", ident, n, seed))
    return jobs


# -- execution -----------------------------------------------------------------------


def _error(ident: str, params: dict, exc: Exception) -> CheckReport:
    return CheckReport(ident, params, ERROR, f"{type(exc).__name__}: {exc}")


def run_job(job) -> list:
    """Run one job; returns report dicts with timings attached."""
    kind, ident = job[0], job[1]
    try:
        if kind == "identity":
            _, _, n, extra, seed, trial, sample = job
            params = {"n": n, **extra, "trial": trial}
            try:
                if sample is not None:
                    case = sample_case(ident, n, extra, seed, trial, fixed=sample)
                else:
                    case = sample_case(ident, n, extra, seed, trial)
                rep = verify_identity(case)
                rep.params["trial"] = trial
                reports = [rep]
            except (QVerifyError, TypeError, ValueError) as exc:
                reports = [_error(ident, params, exc)]
        elif kind == "congruence":
            _, _, n, params, r = job
            shown = {"n": n, **params, **({"r": r} if r is not None else {})}
            try:
                reports = [verify_congruence(CongruenceCase(ident, n, params, r))]
            except (QVerifyError, ArithmeticError, ValueError) as exc:
                reports = [_error(ident, shown, exc)]
        elif kind == "prime":
            _, _, p, r, value = job
            try:
                reports = [verify_prime_congruence(PrimeCase(ident, p, r, value))]
            except (QVerifyError, ArithmeticError, ValueError) as exc:
                shown = {"p": p, "r": r, **({PRIMES[ident].param: value} if PRIMES[ident].param else {})}
                reports = [_error(ident, shown, exc)]
        elif kind == "prime_sweep":
            _, _, p, r = job
            reports = prime_sweep(ident, p, r)
        elif kind == "oracle":
            _, _, n, seed = job
            try:
                reports = [run_oracle(ident, n, seed)]
            except (QVerifyError, ArithmeticError, ValueError) as exc:
                reports = [_error(ident, {"n": n}, exc)]
        else:
            raise ValueError(f"unknown job kind {kind}")
    except Exception as exc:  # a crash in one case must not sink the run
        reports = [_error(ident, {"job": list(map(str, job[2:]))}, exc)]
    return [(r.to_dict(timings=False), r.elapsed_micros) for r in reports]


def run_jobs(jobs: list, threads: int, fail_fast: bool):
    """Results in job order; with fail_fast, stop after the first non-pass job."""
    if threads <= 1:
        for job in jobs:
            res = run_job(job)
            yield res
            if fail_fast and any(d["status"] != PASS for d, _ in res):
                return
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for res in pool.map(run_job, jobs, chunksize=max(1, min(32, len(jobs) // (threads * 8) or 1))):
            yield res
            if fail_fast and any(d["status"] != PASS for d, _ in res):
                pool.shutdown(wait=False, cancel_futures=True)
                return


def _config_echo(args) -> dict:
    out = {
        "suite": args.suite,
        "id": args.id,
        "n": args.n,
        "nMax": args.n_max,
        "nList": list(args.n_list) if args.n_list else None,
        "m": args.m,
        "d": args.d,
        "p": args.p,
        "r": args.r,
        "trials": args.trials,
        "seed": args.seed,
        "failFast": args.fail_fast,
        "corpus": os.path.basename(args.corpus) if args.corpus else None,
    }
    return {k: v for k, v in out.items() if v is not None}


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    # the environment variable overrides the flag
    threads = args.threads if args.threads is not None else 1
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            threads = int(env)
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    if threads < 1:
        raise UsageError("--threads must be >= 1")
    jobs = _corpus_jobs(args.corpus, args) if args.corpus else build_jobs(args)
    t0 = time.perf_counter()
    cases = []
    for res in run_jobs(jobs, threads, args.fail_fast):
        for d, micros in res:
            if args.timings:
                d["elapsedMicros"] = micros
            cases.append(d)
    summary = {s: sum(1 for c in cases if c["status"] == s) for s in (PASS, FAIL, ERROR)}
    if args.timings:
        summary["wallMillis"] = int((time.perf_counter() - t0) * 1000)
    report = {"version": __version__, "config": _config_echo(args), "cases": cases, "summary": summary}
    text = json.dumps(report, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if args.json:
        sys.stdout.write(text)
    else:
        for c in cases:
            if c["status"] != PASS:
                params = ", ".join(f"{k}={v}" for k, v in c["params"].items())
                print(f"{c['status'].upper():5} {c['id']} ({params}) {c.get('detail', '')}".rstrip())
        print(f"{summary[PASS]} pass, {summary[FAIL]} fail, {summary[ERROR]} error")
    return 0 if summary[FAIL] == 0 and summary[ERROR] == 0 else 1


def _list_rows(suite: str | None, ident: str | None) -> list:
    rows = []
    for name, spec in REGISTRY.items():
        lo, hi = spec.n_range
        rng = f"n in [{lo},{hi}]" + (" odd" if spec.odd_only else "")
        rows.append(("identities", name, spec.anchor, spec.schema(), rng))
    for name, spec in CONGRUENCES.items():
        lo, hi = spec.n_range
        rows.append(("congruences", name, f"{spec.anchor} (mod Phi_n^{spec.r})", spec.schema(), f"n odd in [{lo},{hi}]"))
    for name, spec in PRIMES.items():
        rs = ",".join(map(str, spec.rs))
        rows.append(("primes", name, spec.anchor, spec.schema(), f"p <= {PRIME_LIMIT}, r in {{{rs}}}"))
    for name, (desc, values, _) in ORACLES.items():
        vs = values()
        rows.append(("oracles", name, desc, "n", f"n in [{vs[0]},{vs[-1]}]"))
    if suite and suite != "all":
        rows = [r for r in rows if r[0] == suite]
    if ident:
        rows = [r for r in rows if r[1] == ident]
    return rows


def cmd_list(args) -> int:
    if args.id:
        suite_of(args.id)
    rows = _list_rows(args.suite, args.id)
    if args.json:
        keys = ("suite", "id", "anchor", "params", "range")
        sys.stdout.write(json.dumps([dict(zip(keys, r)) for r in rows], indent=2) + "\n")
        return 0
    widths = [max(len(r[i]) for r in rows) for i in range(5)] if rows else [0] * 5
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return 0


def cmd_cyclotomic(args) -> int:
    if args.n < 1:
        raise UsageError(f"cyclotomic index must be >= 1, got {args.n}")
    print(render_poly(cyclotomic(args.n)))
    return 0


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qverify", description="Exact verification of Carlitz-type q-identities and q-congruences.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run suites, single ids or a corpus file")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--id")
    g = v.add_mutually_exclusive_group()
    g.add_argument("--n", type=int)
    g.add_argument("--n-max", type=int)
    g.add_argument("--n-list", type=_int_list)
    v.add_argument("--m", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--p", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--threads", type=int, help=f"worker processes (default 1; ${THREADS_ENV} overrides)")
    v.add_argument("--out", help="write the JSON report here")
    v.add_argument("--fail-fast", action="store_true")
    v.add_argument("--json", action="store_true", help="print the JSON report on stdout")
    v.add_argument("--corpus", help="JSON array of case records to run instead of suites")
    v.add_argument("--timings", action="store_true", help="include timings (reports are then not reproducible)")
    v.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list", help="show registry ids")
    ls.add_argument("--suite", choices=SUITES + ("all",))
    ls.add_argument("--id")
    ls.add_argument("--json", action="store_true")
    ls.set_defaults(func=cmd_list)

    c = sub.add_parser("cyclotomic", help="print Phi_n(q)")
    c.add_argument("n", type=int)
    c.set_defaults(func=cmd_cyclotomic)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qverify: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
