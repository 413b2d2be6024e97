"""Command-line front end.

    thetafloer curve -d 3 --mults 1,1,1,1,1 --local
    thetafloer ramification -d 5 --rotations 4,4,4,2
    thetafloer spectrum -d 5 --eigens 1:2,2:-1
    thetafloer spectrum --pairs 1/2:3
    thetafloer hyperelliptic --genus 3 [--classes]
    thetafloer torusknot 2 3
    thetafloer selftest

Exit codes: 0 success, 2 input error, 3 internal mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import FloerError, InputError
from .pipeline import MODES, JobSpec, Report, run


def _ints(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in s.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _eigens(s: str) -> tuple[tuple[int, int], ...]:
    try:
        return tuple((int(a), int(b)) for a, b in (p.split(":") for p in s.replace(" ", "").split(",") if p))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected j:n pairs, got {s!r}")


def _pairs(s: str) -> tuple[tuple[Fraction, int], ...]:
    try:
        return tuple((Fraction(a), int(b)) for a, b in (p.split(":") for p in s.replace(" ", "").split(",") if p))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected r:m pairs, got {s!r}")


def _fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--local", dest="which", action="store_const", const="local",
                        help="report only the local-system homology")
    common.add_argument("--plain", dest="which", action="store_const", const="plain",
                        help="report only the untwisted homology")
    common.add_argument("--weight", type=_fraction, default=Fraction(2),
                        help="holonomy weight of the generic local system (default 2)")
    common.add_argument("--truncation", type=int, default=None, help="tower truncation N")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--check", action="store_true",
                        help="also verify invariance under truncation and weight changes")

    ap = argparse.ArgumentParser(prog="thetafloer", description=__doc__.split("\n")[0])
    ap.add_argument("--config", help="key=value file; '---' lines separate batch jobs")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes for batch configs")
    sub = ap.add_subparsers(dest="mode")

    p = sub.add_parser("curve", parents=[common], help="Z_d-curve y^d = f(x) from root multiplicities")
    p.add_argument("-d", "--order", type=int, required=True)
    p.add_argument("--mults", type=_ints, required=True)

    p = sub.add_parser("ramification", parents=[common], help="fixed-point rotation exponents")
    p.add_argument("-d", "--order", type=int, required=True)
    p.add_argument("--rotations", type=_ints, required=True)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues given directly")
    p.add_argument("-d", "--order", type=int)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--eigens", type=_eigens, help="j:n pairs, n<0 for the conjugate eigenvalue")
    g.add_argument("--pairs", type=_pairs, help="r:m pairs for eigenvalue exp(i pi r)")

    p = sub.add_parser("hyperelliptic", parents=[common], help="theta characteristics of a hyperelliptic curve")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--classes", action="store_true", help="one row per theta characteristic")

    p = sub.add_parser("torusknot", parents=[common], help="Alexander polynomial and torsion sum")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    return ap


def job_from_args(a: argparse.Namespace) -> JobSpec:
    which = getattr(a, "which", None)
    return JobSpec(
        mode=a.mode,
        order=getattr(a, "order", None),
        mults=getattr(a, "mults", None) or (),
        rotations=getattr(a, "rotations", None) or (),
        eigens=getattr(a, "eigens", None) or (),
        pairs=getattr(a, "pairs", None) or (),
        genus=getattr(a, "genus", None),
        classes=getattr(a, "classes", False),
        p=getattr(a, "p", None),
        q=getattr(a, "q", None),
        local=which != "plain",
        plain=which != "local",
        weight=a.weight,
        truncation=a.truncation,
        extra_checks=a.check,
    )


def read_config(path: str) -> list[list[str]]:
    """Turn a key=value file into argv lists, one per job."""
    jobs, cur = [], {}
    with open(path) as fh:
        lines = fh.read().splitlines() + ["---"]
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line == "---":
            if cur:
                jobs.append(cur)
            cur = {}
            continue
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"config line without '=': {line!r}")
        key, val = (x.strip() for x in line.split("=", 1))
        cur[key.replace("_", "-")] = val
    argvs = []
    for cfg in jobs:
        mode = cfg.pop("mode", None)
        if mode not in MODES:
            raise InputError(f"config job needs mode= one of {MODES}")
        argv = [mode]
        for pos in ("p", "q"):
            if pos in cfg:
                argv.append(cfg.pop(pos))
        for key, val in cfg.items():
            if val.lower() in ("true", "yes", "on"):
                argv.append(f"--{key}")
            elif val.lower() not in ("false", "no", "off"):
                argv += [f"--{key}", val]
        argvs.append(argv)
    return argvs


def format_text(rep: Report) -> str:
    out = [f"mode: {rep.mode}", f"input: {json.dumps(rep.input)}"]
    for k, v in rep.derived.items():
        out.append(f"{k}: {json.dumps(v)}")
    if rep.closed_form:
        out.append("closed form: " + ", ".join(f"{k}={v}" for k, v in rep.closed_form.items()))
    for kind, dec in rep.homology.items():
        out.append(f"homology[{kind}]: {json.dumps(dec)}")
    for w in rep.warnings:
        out.append(f"warning: {w}")
    for k, v in rep.checks.items():
        out.append(f"check {k}: {'pass' if v else 'FAIL'}")
    return "\n".join(out)


def _run_argv(argv: list[str]) -> tuple[int, str, str]:
    """Run one job; returns (exit code, stdout text, stderr text)."""
    ap = build_parser()
    a = ap.parse_args(argv)
    if a.mode is None:
        return 2, "", ap.format_usage()
    try:
        rep = run(job_from_args(a))
    except FloerError as exc:
        err = {"error": exc.code, "message": str(exc)}
        return exc.exit_code, "", json.dumps(err)
    body = rep.to_json() if a.format == "json" else format_text(rep)
    return (0 if rep.passed else 3), body, ""


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    pre.add_argument("--jobs", type=int, default=1)
    known, rest = pre.parse_known_args(argv)
    if known.config:
        try:
            base = read_config(known.config)
        except (OSError, InputError) as exc:
            print(json.dumps({"error": "input_error", "message": str(exc)}), file=sys.stderr)
            return 2
        jobs = [cfg + rest for cfg in base]
    else:
        jobs = [rest]
    if known.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(known.jobs) as pool:
            results = list(pool.map(_run_argv, jobs))
    else:
        results = [_run_argv(j) for j in jobs]
    code = 0
    for rc, out, err in results:
        if out:
            print(out)
        if err:
            print(err, file=sys.stderr)
        code = max(code, rc)
    return code


if __name__ == "__main__":
    sys.exit(main())
