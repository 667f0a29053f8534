"""``orthodim`` command-line interface.

Exit codes: 0 success (a NO decision is still success), 2 usage or input
error, 3 a search or enumeration cap was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import EnumerationCapExceeded, field_from_name
from .certificates import (
    CertificateError,
    cochordal_no_certificate,
    split_no_certificate,
    split_no_certificate_anisotropic,
    verify_certificate,
)
from .graph import Family
from .io import Instance, InstanceFormatError, gen_random, read_instance, serialize_instance, write_instance
from .kernels import run_kernel
from .reductions import col_to_od_path, col_to_od_vc
from .solver import SearchBudgetExceeded, SubChooseInstance, decide_od, fpt_decide_vc

EXIT_OK, EXIT_USAGE, EXIT_CAP = 0, 2, 3


class UsageError(Exception):
    pass


def _field(args, inst: Instance | None = None):
    if args.field:
        return field_from_name(args.field)
    if inst is not None and inst.field is not None:
        return inst.field
    raise UsageError("no field given (use --field or an 'f' line)")


def _d(args, inst: Instance | None = None) -> int:
    if args.d is not None:
        return args.d
    if inst is not None and inst.d is not None:
        return inst.d
    raise UsageError("no dimension given (use --d or a 'd' line)")


def _modulator(inst: Instance) -> list[int]:
    if inst.modulator is None:
        raise UsageError("instance has no modulator ('x' lines)")
    return inst.modulator


def _emit(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _rep_json(rep) -> str:
    return json.dumps(
        {"field": rep.field.name, "d": rep.d, "vectors": {str(v): [str(a) for a in rep[v]] for v in sorted(rep.vectors)}},
        sort_keys=True,
    )


# --------------------------------------------------------------------------
# subcommands


def cmd_decide(args) -> int:
    inst = read_instance(args.instance)
    f, d = _field(args, inst), _d(args, inst)
    if args.fpt:
        yes, rep = fpt_decide_vc(inst.graph, _modulator(inst), d, f, args.budget), None
    else:
        yes, rep = decide_od(inst.graph, d, f, args.budget)
    print("YES" if yes else "NO")
    if rep is not None:
        if args.witness:
            _emit(args.witness, _rep_json(rep) + "\n")
        else:
            print(_rep_json(rep))
    return EXIT_OK


def cmd_kernelize(args) -> int:
    inst = read_instance(args.instance)
    d = _d(args, inst)
    kw = {}
    if args.alg == "hereditary":
        kw = {"family": args.family, "g_of_d": args.g_of_d}
    ker = run_kernel(inst.graph, _modulator(inst), d, args.alg, **kw)
    if args.output:
        write_instance(args.output, Instance(ker.graph, ker.modulator, None, d, inst.field, [f"{args.alg} kernel"]))
    report = ker.report.to_dict()
    print(json.dumps(report, sort_keys=True))
    if args.k_check and not report["within_bound"]:
        print("kernel exceeds its size bound", file=sys.stderr)
        return 1
    return EXIT_OK


def cmd_reduce(args) -> int:
    inst = read_instance(args.instance)
    x = _modulator(inst)
    if args.variant == "path":
        out = col_to_od_path(inst.graph, x)
    else:
        out = col_to_od_vc(inst.graph, x, _d(args, inst))
    if args.output:
        write_instance(args.output, Instance(out.graph, out.modulator, None, out.d, inst.field, [f"reduction {out.kind}"]))
    print(out.to_json())
    return EXIT_OK


def cmd_certify(args) -> int:
    inst = read_instance(args.instance)
    f, d = _field(args, inst), _d(args, inst)
    if inst.subspaces is None or len(inst.subspaces) != inst.graph.n:
        raise UsageError("certify needs one 'l' line per vertex")
    sub = SubChooseInstance(inst.graph, d, f, tuple(inst.subspaces[v] for v in range(inst.graph.n)))
    builders = {
        "split": split_no_certificate,
        "split-anisotropic": split_no_certificate_anisotropic,
        "cochordal": cochordal_no_certificate,
    }
    try:
        wit = builders[args.kind](sub, args.budget)
    except CertificateError as exc:
        print(f"no certificate: {exc}")
        return EXIT_OK
    verified = verify_certificate(sub, wit, args.budget)
    _emit(args.output, wit.to_json(verified) + "\n")
    if args.output:
        print(f"certificate with {wit.size} vertices (bound {wit.bound}), verified={verified}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .harness import SUITES, run_named_suite

    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    res = run_named_suite(args.suite, args.trials, args.seed)
    print(res.summary())
    if res.failures:
        print("failed trials: " + " ".join(map(str, sorted(res.failures))))
    return EXIT_OK if res.ok else 1


def cmd_gen(args) -> int:
    f = field_from_name(args.field) if args.field else None
    inst = gen_random(args.n, args.k, args.family, args.density, args.seed, args.d, f)
    _emit(args.output, serialize_instance(inst))
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="gf<p> or rational (overrides the file)")
    common.add_argument("--d", type=int, help="target dimension (overrides the file)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, help="search-node cap")

    p = argparse.ArgumentParser(prog="orthodim", description="Orthogonality dimension toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("decide", parents=[common], help="decide od(G) <= d")
    s.add_argument("instance")
    s.add_argument("--fpt", action="store_true", help="use the vertex-cover FPT decider")
    s.add_argument("--witness", help="write the representation here")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("kernelize", parents=[common], help="shrink an instance with a modulator")
    s.add_argument("instance")
    s.add_argument("--alg", choices=["general", "real", "hereditary"], default="general")
    s.add_argument("--family", choices=[f.value for f in Family], default="empty")
    s.add_argument("--g-of-d", type=int, default=1)
    s.add_argument("--k-check", action="store_true", help="exit 1 if the size bound is violated")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_kernelize)

    s = sub.add_parser("reduce", parents=[common], help="coloring to orthogonality dimension")
    s.add_argument("instance")
    s.add_argument("--variant", choices=["vc", "path"], default="vc")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("certify", parents=[common], help="small NO-certificate for subspace choosability")
    s.add_argument("instance")
    s.add_argument("--kind", choices=["split", "split-anisotropic", "cochordal"], default="split")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("verify", parents=[common], help="run a seeded equivalence suite")
    s.add_argument("--suite", required=True)
    s.add_argument("--trials", type=int, default=100)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", parents=[common], help="random instance with a planted modulator")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--family", choices=[f.value for f in Family], default="empty")
    s.add_argument("--density", type=float, default=0.5)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)
    return p


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.budget is not None and args.budget <= 0:
        print("error: --budget must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (SearchBudgetExceeded, EnumerationCapExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, InstanceFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
