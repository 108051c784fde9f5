"""Command-line front end.

Exit codes: 0 on success / property pass, 1 on a property failure (the
witness is printed), 2 on usage or input errors.  ``--json`` switches every
command to one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import balanced as bal
from . import banner as ban
from . import cm as cmv
from . import verify as ver
from .complexes import SimplicialComplex
from .formats import dumps_text, load_complex, write_complex
from .generators import FAMILIES, generate
from .homology import (
    DEFAULT_FIELDS,
    FieldSpec,
    euler_characteristic,
    reduced_betti,
)


def _emit(obj: dict, args) -> None:
    if args.json:
        print(json.dumps(obj))
    else:
        parts = []
        for k, v in obj.items():
            if isinstance(v, (list, tuple)):
                v = "(" + ",".join(str(x) for x in v) + ")"
            parts.append(f"{k}={v}")
        print("  ".join(parts))


def _load(args) -> tuple[SimplicialComplex, str]:
    try:
        return load_complex(args.complex)
    except (OSError, ValueError, KeyError) as exc:
        raise SystemExit(_usage_error(f"cannot read {args.complex}: {exc}"))


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _field(args) -> FieldSpec:
    try:
        return FieldSpec.coerce(args.field)
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))


def _witness(w) -> list | None:
    if w is None:
        return None
    return sorted(w)


def cmd_analyze(args) -> int:
    cx, name = _load(args)
    fs = _field(args)
    bi = ban.b_invariants(cx).values if cx.dim >= 0 else ()
    _emit({
        "input": name,
        "dim": cx.dim,
        "f": cx.f_vector(),
        "h": cx.h_vector(),
        "euler": euler_characteristic(cx),
        "betti": tuple(reduced_betti(cx, fs)),
        "field": str(fs),
        "flag": ban.is_flag(cx),
        "banner_index": ban.banner_index(cx),
        "b": bi,
    }, args)
    return 0


def cmd_homology(args) -> int:
    cx, name = _load(args)
    fs = _field(args)
    _emit({
        "input": name,
        "field": str(fs),
        "betti": tuple(reduced_betti(cx, fs)),
        "euler": euler_characteristic(cx),
    }, args)
    return 0


def cmd_banner(args) -> int:
    cx, name = _load(args)
    if args.i is None:
        _emit({"input": name, "banner_index": ban.banner_index(cx),
               "flag": ban.is_flag(cx)}, args)
        return 0
    rep = ban.banner_violations(cx, args.i)
    _emit({
        "input": name,
        "i": rep.queried_i,
        "holds": rep.holds,
        "violations": [sorted(t) for t in rep.violations],
    }, args)
    return 0 if rep.holds else 1


def cmd_bi(args) -> int:
    cx, name = _load(args)
    inv = ban.b_invariants(cx)
    _emit({
        "input": name,
        "b": inv.values,
        "witnesses": {i: _witness(w) for i, w in inv.witnesses.items()},
    }, args)
    return 0


def cmd_cm(args) -> int:
    cx, name = _load(args)
    rep = cmv.is_cm(cx, _field(args))
    _emit({
        "input": name,
        "field": str(rep.field),
        "holds": rep.holds,
        "failing_face": _witness(rep.failing_face),
        "failing_degree": rep.failing_degree,
    }, args)
    return 0 if rep.holds else 1


def _emit_qreport(name: str, rep, args) -> int:
    _emit({
        "input": name,
        "mode": rep.mode,
        "q": rep.q,
        "holds": rep.holds,
        "failing_W": _witness(rep.failing_W),
        "reason": rep.reason,
        "field": str(rep.field) if rep.field else None,
    }, args)
    return 0 if rep.holds else 1


def cmd_qcm(args) -> int:
    cx, name = _load(args)
    return _emit_qreport(name, cmv.is_q_cm(cx, args.q, _field(args)), args)


def cmd_buchsbaum(args) -> int:
    cx, name = _load(args)
    return _emit_qreport(name, cmv.is_q_buchsbaum(cx, args.q, _field(args)), args)


def cmd_connectivity(args) -> int:
    cx, name = _load(args)
    return _emit_qreport(name, cmv.deletion_connected(cx, args.q), args)


def cmd_sphere(args) -> int:
    cx, name = _load(args)
    fs = _field(args)
    ok = cmv.is_homology_sphere(cx, fs)
    _emit({"input": name, "field": str(fs), "homology_sphere": ok}, args)
    return 0 if ok else 1


def cmd_manifold(args) -> int:
    cx, name = _load(args)
    fs = _field(args)
    ok = cmv.is_homology_manifold(cx, fs)
    _emit({"input": name, "field": str(fs), "homology_manifold": ok}, args)
    return 0 if ok else 1


def cmd_turan(args) -> int:
    try:
        print(bal.turan_count(args.n, args.j, args.d))
    except ValueError as exc:
        return _usage_error(str(exc))
    return 0


def cmd_ffk(args) -> int:
    if args.k is None or args.d is None:
        return _usage_error("ffk needs --k and --d")
    try:
        ok = bal.ffk_feasible(args.a, args.b, args.k, args.d)
    except ValueError as exc:
        return _usage_error(str(exc))
    _emit({"a": args.a, "b": args.b, "k": args.k, "d": args.d,
           "feasible": ok}, args)
    return 0 if ok else 1


def cmd_synth_balanced(args) -> int:
    cx, name = _load(args)
    if args.i is None:
        return _usage_error("synth-balanced needs --i")
    try:
        cc = bal.balanced_companion(cx, args.i)
    except ValueError as exc:
        return _usage_error(str(exc))
    except bal.SynthesisInvariantError as exc:
        print(f"construction invariant violated: {exc}", file=sys.stderr)
        return 1
    _emit({
        "input": name,
        "i": args.i,
        "n_vertices": cc.complex.n_vertices,
        "f": cc.complex.f_vector(),
        "balanced": bal.is_balanced(cc.complex),
    }, args)
    if args.out:
        write_complex(cc.complex, args.out, name=f"{name}-balanced-{args.i}",
                      colors=cc.colors, fmt="json" if str(args.out).endswith(".json") else None)
    return 0


def cmd_gen(args) -> int:
    try:
        cx = generate(args.family, *args.params)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.out:
        write_complex(cx, args.out, name=args.family)
    else:
        sys.stdout.write(dumps_text(cx))
    return 0


def _gen_instance(args):
    """Build the instance selected by --gen FAMILY with --d/--i/--q params."""
    fam = args.gen
    if fam not in FAMILIES:
        raise ValueError(f"unknown family {fam!r}")
    arity = FAMILIES[fam][1]
    supplied = [p for p in (args.d, args.i) if p is not None]
    if fam == "grid_torus":
        supplied = [args.d, args.d] if args.d is not None else []
    if fam == "random_complex":
        supplied = [args.d or 8, 3, args.seed]
    if len(supplied) != arity:
        raise ValueError(f"{fam} needs {arity} parameter(s); pass --d/--i")
    label = f"{fam}({','.join(str(p) for p in supplied)})"
    return [(label, generate(fam, *supplied))]


def cmd_verify(args) -> int:
    checks = list(ver.SUITES) if args.check == "all" else [args.check]
    for c in checks:
        if c not in ver.SUITES:
            return _usage_error(
                f"unknown check {c!r}; known: {', '.join(ver.SUITES)} or 'all'")
    fields = (
        DEFAULT_FIELDS if args.field is None else (FieldSpec.coerce(args.field),)
    )
    instances = None
    if args.gen:
        try:
            instances = _gen_instance(args)
        except ValueError as exc:
            return _usage_error(str(exc))
    elif args.catalog:
        names = ver.NAMED_CATALOGS.get(args.catalog)
        if names is None:
            return _usage_error(
                f"unknown catalog {args.catalog!r}; known: "
                + ", ".join(ver.NAMED_CATALOGS))
        instances = ver.catalog(names)
    ctx = ver.SuiteContext(fields=fields, seed=args.seed,
                           random_count=args.random, instances=instances)
    worst = 0
    for c in checks:
        for rep in ver.run_suite(c, ctx):
            if args.json:
                print(json.dumps(rep.to_json()))
            else:
                line = (f"[{rep.check}] {rep.verdict.upper():5s} {rep.instance}"
                        f"  {rep.params}  ({rep.seconds:.2f}s)")
                if rep.witness is not None:
                    line += f"  witness={rep.witness}"
                print(line)
            if rep.verdict == "fail":
                worst = 1
    return worst


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bannerlab",
        description="banner complex analysis, CM sweeps, balanced synthesis",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_complex=True):
        if with_complex:
            p.add_argument("complex", help="facet-list file (text or JSON)")
        p.add_argument("--field", type=int, default=2,
                       help="0 for rationals, else a prime (default 2)")
        p.add_argument("--json", action="store_true")
        return p

    common(sub.add_parser("analyze", help="summary invariants")).set_defaults(fn=cmd_analyze)
    common(sub.add_parser("homology", help="reduced Betti numbers")).set_defaults(fn=cmd_homology)

    p = common(sub.add_parser("banner", help="banner condition / index"))
    p.add_argument("--i", type=int)
    p.set_defaults(fn=cmd_banner)

    common(sub.add_parser("bi", help="b-invariants")).set_defaults(fn=cmd_bi)
    common(sub.add_parser("cm", help="Cohen-Macaulay test")).set_defaults(fn=cmd_cm)

    for name, fn in (("qcm", cmd_qcm), ("buchsbaum", cmd_buchsbaum),
                     ("connectivity", cmd_connectivity)):
        p = common(sub.add_parser(name, help=f"{name} deletion sweep"))
        p.add_argument("--q", type=int, required=True)
        p.set_defaults(fn=fn)

    common(sub.add_parser("sphere", help="homology sphere test")).set_defaults(fn=cmd_sphere)
    common(sub.add_parser("manifold", help="homology manifold test")).set_defaults(fn=cmd_manifold)

    p = sub.add_parser("turan", help="multipartite clique count (n over j)_d")
    p.add_argument("n", type=int)
    p.add_argument("j", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_turan)

    p = sub.add_parser("ffk", help="compressed-complex composability of (a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_ffk)

    p = common(sub.add_parser("synth-balanced",
                              help="balanced companion with matching face numbers"))
    p.add_argument("--i", type=int)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_synth_balanced)

    p = sub.add_parser("gen", help="write a catalog complex")
    p.add_argument("family", help=", ".join(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("check", help=", ".join(ver.SUITES) + ", or 'all'")
    p.add_argument("--gen", help="restrict to one generated instance")
    p.add_argument("--catalog", help=", ".join(ver.NAMED_CATALOGS))
    p.add_argument("--d", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--random", type=int, help="number of random checks")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--field", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
