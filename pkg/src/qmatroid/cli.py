"""Command line interface.

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(the first witness is printed to stderr), 2 for usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from threadpoolctl import threadpool_limits

from . import axioms as ax
from . import serialize as ser
from .classify import classify
from .crypto import CONVERTERS, ConversionPath, cycles, roundtrip_verify
from .errors import AxiomViolation, QMatroidError
from .family import SubspaceFamily
from .fixtures import FIXTURE_SYSTEM, FIXTURES, fixture
from .matroid import ClosureMap, QMatroid, dual

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CONSTRUCTIONS = ("rank_table", "uniform", "representable", "matrix")

# variant name -> the system it belongs to
_VARIANT_SYSTEM = {
    "global": "rank", "local": "rank",
    "I4": "independence", "I4p": "independence", "I4pp": "independence",
    "B4": "bases", "B4pp": "bases", "H3": "hyperplanes", "H3p": "hyperplanes",
    "C3": "circuits", "C3p": "circuits", "C3bar": "circuits",
    "O3": "open", "O3bar": "open", "S4": "spanning", "S4pp": "spanning",
}

# family kind -> axiom system
_KIND_SYSTEM = {
    "independent": "independence", "basis": "bases", "flat": "flats", "hyperplane": "hyperplanes",
    "circuit": "circuits", "dependent": "dependence", "open": "open", "spanning": "spanning",
    "nonspanning": "nonspanning",
}


class UsageError(Exception):
    pass


def normalize_variant(v: str) -> str:
    t = v.strip().replace("''", "pp").replace("″", "pp").replace("'", "p").replace("′", "p")
    t = t.replace("Bar", "bar").replace("BAR", "bar")
    for name in _VARIANT_SYSTEM:
        if name.lower() == t.lower():
            return name
    raise UsageError(f"unknown variant {v!r}; choose from {', '.join(_VARIANT_SYSTEM)}")


def _split(values) -> list[str]:
    out = []
    for v in values or []:
        out += [p for p in v.split(",") if p.strip()]
    return out


# ---------------------------------------------------------------- loading


def _load(args, check: bool = True):
    if getattr(args, "fixture", None):
        return fixture(args.fixture), FIXTURE_SYSTEM.get(args.fixture)
    if not getattr(args, "file", None):
        raise UsageError("give an input file or --fixture NAME")
    with open(args.file, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise UsageError(f"{args.file}: invalid JSON ({e})") from None
    obj = ser.load(doc, check=check)
    system = _KIND_SYSTEM.get(str(doc.get("kind", "")).lower()) if isinstance(obj, SubspaceFamily) else None
    return obj, system


def _load_matroid(args) -> QMatroid:
    obj, _ = _load(args)
    if not isinstance(obj, QMatroid):
        raise UsageError("this command needs a q-matroid (rank table or construction)")
    return obj


def _emit(args, doc) -> None:
    ser.write_file(getattr(args, "output", None), doc)


# ---------------------------------------------------------------- commands


def cmd_build(args) -> int:
    c = args.construction
    if c == "representable":
        _need(args, "q", "p", "s")
        spec = {"construction": c, "q": args.q, "p": args.p, "s": args.s}
    elif c == "uniform":
        _need(args, "q", "n", "k")
        spec = {"construction": c, "q": args.q, "n": args.n, "k": args.k}
    else:
        if not args.file:
            raise UsageError(f"construction {c} reads its data from an input file")
        with open(args.file, encoding="utf-8") as fh:
            spec = json.load(fh)
        spec = dict(spec, construction=c)
    M = ser.build_construction(spec, check=True)
    _emit(args, ser.matroid_to_json(M))
    return EXIT_OK


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--construction {args.construction} needs {' '.join(missing)}")


def cmd_classify(args) -> int:
    rep = classify(_load_matroid(args))
    if args.format == "json":
        _emit(args, rep.to_json())
    else:
        text = rep.render()
        if args.output and args.output != "-":
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return EXIT_OK


def _plan(obj, native_system, systems, variants) -> list[tuple[str, str | None]]:
    if isinstance(obj, QMatroid):
        names = list(ax.SYSTEMS) if not systems or systems == ["all"] else systems
    elif isinstance(obj, ClosureMap):
        names = ["closure"]
    else:
        if not systems or systems == ["all"]:
            if native_system is None:
                raise UsageError("family has no 'kind'; pass --systems")
            names = [native_system]
        else:
            names = systems
    names = [ax.system_name(s) for s in names]
    chosen: dict[str, str] = {}
    for v in variants:
        v = normalize_variant(v)
        target = _VARIANT_SYSTEM[v]
        if target == "rank" and "rank" not in names and "rank_local" in names:
            target = "rank_local"
        if target not in names:
            raise UsageError(f"variant {v} does not belong to any requested system")
        chosen[target] = v
    return [(s, chosen.get(s)) for s in names]


def cmd_check(args) -> int:
    obj, native = _load(args)
    mode = "exhaustive" if args.exhaustive else args.mode
    plan = _plan(obj, native, _split(args.systems), _split(args.variant))
    reports = [ax.check_system(s, obj, variant=v, mode=mode, seed=args.seed, count=args.count)
               for s, v in plan]
    doc = reports[0].to_json() if len(reports) == 1 else {"reports": [r.to_json() for r in reports]}
    _emit(args, doc)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        v = r.first_failure()
        wit = json.dumps(v.witness.to_json()) if v.witness is not None else "{}"
        print(f"FAIL {r.system}/{r.variant} {v.axiom}: witness {wit}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_convert(args) -> int:
    obj, _ = _load(args)
    path = ConversionPath.parse(args.path)
    start = _system_of(obj)
    if start == "family" and path.systems[0] in ("rank", "closure"):
        raise UsageError(f"input is a family but the path starts at {path.systems[0]}")
    if start != "family" and path.systems[0] != start:
        if isinstance(obj, QMatroid) and ("rank", path.systems[0]) in CONVERTERS:
            obj = CONVERTERS[("rank", path.systems[0])](obj)
        else:
            raise UsageError(f"input is a {start} object but the path starts at {path.systems[0]}")
    for a, b in zip(path.systems, path.systems[1:]):
        obj = CONVERTERS[(a, b)](obj, check=not args.no_check)
    _emit(args, ser.to_json(obj, kind=path.systems[-1]))
    return EXIT_OK


def _system_of(obj) -> str:
    if isinstance(obj, QMatroid):
        return "rank"
    if isinstance(obj, ClosureMap):
        return "closure"
    return "family"


def cmd_roundtrip(args) -> int:
    M = _load_matroid(args)
    paths = cycles(args.max_len) if args.all or not args.path else [ConversionPath.parse(args.path)]
    reports = [roundtrip_verify(M, p, check=not args.no_check) for p in paths]
    _emit(args, {"ok": all(r.ok for r in reports), "paths": [r.to_json() for r in reports]})
    bad = [r for r in reports if not r.ok]
    for r in bad:
        print(f"FAIL {r.path}: diverged at {r.divergence}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_dual(args) -> int:
    _emit(args, ser.matroid_to_json(dual(_load_matroid(args))))
    return EXIT_OK


def cmd_fixture(args) -> int:
    obj = fixture(args.name)
    kind = FIXTURE_SYSTEM.get(args.name)
    _emit(args, ser.to_json(obj, kind=_fixture_kind(kind)))
    return EXIT_OK


def _fixture_kind(system):
    if system is None:
        return None
    return {v: k for k, v in _KIND_SYSTEM.items()}[system]


def cmd_selftest(args) -> int:
    from .selftest import run

    results = run()
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}{': ' + detail if detail else ''}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qmatroid", description="q-matroids over finite fields")
    p.add_argument("--threads", type=int, default=None,
                   help="worker cap for numerical kernels (sets the BLAS/OpenMP thread limit)")
    sub = p.add_subparsers(dest="command", required=True)

    def out(sp):
        sp.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    def source(sp):
        sp.add_argument("file", nargs="?", help="input JSON file")
        sp.add_argument("--fixture", choices=FIXTURES, help="use a builtin fixture instead of a file")

    b = sub.add_parser("build", help="build a q-matroid and write its rank table")
    b.add_argument("--construction", choices=CONSTRUCTIONS, required=True)
    b.add_argument("--q", type=int)
    b.add_argument("--n", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--p", type=int)
    b.add_argument("--s", type=int)
    b.add_argument("file", nargs="?", help="rank table or matrix spec (rank_table, matrix)")
    out(b)
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("classify", help="per-dimension report of every derived family")
    source(c)
    c.add_argument("--format", choices=("text", "json"), default="text")
    out(c)
    c.set_defaults(func=cmd_classify)

    k = sub.add_parser("check", help="run axiom systems")
    source(k)
    k.add_argument("--systems", action="append", help="comma list of systems, or 'all'")
    k.add_argument("--variant", "--variants", action="append", dest="variant",
                   help="axiom variant, e.g. I4, I4pp, C3bar, O3bar, local")
    k.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    k.add_argument("--exhaustive", action="store_true", help="force full quantifier sweeps")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--count", type=int, default=256, help="sample size in sampled mode")
    out(k)
    k.set_defaults(func=cmd_check)

    v = sub.add_parser("convert", help="apply a chain of conversions")
    source(v)
    v.add_argument("--path", required=True, help="comma-separated systems, e.g. rank,flat,hyperplane")
    v.add_argument("--no-check", action="store_true", help="skip axiom validation of inputs")
    out(v)
    v.set_defaults(func=cmd_convert)

    r = sub.add_parser("roundtrip", help="verify conversion cycles return the start object")
    source(r)
    r.add_argument("--path", help="one cycle; default: every cycle")
    r.add_argument("--all", action="store_true")
    r.add_argument("--max-len", type=int, default=4)
    r.add_argument("--no-check", action="store_true")
    out(r)
    r.set_defaults(func=cmd_roundtrip)

    d = sub.add_parser("dual", help="write the dual q-matroid")
    source(d)
    out(d)
    d.set_defaults(func=cmd_dual)

    f = sub.add_parser("fixture", help="write a builtin fixture")
    f.add_argument("name", choices=FIXTURES)
    out(f)
    f.set_defaults(func=cmd_fixture)

    s = sub.add_parser("selftest", help="quick end-to-end sanity run")
    s.set_defaults(func=cmd_selftest)
    return p


def _limit_threads(n: int | None) -> None:
    if not n:
        return
    if n < 1:
        raise UsageError("--threads must be positive")
    threadpool_limits(n)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        _limit_threads(args.threads)
        return args.func(args)
    except AxiomViolation as e:
        rep = e.report
        v = rep.first_failure()
        wit = json.dumps(v.witness.to_json()) if v is not None and v.witness is not None else "{}"
        print(f"error: input violates {rep.system} axiom {v.axiom if v else '?'}: witness {wit}",
              file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, QMatroidError, ValueError, KeyError, TypeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
