"""Command-line entry point: ``wreathz <subcommand> [options]``.

Exit codes: 0 on success, 2 when the mathematics rejects the request (the
error class name is printed), 1 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import checks
from . import condensed as cz
from .config import RunConfig
from .definable import (Basis, act_decide, act_refute, cyc_member, div_witness, exp_G,
                        is_basis, is_top_basis, iso_transfer)
from .encoding import nu_decode, nu_encode
from .errors import DomainError, ParseError
from .interp import (delta_decode, delta_encode, int_roundtrip, lambda_G, lift_tuple,
                     tuple_mul)
from .laurent import format_poly, parse_poly
from .lcs import in_lcs, lcs_coords, lcs_rank
from .sampling import random_basis_tuple, random_poly, random_top
from .wreath import GroupContext, inv, mul, to_record


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-m", type=int, default=1, help="rank of the top group")
    p.add_argument("-n", type=int, default=1, help="rank of the bottom group")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--radius", type=int, default=None, help="ball radius cap")
    p.add_argument("--budget", type=int, default=None, help="search budget")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _config(args) -> RunConfig:
    return RunConfig(m=args.m, n=args.n, seed=args.seed,
                     radius_cap=args.radius if args.radius is not None else cz.DEFAULT_RADIUS_CAP,
                     search_budget=args.budget or RunConfig.search_budget, format=args.format)


def _ctx(cfg: RunConfig) -> GroupContext:
    return GroupContext(cfg.m, cfg.n)


def _elt(ctx, text):
    return ctx.parse(text)


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip())
    except ValueError as exc:
        raise ParseError(f"bad integer tuple {text!r}") from exc


def _poly_or_code(ctx, text: str):
    if text.strip().isdigit():
        return nu_decode(int(text), ctx.m)
    return parse_poly(text, ctx.m, ctx.top_names)


# handlers: each returns a record (dict)


def cmd_mul(cfg, args):
    ctx = _ctx(cfg)
    g = _elt(ctx, args.x)
    for y in args.y:
        g = mul(g, _elt(ctx, y))
    return {"result": str(g), "record": to_record(g)}


def cmd_inv(cfg, args):
    ctx = _ctx(cfg)
    g = inv(_elt(ctx, args.x))
    return {"result": str(g), "record": to_record(g)}


def cmd_pow(cfg, args):
    ctx = _ctx(cfg)
    g = exp_G(_elt(ctx, args.x), args.k)
    return {"result": str(g), "record": to_record(g)}


def cmd_encode(cfg, args):
    p = parse_poly(args.poly, cfg.m)
    return {"poly": format_poly(p), "code": nu_encode(p)}


def cmd_decode(cfg, args):
    p = nu_decode(args.code, cfg.m)
    return {"code": args.code, "poly": format_poly(p)}


def cmd_g2z(cfg, args):
    ctx = _ctx(cfg)
    return {"tuple": list(delta_encode(_elt(ctx, args.x)))}


def cmd_z2g(cfg, args):
    ctx = _ctx(cfg)
    g = delta_decode(ctx, _ints(args.tuple))
    return {"result": str(g), "record": to_record(g)}


def cmd_tuple_mul(cfg, args):
    ctx = _ctx(cfg)
    return {"tuple": list(tuple_mul(ctx, _ints(args.t1), _ints(args.t2)))}


def cmd_cyc(cfg, args):
    ctx = _ctx(cfg)
    v = cyc_member(_elt(ctx, args.a), _elt(ctx, args.x))
    return {"member": v.holds, "witness": str(v.witness) if v.witness is not None else None}


def cmd_divides(cfg, args):
    ctx = _ctx(cfg)
    a = _elt(ctx, args.a) if args.a else ctx.a(1)
    z = div_witness(a, args.k, args.l)
    return {"k": args.k, "l": args.l, "l_divides_k": z is not None,
            "witness": str(z) if z is not None else None}


def cmd_act(cfg, args):
    ctx = _ctx(cfg)
    g, h = _elt(ctx, args.g), _elt(ctx, args.h)
    q = _poly_or_code(ctx, args.q)
    holds = act_decide(g, h, q)
    out = {"q": format_poly(q, ctx.top_names), "holds": holds}
    if not holds:
        out["refutation_alpha"] = list(act_refute(g, h, q, budget=cfg.search_budget))
    return out


def cmd_basis_check(cfg, args):
    ctx = _ctx(cfg)
    if args.random:
        rng = random.Random(cfg.seed)
        cs, us = random_basis_tuple(rng, ctx)
    else:
        if not args.c or not args.u:
            raise UsageError("give --c and --u elements, or --random")
        cs = [_elt(ctx, c) for c in args.c]
        us = [_elt(ctx, u) for u in args.u]
    return {"tops": [str(c) for c in cs], "bottoms": [str(u) for u in us],
            "top_basis": is_top_basis(cs), "basis": is_basis(cs, us)}


def cmd_iso_transfer(cfg, args):
    ctx = _ctx(cfg)
    y = iso_transfer(_elt(ctx, args.a), _elt(ctx, args.d), args.k)
    return {"k": args.k, "image": str(y)}


def cmd_lcs_member(cfg, args):
    ctx = _ctx(cfg)
    return {"level": args.i, "member": in_lcs(_elt(ctx, args.x), args.i)}


def cmd_lcs_coords(cfg, args):
    ctx = _ctx(cfg)
    c = lcs_coords(_elt(ctx, args.x), args.i, level_cap=cfg.level_cap)
    return {"level": args.i,
            "coords": [{"b": k, "a": list(js), "coeff": v} for (k, js), v in sorted(c.coeffs.items())]}


def cmd_lcs_rank(cfg, args):
    return {"m": cfg.m, "n": cfg.n, "level": args.i, "rank": lcs_rank(cfg.m, cfg.n, args.i)}


def cmd_gs_eval(cfg, args):
    S = cz.parse_set(args.set)
    x = cz.gs_eval_word(args.word, S, b_index=args.b_index)
    return {"set": S.spec, "word": args.word, "result": str(x), "record": cz.gs_record(x),
            "identity": x.is_identity()}


def cmd_gs_fingerprint(cfg, args):
    S = cz.parse_set(args.set)
    f = cz.ball_fingerprint(S, args.r, b_index=args.b_index, cap=cfg.radius_cap)
    return {"set": S.spec, "radius": args.r, "classes": len(f.classes),
            "merged": [list(c) for c in f.classes if len(c) > 1],
            "digest": f.digest(), "center": cz.center_fingerprint(S, 2 * args.r)}


def cmd_gs_demo(cfg, args):
    S = cz.parse_set(args.set)
    rows = cz.condensation_demo(args.r, S, budget=args.budget or 10_000_000, cap=cfg.radius_cap)
    return {"set": S.spec, "rows": [r.as_record() for r in rows],
            "all_found": all(r.found for r in rows)}


def cmd_roundtrip(cfg, args):
    ctx = _ctx(cfg)
    rng = random.Random(cfg.seed)
    basis = Basis.validated(*random_basis_tuple(rng, ctx)) if args.random_basis else Basis.standard(ctx)
    c1 = basis.tops[0]
    ok = 0
    for _ in range(args.count):
        g = basis.element(random_top(rng, ctx.m), [random_poly(rng, ctx.m) for _ in range(ctx.n)])
        gammas, polys = basis.coordinates(g)
        codes = [nu_encode(p) for p in polys]
        back = lambda_G(basis, lift_tuple(c1, gammas), lift_tuple(c1, codes))
        ok += back == g
    z_ok = all(int_roundtrip(ctx, k) == k for k in range(-100, 101))
    return {"samples": args.count, "roundtrips_ok": ok, "z_roundtrip_ok": z_ok,
            "all_ok": ok == args.count and z_ok}


def cmd_selftest(cfg, args):
    rng = random.Random(cfg.seed)
    s = args.scale
    results = [
        checks.check_mul_oracle(rng, pairs=200 * s),
        checks.check_codecs(rng, samples=100 * s, exhaustive=200 * s),
        checks.check_cyc_grid(max_beta=2, bound=3),
        checks.check_div_grid(bound=6),
        checks.check_exponentiation(rng, elements=5 * s, kmax=6),
        checks.check_action(rng, instances=5 * s, points=10, corrupted=5 * s),
        checks.check_basis_recognition(rng, images=5 * s),
        checks.check_roundtrip(rng, standard=20 * s, bases=2, per_basis=5 * s, kmax=20),
        checks.check_lcs(rng, max_level=3, planted=1),
        checks.check_gs(rng, triples=200 * s, bound=3),
    ]
    return {"checks": [{"name": r.name, "passed": r.passed, "failed": r.failed} for r in results],
            "passed": sum(r.passed for r in results), "failed": sum(r.failed for r in results),
            "all_ok": all(r.ok for r in results)}


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="wreathz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("mul", cmd_mul, "multiply elements left to right")
    p.add_argument("x")
    p.add_argument("y", nargs="+")
    add("inv", cmd_inv, "inverse of an element").add_argument("x")
    p = add("pow", cmd_pow, "integer power of an element")
    p.add_argument("x")
    p.add_argument("k", type=int)
    add("encode", cmd_encode, "code of a Laurent polynomial").add_argument("poly")
    add("decode", cmd_decode, "Laurent polynomial of a code").add_argument("code", type=int)
    add("g2z", cmd_g2z, "element to integer tuple").add_argument("x")
    add("z2g", cmd_z2g, "integer tuple to element").add_argument("tuple")
    p = add("tuple-mul", cmd_tuple_mul, "multiply two integer tuples")
    p.add_argument("t1")
    p.add_argument("t2")
    p = add("cyc", cmd_cyc, "decide x in <a>")
    p.add_argument("a")
    p.add_argument("x")
    p = add("divides", cmd_divides, "solve [b1, a^k] = [z, a^l]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--a", default=None, help="element of A (default a1)")
    p = add("act", cmd_act, "decide g^q = h, refuting at a point when false")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("q", help="Laurent polynomial or its integer code")
    p = add("basis-check", cmd_basis_check, "decide whether (c, u) is a basis")
    p.add_argument("--c", action="append")
    p.add_argument("--u", action="append")
    p.add_argument("--random", action="store_true", help="check a random automorphism image")
    p = add("iso-transfer", cmd_iso_transfer, "image of a^k under <a> -> <d>")
    p.add_argument("a")
    p.add_argument("d")
    p.add_argument("k", type=int)
    for name, fn in (("lcs-member", cmd_lcs_member), ("lcs-coords", cmd_lcs_coords)):
        p = add(name, fn, "lower central series " + name.split("-")[1])
        p.add_argument("x")
        p.add_argument("-i", type=int, required=True)
    add("lcs-rank", cmd_lcs_rank, "rank of G_i / G_(i+1)").add_argument("-i", type=int, required=True)
    p = add("gs-eval", cmd_gs_eval, "evaluate a word in G_S")
    p.add_argument("--set", required=True)
    p.add_argument("--b-index", type=int, default=0)
    p.add_argument("word")
    p = add("gs-fingerprint", cmd_gs_fingerprint, "radius-r ball fingerprint of G_S")
    p.add_argument("--set", required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--b-index", type=int, default=0)
    p = add("gs-demo", cmd_gs_demo, "condensation demo up to radius r")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--set", default="universal")
    p = add("roundtrip", cmd_roundtrip, "bi-interpretability roundtrip on random elements")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--random-basis", action="store_true")
    p = add("selftest", cmd_selftest, "run the property suite at small scale")
    p.add_argument("--scale", type=int, default=10)
    return parser


def _emit(record: dict, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(record, sort_keys=True, default=str) + "\n")
        return
    for key, value in record.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            out.write(f"{key}:\n")
            for row in value:
                out.write("  " + " ".join(f"{k}={v}" for k, v in row.items()) + "\n")
        else:
            out.write(f"{key}: {value}\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(args)
        record = args.fn(cfg, args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 1
    except DomainError as exc:
        name = type(exc).__name__
        if getattr(args, "format", "text") == "json":
            out.write(json.dumps({"error": name, "message": str(exc), "seed": args.seed}) + "\n")
        err.write(f"{name}: {exc}\n")
        return 2
    record = {"command": args.command, "seed": cfg.seed, **record}
    _emit(record, cfg.format, out)
    if record.get("all_ok") is False:
        err.write("CheckFailed: some samples disagreed with their oracle\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
