"""Command-line entry point: ``hochcomp <command> ...``.

Exit codes: 0 success, 1 a verification suite failed, 2 bad input.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import __version__
from .algebra import DEFAULT_CAP, AlgebraError, build_algebra
from .cohomology import (complex_of, format_cochain, parse_cochains, verify_bar_oracle,
                         verify_center, verify_cochain_complex, verify_representatives)
from .comparison import (verify_bar_squared, verify_F_chain_map, verify_G_chain_map,
                         verify_GF_identity, verify_kernel_characterization)
from .corpus import read_input
from .fields import parse_field
from .gerstenhaber import (bracket, cup, generator_label, product_table,
                           verify_delta_action, verify_even_cup, verify_graded_commutativity,
                           verify_product_closure)
from .quiver import InputError, format_input, parse_input
from .resolution import ap_sort_key, resolution, verify_ap_op, verify_complex, verify_sub_structure

SCHEMA = 1
BAR_ORACLE_MAX_DIM = 8


@dataclass(frozen=True)
class RunConfig:
    input: str
    field: object
    max_degree: int
    sample_budget: int
    output_format: str
    seed: int
    cap: int
    threads: int


def threads_from_env():
    raw = os.environ.get("HOCHCOMP_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# output


def render_table(headers, rows):
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def emit(cfg, payload, text):
    if cfg.output_format == "json":
        doc = {"schema": SCHEMA}
        doc.update(payload)
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(text)


def header(cfg, command, A):
    return {
        "command": command,
        "input": os.path.basename(cfg.input),
        "field": cfg.field.descriptor,
        "dim": A.dim,
    }


def cochain_payload(f, A):
    res = resolution(A)
    return [{"generator": res.label(w), "value": A.format_element(f.values[w])}
            for w in sorted(f.values, key=ap_sort_key)]


# commands


def cmd_validate(cfg, A, args):
    Q = A.quiver
    payload = header(cfg, "validate", A)
    payload.update({"vertices": Q.num_vertices, "arrows": len(Q.arrows),
                    "relations": [A.label(r) for r in A.relations]})
    text = (f"ok: vertices={Q.num_vertices} arrows={len(Q.arrows)} "
            f"relations={len(A.relations)} dim={A.dim}")
    if args.echo:
        canonical = format_input(Q, A.relations)
        payload["canonical"] = canonical
        text += "\n" + canonical.rstrip("\n")
    emit(cfg, payload, text)
    return 0


def cmd_basis(cfg, A, args):
    payload = header(cfg, "basis", A)
    rows = [(A.label(p), p.source + 1, p.target + 1, p.length) for p in A.basis]
    payload["basis"] = [{"path": r[0], "source": r[1], "target": r[2], "length": r[3]}
                        for r in rows]
    emit(cfg, payload, render_table(["path", "source", "target", "length"], rows))
    return 0


def cmd_resolution(cfg, A, args):
    res = resolution(A)
    payload = header(cfg, "resolution", A)
    degrees = []
    rows = []
    for n in range(cfg.max_degree + 1):
        entries = []
        for w in res.ap(n):
            terms = []
            for (L, child, R), c in sorted(res.d(w).items(),
                                           key=lambda kv: (kv[0][0].length, kv[0][0].arrows)):
                coeff = "" if c == 1 else "-" if c == -1 else f"{c}*"
                terms.append(f"{coeff}{A.label(L)} (x) {res.label(child)} (x) {A.label(R)}")
            d = " + ".join(terms).replace("+ -", "- ") or "0"
            subs = [f"{res.label(s.child)}@{s.offset}" for s in res.sub(w)] if n else []
            entries.append({"support": res.label(w), "sub": subs, "d": d})
            rows.append((n, res.label(w), ", ".join(subs), d))
        degrees.append({"degree": n, "size": len(entries), "generators": entries})
    payload["degrees"] = degrees
    emit(cfg, payload, render_table(["n", "generator", "Sub", "d_n"], rows))
    return 0


def cmd_cohomology(cfg, A, args):
    C = complex_of(A)
    payload = header(cfg, "cohomology", A)
    out = []
    rows = []
    for n in range(cfg.max_degree + 1):
        entry = {"degree": n, "hom_dim": len(C.hom_basis(n)), "rank_d": C.rank_d(n),
                 "dim": C.dim_hh(n)}
        if args.representatives:
            _, reps = C.hh(n)
            entry["representatives"] = [
                {"label": generator_label(n, k), "values": cochain_payload(f, A)}
                for k, f in enumerate(reps)]
        out.append(entry)
        rows.append((n, entry["hom_dim"], entry["rank_d"], entry["dim"]))
    payload["cohomology"] = out
    text = render_table(["n", "dim Hom", "rank d^n", "dim HH^n"], rows)
    if args.representatives:
        blocks = []
        for entry in out:
            for r in entry["representatives"]:
                vals = "; ".join(f"{v['generator']} -> {v['value']}" for v in r["values"]) or "0"
                blocks.append(f"{r['label']}: {vals}")
        text += "\n\n" + "\n".join(blocks)
    emit(cfg, payload, text)
    return 0


def _product_command(name, op, cfg, A, args):
    n, m = args.n, args.m
    if name == "bracket" and (n < 1 or m < 1):
        raise InputError("bracket needs degrees n, m >= 1")
    if n < 0 or m < 0:
        raise InputError("degrees must be non-negative")
    target = n + m if name == "cup" else n + m - 1
    payload = header(cfg, name, A)
    payload["degrees"] = [n, m]
    if args.cochain_file:
        with open(args.cochain_file) as fh:
            cochains = parse_cochains(fh.read(), A)
        if len(cochains) != 2:
            raise InputError(f"cochain file holds {len(cochains)} cochains, expected 2")
        f, g = cochains
        if (f.degree, g.degree) != (n, m):
            raise InputError(f"cochain degrees ({f.degree}, {g.degree}) do not match ({n}, {m})")
        result = op(f, g, A)
        payload["result"] = cochain_payload(result, A)
        text = format_cochain(result, A) or "0"
        emit(cfg, payload, text)
        return 0
    C = complex_of(A)
    table = product_table(A, name, n, m)
    payload["table"] = table.as_dict()
    basis = [generator_label(target, k) for k in range(C.dim_hh(target))]
    rows = [(left, right, " + ".join(f"{c}*{b}" for c, b in zip(v, basis) if c != "0") or "0")
            for (left, right), v in table.entries.items()]
    emit(cfg, payload, render_table(["left", "right", f"class in HH^{target}"], rows))
    return 0


def cmd_cup(cfg, A, args):
    return _product_command("cup", cup, cfg, A, args)


def cmd_bracket(cfg, A, args):
    return _product_command("bracket", bracket, cfg, A, args)


def run_suites(A, cfg):
    d = cfg.max_degree
    budget = cfg.sample_budget
    suites = [
        lambda: verify_complex(A, d),
        lambda: verify_ap_op(A, d),
        lambda: verify_sub_structure(A, d),
        lambda: verify_F_chain_map(A, d),
        lambda: verify_GF_identity(A, d),
        lambda: verify_G_chain_map(A, d, samples=budget, seed=cfg.seed),
        lambda: verify_kernel_characterization(A, d, samples=budget, seed=cfg.seed),
        lambda: verify_bar_squared(A, d, samples=budget, seed=cfg.seed),
        lambda: verify_cochain_complex(A, d),
        lambda: verify_center(A),
        lambda: verify_representatives(A, d),
        lambda: verify_even_cup(A, d),
        lambda: verify_product_closure(A, d),
        lambda: verify_graded_commutativity(A, d),
        lambda: verify_delta_action(A, d),
    ]
    if A.dim <= BAR_ORACLE_MAX_DIM:
        suites.append(lambda: verify_bar_oracle(A, min(3, d)))
    return [s() for s in suites]


def cmd_verify(cfg, A, args):
    reports = run_suites(A, cfg)
    ok = all(r.ok for r in reports)
    payload = header(cfg, "verify", A)
    payload.update({"max_degree": cfg.max_degree, "seed": cfg.seed,
                    "sample_budget": cfg.sample_budget, "ok": ok,
                    "suites": [r.as_dict() for r in reports]})
    rows = [(r.name, "pass" if r.ok else "FAIL", r.checked,
             r.failure or r.details.get("skipped", "")) for r in reports]
    emit(cfg, payload, render_table(["suite", "result", "checked", "note"], rows))
    return 0 if ok else 1


COMMANDS = {
    "validate": cmd_validate,
    "basis": cmd_basis,
    "resolution": cmd_resolution,
    "cohomology": cmd_cohomology,
    "cup": cmd_cup,
    "bracket": cmd_bracket,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="rational",
                        help="'rational' or 'p:<prime>' (default: rational)")
    common.add_argument("--max-degree", type=int, default=5)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--sample-budget", type=int, default=1000,
                        help="random bar tensors per sampled suite")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest basis path length before giving up")

    parser = argparse.ArgumentParser(
        prog="hochcomp",
        description="Hochschild cohomology and Gerstenhaber structure of monomial path algebras.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="parse and check an input file")
    p.add_argument("input")
    p.add_argument("--echo", action="store_true", help="print the canonical form")
    for name, text in [("basis", "list the path basis"),
                       ("resolution", "list AP_n, Sub and d_n"),
                       ("verify", "run every property suite")]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("input")
    p = sub.add_parser("cohomology", parents=[common], help="dimensions of HH^n")
    p.add_argument("input")
    p.add_argument("--representatives", action="store_true")
    for name in ("cup", "bracket"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of HH^n and HH^m classes")
        p.add_argument("n", type=int)
        p.add_argument("m", type=int)
        p.add_argument("input")
        p.add_argument("--cochain-file", help="two cochains to combine instead of the generators")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.max_degree < 0:
            raise InputError("--max-degree must be >= 0")
        cfg = RunConfig(args.input, parse_field(args.field), args.max_degree,
                        args.sample_budget, args.format, args.seed, args.cap,
                        threads_from_env())
        quiver, relations = parse_input(read_input(cfg.input))
        A = build_algebra(quiver, relations, cfg.field, cfg.cap)
        return COMMANDS[args.command](cfg, A, args)
    except (InputError, AlgebraError, OSError, ValueError) as exc:
        print(f"hochcomp {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
