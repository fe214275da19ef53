"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad charges, non-FLOTW
input to ``aseq``, a failed ``verify-cbs`` check), 2 on a usage error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .afun import a_sequence, a_value
from .basicsets import basic_set_A, basic_set_B, basic_set_D, preset_charges
from .combinat import (
    ChargeParams,
    enumerate_multipartitions,
    format_multipartition,
    format_partition,
    is_flotw,
    parse_multipartition,
    rank,
)
from .crystal import generate_crystal, kleshchev_multipartitions
from .errors import DomainError
from .fock import OrderKind
from .llt import a_vector, canonical_basis, decomposition_matrix, verify_cbs

COMMANDS = (
    "enumerate",
    "crystal",
    "flotw",
    "kleshchev",
    "aseq",
    "avalue",
    "avector",
    "canbasis",
    "decmat",
    "verify-cbs",
    "basicset",
)

FORMATS = {
    "enumerate": ("text", "json"),
    "crystal": ("text", "json", "dot"),
    "flotw": ("text", "json"),
    "kleshchev": ("text", "json"),
    "aseq": ("text", "json"),
    "avalue": ("text", "json"),
    "avector": ("text", "json"),
    "canbasis": ("text", "json"),
    "decmat": ("text", "json", "tsv"),
    "verify-cbs": ("text", "json"),
    "basicset": ("text", "json"),
}


class UsageError(Exception):
    pass


def _charges(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"charges must be comma-separated integers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--e", type=int, help="order of the root of unity (e >= 2)")
    common.add_argument("--d", type=int, help="number of components")
    common.add_argument("--n", type=int, help="rank")
    common.add_argument("--charges", type=_charges, help="comma-separated v_0,...,v_{d-1}")
    common.add_argument("--mp", help='multipartition, e.g. "1|3.1|2.1.1" ("-" = empty)')
    common.add_argument("--order", choices=("am", "flotw"), default="flotw")
    common.add_argument("--format", choices=("text", "json", "tsv", "dot"), default="text")
    common.add_argument("--with-q", action="store_true", help="decmat: keep q-polynomial entries")
    common.add_argument("--type", choices=("A", "B", "D"), dest="weyl_type")

    parser = argparse.ArgumentParser(
        prog="akfock",
        description="Crystals, canonical bases and decomposition matrices of Ariki-Koike algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=HANDLERS[name].__doc__)
    return parser


# -- argument resolution ------------------------------------------------------


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {', '.join(missing)}")


def _params(args) -> ChargeParams:
    if args.weyl_type is not None:
        _need(args, "e")
        params = preset_charges(args.weyl_type, args.e)
        if args.charges is not None and args.charges != params.charges:
            raise DomainError(f"--charges conflicts with the type {args.weyl_type} preset")
    else:
        _need(args, "e")
        charges = args.charges
        if charges is None:
            if args.d in (None, 1):
                charges = (0,)
            else:
                raise UsageError("--charges is required when d > 1")
        params = ChargeParams(args.e, charges)
    if args.d is not None and args.d != params.d:
        raise DomainError(f"--d {args.d} does not match {params.d} charges")
    return params


def _mp(args, params: ChargeParams):
    _need(args, "mp")
    mp = parse_multipartition(args.mp, params.d)
    if args.n is not None and rank(mp) != args.n:
        raise DomainError(f"{args.mp} has rank {rank(mp)}, not {args.n}")
    return mp


def _rank(args) -> int:
    _need(args, "n")
    if args.n < 0:
        raise DomainError("--n must be nonnegative")
    return args.n


def _head(params: ChargeParams) -> dict:
    return {"e": params.e, "charges": list(params.charges)}


def _emit_json(out, obj):
    out.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


# -- handlers -----------------------------------------------------------------


def cmd_enumerate(args, out):
    """list all d-partitions of rank n"""
    _need(args, "n")
    d = args.d if args.d is not None else (len(args.charges) if args.charges else 1)
    if d < 1 or args.n < 0:
        raise DomainError("need d >= 1 and n >= 0")
    mps = [format_multipartition(mp) for mp in enumerate_multipartitions(d, args.n)]
    if args.format == "json":
        _emit_json(out, {"d": d, "n": args.n, "multipartitions": mps})
    else:
        for s in mps:
            out.write(s + "\n")


def cmd_crystal(args, out):
    """crystal graph up to rank n (text, json or dot)"""
    params = _params(args)
    graph = generate_crystal(OrderKind.parse(args.order), params, _rank(args))
    if args.format == "dot":
        out.write(graph.to_dot())
    elif args.format == "json":
        _emit_json(
            out,
            {
                **_head(params),
                "order": args.order,
                "n_max": graph.n_max,
                "layers": [[format_multipartition(m) for m in layer] for layer in graph.layers],
                "edges": [
                    {"source": format_multipartition(a), "label": i, "target": format_multipartition(b)}
                    for a, i, b in graph.edges
                ],
            },
        )
    else:
        for k, layer in enumerate(graph.layers):
            out.write(f"rank {k}: " + " ".join(format_multipartition(m) for m in layer) + "\n")
        for a, i, b in graph.edges:
            out.write(f"{format_multipartition(a)} -{i}-> {format_multipartition(b)}\n")


def _listing(args, out, members: Callable, test: Callable):
    params = _params(args)
    if args.mp is not None:
        mp = _mp(args, params)
        member = test(mp, params)
        if args.format == "json":
            _emit_json(out, {**_head(params), "mp": args.mp, "member": member})
        else:
            out.write(("true" if member else "false") + "\n")
        return
    n = _rank(args)
    mps = [format_multipartition(m) for m in members(params, n)]
    if args.format == "json":
        _emit_json(out, {**_head(params), "n": n, "multipartitions": mps})
    else:
        for s in mps:
            out.write(s + "\n")


def cmd_flotw(args, out):
    """FLOTW d-partitions of rank n, or test --mp"""
    _listing(
        args,
        out,
        lambda p, n: [m for m in enumerate_multipartitions(p.d, n) if is_flotw(m, p)],
        is_flotw,
    )


def cmd_kleshchev(args, out):
    """Kleshchev d-partitions of rank n, or test --mp"""
    _listing(
        args,
        out,
        kleshchev_multipartitions,
        lambda m, p: m in set(kleshchev_multipartitions(p, rank(m))),
    )


def cmd_aseq(args, out):
    """a-sequence of residues of a FLOTW d-partition"""
    params = _params(args)
    mp = _mp(args, params)
    seq = a_sequence(mp, params)
    if args.format == "json":
        _emit_json(
            out,
            {
                **_head(params),
                "mp": format_multipartition(mp),
                "sequence": seq.flat(),
                "runs": [list(r) for r in seq.runs],
            },
        )
    else:
        out.write(str(seq) + "\n")


def cmd_avalue(args, out):
    """a-value (up to a rank-dependent constant) of --mp, or of every d-partition of rank n"""
    params = _params(args)
    if args.mp is not None:
        mps = [_mp(args, params)]
        n = rank(mps[0])
    else:
        n = _rank(args)
        mps = enumerate_multipartitions(params.d, n)
    values = [(format_multipartition(m), str(a_value(m, params, n))) for m in mps]
    if args.format == "json":
        _emit_json(
            out, {**_head(params), "n": n, "values": [{"mp": m, "a": a} for m, a in values]}
        )
    else:
        for m, a in values:
            out.write(f"{m}\t{a}\n")


def cmd_avector(args, out):
    """the monomial vector A(mp) of a FLOTW d-partition"""
    params = _params(args)
    mp = _mp(args, params)
    vec = a_vector(mp, params)
    if args.format == "json":
        _emit_json(out, {**_head(params), "mp": format_multipartition(mp), "vector": vec.to_json()})
    else:
        for t in vec.to_json():
            out.write(f"{t['mp']}\t{t['coef']}\n")


def cmd_canbasis(args, out):
    """canonical basis columns at rank n"""
    params = _params(args)
    n = _rank(args)
    cols = canonical_basis(params, n, OrderKind.parse(args.order))
    if args.format == "json":
        _emit_json(
            out,
            {
                **_head(params),
                "n": n,
                "order": args.order,
                "columns": [
                    {"label": format_multipartition(c.label), "vector": c.vector.to_json()}
                    for c in cols
                ],
            },
        )
    else:
        for c in cols:
            out.write(f"G({format_multipartition(c.label)}) =\n")
            for t in c.vector.to_json():
                out.write(f"  {t['mp']}\t{t['coef']}\n")


def cmd_decmat(args, out):
    """decomposition matrix at rank n (rows: all d-partitions, columns: crystal labels)"""
    params = _params(args)
    n = _rank(args)
    mat = decomposition_matrix(params, n, OrderKind.parse(args.order))
    if args.format == "json":
        _emit_json(out, {**_head(params), "n": n, "order": args.order, **mat.to_json(args.with_q)})
    elif args.format == "tsv" and not args.with_q:
        for line in mat.tsv_lines():
            out.write(line + "\n")
    else:
        cols = [format_multipartition(c) for c in mat.columns]
        out.write("\t".join([""] + cols) + "\n")
        for mu in mat.rows:
            cells = [
                str(mat.poly(mu, lam)) if args.with_q else str(mat.entry(mu, lam))
                for lam in mat.columns
            ]
            out.write("\t".join([format_multipartition(mu)] + cells) + "\n")


def cmd_verify_cbs(args, out):
    """check that the FLOTW labels give a canonical basic set (exit 1 on failure)"""
    params = _params(args)
    report = verify_cbs(params, _rank(args))
    if args.format == "json":
        _emit_json(out, report.to_json())
    else:
        for c in report.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.name}"
            out.write(line + (f": {c.detail}" if c.detail else "") + "\n")
    return 0 if report.passed else 1


def cmd_basicset(args, out):
    """canonical basic set for Weyl type A, B or D"""
    if args.weyl_type is None:
        raise UsageError("basicset requires --type A|B|D")
    _need(args, "e")
    n = _rank(args)
    if args.e < 2:
        raise DomainError("e must be at least 2")
    t = args.weyl_type
    if t == "A":
        labels = [format_partition(p) for p in basic_set_A(args.e, n)]
        text = labels
    elif t == "B":
        labels = [format_multipartition(mp) for mp in basic_set_B(args.e, n)]
        text = labels
    else:
        ds = basic_set_D(args.e, n)
        labels = [lab.to_json() for lab in ds]
        text = [str(lab) for lab in ds]
    if args.format == "json":
        _emit_json(out, {"type": t, "e": args.e, "n": n, "labels": labels})
    else:
        for s in text:
            out.write(s + "\n")


HANDLERS = {
    "enumerate": cmd_enumerate,
    "crystal": cmd_crystal,
    "flotw": cmd_flotw,
    "kleshchev": cmd_kleshchev,
    "aseq": cmd_aseq,
    "avalue": cmd_avalue,
    "avector": cmd_avector,
    "canbasis": cmd_canbasis,
    "decmat": cmd_decmat,
    "verify-cbs": cmd_verify_cbs,
    "basicset": cmd_basicset,
}


def _glue_values(argv: list[str]) -> list[str]:
    # multipartition text may start with "-" (empty first component)
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--mp":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--mp={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _glue_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format not in FORMATS[args.command]:
        err.write(f"akfock {args.command}: format {args.format!r} not supported\n")
        return 2
    try:
        status = HANDLERS[args.command](args, out)
    except UsageError as exc:
        err.write(f"akfock {args.command}: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(f"akfock {args.command}: error: {exc}\n")
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
