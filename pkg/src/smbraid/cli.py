"""Command-line front end.

Subcommands map one-to-one onto the library's analysis entry points:

* ``eval``        -- image of a word under a chosen representation/parameters
* ``relcheck``    -- verify the seven defining relation families
* ``kernel2``     -- bounded SM_2 kernel grid search
* ``unfaith``     -- unfaithfulness witness search for one-parameter families
* ``prop8``       -- compare matrix vs twisted-cyclic kernel searches
* ``multinomial`` -- scalar character value of tau_1^p sigma_1^q, both routes
* ``wordeq3``     -- SM_3 equality oracle
* ``shape``       -- block decomposition and kernel-power shape rewriting

Every command accepts ``--json`` and then emits exactly one JSON document
with sorted keys, so identical inputs produce byte-identical output.  Exit
codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, phi, words
from .algebra import element_text
from .reps import BraidRep, cyclic_rep, as_formal, rep_from_selector
from .scalars import format_scalar, parse_scalar

DEFAULT_PMAX = 6
DEFAULT_QMAX = 12
DEFAULT_SMAX = 4
DEFAULT_LMAX = 6
DEFAULT_RMAX = 8


def _emit(doc: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _params(args: argparse.Namespace) -> phi.PhiParams:
    return phi.PhiParams.parse(args.a, args.b, args.c)


def _select_rep(args: argparse.Namespace, n: int) -> BraidRep:
    return rep_from_selector(args.rep, n)


def _apply_backend(rep: BraidRep, backend: str | None) -> BraidRep:
    if backend is None:
        return rep
    if backend == "formal":
        return as_formal(rep)
    if backend == "matrix":
        if rep.backend != "matrix":
            raise ValueError(f"selected representation has backend {rep.backend!r}, not matrix")
        return rep
    if backend.startswith("cyclic:"):
        parts = backend.split(":")
        if len(parts) != 3:
            raise ValueError("cyclic backend selector is cyclic:<s>:<ds>")
        return cyclic_rep(int(parts[1]), parse_scalar(parts[2]), n=rep.n)
    raise ValueError(f"unknown backend selector {backend!r}")


def _witness_doc(w: analysis.UnfaithfulnessWitness) -> dict:
    return {
        "w1": w.w1.text(),
        "w2": w.w2.text(),
        "certificate": w.certificate.text(),
        "image": element_text(w.image),
    }


def cmd_eval(args: argparse.Namespace) -> int:
    rep = _select_rep(args, args.n)
    params = _params(args)
    w = words.parse_word(args.word, args.n)
    image = phi.phi_eval(rep, params, w)
    doc = {
        "command": "eval",
        "n": args.n,
        "rep": rep.name,
        "params": [format_scalar(params.a), format_scalar(params.b), format_scalar(params.c)],
        "word": w.text(),
        "image": element_text(image),
        "is_identity": image.is_identity(),
    }
    _emit(doc, [f"image: {doc['image']}", f"is_identity: {doc['is_identity']}"], args.json)
    return 0


def cmd_relcheck(args: argparse.Namespace) -> int:
    rep = _select_rep(args, args.n)
    report = phi.check_relations(rep, _params(args))
    doc = {
        "command": "relcheck",
        "n": args.n,
        "rep": rep.name,
        "params": report.params.text(),
        "families_passed": report.families_passed(),
        "all_pass": report.all_pass,
        "checks": [
            {
                "family": c.family,
                "name": c.name,
                "indices": list(c.indices),
                "lhs": c.lhs.text(),
                "rhs": c.rhs.text(),
                "passed": c.passed,
            }
            for c in report.checks
        ],
    }
    _emit(doc, [report.format_text()], args.json)
    return 0 if report.all_pass else 1


def cmd_kernel2(args: argparse.Namespace) -> int:
    rep = _apply_backend(_select_rep(args, 2), args.backend)
    params = _params(args)
    report = analysis.kernel_search_sm2(rep, params, args.pmax, args.qmax)
    doc = {
        "command": "kernel2",
        "rep": rep.name,
        "params": params.text(),
        **report.to_dict(),
    }
    lines = [
        f"bounds: p <= {report.p_max}, |q| <= {report.q_max} (bounded search)",
        f"hits: {[tuple(h) for h in report.hits]}",
        f"minimal_generator: {report.minimal_generator}",
        f"cyclic_ok: {report.cyclic_structure_verified}",
    ]
    _emit(doc, lines, args.json)
    return 0


def cmd_unfaith(args: argparse.Namespace) -> int:
    rep = _select_rep(args, args.n)
    value = parse_scalar(args.val)
    doc: dict = {
        "command": "unfaith",
        "mode": args.mode,
        "value": format_scalar(value),
        "rep": rep.name,
        "bounds": {"s_max": args.smax, "len_max": args.lmax, "r_max": args.rmax},
        "bounded": True,
        "found": False,
        "kind": None,
        "witnesses": [],
    }
    r = analysis.root_of_unity_order(value, args.rmax)
    if r is not None:
        witness = analysis.unit_power_witness(rep, args.mode, value, r)
        doc.update(found=True, kind="root-of-unity", witnesses=[_witness_doc(witness)], order=r)
        lines = [
            f"root of unity: order {r}",
            f"witness: {witness.w1.text()!r} vs {witness.w2.text()!r}",
            f"certificate: {witness.certificate.text()}",
        ]
        _emit(doc, lines, args.json)
        return 0
    hit = analysis.find_scalar_witness(rep, args.mode, value, args.smax, args.lmax)
    if hit is None:
        _emit(doc, ["no witness found within bounds (bounded search, not a proof)"], args.json)
        return 0
    v, s = hit
    witness = analysis.scalar_power_witness(rep, args.mode, value, v, s)
    doc.update(found=True, kind="scalar-power", witnesses=[_witness_doc(witness)], v=v.text(), s=s)
    lines = [
        f"scalar power: rho({v.text() or 'empty word'}) = value^-({s}) * identity",
        f"witness: {witness.w1.text()!r} vs {witness.w2.text()!r}",
        f"certificate: {witness.certificate.text()}",
    ]
    _emit(doc, lines, args.json)
    return 0


def cmd_prop8(args: argparse.Namespace) -> int:
    from .algebra import parse_matrix
    from pathlib import Path

    m = parse_matrix(Path(args.matrix).read_text())
    params = _params(args)
    matrix_report, cyclic_report, equal = analysis.compare_matrix_cyclic_kernels(
        m, args.s, parse_scalar(args.ds), params, args.pmax, args.qmax
    )
    doc = {
        "command": "prop8",
        "matrix": m.text(),
        "s": args.s,
        "ds": args.ds,
        "params": params.text(),
        "matrix_report": matrix_report.to_dict(),
        "cyclic_report": cyclic_report.to_dict(),
        "equal": equal,
    }
    lines = [
        f"matrix backend hits: {[tuple(h) for h in matrix_report.hits]}",
        f"cyclic backend hits: {[tuple(h) for h in cyclic_report.hits]}",
        f"kernels agree within bounds: {equal}",
    ]
    _emit(doc, lines, args.json)
    return 0


def cmd_multinomial(args: argparse.Namespace) -> int:
    params = _params(args)
    d = parse_scalar(args.d)
    expand = phi.tau_power_expand(params, d, args.p, args.q)
    direct = phi.tau_power_direct(params, d, args.p, args.q)
    doc = {
        "command": "multinomial",
        "params": params.text(),
        "d": format_scalar(d),
        "p": args.p,
        "q": args.q,
        "expand": format_scalar(expand),
        "direct": format_scalar(direct),
        "agree": expand == direct,
        "is_one": expand == 1,
    }
    lines = [
        f"expanded sum: {doc['expand']}",
        f"direct power: {doc['direct']}",
        f"routes agree: {doc['agree']}; equals 1: {doc['is_one']}",
    ]
    _emit(doc, lines, args.json)
    return 0


def cmd_wordeq3(args: argparse.Namespace) -> int:
    w1 = words.parse_word(args.w1, 3)
    w2 = words.parse_word(args.w2, 3)
    equal = analysis.sm3_word_equality(w1, w2)
    cert = analysis.distinctness_certificate(w1, w2)
    doc = {
        "command": "wordeq3",
        "w1": w1.text(),
        "w2": w2.text(),
        "equal": equal,
        "certificate": cert.text() if cert else None,
    }
    if equal:
        lines = ["equal (under the faithful oracle instance)"]
    else:
        lines = [f"distinct{f' ({cert.text()})' if cert else ''}"]
    _emit(doc, lines, args.json)
    return 0


def cmd_shape(args: argparse.Namespace) -> int:
    w = words.parse_word(args.word, args.n)
    blocks = words.decompose_tau_blocks(w)
    sf = words.shape_form(w, args.p, args.q)
    doc = {
        "command": "shape",
        "n": args.n,
        "word": w.text(),
        "p": args.p,
        "q": args.q,
        "blocks": [
            {"tau_run": r, "v_power": m, "braid": u.text()} for r, m, u in sf.blocks
        ],
        "assembled": sf.assemble().text(),
        "stripped": sf.strip().text(),
    }
    lines = [
        f"tau blocks: prefix={blocks.prefix.text()!r}, "
        + ", ".join(f"(tau^{r}, {u.text()!r})" for r, u in blocks.blocks),
        f"shape blocks (v = t1^{args.p} s1^{args.q}): "
        + ", ".join(f"(tau^{r}, v^{m}, {u.text()!r})" for r, m, u in sf.blocks),
        f"assembled: {doc['assembled']!r}",
        f"stripped:  {doc['stripped']!r}",
    ]
    _emit(doc, lines, args.json)
    return 0


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", required=True, help="scalar a (rational or Laurent in t)")
    p.add_argument("--b", required=True, help="scalar b")
    p.add_argument("--c", required=True, help="scalar c")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smbraid",
        description="Exact computation with extensions of braid representations to the singular braid monoid.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the image of a word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rep", required=True)
    _add_params(p)
    p.add_argument("--word", required=True, help="token word, e.g. 't1 s1 S2'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("relcheck", help="verify the defining relations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rep", required=True)
    _add_params(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_relcheck)

    p = sub.add_parser("kernel2", help="bounded SM_2 kernel grid search")
    p.add_argument("--rep", required=True)
    _add_params(p)
    p.add_argument("--pmax", type=int, default=DEFAULT_PMAX)
    p.add_argument("--qmax", type=int, default=DEFAULT_QMAX)
    p.add_argument("--backend", default=None, help="formal | matrix | cyclic:<s>:<ds>")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_kernel2)

    p = sub.add_parser("unfaith", help="unfaithfulness witness for a one-parameter family")
    p.add_argument("--mode", choices=list(analysis.MODES), required=True)
    p.add_argument("--val", required=True, help="the nonzero parameter value")
    p.add_argument("--rep", required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--smax", type=int, default=DEFAULT_SMAX)
    p.add_argument("--lmax", type=int, default=DEFAULT_LMAX)
    p.add_argument("--rmax", type=int, default=DEFAULT_RMAX)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_unfaith)

    p = sub.add_parser("prop8", help="compare matrix and twisted-cyclic kernel searches")
    p.add_argument("--matrix", required=True, help="matrix file: one row per line, comma-separated scalars")
    p.add_argument("--s", type=int, required=True, help="minimal power with scalar image")
    p.add_argument("--ds", required=True, help="the scalar with matrix^s = ds * identity")
    _add_params(p)
    p.add_argument("--pmax", type=int, default=DEFAULT_PMAX)
    p.add_argument("--qmax", type=int, default=DEFAULT_QMAX)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_prop8)

    p = sub.add_parser("multinomial", help="scalar character value of tau_1^p sigma_1^q")
    _add_params(p)
    p.add_argument("--d", required=True, help="the unit scalar character value")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_multinomial)

    p = sub.add_parser("wordeq3", help="SM_3 word equality oracle")
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_wordeq3)

    p = sub.add_parser("shape", help="block decomposition and kernel-power shape")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_shape)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
