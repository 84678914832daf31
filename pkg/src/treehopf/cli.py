"""Command-line front end: tree enumeration, map evaluation, axiom sweeps
and the renormalization demo.

Exit codes: 0 on success, 1 on a failed verification, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .trees import enumerate_trees, parse, render, tree_name, catalan
from .algebra import (
    Element,
    Tag,
    TensorElement,
    element_to_json,
    embed_tree,
    from_word,
    tensor_to_json,
    word_degree,
    word_key,
)
from . import checks, hopf, qed, renorm


def _fmt_coeff(c: Fraction, latex: bool) -> str:
    if latex and c.denominator != 1:
        sign = "-" if c < 0 else ""
        return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return str(c)


def _fmt_word(w, latex: bool) -> str:
    if not w:
        return "1"
    sep = " \\cdot " if latex else "*"
    return sep.join(render(t) for t in w)


def format_element(x: Element, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(element_to_json(x), indent=2)
    latex = fmt == "latex"
    if not x.terms:
        return "0"
    parts = []
    for w, c in x.sorted_terms():
        body = _fmt_word(w, latex)
        if c == 1:
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{_fmt_coeff(c, latex)}*{body}" if not latex else f"{_fmt_coeff(c, latex)} {body}")
    joined = " + ".join(parts)
    return joined.replace("+ -", "- ")


def format_tensor(x: TensorElement, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(tensor_to_json(x), indent=2)
    latex = fmt == "latex"
    otimes = " \\otimes " if latex else " (x) "
    if not x.terms:
        return "0"
    parts = []
    for ws, c in x.sorted_terms():
        body = otimes.join(_fmt_word(w, latex) for w in ws)
        if c == 1:
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{_fmt_coeff(c, latex)} {body}" if latex else f"{_fmt_coeff(c, latex)}*{body}")
    joined = " + ".join(parts)
    return joined.replace("+ -", "- ")


MAP_TABLE = {
    # name -> (input tag, callable)
    "delta-p-gamma": (Tag.HGAMMA, hopf.delta_p_gamma),
    "delta-p-e": (Tag.HE, hopf.delta_p_e),
    "delta-alpha": (Tag.HALPHA, hopf.delta_alpha),
    "delta-small": (Tag.HALPHA, hopf.delta_small),
    "delta-alpha-nc": (Tag.HALPHA_NC, hopf.delta_alpha_nc),
    "delta-small-nc": (Tag.HALPHA_NC, hopf.delta_small_nc),
    "antipode-p-gamma": (Tag.HGAMMA, hopf.antipode_p_gamma),
    "antipode-p-e": (Tag.HE, hopf.antipode_p_e),
    "antipode-alpha": (Tag.HALPHA, hopf.antipode_alpha),
    "antipode-alpha-nc": (Tag.HALPHA_NC, hopf.antipode_alpha_nc),
    "delta-gamma-coaction": (Tag.HGAMMA, qed.delta_gamma_coaction),
    "delta-e-coaction": (Tag.HE, qed.delta_e_coaction),
    "delta-e": (Tag.HE, qed.electron_renorm_coaction),
    "delta-gamma": (Tag.HGAMMA, qed.photon_renorm_coaction),
    "sigma": (Tag.HGAMMA, qed.sigma),
}


def parse_element(tag: Tag, text: str) -> Element:
    """A single tree, or a product of trees joined with '*'."""
    text = text.strip()
    if text == "-":
        text = sys.stdin.read().strip()
    if "*" in text:
        out = None
        for chunk in text.split("*"):
            piece = embed_tree(tag, parse(chunk))
            out = piece if out is None else out * piece
        assert out is not None
        return out
    return embed_tree(tag, parse(text))


def cmd_enum(args) -> int:
    trees = enumerate_trees(args.n)
    if args.count_only:
        print(len(trees))
        return 0
    for k, t in enumerate(trees, start=1):
        print(f"Y{args.n}.{k}  {render(t)}")
    return 0


def cmd_map(args) -> int:
    if args.name not in MAP_TABLE:
        print(f"unknown map {args.name!r}; choose from {sorted(MAP_TABLE)}", file=sys.stderr)
        return 2
    tag, fn = MAP_TABLE[args.name]
    x = parse_element(tag, args.element)
    out = fn(x)
    if isinstance(out, Element):
        print(format_element(out, args.format))
    else:
        print(format_tensor(out, args.format))
    return 0


def cmd_check(args) -> int:
    maps = checks.default_maps()
    if args.corrupt:
        maps = checks.corrupt_map(maps, args.corrupt)
    try:
        results = checks.run_suite(args.suite, args.order, maps, args.jobs)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    ok = True
    for r in results:
        print(r.line())
        ok = ok and r.ok
    return 0 if ok else 1


def cmd_renorm(args) -> int:
    u_gamma = renorm.make_toy_character(Tag.HGAMMA, args.seed, args.ring, args.d, max_order=args.order)
    u_e = renorm.make_toy_character(Tag.HE, args.seed, args.ring, args.d, max_order=args.order)
    c_gamma = renorm.make_toy_character(Tag.HALPHA, args.seed + 1, "scalar", args.d, max_order=args.order)
    c_e = renorm.make_toy_character(Tag.HE, args.seed + 2, "scalar", args.d, max_order=args.order)
    photon = renorm.dyson_check_photon(u_gamma, c_gamma, args.order)
    electron = renorm.dyson_check_electron(u_e, c_gamma, c_e, args.order)
    report = {
        "seed": args.seed,
        "ring": args.ring,
        "order": args.order,
        "photon": photon.to_json(),
        "electron": electron.to_json(),
        "status": "ok" if photon.ok and electron.ok else "fail",
    }
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for rep in (photon, electron):
            status = "PASS" if rep.ok else f"FAIL at order {rep.first_failure}"
            print(f"{rep.which}: {status}")
    return 0 if photon.ok and electron.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="treehopf",
        description="Exact computer algebra on planar binary trees: Hopf "
        "structure maps, axiom sweeps, and the propagator renormalization demo.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("enum", help="list all trees of a given order")
    pe.add_argument("n", type=int)
    pe.add_argument("--count-only", action="store_true")
    pe.set_defaults(fn=cmd_enum)

    pm = sub.add_parser("map", help="apply a named structure map to an element")
    pm.add_argument("name")
    pm.add_argument("element", help="tree text, 'Yn.k', products with '*', or '-' for stdin")
    pm.add_argument("--format", choices=["ascii", "latex", "json"], default="ascii")
    pm.set_defaults(fn=cmd_map)

    pc = sub.add_parser("check", help="run a named axiom sweep")
    pc.add_argument("suite")
    pc.add_argument("--order", type=int, default=None)
    pc.add_argument("--jobs", type=int, default=1)
    pc.add_argument("--corrupt", default=None, help="negative control: corrupt one structure map")
    pc.set_defaults(fn=cmd_check)

    pr = sub.add_parser("renorm", help="order-by-order propagator consistency demo")
    pr.add_argument("--order", type=int, default=4)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--ring", choices=["scalar", "matrix"], default="scalar")
    pr.add_argument("--d", type=int, default=4)
    pr.add_argument("--format", choices=["ascii", "json"], default="json")
    pr.set_defaults(fn=cmd_renorm)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
