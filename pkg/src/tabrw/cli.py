"""Command-line entry point ``tabrw``.

Exit codes: 0 on success (or when a checked property holds), 1 when a
property check finds violations, 2 on usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from tabrw import congruence, crystal, diagrams as dg
from tabrw.diagrams import DiagramError, StringOfColumns, embed, reading_sw
from tabrw.rewriting import NotApplicable, Redex, RewriteError, normal_form, verify_trace
from tabrw.structures import CarrierError, get_sds
from tabrw.words import LetterError, format_word, parse_word

SYSTEMS = ("fs", "rbt")
SUITES = ("cross-section", "fs-convergence", "rbt-convergence", "morphism",
          "commutation", "associativity", "axioms", "crystal", "trace")


class UsageError(Exception):
    pass


# -- input helpers -------------------------------------------------------

def _system(name):
    if name == "fs":
        from tabrw.jdt import FS
        return FS
    from tabrw.rbt import RBT
    return RBT


def _read_json_arg(text: str):
    """Inline JSON, or a path to a JSON file."""
    text = text.strip()
    if not text.startswith(("{", "[")) and os.path.exists(text):
        text = Path(text).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None


def _word(args):
    return parse_word(args.word, args.n)


def _infer_n(args, letters) -> int:
    if args.n is not None:
        return args.n
    return max(letters, default=1)


def _diagram_input(args, default_gluing: str):
    """The diagram named by --word (embedded) or --diagram, plus n."""
    if (args.word is None) == (args.diagram is None):
        raise UsageError("give exactly one of --word or --diagram")
    if args.diagram is not None:
        w, n = dg.from_json_obj(_read_json_arg(args.diagram))
        if args.n is not None and args.n != n:
            raise UsageError(f"--n {args.n} disagrees with the diagram's n={n}")
        return w, n
    u = _word(args)
    return embed(u, getattr(args, "embed", None) or default_gluing), _infer_n(args, u)


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _show(w: StringOfColumns, n: int, fmt: str) -> str:
    if fmt == "json":
        return dg.to_json(w, n)
    if fmt == "dot":
        raise UsageError("dot output is only available for crystal graphs")
    return dg.render_ascii(w) if w else "λ"


# -- subcommands ---------------------------------------------------------

def cmd_insert(args):
    S = get_sds(args.sds)
    u = _word(args)
    n = _infer_n(args, u)
    d = S.constructor(u)
    _emit(args, _show(d, n, args.format))
    return 0


def cmd_rectify(args):
    sys_ = _system(args.system)
    w, n = _diagram_input(args, "s" if args.system == "fs" else "young")
    if args.system == "fs":
        if w and not dg.is_skew(w):
            raise DiagramError(f"{w} is not a skew tableau")
    else:
        from tabrw.rbt import _is_young_embedding
        if w and not (dg.is_young(w) or _is_young_embedding(w)):
            raise DiagramError(f"{w} is neither Young nor a Young-glued word")
    if args.strategy == "random" and args.seed is None:
        raise UsageError("--strategy random needs --seed")
    d, trace = normal_form(sys_, w, args.strategy, args.seed)
    if args.trace:
        obj = {
            "system": args.system,
            "n": n,
            "initial": dg.to_json_obj(w, n),
            "steps": trace.to_json_obj(n),
        }
        _emit(args, json.dumps(obj, indent=2))
    else:
        _emit(args, _show(d, n, args.format))
    return 0


def cmd_render(args):
    w, n = _diagram_input(args, "s")
    if args.format == "json":
        _emit(args, dg.to_json(w, n))
        return 0
    flags = ", ".join(sorted(dg.classify(w))) if w else ""
    _emit(args, f"{w}\nreading: {format_word(reading_sw(w)) or 'λ'}\n"
                f"classes: {flags}\n{_show(w, n, 'ascii')}")
    return 0


def cmd_congruent(args):
    u, v = parse_word(args.u, args.n), parse_word(args.v, args.n)
    n = args.n or max(u + v, default=1)
    ok = congruence.congruent(args.monoid, n, u, v)
    _emit(args, "true" if ok else "false")
    return 0


def _crystal_input(args, fam_spec):
    level = fam_spec.partition("-")[2] or "word"
    if level == "word":
        if args.word is None:
            raise UsageError("word-level families need --word")
        u = _word(args)
        return u, _infer_n(args, u)
    return _diagram_input(args, "s")


def _crystal_repr(x, level, n, fmt):
    if level == "word":
        return format_word(x) or "λ"
    return _show(x, n, fmt)


def cmd_crystal_op(args):
    x, n = _crystal_input(args, args.family)
    fam = crystal.family(args.family, n)
    fn = {"e": crystal.e, "f": crystal.f, "eps": crystal.eps, "phi": crystal.phi}[args.op]
    out = fn(fam, args.i, x)
    if isinstance(out, int):
        _emit(args, str(out))
    elif out is None:
        _emit(args, "none")
    else:
        _emit(args, _crystal_repr(out, fam.level, n, args.format))
    return 0


def cmd_crystal_graph(args):
    x, n = _crystal_input(args, args.family)
    fam = crystal.family(args.family, n)
    g = crystal.component(fam, x, max_vertices=args.max_vertices)
    if args.format == "json":
        _emit(args, g.to_json())
    elif args.format == "dot":
        _emit(args, g.to_dot())
    else:
        lines = [f"{len(g)} vertices, {len(g.edges)} edges"]
        lines += [f"{g._label(a)} -{i}-> {g._label(b)}" for a, i, b in g.edges]
        _emit(args, "\n".join(lines))
    return 0


# -- property suites -----------------------------------------------------

def _suite(args):
    from tabrw import jdt, rbt, structures
    from tabrw.words import words_up_to

    n, maxlen = args.n, args.maxlen
    bad: list = []
    if args.suite == "cross-section":
        S = structures.Y_ROW if args.monoid == "plactic" else structures.Q_ROW
        for length in range(maxlen + 1):
            for cls in congruence.classes(args.monoid, n, length):
                images = {S.constructor(u) for u in cls}
                if len(images) != 1:
                    bad.append({"class": [format_word(u) for u in cls]})
            seen: dict = {}
            for cls in congruence.classes(args.monoid, n, length):
                t = S.constructor(cls[0])
                if t in seen:
                    bad.append({"merged": [format_word(cls[0]), format_word(seen[t])]})
                seen[t] = cls[0]
    elif args.suite in ("fs-convergence", "rbt-convergence"):
        fs = args.suite == "fs-convergence"
        for u in words_up_to(n, maxlen):
            if not u:
                continue
            target = (structures.Y_ROW if fs else structures.Q_ROW).constructor(u)
            start = embed(u, "s" if fs else "young")
            for strat, seed in (("leftmost", None), ("rightmost", None), ("random", args.seed)):
                got = (jdt.rect if fs else rbt.rba)(start, strat, seed)
                if got != target:
                    bad.append({"word": format_word(u), "strategy": strat, "got": str(got)})
    elif args.suite == "morphism":
        for u in words_up_to(n, maxlen):
            d = structures.DSK_ROW.constructor(u)
            t = structures.Y_ROW.constructor(u)
            for x in range(1, n + 1):
                if jdt.rect(structures.DSK_ROW.one(d, x)) != structures.Y_ROW.one(jdt.rect(d), x):
                    bad.append({"word": format_word(u), "x": x, "map": "rect"})
                if rbt.rba(structures.Y_ROW.one(t, x)) != structures.Q_ROW.one(rbt.rba(t), x):
                    bad.append({"word": format_word(u), "x": x, "map": "rba"})
    elif args.suite == "commutation":
        for right, left in structures.PAIRS:
            for d, x, y in structures.check_commutation(right, left, n, maxlen):
                bad.append({"pair": right.name, "diagram": str(d), "x": x, "y": y})
    elif args.suite == "associativity":
        for S in structures.SDS.values():
            for a, b, c in structures.check_associativity(S, n, seed=args.seed or 0):
                bad.append({"sds": S.name, "triple": [str(a), str(b), str(c)]})
    elif args.suite == "axioms":
        for S in structures.SDS.values():
            bad += [{"sds": S.name, "violation": str(v)} for v in
                    structures.check_axioms(S, n, maxlen)]
    elif args.suite == "crystal":
        corpus = list(words_up_to(n, maxlen))
        for kind, S in (("K", structures.Y_ROW), ("qK", structures.Q_ROW)):
            for v in crystal.crystal_commutes_with_sds(kind, S, corpus, n):
                bad.append({"family": kind, "word": format_word(v[0]), "op": v[1]})
    elif args.suite == "trace":
        if not args.input:
            raise UsageError("the trace suite needs --input")
        bad += _check_trace(_read_json_arg(args.input))
    return bad


def _check_trace(obj) -> list:
    from tabrw.rewriting import ReductionTrace, Step

    try:
        sys_ = _system(obj["system"])
        w, n = dg.from_json_obj(obj["initial"])
        steps = []
        for s in obj["steps"]:
            d, _ = dg.from_json_obj(s["diagram"])
            steps.append(Step(Redex(s["rule"], int(s["index"])), d, sys_.measure(d)))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad trace JSON: {exc}") from None
    return [] if verify_trace(sys_, ReductionTrace(w, steps)) else [{"trace": "does not replay"}]


def cmd_check(args):
    bad = _suite(args)
    report = {"suite": args.suite, "n": args.n, "maxlen": args.maxlen,
              "violations": len(bad), "witnesses": bad[:20]}
    _emit(args, json.dumps(report, indent=2))
    return 1 if bad else 0


# -- parser --------------------------------------------------------------

def _add_common(p, word=True, diagram=False, fmt=("ascii", "json")):
    if word:
        p.add_argument("--word", help="word in digit form (3121312) or comma form")
    if diagram:
        p.add_argument("--diagram", help="diagram JSON, inline or a file path")
    p.add_argument("--n", type=int, help="alphabet size")
    p.add_argument("--format", "--render", dest="format", choices=fmt, default=fmt[0])
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tabrw", description="String-of-columns tableau rewriting.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", help="build a diagram by folding an insertion over a word")
    p.add_argument("--sds", default="yrow", help="yrow, ycol, qrow, qleft, dskrow or dskcol")
    _add_common(p)
    p.set_defaults(func=cmd_insert)

    for name in ("rectify", "nf"):
        p = sub.add_parser(name, help="normal form under FS or RBT")
        p.add_argument("--system", choices=SYSTEMS, default="fs")
        p.add_argument("--strategy", choices=("leftmost", "rightmost", "random"), default="leftmost")
        p.add_argument("--seed", type=int)
        p.add_argument("--embed", choices=tuple(dg.GLUING_MAPS), help="gluing used for --word")
        p.add_argument("--trace", action="store_true", help="print the reduction trace as JSON")
        _add_common(p, diagram=True)
        p.set_defaults(func=cmd_rectify)

    p = sub.add_parser("render", help="draw a diagram and list its classes")
    p.add_argument("--embed", choices=tuple(dg.GLUING_MAPS), help="gluing used for --word")
    _add_common(p, diagram=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("congruent", help="decide plactic or hypoplactic congruence")
    p.add_argument("--monoid", choices=congruence.RELATIONS, default="plactic")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_congruent)

    p = sub.add_parser("crystal", help="crystal operators and graphs")
    csub = p.add_subparsers(dest="crystal_command", required=True)
    q = csub.add_parser("op", help="apply e, f, eps or phi")
    q.add_argument("--family", default="K-word", help="K|qK - word|columns|columns-restricted")
    q.add_argument("--op", choices=("e", "f", "eps", "phi"), required=True)
    q.add_argument("--i", type=int, required=True)
    _add_common(q, diagram=True)
    q.set_defaults(func=cmd_crystal_op)
    q = csub.add_parser("graph", help="connected component of the crystal graph")
    q.add_argument("--family", default="K-word")
    q.add_argument("--max-vertices", type=int, default=10000)
    _add_common(q, diagram=True, fmt=("dot", "json", "ascii"))
    q.set_defaults(func=cmd_crystal_graph)

    p = sub.add_parser("check", help="run an exhaustive property suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--monoid", choices=congruence.RELATIONS, default="plactic")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--maxlen", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", help="trace JSON for the trace suite")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, LetterError, DiagramError, CarrierError, crystal.CrystalError,
            NotApplicable, KeyError, ValueError) as exc:
        print(f"tabrw: error: {exc}", file=sys.stderr)
        return 2
    except (RewriteError, congruence.SearchExhausted, crystal.ComponentTooLarge) as exc:
        print(f"tabrw: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
