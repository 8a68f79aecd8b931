"""Command line interface.

Exit status: 0 on success, 1 when a check comes out negative (an oracle
disagreement, or a requested witness that cannot exist), 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import morphisms as mc
from . import objects as oc
from .check import oracle_check
from .core import SoftMorphism, SoftSet, Universe
from .errors import (
    AlreadyEpi,
    AlreadyMono,
    MorphismsEqual,
    NotACoseparator,
    NotASeparator,
    SoftSetError,
)
from .homs import enumerate_hom, generate_object_family
from .workspace import (
    Workspace,
    format_morphism,
    format_soft_set,
    format_universe,
    parse_workspace,
    print_workspace,
)

NO_WITNESS = (AlreadyEpi, AlreadyMono, NotASeparator, NotACoseparator, MorphismsEqual)


class InputError(Exception):
    pass


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _map_text(m: SoftMorphism) -> str:
    return ",".join(f"{a}->{b}" for a, b in zip(m.source.params, m.values))


class Output:
    def __init__(self, stream: TextIO, porcelain: bool) -> None:
        self.stream = stream
        self.porcelain = porcelain

    def field(self, key: str, value: object) -> None:
        if self.porcelain:
            self.stream.write(f"{key.replace('-', '_')}={value}\n")
        else:
            self.stream.write(f"{key}: {value}\n")

    def text(self, text: str) -> None:
        self.stream.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror}") from None


def _load(path: str) -> Workspace:
    return parse_workspace(_read(path))


def _fresh(name: str, taken) -> str:
    candidate, i = name, 0
    while candidate in taken:
        i += 1
        candidate = f"{name}{i}"
    return candidate


def _document(universe: Universe, sets: Sequence[SoftSet], morphisms: Sequence[tuple[str, SoftMorphism]]) -> str:
    seen: dict[str, SoftSet] = {}
    for s in sets:
        seen.setdefault(s.name, s)
    blocks = [format_universe(universe)]
    blocks += [format_soft_set(s) for s in seen.values()]
    blocks += [format_morphism(n, m) for n, m in morphisms]
    return "\n\n".join(blocks) + "\n"


def cmd_validate(args, out: Output) -> int:
    ws = _load(args.file)
    out.field("status", "ok")
    out.field("universe", len(ws.universe))
    out.field("softsets", len(ws.soft_sets))
    out.field("morphisms", len(ws.morphisms))
    return 0


def cmd_classify_object(args, out: Output) -> int:
    ws = _load(args.file)
    c = oc.classify_object(ws.soft_set(args.name))
    out.field("object", args.name)
    out.field("initial", _yes(c.is_initial))
    out.field("terminal", _yes(c.is_terminal))
    out.field("zero", _yes(c.is_zero))
    out.field("separator", _yes(c.is_separator))
    out.field("coseparator", _yes(c.is_coseparator))
    if c.coseparator_witness_params:
        c1, c2 = c.coseparator_witness_params
        out.field("coseparator-witness", f"{c1},{c2}" if out.porcelain else f"{c1} {c2}")
    return 0


def cmd_classify_morphism(args, out: Output) -> int:
    ws = _load(args.file)
    c = mc.classify_morphism(ws.morphism(args.morphism))
    out.field("morphism", args.morphism)
    out.field("epi", _yes(c.is_epi))
    out.field("mono", _yes(c.is_mono))
    out.field("bimorphism", _yes(c.is_bimorphism))
    out.field("iso", _yes(c.is_iso))
    return 0


def cmd_hom(args, out: Output) -> int:
    ws = _load(args.file)
    source, target = ws.soft_set(args.source), ws.soft_set(args.target)
    homs = enumerate_hom(source, target)
    if args.count or out.porcelain:
        out.field("count", len(homs))
    if args.list:
        if out.porcelain:
            for m in homs:
                out.field("morphism", _map_text(m))
        else:
            out.text("\n\n".join(format_morphism(f"h{i}", m) for i, m in enumerate(homs, 1)))
            out.text("\n" if homs else "")
    return 0


def cmd_witness(args, out: Output) -> int:
    ws = _load(args.file)
    if args.kind in ("epi", "mono"):
        if not args.morphism:
            raise InputError(f"witness {args.kind} needs --morphism")
        m = ws.morphism(args.morphism)
        aux_name = _fresh("H", ws.soft_sets)
        if args.kind == "epi":
            cx = mc.epi_counterexample(m, aux_name)
            sets = [m.target, cx.auxiliary]
        else:
            cx = mc.mono_counterexample(m, aux_name)
            sets = [cx.auxiliary, m.source]
        if out.porcelain:
            out.field("auxiliary", cx.auxiliary.name)
            out.field("left", _map_text(cx.left))
            out.field("right", _map_text(cx.right))
        else:
            out.text(_document(ws.universe, sets, [("beta", cx.left), ("gamma", cx.right)]))
        return 0
    if not args.object or not args.pair:
        raise InputError(f"witness {args.kind} needs --object and --pair")
    probe = ws.soft_set(args.object)
    alpha, beta = (ws.morphism(n) for n in args.pair)
    if args.kind == "separator":
        gamma = mc.separator_witness(probe, alpha, beta)
    else:
        gamma = mc.coseparator_witness(probe, alpha, beta)
    if out.porcelain:
        out.field("witness", _map_text(gamma))
    else:
        out.text(_document(ws.universe, [gamma.source, gamma.target], [("gamma", gamma)]))
    return 0


def _universe(args) -> Universe:
    if args.universe is not None:
        return Universe(tuple(args.universe))
    if args.file is None:
        raise InputError("give a workspace file or --universe")
    return _load(args.file).universe


def cmd_family(args, out: Output) -> int:
    family = generate_object_family(_universe(args), args.max_params)
    if out.porcelain:
        out.field("universe", len(family.universe))
        out.field("max_params", family.max_params)
        out.field("members", len(family))
    else:
        out.text(print_workspace(Workspace(family.universe, {s.name: s for s in family})))
    return 0


def cmd_oracle_check(args, out: Output) -> int:
    extra_sets: list[SoftSet] = []
    extra_morphisms: list[SoftMorphism] = []
    if args.universe is not None:
        universe = Universe(tuple(args.universe))
    elif args.file is not None:
        ws = _load(args.file)
        universe = ws.universe
        extra_sets = list(ws.soft_sets.values())
        extra_morphisms = list(ws.morphisms.values())
    else:
        raise InputError("give a workspace file or --universe")
    report = oracle_check(universe, args.max_params, extra_sets, extra_morphisms)
    if out.porcelain:
        out.field("family", len(report.family))
    else:
        out.field(
            "family",
            f"{len(report.family)} soft sets (|U|={len(universe)}, max params {args.max_params})",
        )
    for key, t in report.tallies.items():
        if out.porcelain:
            out.field(f"{key}_agree", t.agree)
            out.field(f"{key}_total", t.total)
        else:
            out.field(key, f"{t.agree}/{t.total} agree")
        for d in t.disagreements:
            out.field("disagreement", f"{key}:{d}" if out.porcelain else f"{key} {d}")
    out.field("result", "agree" if report.ok else "disagree")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--porcelain", action="store_true", help="print key=value lines")

    parser = argparse.ArgumentParser(
        prog="softcat", description="Special objects and morphisms in the category of soft sets."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="parse and validate a workspace file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify-object", parents=[common], help="initial/terminal/separator/...")
    p.add_argument("file")
    p.add_argument("--name", required=True)
    p.set_defaults(func=cmd_classify_object)

    p = sub.add_parser("classify-morphism", parents=[common], help="epi/mono/bimorphism/iso")
    p.add_argument("file")
    p.add_argument("--morphism", required=True)
    p.set_defaults(func=cmd_classify_morphism)

    p = sub.add_parser("hom", parents=[common], help="count or list the morphisms between two soft sets")
    p.add_argument("file")
    p.add_argument("source")
    p.add_argument("target")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("witness", parents=[common], help="build cancellation or distinguishing witnesses")
    p.add_argument("kind", choices=["epi", "mono", "separator", "coseparator"])
    p.add_argument("file")
    p.add_argument("--morphism", help="subject morphism (epi, mono)")
    p.add_argument("--object", help="separator or co-separator soft set")
    p.add_argument("--pair", nargs=2, metavar=("ALPHA", "BETA"), help="distinct parallel morphisms")
    p.set_defaults(func=cmd_witness)

    for name, func, helptext in [
        ("family", cmd_family, "print the exhaustive family of soft sets"),
        ("oracle-check", cmd_oracle_check, "compare every characterization with its oracle"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file", nargs="?", help="workspace file supplying the universe")
        p.add_argument("--universe", nargs="*", metavar="ELEM", help="universe elements")
        p.add_argument("--max-params", type=int, required=True)
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if getattr(args, "max_params", 0) < 0:
        stderr.write("softcat: error: --max-params must be non-negative\n")
        return 2
    out = Output(stdout, args.porcelain)
    try:
        return args.func(args, out)
    except NO_WITNESS as err:
        stderr.write(f"softcat: {type(err).__name__}: {err}\n")
        return 1
    except (SoftSetError, InputError) as err:
        stderr.write(f"softcat: error: {type(err).__name__}: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
