"""Line-oriented text format for universes, soft sets and morphisms.

::

    # comments start with '#'
    universe u1 u2
    softset F
      param a1 = u1
      param a2 =
    end
    morphism f : F -> G
      map a1 -> b1
    end

Later blocks may refer to soft sets defined earlier.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import SoftMorphism, SoftSet, Universe, make_morphism, make_soft_set
from .errors import DuplicateName, DuplicateParameter, SoftSetError, UnknownReference, WorkspaceSyntaxError


@dataclass
class Workspace:
    universe: Universe
    soft_sets: dict[str, SoftSet] = field(default_factory=dict)
    morphisms: dict[str, SoftMorphism] = field(default_factory=dict)

    def soft_set(self, name: str) -> SoftSet:
        try:
            return self.soft_sets[name]
        except KeyError:
            raise UnknownReference(f"no soft set named {name!r}") from None

    def morphism(self, name: str) -> SoftMorphism:
        try:
            return self.morphisms[name]
        except KeyError:
            raise UnknownReference(f"no morphism named {name!r}") from None

    def add_soft_set(self, s: SoftSet) -> None:
        if s.universe != self.universe:
            raise SoftSetError(f"soft set {s.name!r} is not over the workspace universe")
        if s.name in self.soft_sets:
            raise DuplicateName(f"soft set {s.name!r} defined twice")
        self.soft_sets[s.name] = s

    def add_morphism(self, name: str, m: SoftMorphism) -> None:
        if m.source.universe != self.universe:
            raise SoftSetError(f"morphism {name!r} is not over the workspace universe")
        if name in self.morphisms:
            raise DuplicateName(f"morphism {name!r} defined twice")
        self.morphisms[name] = m


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_workspace(text: str) -> Workspace:
    ws: Workspace | None = None
    block: str | None = None  # "softset" or "morphism" while inside a block
    header: list[str] = []
    header_line = 0
    entries: list[tuple[int, str, list[str]]] = []

    def finish() -> None:
        assert ws is not None
        try:
            if block == "softset":
                name = header[1]
                if name in ws.soft_sets:
                    raise DuplicateName(f"soft set {name!r} defined twice")
                assignments = []
                seen = set()
                for lineno, param, members in entries:
                    if param in seen:
                        err = DuplicateParameter(f"parameter {param!r} assigned twice in soft set {name!r}")
                        err.line = lineno
                        raise err
                    seen.add(param)
                    try:
                        assignments.append((param, ws.universe.subset(members)))
                    except SoftSetError as err:
                        err.line = lineno
                        raise
                ws.add_soft_set(make_soft_set(ws.universe, name, assignments))
            else:
                name, src, tgt = header[1], header[3], header[5]
                if name in ws.morphisms:
                    raise DuplicateName(f"morphism {name!r} defined twice")
                source, target = ws.soft_set(src), ws.soft_set(tgt)
                mapping: dict[str, str] = {}
                for lineno, a, (b,) in entries:
                    if a in mapping:
                        raise WorkspaceSyntaxError(lineno, f"parameter {a!r} mapped twice")
                    mapping[a] = b
                ws.add_morphism(name, make_morphism(source, mapping, target))
        except SoftSetError as err:
            if err.line is None:
                err.line = header_line
            raise

    for lineno, tokens in _lines(text):
        keyword = tokens[0]
        if ws is None:
            if keyword != "universe":
                raise WorkspaceSyntaxError(lineno, "document must start with a 'universe' line")
            try:
                ws = Workspace(Universe(tuple(tokens[1:])))
            except SoftSetError as err:
                err.line = lineno
                raise
            continue
        if block is None:
            if keyword == "universe":
                raise WorkspaceSyntaxError(lineno, "universe declared more than once")
            if keyword == "softset":
                if len(tokens) != 2:
                    raise WorkspaceSyntaxError(lineno, "expected 'softset <name>'")
            elif keyword == "morphism":
                if len(tokens) != 6 or tokens[2] != ":" or tokens[4] != "->":
                    raise WorkspaceSyntaxError(lineno, "expected 'morphism <name> : <src> -> <tgt>'")
            else:
                raise WorkspaceSyntaxError(lineno, f"unexpected {keyword!r} outside a block")
            block, header, header_line, entries = keyword, tokens, lineno, []
            continue
        if keyword == "end":
            if len(tokens) != 1:
                raise WorkspaceSyntaxError(lineno, "expected 'end'")
            finish()
            block = None
        elif block == "softset" and keyword == "param":
            if len(tokens) < 3 or tokens[2] != "=":
                raise WorkspaceSyntaxError(lineno, "expected 'param <name> = <elem> ...'")
            entries.append((lineno, tokens[1], tokens[3:]))
        elif block == "morphism" and keyword == "map":
            if len(tokens) != 4 or tokens[2] != "->":
                raise WorkspaceSyntaxError(lineno, "expected 'map <param> -> <param>'")
            entries.append((lineno, tokens[1], [tokens[3]]))
        else:
            raise WorkspaceSyntaxError(lineno, f"unexpected {keyword!r} inside {block} block")

    if ws is None:
        raise WorkspaceSyntaxError(1, "missing 'universe' line")
    if block is not None:
        raise WorkspaceSyntaxError(header_line, f"{block} block is never closed with 'end'")
    return ws


def format_universe(u: Universe) -> str:
    return " ".join(["universe", *u.elements])


def format_soft_set(s: SoftSet) -> str:
    lines = [f"softset {s.name}"]
    for p, img in zip(s.params, s.images):
        lines.append(" ".join([f"  param {p} =", *img.members]))
    lines.append("end")
    return "\n".join(lines)


def format_morphism(name: str, m: SoftMorphism) -> str:
    lines = [f"morphism {name} : {m.source.name} -> {m.target.name}"]
    lines.extend(f"  map {a} -> {b}" for a, b in zip(m.source.params, m.values))
    lines.append("end")
    return "\n".join(lines)


def print_workspace(ws: Workspace) -> str:
    blocks = [format_universe(ws.universe)]
    blocks.extend(format_soft_set(s) for s in ws.soft_sets.values())
    blocks.extend(format_morphism(n, m) for n, m in ws.morphisms.items())
    return "\n\n".join(blocks) + "\n"
