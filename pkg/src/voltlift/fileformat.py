"""Text format for voltage digraphs.

::

    # comment
    group cyclic <k> | group product <k1> ... <kn> | group table <m>
    <m rows of m indices, only after "group table">
    vertices <name> <name> ...
    arc <u> <v> <voltage>      # int | int,int,... | element index
    edge <u> <v> <voltage>     # arc u v g plus arc v u g^-1
"""

from __future__ import annotations

from .group import FiniteGroup, GroupError, cyclic, from_cayley_table, product
from .voltage import VoltageDigraph

__all__ = ["ParseError", "format_voltage_file", "parse", "parse_group"]


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"malformed {what}: {' '.join(tokens)!r}") from None


def parse_group(words: list[str], rows: list[list[int]] | None = None) -> FiniteGroup:
    """Group from declaration words, e.g. ``["product", "5", "5"]``."""
    kind, args = words[0], words[1:]
    if kind == "cyclic":
        if len(args) != 1:
            raise GroupError("cyclic takes exactly one order")
        return cyclic(int(args[0]))
    if kind == "product":
        return product([int(a) for a in args])
    if kind == "table":
        return from_cayley_table(rows)
    raise GroupError(f"unknown group kind {kind!r}")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse(text: str) -> VoltageDigraph:
    group: FiniteGroup | None = None
    labels: list[str] = []
    arcs: list[tuple] = []
    lines = list(_content_lines(text))
    i = 0
    while i < len(lines):
        lineno, words = lines[i]
        i += 1
        key = words[0]
        if key == "group":
            if group is not None:
                raise ParseError(lineno, "second group declaration")
            if len(words) < 2:
                raise ParseError(lineno, "group kind missing")
            rows = None
            if words[1] == "table":
                if len(words) != 3:
                    raise ParseError(lineno, "expected 'group table <m>'")
                m = _ints(words[2:], lineno, "table order")[0]
                if len(lines) - i < m:
                    raise ParseError(lineno, f"table needs {m} rows")
                rows = []
                for _ in range(m):
                    rlineno, rwords = lines[i]
                    i += 1
                    row = _ints(rwords, rlineno, "table row")
                    if len(row) != m:
                        raise ParseError(rlineno, f"table row must have {m} entries")
                    rows.append(row)
            else:
                _ints(words[2:], lineno, "group order")
            try:
                group = parse_group(words[1:], rows)
            except GroupError as exc:
                raise ParseError(lineno, str(exc)) from None
        elif key == "vertices":
            for name in words[1:]:
                if name in labels:
                    raise ParseError(lineno, f"duplicate vertex {name!r}")
                labels.append(name)
        elif key in ("arc", "edge"):
            if group is None:
                raise ParseError(lineno, "arc before group declaration")
            if len(words) != 4:
                raise ParseError(lineno, f"expected '{key} <u> <v> <voltage>'")
            _, u, v, volt = words
            for name in (u, v):
                if name not in labels:
                    raise ParseError(lineno, f"unknown vertex {name!r}")
            try:
                g = group.parse_element(volt)
            except GroupError as exc:
                raise ParseError(lineno, f"malformed voltage: {exc}") from None
            # build() takes element encodings, not indices
            arcs.append((u, v, group.element(g)))
            if key == "edge":
                arcs.append((v, u, group.element(group.inverse(g))))
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")
    if group is None:
        raise ParseError(len(text.splitlines()) or 1, "missing group declaration")
    return VoltageDigraph.build(labels, group, arcs)


def format_voltage_file(vd: VoltageDigraph) -> str:
    grp = vd.group
    out = [f"group {grp.describe()}"]
    if grp.kind == "table":
        out += [" ".join(str(x) for x in row) for row in grp.table]
    out.append("vertices " + " ".join(vd.base.labels))
    labels = vd.base.labels
    for u, v, g in vd.arc_voltages():
        out.append(f"arc {labels[u]} {labels[v]} {grp.format_element(g)}")
    return "\n".join(out) + "\n"
