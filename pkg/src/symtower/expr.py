"""A small expression language for spaces and inclusions.

    space     := sphere(n) | point | wedge(s, s) | smash(s, s) | sym(n, s)
               | susp(s) | cone(s) | load("path")
    inclusion := id(s) | base(s) | wedge_left(s, s) | cone_incl(s)

Parsing produces :class:`Node` trees; :func:`evaluate` builds them at a
given ``dim_bound`` and :func:`geometric_dim` predicts their dimension so
that callers can choose the smallest sufficient bound.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .sset import (
    TruncationError,
    basepoint_inclusion,
    cone,
    identity_inclusion,
    point,
    read_pss_json,
    smash,
    sphere,
    suspend,
    sym_power,
    wedge,
    wedge_left,
)

__all__ = ["ExprError", "Node", "parse", "evaluate", "geometric_dim", "is_inclusion", "unparse"]


class ExprError(ValueError):
    """Syntax or type error, with the 0-based column of the offending token."""

    def __init__(self, message, pos, text=""):
        self.pos = pos
        self.text = text
        caret = f"\n  {text}\n  {' ' * pos}^" if text else ""
        super().__init__(f"column {pos + 1}: {message}{caret}")


# name -> (argument kinds, result kind); "n" integer, "s" space, "p" path
SIGNATURES = {
    "sphere": (("n",), "space"),
    "point": ((), "space"),
    "wedge": (("s", "s"), "space"),
    "smash": (("s", "s"), "space"),
    "sym": (("n", "s"), "space"),
    "susp": (("s",), "space"),
    "cone": (("s",), "space"),
    "load": (("p",), "space"),
    "id": (("s",), "inclusion"),
    "base": (("s",), "inclusion"),
    "wedge_left": (("s", "s"), "inclusion"),
    "cone_incl": (("s",), "inclusion"),
}

_TOKEN = re.compile(
    r"""\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<str>"(?:[^"\\]|\\.)*")|(?P<punct>[(),]))"""
)


@dataclass(frozen=True)
class Node:
    kind: str
    args: tuple
    pos: int

    @property
    def result(self):
        return SIGNATURES[self.kind][1]


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprError(f"unexpected character {text[start]!r}", start, text)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ExprError(f"expected {want!r}, found {got!r}", tok[2], self.text)
        self.i += 1
        return tok

    def node(self):
        kind, value, pos = self.peek()
        if kind != "name":
            raise ExprError(f"expected a constructor, found {value or 'end of input'!r}", pos, self.text)
        self.take()
        if value not in SIGNATURES:
            raise ExprError(f"unknown constructor {value!r}", pos, self.text)
        params, _ = SIGNATURES[value]
        args = []
        if self.peek()[1] == "(":
            self.take("punct", "(")
            while self.peek()[1] != ")":
                if args:
                    _, sep, spos = self.peek()
                    if sep != ",":
                        got = sep or "end of input"
                        raise ExprError(f"expected ',' or ')', found {got!r}", spos, self.text)
                    self.take()
                args.append(self.argument())
            self.take("punct", ")")
        if len(args) != len(params):
            raise ExprError(f"{value} expects {len(params)} argument(s), got {len(args)}", pos, self.text)
        for want, (got, apos) in zip(params, args):
            self.check_kind(value, want, got, apos)
        return Node(value, tuple(a for a, _ in args), pos)

    def argument(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            return int(value), pos
        if kind == "str":
            self.take()
            return json.loads(value), pos
        return self.node(), pos

    def check_kind(self, ctor, want, got, pos):
        if want == "n":
            if not isinstance(got, int):
                raise ExprError(f"{ctor} expects an integer here", pos, self.text)
            if got < 0:
                raise ExprError(f"negative n ({got}) in {ctor}", pos, self.text)
        elif want == "p":
            if not isinstance(got, str):
                raise ExprError(f"{ctor} expects a quoted path", pos, self.text)
        elif not isinstance(got, Node) or got.result != "space":
            raise ExprError(f"{ctor} expects a space here", pos, self.text)

    def parse(self):
        root = self.node()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected {value!r} after expression", pos, self.text)
        return root


def parse(text):
    return _Parser(text).parse()


def is_inclusion(node):
    return node.result == "inclusion"


def unparse(node):
    if not node.args and node.kind == "point":
        return "point"
    parts = []
    for a in node.args:
        parts.append(unparse(a) if isinstance(a, Node) else json.dumps(a) if isinstance(a, str) else str(a))
    return f"{node.kind}({', '.join(parts)})"


def _load(path):
    return read_pss_json(path)


def geometric_dim(node, _cache=None):
    """Predicted geometric dimension (of the target, for inclusions)."""
    k, a = node.kind, node.args
    if k == "sphere":
        return a[0]
    if k == "point":
        return 0
    if k in ("wedge", "wedge_left"):
        return max(geometric_dim(a[0]), geometric_dim(a[1]))
    if k == "smash":
        return geometric_dim(a[0]) + geometric_dim(a[1])
    if k == "sym":
        return a[0] * geometric_dim(a[1])
    if k in ("susp", "cone", "cone_incl"):
        return geometric_dim(a[0]) + 1
    if k in ("id", "base"):
        return geometric_dim(a[0])
    if k == "load":
        X = _load(a[0])
        return X.dim if X.dim is not None else X.observed_dim()
    raise AssertionError(k)


def load_bounds(node):
    """Smallest ``dim_bound`` among loaded files (``None`` without loads)."""
    out = None
    for a in node.args:
        if isinstance(a, Node):
            b = load_bounds(a)
            out = b if out is None else (out if b is None else min(out, b))
    if node.kind == "load":
        out = _load(node.args[0]).dim_bound
    return out


def evaluate(node, dim_bound):
    """Build the space or inclusion with every constructor truncated at ``dim_bound``."""
    k, a = node.kind, node.args
    if k == "sphere":
        if dim_bound < a[0]:
            raise TruncationError(f"dim_bound {dim_bound} below sphere dimension {a[0]}")
        return sphere(a[0], dim_bound)
    if k == "point":
        return point(dim_bound)
    if k == "load":
        X = _load(a[0])
        if X.dim_bound < dim_bound:
            raise TruncationError(f"{a[0]} stores levels up to {X.dim_bound} only, need {dim_bound}")
        return X.truncate(dim_bound)
    sub = [evaluate(x, dim_bound) if isinstance(x, Node) else x for x in a]
    if k == "wedge":
        return wedge(*sub)
    if k == "smash":
        return smash(*sub)
    if k == "sym":
        return sym_power(sub[0], sub[1])
    if k == "susp":
        return suspend(sub[0])
    if k == "cone":
        return cone(sub[0])[0]
    if k == "id":
        return identity_inclusion(sub[0])
    if k == "base":
        return basepoint_inclusion(sub[0])
    if k == "wedge_left":
        return wedge_left(*sub)
    if k == "cone_incl":
        return cone(sub[0])[1]
    raise AssertionError(k)
