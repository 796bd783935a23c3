"""Kashiwara and quasi-Kashiwara operators on words and strings of columns.

An operator family is a kind (``K`` or ``qK``) and a level:

* ``word``: acts on words.
* ``columns``: acts on strings of columns, column by column.
* ``columns-restricted``: as ``columns``, but a result that is no longer
  row connected and row increasing counts as undefined.

Undefined results are ``None``.

For ``K`` each letter ``i`` (or each column holding ``i`` but not
``i + 1``) contributes ``+`` and each ``i + 1`` (or column holding ``i + 1``
but not ``i``) contributes ``-``. Adjacent ``-+`` pairs cancel until the
signs read ``+^r -^l``. Then ``f_i`` turns the rightmost surviving ``+``
into ``i + 1``, and ``e_i`` turns the leftmost surviving ``-`` into ``i``.

``qK`` is undefined as soon as an ``i`` sits to the right of an ``i + 1``
(or a column holds both). Otherwise ``f_i`` changes the last ``i`` and
``e_i`` changes the first ``i + 1``.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field

from tabrw.diagrams import StringOfColumns, is_scolc, reading_sw, render_ascii
from tabrw.words import check_word, format_word

KINDS = ("K", "qK")
LEVELS = ("word", "columns", "columns-restricted")


class CrystalError(ValueError):
    """Bad operator index or unknown family."""


class ComponentTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Family:
    kind: str
    level: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CrystalError(f"unknown crystal kind {self.kind!r}")
        if self.level not in LEVELS:
            raise CrystalError(f"unknown crystal level {self.level!r}")
        if self.n < 1:
            raise CrystalError("the alphabet size must be positive")

    def __str__(self):
        return f"{self.kind}-{self.level}"


def family(spec: str | Family, n: int | None = None) -> Family:
    """Parse ``"K-word"``, ``"qK-columns-restricted"`` and so on."""
    if isinstance(spec, Family):
        return spec
    kind, _, level = spec.partition("-")
    if n is None:
        raise CrystalError("the alphabet size n is required")
    return Family(kind, level or "word", n)


# -- sign words ----------------------------------------------------------

def reduce_signs(signs) -> tuple[list, list]:
    """Cancel ``-+`` pairs with a stack scan.

    ``signs`` holds ``"+"``, ``"-"`` or ``None`` per position. Returns the
    positions of the surviving ``+`` and ``-`` signs.
    """
    plus, minus = [], []
    for k, s in enumerate(signs):
        if s == "-":
            minus.append(k)
        elif s == "+":
            if minus:
                minus.pop()
            else:
                plus.append(k)
    return plus, minus


def reduce_signs_naive(signs: str) -> str:
    """Delete ``-+`` repeatedly from a string of signs (for cross-checking)."""
    s = signs
    while "-+" in s:
        s = s.replace("-+", "", 1)
    return s


def _letter_sign(x, i):
    return "+" if x == i else "-" if x == i + 1 else None


def _column_sign(c, i):
    has_i, has_j = i in c, i + 1 in c
    if has_i and not has_j:
        return "+"
    if has_j and not has_i:
        return "-"
    return None


def _signs(x, i, level):
    if level == "word":
        return [_letter_sign(a, i) for a in x]
    return [_column_sign(c, i) for c in x.columns]


def _swap_at(x, k, old, new, level):
    if level == "word":
        return x[:k] + (new,) + x[k + 1:]
    cols = list(x.columns)
    cols[k] = tuple(sorted(new if y == old else y for y in cols[k]))
    return StringOfColumns(tuple(cols), x.gluing)


def _check_index(fam: Family, i: int):
    if not 1 <= i <= fam.n - 1:
        raise CrystalError(f"operator index {i} is outside 1..{fam.n - 1}")


def _check_input(fam: Family, x):
    if fam.level == "word":
        return check_word(x, fam.n)
    if not isinstance(x, StringOfColumns):
        raise CrystalError(f"{fam} acts on strings of columns, got {x!r}")
    return x


def _finish(fam, y):
    if y is not None and fam.level == "columns-restricted" and not is_scolc(y):
        return None
    return y


def _q_positions(x, i, level):
    """Positions holding i and i + 1, or None when qK is undefined."""
    units = x if level == "word" else x.columns
    pos_i, pos_j = [], []
    for k, u in enumerate(units):
        has_i = (u == i) if level == "word" else i in u
        has_j = (u == i + 1) if level == "word" else i + 1 in u
        if has_i and has_j:
            return None
        if has_i:
            if pos_j:
                return None
            pos_i.append(k)
        if has_j:
            pos_j.append(k)
    return pos_i, pos_j


def f(fam, i: int, x, n: int | None = None):
    fam = family(fam, n)
    _check_index(fam, i)
    x = _check_input(fam, x)
    if fam.kind == "K":
        plus, _ = reduce_signs(_signs(x, i, fam.level))
        k = plus[-1] if plus else None
    else:
        got = _q_positions(x, i, fam.level)
        k = got[0][-1] if got and got[0] else None
    if k is None:
        return None
    return _finish(fam, _swap_at(x, k, i, i + 1, fam.level))


def e(fam, i: int, x, n: int | None = None):
    fam = family(fam, n)
    _check_index(fam, i)
    x = _check_input(fam, x)
    if fam.kind == "K":
        _, minus = reduce_signs(_signs(x, i, fam.level))
        k = minus[0] if minus else None
    else:
        got = _q_positions(x, i, fam.level)
        k = got[1][0] if got and got[1] else None
    if k is None:
        return None
    return _finish(fam, _swap_at(x, k, i + 1, i, fam.level))


def _iterate(op, fam, i, x) -> int:
    k = 0
    while (x := op(fam, i, x)) is not None:
        k += 1
    return k


def eps(fam, i: int, x, n: int | None = None) -> int:
    """How many times e_i applies in a row."""
    fam = family(fam, n)
    _check_index(fam, i)
    if fam.kind == "K" and fam.level != "columns-restricted":
        return len(reduce_signs(_signs(_check_input(fam, x), i, fam.level))[1])
    return _iterate(e, fam, i, x)


def phi(fam, i: int, x, n: int | None = None) -> int:
    """How many times f_i applies in a row."""
    fam = family(fam, n)
    _check_index(fam, i)
    if fam.kind == "K" and fam.level != "columns-restricted":
        return len(reduce_signs(_signs(_check_input(fam, x), i, fam.level))[0])
    return _iterate(f, fam, i, x)


def is_highest_weight(fam, x, n: int | None = None) -> bool:
    fam = family(fam, n)
    return all(e(fam, i, x) is None for i in range(1, fam.n))


def _weight(x, level) -> Counter:
    return Counter(x if level == "word" else reading_sw(x))


# -- graphs --------------------------------------------------------------

@dataclass
class CrystalGraph:
    family: Family
    root: object
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)  # (source, i, target) for f_i

    def __len__(self):
        return len(self.vertices)

    def labels_along(self, path) -> list:
        """Follow f-operators from the root; returns the visited vertices."""
        out = [self.root]
        for i in path:
            nxt = f(self.family, i, out[-1])
            if nxt is None:
                raise CrystalError(f"f_{i} is undefined at {out[-1]}")
            out.append(nxt)
        return out

    def highest_weights(self) -> list:
        return [v for v in self.vertices if is_highest_weight(self.family, v)]

    def _label(self, v) -> str:
        w = v if self.family.level == "word" else reading_sw(v)
        return format_word(w) or "λ"

    def to_json_obj(self) -> dict:
        index = {v: k for k, v in enumerate(self.vertices)}
        return {
            "family": str(self.family),
            "n": self.family.n,
            "vertices": [
                {"id": index[v], "reading": self._label(v),
                 **({} if self.family.level == "word" else {"diagram": str(v)})}
                for v in self.vertices
            ],
            "edges": [{"source": index[a], "target": index[b], "label": i}
                      for a, i, b in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def to_dot(self) -> str:
        index = {v: k for k, v in enumerate(self.vertices)}
        lines = ["digraph crystal {", "  rankdir=TB;"]
        for v in self.vertices:
            attrs = f'label="{self._label(v)}"'
            if self.family.level != "word":
                tip = render_ascii(v).replace("\n", "\\n")
                attrs += f', tooltip="{tip}"'
            lines.append(f"  v{index[v]} [{attrs}];")
        for a, i, b in self.edges:
            lines.append(f'  v{index[a]} -> v{index[b]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def component(fam, x, n: int | None = None, max_vertices: int = 10000) -> CrystalGraph:
    """Connected component of ``x``, breadth first, f before e per index."""
    fam = family(fam, n)
    x = _check_input(fam, x)
    g = CrystalGraph(fam, x, [x])
    seen = {x}
    edges = set()
    todo = deque([x])
    while todo:
        v = todo.popleft()
        for i in range(1, fam.n):
            for op in (f, e):
                w = op(fam, i, v)
                if w is None:
                    continue
                edge = (v, i, w) if op is f else (w, i, v)
                if edge not in edges:
                    edges.add(edge)
                    g.edges.append(edge)
                if w not in seen:
                    if len(seen) >= max_vertices:
                        raise ComponentTooLarge(f"component of {x} exceeds {max_vertices} vertices")
                    seen.add(w)
                    g.vertices.append(w)
                    todo.append(w)
    return g


def components_isomorphic(fam, x, y, n: int | None = None, fam_y=None,
                          max_vertices: int = 10000):
    """Try to extend x -> y to a crystal isomorphism of components.

    Returns ``(ok, witness)`` where the witness maps vertices of the first
    component to the second (``None`` when the extension fails).
    """
    fam = family(fam, n)
    fam_y = family(fam_y, fam.n) if fam_y is not None else fam
    psi = {x: y}
    back = {y: x}
    todo = deque([x])
    while todo:
        v = todo.popleft()
        u = psi[v]
        if _weight(v, fam.level) != _weight(u, fam_y.level):
            return False, None
        for i in range(1, fam.n):
            for op in (f, e):
                v2, u2 = op(fam, i, v), op(fam_y, i, u)
                if (v2 is None) != (u2 is None):
                    return False, None
                if v2 is None:
                    continue
                if v2 in psi or u2 in back:
                    if psi.get(v2) != u2 or back.get(u2) != v2:
                        return False, None
                    continue
                if len(psi) >= max_vertices:
                    raise ComponentTooLarge(f"component of {x} exceeds {max_vertices} vertices")
                psi[v2], back[u2] = u2, v2
                todo.append(v2)
    return True, psi


def crystal_commutes_with_sds(fam, S, corpus, n: int | None = None) -> list:
    """Violations of e_i(R(C(u))) = R(C(e_i(u))) and the f-version.

    Operators act on words. A violation is recorded when exactly one side
    is defined or both are defined and differ.
    """
    fam = family(fam, n)
    if fam.level != "word":
        fam = Family(fam.kind, "word", fam.n)
    bad = []
    for u in corpus:
        u = tuple(u)
        r = reading_sw(S.constructor(u))
        for i in range(1, fam.n):
            for name, op in (("e", e), ("f", f)):
                lhs = op(fam, i, r)
                v = op(fam, i, u)
                rhs = None if v is None else reading_sw(S.constructor(v))
                if lhs != rhs:
                    bad.append((u, f"{name}_{i}", lhs, rhs))
    return bad
