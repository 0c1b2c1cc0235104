"""Construction expressions such as ``semidirect(cyclic(5), cyclic(4), ["g1^2"])``.

Expressions are parsed with :mod:`ast` and only whitelisted builders may be
called.  Semidirect actions list, for each generator of the acting group, the
images of the generators of the normal factor, written as words in
``g1, g2, ...`` (or as raw element ids).
"""

from __future__ import annotations

import ast
import json
import re
from pathlib import Path

from . import groups as gr
from .groups import FiniteGroup, GroupError
from .perm import Perm

_TOKEN = re.compile(r"\s*(?:(g)(\d+)|(\^)\s*(-?\d+)|([()]))")


def eval_generator_word(G: FiniteGroup, word: str) -> int:
    """Evaluate a word like ``g1^-1 g2 (g1g2)^2`` on ``G.generators``."""
    pos = 0
    stack: list[list[int]] = [[]]
    text = word.strip()
    if text in ("", "1"):
        return 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise GroupError(f"bad generator word {word!r} at column {pos + 1}")
        pos = m.end()
        if m.group(1):
            k = int(m.group(2))
            if not 1 <= k <= len(G.generators):
                raise GroupError(f"g{k} out of range in {word!r}")
            stack[-1].append(G.generators[k - 1])
        elif m.group(3):
            if not stack[-1]:
                raise GroupError(f"exponent without base in {word!r}")
            stack[-1][-1] = G.power(stack[-1][-1], int(m.group(4)))
        elif m.group(5) == "(":
            stack.append([])
        else:
            if len(stack) == 1:
                raise GroupError(f"unbalanced parenthesis in {word!r}")
            inner = stack.pop()
            stack[-1].append(_product(G, inner))
    if len(stack) != 1:
        raise GroupError(f"unbalanced parenthesis in {word!r}")
    return _product(G, stack[0])


def _product(G: FiniteGroup, ids) -> int:
    acc = 0
    for g in ids:
        acc = G.op(acc, g)
    return acc


def _image(A: FiniteGroup, spec) -> int:
    if isinstance(spec, int):
        if not 0 <= spec < A.order:
            raise GroupError(f"element id {spec} out of range")
        return spec
    return eval_generator_word(A, str(spec))


def build_semidirect(A: FiniteGroup, B: FiniteGroup, action) -> FiniteGroup:
    if action and not isinstance(action[0], (list, tuple)):
        action = [action]
    ids = [[_image(A, s) for s in imgs] for imgs in action]
    return gr.semidirect(A, B, ids)


def _perm_group(*gens, name=None):
    return gr.perm_group([Perm.parse(g) if isinstance(g, str) else g for g in gens], name=name)


def conjugation_images(G: FiniteGroup, by) -> list[int]:
    """Images of ``G``'s generators under ``g -> by^-1 g by`` (an inner automorphism)."""
    c = G.element(by)
    return [G.conj(g, c) for g in G.generators]


def _named(name: str) -> FiniteGroup:
    from .census import named_group
    return named_group(name)


BUILDERS = {
    "cyclic": gr.cyclic,
    "dihedral": gr.dihedral,
    "quaternion8": gr.quaternion8,
    "dicyclic": gr.dicyclic,
    "elementary_abelian": gr.elementary_abelian,
    "symmetric": gr.symmetric,
    "alternating": gr.alternating,
    "direct_product": gr.direct_product,
    "semidirect": build_semidirect,
    "perm_group": _perm_group,
    "matrix_group": gr.matrix_group,
    "trivial": gr.trivial_group,
    "named": _named,
    "conjugation_images": conjugation_images,
}


def _eval(node):
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, str)):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        val = _eval(node.operand)
        if isinstance(val, int):
            return -val
    if isinstance(node, (ast.List, ast.Tuple)):
        return [_eval(e) for e in node.elts]
    if isinstance(node, ast.Name) and node.id in ("quaternion8", "trivial"):
        return BUILDERS[node.id]()
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        fn = BUILDERS.get(node.func.id)
        if fn is None:
            raise GroupError(f"unknown construction {node.func.id!r}")
        args = [_eval(a) for a in node.args]
        kwargs = {k.arg: _eval(k.value) for k in node.keywords}
        try:
            return fn(*args, **kwargs)
        except TypeError as exc:
            raise GroupError(f"bad arguments to {node.func.id}: {exc}") from None
    raise GroupError(f"unsupported construction syntax: {ast.dump(node)[:60]}")


def build_named(expr: str, name: str | None = None) -> FiniteGroup:
    """Evaluate a construction expression into a group."""
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError as exc:
        raise GroupError(f"bad construction expression {expr!r}: {exc.msg}") from None
    G = _eval(tree)
    if not isinstance(G, FiniteGroup):
        raise GroupError(f"expression {expr!r} does not describe a group")
    if name:
        G = G.renamed(name)
    return G


def group_from_perm_generators(gens, degree: int | None = None, name: str | None = None) -> FiniteGroup:
    return gr.perm_group([g if isinstance(g, Perm) else Perm.parse(g, degree) for g in gens],
                         degree, name=name)


def load_group_file(path) -> FiniteGroup:
    """Group definition file: ``{name, construction}`` where construction is an
    expression string, ``{"perm_generators": [...]}`` or ``{"cayley_table": [[...]]}``.
    """
    data = json.loads(Path(path).read_text())
    return group_from_json(data)


def group_from_json(data: dict) -> FiniteGroup:
    name = data.get("name")
    cons = data.get("construction")
    if isinstance(cons, str):
        return build_named(cons, name)
    if isinstance(cons, dict) and "perm_generators" in cons:
        pts = [p for g in cons["perm_generators"] for c in _cycles(g) for p in c]
        return group_from_perm_generators(cons["perm_generators"], max(pts, default=1), name)
    if isinstance(cons, dict) and "cayley_table" in cons:
        return gr.from_table(cons["cayley_table"], name=name)
    raise GroupError("group file needs a construction string, perm_generators or cayley_table")


def _cycles(text):
    from .perm import parse_cycles
    return parse_cycles(text)
