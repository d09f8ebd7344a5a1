"""Text formats for both proof systems.

DPLL derivations use a parenthesized prefix grammar (whitespace-separated
tokens):

    node   := "conflict" | "(unit" lit node ")" | "(elim" clause lit node ")"
            | "(red" clause lit node ")" | "(split" lit node node ")"
    clause := "[" lit* "]"
    lit    := nonzero signed decimal

Resolution derivations use a line-oriented trace, ids assigned in post-order
starting at 1, root last:

    <id> S <premise_index> <lits...> 0
    <id> R <pivot> <left_id> <right_id> <lits...> 0
"""

from __future__ import annotations

import re

from ._util import deep_recursion
from .cnf import Clause
from .dpll_proof import CONFLICT, Conflict, DpllDerivation, Elim, Red, Split, Unit
from .resolution import Res, ResDerivation, Sub


class ProofParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"offset {position}: {message}")
        self.position = position


def _clause_text(c: Clause) -> str:
    return "[ " + " ".join(str(l) for l in c) + " ]" if c else "[ ]"


def serialize_dpll(p: DpllDerivation) -> str:
    parts: list[str] = []
    with deep_recursion():
        _emit_dpll(p, parts)
    return "".join(parts)


def _emit_dpll(p: DpllDerivation, parts: list[str]) -> None:
    if isinstance(p, Conflict):
        parts.append("conflict")
    elif isinstance(p, Unit):
        parts.append(f"(unit {p.lit} ")
        _emit_dpll(p.sub, parts)
        parts.append(")")
    elif isinstance(p, Elim):
        parts.append(f"(elim {_clause_text(p.clause)} {p.lit} ")
        _emit_dpll(p.sub, parts)
        parts.append(")")
    elif isinstance(p, Red):
        parts.append(f"(red {_clause_text(p.clause)} {p.lit} ")
        _emit_dpll(p.sub, parts)
        parts.append(")")
    elif isinstance(p, Split):
        parts.append(f"(split {p.lit} ")
        _emit_dpll(p.left, parts)
        parts.append(" ")
        _emit_dpll(p.right, parts)
        parts.append(")")
    else:
        raise TypeError(f"not a DPLL derivation node: {p!r}")


_DPLL_TOKEN = re.compile(r"\(\w+|\)|\[|\]|[^\s()\[\]]+")


def parse_dpll(text: str) -> DpllDerivation:
    tokens = [(m.group(), m.start()) for m in _DPLL_TOKEN.finditer(text)]
    with deep_recursion():
        node, pos = _parse_dpll_node(tokens, 0)
    if pos != len(tokens):
        raise ProofParseError("trailing input after derivation", tokens[pos][1])
    return node


def _expect(tokens, pos, what):
    if pos >= len(tokens):
        raise ProofParseError(f"unexpected end of input, expected {what}",
                              tokens[-1][1] + len(tokens[-1][0]) if tokens else 0)
    return tokens[pos]


def _parse_lit(tokens, pos) -> tuple[int, int]:
    tok, at = _expect(tokens, pos, "a literal")
    try:
        lit = int(tok)
    except ValueError:
        raise ProofParseError(f"expected a literal, got {tok!r}", at)
    if lit == 0:
        raise ProofParseError("literal must be nonzero", at)
    return lit, pos + 1


def _parse_clause(tokens, pos) -> tuple[Clause, int]:
    tok, at = _expect(tokens, pos, "'['")
    if tok != "[":
        raise ProofParseError(f"expected '[', got {tok!r}", at)
    pos += 1
    lits = []
    while True:
        tok, at = _expect(tokens, pos, "a literal or ']'")
        if tok == "]":
            return tuple(lits), pos + 1
        lit, pos = _parse_lit(tokens, pos)
        lits.append(lit)


def _parse_dpll_node(tokens, pos) -> tuple[DpllDerivation, int]:
    tok, at = _expect(tokens, pos, "a derivation node")
    pos += 1
    if tok == "conflict":
        return CONFLICT, pos
    if tok == "(unit":
        lit, pos = _parse_lit(tokens, pos)
        sub, pos = _parse_dpll_node(tokens, pos)
        return Unit(lit, sub), _close(tokens, pos)
    if tok in ("(elim", "(red"):
        clause, pos = _parse_clause(tokens, pos)
        lit, pos = _parse_lit(tokens, pos)
        sub, pos = _parse_dpll_node(tokens, pos)
        node = Elim(clause, lit, sub) if tok == "(elim" else Red(clause, lit, sub)
        return node, _close(tokens, pos)
    if tok == "(split":
        lit, pos = _parse_lit(tokens, pos)
        left, pos = _parse_dpll_node(tokens, pos)
        right, pos = _parse_dpll_node(tokens, pos)
        return Split(lit, left, right), _close(tokens, pos)
    raise ProofParseError(f"unexpected token {tok!r}", at)


def _close(tokens, pos) -> int:
    tok, at = _expect(tokens, pos, "')'")
    if tok != ")":
        raise ProofParseError(f"expected ')', got {tok!r}", at)
    return pos + 1


def serialize_res(r: ResDerivation) -> str:
    """Post-order trace, one line per node; children precede parents and the
    last line is the root."""
    lines: list[str] = []
    _emit_res(r, lines)
    return "\n".join(lines) + "\n"


def _emit_res(r: ResDerivation, lines: list[str]) -> int:
    # iterative post-order so deep unit chains do not hit the recursion limit
    ids: dict[int, int] = {}
    stack: list[tuple[ResDerivation, bool]] = [(r, False)]
    last = 0
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Sub):
            last = len(lines) + 1
            ids[id(node)] = last
            lits = " ".join(str(l) for l in node.conclusion)
            lines.append(f"{last} S {node.premise_index}" + (f" {lits} 0" if lits else " 0"))
        elif not expanded:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
        else:
            last = len(lines) + 1
            ids[id(node)] = last
            lits = " ".join(str(l) for l in node.conclusion)
            lines.append(f"{last} R {node.pivot} {ids[id(node.left)]} {ids[id(node.right)]}"
                         + (f" {lits} 0" if lits else " 0"))
    return last


def parse_res(text: str) -> ResDerivation:
    nodes: dict[int, ResDerivation] = {}
    root = None
    offset = 0
    for line in text.splitlines():
        at = offset
        offset += len(line) + 1
        if not line.strip() or line.lstrip().startswith("c"):
            continue
        fields = line.split()
        try:
            nid = int(fields[0])
            kind = fields[1]
            if fields[-1] != "0":
                raise ValueError
            if kind == "S":
                premise = int(fields[2])
                lits = tuple(int(x) for x in fields[3:-1])
                node = Sub(premise, lits)
            elif kind == "R":
                pivot = int(fields[2])
                left, right = int(fields[3]), int(fields[4])
                lits = tuple(int(x) for x in fields[5:-1])
                node = Res(pivot, nodes[left], nodes[right], lits)
            else:
                raise ValueError
        except (ValueError, IndexError):
            raise ProofParseError(f"malformed trace line {line!r}", at)
        except KeyError:
            raise ProofParseError(f"undefined node reference in line {line!r}", at)
        if any(l == 0 for l in node.conclusion):
            raise ProofParseError("zero literal inside conclusion", at)
        nodes[nid] = node
        root = node
    if root is None:
        raise ProofParseError("empty resolution trace", 0)
    return root
