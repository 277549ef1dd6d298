"""Plain-text formats.

Theories (``.dfl``)::

    % comment
    r1: bird => flies.          % defeasible; '->' strict, '~>' defeater
    => -p.                      % empty body; 'true => -p.' also works
    conflict {dove, hawk}.
    prefer r1 > r2.             % r1 is superior to r2

Programs (``.lp``)::

    p :- q, not r.
    -a :- not a.
    fact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    DefeasibleTheory,
    DLRule,
    Literal,
    LPRule,
    NormalProgram,
    RuleKind,
    fmt_lits,
    natural_key,
    sorted_lits,
    validate_theory,
)
from .errors import ParseError, ValidationError

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<neck>:-)
  | (?P<arrow>->|=>|~>)
  | (?P<colon>:)
  | (?P<comma>,)
  | (?P<dot>\.)
  | (?P<minus>-)
  | (?P<lbrace>\{)
  | (?P<rbrace>\})
  | (?P<gt>>)
  | (?P<ident>[A-Za-z0-9_]+)
    """,
    re.VERBOSE,
)

_KINDS = {"->": RuleKind.STRICT, "=>": RuleKind.DEFEASIBLE, "~>": RuleKind.DEFEATER}


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        for i, ch in enumerate(m.group()):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    return tokens


def _statements(tokens: list[Token]):
    current: list[Token] = []
    for tok in tokens:
        if tok.kind == "dot":
            if not current:
                raise ParseError("empty statement", tok.line, tok.col)
            yield current, tok
            current = []
        else:
            current.append(tok)
    if current:
        t = current[-1]
        raise ParseError("statement is missing its terminating '.'", t.line, t.col + len(t.text))


class _Cursor:
    def __init__(self, tokens, end: Token):
        self.tokens = tokens
        self.i = 0
        self.end = end

    def peek(self, offset=0):
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else None

    def take(self, kind=None, what=None):
        tok = self.peek()
        if tok is None or (kind and tok.kind != kind):
            at = tok or self.end
            found = repr(tok.text) if tok else "end of statement"
            raise ParseError(f"expected {what or kind}, found {found}", at.line, at.col)
        self.i += 1
        return tok

    def done(self):
        return self.i >= len(self.tokens)

    def literal(self) -> Literal:
        positive = True
        if self.peek() is not None and self.peek().kind == "minus":
            self.take()
            positive = False
        return Literal(self.take("ident", "a literal").text, positive)


def _literal_list(cur: _Cursor, stop: str) -> list[Literal]:
    """Comma separated literals up to (not including) a token of kind ``stop``."""
    out: list[Literal] = []
    if cur.peek() is not None and cur.peek().kind == stop:
        return out
    if cur.peek() is not None and cur.peek().text == "true" and (
        cur.peek(1) is None or cur.peek(1).kind == stop
    ):
        cur.take()
        return out
    out.append(cur.literal())
    while cur.peek() is not None and cur.peek().kind == "comma":
        cur.take()
        out.append(cur.literal())
    return out


def parse_theory(text: str, validate: bool = True) -> DefeasibleTheory:
    """Parse ``.dfl`` text. Rules without an id get ``rN`` after their position in the file."""
    pending: list = []
    conflicts: list = []
    priority: list = []
    explicit: set = set()
    for stmt, dot in _statements(tokenize(text)):
        cur = _Cursor(stmt, dot)
        head = stmt[0]
        if head.kind == "ident" and head.text == "conflict" and len(stmt) > 1 and stmt[1].kind == "lbrace":
            cur.take()
            cur.take("lbrace", "'{'")
            members = _literal_list(cur, "rbrace")
            cur.take("rbrace", "'}'")
            if len(members) < 2:
                raise ParseError("a conflict set needs at least two literals", head.line, head.col)
            conflicts.append(frozenset(members))
        elif head.kind == "ident" and head.text == "prefer" and any(t.kind == "gt" for t in stmt):
            cur.take()
            superior = cur.take("ident", "a rule id").text
            cur.take("gt", "'>'")
            inferior = cur.take("ident", "a rule id").text
            priority.append((inferior, superior))
        else:
            rid = None
            if head.kind == "ident" and len(stmt) > 1 and stmt[1].kind == "colon":
                rid = cur.take().text
                cur.take("colon")
                explicit.add(rid)
            body = _literal_list(cur, "arrow")
            arrow = cur.take("arrow", "'->', '=>' or '~>'")
            target = cur.literal()
            pending.append((rid, _KINDS[arrow.text], frozenset(body), target))
        if not cur.done():
            extra = cur.peek()
            raise ParseError(f"unexpected {extra.text!r}", extra.line, extra.col)

    rules = []
    used = set(explicit)
    for position, (rid, kind, body, target) in enumerate(pending, 1):
        if rid is None:
            n = position
            while f"r{n}" in used:
                n += 1
            rid = f"r{n}"
            used.add(rid)
        rules.append(DLRule(rid, kind, body, target))
    if len({r.id for r in rules}) != len(rules):
        dupes = sorted({r.id for r in rules if sum(x.id == r.id for x in rules) > 1})
        raise ValidationError([f"duplicate rule id {d!r}" for d in dupes])
    theory = DefeasibleTheory(rules, conflicts, priority)
    if validate:
        problems = validate_theory(theory)
        if problems:
            raise ValidationError(problems)
    return theory


def parse_program(text: str) -> NormalProgram:
    rules = []
    for stmt, dot in _statements(tokenize(text)):
        cur = _Cursor(stmt, dot)
        head = cur.literal()
        pos, neg = [], []
        if not cur.done():
            cur.take("neck", "':-'")
            while True:
                tok = cur.peek()
                if tok is not None and tok.text == "not" and cur.peek(1) is not None and cur.peek(1).kind in ("ident", "minus"):
                    cur.take()
                    neg.append(cur.literal())
                else:
                    pos.append(cur.literal())
                if cur.done():
                    break
                cur.take("comma", "','")
        rules.append(LPRule(head, frozenset(pos), frozenset(neg)))
    return NormalProgram(rules)


def _body_text(body) -> str:
    return ", ".join(str(q) for q in sorted_lits(body))


def serialize_rule(r: DLRule) -> str:
    body = _body_text(r.body)
    return f"{r.id}: {body + ' ' if body else ''}{r.kind.arrow} {r.head}."


def serialize_theory(theory: DefeasibleTheory) -> str:
    lines = [serialize_rule(r) for r in theory.ordered_rules]
    minimal = {frozenset({Literal(a), Literal(a, False)}) for a in theory.atoms}
    extra = sorted(
        (c for c in theory.conflicts if c not in minimal),
        key=lambda c: [q.sort_key for q in sorted_lits(c)],
    )
    # atoms that occur only in minimal conflicts are otherwise lost
    ruled = {q.atom for r in theory.rules for q in (r.head, *r.body)}
    ruled |= {q.atom for c in extra for q in c}
    for a in sorted(theory.atoms - ruled):
        extra.append(frozenset({Literal(a), Literal(a, False)}))
    lines += [f"conflict {fmt_lits(c)}." for c in extra]
    pairs = sorted(theory.priority, key=lambda pr: (natural_key(pr[1]), natural_key(pr[0])))
    lines += [f"prefer {sup} > {inf}." for inf, sup in pairs]
    return "\n".join(lines) + ("\n" if lines else "")


def serialize_program(program: NormalProgram) -> str:
    return "".join(str(r) + "\n" for r in program.ordered_rules)
