"""A typed term language over the cobordism generators.

Grammar (whitespace insignificant)::

    term := tens | term ";" tens          composition, left acts first
    tens := atom | tens "*" atom          tensor (side by side)
    atom := "mu" | "eta" | "delta" | "eps" | "swap"
          | "id" "[" INT "]"
          | "E" "[" INT "," INT "," INT "]"
          | "(" term ")"

";" binds looser than "*"; both are left-associative.  Arities:
mu: 2->1, eta: 0->1, delta: 1->2, eps: 1->0, id[n]: n->n, swap: 2->2,
E[m,k,n]: n->m (the connected genus-k block, admitted as sugar).

``a ; b`` means "a first, then b", matching the top-to-bottom picture
convention; in function-composition notation it is ``b ∘ a``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from . import surface
from .surface import Cobordism


class TermError(ValueError):
    """Problem with a term; `position` is a character offset or None."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class TermSyntaxError(TermError):
    pass


class TermArityError(TermError):
    pass


@dataclass(frozen=True)
class Term:
    pos: int = field(default=-1, compare=False, kw_only=True)


@dataclass(frozen=True)
class Gen(Term):
    name: str = ""
    params: tuple[int, ...] = ()


@dataclass(frozen=True)
class Comp(Term):
    left: Term = None
    right: Term = None


@dataclass(frozen=True)
class Tens(Term):
    left: Term = None
    right: Term = None


_GEN_ARITY = {"mu": (2, 1), "eta": (0, 1), "delta": (1, 2),
              "eps": (1, 0), "swap": (2, 2)}


def arity(t: Term) -> tuple[int, int]:
    """(ingoing, outgoing) arity, checking composability bottom-up."""
    if isinstance(t, Gen):
        if t.name == "id":
            (n,) = t.params
            return n, n
        if t.name == "E":
            m, _, n = t.params
            return n, m
        return _GEN_ARITY[t.name]
    if isinstance(t, Tens):
        ln, lm = arity(t.left)
        rn, rm = arity(t.right)
        return ln + rn, lm + rm
    if isinstance(t, Comp):
        ln, lm = arity(t.left)
        rn, rm = arity(t.right)
        if lm != rn:
            raise TermArityError(
                f"cannot compose {ln}->{lm} with {rn}->{rm}: "
                f"{lm} outgoing circles meet {rn} ingoing", t.right.pos)
        return ln, rm
    raise TypeError(f"not a term: {t!r}")


_TOKEN = re.compile(r"(?P<name>[A-Za-z_]\w*)|(?P<int>\d+)|(?P<sym>[;*()\[\],])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), pos))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.next()
        if text != value:
            raise TermSyntaxError(f"expected {value!r}, found {text or 'end of input'!r}", pos)
        return pos

    def parse_int(self) -> int:
        kind, text, pos = self.next()
        if kind != "int":
            raise TermSyntaxError(f"expected a number, found {text or 'end of input'!r}", pos)
        return int(text)

    def term(self) -> Term:
        t = self.tens()
        while self.peek()[1] == ";":
            self.next()
            t = Comp(left=t, right=self.tens(), pos=t.pos)
        return t

    def tens(self) -> Term:
        t = self.atom()
        while self.peek()[1] == "*":
            self.next()
            t = Tens(left=t, right=self.atom(), pos=t.pos)
        return t

    def atom(self) -> Term:
        kind, text, pos = self.next()
        if text == "(":
            t = self.term()
            self.expect(")")
            return t
        if kind != "name":
            raise TermSyntaxError(f"expected a generator, found {text or 'end of input'!r}", pos)
        if text in _GEN_ARITY:
            return Gen(name=text, pos=pos)
        if text == "id":
            self.expect("[")
            n = self.parse_int()
            self.expect("]")
            return Gen(name="id", params=(n,), pos=pos)
        if text == "E":
            self.expect("[")
            m = self.parse_int()
            self.expect(",")
            k = self.parse_int()
            self.expect(",")
            n = self.parse_int()
            self.expect("]")
            return Gen(name="E", params=(m, k, n), pos=pos)
        raise TermSyntaxError(f"unknown generator {text!r}", pos)


def parse(text: str) -> Term:
    """Parse and type-check a generator word."""
    p = _Parser(text)
    t = p.term()
    kind, tok, pos = p.peek()
    if kind != "end":
        raise TermSyntaxError(f"trailing input {tok!r}", pos)
    arity(t)  # raises TermArityError on ill-typed words
    return t


def print_term(t: Term) -> str:
    """Fully parenthesized text; parse(print_term(t)) == t."""

    def sub(u: Term) -> str:
        s = print_term(u)
        return s if isinstance(u, Gen) else f"({s})"

    if isinstance(t, Gen):
        if t.params:
            return f"{t.name}[{','.join(map(str, t.params))}]"
        return t.name
    if isinstance(t, Comp):
        return f"{sub(t.left)} ; {sub(t.right)}"
    if isinstance(t, Tens):
        return f"{sub(t.left)} * {sub(t.right)}"
    raise TypeError(f"not a term: {t!r}")


def elaborate(t: Term) -> Cobordism:
    """Interpret a well-typed term as a cobordism normal form."""
    if isinstance(t, Gen):
        if t.name == "mu":
            return surface.e_block(1, 0, 2)
        if t.name == "eta":
            return surface.e_block(1, 0, 0)
        if t.name == "delta":
            return surface.e_block(2, 0, 1)
        if t.name == "eps":
            return surface.e_block(0, 0, 1)
        if t.name == "swap":
            return surface.permutation((1, 0))
        if t.name == "id":
            return surface.identity(t.params[0])
        if t.name == "E":
            return surface.e_block(*t.params)
    if isinstance(t, Comp):
        return surface.compose(elaborate(t.left), elaborate(t.right))
    if isinstance(t, Tens):
        return surface.tensor(elaborate(t.left), elaborate(t.right))
    raise TypeError(f"not a term: {t!r}")


# --- canonical words -------------------------------------------------------

def _seq(a: Optional[Term], b: Optional[Term]) -> Optional[Term]:
    if a is None:
        return b
    if b is None:
        return a
    return Comp(left=a, right=b)


def _mu_tree(n: int) -> Optional[Term]:
    # n -> 1 multiplication fold; None stands for the identity on one circle
    if n == 0:
        return Gen(name="eta")
    if n == 1:
        return None
    t: Term = Gen(name="mu")
    for _ in range(n - 2):
        t = Comp(left=Tens(left=t, right=Gen(name="id", params=(1,))),
                 right=Gen(name="mu"))
    return t


def _delta_tree(m: int) -> Optional[Term]:
    if m == 0:
        return Gen(name="eps")
    if m == 1:
        return None
    t: Term = Gen(name="delta")
    for _ in range(m - 2):
        t = Comp(left=Gen(name="delta"),
                 right=Tens(left=t, right=Gen(name="id", params=(1,))))
    return t


def _handle_word(k: int) -> Optional[Term]:
    t = None
    for _ in range(k):
        t = _seq(t, Comp(left=Gen(name="delta"), right=Gen(name="mu")))
    return t


def _swap_at(j: int, n: int) -> Term:
    t: Term = Gen(name="swap")
    if j > 0:
        t = Tens(left=Gen(name="id", params=(j,)), right=t)
    if j + 2 < n:
        t = Tens(left=t, right=Gen(name="id", params=(n - j - 2,)))
    return t


def _perm_word(p: list[int]) -> Optional[Term]:
    # word of adjacent transpositions sending input position i to output p[i]
    n = len(p)
    cur = list(range(n))
    t: Optional[Term] = None
    done = False
    while not done:
        done = True
        for j in range(n - 1):
            if p[cur[j]] > p[cur[j + 1]]:
                cur[j], cur[j + 1] = cur[j + 1], cur[j]
                t = _seq(t, _swap_at(j, n))
                done = False
    return t


def format_cobordism(K: Cobordism) -> str:
    """A canonical generator word with elaborate(parse(word)) == K.

    Each component is rendered as a multiplication tree, genus-many
    handle loops ``delta ; mu``, then a comultiplication tree; the
    boundary circles are routed to their positions by words of adjacent
    transpositions, and closed pieces become ``eta ; ... ; eps``.
    """
    comps = K.components
    in_order = [i for c in comps for i in c.ingoing]
    out_order = [j for c in comps for j in c.outgoing]
    p_in = [0] * K.n_in
    for slot, i in enumerate(in_order):
        p_in[i] = slot
    word = _perm_word(p_in) if K.n_in else None
    blocks: Optional[Term] = None
    for c in comps:
        piece = _seq(_mu_tree(len(c.ingoing)),
                     _seq(_handle_word(c.genus), _delta_tree(len(c.outgoing))))
        if piece is None:
            piece = Gen(name="id", params=(1,))
        blocks = piece if blocks is None else Tens(left=blocks, right=piece)
    word = _seq(word, blocks)
    word = _seq(word, _perm_word(out_order) if K.n_out else None)
    for g in K.closed_genera:
        piece = _seq(Gen(name="eta"), _seq(_handle_word(g), Gen(name="eps")))
        word = piece if word is None else Tens(left=word, right=piece)
    if word is None:
        word = Gen(name="id", params=(0,))
    return print_term(word)
