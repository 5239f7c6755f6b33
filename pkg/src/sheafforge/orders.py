"""Monomial orders.

A monomial is a tuple of non-negative integer exponents.  An order object
turns an exponent tuple into a sort key such that ``key(u) > key(v)`` iff the
monomial u is greater.  All orders here are multiplicative well-orders (for
the weighted order this relies on the tiebreak being one).
"""

from __future__ import annotations

from dataclasses import dataclass


class MonomialOrder:
    def key(self, exps):
        raise NotImplementedError

    def greater(self, u, v):
        return self.key(u) > self.key(v)


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, exps):
        return tuple(exps)

    def __str__(self):
        return "lex"


@dataclass(frozen=True)
class DegRevLex(MonomialOrder):
    def key(self, exps):
        # degree first; ties broken by the smallest trailing exponent,
        # i.e. reversed and negated exponent vector compared lexicographically
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __str__(self):
        return "degrevlex"


@dataclass(frozen=True)
class Block(MonomialOrder):
    """Compare the first ``split`` variables with ``first``, then the rest."""

    split: int
    first: MonomialOrder
    second: MonomialOrder

    def key(self, exps):
        return (self.first.key(exps[: self.split]), self.second.key(exps[self.split:]))

    def __str__(self):
        return f"block:{self.split}:{self.first}:{self.second}"


@dataclass(frozen=True)
class Weighted(MonomialOrder):
    """Weighted degree first, then a tiebreak order on the full exponent."""

    weights: tuple
    tiebreak: MonomialOrder

    def key(self, exps):
        wdeg = sum(w * e for w, e in zip(self.weights, exps))
        return ((wdeg,), self.tiebreak.key(exps))

    def __str__(self):
        return "weighted:" + ",".join(str(w) for w in self.weights) + f":{self.tiebreak}"


@dataclass(frozen=True)
class Elimination(MonomialOrder):
    """Eliminates the variables at ``drop`` (any positions, not only a prefix).

    Any monomial involving a dropped variable beats any monomial in the kept
    variables only, so Groebner basis elements free of the dropped block
    generate the elimination ideal.
    """

    drop: tuple  # sorted positions
    inner: MonomialOrder = DegRevLex()
    outer: MonomialOrder = DegRevLex()

    def key(self, exps):
        dropped = tuple(exps[i] for i in self.drop)
        kept = tuple(e for i, e in enumerate(exps) if i not in self.drop)
        return (self.inner.key(dropped), self.outer.key(kept))

    def __str__(self):
        return "elim:" + ",".join(str(i) for i in self.drop)


LEX = Lex()
DEGREVLEX = DegRevLex()


def parse_order(text, nvars=None):
    """Parse the CLI/file syntax for orders (see module docstring of parser)."""
    text = text.strip()
    if text == "lex":
        return LEX
    if text == "degrevlex":
        return DEGREVLEX
    if text.startswith("block:"):
        parts = text.split(":", 2)
        split = int(parts[1])
        rest = parts[2]
        first, second = rest.split(":", 1)
        return Block(split, parse_order(first), parse_order(second))
    if text.startswith("weighted:"):
        parts = text.split(":", 2)
        weights = tuple(int(w) for w in parts[1].split(","))
        return Weighted(weights, parse_order(parts[2]))
    raise ValueError(f"unknown monomial order: {text!r}")
