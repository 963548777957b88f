"""Cycle-notation text for automorphisms of ``K_{n,n}``.

Vertices are written ``v1 .. vn`` for the first part and ``w1 .. wn`` for the
second; internally ``vi`` is index ``i-1`` and ``wi`` is index ``n+i-1``.  A
text is a sequence of parenthesized cycles with whitespace-separated tokens,
e.g. ``"(v1 v2 v3)(w1 w2)"``.  Vertices not mentioned are fixed; the empty
text is the identity.
"""

from __future__ import annotations

import re

from .perms import Perm

__all__ = [
    "DuplicateToken",
    "NotationError",
    "UnbalancedParenthesis",
    "UnknownToken",
    "parse_cycles",
    "print_cycles",
    "token_of",
]

_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+")


class NotationError(ValueError):
    """A cycle-notation text could not be parsed; ``position`` is the
    0-based character offset of the offending token or parenthesis."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class DuplicateToken(NotationError):
    """The same vertex appears more than once across the cycles."""


class UnknownToken(NotationError):
    """A token is not one of ``v1..vn`` / ``w1..wn`` for the given ``n``."""


class UnbalancedParenthesis(NotationError):
    """Parentheses do not pair up, or a token appears outside a cycle."""


def token_of(index: int, n: int) -> str:
    """Vertex token for a 0-based vertex index."""
    if not 0 <= index < 2 * n:
        raise ValueError(f"vertex index {index} out of range for n = {n}")
    return f"v{index + 1}" if index < n else f"w{index - n + 1}"


def _index_of(token: str, n: int, position: int) -> int:
    match = re.fullmatch(r"([vw])([1-9][0-9]*)", token)
    if match is None:
        raise UnknownToken(
            f"token {token!r} is not of the form v<i> or w<i>", position
        )
    part, i = match.group(1), int(match.group(2))
    if i > n:
        raise UnknownToken(
            f"token {token!r} exceeds the part size n = {n}", position
        )
    return i - 1 if part == "v" else n + i - 1


def parse_cycles(text: str, n: int) -> Perm:
    """Parse cycle-notation text into a permutation of ``2n`` vertices.

    Raises :class:`UnbalancedParenthesis`, :class:`UnknownToken`, or
    :class:`DuplicateToken`, each carrying the character position.
    """
    if n < 1:
        raise ValueError(f"part size must be positive, got n = {n}")
    images = list(range(2 * n))
    seen: set[int] = set()
    cycle: list[int] | None = None
    pos = 0
    length = len(text)
    while pos < length:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "(":
            if cycle is not None:
                raise UnbalancedParenthesis("nested opening parenthesis", pos)
            cycle = []
            pos += 1
            continue
        if ch == ")":
            if cycle is None:
                raise UnbalancedParenthesis(
                    "closing parenthesis without an open cycle", pos
                )
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
            cycle = None
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise UnknownToken(f"unexpected character {ch!r}", pos)
        token = match.group(0)
        if cycle is None:
            raise UnbalancedParenthesis(
                f"token {token!r} outside any cycle", pos
            )
        index = _index_of(token, n, pos)
        if index in seen:
            raise DuplicateToken(
                f"vertex {token!r} appears more than once", pos
            )
        seen.add(index)
        cycle.append(index)
        pos = match.end()
    if cycle is not None:
        raise UnbalancedParenthesis("unclosed cycle at end of text", length)
    return Perm(images)


def print_cycles(perm: Perm, n: int) -> str:
    """Normal-form cycle notation: cycles sorted by smallest vertex, each
    cycle starting at its smallest vertex, fixed vertices omitted.  The
    identity prints as the empty string."""
    if perm.degree != 2 * n:
        raise ValueError(
            f"permutation degree {perm.degree} does not match 2n = {2 * n}"
        )
    return "".join(
        "(" + " ".join(token_of(x, n) for x in cycle) + ")"
        for cycle in perm.cycles()
    )
