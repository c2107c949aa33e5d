"""Words over token alphabets.

A symbol is a plain string token (non-empty, no whitespace). A word is a
tuple of symbols; the empty tuple is the empty word. Multi-character tokens
are first class so generated symbols like ``c_3``, ``#1`` or ``a'`` need no
escaping. Text syntax, used in files and on the command line: tokens
separated by spaces, ``_`` alone for the empty word.
"""

from __future__ import annotations

from .errors import SrsSyntaxError

Symbol = str
Word = tuple[str, ...]

EMPTY: Word = ()

# Tokens that the file grammar reserves for itself.
_RESERVED = {"_", "->"}


def validate_symbol(token: str, line: int | None = None) -> str:
    if not token or any(c.isspace() for c in token):
        raise SrsSyntaxError(f"bad symbol token {token!r}", line)
    if token in _RESERVED:
        raise SrsSyntaxError(f"{token!r} is reserved and cannot be a symbol", line)
    if token == "#" or token.startswith("#!"):
        raise SrsSyntaxError(f"{token!r} collides with comment syntax", line)
    return token


def word(text: str) -> Word:
    """Parse a space-separated token string; ``_`` denotes the empty word."""
    tokens = text.split()
    if tokens == ["_"]:
        return EMPTY
    for t in tokens:
        validate_symbol(t)
    return tuple(tokens)


def word_str(w: Word) -> str:
    """Render a word in file syntax (inverse of :func:`word`)."""
    return " ".join(w) if w else "_"


def find_sub(haystack: Word, needle: Word, start: int = 0) -> int:
    """Index of the first occurrence of ``needle`` at or after ``start``, else -1."""
    n, d = len(haystack), len(needle)
    if d == 0:
        return start if start <= n else -1
    for p in range(start, n - d + 1):
        if haystack[p] == needle[0] and haystack[p : p + d] == needle:
            return p
    return -1


def contains_sub(haystack: Word, needle: Word) -> bool:
    return find_sub(haystack, needle) >= 0


def prefixes(w: Word):
    """All prefixes of ``w``, shortest first (includes the empty word and ``w``)."""
    for i in range(len(w) + 1):
        yield w[:i]


def is_subsequence(sub: Word, w: Word) -> bool:
    it = iter(w)
    return all(s in it for s in sub)
