"""Bounded brute-force ground truth for the three decision problems.

Equivalence of two words is decided by normal-form equality, which is only
valid for convergent systems, so the oracle refuses systems whose
convergence evidence fails (an assume_convergent escape hatch covers
systems that terminate for reasons the length-reducing criterion cannot
see). Enumeration is by length and then lexicographically by token, making
witnesses canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian

from .errors import FuelExhausted, NotConvergent
from .srs import DEFAULT_FUEL, Srs, check_convergence, is_irreducible, normalize
from .words import Word, word_str

_ARITY = {"fp": 1, "ct": 2, "ce_two": 4, "ce_one": 2}


@dataclass(frozen=True)
class OracleQuery:
    mode: str  # fp | ct | ce_two | ce_one
    srs: Srs
    inputs: tuple[Word, ...]
    max_len: int
    fuel: int = DEFAULT_FUEL

    def __post_init__(self):
        if self.mode not in _ARITY:
            raise ValueError(f"unknown oracle mode {self.mode!r}")
        if len(self.inputs) != _ARITY[self.mode]:
            raise ValueError(
                f"mode {self.mode!r} takes {_ARITY[self.mode]} input words, "
                f"got {len(self.inputs)}"
            )
        if self.max_len < 0:
            raise ValueError("max_len must be >= 0")


@dataclass(frozen=True)
class OracleAnswer:
    found: bool
    witnesses: tuple[Word, ...]
    words_examined: int


def _words(letters, max_len):
    for k in range(max_len + 1):
        yield from _cartesian(letters, repeat=k)


def oracle_search(q: OracleQuery, *, assume_convergent: bool = False) -> OracleAnswer:
    """Exhaustive shortest-first search for a witness within the bound.

    fp: a W with alpha W ~ W. ct: a W with alpha W ~ beta W. ce_two: a
    pair (X, Y), enumerated by total length, satisfying both equations.
    ce_one: a pair of distinct irreducible words (reported longer first)
    equated by both inputs. words_examined counts enumerated candidates
    (words for fp/ct, pairs for the ce modes).
    """
    r = q.srs
    ev = check_convergence(r, q.fuel)
    if ev.locally_confluent is False:
        raise NotConvergent("the system is not confluent; normal forms are not canonical")
    if not assume_convergent and not ev.convergent:
        raise NotConvergent(
            "convergence evidence is incomplete; pass assume_convergent=True "
            "to accept it by assertion"
        )
    letters = sorted(r.alphabet)

    def nf(w: Word) -> Word:
        try:
            return normalize(r, w, q.fuel)
        except FuelExhausted:
            raise FuelExhausted(
                f"fuel exhausted while normalizing {word_str(w)!r} mid-search",
                word=w,
            )

    examined = 0
    if q.mode in ("fp", "ct"):
        if q.mode == "fp":
            (alpha,) = q.inputs
            test = lambda w: nf(alpha + w) == nf(w)
        else:
            alpha, beta = q.inputs
            test = lambda w: nf(alpha + w) == nf(beta + w)
        for w in _words(letters, q.max_len):
            examined += 1
            if test(w):
                return OracleAnswer(True, (w,), examined)
        return OracleAnswer(False, (), examined)

    if q.mode == "ce_two":
        a1, a2, b1, b2 = q.inputs
        by_len = [list(_cartesian(letters, repeat=k)) for k in range(q.max_len + 1)]
        for total in range(2 * q.max_len + 1):
            for i in range(max(0, total - q.max_len), min(q.max_len, total) + 1):
                for x in by_len[i]:
                    for y in by_len[total - i]:
                        examined += 1
                        if nf(a1 + x) == nf(a2 + y) and nf(b1 + x) == nf(b2 + y):
                            return OracleAnswer(True, (x, y), examined)
        return OracleAnswer(False, (), examined)

    # ce_one: distinct irreducible pairs, canonically longer-first.
    alpha, beta = q.inputs
    irr = [
        [w for w in _cartesian(letters, repeat=k) if is_irreducible(r, w)]
        for k in range(q.max_len + 1)
    ]
    for total in range(2 * q.max_len + 1):
        lo = (total + 1) // 2  # the longer component comes first
        for i in range(min(q.max_len, total), lo - 1, -1):
            j = total - i
            if j > q.max_len:
                continue
            for w1 in irr[i]:
                for w2 in irr[j]:
                    if i == j and w1 <= w2:
                        continue  # canonical order: w1 is the lexicographically larger
                    examined += 1
                    if nf(alpha + w1) == nf(alpha + w2) and nf(beta + w1) == nf(beta + w2):
                        return OracleAnswer(True, (w1, w2), examined)
    return OracleAnswer(False, (), examined)
