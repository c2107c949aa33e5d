"""The fixed point decision procedure for dwindling convergent systems.

A dwindling rule replaces its left-hand side by a proper prefix of it, so a
rewrite step is a pure deletion. That makes the fixed point question
(is there a W with alpha W rewriting to W?) answerable symbol by symbol:
the j-th letter of a minimal solution is forced to be the j-th letter of
the normal form built so far, and the iteration count is bounded by twice
the longest left-hand side times |alpha|.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import (
    AlphaEmpty,
    AlphaReducible,
    NotConvergent,
    NotDwindling,
    NotMonadic,
    VerificationFailed,
)
from .monadic import MonadicContext, solve_ct_monadic
from .srs import DEFAULT_FUEL, Srs, check_convergence, classify, is_irreducible, normalize
from .words import EMPTY, Word, is_subsequence, word_str


@dataclass(frozen=True)
class FpInstance:
    """A validated fixed point instance: dwindling system, irreducible
    non-empty alpha."""

    r: Srs
    alpha: Word

    def __post_init__(self):
        if not classify(self.r).dwindling:
            raise NotDwindling(
                "every right-hand side must be a proper prefix of its left-hand side"
            )
        if not self.alpha:
            raise AlphaEmpty("alpha must be non-empty")
        if not is_irreducible(self.r, self.alpha):
            raise AlphaReducible(f"alpha = {word_str(self.alpha)!r} is reducible")


@dataclass(frozen=True)
class FpSolution:
    w: Word
    iterations: int
    verified: bool


@dataclass(frozen=True)
class Decomposition:
    """Result of reducing A X for irreducible A: the normal form is
    A[1:b] X[beta] with beta a strictly increasing 1-based index sequence
    into X, b as large as possible."""

    b: int
    beta: tuple[int, ...]


def _require_joinable(r: Srs, fuel: int):
    ev = check_convergence(r, fuel)
    if ev.locally_confluent is False:
        raise NotConvergent("a critical pair fails to join; the system is not confluent")
    if ev.locally_confluent is None:
        raise NotConvergent("confluence check ran out of fuel")


def _suffix_truncate(r: Srs, cur: list) -> None:
    """Apply the unique dwindling reduction available after a push, if any.

    cur is an irreducible word plus one appended symbol, so any redex is a
    suffix; a dwindling rule keeps a prefix of the matched part, which
    amounts to truncation. Longest match first (the leftmost suffix redex),
    rule order on ties.
    """
    n = len(cur)
    best_d, best_e = 0, 0
    for rule in r.rules:
        d = len(rule.lhs)
        if d > n or d <= best_d:
            continue
        if cur[n - d:] == list(rule.lhs):
            best_d, best_e = d, len(rule.rhs)
    if best_d:
        del cur[n - best_d + best_e:]


def solve_fp_dwindling(r: Srs, alpha: Word, *, fuel: int = DEFAULT_FUEL,
                       assume_convergent: bool = False) -> FpSolution | None:
    """Minimal-length W with alpha W rewriting to W, or None.

    Builds W one forced letter at a time: W[j] is the j-th letter of the
    running normal form of alpha W[1..j-1]. Success exactly when the
    running normal form equals the letters built so far; failure when it
    becomes too short without matching, or after 2 * maxlhs * |alpha|
    iterations. Every returned witness is re-verified by a full
    normalization of alpha W.
    """
    if not classify(r).dwindling:
        raise NotDwindling(
            "every right-hand side must be a proper prefix of its left-hand side"
        )
    if not alpha:
        raise AlphaEmpty("alpha must be non-empty")
    if not assume_convergent:
        _require_joinable(r, fuel)
    if not is_irreducible(r, alpha):
        warnings.warn(
            "alpha was reducible; solving for its normal form instead",
            stacklevel=2,
        )
        alpha = normalize(r, alpha, fuel)
        if not alpha:
            # alpha collapsed to the empty word: the empty word is a fixed point.
            return FpSolution(EMPTY, 0, True)
    inst = FpInstance(r, alpha)
    return _solve_fp(inst, fuel)


def _solve_fp(inst: FpInstance, fuel: int) -> FpSolution | None:
    r, alpha = inst.r, inst.alpha
    maxd = r.max_lhs_len()
    bound = 2 * maxd * len(alpha)
    cur = list(alpha)  # the running normal form alpha^(j)
    built: list[str] = []
    for j in range(1, bound + 1):
        c = cur[j - 1]
        built.append(c)
        cur.append(c)
        _suffix_truncate(r, cur)
        if len(cur) == j:
            if cur == built:
                w = tuple(built)
                if normalize(r, alpha + w, fuel) != w:
                    raise VerificationFailed(
                        f"fixed point candidate {word_str(w)!r} failed re-verification"
                    )
                return FpSolution(w, j, True)
            return None
        if len(cur) < j:
            return None
    return None


def decompose_reduction(a: Word, x: Word, r: Srs, *,
                        fuel: int = DEFAULT_FUEL) -> Decomposition:
    """Track which letters of A and X survive normalizing A X.

    Every dwindling step deletes a contiguous block, which can only chop a
    suffix off the surviving A-prefix and a run out of the surviving X
    letters. The returned decomposition takes the largest b with
    normal form = A[1:b] X[beta]; beta is the leftmost embedding.
    """
    if not classify(r).dwindling:
        raise NotDwindling(
            "every right-hand side must be a proper prefix of its left-hand side"
        )
    if a and not is_irreducible(r, a):
        raise AlphaReducible(f"A = {word_str(a)!r} is reducible")
    nf = normalize(r, a + x, fuel)
    for b in range(min(len(a), len(nf)), -1, -1):
        if nf[:b] == a[:b] and is_subsequence(nf[b:], x):
            return Decomposition(b, _leftmost_embedding(nf[b:], x))
    raise VerificationFailed("normal form of A X admits no prefix/subsequence split")


def _leftmost_embedding(sub: Word, w: Word) -> tuple[int, ...]:
    beta = []
    i = 0
    for s in sub:
        while w[i] != s:
            i += 1
        beta.append(i + 1)  # 1-based to match the decomposition convention
        i += 1
    return tuple(beta)


def solve_fp_via_ct(r: Srs, alpha: Word, *, fuel: int = DEFAULT_FUEL,
                    assume_convergent: bool = False,
                    ctx: MonadicContext | None = None) -> Word | None:
    """Fixed point through the common-term solver: FP(alpha) = CT(alpha, empty).

    Only available for monadic convergent systems (the class where the
    common-term problem is decidable)."""
    if not classify(r).monadic:
        raise NotMonadic("every right-hand side must be a single symbol or empty")
    got = solve_ct_monadic(
        r, alpha, EMPTY, fuel=fuel, assume_convergent=assume_convergent, ctx=ctx
    )
    return got.w if got is not None else None
