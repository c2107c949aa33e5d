"""Decision procedures for monadic convergent systems.

Implements the right-factor automata RF(x, y) = { z irreducible : xz
normalizes to y }, the minimal-product sets MP, the finite families of
minimal solution pairs for one-sided equations, and on top of those the
common-term decision, the two-mapping common-equation decision and the
one-mapping common-equation decision. Every positive answer is re-verified
by direct normalization before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import automata
from .automata import (
    Dfa,
    WitnessTriple,
    canonical_key,
    concat_word,
    determinize_mefa,
    dfa_from_words,
    exists_xyz,
    intersect_dfa,
    left_quotient_mefa,
    minimize_dfa,
    union_dfa,
    _bfs_shortest_word,
)
from .errors import (
    DegenerateInput,
    FuelExhausted,
    InputReducible,
    NotConvergent,
    NotInterReduced,
    NotMonadic,
    VerificationFailed,
)
from .srs import DEFAULT_FUEL, Srs, check_convergence, classify, irr_dfa, is_irreducible, normalize
from .words import EMPTY, Word, word_str


@dataclass(frozen=True)
class RfLanguage:
    """Regular language of right factors: accepted z are irreducible and
    satisfy normalize(source + z) == target."""

    dfa: Dfa
    source: Word
    target: Word


@dataclass(frozen=True)
class SolPair:
    """One cartesian-product term of a minimal-solution family.

    case_tag "a" covers the split where the first side absorbs the shared
    suffix, case_tag "b" the symmetric split (with a non-empty shift).
    """

    left: Dfa
    right: Dfa
    case_tag: str


@dataclass(frozen=True)
class CtSolution:
    w: Word


@dataclass(frozen=True)
class CeSolution:
    x: Word
    y: Word


_CASCADE_FUEL = 10_000


class MonadicContext:
    """Per-system workspace for the monadic solvers.

    Checks the class hypotheses once and memoizes every constructed
    language behind a canonical-form pool, so sweeps over many inputs of
    the same system stay cheap. Purely a cache: results are identical with
    a fresh context per call.
    """

    def __init__(self, r: Srs, fuel: int = DEFAULT_FUEL, assume_convergent: bool = False):
        cls = classify(r)
        if not cls.monadic:
            raise NotMonadic("every right-hand side must be a single symbol or empty")
        if not cls.inter_reduced:
            raise NotInterReduced(
                "no left-hand side may be a substring of another; "
                "inter-reduce the system first"
            )
        ev = check_convergence(r, fuel)
        if ev.locally_confluent is False:
            raise NotConvergent("a critical pair fails to join; the system is not confluent")
        if not assume_convergent:
            if ev.terminating != "proved":
                raise NotConvergent(
                    "termination is unproved for this system; pass "
                    "assume_convergent=True to accept it by assertion"
                )
            if ev.locally_confluent is None:
                raise NotConvergent("confluence check ran out of fuel")
        self.r = r
        self.fuel = fuel
        self.letters = sorted(r.alphabet)
        self.maxd = r.max_lhs_len()
        self.irr = irr_dfa(r)
        self._pool_keys: dict[tuple, int] = {}
        self._pool: list[Dfa] = []
        self._rf1: dict[tuple, tuple[int, RfLanguage]] = {}
        self._rf: dict[tuple, tuple[int, RfLanguage]] = {}
        self._sol: dict[tuple, list[tuple[SolPair, int, int]]] = {}
        self._mp: dict[Word, frozenset] = {}
        self._pair_witness: dict[tuple[int, int], Word | None] = {}
        self._quotient: dict[tuple[int, int], int] = {}
        self._joint: dict[tuple[int, int], Word | None] = {}
        self._xyz: dict[tuple[int, int], WitnessTriple | None] = {}

    # -- canonical pool ----------------------------------------------------

    def intern(self, dfa: Dfa) -> int:
        mini = minimize_dfa(dfa)
        key = canonical_key(mini)
        got = self._pool_keys.get(key)
        if got is None:
            got = len(self._pool)
            self._pool_keys[key] = got
            self._pool.append(mini)
        return got

    def dfa(self, ident: int) -> Dfa:
        return self._pool[ident]

    # -- memoized constructions --------------------------------------------

    def rf1(self, w: Word, target: Word) -> tuple[int, RfLanguage]:
        key = (w, target)
        got = self._rf1.get(key)
        if got is None:
            lang = _build_rf1(self, w, target)
            got = (self.intern(lang.dfa), lang)
            self._rf1[key] = got
        return got

    def rf(self, x: Word, y: Word) -> tuple[int, RfLanguage]:
        key = (x, y)
        got = self._rf.get(key)
        if got is None:
            lang = _build_rf(self, x, y)
            got = (self.intern(lang.dfa), lang)
            self._rf[key] = got
        return got

    def mp(self, alpha: Word) -> frozenset:
        got = self._mp.get(alpha)
        if got is None:
            got = frozenset(
                normalize(self.r, p + s, self.fuel)
                for p in (alpha[:i] for i in range(len(alpha) + 1))
                for s in [EMPTY] + [(c,) for c in self.letters]
            )
            self._mp[alpha] = got
        return got

    def sol_pairs(self, a1: Word, a2: Word) -> list[tuple[SolPair, int, int]]:
        key = (a1, a2)
        got = self._sol.get(key)
        if got is None:
            got = _build_sol_pairs(self, a1, a2)
            self._sol[key] = got
        return got

    def pair_witness(self, id_left: int, id_right: int) -> Word | None:
        key = (id_left, id_right)
        if key not in self._pair_witness:
            prod = intersect_dfa(self.dfa(id_left), self.dfa(id_right))
            self._pair_witness[key] = _bfs_shortest_word(prod, [prod.start], prod.accepting)
        return self._pair_witness[key]

    def quotient(self, id_big: int, id_small: int) -> int:
        """Interned DFA for L(big) quotiented by L(small):
        {v : exists u in L(small) with uv in L(big)}."""
        key = (id_big, id_small)
        got = self._quotient.get(key)
        if got is None:
            mefa = left_quotient_mefa(self.dfa(id_big), self.dfa(id_small))
            got = self.intern(determinize_mefa(mefa))
            self._quotient[key] = got
        return got

    def joint_witness(self, qid1: int, qid2: int) -> Word | None:
        key = (qid1, qid2)
        if key not in self._joint:
            prod = intersect_dfa(self.dfa(qid1), self.dfa(qid2))
            self._joint[key] = _bfs_shortest_word(prod, [prod.start], prod.accepting)
        return self._joint[key]

    def xyz(self, id_m: int, id_n: int) -> WitnessTriple | None:
        key = (id_m, id_n)
        if key not in self._xyz:
            self._xyz[key] = exists_xyz(self.dfa(id_m), self.dfa(id_n))
        return self._xyz[key]


def _context(r, fuel, assume_convergent, ctx) -> MonadicContext:
    if ctx is not None:
        if ctx.r is not r and ctx.r != r:
            raise ValueError("context was built for a different system")
        return ctx
    return MonadicContext(r, fuel=fuel, assume_convergent=assume_convergent)


# ---------------------------------------------------------------------------
# RF construction


def _suffix_redex(rules_by_len, v: list):
    """The unique suffix redex of v, as (rule, length), or None.

    Longest match first (that is the leftmost redex among suffixes), rule
    order breaking ties between equal left-hand sides.
    """
    n = len(v)
    for d, rules in rules_by_len:
        if d > n:
            continue
        tail = v[n - d:]
        for rule in rules:
            if list(rule.lhs) == tail:
                return rule, d
    return None


def _build_rf1(ctx: MonadicContext, w: Word, target: Word) -> RfLanguage:
    """Frontier construction for RF(w, a) with a single-symbol (or empty) target.

    Appending one letter to an irreducible word only ever creates suffix
    redexes, so normalization is a stack process. A machine state is
    (u, f): u the current normal form, f the frontier height, i.e. the
    stack height right after the last reduction (initially |w|). A redex
    that sits strictly above the frontier is a substring of the appended
    word itself, which therefore is reducible: that branch is dead (the
    final intersection with IRR(R) also enforces it). Once |u| reaches
    f + maxlhs no reduction can ever touch the frontier again, so the state
    collapses: it accepts exactly its current word and everything after it
    is dead. Hence |u| <= f + maxlhs - 1 on live states and the machine is
    finite.
    """
    if len(target) > 1:
        raise ValueError("rf1 target must be a single symbol or the empty word")
    r = ctx.r
    alphabet = r.alphabet
    if not r.rules:
        if w == target:
            lang = dfa_from_words([EMPTY], alphabet)
        elif len(w) < len(target) and target[: len(w)] == w:
            lang = dfa_from_words([target[len(w):]], alphabet)
        else:
            lang = automata.empty_dfa(alphabet)
        return RfLanguage(lang, w, target)
    if not is_irreducible(r, w):
        raise InputReducible(f"rf source {word_str(w)!r} is reducible")

    by_len: dict[int, list] = {}
    for rule in r.rules:
        by_len.setdefault(len(rule.lhs), []).append(rule)
    rules_by_len = sorted(by_len.items(), key=lambda kv: -kv[0])
    maxd = ctx.maxd

    dead = "dead"
    locked_hit = "locked-accept"

    def advance(state, c):
        if state == dead or state == locked_hit:
            return dead
        u, f = state
        v = list(u) + [c]
        steps = 0
        while True:
            hit = _suffix_redex(rules_by_len, v)
            if hit is None:
                break
            rule, d = hit
            if len(v) - d >= f:
                # The whole redex is above the frontier: it is a substring
                # of the appended word, so that word is reducible.
                return dead
            v[len(v) - d:] = list(rule.rhs)
            f = len(v)
            steps += 1
            if steps > _CASCADE_FUEL:
                raise FuelExhausted(
                    "suffix reduction cascade did not terminate "
                    "(the system is not terminating)",
                    word=tuple(v),
                )
        if len(v) >= f + maxd:
            return locked_hit if tuple(v) == target else dead
        return (tuple(v), f)

    start = (w, len(w))
    trans = {}
    seen = {start, dead, locked_hit}
    queue = [start]
    syms = sorted(alphabet)
    while queue:
        state = queue.pop()
        for c in syms:
            nxt = advance(state, c)
            trans[(state, c)] = nxt
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    for c in syms:
        trans[(dead, c)] = dead
        trans[(locked_hit, c)] = dead
    accepting = {s for s in seen if s not in (dead, locked_hit) and s[0] == target}
    accepting.add(locked_hit)  # only ever created with the target word on the stack
    machine = automata._relabel_dfa(alphabet, trans, start, frozenset(accepting))
    return RfLanguage(intersect_dfa(machine, ctx.irr), w, target)


def _build_rf(ctx: MonadicContext, x: Word, y: Word) -> RfLanguage:
    """RF(x, y) for an arbitrary irreducible target y.

    A right factor z splits as z1 z2 where a suffix x2 of x together with
    z1 collapses to at most one letter a, and x1 a z2 is the target
    literally. So the language is the finite union, over splits of x and
    a in the alphabet plus the empty word with x1 a a prefix of y, of
    RF(x2, a) concatenated with the rest of y, all inside IRR(R).
    """
    r = ctx.r
    if not is_irreducible(r, x):
        raise InputReducible(f"rf source {word_str(x)!r} is reducible")
    if not is_irreducible(r, y):
        raise InputReducible(f"rf target {word_str(y)!r} is reducible")
    parts = []
    for split in range(len(x) + 1):
        x1, x2 = x[:split], x[split:]
        for a in [EMPTY] + [(c,) for c in ctx.letters]:
            pre = x1 + a
            if y[: len(pre)] == pre:
                _, lang = ctx.rf1(x2, a)
                parts.append(concat_word(lang.dfa, y[len(pre):]))
    if not parts:
        return RfLanguage(automata.empty_dfa(r.alphabet), x, y)
    acc = parts[0]
    for p in parts[1:]:
        acc = union_dfa(acc, p)
    return RfLanguage(intersect_dfa(acc, ctx.irr), x, y)


def _build_sol_pairs(ctx: MonadicContext, a1: Word, a2: Word):
    """The minimal-solution family for the one equation a1 X ~ a2 Y.

    One pair per (split of a1, letter a, split of a2, letter b) whose
    boundary equation is solvable by literal prefix matching: either
    alpha21 b is a prefix of alpha11 a (case "a", the shift Z moves into
    the right language) or alpha11 a is a proper prefix of alpha21 b
    (case "b"). Enumeration order is split1, a, split2, b, with the empty
    extension before the letters; it is the tie-break order for witnesses.
    """
    a1 = normalize(ctx.r, a1, ctx.fuel)
    a2 = normalize(ctx.r, a2, ctx.fuel)
    ext = [EMPTY] + [(c,) for c in ctx.letters]
    out = []
    for s1 in range(len(a1) + 1):
        a11, a12 = a1[:s1], a1[s1:]
        for a in ext:
            lhs_a = a11 + a
            for s2 in range(len(a2) + 1):
                a21, a22 = a2[:s2], a2[s2:]
                for b in ext:
                    lhs_b = a21 + b
                    if lhs_a[: len(lhs_b)] == lhs_b:
                        shift = lhs_a[len(lhs_b):]
                        id_l, left = ctx.rf1(a12, a)
                        right_dfa = concat_word(ctx.rf1(a22, b)[1].dfa, shift)
                        pair = SolPair(left.dfa, right_dfa, "a")
                        out.append((pair, id_l, ctx.intern(right_dfa)))
                    elif len(lhs_a) < len(lhs_b) and lhs_b[: len(lhs_a)] == lhs_a:
                        shift = lhs_b[len(lhs_a):]
                        left_dfa = concat_word(ctx.rf1(a12, a)[1].dfa, shift)
                        id_r, right = ctx.rf1(a22, b)
                        pair = SolPair(left_dfa, right.dfa, "b")
                        out.append((pair, ctx.intern(left_dfa), id_r))
    return out


# ---------------------------------------------------------------------------
# public operations


def mp_set(r: Srs, alpha: Word, *, fuel: int = DEFAULT_FUEL,
           assume_convergent: bool = False, ctx: MonadicContext | None = None) -> frozenset:
    """Normal forms of every prefix of alpha extended by at most one letter.

    At most (|alpha| + 1) * (|alphabet| + 1) members, each irreducible.
    """
    ctx = _context(r, fuel, assume_convergent, ctx)
    if not is_irreducible(r, alpha):
        raise InputReducible(f"{word_str(alpha)!r} is reducible")
    return ctx.mp(alpha)


def rf1_dfa(r: Srs, w: Word, target: Word, *, fuel: int = DEFAULT_FUEL,
            assume_convergent: bool = False, ctx: MonadicContext | None = None) -> RfLanguage:
    """Right-factor language RF(w, target) for a target of length <= 1."""
    ctx = _context(r, fuel, assume_convergent, ctx)
    return ctx.rf1(w, target)[1]


def rf_dfa(r: Srs, x: Word, y: Word, *, fuel: int = DEFAULT_FUEL,
           assume_convergent: bool = False, ctx: MonadicContext | None = None) -> RfLanguage:
    """Right-factor language RF(x, y) for irreducible x and y."""
    ctx = _context(r, fuel, assume_convergent, ctx)
    return ctx.rf(x, y)[1]


def sol_pairs(r: Srs, alpha1: Word, alpha2: Word, *, fuel: int = DEFAULT_FUEL,
              assume_convergent: bool = False, ctx: MonadicContext | None = None) -> list[SolPair]:
    ctx = _context(r, fuel, assume_convergent, ctx)
    return [pair for pair, _i, _j in ctx.sol_pairs(alpha1, alpha2)]


def solve_ct_monadic(r: Srs, alpha: Word, beta: Word, *, fuel: int = DEFAULT_FUEL,
                     assume_convergent: bool = False,
                     ctx: MonadicContext | None = None) -> CtSolution | None:
    """Decide whether some W satisfies alpha W ~ beta W; return a witness.

    A common multiplier exists exactly when some minimal-solution pair for
    the equation has a non-empty diagonal, i.e. the two languages of the
    pair intersect. The witness is the shortest word of the first
    non-empty intersection in construction order.
    """
    ctx = _context(r, fuel, assume_convergent, ctx)
    raw_alpha, raw_beta = alpha, beta
    alpha = normalize(r, alpha, fuel)
    beta = normalize(r, beta, fuel)
    for _pair, id_l, id_r in ctx.sol_pairs(alpha, beta):
        w = ctx.pair_witness(id_l, id_r)
        if w is None:
            continue
        if normalize(r, raw_alpha + w, fuel) != normalize(r, raw_beta + w, fuel):
            raise VerificationFailed(
                f"constructed common multiplier {word_str(w)!r} failed re-verification"
            )
        if not is_irreducible(r, w):
            w = normalize(r, w, fuel)
        return CtSolution(w)
    return None


def solve_ce_two(r: Srs, alpha1: Word, alpha2: Word, beta1: Word, beta2: Word, *,
                 fuel: int = DEFAULT_FUEL, assume_convergent: bool = False,
                 ctx: MonadicContext | None = None) -> CeSolution | None:
    """Two-mapping common equation: find X, Y with alpha1 X ~ alpha2 Y and
    beta1 X ~ beta2 Y.

    For every pair (i, j) of minimal-solution terms of the two equations
    and both suffix orientations, the shared extension is a word of the
    intersection of two left quotients; a found extension is stitched back
    into concrete (X, Y) and re-verified by normalization.
    """
    if alpha1 == alpha2 and beta1 == beta2:
        raise DegenerateInput("the two substitutions coincide on both inputs")
    ctx = _context(r, fuel, assume_convergent, ctx)
    raw = (alpha1, alpha2, beta1, beta2)
    n1, n2, n3, n4 = (normalize(r, w, fuel) for w in raw)
    sol_a = ctx.sol_pairs(n1, n2)
    sol_b = ctx.sol_pairs(n3, n4)
    for _pa, ia1, ia2 in sol_a:
        for _pb, ib1, ib2 in sol_b:
            for big1, small1, big2, small2 in (
                (ia1, ib1, ia2, ib2),  # the beta-side solution is the shorter one
                (ib1, ia1, ib2, ia2),  # and symmetrically
            ):
                q1 = ctx.quotient(big1, small1)
                q2 = ctx.quotient(big2, small2)
                v = ctx.joint_witness(q1, q2)
                if v is None:
                    continue
                x = _shortest_with_extension(ctx.dfa(small1), ctx.dfa(big1), v) + v
                y = _shortest_with_extension(ctx.dfa(small2), ctx.dfa(big2), v) + v
                if (normalize(r, alpha1 + x, fuel) != normalize(r, alpha2 + y, fuel)
                        or normalize(r, beta1 + x, fuel) != normalize(r, beta2 + y, fuel)):
                    raise VerificationFailed(
                        f"stitched pair ({word_str(x)!r}, {word_str(y)!r}) "
                        "failed re-verification"
                    )
                if not is_irreducible(r, x) or not is_irreducible(r, y):
                    x = normalize(r, x, fuel)
                    y = normalize(r, y, fuel)
                return CeSolution(x, y)
    return None


def _shortest_with_extension(member_of: Dfa, lands_in: Dfa, v: Word) -> Word:
    """Shortest u with u in L(member_of) and u + v in L(lands_in)."""
    shifted_accepting = frozenset(
        q for q in lands_in.states if lands_in.walk(q, v) in lands_in.accepting
    )
    shifted = Dfa(lands_in.states, lands_in.alphabet, lands_in.transition,
                  lands_in.start, shifted_accepting)
    prod = intersect_dfa(member_of, shifted)
    u = _bfs_shortest_word(prod, [prod.start], prod.accepting)
    if u is None:
        raise VerificationFailed("quotient witness has no matching stem")
    return u


def solve_ce_one(r: Srs, alpha: Word, beta: Word, *, fuel: int = DEFAULT_FUEL,
                 assume_convergent: bool = False,
                 ctx: MonadicContext | None = None) -> CeSolution | None:
    """One-mapping common equation: find distinct irreducible X, Y with
    alpha X ~ alpha Y and beta X ~ beta Y.

    Searches, for every pair of minimal products (g1, g2) of the two
    inputs, for distinct stems X', Y' and a shared tail V with X'V, Y'V
    right factors of one input and X', Y' right factors of the other;
    both role assignments are tried. The stitched witnesses are reported
    longer first.
    """
    ctx = _context(r, fuel, assume_convergent, ctx)
    for w, name in ((alpha, "alpha"), (beta, "beta")):
        if not is_irreducible(r, w):
            raise InputReducible(f"{name} = {word_str(w)!r} is reducible")
    by_size = lambda w: (len(w), w)
    for g1 in sorted(ctx.mp(alpha), key=by_size):
        for g2 in sorted(ctx.mp(beta), key=by_size):
            for swapped in (False, True):
                if not swapped:
                    id_m = ctx.rf(beta, g2)[0]
                    id_n = ctx.rf(alpha, g1)[0]
                else:
                    id_m = ctx.rf(alpha, g1)[0]
                    id_n = ctx.rf(beta, g2)[0]
                triple = ctx.xyz(id_m, id_n)
                if triple is None:
                    continue
                x = triple.x + triple.z
                y = triple.y + triple.z
                if x == y or not is_irreducible(r, x) or not is_irreducible(r, y):
                    raise VerificationFailed("stitched one-mapping pair is malformed")
                if (normalize(r, alpha + x, fuel) != normalize(r, alpha + y, fuel)
                        or normalize(r, beta + x, fuel) != normalize(r, beta + y, fuel)):
                    raise VerificationFailed(
                        f"pair ({word_str(x)!r}, {word_str(y)!r}) failed re-verification"
                    )
                first, second = sorted((x, y), key=by_size, reverse=True)
                return CeSolution(first, second)
    return None
