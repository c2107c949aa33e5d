"""String rewriting systems: rules, rewriting, classification, critical pairs.

A system rewrites by substring replacement. The normalization strategy is
pinned for reproducibility: the leftmost redex fires first, and among rules
matching at the same position the one earliest in file order wins. For
confluent systems the resulting normal form is strategy-independent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import automata
from .automata import Dfa
from .errors import FuelExhausted, SrsSyntaxError
from .words import EMPTY, Word, contains_sub, find_sub, validate_symbol, word, word_str

DEFAULT_FUEL = 10**6


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if not self.lhs:
            raise SrsSyntaxError("a rule needs a non-empty left-hand side")

    def __str__(self):
        return f"{word_str(self.lhs)} -> {word_str(self.rhs)}"


@dataclass(frozen=True)
class Srs:
    """A finite rule set over a declared alphabet.

    The alphabet may be strictly larger than the set of symbols occurring in
    rules (extra letters matter to problems quantifying over all words).
    Rule order is stable and used for deterministic tie-breaking.
    """

    rules: tuple[Rule, ...]
    alphabet: frozenset[str]

    def __post_init__(self):
        for r in self.rules:
            for s in r.lhs + r.rhs:
                if s not in self.alphabet:
                    raise SrsSyntaxError(f"rule symbol {s!r} not in alphabet")

    @classmethod
    def make(cls, rules, alphabet=None) -> "Srs":
        """Build a system from (lhs, rhs) pairs of words or token strings."""
        rs = []
        for lhs, rhs in rules:
            lhs = word(lhs) if isinstance(lhs, str) else tuple(lhs)
            rhs = word(rhs) if isinstance(rhs, str) else tuple(rhs)
            rs.append(Rule(lhs, rhs))
        symbols = {s for r in rs for s in r.lhs + r.rhs}
        if alphabet is not None:
            symbols |= set(alphabet)
        return cls(tuple(rs), frozenset(symbols))

    def max_lhs_len(self) -> int:
        return max((len(r.lhs) for r in self.rules), default=0)

    def __str__(self):
        return format_srs(self)


@dataclass(frozen=True)
class Classification:
    dwindling: bool
    monadic: bool
    length_reducing: bool
    special: bool
    inter_reduced: bool


@dataclass(frozen=True)
class CriticalPair:
    peak: Word
    left: Word
    right: Word
    overlap_kind: str  # "suffix-prefix" or "containment"


@dataclass(frozen=True)
class ConvergenceEvidence:
    terminating: str  # "proved" or "unknown"
    locally_confluent: bool | None  # None when fuel ran out mid-join

    @property
    def convergent(self) -> bool:
        return self.terminating == "proved" and self.locally_confluent is True


# ---------------------------------------------------------------------------
# file format

_ALPHABET_MARK = "#! alphabet:"


def parse_srs(text: str) -> Srs:
    """Parse the one-rule-per-line format.

    ``TOKENS -> TOKENS`` per line, ``_`` for the empty word, tokens separated
    by spaces. A line whose first token starts the comment marker ``#`` is
    skipped, except that ``#! alphabet: ...`` declares extra alphabet
    symbols (the formatter emits it so that parse(format(R)) == R even when
    the alphabet is larger than the rule symbols).
    """
    rules = []
    extra: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith(_ALPHABET_MARK):
                for tok in line[len(_ALPHABET_MARK):].split():
                    extra.add(validate_symbol(tok, lineno))
            continue
        tokens = line.split()
        if tokens.count("->") != 1:
            raise SrsSyntaxError("expected exactly one '->'", lineno)
        k = tokens.index("->")
        lhs_toks, rhs_toks = tokens[:k], tokens[k + 1:]
        try:
            lhs = _side(lhs_toks, lineno)
            rhs = _side(rhs_toks, lineno)
        except SrsSyntaxError:
            raise
        if not lhs:
            raise SrsSyntaxError("empty left-hand side", lineno)
        rules.append(Rule(lhs, rhs))
    symbols = {s for r in rules for s in r.lhs + r.rhs} | extra
    return Srs(tuple(rules), frozenset(symbols))


def _side(tokens: list[str], lineno: int) -> Word:
    if tokens == ["_"]:
        return EMPTY
    if not tokens:
        raise SrsSyntaxError("missing word (use '_' for the empty word)", lineno)
    return tuple(validate_symbol(t, lineno) for t in tokens)


def format_srs(r: Srs) -> str:
    lines = [f"{word_str(rule.lhs)} -> {word_str(rule.rhs)}" for rule in r.rules]
    used = {s for rule in r.rules for s in rule.lhs + rule.rhs}
    spare = sorted(r.alphabet - used)
    if spare:
        lines.append(f"{_ALPHABET_MARK} " + " ".join(spare))
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# rewriting


def _leftmost_redex(cur: list, rules, start: int):
    """(position, rule index) of the leftmost redex at or after ``start``."""
    n = len(cur)
    for p in range(start, n):
        for i, rule in enumerate(rules):
            d = len(rule.lhs)
            if p + d <= n:
                lhs = rule.lhs
                for k in range(d):
                    if cur[p + k] != lhs[k]:
                        break
                else:
                    return p, i
    return -1, -1


def rewrite_steps(r: Srs, w: Word, fuel: int = DEFAULT_FUEL):
    """Yield the words of the leftmost-redex rewrite sequence from ``w``.

    The first yielded word is ``w`` itself; the last is irreducible.
    """
    if fuel < 1:
        raise ValueError("fuel must be at least 1")
    cur = list(w)
    yield w
    if not r.rules:
        return
    maxd = r.max_lhs_len()
    scan_from = 0
    steps = 0
    while True:
        p, i = _leftmost_redex(cur, r.rules, scan_from)
        if p < 0:
            return
        if steps >= fuel:
            raise FuelExhausted(
                f"no normal form within {fuel} steps", word=tuple(cur)
            )
        rule = r.rules[i]
        cur[p : p + len(rule.lhs)] = list(rule.rhs)
        steps += 1
        # Nothing before p was a redex and the tail beyond the edit is
        # unchanged, so the next leftmost redex starts at p - maxd + 1 or later.
        scan_from = max(0, p - maxd + 1)
        yield tuple(cur)


def normalize(r: Srs, w: Word, fuel: int = DEFAULT_FUEL) -> Word:
    """The irreducible word reached from ``w`` under the pinned strategy.

    Same rewrite sequence as :func:`rewrite_steps`, but on a zipper (done
    prefix plus reversed pending suffix) so long words never pay for tail
    shifts; the scan position only backs up maxlhs - 1 places after a
    rewrite.
    """
    if fuel < 1:
        raise ValueError("fuel must be at least 1")
    if not r.rules:
        return w
    maxd = r.max_lhs_len()
    rules = r.rules
    left: list = []
    right = list(w)
    right.reverse()
    steps = 0
    while right:
        fire = None
        n = len(right)
        for rule in rules:
            lhs = rule.lhs
            d = len(lhs)
            if d <= n and right[-1] == lhs[0]:
                for k in range(1, d):
                    if right[-1 - k] != lhs[k]:
                        break
                else:
                    fire = rule
                    break
        if fire is None:
            left.append(right.pop())
            continue
        if steps >= fuel:
            raise FuelExhausted(
                f"no normal form within {fuel} steps",
                word=tuple(left) + tuple(reversed(right)),
            )
        del right[n - len(fire.lhs):]
        right.extend(reversed(fire.rhs))
        steps += 1
        for _ in range(min(len(left), maxd - 1)):
            right.append(left.pop())
    return tuple(left)


def is_irreducible(r: Srs, w: Word) -> bool:
    return not any(contains_sub(w, rule.lhs) for rule in r.rules)


def one_step_rewrites(r: Srs, w: Word) -> list[Word]:
    """All words reachable from ``w`` in exactly one rewrite, any redex."""
    out = []
    for rule in r.rules:
        p = find_sub(w, rule.lhs, 0)
        while p >= 0:
            out.append(w[:p] + rule.rhs + w[p + len(rule.lhs):])
            p = find_sub(w, rule.lhs, p + 1)
    return out


# ---------------------------------------------------------------------------
# classification


def classify(r: Srs) -> Classification:
    rules = r.rules
    dwindling = all(
        len(x.rhs) < len(x.lhs) and x.lhs[: len(x.rhs)] == x.rhs for x in rules
    )
    monadic = all(len(x.rhs) <= 1 for x in rules)
    length_reducing = all(len(x.lhs) > len(x.rhs) for x in rules)
    special = all(x.rhs == EMPTY for x in rules)
    inter_reduced = True
    for i, a in enumerate(rules):
        for j, b in enumerate(rules):
            if i != j and contains_sub(b.lhs, a.lhs):
                inter_reduced = False
    return Classification(dwindling, monadic, length_reducing, special, inter_reduced)


def critical_pairs(r: Srs) -> list[CriticalPair]:
    """All overlap peaks of the rule set, deduplicated.

    Proper suffix-prefix overlaps give peaks l1[:|l1|-t] l2; containments
    (one lhs inside another, which only non-inter-reduced systems have) give
    the containing lhs itself. Self-overlaps of a rule count; the trivial
    full overlap of a rule with itself does not.
    """
    out = []
    seen = set()
    rules = r.rules

    def emit(peak, left, right, kind):
        key = (peak, left, right, kind)
        if key not in seen:
            seen.add(key)
            out.append(CriticalPair(peak, left, right, kind))

    for i, a in enumerate(rules):
        for j, b in enumerate(rules):
            la, lb = a.lhs, b.lhs
            # suffix of la  ==  prefix of lb, proper on both sides
            for t in range(1, min(len(la), len(lb))):
                if la[len(la) - t:] == lb[:t]:
                    peak = la + lb[t:]
                    left = a.rhs + lb[t:]
                    right = la[: len(la) - t] + b.rhs
                    emit(peak, left, right, "suffix-prefix")
            # lb contained in la (equal lhs only across distinct rules)
            if i != j:
                p = find_sub(la, lb, 0)
                while p >= 0:
                    peak = la
                    left = a.rhs
                    right = la[:p] + b.rhs + la[p + len(lb):]
                    emit(peak, left, right, "containment")
                    p = find_sub(la, lb, p + 1)
    return out


def check_convergence(r: Srs, fuel: int = DEFAULT_FUEL) -> ConvergenceEvidence:
    """Termination evidence plus a local-confluence check via critical pairs.

    Termination is only ever PROVED through the length-reducing criterion;
    everything else stays unknown. Local confluence is decided by joining
    every critical pair within the fuel budget; running out of fuel yields
    an unknown verdict, never a false claim.
    """
    cls = classify(r)
    terminating = "proved" if cls.length_reducing else "unknown"
    locally_confluent: bool | None = True
    for cp in critical_pairs(r):
        try:
            if normalize(r, cp.left, fuel) != normalize(r, cp.right, fuel):
                locally_confluent = False
                break
        except FuelExhausted:
            locally_confluent = None
            break
    return ConvergenceEvidence(terminating, locally_confluent)


# ---------------------------------------------------------------------------
# the irreducible-word automaton


def irr_dfa(r: Srs) -> Dfa:
    """DFA accepting exactly the words containing no rule's left-hand side.

    Aho-Corasick automaton over the lhs patterns with its match states
    funnelled into a sink, then complemented: the survivors are the words
    avoiding every pattern.
    """
    alphabet = r.alphabet
    patterns = [rule.lhs for rule in r.rules]
    if not patterns:
        return automata.universal_dfa(alphabet)

    goto: list[dict] = [{}]
    fail = [0]
    matched = [False]

    for pat in patterns:
        node = 0
        for c in pat:
            node = goto[node].setdefault(c, len(goto))
            if node == len(fail):
                goto.append({})
                fail.append(0)
                matched.append(False)
        matched[node] = True

    queue = deque()
    for c, nxt in goto[0].items():
        fail[nxt] = 0
        queue.append(nxt)
    while queue:
        u = queue.popleft()
        for c, v in goto[u].items():
            queue.append(v)
            f = fail[u]
            while f and c not in goto[f]:
                f = fail[f]
            fail[v] = goto[f][c] if c in goto[f] and goto[f][c] != v else 0
            matched[v] = matched[v] or matched[fail[v]]

    sink = len(goto)

    def step(u, c):
        while True:
            if c in goto[u]:
                return goto[u][c]
            if u == 0:
                return 0
            u = fail[u]

    trans = {(sink, c): sink for c in alphabet}
    for u in range(len(goto)):
        for c in alphabet:
            if matched[u]:
                trans[(u, c)] = sink
            else:
                v = step(u, c)
                trans[(u, c)] = sink if matched[v] else v
    states = frozenset(range(len(goto))) | {sink}
    accepting = frozenset(u for u in range(len(goto)) if not matched[u])
    return automata._relabel_dfa(alphabet, trans, 0, accepting)
