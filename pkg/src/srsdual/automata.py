"""Finite-automata algebra over token alphabets.

Everything here works with total deterministic transition functions: a DFA
has one start state, a MEFA (multiple-entry DFA) has a set of start states
and accepts a word when some start state runs it into an accepting state.
All constructors relabel states to contiguous integers in breadth-first
order over the sorted alphabet, so results are deterministic and products
never have partial transitions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product as _cartesian

from .errors import AlphabetMismatch
from .words import Word


@dataclass(frozen=True, eq=False)
class Dfa:
    states: frozenset
    alphabet: frozenset[str]
    transition: dict
    start: object
    accepting: frozenset

    def __post_init__(self):
        if self.start not in self.states:
            raise ValueError("start state missing from state set")
        if not self.accepting <= self.states:
            raise ValueError("accepting states outside state set")
        for q in self.states:
            for c in self.alphabet:
                if (q, c) not in self.transition:
                    raise ValueError(f"transition missing for {(q, c)!r}")

    def step(self, state, symbol):
        return self.transition[(state, symbol)]

    def walk(self, state, w: Word):
        for c in w:
            state = self.transition[(state, c)]
        return state

    def accepts(self, w: Word) -> bool:
        for c in w:
            if c not in self.alphabet:
                return False
        return self.walk(self.start, w) in self.accepting


@dataclass(frozen=True, eq=False)
class Mefa:
    states: frozenset
    alphabet: frozenset[str]
    transition: dict
    starts: frozenset
    accepting: frozenset

    def __post_init__(self):
        if not self.starts:
            raise ValueError("a MEFA needs at least one start state")
        if not self.starts <= self.states or not self.accepting <= self.states:
            raise ValueError("start/accepting states outside state set")

    def step(self, state, symbol):
        return self.transition[(state, symbol)]

    def accepts(self, w: Word) -> bool:
        for c in w:
            if c not in self.alphabet:
                return False
        for s in self.starts:
            q = s
            for c in w:
                q = self.transition[(q, c)]
            if q in self.accepting:
                return True
        return False


@dataclass(frozen=True)
class WitnessTriple:
    x: Word
    y: Word
    z: Word

    def __post_init__(self):
        if self.x == self.y:
            raise ValueError("witness triple requires x != y")


# ---------------------------------------------------------------------------
# construction helpers


def _sorted_alpha(alphabet) -> list[str]:
    return sorted(alphabet)


def _relabel_dfa(alphabet, transition, start, accepting) -> Dfa:
    """Keep only states reachable from ``start`` and rename them 0,1,2,...

    Breadth-first over the sorted alphabet, so equal inputs give equal
    outputs regardless of the original state objects.
    """
    syms = _sorted_alpha(alphabet)
    order = {start: 0}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for c in syms:
            r = transition[(q, c)]
            if r not in order:
                order[r] = len(order)
                queue.append(r)
    trans = {(order[q], c): order[transition[(q, c)]] for q in order for c in syms}
    acc = frozenset(order[q] for q in accepting if q in order)
    return Dfa(frozenset(order.values()), frozenset(alphabet), trans, 0, acc)


def _relabel_mefa(alphabet, transition, starts, accepting, start_key=None) -> Mefa:
    syms = _sorted_alpha(alphabet)
    seeds = sorted(starts, key=start_key) if start_key else sorted(starts, key=repr)
    order = {}
    queue = deque()
    for s in seeds:
        if s not in order:
            order[s] = len(order)
            queue.append(s)
    while queue:
        q = queue.popleft()
        for c in syms:
            r = transition[(q, c)]
            if r not in order:
                order[r] = len(order)
                queue.append(r)
    trans = {(order[q], c): order[transition[(q, c)]] for q in order for c in syms}
    return Mefa(
        frozenset(order.values()),
        frozenset(alphabet),
        trans,
        frozenset(order[s] for s in starts),
        frozenset(order[q] for q in accepting if q in order),
    )


def universal_dfa(alphabet) -> Dfa:
    trans = {(0, c): 0 for c in alphabet}
    return Dfa(frozenset({0}), frozenset(alphabet), trans, 0, frozenset({0}))


def empty_dfa(alphabet) -> Dfa:
    trans = {(0, c): 0 for c in alphabet}
    return Dfa(frozenset({0}), frozenset(alphabet), trans, 0, frozenset())


def dfa_from_words(ws, alphabet) -> Dfa:
    """DFA accepting exactly the given finite set of words."""
    ws = [tuple(w) for w in ws]
    prefix_states = set()
    for w in ws:
        for i in range(len(w) + 1):
            prefix_states.add(w[:i])
    prefix_states.add(())
    sink = "sink"  # plain string: cannot collide with the tuple states
    trans = {(sink, c): sink for c in alphabet}
    for q in prefix_states:
        for c in alphabet:
            nxt = q + (c,)
            trans[(q, c)] = nxt if nxt in prefix_states else sink
    accepting = frozenset(ws)
    return _relabel_dfa(alphabet, trans, (), accepting)


def complement_dfa(m: Dfa) -> Dfa:
    return Dfa(m.states, m.alphabet, m.transition, m.start, m.states - m.accepting)


def union_dfa(m1: Dfa, m2: Dfa) -> Dfa:
    """Product construction accepting L(m1) | L(m2)."""
    _check_alphabets(m1, m2)
    trans, pairs = _product_transitions(m1, m2, (m1.start, m2.start))
    acc = frozenset(p for p in pairs if p[0] in m1.accepting or p[1] in m2.accepting)
    return _relabel_dfa(m1.alphabet, trans, (m1.start, m2.start), acc)


def enumerate_language(m, max_len: int):
    """Yield every accepted word of length <= max_len, shortest first then
    lexicographic by token. Works for Dfa and Mefa."""
    syms = _sorted_alpha(m.alphabet)
    for k in range(max_len + 1):
        for tup in _cartesian(syms, repeat=k):
            if m.accepts(tup):
                yield tup


def _check_alphabets(m1, m2):
    if m1.alphabet != m2.alphabet:
        raise AlphabetMismatch(
            f"alphabets differ: {sorted(m1.alphabet)} vs {sorted(m2.alphabet)}"
        )


def _product_transitions(m1, m2, seed):
    """Transitions of the reachable product of two transition systems."""
    syms = _sorted_alpha(m1.alphabet)
    trans = {}
    seen = {seed}
    queue = deque([seed])
    while queue:
        p, q = queue.popleft()
        for c in syms:
            nxt = (m1.transition[(p, c)], m2.transition[(q, c)])
            trans[((p, q), c)] = nxt
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return trans, seen


def _bfs_shortest_word(m, starts, accepting) -> Word | None:
    """Shortest word running some start into ``accepting``; ties broken
    lexicographically by token (the BFS expands symbols in sorted order)."""
    syms = _sorted_alpha(m.alphabet)
    seen = set()
    queue = deque()
    for s in sorted(starts, key=repr):
        if s not in seen:
            if s in accepting:
                return ()
            seen.add(s)
            queue.append((s, ()))
    while queue:
        q, w = queue.popleft()
        for c in syms:
            r = m.transition[(q, c)]
            if r in seen:
                continue
            if r in accepting:
                return w + (c,)
            seen.add(r)
            queue.append((r, w + (c,)))
    return None


# ---------------------------------------------------------------------------
# the lemma operations


def concat_letter(m: Dfa, a: str) -> Dfa:
    """DFA for L(m)·{a}.

    Subset construction over m plus one fresh state reached from every
    accepting state on ``a``: reachable subsets are singletons {q} and pairs
    {delta(f, a), fresh}, so the result has at most |Q| + |F| states and at
    most |F| accepting states. Accepting states that share an a-successor
    share the new merged state.
    """
    if a not in m.alphabet:
        raise AlphabetMismatch(f"symbol {a!r} not in automaton alphabet")
    fresh = "concat-end"
    syms = _sorted_alpha(m.alphabet)

    def move(subset, c):
        nxt = {m.transition[(q, c)] for q in subset if q != fresh}
        if c == a and any(q in m.accepting for q in subset if q != fresh):
            nxt.add(fresh)
        return frozenset(nxt)

    start = frozenset({m.start})
    trans = {}
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for c in syms:
            nxt = move(s, c)
            trans[(s, c)] = nxt
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    accepting = frozenset(s for s in seen if fresh in s)
    return _relabel_dfa(m.alphabet, trans, start, accepting)


def concat_word(m: Dfa, z: Word) -> Dfa:
    """DFA for L(m)·{z}, by |z| single-letter concatenations."""
    for c in z:
        if c not in m.alphabet:
            raise AlphabetMismatch(f"symbol {c!r} not in automaton alphabet")
    for c in z:
        m = concat_letter(m, c)
    return m


def intersect_dfa(m1: Dfa, m2: Dfa) -> Dfa:
    """Reachable product DFA for L(m1) & L(m2)."""
    _check_alphabets(m1, m2)
    seed = (m1.start, m2.start)
    trans, pairs = _product_transitions(m1, m2, seed)
    acc = frozenset(p for p in pairs if p[0] in m1.accepting and p[1] in m2.accepting)
    return _relabel_dfa(m1.alphabet, trans, seed, acc)


def left_quotient_mefa(m2: Dfa, m1: Dfa) -> Mefa:
    """MEFA for the left quotient {v : exists u in L(m1) with uv in L(m2)}.

    Product transition system of the two automata, pruned to states
    reachable from the start pair. A pair becomes a MEFA start when its
    m1-component is accepting (some common prefix u lands there with
    u in L(m1)); a pair is accepting when its m2-component is.
    """
    _check_alphabets(m1, m2)
    seed = (m1.start, m2.start)
    trans, pairs = _product_transitions(m1, m2, seed)
    starts = frozenset(p for p in pairs if p[0] in m1.accepting)
    accepting = frozenset(p for p in pairs if p[1] in m2.accepting)
    if not starts:
        # Quotient of an empty language: represent it with a single dead state.
        dead_trans = {(0, c): 0 for c in m1.alphabet}
        return Mefa(frozenset({0}), m1.alphabet, dead_trans, frozenset({0}), frozenset())
    return _relabel_mefa(m1.alphabet, trans, starts, accepting, start_key=None)


def mefa_intersect_witness(a1: Mefa, a2: Mefa) -> Word | None:
    """A shortest word in L(a1) & L(a2), or None when the intersection is empty.

    Breadth-first search over the product of the two transition systems
    seeded with every pair of start states; returning a shortest witness is
    stronger than a bare emptiness check and decides the same question.
    """
    _check_alphabets(a1, a2)
    syms = _sorted_alpha(a1.alphabet)
    seeds = sorted(
        ((s1, s2) for s1 in a1.starts for s2 in a2.starts), key=repr
    )
    seen = set()
    queue = deque()
    for p in seeds:
        if p in seen:
            continue
        if p[0] in a1.accepting and p[1] in a2.accepting:
            return ()
        seen.add(p)
        queue.append((p, ()))
    while queue:
        (q1, q2), w = queue.popleft()
        for c in syms:
            nxt = (a1.transition[(q1, c)], a2.transition[(q2, c)])
            if nxt in seen:
                continue
            if nxt[0] in a1.accepting and nxt[1] in a2.accepting:
                return w + (c,)
            seen.add(nxt)
            queue.append((nxt, w + (c,)))
    return None


def _coreachable(m, targets) -> set:
    """States from which some state in ``targets`` is reachable."""
    back = {q: set() for q in m.states}
    for (q, _c), r in m.transition.items():
        back[r].add(q)
    seen = set(targets)
    queue = deque(targets)
    while queue:
        q = queue.popleft()
        for p in back[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return seen


def _count_intersection(n: Dfa, m: Dfa, trans, pairs, q) -> tuple[int, Word | None]:
    """Classify |L(n with accepting={q}) & L(m)| as 0, 1 or 2-or-more.

    Works on the precomputed reachable product (``trans``/``pairs``). For the
    exactly-one case also returns the unique word. The classification walks
    the useful (reachable and co-accepting) part of the deterministic
    product: two or more accepted words exist iff some useful state has two
    useful out-edges or a useful accepting state has a useful out-edge;
    otherwise the useful part is a simple chain carrying exactly one word.
    """
    acc = {p for p in pairs if p[0] == q and p[1] in m.accepting}
    if not acc:
        return 0, None
    back = {}
    for (p, _c), r in trans.items():
        back.setdefault(r, set()).add(p)
    useful = set(acc)
    queue = deque(acc)
    while queue:
        r = queue.popleft()
        for p in back.get(r, ()):
            if p not in useful:
                useful.add(p)
                queue.append(p)
    start = (n.start, m.start)
    if start not in useful:
        return 0, None
    syms = _sorted_alpha(n.alphabet)
    for p in useful:
        out = [c for c in syms if trans[(p, c)] in useful]
        if len(out) > 1:
            return 2, None
        if p in acc and out:
            return 2, None
    # Unique accepted word: follow the chain from the start.
    w = []
    p = start
    while p not in acc:
        c = next(c for c in syms if trans[(p, c)] in useful)
        w.append(c)
        p = trans[(p, c)]
    return 1, tuple(w)


def _shortest_in_product(n: Dfa, m: Dfa, trans, pairs, q) -> Word | None:
    class _P:
        alphabet = n.alphabet
        transition = trans

    acc = {p for p in pairs if p[0] == q and p[1] in m.accepting}
    return _bfs_shortest_word(_P, [(n.start, m.start)], acc)


def exists_xyz(m: Dfa, n: Dfa) -> WitnessTriple | None:
    """Find words x != y with x, y in L(m) and xz, yz in L(n), if any exist.

    Every live state q of n is classified by how many words of L(m) run n
    into exactly q: none, exactly one, or more (the BLUE / ORANGE / GREEN
    trichotomy). A GREEN state immediately yields two distinct x, y with a
    common continuation z into n's accepting set; otherwise every pair of
    distinct ORANGE states is probed for a shared accepting continuation by
    intersecting the two re-started copies of n.
    """
    _check_alphabets(m, n)
    m = _relabel_dfa(m.alphabet, m.transition, m.start, m.accepting)
    n = _relabel_dfa(n.alphabet, n.transition, n.start, n.accepting)
    live = _coreachable(n, n.accepting)
    trans, pairs = _product_transitions(n, m, (n.start, m.start))

    orange: list[tuple[int, Word]] = []
    for q in sorted(n.states):
        if q not in live:
            continue
        count, unique = _count_intersection(n, m, trans, pairs, q)
        if count >= 2:
            x = _shortest_in_product(n, m, trans, pairs, q)
            second = _second_word(n, m, trans, pairs, q, x)
            z = _bfs_shortest_word(n, [q], n.accepting)
            return WitnessTriple(x=x, y=second, z=z)
        if count == 1:
            orange.append((q, unique))

    for i in range(len(orange)):
        for j in range(i + 1, len(orange)):
            q1, x = orange[i]
            q2, y = orange[j]
            z = _shared_continuation(n, q1, q2)
            if z is not None:
                return WitnessTriple(x=x, y=y, z=z)
    return None


def _second_word(n, m, trans, pairs, q, first: Word) -> Word:
    """Shortest word other than ``first`` accepted by the q-targeted product."""
    excl = complement_dfa(dfa_from_words([first], n.alphabet))
    syms = _sorted_alpha(n.alphabet)
    seed = ((n.start, m.start), excl.start)
    seen = {seed}
    queue = deque([(seed, ())])

    def accepting(state):
        (pq, e) = state
        return pq[0] == q and pq[1] in m.accepting and e in excl.accepting

    if accepting(seed):
        return ()
    while queue:
        (pq, e), w = queue.popleft()
        for c in syms:
            nxt = (trans[(pq, c)], excl.transition[(e, c)])
            if nxt in seen:
                continue
            if accepting(nxt):
                return w + (c,)
            seen.add(nxt)
            queue.append((nxt, w + (c,)))
    raise AssertionError("a GREEN state must admit a second word")


def _shared_continuation(n: Dfa, q1, q2) -> Word | None:
    """Shortest z with both q1 and q2 running into n's accepting set."""
    syms = _sorted_alpha(n.alphabet)
    seed = (q1, q2)
    if q1 in n.accepting and q2 in n.accepting:
        return ()
    seen = {seed}
    queue = deque([(seed, ())])
    while queue:
        (p, r), w = queue.popleft()
        for c in syms:
            nxt = (n.transition[(p, c)], n.transition[(r, c)])
            if nxt in seen:
                continue
            if nxt[0] in n.accepting and nxt[1] in n.accepting:
                return w + (c,)
            seen.add(nxt)
            queue.append((nxt, w + (c,)))
    return None


# ---------------------------------------------------------------------------
# canonical forms (internal; used for memoisation in the monadic solvers)


def determinize_mefa(m: Mefa) -> Dfa:
    """Language-equivalent DFA via subset construction from the start set."""
    syms = _sorted_alpha(m.alphabet)
    start = frozenset(m.starts)
    trans = {}
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for c in syms:
            nxt = frozenset(m.transition[(q, c)] for q in s)
            trans[(s, c)] = nxt
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    acc = frozenset(s for s in seen if s & m.accepting)
    return _relabel_dfa(m.alphabet, trans, start, acc)


def minimize_dfa(m: Dfa) -> Dfa:
    """Moore partition refinement; used internally to canonicalize languages."""
    syms = _sorted_alpha(m.alphabet)
    m = _relabel_dfa(m.alphabet, m.transition, m.start, m.accepting)
    block = {q: (q in m.accepting) for q in m.states}
    while True:
        sig = {
            q: (block[q],) + tuple(block[m.transition[(q, c)]] for c in syms)
            for q in m.states
        }
        rename = {}
        for q in sorted(m.states):
            rename.setdefault(sig[q], len(rename))
        new_block = {q: rename[sig[q]] for q in m.states}
        if len(set(new_block.values())) == len(set(block.values())):
            break
        block = new_block
    trans = {
        (block[q], c): block[m.transition[(q, c)]] for q in m.states for c in syms
    }
    acc = frozenset(block[q] for q in m.accepting)
    return _relabel_dfa(m.alphabet, trans, block[m.start], acc)


def canonical_key(m: Dfa) -> tuple:
    """Hashable fingerprint of a minimized, BFS-relabelled DFA."""
    syms = _sorted_alpha(m.alphabet)
    return (
        len(m.states),
        tuple(syms),
        tuple(m.transition[(q, c)] for q in sorted(m.states) for c in syms),
        tuple(sorted(m.accepting)),
    )


# ---------------------------------------------------------------------------
# debug dump (golden-file tests only)


def dump_dfa(m: Dfa) -> str:
    m = _relabel_dfa(m.alphabet, m.transition, m.start, m.accepting)
    lines = [f"start: {m.start}", "accept: " + " ".join(map(str, sorted(m.accepting)))]
    for q in sorted(m.states):
        for c in _sorted_alpha(m.alphabet):
            lines.append(f"{q} {c} -> {m.transition[(q, c)]}")
    return "\n".join(lines) + "\n"


def dump_mefa(m: Mefa) -> str:
    lines = [
        "start: " + " ".join(map(str, sorted(m.starts, key=repr))),
        "accept: " + " ".join(map(str, sorted(m.accepting, key=repr))),
    ]
    for q in sorted(m.states, key=repr):
        for c in _sorted_alpha(m.alphabet):
            lines.append(f"{q} {c} -> {m.transition[(q, c)]}")
    return "\n".join(lines) + "\n"
