"""Reduction encoders: executable versions of the undecidability constructions.

Three generators, each turning a machine-level instance into a rewriting
instance whose answer tracks the original: generalized Post correspondence
into a common-term instance over a dwindling system, the same input into a
common-equation instance over a (non-length-reducing) convergent system,
and a deterministic linear bounded automaton into a system whose fixed
points encode acceptance. Witness builders re-verify everything through
the rewriting engine before returning.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from random import Random

from .errors import SrsError, SrsSyntaxError, VerificationFailed
from .srs import DEFAULT_FUEL, Srs, normalize, one_step_rewrites
from .words import EMPTY, Word, word, word_str


@dataclass(frozen=True)
class GpcpInstance:
    """Generalized Post correspondence: fixed start and end dominoes plus a
    set of intermediate dominoes, every component non-empty."""

    start: tuple[Word, Word]
    pairs: tuple[tuple[Word, Word], ...]
    end: tuple[Word, Word]

    def __post_init__(self):
        for x, y in (self.start, *self.pairs, self.end):
            if not x or not y:
                raise SrsError("every domino component must be non-empty")

    @property
    def alphabet(self) -> frozenset[str]:
        out = set()
        for x, y in (self.start, *self.pairs, self.end):
            out.update(x)
            out.update(y)
        return frozenset(out)

    def solution_string(self, indices) -> Word:
        """The concatenated top row for a claimed solution; raises if the
        bottom row differs. Indices are 1-based domino numbers."""
        xs = [self.start[0]]
        ys = [self.start[1]]
        for i in indices:
            if not 1 <= i <= len(self.pairs):
                raise SrsError(f"domino index {i} out of range")
            xs.append(self.pairs[i - 1][0])
            ys.append(self.pairs[i - 1][1])
        xs.append(self.end[0])
        ys.append(self.end[1])
        top = sum(xs, ())
        bottom = sum(ys, ())
        if top != bottom:
            raise SrsError(
                f"indices do not solve the instance: {word_str(top)!r} != {word_str(bottom)!r}"
            )
        return top


@dataclass(frozen=True)
class EncodedInstance:
    srs: Srs
    alpha: Word
    beta: Word
    symbol_legend: dict[str, str] = field(compare=False)


# The three letter images used by the common-term encoding. Each image of a
# shorter map is a prefix of the longer one, which is what makes the
# rewriting rules dwindling.
H1 = {"a": ("a1", "a2", "a3"), "b": ("b1", "b2", "b3")}
H2 = {"a": ("a1", "a2"), "b": ("b1", "b2")}
H3 = {"a": ("a1",), "b": ("b1",)}


def apply_hom(h: dict[str, Word], w: Word) -> Word:
    out: tuple[str, ...] = ()
    for c in w:
        out += h[c]
    return out


def _binary_rename(g: GpcpInstance) -> tuple[GpcpInstance, dict[str, str]]:
    """Rename any alphabet onto {a, b} via the prefix code sym_i -> a^(i+1) b.

    Injective on whole words, so solvability and solution indices are
    untouched. Identity (empty legend) when the alphabet already fits.
    """
    if g.alphabet <= {"a", "b"}:
        return g, {}
    code = {
        s: ("a",) * (i + 1) + ("b",) for i, s in enumerate(sorted(g.alphabet))
    }

    def ren(w: Word) -> Word:
        out: tuple[str, ...] = ()
        for c in w:
            out += code[c]
        return out

    renamed = GpcpInstance(
        (ren(g.start[0]), ren(g.start[1])),
        tuple((ren(x), ren(y)) for x, y in g.pairs),
        (ren(g.end[0]), ren(g.end[1])),
    )
    legend = {s: "encoded as " + word_str(cw) for s, cw in code.items()}
    return renamed, legend


def encode_gpcp_to_ct(g: GpcpInstance) -> EncodedInstance:
    """Common-term instance whose solutions are exactly the GPCP solutions.

    The system carries one marked copy of the solution string per side
    (three-symbol letters shrunk to one- and two-symbol forms), index
    symbols c_0 .. c_{n+1} and the separator B. It is dwindling with no
    overlaps between left-hand sides, and the instance words are the two
    markers.
    """
    g, legend = _binary_rename(g)
    n = len(g.pairs)
    c = [f"c{i}" for i in range(n + 2)]
    m1, m2, sep = "¢1", "¢2", "B"
    rules: list[tuple[Word, Word]] = []
    # marker rules: shrink the first letter next to a marker
    for letter in ("a", "b"):
        rules.append(((m1,) + H1[letter], (m1,) + H3[letter]))
    for letter in ("a", "b"):
        rules.append(((m2,) + H1[letter], (m2,) + H2[letter]))
    # propagation rules: a shrunk letter shrinks its right neighbour
    for h in (H2, H3):
        for left in ("a", "b"):
            for right in ("a", "b"):
                rules.append((h[left] + H1[right], h[left] + h[right]))
    x0, y0 = g.start
    xe, ye = g.end
    # erasing rules: start domino
    rules.append(((m1,) + apply_hom(H3, x0) + (sep, c[0]), EMPTY))
    rules.append(((m2,) + apply_hom(H2, y0) + (c[0],), EMPTY))
    # erasing rules: intermediate dominoes
    for i, (xi, yi) in enumerate(g.pairs, start=1):
        rules.append((apply_hom(H3, xi) + (sep, c[i]), EMPTY))
        rules.append((apply_hom(H2, yi) + (c[i], sep), EMPTY))
    # erasing rules: end domino
    rules.append((apply_hom(H3, xe) + (c[n + 1],), EMPTY))
    rules.append((apply_hom(H2, ye) + (c[n + 1], sep), EMPTY))

    alphabet = {"a", "b", m1, m2, sep, "a1", "a2", "a3", "b1", "b2", "b3", *c}
    legend = dict(legend)
    legend.update({
        m1: "left marker of the first side",
        m2: "left marker of the second side",
        sep: "separator between index symbols",
        c[0]: "index symbol for the start domino",
        c[n + 1]: "index symbol for the end domino",
        **{c[i]: f"index symbol for domino {i}" for i in range(1, n + 1)},
        **{t: f"layer-{k} copy of {t[0]}" for k in (1, 2, 3) for t in (f"a{k}", f"b{k}")},
    })
    return EncodedInstance(
        Srs.make(rules, alphabet=alphabet), (m1,), (m2,), legend
    )


def gpcp_ct_witness(g: GpcpInstance, indices) -> Word:
    """The canonical common multiplier for a claimed solution.

    Shape: the three-symbol image of the solution string, then the end
    index, then the used indices in reverse each preceded by the
    separator, then the start index. Re-verified by normalizing both
    marked words to the empty word.
    """
    enc = encode_gpcp_to_ct(g)
    g2, _ = _binary_rename(g)
    z1 = g2.solution_string(indices)
    n = len(g2.pairs)
    tail: list[str] = [f"c{n + 1}", "B"]
    for i in reversed(list(indices)):
        tail += [f"c{i}", "B"]
    tail.append("c0")
    z = apply_hom(H1, z1) + tuple(tail)
    for side in (enc.alpha, enc.beta):
        if normalize(enc.srs, side + z) != EMPTY:
            raise VerificationFailed(
                f"witness {word_str(z)!r} does not erase {word_str(side)!r}"
            )
    return z


def encode_gpcp_to_ce(g: GpcpInstance) -> EncodedInstance:
    """Common-equation instance for the same input, over a convergent but
    not length-reducing system.

    Index symbols are consumed left to right, emitting the corresponding
    domino string behind a moving marker; the end index seals the word
    with an end-of-tape symbol, and the hash symbols commute leftwards
    over letters. alpha and beta expose the start domino's two rows.
    """
    g, legend = _binary_rename(g)
    n = len(g.pairs)
    m1, m2 = "¢1", "¢2"
    h1, h2, end = "#1", "#2", "$"
    c = [f"c{i}" for i in range(n + 2)]
    rules: list[tuple[Word, Word]] = []
    for i, (xi, _yi) in enumerate(g.pairs, start=1):
        rules.append(((m1, c[i]), xi + (m1,)))
    rules.append(((m1, c[n + 1]), (h1,) + g.end[0] + (end,)))
    for i, (_xi, yi) in enumerate(g.pairs, start=1):
        rules.append(((m2, c[i]), yi + (m2,)))
    rules.append(((m2, c[n + 1]), (h2,) + g.end[1] + (end,)))
    for letter in ("a", "b"):
        rules.append(((letter, h1), (h1, letter)))
    for letter in ("a", "b"):
        rules.append(((letter, h2), (h2, letter)))
    alphabet = {"a", "b", m1, m2, end, h1, h2, *c}
    legend = dict(legend)
    legend.update({
        m1: "moving marker emitting first-row domino strings",
        m2: "moving marker emitting second-row domino strings",
        h1: "first-side hash, commutes left over letters",
        h2: "second-side hash, commutes left over letters",
        end: "end-of-word seal",
        c[0]: "index symbol for the start domino (unused by the rules)",
        c[n + 1]: "index symbol for the end domino",
        **{c[i]: f"index symbol for domino {i}" for i in range(1, n + 1)},
    })
    return EncodedInstance(
        Srs.make(rules, alphabet=alphabet), g.start[0], g.start[1], legend
    )


def gpcp_ce_witness(g: GpcpInstance, indices) -> tuple[Word, Word]:
    """The canonical (w1, w2) pair for a claimed solution: w1 lists the used
    indices then the end index, w2 is the full solution row plus the seal.
    Both sides are re-verified through the engine."""
    enc = encode_gpcp_to_ce(g)
    g2, _ = _binary_rename(g)
    solution = g2.solution_string(indices)
    n = len(g2.pairs)
    w1 = tuple(f"c{i}" for i in indices) + (f"c{n + 1}",)
    w2 = solution + ("$",)
    x0, y0 = g2.start
    lhs1 = normalize(enc.srs, x0 + ("¢1",) + w1)
    lhs2 = normalize(enc.srs, y0 + ("¢2",) + w1)
    if lhs1 != ("#1",) + w2 or lhs2 != ("#2",) + w2:
        raise VerificationFailed("claimed solution does not reduce to the sealed form")
    return w1, w2


# ---------------------------------------------------------------------------
# deterministic linear bounded automata


@dataclass(frozen=True)
class Dlba:
    """Read-only DLBA over a two-marker tape.

    delta maps (state, tape symbol) to (state, direction); directions are
    "L" and "R". Acceptance means reaching the accept state with the head
    back on the left marker (the tape is never written, so the input is
    restored trivially).
    """

    states: frozenset[str]
    input_alphabet: frozenset[str]
    start: str
    accept: str
    reject: str
    left_marker: str
    right_marker: str
    delta: dict[tuple[str, str], tuple[str, str]]

    def __post_init__(self):
        tape = self.input_alphabet | {self.left_marker, self.right_marker}
        for q in (self.start, self.accept, self.reject):
            if q not in self.states:
                raise SrsError(f"state {q!r} missing from state set")
        for (q, s), (q2, d) in self.delta.items():
            if q not in self.states or q2 not in self.states:
                raise SrsError(f"transition uses unknown state: {(q, s)!r}")
            if s not in tape:
                raise SrsError(f"transition reads unknown symbol {s!r}")
            if d not in ("L", "R"):
                raise SrsError(f"direction must be L or R, got {d!r}")

    @classmethod
    def make(cls, states, input_alphabet, start, accept, reject,
             transitions, left_marker="¢", right_marker="$") -> "Dlba":
        delta = {}
        for q, s, q2, d in transitions:
            if (q, s) in delta:
                raise SrsError(f"nondeterministic transition for {(q, s)!r}")
            delta[(q, s)] = (q2, d)
        return cls(frozenset(states), frozenset(input_alphabet), start, accept,
                   reject, left_marker, right_marker, delta)

    @property
    def tape_alphabet(self) -> frozenset[str]:
        return self.input_alphabet | {self.left_marker, self.right_marker}


def encode_dlba_to_srs(d: Dlba) -> Srs:
    """Rewriting system simulating the machine on marked configurations.

    A configuration string is the tape with every symbol strictly left of
    the head primed and the state symbol inserted before the head cell.
    Right moves prime the read symbol; left moves unprime the neighbour,
    whatever it is (including the left marker, which is how the head gets
    back onto it); the accept state finally erases itself in front of the
    left marker. The primed replica covers the whole tape alphabet.
    """
    tape = sorted(d.tape_alphabet)
    primed = {s: s + "'" for s in tape}
    names = set(tape) | set(d.states)
    for p in primed.values():
        if p in names:
            raise SrsError(f"primed symbol {p!r} collides with an existing name")

    rules: list[tuple[Word, Word]] = []
    for (q, s), (q2, dirn) in sorted(d.delta.items()):
        if dirn == "R":
            rules.append(((q, s), (primed[s], q2)))
        else:
            for t in tape:
                rules.append(((primed[t], q, s), (q2, t, s)))
    rules.append(((d.accept, d.left_marker), (d.left_marker,)))
    alphabet = set(tape) | set(primed.values()) | set(d.states)
    return Srs.make(rules, alphabet=alphabet)


def run_dlba(d: Dlba, w: Word, fuel: int = 100_000) -> str:
    """Simulate on tape <left> w <right>. Returns "accept", "reject" or
    "fuel_exhausted". Stuck configurations and moves off the tape reject."""
    for c in w:
        if c not in d.input_alphabet:
            raise SrsError(f"input symbol {c!r} outside the input alphabet")
    tape = (d.left_marker,) + tuple(w) + (d.right_marker,)
    state, head = d.start, 0
    for _ in range(fuel):
        if state == d.accept and head == 0:
            return "accept"
        if state == d.reject:
            return "reject"
        move = d.delta.get((state, tape[head]))
        if move is None:
            return "reject"
        state, dirn = move
        head += 1 if dirn == "R" else -1
        if not 0 <= head < len(tape):
            return "reject"
    return "fuel_exhausted"


def dlba_config(d: Dlba, state: str, w: Word, head: int) -> Word:
    """The configuration string for the given head position."""
    tape = (d.left_marker,) + tuple(w) + (d.right_marker,)
    primed = tuple(s + "'" for s in tape[:head])
    return primed + (state,) + tape[head:]


def rewrite_reachable(r: Srs, source: Word, target: Word,
                      max_visited: int = 200_000) -> bool:
    """Is target reachable from source in one or more rewrite steps (any
    strategy)? Bounded breadth-first search over the rewrite graph."""
    seen = {source}
    queue = deque([source])
    while queue:
        w = queue.popleft()
        for nxt in one_step_rewrites(r, w):
            if nxt == target:
                return True
            if nxt not in seen:
                if len(seen) >= max_visited:
                    raise SrsError("rewrite graph search exceeded its budget")
                seen.add(nxt)
                queue.append(nxt)
    return False


# ---------------------------------------------------------------------------
# instance generation and file formats


def random_solvable_gpcp(rng: Random, max_len: int = 6) -> tuple[GpcpInstance, list[int]]:
    """A GPCP instance with a planted solution.

    Picks a random word and cuts it twice into the same number of
    non-empty pieces; the aligned pieces become the dominoes and the
    planted solution uses them in order.
    """
    length = rng.randint(2, max(2, max_len))
    s = tuple(rng.choice("ab") for _ in range(length))
    k = rng.randint(0, length - 2)  # number of intermediate dominoes

    def cut(word_, parts):
        cuts = sorted(rng.sample(range(1, len(word_)), parts - 1))
        pieces = []
        prev = 0
        for c in cuts:
            pieces.append(word_[prev:c])
            prev = c
        pieces.append(word_[prev:])
        return pieces

    xs = cut(s, k + 2)
    ys = cut(s, k + 2)
    inst = GpcpInstance(
        (xs[0], ys[0]),
        tuple((xs[i], ys[i]) for i in range(1, k + 1)),
        (xs[k + 1], ys[k + 1]),
    )
    return inst, list(range(1, k + 1))


def parse_gpcp(text: str) -> GpcpInstance:
    """Lines ``start:``, ``pair:`` (repeated) and ``end:``, each carrying
    two words separated by a ``/`` token."""
    start = end = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(":")
        head = head.strip()
        tokens = rest.split()
        if tokens.count("/") != 1:
            raise SrsSyntaxError("expected exactly one '/'", lineno)
        k = tokens.index("/")
        two = (tuple(tokens[:k]), tuple(tokens[k + 1:]))
        if head == "start":
            start = two
        elif head == "pair":
            pairs.append(two)
        elif head == "end":
            end = two
        else:
            raise SrsSyntaxError(f"unknown line kind {head!r}", lineno)
    if start is None or end is None:
        raise SrsSyntaxError("an instance needs both start: and end: lines")
    return GpcpInstance(start, tuple(pairs), end)


def format_gpcp(g: GpcpInstance) -> str:
    def row(kind, pair):
        return f"{kind}: {word_str(pair[0])} / {word_str(pair[1])}"

    lines = [row("start", g.start)]
    lines += [row("pair", p) for p in g.pairs]
    lines.append(row("end", g.end))
    return "\n".join(lines) + "\n"


def parse_dlba(text: str) -> Dlba:
    """Header lines ``states:``, ``input:``, ``markers:``, ``start:``,
    ``accept:``, ``reject:`` then transition lines ``q , SYM -> q' , L|R``."""
    headers: dict[str, list[str]] = {}
    transitions = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" in line.split():
            tokens = line.split()
            try:
                c1 = tokens.index(",")
                arrow = tokens.index("->")
                c2 = tokens.index(",", arrow)
                q = " ".join(tokens[:c1])
                sym = " ".join(tokens[c1 + 1:arrow])
                q2 = " ".join(tokens[arrow + 1:c2])
                dirn = " ".join(tokens[c2 + 1:])
            except ValueError:
                raise SrsSyntaxError("malformed transition line", lineno)
            if not q or not sym or not q2 or dirn not in ("L", "R"):
                raise SrsSyntaxError("malformed transition line", lineno)
            transitions.append((q, sym, q2, dirn))
        else:
            head, _, rest = line.partition(":")
            headers[head.strip()] = rest.split()
    try:
        markers = headers["markers"]
        return Dlba.make(
            headers["states"], headers["input"],
            headers["start"][0], headers["accept"][0], headers["reject"][0],
            transitions, left_marker=markers[0], right_marker=markers[1],
        )
    except (KeyError, IndexError) as exc:
        raise SrsSyntaxError(f"missing or malformed header: {exc}")


def format_dlba(d: Dlba) -> str:
    lines = [
        "states: " + " ".join(sorted(d.states)),
        "input: " + " ".join(sorted(d.input_alphabet)),
        f"markers: {d.left_marker} {d.right_marker}",
        f"start: {d.start}",
        f"accept: {d.accept}",
        f"reject: {d.reject}",
    ]
    for (q, s), (q2, dirn) in sorted(d.delta.items()):
        lines.append(f"{q} , {s} -> {q2} , {dirn}")
    return "\n".join(lines) + "\n"
