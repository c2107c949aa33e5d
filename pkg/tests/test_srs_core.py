from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from srsdual import (
    FuelExhausted,
    Srs,
    SrsSyntaxError,
    check_convergence,
    classify,
    critical_pairs,
    format_srs,
    irr_dfa,
    is_irreducible,
    normalize,
    one_step_rewrites,
    parse_srs,
    rewrite_steps,
)
from srsdual.automata import dump_dfa

from conftest import W, mk, words_upto


# ---------------------------------------------------------------------------
# parsing and formatting


def test_parse_two_rule_special_system():
    r = parse_srs("s p -> _\np s -> _")
    assert [(rule.lhs, rule.rhs) for rule in r.rules] == [
        (("s", "p"), ()),
        (("p", "s"), ()),
    ]
    assert r.alphabet == {"s", "p"}


def test_parse_empty_input():
    assert parse_srs("").rules == ()


def test_parse_rejects_empty_lhs():
    with pytest.raises(SrsSyntaxError):
        parse_srs("-> a")


def test_parse_line_numbers_and_comments():
    with pytest.raises(SrsSyntaxError, match="line 3"):
        parse_srs("# fine\na -> _\na b\n")
    r = parse_srs("# comment\na b -> _\n\n")
    assert len(r.rules) == 1


def test_hash_tokens_are_not_comments():
    r = parse_srs("a #1 -> #1 a")
    assert r.rules[0].lhs == ("a", "#1")


@pytest.mark.parametrize("r", [
    mk("a b -> _", "b a -> _"),
    mk("b a a -> b a"),
    Srs.make([("a a", "a")], alphabet={"a", "b", "c"}),
    Srs.make([], alphabet={"x"}),
])
def test_round_trip(r):
    assert parse_srs(format_srs(r)) == r


# ---------------------------------------------------------------------------
# rewriting


def test_normalize_paper_cases():
    r = mk("b a a -> b a")
    assert normalize(r, W("b a a")) == W("b a")
    assert normalize(r, W("b b a a")) == W("b b a")


def test_normalize_irreducible_unchanged():
    r = mk("b a a -> b a")
    assert normalize(r, W("a b")) == W("a b")


def test_normalize_leftmost_position_wins():
    # "a b b b": whole-word redex starts at 0, the inner "b b" at 1
    r = mk("b b -> x", "a b b b -> y", alphabet={"a", "b", "x", "y"})
    assert normalize(r, W("a b b b")) == W("y")


def test_normalize_equal_position_lowest_rule_wins():
    r1 = mk("a b c -> z", "a b -> w", alphabet={"a", "b", "c", "w", "z"})
    assert normalize(r1, W("a b c")) == W("z")
    r2 = mk("a b -> w", "a b c -> z", alphabet={"a", "b", "c", "w", "z"})
    assert normalize(r2, W("a b c")) == W("w c")


def test_normalize_fuel_exhaustion_is_an_error():
    looping = mk("a -> b", "b -> a")
    with pytest.raises(FuelExhausted):
        normalize(looping, W("a"), fuel=50)


def test_rewrite_steps_trace():
    r = mk("b a a -> b a")
    assert list(rewrite_steps(r, W("b a a a"))) == [
        W("b a a a"), W("b a a"), W("b a"),
    ]


def test_one_step_rewrites_all_redexes():
    r = mk("a a -> a")
    assert sorted(one_step_rewrites(r, W("a a a"))) == [W("a a"), W("a a")]


def test_is_irreducible():
    r = mk("a b -> _")
    assert is_irreducible(r, W("b a"))
    assert not is_irreducible(r, W("a a b"))
    assert is_irreducible(Srs.make([], alphabet={"a"}), W("a a"))


# ---------------------------------------------------------------------------
# classification


@pytest.mark.parametrize("rules,dwindling,monadic,length_reducing", [
    (["a b c -> b a"], False, False, True),
    (["a b c -> a b"], True, False, True),
    (["a b c -> b"], False, True, True),
])
def test_classify_paper_examples(rules, dwindling, monadic, length_reducing):
    cls = classify(mk(*rules))
    assert cls.dwindling is dwindling
    assert cls.monadic is monadic
    assert cls.length_reducing is length_reducing


def test_classify_special_and_inter_reduced():
    cls = classify(mk("a b -> _", "b a -> _"))
    assert cls.special and cls.monadic and cls.length_reducing
    assert cls.inter_reduced
    assert not classify(mk("a b a -> a", "a b -> _")).inter_reduced


def test_classify_dwindling_restatement():
    # dwindling iff every rhs is a proper prefix of its lhs
    for r in [mk("a b c -> a b"), mk("a -> _", "b a -> b")]:
        assert classify(r).dwindling
        for rule in r.rules:
            assert len(rule.rhs) < len(rule.lhs)
            assert rule.lhs[: len(rule.rhs)] == rule.rhs
    assert not classify(mk("a b c -> b")).dwindling


# ---------------------------------------------------------------------------
# critical pairs, with an independent overlap enumerator as oracle


def brute_peaks(r):
    """Slide every lhs over every other at every offset; collect genuine
    double redexes as (peak, {result1, result2})."""
    out = set()
    rules = r.rules
    for i, a in enumerate(rules):
        for j, b in enumerate(rules):
            la, lb = a.lhs, b.lhs
            for shift in range(-len(lb) + 1, len(la)):
                lo, hi = min(0, shift), max(len(la), shift + len(lb))
                cells = [None] * (hi - lo)
                ok = True
                for k, c in enumerate(la):
                    cells[k - lo] = c
                for k, c in enumerate(lb):
                    p = shift + k - lo
                    if cells[p] is not None and cells[p] != c:
                        ok = False
                        break
                    cells[p] = c
                if not ok or any(c is None for c in cells):
                    continue  # not overlapping into one block
                if shift == 0 and len(la) == len(lb) and i == j:
                    continue  # a rule on top of itself
                peak = tuple(cells)
                ra = peak[: -lo] + a.rhs + peak[len(la) - lo:]
                rb = peak[: shift - lo] + b.rhs + peak[shift + len(lb) - lo:]
                out.add((peak, frozenset((ra, rb))))
    return out


@pytest.mark.parametrize("rules,expected_peaks", [
    (["a b -> _", "b a -> _"], {("a", "b", "a"), ("b", "a", "b")}),
    (["a b a -> a"], {("a", "b", "a", "b", "a")}),
    (["a b -> _"], set()),
])
def test_critical_pairs_examples(rules, expected_peaks):
    r = mk(*rules)
    got = critical_pairs(r)
    assert {cp.peak for cp in got} == expected_peaks
    assert {(cp.peak, frozenset((cp.left, cp.right))) for cp in got} == brute_peaks(r)


def test_critical_pairs_containment_kind():
    r = mk("a b a -> a", "b -> _")
    kinds = {cp.overlap_kind for cp in critical_pairs(r)}
    assert "containment" in kinds
    got = {(cp.peak, frozenset((cp.left, cp.right))) for cp in critical_pairs(r)}
    assert got == brute_peaks(r)


def test_critical_pairs_match_brute_force_on_random_systems():
    import random

    rng = random.Random(1)
    for _ in range(200):
        rules = []
        for _ in range(rng.randint(1, 3)):
            d = rng.randint(1, 4)
            lhs = tuple(rng.choice("ab") for _ in range(d))
            rhs = tuple(rng.choice("ab") for _ in range(rng.randint(0, d - 1)))
            rules.append((lhs, rhs))
        r = Srs.make(rules, alphabet={"a", "b"})
        got = {(cp.peak, frozenset((cp.left, cp.right))) for cp in critical_pairs(r)}
        assert got == brute_peaks(r)


# ---------------------------------------------------------------------------
# convergence evidence


def test_convergence_examples():
    ev = check_convergence(mk("a b -> _", "b a -> _"))
    assert ev.terminating == "proved" and ev.locally_confluent is True
    ev = check_convergence(mk("a b a -> a"))
    assert ev.terminating == "proved" and ev.locally_confluent is True
    ev = check_convergence(mk("¢1 c1 -> x1 ¢1"))
    assert ev.terminating == "unknown"


def test_convergence_detects_non_joinable_pair():
    ev = check_convergence(mk("a b -> a", "b a -> b"))
    assert ev.locally_confluent is False


def test_unique_normal_forms_under_all_strategies():
    """Locally confluent + proved terminating: every maximal rewrite
    sequence from every word of length <= 6 ends in the same place."""
    from srsdual.selftest import dwindling_family, monadic_family

    systems = dwindling_family()[::5] + monadic_family()[::5]
    assert systems
    for r in systems:
        memo = {}

        def normal_forms(w):
            if w in memo:
                return memo[w]
            succ = one_step_rewrites(r, w)
            memo[w] = (
                frozenset({w}) if not succ
                else frozenset().union(*(normal_forms(v) for v in succ))
            )
            return memo[w]

        for w in words_upto({"a", "b"}, 6):
            assert len(normal_forms(w)) == 1, (str(r), w)


@st.composite
def length_reducing_system(draw):
    n = draw(st.integers(1, 3))
    rules = []
    for _ in range(n):
        d = draw(st.integers(1, 3))
        lhs = tuple(draw(st.sampled_from("ab")) for _ in range(d))
        rhs = tuple(draw(st.sampled_from("ab")) for _ in range(draw(st.integers(0, d - 1))))
        rules.append((lhs, rhs))
    return Srs.make(rules, alphabet={"a", "b"})


@given(length_reducing_system(), st.lists(st.sampled_from("ab"), max_size=10))
@settings(max_examples=200, deadline=None)
def test_normalize_idempotent_and_step_bounded(r, letters):
    w = tuple(letters)
    steps = list(rewrite_steps(r, w))
    assert len(steps) - 1 <= len(w) * r.max_lhs_len()
    nf = normalize(r, w)
    assert steps[-1] == nf
    assert normalize(r, nf) == nf
    assert is_irreducible(r, nf)


# ---------------------------------------------------------------------------
# the irreducible-word automaton


def test_irr_dfa_empty_system_accepts_everything(ab):
    d = irr_dfa(Srs.make([], alphabet=ab))
    assert all(d.accepts(w) for w in words_upto(ab, 4))


@pytest.mark.parametrize("rules", [
    ["a b -> _"],
    ["b a a -> b a"],
    ["a a -> a", "b b b -> _"],
    ["a -> _"],
])
def test_irr_dfa_agrees_with_substring_check(rules):
    r = mk(*rules, alphabet={"a", "b"})
    d = irr_dfa(r)
    for w in words_upto({"a", "b"}, 6):
        assert d.accepts(w) == is_irreducible(r, w), w


def test_irr_dfa_paper_membership():
    d = irr_dfa(mk("b a a -> b a"))
    assert not d.accepts(W("b a a"))
    assert d.accepts(W("b a"))


def test_irr_dfa_golden_dump():
    d = irr_dfa(mk("a b -> _"))
    assert dump_dfa(d) == (
        "start: 0\n"
        "accept: 0 1\n"
        "0 a -> 1\n"
        "0 b -> 0\n"
        "1 a -> 1\n"
        "1 b -> 2\n"
        "2 a -> 2\n"
        "2 b -> 2\n"
    )
