from itertools import product

import pytest

from srsdual import Srs, parse_srs
from srsdual.words import word


def W(text):
    return word(text)


def mk(*rule_lines, alphabet=None):
    """Build a system from 'lhs -> rhs' strings (token syntax)."""
    r = parse_srs("\n".join(rule_lines))
    if alphabet is not None:
        return Srs.make([(rule.lhs, rule.rhs) for rule in r.rules], alphabet=alphabet)
    return r


def words_upto(letters, max_len):
    for k in range(max_len + 1):
        yield from (tuple(t) for t in product(sorted(letters), repeat=k))


def language(machine, max_len):
    """Accepted words of length <= max_len as a set."""
    return {w for w in words_upto(machine.alphabet, max_len) if machine.accepts(w)}


@pytest.fixture
def ab():
    return {"a", "b"}
