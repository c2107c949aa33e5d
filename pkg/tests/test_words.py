import pytest

from srsdual import SrsSyntaxError
from srsdual.words import find_sub, is_subsequence, prefixes, word, word_str


def test_word_parsing_round_trip():
    assert word("a b a") == ("a", "b", "a")
    assert word("_") == ()
    assert word("  ") == ()
    assert word_str(("c_3", "#1", "a'")) == "c_3 #1 a'"
    assert word(word_str(("x", "y"))) == ("x", "y")
    assert word_str(()) == "_"


def test_multi_character_tokens_need_no_escaping():
    assert word("¢1 c10 B") == ("¢1", "c10", "B")


@pytest.mark.parametrize("bad", ["->", "_ a", "#", "#!x"])
def test_reserved_tokens_rejected(bad):
    with pytest.raises(SrsSyntaxError):
        word(bad if bad != "_ a" else "_ a")


def test_find_sub():
    w = ("a", "a", "b", "a")
    assert find_sub(w, ("a", "b")) == 1
    assert find_sub(w, ("a",), 2) == 3
    assert find_sub(w, ("b", "b")) == -1
    assert find_sub(w, (), 2) == 2


def test_prefixes_and_subsequence():
    assert list(prefixes(("a", "b"))) == [(), ("a",), ("a", "b")]
    assert is_subsequence(("a", "b"), ("a", "c", "b"))
    assert not is_subsequence(("b", "a"), ("a", "b"))
