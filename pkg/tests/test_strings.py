import pytest

from gridfp.strings import SymbolString, StringOracle, end_d, is_d_non_repeating
from gridfp.tree import concat_d, insert_d


class TestNonRepeating:
    def test_spec_examples(self):
        assert is_d_non_repeating([2, 1, 4, 3], 2)
        assert not is_d_non_repeating([2, 1, 2, 1], 2)
        assert is_d_non_repeating([1, 3, 5, 7], 1)

    def test_parity_violation(self):
        # odd symbol off the block boundary
        assert not is_d_non_repeating([1, 2], 2)

    def test_length_violation(self):
        assert not is_d_non_repeating([2, 1, 4], 2)

    def test_unaligned_window_repeat(self):
        # aligned blocks distinct but the straddling window (4, 3) repeats
        s = [2, 3, 4, 3, 4, 5]
        assert not is_d_non_repeating(s, 2)


class TestEndD:
    def test_examples(self):
        assert end_d([2, 1, 4, 3], 2) == (4, 3)
        assert end_d([1, 3, 5, 7], 1) == (7,)

    def test_precondition(self):
        with pytest.raises(ValueError, match="not d-non-repeating"):
            end_d([2, 1, 2, 1], 2)


class TestStringOracle:
    def test_interior(self):
        oracle = StringOracle(SymbolString((2, 1, 4, 3, 4, 5), 6, 2))
        assert oracle.answer((4, 3)) == (1, 4)

    def test_start(self):
        oracle = StringOracle(SymbolString((2, 1, 4, 3), 4, 2))
        assert oracle.answer((2, 1)) == (None, 4)

    def test_absent(self):
        oracle = StringOracle(SymbolString((2, 1, 4, 3), 9, 2))
        assert oracle.answer((9, 9)) == (None, None)

    def test_end(self):
        oracle = StringOracle(SymbolString((2, 1, 4, 3), 4, 2))
        assert oracle.answer((4, 3)) == (1, None)

    def test_full_scan_consistency(self):
        s = (2, 1, 4, 3, 4, 5, 4, 7)
        oracle = StringOracle(SymbolString(s, 8, 2))
        sided = {"left": 0, "right": 0}
        for k in range(len(s) - 1):
            left, right = oracle.answer(s[k : k + 2])
            if left is None:
                sided["left"] += 1
            else:
                assert left == s[k - 1]
            if right is None:
                sided["right"] += 1
            else:
                assert right == s[k + 2]
        # exactly one left-open window (the start) and one right-open (the end)
        assert sided == {"left": 1, "right": 1}

    def test_bad_query_length(self):
        oracle = StringOracle(SymbolString((2, 1, 4, 3), 4, 2))
        with pytest.raises(ValueError, match="query length"):
            oracle.answer((2,))

    def test_rejects_repeating(self):
        with pytest.raises(ValueError, match="non-repeating"):
            StringOracle(SymbolString((2, 1, 2, 1), 4, 2))


class TestBlockOps:
    def test_insert_examples(self):
        assert insert_d((1, 3), 1, 4) == (1, 4, 3)
        assert insert_d((1, 2, 3, 4), 2, 9) == (1, 2, 9, 3, 4)
        assert insert_d((5,), 1, 2) == (5,)

    def test_insert_rejects_misaligned(self):
        with pytest.raises(ValueError, match="not divisible"):
            insert_d((1, 2, 3), 2, 9)

    def test_concat_examples(self):
        assert concat_d((1, 2, 3), (3, 4), 1) == (1, 2, 3, 4)
        assert concat_d((2, 1), (2, 1), 2) == (2, 1)
        with pytest.raises(ValueError, match="overlap mismatch"):
            concat_d((1, 2), (3, 4), 1)


def test_symbol_string_serialization():
    s = SymbolString((2, 1, 4, 3), 12, 2)
    text = s.serialize()
    assert text.splitlines()[0] == "d=2 n=12"
    assert SymbolString.parse(text) == s
