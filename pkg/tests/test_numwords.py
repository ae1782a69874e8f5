import pytest

from etnorm.numwords import (
    GENITIVE,
    MAX_CARDINAL,
    NOMINATIVE,
    LexiconError,
    cardinal,
    decimal,
    default_lexicon,
    digits,
    load_lexicon,
    ordinal,
)

# Independent oracle: a second, self-contained number speller built from
# literal word tables, used only to cross-check cardinal() at desk scale.
_UNITS = ["null", "üks", "kaks", "kolm", "neli", "viis", "kuus", "seitse", "kaheksa", "üheksa"]
_TEENS = {
    11: "üksteist", 12: "kaksteist", 13: "kolmteist", 14: "neliteist", 15: "viisteist",
    16: "kuusteist", 17: "seitseteist", 18: "kaheksateist", 19: "üheksateist",
}
_TENS = {
    20: "kakskümmend", 30: "kolmkümmend", 40: "nelikümmend", 50: "viiskümmend",
    60: "kuuskümmend", 70: "seitsekümmend", 80: "kaheksakümmend", 90: "üheksakümmend",
}


def _oracle_under_100(n):
    if n < 10:
        return [_UNITS[n]]
    if n == 10:
        return ["kümme"]
    if n in _TEENS:
        return [_TEENS[n]]
    tens, unit = divmod(n, 10)
    words = [_TENS[tens * 10]]
    if unit:
        words.append(_UNITS[unit])
    return words


def _oracle_under_1000(n, initial):
    words = []
    hundreds, rest = divmod(n, 100)
    if hundreds:
        if hundreds == 1:
            words.append("sada" if initial else "ükssada")
        else:
            words.append(_UNITS[hundreds] + "sada")
    if rest:
        words += _oracle_under_100(rest)
    return words


def oracle_cardinal(n):
    if n == 0:
        return "null"
    words = []
    thousands, rest = divmod(n, 1000)
    if thousands:
        if thousands == 1:
            words.append("tuhat")
        else:
            words += _oracle_under_1000(thousands, initial=True)
            words.append("tuhat")
    if rest:
        words += _oracle_under_1000(rest, initial=not thousands)
    return " ".join(words)


class TestCardinal:
    def test_zero(self):
        assert cardinal(0) == "null"

    def test_basic_values(self):
        assert cardinal(21) == "kakskümmend üks"
        assert cardinal(2020) == "kaks tuhat kakskümmend"
        assert cardinal(10) == "kümme"
        assert cardinal(12) == "kaksteist"
        assert cardinal(100) == "sada"
        assert cardinal(1000) == "tuhat"
        assert cardinal(1100) == "tuhat ükssada"
        assert cardinal(110) == "sada kümme"
        assert cardinal(36017) == "kolmkümmend kuus tuhat seitseteist"

    def test_millions(self):
        assert cardinal(10**6) == "miljon"
        assert cardinal(2 * 10**6) == "kaks miljonit"
        assert cardinal(2_500_000) == "kaks miljonit viissada tuhat"
        assert cardinal(MAX_CARDINAL).startswith("üheksasada üheksakümmend üheksa miljonit")

    def test_genitive(self):
        assert cardinal(21, GENITIVE) == "kahekümne ühe"
        assert cardinal(2020, GENITIVE) == "kahe tuhande kahekümne"
        assert cardinal(15, GENITIVE) == "viieteistkümne"
        assert cardinal(100, GENITIVE) == "saja"
        assert cardinal(1000, GENITIVE) == "tuhande"

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            cardinal(-1)
        with pytest.raises(ValueError):
            cardinal(10**9)
        with pytest.raises(ValueError):
            cardinal(1.5)

    def test_unknown_case(self):
        with pytest.raises(ValueError):
            cardinal(3, "partitive")

    def test_matches_oracle_to_ten_thousand(self):
        for n in range(10001):
            assert cardinal(n) == oracle_cardinal(n), n

    def test_injective_to_ten_thousand(self):
        seen = {cardinal(n) for n in range(10001)}
        assert len(seen) == 10001

    def test_thousands_compositionality(self):
        # cardinal(1000a + b) is the scale composition of its two halves
        for a in range(1, 1000):
            for b in (1, 5, 17, 60, 205, 999):
                got = cardinal(1000 * a + b)
                assert got == oracle_cardinal(1000 * a + b)
                assert got.startswith(cardinal(a * 1000) + " ")


class TestDecimal:
    def test_examples(self):
        assert decimal("3", "14") == "kolm koma neliteist"
        assert decimal("0", "5") == "null koma viis"
        assert decimal("1", "234") == "üks koma kaks kolm neli"

    def test_malformed(self):
        with pytest.raises(ValueError):
            decimal("", "5")
        with pytest.raises(ValueError):
            decimal("3", "x4")


class TestOrdinal:
    def test_examples(self):
        assert ordinal(1) == "esimene"
        assert ordinal(2) == "teine"
        assert ordinal(3) == "kolmas"
        assert ordinal(10) == "kümnes"
        assert ordinal(11) == "üheteistkümnes"
        assert ordinal(20) == "kahekümnes"
        assert ordinal(21) == "kahekümne esimene"
        assert ordinal(100) == "sajas"
        assert ordinal(110) == "saja kümnes"
        assert ordinal(1000) == "tuhandes"
        assert ordinal(1999) == "tuhande üheksasaja üheksakümne üheksas"
        assert ordinal(2020) == "kahe tuhande kahekümnes"

    def test_genitive(self):
        assert ordinal(20, GENITIVE) == "kahekümnenda"
        assert ordinal(3, GENITIVE) == "kolmanda"
        assert ordinal(12, GENITIVE) == "kaheteistkümnenda"

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            ordinal(0)
        with pytest.raises(ValueError):
            ordinal(4000)


class TestDigits:
    def test_examples(self):
        assert digits("101") == "üks null üks"
        assert digits("0") == "null"
        assert digits("372") == "kolm seitse kaks"

    def test_word_count_matches_length(self):
        for s in ("5123456", "0", "000", "9081726354"):
            assert len(digits(s).split()) == len(s)

    def test_rejects_non_digits(self):
        with pytest.raises(ValueError):
            digits("12a")
        with pytest.raises(ValueError):
            digits("")


class TestLexiconLoading:
    def test_default_lexicon_loads(self):
        lex = default_lexicon()
        assert lex.units[3] == "kolm"
        assert lex.million == "miljon"

    def test_missing_key_reported(self, tmp_path):
        path = tmp_path / "partial.txt"
        path.write_text("unit.0=null\n", encoding="utf-8")
        with pytest.raises(LexiconError):
            load_lexicon(path)

    def test_bad_line_reported_with_location(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("unit.0=null\nno equals sign\n", encoding="utf-8")
        with pytest.raises(LexiconError, match="bad.txt:2"):
            load_lexicon(path)
