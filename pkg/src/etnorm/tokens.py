"""Tokenization of raw text into classified spans.

A single left-to-right longest-match pass over the input. Structural
shapes (URLs, emails, phone numbers, dates, times, decimals, grouped
digits, ordinal dots, plain numbers) are matched by priority-ordered
patterns; letter runs are matched as one shape and classified afterwards
(case-suffixed acronym, Roman candidate, uppercase sequence, mixed case,
lowercase consonant cluster, plain word).

Tokenization is lossless: every non-whitespace character lands in exactly
one token, each token records the whitespace that follows it, and
``detokenize`` reproduces the input byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class TokenKind(Enum):
    WORD = "word"
    UPPERCASE_SEQ = "uppercase_seq"
    MIXED_CASE = "mixed_case"
    LOWERCASE_CONSONANTS = "lowercase_consonants"
    CARDINAL_NUMBER = "cardinal_number"
    DECIMAL_NUMBER = "decimal_number"
    DIGIT_GROUP_SEQ = "digit_group_seq"
    ROMAN_CANDIDATE = "roman_candidate"
    DATE_LIKE = "date_like"
    TIME_LIKE = "time_like"
    URL = "url"
    EMAIL = "email"
    PHONE = "phone"
    ORDINAL_DOT = "ordinal_dot"
    CASE_SUFFIXED_ACRONYM = "case_suffixed_acronym"
    SYMBOL = "symbol"
    PUNCT = "punct"


@dataclass
class Token:
    """One classified span. ``span`` is byte offsets into the UTF-8 source;
    ``ws_after`` is the exact whitespace that followed the span."""

    text: str
    kind: TokenKind
    span: tuple[int, int]
    ws_after: str = ""

    @property
    def joined_right(self) -> bool:
        return self.ws_after == ""


class TokenList(list):
    """Token sequence that also remembers whitespace before the first token."""

    leading: str = ""


_UC = "A-ZÕÄÖÜŠŽ"
_LC = "a-zõäöüšž"
_VOWELS = frozenset("aeiouõäöüy")

# Case endings (plus the linking vowel variants) that may attach to an
# acronym: MTÜle, EAS-i, ERR-ile, NATOsse, CVsid, ...
CASE_SUFFIXES = frozenset(
    "i it id iks ile ilt il iga ist isse is ini ina ita ide idele "
    "le lt l ks ga st sse s ni na ta t d de dele sid te tele".split()
)

_SENTENCE_PUNCT = frozenset(".,!?;:()[]{}\"'«»‘’“”…–—-·")

_WS_RE = re.compile(r"\s+")

_URL_RE = re.compile(
    r"(?:https?://|www\.)[^\s<>\"]+"
    r"|[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.(?:ee|com|org|net|eu|fi|lv|lt|gl|io)(?:/[^\s<>\"]*)?",
)
_EMAIL_RE = re.compile(r"[A-Za-z0-9_.+-]+@[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)+")
_D = "[0-9]"  # ASCII digits only; \d would also match other scripts' digits
_PHONE_PLUS_RE = re.compile(rf"\+{_D}(?:[  -]?{_D}){{6,14}}(?!{_D})")
_PHONE_GROUPED_RE = re.compile(rf"{_D}{{2,4}}(?:[  -]{_D}{{2,4}}){{2,}}(?!{_D})")
_THOUSANDS_SHAPE_RE = re.compile(rf"^{_D}{{1,3}}(?:([  .]){_D}{{3}})+$")
_DATE_RE = re.compile(rf"{_D}{{1,2}}\.{_D}{{1,2}}\.{_D}{{4}}(?!{_D})")
_TIME_RE = re.compile(rf"{_D}{{1,2}}:{_D}{{2}}(?::{_D}{{2}})?(?!{_D})")
_DECIMAL_RE = re.compile(rf"{_D}+(?:,{_D}+|\.{_D}{{1,2}})(?!{_D})")
_GROUPED_RE = re.compile(rf"{_D}{{1,3}}(?:([  .]){_D}{{3}})+(?!{_D})|{_D}{{7,}}(?!{_D})")
_ORDINAL_DOT_RE = re.compile(rf"{_D}{{1,6}}\.(?=[–-]|\s+[{_LC}])")
_CARDINAL_RE = re.compile(rf"{_D}{{1,6}}(?!{_D})")
_SUFFIXED_ACRONYM_RE = re.compile(rf"[{_UC}]{{2,}}-[{_LC}]{{1,5}}(?![^\W\d_])")
_WORD_RUN_RE = re.compile(r"[^\W\d_](?:[^\W\d_]|[0-9])*")

_ATTACHED_SUFFIX_RE = re.compile(rf"^([{_UC}]{{2,}})-?([{_LC}]{{1,5}})$")
_ROMAN_SHAPE_RE = re.compile(r"^[IVXLCDM]+$")
_HAS_LOWER_UPPER_RE = re.compile(rf"[{_LC}][{_UC}]")
_TRAILING_PUNCT = ".,;:!?)]}\"'»’”"


def _not_after_digit(text: str, pos: int) -> bool:
    return pos == 0 or text[pos - 1] not in "0123456789"


def _classify_word_run(surface: str) -> TokenKind:
    match = _ATTACHED_SUFFIX_RE.match(surface)
    if match and match.group(2) in CASE_SUFFIXES:
        return TokenKind.CASE_SUFFIXED_ACRONYM
    if _ROMAN_SHAPE_RE.match(surface):
        return TokenKind.ROMAN_CANDIDATE
    if surface.isalpha():
        if surface.isupper():
            return TokenKind.UPPERCASE_SEQ
        if surface.islower():
            if len(surface) >= 2 and not any(ch in _VOWELS for ch in surface):
                return TokenKind.LOWERCASE_CONSONANTS
            return TokenKind.WORD
        if _HAS_LOWER_UPPER_RE.search(surface):
            return TokenKind.MIXED_CASE
        if surface[0].isupper() and surface[1:].islower():
            return TokenKind.WORD
        if len(surface) >= 3 and surface[:-1].isupper() and surface[-1].islower():
            # uppercase run with a one-letter tail that is not a case ending
            return TokenKind.MIXED_CASE
        return TokenKind.WORD
    return TokenKind.MIXED_CASE  # letters with digits attached


def _trim_trailing_punct(text: str, start: int, end: int) -> int:
    while end > start and text[end - 1] in _TRAILING_PUNCT:
        end -= 1
    return end


def _match_url(text: str, pos: int):
    match = _URL_RE.match(text, pos)
    if not match:
        return None
    end = _trim_trailing_punct(text, pos, match.end())
    surface = text[pos:end]
    # a bare domain needs a dot and an alphabetic last label to qualify
    if "://" not in surface and not surface.startswith("www."):
        if "." not in surface:
            return None
        last = surface.split("/", 1)[0].rsplit(".", 1)[-1]
        if not last.isalpha():
            return None
    return end if end > pos else None


def _match_email(text: str, pos: int):
    match = _EMAIL_RE.match(text, pos)
    if not match:
        return None
    return _trim_trailing_punct(text, pos, match.end())


def _match_phone(text: str, pos: int):
    if not _not_after_digit(text, pos):
        return None
    match = _PHONE_PLUS_RE.match(text, pos)
    if match:
        return match.end()
    match = _PHONE_GROUPED_RE.match(text, pos)
    if match:
        surface = match.group(0)
        digit_count = sum(ch.isdigit() for ch in surface)
        if 7 <= digit_count <= 15 and not _THOUSANDS_SHAPE_RE.match(surface):
            return match.end()
    return None


def _match_simple(regex, digit_guard: bool = False):
    def matcher(text: str, pos: int):
        if digit_guard and not _not_after_digit(text, pos):
            return None
        match = regex.match(text, pos)
        return match.end() if match else None

    return matcher


def _match_suffixed_acronym(text: str, pos: int):
    match = _SUFFIXED_ACRONYM_RE.match(text, pos)
    if match and match.group(0).rsplit("-", 1)[1] in CASE_SUFFIXES:
        return match.end()
    return None


def _match_word_run(text: str, pos: int):
    # letters plus ASCII digits only; \w-based classes would also admit
    # non-decimal numerics (circled digits, Roman numeral glyphs, ...)
    match = _WORD_RUN_RE.match(text, pos)
    if not match:
        return None
    end = pos
    for ch in match.group(0):
        if ch.isalpha() or ch in "0123456789":
            end += 1
        else:
            break
    return end if end > pos else None


_MATCHERS: list[tuple[TokenKind | None, object]] = [
    (TokenKind.URL, _match_url),
    (TokenKind.EMAIL, _match_email),
    (TokenKind.PHONE, _match_phone),
    (TokenKind.DATE_LIKE, _match_simple(_DATE_RE, digit_guard=True)),
    (TokenKind.TIME_LIKE, _match_simple(_TIME_RE, digit_guard=True)),
    (TokenKind.DECIMAL_NUMBER, _match_simple(_DECIMAL_RE, digit_guard=True)),
    (TokenKind.DIGIT_GROUP_SEQ, _match_simple(_GROUPED_RE, digit_guard=True)),
    (TokenKind.ORDINAL_DOT, _match_simple(_ORDINAL_DOT_RE, digit_guard=True)),
    (TokenKind.CARDINAL_NUMBER, _match_simple(_CARDINAL_RE, digit_guard=True)),
    (TokenKind.CASE_SUFFIXED_ACRONYM, _match_suffixed_acronym),
    (None, _match_word_run),  # kind decided by _classify_word_run
]


def tokenize(text: str) -> TokenList:
    """Split text into classified tokens; whitespace is recorded, not emitted."""
    tokens = TokenList()
    tokens.leading = ""
    pos = 0
    byte_pos = 0
    length = len(text)

    ws = _WS_RE.match(text, pos)
    if ws:
        tokens.leading = ws.group(0)
        byte_pos += len(tokens.leading.encode("utf-8"))
        pos = ws.end()

    while pos < length:
        end = None
        kind = None
        for candidate_kind, matcher in _MATCHERS:
            end = matcher(text, pos)
            if end is not None:
                kind = candidate_kind
                break
        if end is None:
            ch = text[pos]
            end = pos + 1
            kind = TokenKind.PUNCT if ch in _SENTENCE_PUNCT else TokenKind.SYMBOL
        surface = text[pos:end]
        if kind is None:
            kind = _classify_word_run(surface)
        surface_bytes = len(surface.encode("utf-8"))
        token = Token(surface, kind, (byte_pos, byte_pos + surface_bytes))
        byte_pos += surface_bytes
        pos = end
        ws = _WS_RE.match(text, pos)
        if ws:
            token.ws_after = ws.group(0)
            byte_pos += len(token.ws_after.encode("utf-8"))
            pos = ws.end()
        tokens.append(token)
    return tokens


def detokenize(tokens) -> str:
    """Rebuild the exact source text from a token sequence."""
    leading = getattr(tokens, "leading", "")
    return leading + "".join(t.text + t.ws_after for t in tokens)
