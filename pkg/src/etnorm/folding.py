"""Diacritic folding for letters outside the Estonian alphabet.

Letters that carry a diacritic the Estonian alphabet does not know
(é, ñ, ç, ...) are reduced to their base letter so the synthesizer
never sees them. Letters that belong to the alphabet (õ, ä, ö, ü,
š, ž and plain a-z) are protected and never touched.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

_EXTRA = "õäöüšž"
DEFAULT_PROTECTED = frozenset(
    "abcdefghijklmnopqrstuvwxyz" + _EXTRA + ("abcdefghijklmnopqrstuvwxyz" + _EXTRA).upper()
)


def _base_letter(ch: str) -> str:
    """Base letter of ``ch`` after canonical decomposition, or ``ch`` itself.

    Only single-character results are accepted so folding never changes
    the length of the text.
    """
    decomposed = unicodedata.normalize("NFD", ch)
    stripped = "".join(c for c in decomposed if not unicodedata.combining(c))
    if not stripped:
        return ch
    recomposed = unicodedata.normalize("NFC", stripped)
    return recomposed if len(recomposed) == 1 else ch


@dataclass(frozen=True)
class FoldingTable:
    """Codepoint-to-base-letter mapping with a protected letter set."""

    protected: frozenset[str] = DEFAULT_PROTECTED
    overrides: dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_protected_file(cls, path) -> "FoldingTable":
        """Build a table whose protected set is read from a file.

        The file lists one protected character per line; blank lines and
        lines starting with ``#`` are ignored.
        """
        chars = set()
        with open(path, encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                entry = line.strip()
                if not entry or entry.startswith("#"):
                    continue
                if len(entry) != 1:
                    raise ValueError(f"{path}:{lineno}: expected a single character, got {entry!r}")
                chars.add(entry)
        return cls(protected=frozenset(chars))

    def fold_char(self, ch: str) -> str:
        if ch in self.protected:
            return ch
        if ch in self.overrides:
            return self.overrides[ch]
        if not ch.isalpha():
            return ch
        return _base_letter(ch)


def fold_diacritics(text: str, table: FoldingTable | None = None) -> str:
    """Replace out-of-alphabet diacritic letters with their base letters.

    The character count of the result always equals the input's; anything
    that is not a foldable letter passes through unchanged.
    """
    if table is None:
        table = FoldingTable()
    return "".join(table.fold_char(ch) for ch in text)
