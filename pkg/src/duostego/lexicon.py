"""Ten-category word inventory mapping words to decimal digits.

Every word belongs to exactly one category 0-9 and, within it, to one
or more of six part-of-speech classes. Decoding a word needs only its
category, so categories must be globally disjoint; generation pulls
from a specific (digit, POS) cell, so every cell must be non-empty or a
sentence skeleton could dead-end.

File format: UTF-8 text, one ``digit|pos|word`` entry per line, where
pos is one of det, pronoun, preposition, noun, verb, propernoun.
Lines starting with ``#`` are comments; blank lines are ignored. Words
are normalized to lowercase and may not contain whitespace.
"""

from __future__ import annotations

import enum
from importlib import resources

from .errors import (
    DuplicateWordError,
    IncompleteCategoryError,
    LexiconParseError,
    UnknownWordError,
)

DIGITS = tuple(range(10))


class PosClass(enum.Enum):
    """The six part-of-speech classes; values are the file-format tags."""

    DET = "det"
    PRONOUN = "pronoun"
    PREPOSITION = "preposition"
    NOUN = "noun"
    VERB = "verb"
    PROPER_NOUN = "propernoun"


_POS_ORDER = {pos: i for i, pos in enumerate(PosClass)}


class Lexicon:
    """Validated, immutable word inventory.

    Construct from a mapping of (digit, PosClass) -> iterable of words;
    most callers should use load_lexicon() or load_default_lexicon().
    """

    def __init__(self, cells):
        table = {}
        for (digit, pos), words in cells.items():
            table[(digit, pos)] = tuple(sorted(set(w.lower() for w in words)))

        missing = [
            (digit, pos.value)
            for digit in DIGITS
            for pos in PosClass
            if not table.get((digit, pos))
        ]
        if missing:
            raise IncompleteCategoryError(
                f"{len(missing)} empty (digit, pos) cells, first few: {missing[:5]}"
            )

        digit_by_word = {}
        for (digit, pos), words in sorted(table.items(), key=lambda kv: (kv[0][0], _POS_ORDER[kv[0][1]])):
            for word in words:
                seen = digit_by_word.get(word)
                if seen is not None and seen != digit:
                    raise DuplicateWordError(word, seen, digit)
                digit_by_word[word] = digit

        self._cells = table
        self._digit_by_word = digit_by_word

    def digit_of(self, word: str) -> int:
        """Category digit of a token, case-insensitive."""
        try:
            return self._digit_by_word[word.lower()]
        except KeyError:
            raise UnknownWordError(word) from None

    def words_for(self, digit: int, pos: PosClass) -> tuple[str, ...]:
        """Sorted words of one (digit, POS) cell; non-empty by invariant."""
        return self._cells[(digit, pos)]

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._digit_by_word

    def __len__(self) -> int:
        return len(self._digit_by_word)

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._cells == other._cells

    __hash__ = None

    def serialize(self) -> str:
        """Canonical text form: digit|pos|word lines sorted by (digit, pos, word)."""
        lines = []
        for (digit, pos), words in sorted(
            self._cells.items(), key=lambda kv: (kv[0][0], _POS_ORDER[kv[0][1]])
        ):
            lines.extend(f"{digit}|{pos.value}|{word}" for word in words)
        return "\n".join(lines) + "\n"


def load_lexicon(text: str) -> Lexicon:
    """Parse and validate lexicon text (see module docstring for the format)."""
    cells: dict[tuple[int, PosClass], set] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("|")
        if len(fields) != 3:
            raise LexiconParseError(f"line {lineno}: expected digit|pos|word, got {raw!r}")
        digit_field, pos_field, word = (f.strip() for f in fields)
        if len(digit_field) != 1 or not digit_field.isdigit():
            raise LexiconParseError(f"line {lineno}: category must be a single digit 0-9, got {digit_field!r}")
        try:
            pos = PosClass(pos_field.lower())
        except ValueError:
            raise LexiconParseError(
                f"line {lineno}: unknown part of speech {pos_field!r} "
                f"(expected one of {', '.join(p.value for p in PosClass)})"
            ) from None
        if not word:
            raise LexiconParseError(f"line {lineno}: empty word")
        if any(c.isspace() for c in word):
            raise LexiconParseError(f"line {lineno}: word {word!r} contains whitespace")
        cells.setdefault((int(digit_field), pos), set()).add(word.lower())
    return Lexicon(cells)


def load_default_lexicon() -> Lexicon:
    """The lexicon bundled with the package."""
    text = resources.files("duostego").joinpath("data/default_lexicon.txt").read_text("utf-8")
    return load_lexicon(text)
