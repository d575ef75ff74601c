"""The compiled-in sentence grammar.

Fourteen production rules over five nonterminals generate every
sentence shape this package emits; the terminals are the six
part-of-speech classes, and the lexicon supplies the actual words.
Three views of the grammar live here:

* skeletons_of_length() enumerates every derivable part-of-speech
  sequence of an exact length (length-indexed bottom-up construction,
  so the recursive rules terminate);
* recognize() is a CYK membership check over an internally binarized
  rule set, deliberately independent of the enumerator;
* generate_sentence() realizes a digit sequence as words, one word per
  digit, picking skeleton and words from a seeded stream.

Decoding is the odd one out: decode_sentence() maps words to digits
through the lexicon alone and never consults the grammar, so text that
was reformatted (or was never derivable to begin with) still decodes.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .errors import NoSkeletonError, UnknownWordError
from .lexicon import Lexicon, PosClass
from .rng import SplitMix64

# fmt: off
PRODUCTIONS: tuple[tuple[str, tuple], ...] = (
    ("S",       ("NP", "VP")),
    ("S",       ("VP",)),
    ("NP",      (PosClass.PRONOUN,)),
    ("NP",      (PosClass.PROPER_NOUN,)),
    ("NP",      (PosClass.DET, "Nominal")),
    ("Nominal", (PosClass.NOUN,)),
    ("Nominal", ("Nominal", PosClass.NOUN)),
    ("Nominal", ("Nominal", "PP")),
    ("VP",      (PosClass.VERB,)),
    ("VP",      (PosClass.VERB, "NP")),
    ("VP",      (PosClass.VERB, "NP", "PP")),
    ("VP",      (PosClass.VERB, "PP")),
    ("VP",      ("VP", "PP")),
    ("PP",      (PosClass.PREPOSITION, "NP")),
)
# fmt: on

START = "S"

_POS_ORDER = {pos: i for i, pos in enumerate(PosClass)}


def _skeleton_key(skeleton):
    return tuple(_POS_ORDER[p] for p in skeleton)


class Grammar:
    """The fixed production set, with per-instance caches."""

    def __init__(self):
        self._rules: dict[str, list[tuple]] = {}
        for lhs, rhs in PRODUCTIONS:
            self._rules.setdefault(lhs, []).append(rhs)
        self._min_len = self._minimum_lengths()
        self._derivable_cache: dict[tuple, frozenset] = {}
        self._skeletons_cache: dict[int, tuple] = {}
        self._unit_closure, self._binary_rules = self._binarize()

    # -- exact-length enumeration ---------------------------------------

    def skeletons_of_length(self, length: int) -> tuple[tuple[PosClass, ...], ...]:
        """All derivable part-of-speech sequences of exactly `length` terminals.

        Deterministically ordered; raises NoSkeletonError on an empty
        result (unreachable for this grammar when length >= 1).
        """
        if length < 1:
            raise ValueError(f"length must be positive, got {length}")
        cached = self._skeletons_cache.get(length)
        if cached is None:
            cached = tuple(sorted(self._derivable(START, length), key=_skeleton_key))
            self._skeletons_cache[length] = cached
        if not cached:
            raise NoSkeletonError(f"no derivable sentence shape of length {length}")
        return cached

    def _derivable(self, symbol, length: int) -> frozenset:
        if isinstance(symbol, PosClass):
            return frozenset([(symbol,)]) if length == 1 else frozenset()
        key = (symbol, length)
        hit = self._derivable_cache.get(key)
        if hit is not None:
            return hit
        found = set()
        for rhs in self._rules[symbol]:
            for parts in self._splits(rhs, length):
                for pieces in product(*(self._derivable(s, n) for s, n in zip(rhs, parts))):
                    found.add(sum(pieces, ()))
        result = frozenset(found)
        self._derivable_cache[key] = result
        return result

    def _splits(self, symbols, total: int):
        """Ways to apportion `total` terminals among `symbols`, min-length pruned."""
        if len(symbols) == 1:
            if self._min_len[symbols[0]] <= total:
                yield (total,)
            return
        head, tail = symbols[0], symbols[1:]
        tail_min = sum(self._min_len[s] for s in tail)
        for n in range(self._min_len[head], total - tail_min + 1):
            for rest in self._splits(tail, total - n):
                yield (n, *rest)

    def _minimum_lengths(self) -> dict:
        min_len = {pos: 1 for pos in PosClass}
        for lhs in self._rules:
            min_len[lhs] = len(PosClass) * 4  # any finite over-estimate
        changed = True
        while changed:
            changed = False
            for lhs, rhs in PRODUCTIONS:
                candidate = sum(min_len[s] for s in rhs)
                if candidate < min_len[lhs]:
                    min_len[lhs] = candidate
                    changed = True
        return min_len

    # -- recognition ------------------------------------------------------

    def recognize(self, skeleton: Sequence[PosClass]) -> bool:
        """True iff the part-of-speech sequence derives from S (CYK)."""
        n = len(skeleton)
        if n == 0:
            return False
        # chart[(i, j)] = symbols deriving skeleton[i:j]
        chart: dict[tuple[int, int], set] = {}
        for i, pos in enumerate(skeleton):
            chart[(i, i + 1)] = self._close({pos})
        for span in range(2, n + 1):
            for i in range(n - span + 1):
                j = i + span
                cell = set()
                for k in range(i + 1, j):
                    left, right = chart[(i, k)], chart[(k, j)]
                    for (a, b), lhss in self._binary_rules.items():
                        if a in left and b in right:
                            cell.update(lhss)
                chart[(i, j)] = self._close(cell)
        return START in chart[(0, n)]

    def _close(self, symbols: set) -> set:
        out = set(symbols)
        frontier = list(symbols)
        while frontier:
            sym = frontier.pop()
            for lhs in self._unit_closure.get(sym, ()):
                if lhs not in out:
                    out.add(lhs)
                    frontier.append(lhs)
        return out

    def _binarize(self):
        """Unit map and binary rule table for CYK; >2-symbol rules get fresh heads."""
        units: dict = {}
        binary: dict[tuple, set] = {}
        counter = 0
        for lhs, rhs in PRODUCTIONS:
            if len(rhs) == 1:
                units.setdefault(rhs[0], set()).add(lhs)
                continue
            symbols = list(rhs)
            while len(symbols) > 2:
                counter += 1
                fresh = f"_BIN{counter}"
                binary.setdefault((symbols[0], symbols[1]), set()).add(fresh)
                symbols[:2] = [fresh]
            binary.setdefault(tuple(symbols), set()).add(lhs)
        return units, binary

    # -- generation ---------------------------------------------------------

    def generate_sentence(
        self, lexicon: Lexicon, digits: Sequence[int], seed: int
    ) -> list[str]:
        """Words realizing `digits`, one word per digit, seed-deterministic.

        Token i is drawn from lexicon category digits[i]; the tokens'
        part-of-speech sequence is one of skeletons_of_length(len(digits)).
        """
        if not digits:
            raise ValueError("cannot generate a sentence for zero digits")
        skeletons = self.skeletons_of_length(len(digits))
        rng = SplitMix64(seed)
        skeleton = skeletons[rng.below(len(skeletons))]
        tokens = []
        for digit, pos in zip(digits, skeleton):
            words = lexicon.words_for(digit, pos)
            tokens.append(words[rng.below(len(words))])
        return tokens


def decode_sentence(lexicon: Lexicon, tokens: Iterable[str]) -> list[int]:
    """Token-wise category digits; lexicon-only, the grammar is never consulted."""
    digits = []
    for position, token in enumerate(tokens):
        try:
            digits.append(lexicon.digit_of(token))
        except UnknownWordError:
            raise UnknownWordError(token, position) from None
    return digits


DEFAULT_GRAMMAR = Grammar()
