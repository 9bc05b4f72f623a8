"""Binary-word helpers: validation, canonical order, prefix machinery.

Words are plain ``str`` over the alphabet {'0', '1'}; the empty word is
legal.  The canonical order used everywhere is length-then-lexicographic,
with the empty word least.  In text formats an empty word is written ``-``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .exact import Dyadic

_BITS = frozenset("01")


def validate_bits(word: str) -> str:
    if not _BITS.issuperset(word):
        raise ValueError(f"not a binary word: {word!r}")
    return word


def is_prefix(p: str, s: str) -> bool:
    """True when ``p`` is a (not necessarily proper) prefix of ``s``."""
    return s.startswith(p)


def comparable(x: str, y: str) -> bool:
    """True when either word is a prefix of the other."""
    return x.startswith(y) or y.startswith(x)


def prefix_free(words: Iterable[str]) -> bool:
    """True when no listed word is a prefix of another listed word.

    Repeated words count as violations: the check is about the listing,
    and a word is trivially a prefix of its duplicate.
    """
    ordered = sorted(words)
    return not any(ordered[i + 1].startswith(ordered[i])
                   for i in range(len(ordered) - 1))


def prune_to_minimal(words: Iterable[str]) -> list[str]:
    """Keep only words with no proper prefix in the collection.

    The survivors form an antichain denoting the same cylinder set; when a
    word and an extension of it both occur, the shorter one is kept.
    Returned lexicographically sorted.
    """
    kept: list[str] = []
    for w in sorted(set(words)):
        if not (kept and w.startswith(kept[-1])):
            kept.append(w)
    return kept


def length_lex_key(word: str) -> tuple[int, str]:
    """Sort key realizing the canonical length-then-lexicographic order."""
    return (len(word), word)


def iter_length_lex() -> Iterator[str]:
    """Yield every binary word in canonical order: '', '0', '1', '00', ..."""
    length = 0
    while True:
        if length == 0:
            yield ""
        else:
            for i in range(1 << length):
                yield format(i, f"0{length}b")
        length += 1


def bit_value(word: str) -> Dyadic:
    """The dyadic ``0.word`` — the left endpoint of the word's cylinder."""
    validate_bits(word)
    return Dyadic(int(word, 2) if word else 0, len(word))


def format_word(word: str) -> str:
    return word if word else "-"


def parse_word(token: str) -> str:
    if token == "-":
        return ""
    return validate_bits(token)
