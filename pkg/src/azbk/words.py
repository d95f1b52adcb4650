"""Letters, alphabets and words.

A word is a plain tuple of letter names, e.g. ``("X0", "X1")``.  Letters are
strings and compare by equality; the alphabets below are fixed tuples whose
order is the canonical letter order used everywhere else in the package.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Tuple

Word = Tuple[str, ...]

X0, X1 = "X0", "X1"
X12, X23, X34, X45, X24, X51 = "X12", "X23", "X34", "X45", "X24", "X51"

AX: Tuple[str, ...] = (X0, X1)
# kernel letters first, then the quotient letters
AB: Tuple[str, ...] = (X24, X34, X45, X12, X23)
AB51: Tuple[str, ...] = AB + (X51,)

EMPTY: Word = ()

KNOWN_ALPHABETS = (AX, AB, AB51)


class AlphabetError(ValueError):
    pass


def check_word(w: Sequence[str], alphabet: Sequence[str]) -> Word:
    w = tuple(w)
    bad = [a for a in w if a not in alphabet]
    if bad:
        raise AlphabetError(f"letters {sorted(set(bad))} not in alphabet {tuple(alphabet)}")
    return w


def alphabet_of(*words: Iterable[str]) -> Tuple[str, ...]:
    """Smallest predeclared alphabet containing every letter of ``words``."""
    letters = set()
    for w in words:
        letters.update(w)
    for alph in KNOWN_ALPHABETS:
        if letters <= set(alph):
            return alph
    raise AlphabetError(f"no predeclared alphabet contains {sorted(letters)}")


def letter_rank(alphabet: Sequence[str]):
    return {a: i for i, a in enumerate(alphabet)}


def word_key(w: Word, alphabet: Sequence[str] = None):
    """Sort key: by weight, then lexicographically in alphabet order."""
    if alphabet is None:
        alphabet = alphabet_of(w)
    rank = letter_rank(alphabet)
    return (len(w), tuple(rank[a] for a in w))


def depth(w: Word) -> int:
    """Number of X1 letters (only meaningful over AX)."""
    return sum(1 for a in w if a == X1)


def theta(w: Sequence[str]) -> Word:
    """Swap X0 and X1 letterwise."""
    w = check_word(w, AX)
    return tuple(X1 if a == X0 else X0 for a in w)


def reverse(w: Sequence[str]) -> Word:
    return tuple(reversed(tuple(w)))


def is_convergent(w: Word) -> bool:
    return len(w) > 0 and w[0] == X0 and w[-1] == X1


def format_word(w: Word) -> str:
    return ".".join(w) if w else "1"


def parse_word(text: str, alphabet: Sequence[str] = None) -> Word:
    """Inverse of :func:`format_word`.  ``"1"`` and ``""`` give the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return EMPTY
    w = tuple(part.strip() for part in text.split("."))
    if alphabet is not None:
        check_word(w, alphabet)
    else:
        alphabet_of(w)
    return w


def words_of_length(alphabet: Sequence[str], n: int):
    """All words of length ``n`` in lexicographic order of the alphabet."""
    if n == 0:
        yield EMPTY
        return
    for head in alphabet:
        for tail in words_of_length(alphabet, n - 1):
            yield (head,) + tail


def words_up_to(alphabet: Sequence[str], n: int):
    for k in range(n + 1):
        yield from words_of_length(alphabet, k)


def splittings(w: Word, parts: int):
    """All ways to cut ``w`` into ``parts`` consecutive (possibly empty) pieces.

    Ordered lexicographically on the cut positions.
    """
    n = len(w)
    if parts == 1:
        yield (w,)
        return
    for cut in range(n + 1):
        head = w[:cut]
        for rest in splittings(w[cut:], parts - 1):
            yield (head,) + rest


# compositions <-> words over AX

def composition_to_word(k: Sequence[int]) -> Word:
    """(k1,...,kp) -> X0^(k1-1) X1 ... X0^(kp-1) X1."""
    out = []
    for ki in k:
        if int(ki) != ki or ki < 1:
            raise ValueError(f"composition entries must be positive integers, got {tuple(k)}")
        out.extend([X0] * (ki - 1))
        out.append(X1)
    return tuple(out)


def word_to_composition(w: Sequence[str]) -> Tuple[int, ...]:
    w = check_word(w, AX)
    if w and w[-1] != X1:
        raise ValueError(f"word {format_word(w)} does not end with X1")
    k, run = [], 0
    for a in w:
        if a == X0:
            run += 1
        else:
            k.append(run + 1)
            run = 0
    return tuple(k)


def parse_composition(text: str) -> Tuple[int, ...]:
    try:
        k = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"bad composition {text!r}") from None
    if not k or any(x < 1 for x in k):
        raise ValueError(f"bad composition {text!r}")
    return k
