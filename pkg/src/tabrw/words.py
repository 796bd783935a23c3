"""Words over the ordered alphabet [n] = {1 < 2 < ... < n}.

A word is a plain tuple of ints. The empty tuple is the empty word.
"""

from typing import Iterable, Sequence

Word = tuple


class LetterError(ValueError):
    """A letter falls outside 1..n."""


def check_word(w: Iterable[int], n: int | None = None) -> Word:
    """Return ``w`` as a tuple, validating letters against [n] when given."""
    w = tuple(int(x) for x in w)
    for x in w:
        if x < 1 or (n is not None and x > n):
            raise LetterError(f"letter {x} not in [1..{n}]")
    return w


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse the compact digit form ``"3121312"`` or ``"10,2,11"``.

    An empty string, or the symbol ``λ``, gives the empty word.
    """
    text = text.strip()
    if text in ("", "λ", "-"):
        return ()
    if "," in text:
        parts = [p for p in text.split(",") if p.strip()]
    else:
        parts = list(text)
    try:
        letters = [int(p) for p in parts]
    except ValueError:
        raise LetterError(f"cannot parse word {text!r}") from None
    return check_word(letters, n)


def format_word(w: Sequence[int]) -> str:
    if any(x > 9 for x in w):
        return ",".join(str(x) for x in w)
    return "".join(str(x) for x in w)


def weight(w: Sequence[int], n: int) -> tuple[int, ...]:
    """Count of each letter 1..n in ``w``."""
    check_word(w, n)
    counts = [0] * n
    for x in w:
        counts[x - 1] += 1
    return tuple(counts)


def fac(w: Sequence[int]) -> list[Word]:
    """Split ``w`` greedily into maximal strictly decreasing factors."""
    out: list[list[int]] = []
    for x in w:
        if out and x < out[-1][-1]:
            out[-1].append(x)
        else:
            out.append([x])
    return [tuple(f) for f in out]


def mirror(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def all_words(n: int, length: int):
    """Every word of the given length over [n], in lexicographic order."""
    if length == 0:
        yield ()
        return
    for head in all_words(n, length - 1):
        for x in range(1, n + 1):
            yield head + (x,)


def words_up_to(n: int, maxlen: int):
    for k in range(maxlen + 1):
        yield from all_words(n, k)
