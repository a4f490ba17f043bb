"""Words over {1..n, 1'..n'}: types, weights, the letter order and enumeration."""
import logging
import re
from typing import Iterator, List, Optional, Sequence

from webbasis.models.word import GlWeight, Letter, TypeString, Word
from webbasis.services.errors import RankError
from webbasis.utils.helpers import clean_text, parse_int_list

logger = logging.getLogger(__name__)

_COMPACT_RE = re.compile(r"^(\d'?)*$")


def type_of(w: Word) -> TypeString:
    return TypeString(signs=tuple(letter.sign for letter in w.letters))


def check_letters(w: Word, n: int) -> None:
    for letter in w.letters:
        if letter.value > n:
            raise RankError(f"letter {letter} exceeds n={n} in word {w}")


def weight_of_word(w: Word, n: int) -> GlWeight:
    """lambda_a = #a - #a'."""
    check_letters(w, n)
    coords = [0] * n
    for letter in w.letters:
        coords[letter.value - 1] += -1 if letter.barred else 1
    return GlWeight(coords=tuple(coords))


def letter_key(letter: Letter):
    """Sort key for 1 < 2 < ... < n < n' < ... < 2' < 1'."""
    return (1, -letter.value) if letter.barred else (0, letter.value)


def lex_compare(x: Word, y: Word) -> int:
    """-1, 0 or 1 as x is below, equal to or above y."""
    if len(x) != len(y):
        raise ValueError(f"cannot compare words of lengths {len(x)} and {len(y)}")
    for a, b in zip(x.letters, y.letters):
        ka, kb = letter_key(a), letter_key(b)
        if ka != kb:
            return -1 if ka < kb else 1
    return 0


def word_key(w: Word):
    return tuple(letter_key(letter) for letter in w.letters)


def alphabet(n: int, sign: Optional[str] = None) -> List[Letter]:
    """Letters of rank n in increasing order, optionally only one sign."""
    plain = [Letter(value=a) for a in range(1, n + 1)]
    barred = [Letter(value=a, barred=True) for a in range(n, 0, -1)]
    if sign == '+':
        return plain
    if sign == '-':
        return barred
    return plain + barred


def enumerate_words(r: int, n: int, u: Optional[TypeString] = None,
                    weight: Optional[GlWeight] = None) -> Iterator[Word]:
    """Lazily yield words of length r in lex order, filtered by type and weight."""
    if u is not None and len(u) != r:
        raise ValueError(f"type {u} does not have length {r}")
    if weight is not None and weight.n != n:
        raise RankError(f"weight {weight} does not have {n} coordinates")
    letters_at = [alphabet(n, u.signs[i] if u is not None else None) for i in range(r)]

    def feasible(remaining: Sequence[int], left: int) -> bool:
        distance = sum(abs(c) for c in remaining)
        return distance <= left and (left - distance) % 2 == 0

    def extend(prefix: List[Letter], remaining: Optional[List[int]]) -> Iterator[Word]:
        depth = len(prefix)
        if depth == r:
            yield Word(letters=tuple(prefix))
            return
        for letter in letters_at[depth]:
            if remaining is None:
                yield from extend(prefix + [letter], None)
                continue
            nxt = list(remaining)
            nxt[letter.value - 1] -= -1 if letter.barred else 1
            if feasible(nxt, r - depth - 1):
                yield from extend(prefix + [letter], nxt)

    target = list(weight.coords) if weight is not None else None
    if target is not None and not feasible(target, r):
        return
    yield from extend([], target)


def z_label(letter: Optional[Letter]) -> int:
    """a -> a, a' -> -a, and an absent edge (None) -> 0."""
    return 0 if letter is None else letter.z_label


def parse_word(text: str, n: Optional[int] = None) -> Word:
    """Parse ``12'1`` or ``[1,-2,1]``; letters are checked against n when given."""
    cleaned = clean_text(text)
    if cleaned.startswith('['):
        labels = parse_int_list(cleaned)
        if 0 in labels:
            raise ValueError(f"0 is not a letter in {text!r}")
        word = Word.from_z(labels)
    elif _COMPACT_RE.match(cleaned):
        letters = []
        for match in re.finditer(r"(\d)('?)", cleaned):
            letters.append(Letter(value=int(match.group(1)), barred=bool(match.group(2))))
        word = Word(letters=tuple(letters))
    else:
        raise ValueError(f"Invalid word literal {text!r}")
    if n is not None:
        check_letters(word, n)
    return word


def format_word(w: Word) -> str:
    return str(w)


def parse_type(text: str) -> TypeString:
    return TypeString.parse(clean_text(text))


def parse_weight(text: str, n: Optional[int] = None) -> GlWeight:
    weight = GlWeight(coords=tuple(parse_int_list(text)))
    if n is not None and weight.n != n:
        raise RankError(f"weight {weight} does not have {n} coordinates")
    return weight


def is_dominant(weight: GlWeight) -> bool:
    return weight.is_dominant()
