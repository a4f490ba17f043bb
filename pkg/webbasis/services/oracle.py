"""Independent counting oracles: q = 1 highest weight dimensions and the hook length formula."""
import logging
from math import factorial
from typing import Dict, List, Sequence, Union

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from webbasis.models.word import GlWeight, TypeString, Word
from webbasis.services.errors import RankError
from webbasis.services.words import enumerate_words

logger = logging.getLogger(__name__)

INVARIANT = "invariant"


def _raise_word(w: Word, i: int) -> List[Word]:
    """Classical E_i on a tensor basis word: each position moved up independently."""
    out = []
    labels = list(w.z)
    for pos, z in enumerate(labels):
        if z == i + 1:
            new = z - 1
        elif z == -i:
            new = -(i + 1)
        else:
            continue
        out.append(Word.from_z(labels[:pos] + [new] + labels[pos + 1:]))
    return out


def raising_matrix(u: TypeString, weight: GlWeight, n: int) -> np.ndarray:
    """Integer matrix of all E_i from the weight space of V(u) into the spaces above it, stacked."""
    source = list(enumerate_words(len(u), n, u, weight))
    rows: Dict[tuple, int] = {}
    entries = []
    for col, w in enumerate(source):
        for i in range(1, n):
            for target in _raise_word(w, i):
                row = rows.setdefault((i, target.z), len(rows))
                entries.append((row, col))
    matrix = np.zeros((len(rows), len(source)), dtype=np.int64)
    for row, col in entries:
        matrix[row, col] += 1
    return matrix


def oracle_dimensions(u: TypeString, weight: Union[GlWeight, str], n: int) -> int:
    """Dimension of the joint kernel of the E_i on the weight space of V(u) at q = 1."""
    if n < 1:
        raise RankError(f"rank must be positive, got {n}")
    if weight == INVARIANT:
        weight = GlWeight.zero(n)
    if weight.n != n:
        raise RankError(f"weight {weight} does not have {n} coordinates")
    matrix = raising_matrix(u, weight, n)
    size = matrix.shape[1]
    if size == 0:
        return 0
    if matrix.shape[0] == 0:
        return size
    # exact rank over QQ
    rows = [[QQ(int(v)) for v in row] for row in matrix.tolist()]
    rank = DomainMatrix(rows, matrix.shape, QQ).rank()
    logger.debug(f"Oracle for type {u}, weight {weight}, n={n}: {size} - {rank}")
    return size - rank


def hook_length_count(shape: Sequence[int]) -> int:
    """Number of standard Young tableaux of the given partition."""
    shape = list(shape)
    if any(part <= 0 for part in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"{shape} is not a partition")
    conjugate = [sum(1 for part in shape if part > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, part in enumerate(shape):
        for j in range(part):
            hooks *= (part - j - 1) + (conjugate[j] - i - 1) + 1
    return factorial(sum(shape)) // hooks


def endomorphism_dimension(r: int, n: int) -> int:
    """dim End(V^(x)r) = sum of squared tableau counts over partitions of r with at most n rows."""
    total = 0
    for shape in partitions(r):
        if len(shape) <= n:
            total += hook_length_count(shape) ** 2
    return total


def partitions(m: int, largest: int = None) -> List[List[int]]:
    largest = m if largest is None else largest
    if m == 0:
        return [[]]
    result = []
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            result.append([first] + rest)
    return result
