from typing import NamedTuple

import numpy as np

from src.apps.bitmaps.dto import BlockLanguage, Factor, FactorSets, ZERO_BLOCK
from src.apps.bitmaps.errors import IndexOutOfRangeError


class RankClasses(NamedTuple):
    first_index: np.ndarray
    # ids of the k blocks in the rank below; 0 is the zero block, m >= 1 is member m - 1
    children: np.ndarray


def factor(lang: BlockLanguage, rank: int, index: int) -> Factor:
    if not 0 <= rank <= lang.ell:
        raise IndexOutOfRangeError(f'Rank {rank} is outside [0, {lang.ell}]')
    count = lang.k ** (lang.ell - rank)
    if not 0 <= index < count:
        raise IndexOutOfRangeError(f'Factor index {index} is outside [0, {count}) at rank {rank}')
    width = lang.k**rank
    return Factor(rank=rank, content=lang.bits.slice(index * width, width), index=index)


def classify_factors(lang: BlockLanguage) -> list[RankClasses]:
    """Intern every factor as the tuple of its k block ids, rank by rank from rank 0 upward.

    Two factors of one rank are equal iff their id tuples are equal, so the ids number the distinct
    quotients without ever comparing bit contents. Members are numbered by first occurrence.
    """
    k = lang.k
    ids = lang.bits.unpack().astype(np.int64)
    ones = np.flatnonzero(ids)
    ranks = [RankClasses(first_index=ones[:1], children=np.zeros((min(ones.size, 1), 0), dtype=np.int64))]

    for _ in range(lang.ell):
        rows = ids.reshape(-1, k)
        unique_rows, first, inverse = np.unique(rows, axis=0, return_index=True, return_inverse=True)
        order = np.argsort(first, kind='stable')
        order = order[unique_rows[order].any(axis=1)]
        relabel = np.zeros(len(unique_rows), dtype=np.int64)
        relabel[order] = np.arange(1, order.size + 1)
        ids = relabel[inverse.reshape(-1)]
        ranks.append(RankClasses(first_index=first[order], children=unique_rows[order]))

    return ranks


def factor_sets(lang: BlockLanguage) -> FactorSets:
    classes = classify_factors(lang)
    per_rank = tuple(
        tuple(lang.bits.slice(int(j) * lang.k**rank, lang.k**rank) for j in rank_classes.first_index)
        for rank, rank_classes in enumerate(classes)
    )
    children = tuple(
        tuple(tuple(int(block) - 1 if block else ZERO_BLOCK for block in row) for row in rank_classes.children)
        for rank_classes in classes
    )
    return FactorSets(
        alphabet=lang.alphabet,
        ell=lang.ell,
        per_rank=per_rank,
        first_index=tuple(tuple(int(j) for j in rank_classes.first_index) for rank_classes in classes),
        children=children,
    )
