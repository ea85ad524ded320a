from itertools import product
from typing import Optional, Sequence

from loguru import logger

from src.apps.bitmaps.bits import Bitmap
from src.apps.synthesis.dto import Cover
from src.apps.synthesis.errors import CoverBudgetExceededError
from src.core.config import settings


def _blocks(value: int, k: int, width: int) -> list[int]:
    mask = (1 << width) - 1
    return [(value >> (width * (k - 1 - position))) & mask for position in range(k)]


def _compose(blocks: Sequence[int], width: int) -> int:
    value = 0
    for block in blocks:
        value = (value << width) | block
    return value


def _bit_positions(value: int) -> list[int]:
    positions = []
    while value:
        low = value & -value
        positions.append(low.bit_length() - 1)
        value ^= low
    return positions


class _CoverSearch:
    """Minimum set cover where an element is a (target, one-bit) pair.

    A candidate covers the one-bits of every target it lies below, so a set of candidates is a legal
    cover iff it covers every element.
    """

    def __init__(self, targets: list[int], candidates: list[int], budget: int):
        self._targets = targets
        self._candidates = candidates
        self._budget = budget
        self.nodes = 0

        offsets = []
        self.universe = 0
        element = 0
        self._positions: list[list[int]] = []
        for target in targets:
            positions = _bit_positions(target)
            self._positions.append(positions)
            offsets.append(element)
            element += len(positions)
        self.universe = (1 << element) - 1

        self.masks = [self._mask_of(candidate, offsets) for candidate in candidates]

    def _mask_of(self, candidate: int, offsets: list[int]) -> int:
        mask = 0
        for target, offset, positions in zip(self._targets, offsets, self._positions):
            if candidate & ~target:
                continue
            for number, position in enumerate(positions):
                if candidate >> position & 1:
                    mask |= 1 << (offset + number)
        return mask

    def forced(self) -> list[int]:
        chosen = set()
        remaining = self.universe
        while remaining:
            low = remaining & -remaining
            covering = [index for index, mask in enumerate(self.masks) if mask & low]
            if len(covering) == 1:
                chosen.add(covering[0])
            remaining ^= low
        return sorted(chosen)

    def greedy(self, remaining: int) -> list[int]:
        chosen = []
        while remaining:
            best = max(range(len(self.masks)), key=lambda index: ((self.masks[index] & remaining).bit_count(), -index))
            chosen.append(best)
            remaining &= ~self.masks[best]
        return sorted(chosen)

    def lower_bound(self, remaining: int) -> int:
        # elements no single candidate can cover together
        bound = 0
        blocked = 0
        while remaining:
            low = remaining & -remaining
            remaining ^= low
            if low & blocked:
                continue
            bound += 1
            for mask in self.masks:
                if mask & low:
                    blocked |= mask
        return bound

    def least_of_size(self, remaining: int, size: int, pool: list[int]) -> Optional[list[int]]:
        last_cover: dict[int, int] = {}
        for position, index in enumerate(pool):
            mask = self.masks[index] & remaining
            while mask:
                low = mask & -mask
                last_cover[low] = position
                mask ^= low
        widest = max(((self.masks[index] & remaining).bit_count() for index in pool), default=0)

        def search(start: int, left: int, picks: int, chosen: list[int]) -> Optional[list[int]]:
            self.nodes += 1
            if self.nodes > self._budget:
                raise CoverBudgetExceededError(f'Cover search exceeded {self._budget} nodes')
            if not left:
                return chosen
            if not picks or left.bit_count() > picks * widest:
                return None
            lowest = left & -left
            for position in range(start, last_cover.get(lowest, -1) + 1):
                index = pool[position]
                if not self.masks[index] & left:
                    continue
                found = search(position + 1, left & ~self.masks[index], picks - 1, chosen + [index])
                if found is not None:
                    return found
            return None

        return search(0, remaining, size, [])


def _candidates(targets: list[int], parts: list[int], k: int, width: int, budget: int) -> list[int]:
    options = [0] + parts
    found: set[int] = set()
    steps = 0
    for target in targets:
        per_block = [[part for part in options if not part & ~block] for block in _blocks(target, k, width)]
        for blocks in product(*per_block):
            steps += 1
            if steps > budget:
                raise CoverBudgetExceededError(f'Candidate enumeration exceeded {budget} steps')
            value = _compose(blocks, width)
            if value:
                found.add(value)
    return sorted(found)


def _rho(targets: list[int], members: list[int]) -> tuple[tuple[int, ...], ...]:
    rho = []
    for target in targets:
        below = [position for position, member in enumerate(members) if not member & ~target]
        for position in list(below):
            rest = 0
            for other in below:
                if other != position:
                    rest |= members[other]
            if rest == target:
                below.remove(position)
        rho.append(tuple(below))
    return tuple(rho)


def _build_cover(rank: int, targets: Sequence[Bitmap], chosen: list[int], exact: bool) -> Cover:
    length = targets[0].length
    target_values = [target.as_int() for target in targets]
    members = sorted(set(chosen))
    return Cover(
        rank=rank,
        targets=tuple(targets),
        members=tuple(Bitmap.from_int(member, length) for member in members),
        rho=_rho(target_values, members),
        exact=exact,
    )


def minimal_cover(
    targets: Sequence[Bitmap],
    parts: Sequence[Bitmap],
    rank: int = 0,
    budget: Optional[int] = None,
) -> Cover:
    """Smallest set of k-block compositions over `parts` and zero whose disjunctions rebuild every target.

    Among covers of minimum size the lexicographically least member list wins. When the search runs out
    of budget, CoverBudgetExceededError carries the best cover found so far in `greedy_cover`.
    """
    if not targets:
        raise ValueError('Cannot cover an empty target set')
    budget = budget or settings.COVER_NODE_BUDGET
    length = targets[0].length
    width = parts[0].length if parts else length
    k = length // width
    target_values = [target.as_int() for target in targets]

    try:
        candidates = _candidates(target_values, [part.as_int() for part in parts], k, width, budget)
    except CoverBudgetExceededError as exc:
        logger.warning('Cover candidates at rank {} exceed the budget; keeping the {} targets', rank, len(targets))
        raise CoverBudgetExceededError(str(exc), greedy_cover=_build_cover(rank, targets, target_values, False))

    search = _CoverSearch(target_values, candidates, budget)
    forced = search.forced()
    covered = 0
    for index in forced:
        covered |= search.masks[index]
    remaining = search.universe & ~covered
    if not remaining:
        return _build_cover(rank, targets, [candidates[index] for index in forced], exact=True)

    fallback = [candidates[index] for index in forced + search.greedy(remaining)]
    if len(fallback) > len(target_values):
        fallback = target_values

    pool = [index for index in range(len(candidates)) if index not in forced and search.masks[index] & remaining]
    try:
        for size in range(max(search.lower_bound(remaining), 1), len(fallback) - len(forced) + 1):
            found = search.least_of_size(remaining, size, pool)
            if found is not None:
                return _build_cover(rank, targets, [candidates[index] for index in forced + found], exact=True)
    except CoverBudgetExceededError as exc:
        logger.warning('Cover search at rank {} hit its budget; keeping a cover of size {}', rank, len(fallback))
        raise CoverBudgetExceededError(str(exc), greedy_cover=_build_cover(rank, targets, fallback, False)) from None

    return _build_cover(rank, targets, fallback, exact=True)
