from typing import Optional

import numpy as np
from loguru import logger

from src.apps.automata.dto import RankedDFA, RankedNFA
from src.apps.automata.utils import canonical_dfa, canonical_nfa
from src.apps.bitmaps.dto import BlockLanguage
from src.apps.bitmaps.errors import EmptyLanguageError
from src.apps.bitmaps.factors import classify_factors, factor_sets
from src.apps.synthesis.covers import minimal_cover
from src.apps.synthesis.dto import Cover, SynthesizedNFA
from src.apps.synthesis.errors import CoverBudgetExceededError


def _require_nonempty(lang: BlockLanguage):
    if lang.is_empty:
        raise EmptyLanguageError(f'The block language over k={lang.k}, ell={lang.ell} has no words')


def min_dfa_from_bitmap(lang: BlockLanguage) -> RankedDFA:
    """Minimal DFA whose rank-i states are the distinct nonzero factors of length k^i.

    A factor steps on symbol j to its j-th block, or to Omega when that block is all zero.
    """
    _require_nonempty(lang)
    classes = classify_factors(lang)
    widths = [rank_classes.first_index.size for rank_classes in classes]

    # states are numbered from rank ell down to rank 0, Omega last
    offsets = {}
    position = 0
    for rank in range(lang.ell, -1, -1):
        offsets[rank] = position
        position += widths[rank]
    dead = position

    delta: list[tuple[int, ...]] = []
    ranks: list[Optional[int]] = []
    for rank in range(lang.ell, 0, -1):
        children = classes[rank].children
        targets = np.where(children == 0, dead, offsets[rank - 1] + children - 1)
        delta.extend(tuple(int(target) for target in row) for row in targets)
        ranks.extend([rank] * widths[rank])
    delta.append((dead,) * lang.k)
    ranks.append(0)
    delta.append((dead,) * lang.k)
    ranks.append(None)

    logger.debug('Synthesized a DFA with {} states for k={}, ell={}', len(ranks), lang.k, lang.ell)
    return canonical_dfa(
        RankedDFA(
            alphabet=lang.alphabet,
            ell=lang.ell,
            ranks=tuple(ranks),
            initial=offsets[lang.ell],
            final=offsets[0],
            dead=dead,
            delta=tuple(delta),
        )
    )


def _trivial_cover(rank: int, targets) -> Cover:
    return Cover(rank=rank, targets=tuple(targets), members=tuple(targets), rho=((0,),), exact=True)


def synthesize_nfa(lang: BlockLanguage, budget: Optional[int] = None, allow_greedy: bool = False) -> SynthesizedNFA:
    """NFA whose rank-i states form a minimal cover of the rank-i factors.

    A member c of C_i reads symbol j into the cover members that rebuild its j-th block. With `allow_greedy`
    a budget overrun keeps the best cover found so far and marks the result inexact.
    """
    _require_nonempty(lang)
    sets = factor_sets(lang)
    ell = lang.ell

    covers: dict[int, Cover] = {0: _trivial_cover(0, sets[0]), ell: _trivial_cover(ell, sets[ell])}
    exact = True
    for rank in range(1, ell):
        try:
            covers[rank] = minimal_cover(sets[rank], sets[rank - 1], rank=rank, budget=budget)
        except CoverBudgetExceededError as exc:
            if not allow_greedy or exc.greedy_cover is None:
                raise
            covers[rank] = exc.greedy_cover
            exact = False

    ids: dict[tuple[int, int], int] = {}
    ranks: list[int] = []
    for rank in range(ell, -1, -1):
        for member in range(len(covers[rank].members)):
            ids[(rank, member)] = len(ranks)
            ranks.append(rank)

    k = lang.k
    delta: list[tuple[frozenset[int], ...]] = []
    for rank in range(ell, -1, -1):
        if rank == 0:
            delta.append((frozenset(),) * k)
            continue
        below = covers[rank - 1]
        target_of = {target: position for position, target in enumerate(below.targets)}
        width = k ** (rank - 1)
        for member in covers[rank].members:
            row = []
            for symbol in range(k):
                block = member.slice(symbol * width, width)
                if block.is_zero():
                    row.append(frozenset())
                    continue
                row.append(frozenset(ids[(rank - 1, used)] for used in below.rho[target_of[block]]))
            delta.append(tuple(row))

    nfa = canonical_nfa(
        RankedNFA(
            alphabet=lang.alphabet,
            ell=ell,
            ranks=tuple(ranks),
            initial=ids[(ell, 0)],
            final=ids[(0, 0)],
            delta=tuple(delta),
        )
    )
    logger.debug('Synthesized an NFA with {} states for k={}, ell={} (exact={})', nfa.size, k, ell, exact)
    return SynthesizedNFA(nfa=nfa, covers=tuple(covers[rank] for rank in range(ell + 1)), exact=exact)


def min_nfa_from_bitmap(lang: BlockLanguage, budget: Optional[int] = None) -> RankedNFA:
    return synthesize_nfa(lang, budget=budget).nfa
