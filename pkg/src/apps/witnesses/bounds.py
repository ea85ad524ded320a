from typing import Sequence

from src.apps.witnesses.dto import BoundParams
from src.apps.witnesses.errors import InvalidFamilyParamsError


def _below_mersenne(value: int, exponent: int) -> bool:
    # value <= 2^exponent - 1 without materializing 2^exponent
    return value.bit_length() <= exponent


def _width_cap(k: int, ell: int, rank: int) -> int:
    quotients = k ** (ell - rank)
    if _below_mersenne(quotients, k**rank):
        return quotients
    return 2 ** (k**rank) - 1


def _floor_log(k: int, value: int) -> int:
    exponent = 0
    while k ** (exponent + 1) <= value:
        exponent += 1
    return exponent


def bound_params(k: int, ell: int) -> BoundParams:
    """Rank split and size of a maximal minimal DFA.

    Ranks above r are bounded by the number of prefixes, ranks below r by the number of nonzero factors.
    """
    if k < 2 or ell < 1:
        raise InvalidFamilyParamsError(f'Bound parameters need k >= 2 and ell >= 1, got k={k}, ell={ell}')

    r = next(n for n in range(ell + 1) if _below_mersenne(k ** (ell - n), k**n))
    r_kl = r if k ** (ell - r) >= 2 ** (k ** (r - 1)) - 1 else r - 1
    t = max(k ** (ell - r), 2 ** (k ** (r - 1)) - 1)
    max_dsc = (k ** (ell - r + 1) - 1) // (k - 1) + sum(2 ** (k**i) - 1 for i in range(r)) + 1

    return BoundParams(
        k=k,
        ell=ell,
        r=r,
        x=r - _floor_log(k, ell) - 1,
        r_kl=r_kl,
        t=t,
        max_dsc=max_dsc,
        width_caps=tuple(_width_cap(k, ell, rank) for rank in range(ell, -1, -1)),
    )


def _rank_pairs(widths_a: Sequence[int], widths_b: Sequence[int]) -> list[tuple[int, int]]:
    if len(widths_a) != len(widths_b):
        raise ValueError(f'Width profiles of {len(widths_a)} and {len(widths_b)} ranks cannot be paired')
    return list(zip(widths_a, widths_b))


def intersection_dsc_bound(widths_a: Sequence[int], widths_b: Sequence[int]) -> int:
    return sum(m * n for m, n in _rank_pairs(widths_a, widths_b)) + 1


def intersection_nsc_bound(widths_a: Sequence[int], widths_b: Sequence[int]) -> int:
    return sum(m * n for m, n in _rank_pairs(widths_a, widths_b))


def union_dsc_bound(widths_a: Sequence[int], widths_b: Sequence[int]) -> int:
    # the initial rank, the final rank and Omega hold one state each
    inner = _rank_pairs(widths_a, widths_b)[1:-1]
    return sum(m * n + m + n for m, n in inner) + 3


def union_nsc_bound(m: int, n: int) -> int:
    return m + n - 2


def concat_dsc(m: int, n: int) -> int:
    return m + n - 2


def concat_nsc(m: int, n: int) -> int:
    return m + n - 1


def word_op_window(m: int, ell: int) -> tuple[int, int]:
    return m - (ell - 1), m + (ell - 1)


def complement_dsc_window(m: int, ell: int) -> tuple[int, int]:
    return word_op_window(m, ell)


def star_dsc(n: int) -> int:
    return n - 1


def star_nsc(m: int) -> int:
    return m - 1


def plus_dsc(n: int) -> int:
    return n


def plus_nsc(m: int) -> int:
    return m


def reversal_growth_bound(ell: int) -> int:
    return 2**6 * ell**2 + 2**3 * (ell**2 + ell)


def reversal_lower_bound(ell: int) -> int:
    return 2 ** (ell - bound_params(2, ell).r_kl)


def reversal_dsc_bound(k: int, ell: int) -> int:
    return bound_params(k, ell).max_dsc


def reversal_width_bound(ell: int) -> int:
    """Per-rank width cap of the reversed maximal-size witness."""
    return 2 ** (bound_params(2, ell).r_kl + 1)


def ko_dimension(m: int, k: int) -> int:
    """Largest d whose prohibited-symbol NFA, with (k - 1)d^2 + 2d states, fits in `m` states."""
    if k < 2:
        raise InvalidFamilyParamsError(f'The prohibited-symbol family needs k >= 2, got {k}')
    d = 0
    while (k - 1) * (d + 1) ** 2 + 2 * (d + 1) <= m:
        d += 1
    return d


def ko_states(k: int, d: int) -> int:
    return (k - 1) * d**2 + 2 * d
