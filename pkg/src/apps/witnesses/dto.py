from dataclasses import dataclass


@dataclass(frozen=True)
class BoundParams:
    """Shape of the largest minimal DFA for a block of length `ell` over `k` symbols.

    `width_caps` lists min(2^(k^i) - 1, k^(ell - i)) from rank ell down to rank 0, matching WidthProfile order.
    """

    k: int
    ell: int
    r: int
    x: int
    r_kl: int
    t: int
    max_dsc: int
    width_caps: tuple[int, ...]

    def __post_init__(self):
        self._validate_x()
        self._validate_caps()

    def _validate_x(self):
        if self.x not in (-1, 0, 1):
            raise ValueError(f'Offset {self.x} of r from floor(log_k ell) + 1 must be in [-1, 1]')

    def _validate_caps(self):
        if len(self.width_caps) != self.ell + 1:
            raise ValueError(f'Expected {self.ell + 1} width caps, got {len(self.width_caps)}')

    def width_cap(self, rank: int) -> int:
        return self.width_caps[self.ell - rank]
