"""Descent machinery for the irrationality of square roots.

A pair ``(H, S)`` stands for a would-be rational ``H/S = sqrt(2)``; its
defect ``H^2 - 2 S^2`` vanishes exactly when the pair would be a solution.
The descent step maps an even-``H`` pair to ``(S, H/2)`` and sends the
defect ``k`` to ``-k/2``, so a defect-0 pair would descend forever.  The
exhaustive search shows directly that defect 0 never occurs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, FalsificationError, InapplicableStepError
from .numeric import QuadValue, is_square, isqrt, quad_sign

DEFAULT_BOUND = 10_000

NARRATION_TWO = (
    "H^2 = 2 S^2 assumed",
    "H even by parity lemma",
    "descend to (S, H/2)",
    "contradicts lowest terms",
)


def parity_lemma(h: int) -> tuple[bool, bool]:
    """Return (h is even, h^2 is even); the lemma says they agree."""
    if h < 1:
        raise DomainError("parity lemma is stated for positive integers")
    return h % 2 == 0, (h * h) % 2 == 0


@dataclass(frozen=True)
class DescentPair:
    H: int
    S: int

    def __post_init__(self):
        if self.H < 1 or self.S < 1:
            raise DomainError(f"descent pair needs positive entries, got ({self.H}, {self.S})")

    @property
    def defect(self) -> int:
        return defect(self.H, self.S)


def defect(H: int, S: int, n: int = 2) -> int:
    return H * H - n * S * S


def descent_step(pair: DescentPair) -> DescentPair:
    if pair.H % 2:
        raise InapplicableStepError(pair, pair.H * pair.H)
    return DescentPair(pair.S, pair.H // 2)


@dataclass(frozen=True)
class SearchReport:
    limit: int
    n: int
    min_defect: int
    witness: DescentPair
    largest_witness: DescentPair
    pairs_scanned: int
    zero_defect_pairs: int = 0


def _scan_rows(h_lo: int, h_hi: int, n: int):
    """Scan 1 <= S < H for H in [h_lo, h_hi]."""
    best = None
    largest = None
    scanned = 0
    zeros = []
    use_numpy = n * h_hi * h_hi < 2**62
    for H in range(h_lo, h_hi + 1):
        if use_numpy:
            s = np.arange(1, H, dtype=np.int64)
            d = np.abs(H * H - n * s * s)
            i = int(np.argmin(d))
            dmin, smin = int(d[i]), i + 1
            if dmin == 0:
                zeros.extend((H, int(x) + 1) for x in np.flatnonzero(d == 0))
        else:
            dmin, smin = None, None
            for S in range(1, H):
                v = abs(H * H - n * S * S)
                if v == 0:
                    zeros.append((H, S))
                if dmin is None or v < dmin:
                    dmin, smin = v, S
        scanned += H - 1
        key = (dmin, H, smin)
        if best is None or key < best:
            best = key
        # largest H achieving the minimum: compare on (|d|, -H)
        if largest is None or (dmin, -H) < (largest[0], -largest[1]):
            largest = key
    return best, largest, scanned, zeros


def _merge(parts):
    best = min(p[0] for p in parts)
    largest = min((p[1] for p in parts), key=lambda k: (k[0], -k[1]))
    scanned = sum(p[2] for p in parts)
    zeros = [z for p in parts for z in p[3]]
    return best, largest, scanned, zeros


def no_solution_search(limit: int, n: int = 2, workers: int = 1) -> SearchReport:
    """Scan every pair ``1 <= S < H <= limit`` for ``H^2 - n S^2``.

    Reports the smallest nonzero ``|defect|`` with two witnesses: the
    minimum by ``(|defect|, H, S)`` and the achiever with the largest ``H``.
    Any pair of defect zero raises FalsificationError.  With ``workers > 1``
    the rows are split across processes and merged deterministically, giving
    the same report as the sequential scan.
    """
    if limit < 2:
        raise DomainError("search limit must be at least 2")
    if n < 1 or is_square(n):
        raise DomainError(f"search needs a non-square n, got {n}")
    if workers <= 1:
        parts = [_scan_rows(2, limit, n)]
    else:
        bounds = _partition(2, limit, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_rows, [b[0] for b in bounds], [b[1] for b in bounds], [n] * len(bounds)))
    best, largest, scanned, zeros = _merge(parts)
    if zeros:
        raise FalsificationError(f"H^2 = {n} S^2 solved by {zeros[:5]}")
    return SearchReport(
        limit=limit,
        n=n,
        min_defect=best[0],
        witness=DescentPair(best[1], best[2]),
        largest_witness=DescentPair(largest[1], largest[2]),
        pairs_scanned=scanned,
    )


def _partition(lo: int, hi: int, k: int) -> list[tuple[int, int]]:
    # rows grow linearly, so cut at equal cumulative work (~H^2)
    total = hi * hi - lo * lo
    cuts = [lo]
    for j in range(1, k):
        cuts.append(max(cuts[-1], isqrt(lo * lo + total * j // k)))
    cuts.append(hi + 1)
    return [(a, b - 1) for a, b in zip(cuts, cuts[1:]) if b > a]


@dataclass(frozen=True)
class IrrationalityCertificate:
    n: int
    verdict: str
    root: int | None = None
    exhaustive_bound: int | None = None
    min_defect: int | None = None
    witness: DescentPair | None = None
    narration: tuple[str, ...] = ()

    def __post_init__(self):
        if self.verdict == "rational":
            if self.root is None or self.root * self.root != self.n:
                raise DomainError("rational verdict needs a root r with r*r = n")
        elif self.verdict == "irrational":
            if not self.exhaustive_bound or self.exhaustive_bound < 1:
                raise DomainError("irrational verdict needs an exhaustive bound >= 1")
            if self.witness is None or defect(self.witness.H, self.witness.S, self.n) == 0:
                raise DomainError("irrational verdict needs a nonzero-defect witness")
        else:
            raise DomainError(f"unknown verdict {self.verdict!r}")

    @property
    def is_rational(self) -> bool:
        return self.verdict == "rational"

    def to_dict(self) -> dict:
        if self.is_rational:
            return {"n": self.n, "verdict": "rational", "root": self.root}
        return {
            "n": self.n,
            "verdict": "irrational",
            "exhaustive_bound": self.exhaustive_bound,
            "min_defect": self.min_defect,
            "witness": {"H": self.witness.H, "S": self.witness.S},
            "narration": list(self.narration),
        }


def _narration(n: int) -> tuple[str, ...]:
    if n == 2:
        return NARRATION_TWO
    r = isqrt(n)
    return (
        f"H^2 = {n} S^2 assumed with gcd(H, S) = 1",
        "S divides H^2 and is coprime to H, so S = 1",
        f"then H^2 = {n}",
        f"contradicts {r}^2 < {n} < {r + 1}^2",
    )


def decide_sqrt_rational(n: int, bound: int = DEFAULT_BOUND) -> IrrationalityCertificate:
    """Decide whether ``sqrt(n)`` is rational and package the evidence.

    Perfect squares get their root.  Anything else gets the lowest-terms
    narration (the parity descent for n = 2) plus an exhaustive scan up to
    ``bound``; the witness is the minimal-defect pair with the largest H.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    r = isqrt(n)
    if r * r == n:
        return IrrationalityCertificate(n, "rational", root=r)
    report = no_solution_search(max(bound, 2), n)
    return IrrationalityCertificate(
        n,
        "irrational",
        exhaustive_bound=report.limit,
        min_defect=report.min_defect,
        witness=report.largest_witness,
        narration=_narration(n),
    )


def irrationality_gap(p: int, q: int) -> Fraction:
    """Lower bound ``1/(q(p + 2q))`` on ``|sqrt(2) - p/q|``.

    From ``|p^2 - 2q^2| >= 1`` and ``p + q*sqrt(2) < p + 2q``.
    """
    if p < 1 or q < 1:
        raise DomainError("p and q must be positive integers")
    return Fraction(1, q * (p + 2 * q))


def gap_margin(p: int, q: int) -> QuadValue:
    """``|sqrt(2) - p/q| - irrationality_gap(p, q)`` as an exact value."""
    diff = QuadValue(Fraction(-p, q), 1, 2)
    return abs(diff) - irrationality_gap(p, q)


def gap_holds(p: int, q: int) -> bool:
    return quad_sign(gap_margin(p, q)) >= 0


def shrinkage_holds(s) -> bool:
    """For a side ``s > 0``: ``s < s*sqrt(2)`` and ``s*sqrt(2)/2 < s``."""
    h = QuadValue(0, s, 2)
    return quad_sign(h - s) == 1 and quad_sign(s - h / 2) == 1
