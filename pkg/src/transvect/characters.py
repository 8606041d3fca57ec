"""SL2 plethysm by weight counting, Grothendieck-ring bookkeeping for the
double-hyperplane locus, and Schur-module dimensions by hook content.

For a two-dimensional space, the r-th symmetric power of the weight set
{d, d-2, ..., -d} determines the character of S_r(S_d) completely, and a
symmetric weight vector decomposes into irreducibles by successive
differences.  The graded piece of the locus ideal is the formal difference

    [ideal piece] = [S_r(S_d)] - sum_p [S_(rd-2p, 2p)],

which must be a genuine (nonnegative) decomposition; a negative
multiplicity fails loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

__all__ = [
    "WeightVector",
    "IrrDecomp",
    "partition",
    "conjugate",
    "plethysm_weights",
    "decompose",
    "irreducible_weights",
    "locus_char",
    "ideal_char",
    "schur_dim",
    "ternary_quartic_dim_check",
]


@dataclass(frozen=True)
class WeightVector:
    """Multiplicity function of integer torus weights; symmetric support."""

    mult: Mapping[int, int]

    def __post_init__(self):
        clean = {k: int(m) for k, m in self.mult.items() if m}
        if any(m < 0 for m in clean.values()):
            raise ValueError("weight multiplicities must be nonnegative")
        if any(clean.get(-k, 0) != m for k, m in clean.items()):
            raise ValueError("weight vector is not symmetric under k <-> -k")
        object.__setattr__(self, "mult", clean)

    def __getitem__(self, k: int) -> int:
        return self.mult.get(k, 0)

    def total(self) -> int:
        return sum(self.mult.values())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightVector) and self.mult == other.mult

    def __hash__(self):
        return hash(tuple(sorted(self.mult.items())))


@dataclass(frozen=True)
class IrrDecomp:
    """Multiset of SL2 irreducibles S_m; multiplicities stay nonnegative."""

    mult: Mapping[int, int]

    def __post_init__(self):
        clean = {int(m): int(c) for m, c in self.mult.items() if c}
        if any(m < 0 for m in clean):
            raise ValueError("irreducible labels must be nonnegative")
        if any(c < 0 for c in clean.values()):
            raise ValueError(f"negative multiplicity in decomposition: {clean}")
        object.__setattr__(self, "mult", clean)

    def __getitem__(self, m: int) -> int:
        return self.mult.get(m, 0)

    def __sub__(self, other: "IrrDecomp") -> "IrrDecomp":
        out = dict(self.mult)
        for m, c in other.mult.items():
            out[m] = out.get(m, 0) - c
        return IrrDecomp(out)  # negative values fail in the constructor

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IrrDecomp) and self.mult == other.mult

    def __hash__(self):
        return hash(tuple(sorted(self.mult.items())))

    def is_empty(self) -> bool:
        return not self.mult

    def dim(self) -> int:
        return sum((m + 1) * c for m, c in self.mult.items())

    def to_weights(self) -> WeightVector:
        w: dict[int, int] = {}
        for m, c in self.mult.items():
            for k in range(-m, m + 1, 2):
                w[k] = w.get(k, 0) + c
        return WeightVector(w)

    def to_record(self) -> list[list[int]]:
        return [[m, c] for m, c in sorted(self.mult.items(), reverse=True)]

    def __str__(self) -> str:
        if not self.mult:
            return "0"
        chunks = []
        for m, c in sorted(self.mult.items(), reverse=True):
            chunks.append(f"S{m}" if c == 1 else f"{c}*S{m}")
        return " ".join(chunks)


def partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a weakly decreasing tuple without trailing zeros."""
    lam = tuple(int(x) for x in parts)
    if any(a < 0 for a in lam):
        raise ValueError("partition parts must be nonnegative")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a > j) for j in range(lam[0]))


def plethysm_weights(r: int, d: int) -> WeightVector:
    """Weight multiplicities of S_r(S_d) for a 2-dimensional space: sums of
    size-r multisets drawn from {d, d-2, ..., -d}."""
    if r < 0 or d < 0:
        raise ValueError("r and d must be nonnegative")
    # counts[(picked, weight)] over values processed so far, multisets only:
    # process values in order, allowing any number of copies of each
    counts: dict[tuple[int, int], int] = {(0, 0): 1}
    for value in range(d, -d - 1, -2):
        new: dict[tuple[int, int], int] = {}
        for (picked, wsum), ways in counts.items():
            copies = 0
            while picked + copies <= r:
                key = (picked + copies, wsum + copies * value)
                new[key] = new.get(key, 0) + ways
                copies += 1
        counts = new
    out: dict[int, int] = {}
    for (picked, wsum), ways in counts.items():
        if picked == r:
            out[wsum] = out.get(wsum, 0) + ways
    return WeightVector(out)


def irreducible_weights(m: int) -> WeightVector:
    """Character of the single irreducible S_m."""
    return IrrDecomp({m: 1}).to_weights()


def decompose(w: WeightVector) -> IrrDecomp:
    """Peel a symmetric weight vector into irreducibles: the multiplicity of
    S_m is w(m) - w(m+2).  Fails if the input is not a genuine character."""
    out: dict[int, int] = {}
    top = max(w.mult, default=-1)
    for m in range(0, top + 1):
        c = w[m] - w[m + 2]
        if c:
            out[m] = c
    dec = IrrDecomp(out)  # negative multiplicity fails here
    if dec.to_weights() != w:
        raise ValueError("weight vector does not re-sum to its decomposition")
    return dec


def locus_char(r: int, e: int) -> IrrDecomp:
    """Character of the degree-r functions on the locus: the symmetric
    square of S_(re), which restricts to sum of S_(2re-4p) over
    0 <= p <= floor(re/2), each once."""
    if r < 1 or e < 1:
        raise ValueError("need r >= 1 and e >= 1")
    m = r * e
    return IrrDecomp({2 * m - 4 * p: 1 for p in range(m // 2 + 1)})


def ideal_char(r: int, d: int) -> IrrDecomp:
    """Graded piece of the locus ideal as a formal difference of
    characters; raises if any multiplicity would go negative."""
    if d % 2:
        raise ValueError("d must be even")
    if r == 0:
        return IrrDecomp({})
    full = decompose(plethysm_weights(r, d))
    return full - locus_char(r, d // 2)


def schur_dim(lam: Iterable[int], n: int) -> int:
    """Dimension of the Schur module for an n-dimensional space, by the
    hook content formula; zero when the partition has more than n parts."""
    lam = partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    if len(lam) > n:
        return 0
    conj = conjugate(lam)
    num = 1
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= row - j + conj[j] - i - 1
    if num % den:
        raise RuntimeError(f"hook content gave a non-integer for {lam}, n={n}")
    return num // den


def ternary_quartic_dim_check() -> bool:
    """Dimension bookkeeping for the cubic piece over ternary quartics:

    dim S_3(S_4) over 3 variables (= C(17,3) = 680) must split as the
    symmetric-square target (406, also dim S_2(S_6) = C(29,2)) plus the
    five listed ideal modules (274); every dimension is computed by hook
    content and cross-checked against multiset counts.
    """
    dim_s4 = comb(4 + 2, 2)  # 15 quartic monomials in 3 variables
    lhs = comb(dim_s4 + 3 - 1, 3)

    target = sum(schur_dim((12 - 2 * p, 2 * p), 3) for p in range(4))
    dim_s6 = comb(6 + 2, 2)
    target_alt = comb(dim_s6 + 1, 2)

    ideal_modules = [(9, 3), (6, 0), (6, 3), (4, 2), (0, 0)]
    ideal_total = sum(schur_dim(lam, 3) for lam in ideal_modules)

    return (
        lhs == 680
        and target == 406
        and target == target_alt
        and ideal_total == 274
        and lhs == target + ideal_total
    )
