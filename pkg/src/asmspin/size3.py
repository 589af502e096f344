"""Bijective enumeration machinery special to 3 x 3 matrices.

Weak compositions of the line sum over the six permutation matrices
(plus, for the signed case, the unique extra standard matrix with a -1
at the center) parametrize the semimagic and signed families exactly,
once one alternative of a short guard chain pins down a canonical
composition for each matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import AsmMatrix, is_semimagic
from .errors import BadComposition, BadShape, BadSize

SIGMAS = ("123", "132", "213", "231", "312", "321")

# (P_sigma)_{ij} = 1 iff i == sigma_j: column j holds its 1 in row sigma_j.
PERMUTATION_MATRICES = {
    s: tuple(
        tuple(1 if int(s[j]) == i else 0 for j in range(3)) for i in range(1, 4)
    )
    for s in SIGMAS
}
CENTER_MATRIX = ((0, 1, 0), (1, -1, 1), (0, 1, 0))


def _alternative6(a) -> int:
    """Index (1-3) of the alternative satisfied by a 6-tuple, else 0."""
    a123, a132, a213, a231, a312, a321 = a
    if a132 == 0:
        return 1
    if a321 == 0:
        return 2
    if a213 == 0:
        return 3
    return 0


def _alternative7(a) -> int:
    """Index (1-4) of the alternative satisfied by a 7-tuple, else 0."""
    a123, a132, a213, a231, a312, a321, a0 = a
    if a132 == 0 and a0 == 0:
        return 1
    if a321 == 0 and a0 == 0 and a132 != 0:
        return 2
    if a213 == 0 and a0 == 0 and a132 != 0 and a321 != 0:
        return 3
    if a123 == 0 and a321 == 0 and a0 != 0:
        return 4
    return 0


@dataclass(frozen=True)
class Composition6:
    """Weak composition of r over the six permutations, one alternative:
    a_132 = 0, or (a_321 = 0, a_132 != 0), or (a_213 = 0, a_132, a_321 != 0).
    """

    r: int
    a: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) != 6 or any(x < 0 for x in self.a):
            raise BadComposition(f"{self.a} is not a 6-tuple of nonnegatives")
        if sum(self.a) != self.r:
            raise BadComposition(f"{self.a} sums to {sum(self.a)}, expected {self.r}")
        if _alternative6(self.a) == 0:
            raise BadComposition(f"{self.a} satisfies no admissible alternative")

    @property
    def alternative(self) -> int:
        return _alternative6(self.a)


@dataclass(frozen=True)
class Composition7:
    """Weak composition of r over the six permutations and the center matrix."""

    r: int
    a: tuple[int, int, int, int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) != 7 or any(x < 0 for x in self.a):
            raise BadComposition(f"{self.a} is not a 7-tuple of nonnegatives")
        if sum(self.a) != self.r:
            raise BadComposition(f"{self.a} sums to {sum(self.a)}, expected {self.r}")
        if _alternative7(self.a) == 0:
            raise BadComposition(f"{self.a} satisfies no admissible alternative")

    @property
    def alternative(self) -> int:
        return _alternative7(self.a)


def _weak_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_compositions(r: int, which: str = "C"):
    """All members of the composition set, lexicographically.

    which = "C" gives 6-tuples, "Cprime" 7-tuples.
    """
    if r < 0:
        raise BadShape(f"r must be nonnegative, got {r}")
    if which == "C":
        return [
            Composition6(r, a)
            for a in _weak_compositions(r, 6)
            if _alternative6(a) != 0
        ]
    if which == "Cprime":
        return [
            Composition7(r, a)
            for a in _weak_compositions(r, 7)
            if _alternative7(a) != 0
        ]
    raise BadShape("which must be 'C' or 'Cprime'")


def composition_count(r: int, which: str = "C") -> int:
    """Closed form for the composition set sizes."""
    if which == "C":
        return math.comb(r + 4, 4) + math.comb(r + 3, 4) + math.comb(r + 2, 4)
    if which == "Cprime":
        return math.comb(r + 4, 4) + 2 * math.comb(r + 3, 4) + math.comb(r + 2, 4)
    raise BadShape("which must be 'C' or 'Cprime'")


def theta(a: Composition6) -> AsmMatrix:
    """Linear combination sum_sigma a_sigma P_sigma; lands in the semimagic set."""
    rows = [[0] * 3 for _ in range(3)]
    for coeff, s in zip(a.a, SIGMAS):
        mat = PERMUTATION_MATRICES[s]
        for i in range(3):
            for j in range(3):
                rows[i][j] += coeff * mat[i][j]
    return AsmMatrix(3, a.r, rows)


def theta_prime(a: Composition7) -> AsmMatrix:
    """As theta, plus a_0 copies of the center matrix."""
    rows = [[0] * 3 for _ in range(3)]
    mats = [PERMUTATION_MATRICES[s] for s in SIGMAS] + [CENTER_MATRIX]
    for coeff, mat in zip(a.a, mats):
        for i in range(3):
            for j in range(3):
                rows[i][j] += coeff * mat[i][j]
    return AsmMatrix(3, a.r, rows)


def theta_inverse(a: AsmMatrix) -> Composition6:
    """Canonical composition of a semimagic 3 x 3 matrix; inverts theta."""
    if a.n != 3:
        raise BadSize(f"defined only for n = 3, got n = {a.n}")
    if not is_semimagic(a):
        raise BadComposition("matrix has a negative entry, not semimagic")
    m = a.entries
    a11, a22, a33 = m[0][0], m[1][1], m[2][2]
    if a11 <= a22 and a11 <= a33:
        tup = (a11, 0, a33 - a11, m[2][1], m[1][2], a22 - a11)
    elif a22 < a11 and a22 <= a33:
        tup = (a22, a11 - a22, a33 - a22, m[0][2], m[2][0], 0)
    elif a33 < a11 and a33 < a22:
        tup = (a33, a11 - a33, 0, m[1][0], m[0][1], a22 - a33)
    else:
        raise AssertionError("guard chain must be a partition")
    return Composition6(a.r, tup)


def theta_prime_inverse(a: AsmMatrix) -> Composition7:
    """Canonical composition of any 3 x 3 member; inverts theta_prime."""
    if a.n != 3:
        raise BadSize(f"defined only for n = 3, got n = {a.n}")
    m = a.entries
    a11, a22, a33 = m[0][0], m[1][1], m[2][2]
    if a11 <= a22 and a11 <= a33:
        tup = (a11, 0, a33 - a11, m[2][1], m[1][2], a22 - a11, 0)
    elif 0 <= a22 < a11 and a22 <= a33:
        tup = (a22, a11 - a22, a33 - a22, m[0][2], m[2][0], 0, 0)
    elif a33 < a11 and a33 < a22:
        tup = (a33, a11 - a33, 0, m[1][0], m[0][1], a22 - a33, 0)
    elif a22 < 0:
        tup = (0, a11, a33, m[0][2], m[2][0], 0, -a22)
    else:
        raise AssertionError("guard chain must be a partition")
    return Composition7(a.r, tup)


def count_closed_form_3(r: int, family: str = "asm") -> int:
    """Binomial closed forms for the two size-3 counting sequences."""
    if r < 0:
        raise BadShape(f"r must be nonnegative, got {r}")
    if family == "asm":
        return math.comb(r + 2, 4) + 2 * math.comb(r + 3, 4) + math.comb(r + 4, 4)
    if family == "sms":
        return math.comb(r + 2, 4) + math.comb(r + 3, 4) + math.comb(r + 4, 4)
    raise BadShape("family must be 'asm' or 'sms'")
