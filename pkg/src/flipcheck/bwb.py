"""Borel-Weil-Bott cohomology oracle for Gr(2, N).

``cohomology`` computes H^bullet(Gr(2,N), Sigma^{a,b} U^vee) exactly via the
dotted Weyl-group action: pad the weight to lambda = (a, b, 0, ..., 0), add
rho = (N-1, ..., 1, 0), kill anything with a repeated entry, otherwise sort
and count inversions.  The answer is concentrated in the single degree given
by the inversion count, with dimension given by the Weyl dimension formula.

All arithmetic is Python-int exact; dimensions grow combinatorially in N and
must never wrap.  Results are memoized by (N, a, b); the cache is
observationally pure and safe under concurrent use (idempotent writes).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .weights import GrSum, Weight, hom_object


@dataclass(frozen=True)
class GradedDims:
    """Finite map degree -> positive dimension; the empty map is zero."""

    dims: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def of(entries: Iterable[tuple[int, int]]) -> "GradedDims":
        acc: dict[int, int] = {}
        for deg, d in entries:
            if d < 0:
                raise ValueError("negative dimension")
            if d:
                acc[deg] = acc.get(deg, 0) + d
        return GradedDims(tuple(sorted(acc.items())))

    def __bool__(self) -> bool:
        return bool(self.dims)

    def __getitem__(self, deg: int) -> int:
        for d, v in self.dims:
            if d == deg:
                return v
        return 0

    def __add__(self, other: "GradedDims") -> "GradedDims":
        return GradedDims.of(self.dims + other.dims)

    def shifted(self, k: int) -> "GradedDims":
        """Degrees raised by k (homological shift [-k])."""
        return GradedDims(tuple((d + k, v) for d, v in self.dims))

    def euler(self) -> int:
        return sum(v if d % 2 == 0 else -v for d, v in self.dims)

    def total(self) -> int:
        return sum(v for _, v in self.dims)

    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.dims)


ZERO = GradedDims()


def weyl_dim(nu: Sequence[int]) -> int:
    """Dimension of the irreducible GL(N) representation of highest weight nu.

    prod_{i<j} (nu_i - nu_j + j - i) / (j - i), evaluated exactly: the
    numerator is always divisible by the denominator.
    """
    if any(nu[i] < nu[i + 1] for i in range(len(nu) - 1)):
        raise ValueError(f"weight {tuple(nu)} is not nonincreasing")
    num = 1
    den = 1
    n = len(nu)
    for i in range(n):
        for j in range(i + 1, n):
            num *= nu[i] - nu[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("Weyl dimension formula produced a non-integer")
    return q


_cohomology_cache: dict[tuple[int, int, int], GradedDims] = {}


def cohomology(w: Weight, n_amb: int) -> GradedDims:
    """H^bullet(Gr(2, N), Sigma^{a,b} U^vee) for N = n_amb >= 3.

    Zero iff lambda + rho has a repeated entry; in particular zero on the
    bands 1-N <= a <= -2 and 2-N <= b <= -1.  Otherwise concentrated in the
    degree equal to the inversion count of lambda + rho.
    """
    if n_amb < 3:
        raise ValueError("need N >= 3")
    key = (n_amb, w.a, w.b)
    hit = _cohomology_cache.get(key)
    if hit is not None:
        return hit
    rho = list(range(n_amb - 1, -1, -1))
    mu = [w.a + rho[0], w.b + rho[1]] + rho[2:]
    if len(set(mu)) < n_amb:
        result = ZERO
    else:
        inversions = sum(
            1 for i in range(n_amb) for j in range(i + 1, n_amb) if mu[i] < mu[j]
        )
        nu = [x - r for x, r in zip(sorted(mu, reverse=True), rho)]
        result = GradedDims.of([(inversions, weyl_dim(nu))])
    _cohomology_cache[key] = result
    return result


def sum_cohomology(s: GrSum, n_amb: int) -> GradedDims:
    """Cohomology of a graded sum; a term Sigma^w[k] lands in degrees j - k."""
    out: list[tuple[int, int]] = []
    for w, shift, mult in s:
        for deg, dim in cohomology(w, n_amb).dims:
            out.append((deg - shift, dim * mult))
    return GradedDims.of(out)


def gr_ext(a: GrSum, b: GrSum, n_amb: int) -> GradedDims:
    """Ext^bullet_{Gr(2,N)}(a, b) = H^bullet of the Hom object."""
    return sum_cohomology(hom_object(a, b), n_amb)


def gr_euler(a: GrSum, b: GrSum, n_amb: int) -> int:
    """Euler pairing chi(a, b) on Gr(2, N)."""
    return gr_ext(a, b, n_amb).euler()
