"""Objects and Ext groups on E = Fl(1,2,N) and on the ambient total space X.

E is the P^1-bundle p2: P(U) -> Gr(2,N) with relative hyperplane class h
(pulled back from the P^{N-1} side).  An ``EObject`` is a formal sum of
``Sigma^{a,b} U^vee (x) O(d.h) [s]`` terms; H-twists are folded into the
weight so every object has a unique normal form.

Ext groups on E reduce to Gr(2,N) through the pushforward of powers of O(h)::

    Rp2* O(d.h) = S^d U^vee              d >= 0
                = 0                      d = -1
                = S^{-d-2} U (x) O(-H) [-1]   d <= -2

For pushforwards to X (total space of O(-H-h) over E, where E sits as the
exceptional divisor) the restriction triangle

    A(H+h)[1] -> Lj^* j_* A -> A

gives a two-term long exact sequence; ``x_ext`` reports the outcome as
Zero, Exact (connecting maps forced to vanish by degree support), or
Bounded (both contributions recorded, dimensions not resolved).

K-theory classes are fingerprinted by Euler pairing against the full
exceptional collection <p2^* T_i, p2^* T_i (x) O(h)> of D(E); the pairing
matrix is validated upper-unitriangular once per N.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .bwb import GradedDims, sum_cohomology
from .weights import GrSum, Weight, cg_tensor


@dataclass(frozen=True)
class EObject:
    """Formal sum of (weight, h-twist, shift, multiplicity) terms on E."""

    terms: tuple[tuple[Weight, int, int, int], ...] = ()

    @staticmethod
    def of(entries: Iterable[tuple[Weight, int, int, int]]) -> "EObject":
        merged: dict[tuple[Weight, int, int], int] = {}
        for w, dh, s, m in entries:
            if m < 0:
                raise ValueError("negative multiplicity")
            if m:
                merged[(w, dh, s)] = merged.get((w, dh, s), 0) + m
        return EObject(
            tuple(
                (w, dh, s, merged[(w, dh, s)])
                for (w, dh, s) in sorted(
                    merged, key=lambda k: (k[0].a, k[0].b, k[1], k[2])
                )
            )
        )

    @staticmethod
    def line(c_h: int = 0, d_h: int = 0) -> "EObject":
        """The line bundle O(c_h.H + d_h.h)."""
        return EObject.of([(Weight(c_h, c_h), d_h, 0, 1)])

    @staticmethod
    def schur(k: int, c_h: int = 0, d_h: int = 0) -> "EObject":
        """S^k U^vee (x) O(c_h.H + d_h.h)."""
        return EObject.of([(Weight(k + c_h, c_h), d_h, 0, 1)])

    @staticmethod
    def of_weight(w: Weight, d_h: int = 0) -> "EObject":
        return EObject.of([(w, d_h, 0, 1)])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Weight, int, int, int]]:
        return iter(self.terms)

    def __add__(self, other: "EObject") -> "EObject":
        return EObject.of(self.terms + other.terms)

    def twisted(self, c_h: int = 0, d_h: int = 0) -> "EObject":
        """Tensor with the line bundle O(c_h.H + d_h.h)."""
        return EObject.of((w.twist(c_h), dh + d_h, s, m) for w, dh, s, m in self)

    def shifted(self, k: int) -> "EObject":
        return EObject.of((w, dh, s + k, m) for w, dh, s, m in self)

    def dual(self) -> "EObject":
        return EObject.of((w.dual(), -dh, -s, m) for w, dh, s, m in self)

    def is_single(self) -> bool:
        return len(self.terms) == 1 and self.terms[0][2] == 0 and self.terms[0][3] == 1

    def single_term(self) -> tuple[Weight, int]:
        if not self.is_single():
            raise ValueError(f"not a single pure term: {self}")
        w, dh, _, _ = self.terms[0]
        return w, dh


def push_p2(d_h: int) -> GrSum:
    """Rp2* O(d_h.h) on Gr(2, N), per the projection-formula trichotomy."""
    if d_h >= 0:
        return GrSum.single(Weight(d_h, 0))
    if d_h == -1:
        return GrSum()
    return GrSum.single(Weight(-1, d_h + 1), -1)


def e_hom_pushed(a: EObject, b: EObject) -> GrSum:
    """Rp2* RHom_E(a, b) as a graded sum on Gr(2, N)."""
    out: list[tuple[Weight, int, int]] = []
    for wa, da, sa, ma in a:
        for wb, db, sb, mb in b:
            shift = sb - sa
            mult = ma * mb
            pushed = push_p2(db - da)
            for w, _, _ in cg_tensor(wa.dual(), wb):
                for wp, sp, mp in pushed:
                    for wt, _, _ in cg_tensor(w, wp):
                        out.append((wt, shift + sp, mult * mp))
    return GrSum.of(out)


def e_ext(a: EObject, b: EObject, n_amb: int) -> GradedDims:
    """Ext^bullet_E(a, b), computed on Gr(2, N) after pushing forward."""
    return sum_cohomology(e_hom_pushed(a, b), n_amb)


def e_euler(a: EObject, b: EObject, n_amb: int) -> int:
    return e_ext(a, b, n_amb).euler()


def omega_e(n_amb: int) -> tuple[int, int]:
    """Twist (c_H, d_h) of the canonical bundle omega_E = O((1-N)H - 2h)."""
    return (1 - n_amb, -2)


@dataclass(frozen=True)
class ExtResult:
    """Three-valued Ext outcome on X between pushforwards from E.

    ``front`` is the divisor-twisted contribution already shifted up one
    degree; ``back`` is Ext_E(a, b).  ``exact`` means every connecting map
    front^k -> back^{k+1} is forced to vanish by degree support, so the
    total is front (+) back degreewise.
    """

    kind: str  # "zero" | "exact" | "bounded"
    front: GradedDims
    back: GradedDims

    def total(self) -> GradedDims:
        if self.kind == "bounded":
            raise ValueError("bounded Ext has no resolved total")
        return self.front + self.back

    def is_zero(self) -> bool:
        return self.kind == "zero"

    def euler(self) -> int:
        """chi_X; exact across the long exact sequence even when bounded."""
        return self.back.euler() + self.front.euler()


def x_ext(a: EObject, b: EObject, n_amb: int) -> ExtResult:
    """Ext^bullet_X(j_* a, j_* b) via the restriction triangle on E."""
    back = e_ext(a, b, n_amb)
    front = e_ext(a.twisted(1, 1), b, n_amb).shifted(1)
    if not front and not back:
        return ExtResult("zero", front, back)
    # Connecting maps run Ext^{k-1}_E(a(H+h), b) -> Ext^{k+1}_E(a, b), i.e.
    # front^k -> back^{k+1} in shifted indexing.
    if all(back[k + 1] == 0 for k, _ in front.dims):
        return ExtResult("exact", front, back)
    return ExtResult("bounded", front, back)


def x_vanishes(a: EObject, b: EObject, n_amb: int) -> bool:
    """True iff Ext_X(j_* a, j_* b) = 0; never true on a bounded result."""
    return x_ext(a, b, n_amb).is_zero()


def x_euler(a: EObject, b: EObject, n_amb: int) -> int:
    return x_ext(a, b, n_amb).euler()


def gr_collection(n_amb: int) -> tuple[GrSum, ...]:
    """The full exceptional collection of D(Gr(2,N)) used throughout.

    Odd N = 2n+1: blocks <S^i U^vee (kH)>_{0<=i<=n-1} for k = 0..N-1.
    Even N = 2n: full blocks for k = 0..n-1, then <S^i>_{i<=n-2} for
    k = n..2n-1 (the count-consistent reading; see the even-case audit).
    """
    n = n_amb // 2
    out: list[GrSum] = []
    if n_amb % 2:
        for k in range(n_amb):
            for i in range(n):
                out.append(GrSum.single(Weight(i + k, k)))
    else:
        for k in range(n):
            for i in range(n):
                out.append(GrSum.single(Weight(i + k, k)))
        for k in range(n, 2 * n):
            for i in range(n - 1):
                out.append(GrSum.single(Weight(i + k, k)))
    return tuple(out)


_basis_cache: dict[int, tuple[EObject, ...]] = {}


class BasisValidationError(RuntimeError):
    """The Euler pairing matrix of the K-theory basis failed unitriangularity."""


def euler_basis(n_amb: int) -> tuple[EObject, ...]:
    """Full exceptional collection <p2^* T_i, p2^* T_i (x) O(h)> of D(E).

    Validated once per N: the chi_E pairing matrix must be unitriangular
    (ones on the diagonal, zeros below), which makes pairing against it an
    injective K_0(E) fingerprint.
    """
    hit = _basis_cache.get(n_amb)
    if hit is not None:
        return hit
    gr_objs = [
        EObject.of((w, 0, s, m) for w, s, m in t) for t in gr_collection(n_amb)
    ]
    basis = tuple(gr_objs + [o.twisted(0, 1) for o in gr_objs])
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            chi = e_euler(bi, bj, n_amb)
            if i == j and chi != 1:
                raise BasisValidationError(f"chi(b_{i}, b_{i}) = {chi} != 1")
            if i > j and chi != 0:
                raise BasisValidationError(f"chi(b_{i}, b_{j}) = {chi} != 0 below diagonal")
    _basis_cache[n_amb] = basis
    return basis


_kclass_cache: dict[tuple[int, EObject], tuple[int, ...]] = {}


def k_class(a: EObject, n_amb: int) -> tuple[int, ...]:
    """K_0(E) class of ``a`` as the vector of chi_E(basis_j, a)."""
    key = (n_amb, a)
    hit = _kclass_cache.get(key)
    if hit is None:
        hit = tuple(e_euler(b, a, n_amb) for b in euler_basis(n_amb))
        _kclass_cache[key] = hit
    return hit


def k_sub(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p - q for p, q in zip(x, y))


def k_add(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p + q for p, q in zip(x, y))
