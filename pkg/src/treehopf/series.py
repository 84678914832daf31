"""Truncated formal power series over exact rationals or rational matrices.

Two groups live here: series with invertible constant term under the
pointwise (Cauchy) product, and series with zero constant term and
invertible linear term under substitution.  Substitution acts on the first
group from the right, and a 1-cocycle of the substitution group glues the
two into the twisted action used by the charge renormalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union


@dataclass(frozen=True)
class Matrix:
    """Dense matrix with exact rational entries."""

    rows: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        return Matrix(tuple(tuple(Fraction(x) for x in r) for r in rows))

    @staticmethod
    def identity(d: int) -> "Matrix":
        return Matrix(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(d))
                for i in range(d)
            )
        )

    @staticmethod
    def zeros(d: int) -> "Matrix":
        return Matrix(tuple(tuple(Fraction(0) for _ in range(d)) for _ in range(d)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        d = self.dim
        cols = list(zip(*other.rows))
        return Matrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def scale(self, k) -> "Matrix":
        k = Fraction(k)
        return Matrix(tuple(tuple(k * a for a in r) for r in self.rows))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; raises ValueError on a singular matrix."""
        d = self.dim
        aug = [
            list(row) + [Fraction(1 if i == j else 0) for j in range(d)]
            for i, row in enumerate(self.rows)
        ]
        for col in range(d):
            pivot = next((r for r in range(col, d) if aug[r][col] != 0), None)
            if pivot is None:
                raise ValueError("singular matrix")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = Fraction(1) / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(d):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Matrix(tuple(tuple(row[d:]) for row in aug))


RingValue = Union[Fraction, Matrix]


def r_add(a: RingValue, b: RingValue) -> RingValue:
    if isinstance(a, Matrix) and not isinstance(b, Matrix):
        b = Matrix.identity(a.dim).scale(b)
    elif isinstance(b, Matrix) and not isinstance(a, Matrix):
        a = Matrix.identity(b.dim).scale(a)
    return a + b


def r_mul(a: RingValue, b: RingValue) -> RingValue:
    if isinstance(a, Matrix):
        return a @ b if isinstance(b, Matrix) else a.scale(b)
    if isinstance(b, Matrix):
        return b.scale(a)
    return a * b


def r_neg(a: RingValue) -> RingValue:
    return -a


def r_is_zero(a: RingValue) -> bool:
    return a.is_zero() if isinstance(a, Matrix) else a == 0


def r_eq(a: RingValue, b: RingValue) -> bool:
    return r_is_zero(r_add(a, r_neg(b)))


def r_inv(a: RingValue) -> RingValue:
    if isinstance(a, Matrix):
        return a.inverse()
    if a == 0:
        raise ValueError("zero is not invertible")
    return Fraction(1) / a


def r_one_like(a: RingValue) -> RingValue:
    return Matrix.identity(a.dim) if isinstance(a, Matrix) else Fraction(1)


def r_zero_like(a: RingValue) -> RingValue:
    return Matrix.zeros(a.dim) if isinstance(a, Matrix) else Fraction(0)


class Series:
    """Power series truncated at a fixed order; arithmetic discards higher
    terms and mixed-order operations truncate to the smaller order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[RingValue]):
        if not coeffs:
            raise ValueError("a truncated series needs at least a constant term")
        self.coeffs = tuple(
            c if isinstance(c, Matrix) else Fraction(c) for c in coeffs
        )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> RingValue:
        return self.coeffs[n]

    def truncate(self, n: int) -> "Series":
        return Series(self.coeffs[: n + 1])

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([r_add(self[k], other[k]) for k in range(n + 1)])

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __neg__(self) -> "Series":
        return Series([r_neg(c) for c in self.coeffs])

    def __mul__(self, other: "Series") -> "Series":
        """Cauchy product; coefficient order is preserved (left factor first)."""
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc: RingValue = Fraction(0)
            for i in range(k + 1):
                acc = r_add(acc, r_mul(self[i], other[k - i]))
            out.append(acc)
        return Series(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(r_eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def compose(self, inner: "Series") -> "Series":
        """Substitution self(inner); the inner series must have zero constant
        term so the truncation is well defined."""
        if not r_is_zero(inner[0]):
            raise ValueError("substituted series must have zero constant term")
        n = min(self.order, inner.order)
        out = [r_zero_like(self[0]) if isinstance(self[0], Matrix) else Fraction(0)] * (n + 1)
        out[0] = r_add(out[0], self[0])
        power = Series([r_one_like(inner[0])] + [r_zero_like(inner[0])] * n)
        for k in range(1, n + 1):
            power = (power * inner).truncate(n)
            for m in range(n + 1):
                out[m] = r_add(out[m], r_mul(self[k], power[m]))
        return Series(out)

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires an invertible constant term."""
        c0inv = r_inv(self[0])
        out = [c0inv]
        for k in range(1, self.order + 1):
            acc: RingValue = Fraction(0)
            for i in range(1, k + 1):
                acc = r_add(acc, r_mul(self[i], out[k - i]))
            out.append(r_neg(r_mul(c0inv, acc)))
        return Series(out)

    def shift_down(self) -> "Series":
        """Divide by the indeterminate (drop the constant term, which must
        vanish); the result is one order shorter."""
        if not r_is_zero(self[0]):
            raise ValueError("cannot divide by the indeterminate: nonzero constant term")
        return Series(self.coeffs[1:])

    def is_gp(self) -> bool:
        try:
            r_inv(self[0])
        except ValueError:
            return False
        return True

    def is_gc(self) -> bool:
        if self.order < 1 or not r_is_zero(self[0]):
            return False
        try:
            r_inv(self[1])
        except ValueError:
            return False
        return True

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r})"


def one(n: int) -> Series:
    return Series([Fraction(1)] + [Fraction(0)] * n)


def indeterminate(n: int) -> Series:
    if n < 1:
        raise ValueError("need order >= 1")
    return Series([Fraction(0), Fraction(1)] + [Fraction(0)] * (n - 1))


def gp(coeffs: Sequence[RingValue]) -> Series:
    s = Series(coeffs)
    if not s.is_gp():
        raise ValueError("constant term is not invertible")
    return s


def gc(coeffs: Sequence[RingValue]) -> Series:
    s = Series(coeffs)
    if not s.is_gc():
        raise ValueError("need zero constant term and invertible linear term")
    return s


def gp_multiply(f: Series, g: Series) -> Series:
    return f * g


def gc_compose(phi: Series, psi: Series) -> Series:
    """Group law of the substitution group: (phi psi)(x) = phi(psi(x)), so
    that acting with the product equals acting twice in order."""
    return phi.compose(psi)


def gp_action(f: Series, phi: Series) -> Series:
    """Right action of the substitution group: substitute phi into f."""
    if not phi.is_gc():
        raise ValueError("action needs a substitution-group element")
    return f.compose(phi)


def semidirect_multiply(
    pair_a: tuple[Series, Series], pair_b: tuple[Series, Series]
) -> tuple[Series, Series]:
    """(phi, f) . (psi, g) = (phi o psi, f^psi g)."""
    phi, f = pair_a
    psi, g = pair_b
    return gc_compose(phi, psi), gp_action(f, psi) * g


def series_inverse(f: Series) -> Series:
    return f.inverse()


Cocycle = Callable[[Series], Series]


def divide_by_alpha(phi: Series) -> Series:
    """The standard cocycle: identify a substitution-group element with a
    product-group element by dividing by the indeterminate."""
    return phi.shift_down()


def cocycle_check(s: Cocycle, phi: Series, psi: Series) -> bool:
    """Whether s(psi) s(phi psi)^-1 (s(phi)^psi) is the unit series, up to
    the common truncation order."""
    lhs = s(psi) * s(gc_compose(phi, psi)).inverse() * gp_action(s(phi), psi)
    return lhs == one(lhs.order)


def sigma_action(f: Series, phi: Series, s: Cocycle) -> Series:
    """Twisted right action f . phi = f^phi s(phi)."""
    return gp_action(f, phi) * s(phi)
