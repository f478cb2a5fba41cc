"""Truncated formal power series in z over a pluggable exact coefficient ring.

A series of order N carries exact coefficients for z^0 .. z^N; every
operation is exact modulo z^(N+1).  The coefficient ring is anything with
exact +, -, * (including by int), == against 0/1, and / by a positive int:
in practice ``Fraction`` for ordinary generating functions and
``LaurentPoly`` when the coefficients themselves carry powers of 1/t.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Poly


class TruncatedSeries:
    """Power series in z truncated at a fixed order, with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        cs = list(coeffs)
        if not cs:
            raise ValueError("need at least the constant coefficient")
        if order is not None:
            if order < 0:
                raise ValueError("series order must be nonnegative")
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                zero = cs[0] * 0
                cs.extend([zero] * (order + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "TruncatedSeries":
        """View a polynomial as a rational-coefficient series (truncated)."""
        return cls([p.coefficient(i) for i in range(order + 1)])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int):
        if not 0 <= k <= self.order:
            raise ValueError(f"coefficient index {k} outside order {self.order}")
        return self.coeffs[k]

    def _zero(self):
        return self.coeffs[0] * 0

    def _one(self):
        return self.coeffs[0] * 0 + 1

    def map_coeffs(self, fn) -> "TruncatedSeries":
        return TruncatedSeries([fn(c) for c in self.coeffs])

    def _check_order(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])
        # scalar: add to the constant term
        return TruncatedSeries([self.coeffs[0] + other, *self.coeffs[1:]])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs])
        self._check_order(other)
        n = self.order
        out = [self._zero() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            for j in range(n + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def exp(self) -> "TruncatedSeries":
        """Series exponential; requires constant term 0."""
        if not self.coeffs[0] == self._zero():
            raise ValueError("series exp requires constant term 0")
        n = self.order
        out = [self._zero() for _ in range(n + 1)]
        out[0] = self._one()
        for k in range(1, n + 1):
            acc = self._zero()
            for j in range(1, k + 1):
                acc = acc + (self.coeffs[j] * j) * out[k - j]
            out[k] = acc / k
        return TruncatedSeries(out)

    def log(self) -> "TruncatedSeries":
        """Series logarithm; requires constant term 1."""
        if not self.coeffs[0] == self._one():
            raise ValueError("series log requires constant term 1")
        n = self.order
        out = [self._zero() for _ in range(n + 1)]
        for k in range(1, n + 1):
            acc = self._zero()
            for j in range(1, k):
                acc = acc + (out[j] * j) * self.coeffs[k - j]
            out[k] = self.coeffs[k] - acc / k
        return TruncatedSeries(out)

    def sqrt(self) -> "TruncatedSeries":
        """Series square root; requires constant term 1."""
        if not self.coeffs[0] == self._one():
            raise ValueError("series sqrt requires constant term 1")
        n = self.order
        out = [self._zero() for _ in range(n + 1)]
        out[0] = self._one()
        for k in range(1, n + 1):
            acc = self._zero()
            for i in range(1, k):
                acc = acc + out[i] * out[k - i]
            out[k] = (self.coeffs[k] - acc) / 2
        return TruncatedSeries(out)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(z)); requires inner constant term 0 and equal orders."""
        if not isinstance(inner, TruncatedSeries):
            raise TypeError("compose expects a TruncatedSeries")
        self._check_order(inner)
        if not inner.coeffs[0] == inner._zero():
            raise ValueError("series compose requires inner constant term 0")
        n = self.order
        acc = TruncatedSeries([self.coeffs[n]], order=n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc


def geometric_series(order: int) -> TruncatedSeries:
    """1/(1-z) = 1 + z + z^2 + ... with Fraction coefficients."""
    return TruncatedSeries([Fraction(1)] * (order + 1))


def one_minus_z(order: int, one=Fraction(1)) -> TruncatedSeries:
    """1 - z over the ring of the supplied unit element."""
    coeffs = [one, -one]
    if order == 0:
        coeffs = [one]
    return TruncatedSeries(coeffs, order=order)
