"""Dense univariate polynomials with Gaussian-rational coefficients."""

from __future__ import annotations

from typing import Iterable

from .scalars import GaussQ, gq

#: Degree reported for the zero polynomial.
ZERO_DEGREE = -1


class Poly:
    """Polynomial ``sum(coeffs[k] * x**k)``; trailing zeros are stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [gq(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def linear(cls, root) -> "Poly":
        """The monic factor ``x - root``."""
        return cls([-gq(root), 1])

    @classmethod
    def from_roots(cls, roots: dict) -> "Poly":
        """Expand ``prod((x - a)**k for a, k in roots.items())``."""
        out = cls([1])
        for a, k in roots.items():
            lin = cls.linear(a)
            for _ in range(k):
                out = out * lin
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self) -> GaussQ:
        return self.coeffs[-1] if self.coeffs else GaussQ(0)

    def coeff(self, k: int) -> GaussQ:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return GaussQ(0)

    def support(self) -> list:
        return [k for k, c in enumerate(self.coeffs) if c]

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = gq(other)
            return Poly(a * c for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [GaussQ(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly([1])
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, other: "Poly"):
        """Euclidean division over Q(i)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead_inv = other.lead().inverse()
        quot = [GaussQ(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * lead_inv
            if not c:
                continue
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == _as_poly(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus / evaluation -----------------------------------------

    def __call__(self, x) -> GaussQ:
        x = gq(x)
        acc = GaussQ(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def compose_affine(self, scale, shift) -> "Poly":
        """Return ``p(scale*x + shift)``."""
        lin = Poly([shift, scale])
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * lin + Poly([c])
        return acc

    def taylor_at(self, a) -> list:
        """Coefficients of ``p`` in powers of ``(x - a)``."""
        return list(self.compose_affine(1, a).coeffs)

    def conjugate(self) -> "Poly":
        return Poly(c.conjugate() for c in self.coeffs)

    def __repr__(self):
        return "Poly(%s)" % ", ".join(str(c) for c in self.coeffs)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([x])


def poly_from_dict(d: dict) -> Poly:
    if not d:
        return Poly()
    n = max(d) + 1
    return Poly(d.get(k, 0) for k in range(n))
