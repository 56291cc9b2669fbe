"""Univariate polynomials with integer coefficients."""

from math import comb


class Polynomial:
    """Integer polynomial stored as ascending coefficients, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Polynomial([other]).coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == Polynomial(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other):
        return other if isinstance(other, Polynomial) else Polynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self), len(other))
        return Polynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self or not other:
            return Polynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reciprocal(self, k):
        """``t^k p(1/t)``; requires ``k >= degree``."""
        if k < self.degree:
            raise ValueError("exponent smaller than the degree")
        return Polynomial([self[k - i] for i in range(k + 1)])

    def to_list(self):
        return list(self.coeffs) if self.coeffs else [0]

    def format(self, var="x"):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.to_list()})"


ONE = Polynomial([1])
ONE_MINUS_T = Polynomial([1, -1])


def h_from_counts(counts, d):
    """Solve ``counts[k] = sum_i h_i C(k-i+d, d)`` for ``h`` exactly.

    This is the triangular system relating a lattice-point count table of a
    polytope with ``d+1`` affine degrees of freedom to its h*-vector.
    """
    h = []
    for k, c in enumerate(counts):
        h.append(c - sum(h[i] * comb(k - i + d, d) for i in range(k)))
    return h
