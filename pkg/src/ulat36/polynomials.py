"""Exact polynomial containers: univariate weight enumerators and
homogeneous trivariate complete weight enumerators.

Coefficients are Fractions throughout; code enumerators happen to be
integral but MacWilliams-style transforms pass through fractional
intermediate values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _norm_terms(items):
    out = []
    for key, val in items:
        f = Fraction(val)
        if f:
            out.append((key, f))
    out.sort(key=lambda t: t[0])
    return tuple(out)


@dataclass(frozen=True)
class UnivariatePoly:
    """Sparse y-polynomial with exact rational coefficients."""

    terms: tuple = ()

    @classmethod
    def from_dict(cls, d):
        return cls(_norm_terms(d.items()))

    def as_dict(self):
        return dict(self.terms)

    def coeff(self, e):
        for k, v in self.terms:
            if k == e:
                return v
        return Fraction(0)

    @property
    def degree(self):
        return self.terms[-1][0] if self.terms else 0

    def min_positive_exponent(self):
        for k, _ in self.terms:
            if k > 0:
                return k
        return None

    def coefficient_sum(self):
        return sum(v for _, v in self.terms)

    def is_integral(self):
        return all(v.denominator == 1 for _, v in self.terms)

    def is_nonnegative(self):
        return all(v >= 0 for _, v in self.terms)

    def __add__(self, other):
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d.get(k, Fraction(0)) + v
        return UnivariatePoly(_norm_terms(d.items()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return UnivariatePoly(_norm_terms((k, v * c) for k, v in self.terms))

    def __mul__(self, other):
        d = {}
        for k1, v1 in self.terms:
            for k2, v2 in other.terms:
                k = k1 + k2
                d[k] = d.get(k, Fraction(0)) + v1 * v2
        return UnivariatePoly(_norm_terms(d.items()))

    def __pow__(self, e):
        out = UnivariatePoly(((0, Fraction(1)),))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def eval_at(self, y):
        y = Fraction(y)
        return sum(v * y ** k for k, v in self.terms)

    def to_json_map(self):
        return {str(k): str(v) for k, v in self.terms}

    @classmethod
    def from_json_map(cls, m):
        return cls.from_dict({int(k): Fraction(v) for k, v in m.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.terms:
            if k == 0:
                parts.append(str(v))
            elif k == 1:
                parts.append(f"{v}y" if v != 1 else "y")
            else:
                parts.append(f"{v}y^{k}" if v != 1 else f"y^{k}")
        return " + ".join(parts)


@dataclass(frozen=True)
class TrivariatePoly:
    """Homogeneous polynomial in x, y, z; keys are exponent triples."""

    degree: int
    terms: tuple = ()

    @classmethod
    def from_dict(cls, degree, d):
        terms = _norm_terms(d.items())
        for (i, j, l), _ in terms:
            if i + j + l != degree or min(i, j, l) < 0:
                raise ValueError(f"non-homogeneous term {(i, j, l)} for degree {degree}")
        return cls(degree, terms)

    @classmethod
    def variable(cls, idx):
        key = [0, 0, 0]
        key[idx] = 1
        return cls(1, ((tuple(key), Fraction(1)),))

    def as_dict(self):
        return dict(self.terms)

    def coeff(self, key):
        for k, v in self.terms:
            if k == key:
                return v
        return Fraction(0)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d.get(k, Fraction(0)) + v
        return TrivariatePoly(self.degree, _norm_terms(d.items()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return TrivariatePoly(self.degree, _norm_terms((k, v * c) for k, v in self.terms))

    def __mul__(self, other):
        d = {}
        for (i1, j1, l1), v1 in self.terms:
            for (i2, j2, l2), v2 in other.terms:
                k = (i1 + i2, j1 + j2, l1 + l2)
                d[k] = d.get(k, Fraction(0)) + v1 * v2
        return TrivariatePoly(self.degree + other.degree, _norm_terms(d.items()))

    def __pow__(self, e):
        if e == 0:
            return TrivariatePoly(0, (((0, 0, 0), Fraction(1)),))
        out = self
        for _ in range(e - 1):
            out = out * self
        return out

    def swap_yz(self):
        return TrivariatePoly(
            self.degree, _norm_terms(((i, l, j), v) for (i, j, l), v in self.terms))

    def specialize_x1_zy(self):
        """Substitute x=1, z=y, collapsing to a univariate polynomial."""
        d = {}
        for (_, j, l), v in self.terms:
            e = j + l
            d[e] = d.get(e, Fraction(0)) + v
        return UnivariatePoly.from_dict(d)

    def coefficient_sum(self):
        return sum(v for _, v in self.terms)

    def is_integral(self):
        return all(v.denominator == 1 for _, v in self.terms)

    def is_nonnegative(self):
        return all(v >= 0 for _, v in self.terms)

    def to_json_map(self):
        return {f"{i},{j},{l}": str(v) for (i, j, l), v in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        order = sorted(self.terms, key=lambda t: (-t[0][0], -t[0][1]))
        parts = []
        for (i, j, l), v in order:
            mono = "".join(
                f"{var}^{e}" if e > 1 else var
                for var, e in (("x", i), ("y", j), ("z", l)) if e)
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            else:
                parts.append(f"{v} {mono}")
        return " + ".join(parts)
