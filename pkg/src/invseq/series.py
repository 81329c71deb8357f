"""Exact truncated power series in ``z`` and a catalog of generating functions.

:class:`TruncatedSeries` has rational coefficients.  :class:`BivariateSeries`
has coefficients that are polynomials in ``t`` with rational coefficients
(:class:`Poly`).  Both keep coefficients ``c_0..c_N`` and drop everything of
higher order; arithmetic is exact throughout.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import PreconditionError, VerificationError

__all__ = [
    "DEFAULT_ORDER",
    "Poly",
    "TruncatedSeries",
    "BivariateSeries",
    "CATALOG",
    "CATALOG_TRIPLES",
    "gf_catalog",
    "egf_to_counts",
    "P_zt",
    "R_from_P",
    "P_tilde_zt",
    "R_tilde_zt",
    "egf_lt_lt_cos",
]

DEFAULT_ORDER = 16


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Poly(tuple):
    """Dense polynomial in ``t``: ``Poly((a0, a1, a2))`` is ``a0 + a1*t + a2*t^2``."""

    __slots__ = ()

    def __new__(cls, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return super().__new__(cls, cs)

    @classmethod
    def lift(cls, x) -> "Poly":
        return x if isinstance(x, Poly) else cls((x,))

    @property
    def degree(self) -> int:
        return len(self) - 1

    def constant(self) -> Fraction:
        return self[0] if self else Fraction(0)

    def is_constant(self) -> bool:
        return len(self) <= 1

    def __add__(self, other):
        other = Poly.lift(other)
        m = max(len(self), len(other))
        return Poly(
            (self[i] if i < len(self) else 0) + (other[i] if i < len(other) else 0)
            for i in range(m)
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self)

    def __sub__(self, other):
        return self + (-Poly.lift(other))

    def __rsub__(self, other):
        return Poly.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            other = Fraction(other)
            return Poly(c * other for c in self)
        if not self or not other:
            return Poly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self):
            if a:
                for j, b in enumerate(other):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or not other:
                raise PreconditionError("can only divide a polynomial by a nonzero constant")
            other = other[0]
        other = Fraction(other)
        return Poly(c / other for c in self)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return tuple.__eq__(self, other)
        if isinstance(other, (int, Fraction)):
            return tuple.__eq__(self, Poly.lift(other))
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return tuple.__hash__(self)

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self):
            acc = acc * t + c
        return acc

    def coefficients(self, length: int | None = None) -> list[Fraction]:
        cs = list(self)
        if length is not None:
            cs += [Fraction(0)] * (length - len(cs))
        return cs

    def is_palindromic(self, lo: int, hi: int) -> bool:
        """True iff coefficient ``d`` equals coefficient ``lo + hi - d``."""
        cs = self.coefficients(hi + 1)
        return all(cs[d] == cs[lo + hi - d] for d in range(lo, hi + 1))

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self):
            if c == 0:
                continue
            mono = "" if d == 0 else "t" if d == 1 else f"t^{d}"
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = _frac_str(c) + ("*" + mono if mono else "")
            terms.append(s)
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly({[_frac_str(c) for c in self]})"


class _Series:
    """Shared arithmetic; subclasses fix the coefficient ring."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = [self._coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = cs[: order + 1] + [self._zero()] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)

    # ring hooks
    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @classmethod
    def _zero(cls):
        return cls._coerce(0)

    @staticmethod
    def _is_one(c) -> bool:
        raise NotImplementedError

    @staticmethod
    def _is_unit(c) -> bool:
        raise NotImplementedError

    # constructors
    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER):
        return cls([c], order)

    @classmethod
    def z(cls, order: int = DEFAULT_ORDER):
        return cls([0, 1], order)

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int = DEFAULT_ORDER):
        return cls([f(n) for n in range(order + 1)], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _wrap(self, coeffs, order=None):
        return type(self)(coeffs, self.order if order is None else order)

    def _other(self, other):
        """Bring ``other`` into a common class and order with ``self``."""
        if isinstance(other, _Series):
            cls = BivariateSeries if BivariateSeries in (type(self), type(other)) else type(self)
            order = min(self.order, other.order)
            return cls(self.coeffs, order), cls(other.coeffs, order)
        return self, self.constant(other, self.order)

    def truncate(self, order: int):
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return self._wrap(self.coeffs, order)

    def __add__(self, other):
        a, b = self._other(other)
        return a._wrap([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return self._wrap([-x for x in self])

    def __sub__(self, other):
        a, b = self._other(other)
        return a._wrap([x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        a, b = self._other(other)
        return b - a

    def __mul__(self, other):
        if not isinstance(other, _Series):
            c = self._coerce(other) if isinstance(other, Poly) else Fraction(other)
            return self._wrap([x * c for x in self])
        a, b = self._other(other)
        N = a.order
        out = [a._zero()] * (N + 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j in range(N + 1 - i):
                if b[j] != 0:
                    out[i + j] = out[i + j] + x * b[j]
        return a._wrap(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, _Series):
            return self * (1 / Fraction(other))
        a, b = self._other(other)
        if not a._is_unit(b[0]):
            raise PreconditionError("division needs an invertible constant term")
        inv0 = b[0]
        q = []
        for n in range(a.order + 1):
            acc = a[n]
            for k in range(1, n + 1):
                if b[k] != 0:
                    acc = acc - b[k] * q[n - k]
            q.append(acc / inv0)
        return a._wrap(q)

    def __rtruediv__(self, other):
        a, b = self._other(other)
        return b / a

    def __pow__(self, k: int):
        if k < 0:
            return self.constant(1, self.order) / (self ** (-k))
        out = self.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, _Series):
            a, b = self._other(other)
            return a.order == b.order and a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def mul_z(self, k: int = 1):
        """Multiply by ``z^k``; the top ``k`` coefficients fall off."""
        return self._wrap([self._zero()] * k + list(self.coeffs[: len(self) - k]))

    def div_z(self, k: int = 1):
        """Divide by ``z^k``; the result has order ``N - k``."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise PreconditionError(f"the first {k} coefficients must vanish to divide by z^{k}")
        return self._wrap(self.coeffs[k:], self.order - k)

    def sqrt(self):
        """The square root with constant term 1."""
        if not self._is_one(self[0]):
            raise PreconditionError("sqrt needs constant term 1")
        s = [self._coerce(1)]
        for n in range(1, self.order + 1):
            acc = self[n]
            for k in range(1, n):
                acc = acc - s[k] * s[n - k]
            s.append(acc / 2)
        return self._wrap(s)

    def compose(self, inner):
        """``self(inner(z))``; ``inner`` must have zero constant term."""
        a, b = self._other(inner)
        if b[0] != 0:
            raise PreconditionError("compose needs an inner series with zero constant term")
        out = a.constant(a[a.order], a.order)
        for k in range(a.order - 1, -1, -1):
            out = out * b + a.constant(a[k], a.order)
        return out

    def exp(self):
        """``exp(self)``; needs zero constant term."""
        if self[0] != 0:
            raise PreconditionError("exp needs constant term 0")
        f = [self._coerce(1)]
        for n in range(1, self.order + 1):
            acc = self._zero()
            for k in range(1, n + 1):
                if self[k] != 0:
                    acc = acc + k * self[k] * f[n - k]
            f.append(acc / n)
        return self._wrap(f)

    def derivative(self):
        return self._wrap([k * self[k] for k in range(1, len(self))], self.order - 1)


class TruncatedSeries(_Series):
    """Power series in ``z`` with rational coefficients, truncated at order ``N``."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Poly):
            if not c.is_constant():
                raise TypeError("a univariate series cannot hold a polynomial in t")
            return c.constant()
        return Fraction(c)

    @staticmethod
    def _is_one(c) -> bool:
        return c == 1

    @staticmethod
    def _is_unit(c) -> bool:
        return c != 0

    def integers(self) -> list[int]:
        """Coefficients as ints; fails if any is not integral."""
        out = []
        for n, c in enumerate(self):
            if c.denominator != 1:
                raise VerificationError(f"coefficient of z^{n} is not an integer: {c}")
            out.append(c.numerator)
        return out

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self):
            if c == 0:
                continue
            mono = "" if n == 0 else "z" if n == 1 else f"z^{n}"
            terms.append(_frac_str(c) + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(_frac_str(c) for c in self)}])"

    def to_json(self) -> list[str]:
        return [_frac_str(c) for c in self]


class BivariateSeries(_Series):
    """Power series in ``z`` whose coefficients are polynomials in ``t``."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return Poly.lift(c) if not isinstance(c, Poly) else c

    @staticmethod
    def _is_one(c) -> bool:
        return c == Poly((1,))

    @staticmethod
    def _is_unit(c) -> bool:
        return c.is_constant() and bool(c)

    @classmethod
    def t(cls, order: int = DEFAULT_ORDER):
        return cls([Poly((0, 1))], order)

    def at(self, t) -> TruncatedSeries:
        """Specialize ``t`` to a rational value."""
        t = Fraction(t)
        return TruncatedSeries([c(t) for c in self], self.order)

    def joint(self) -> list[list[int]]:
        """``result[n][d]`` = integer coefficient of ``z^n t^d``."""
        out = []
        for n, c in enumerate(self):
            row = []
            for d, x in enumerate(c.coefficients(n + 1)):
                if x.denominator != 1:
                    raise VerificationError(f"coefficient of z^{n} t^{d} is not an integer: {x}")
                row.append(x.numerator)
            out.append(row)
        return out

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self):
            if not c:
                continue
            mono = "" if n == 0 else "z" if n == 1 else f"z^{n}"
            terms.append(f"[{c}]" + ("*" + mono if mono else ""))
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"BivariateSeries({self.to_json()})"

    def to_json(self) -> list[list[str]]:
        return [[_frac_str(x) for x in c] for c in self]


# ------------------------------------------------------------------ catalog

S = TruncatedSeries
B = BivariateSeries


def _catalan(N):
    z = S.z(N + 1)
    return ((1 - (1 - 4 * z).sqrt()).div_z() / 2).truncate(N)


def _thm_1_3(N):
    z = S.z(N + 1)
    return ((1 + 2 * z - (1 - 4 * z - 4 * z * z).sqrt()).div_z() / 4).truncate(N)


def P_zt(N: int = DEFAULT_ORDER) -> BivariateSeries:
    """Marked Dyck paths by size (``z``) and number of elbows plus lone marks (``t``).

    Computed from its fixed-point equation; each pass fixes one more coefficient.
    """
    z, t = B.z(N), B.t(N)
    P = B.constant(1, N)
    for _ in range(N + 1):
        P = 1 / (1 - (z * t + z * z * t + (z + z * z * t) * (P - 1)))
    return P


def R_from_P(P: BivariateSeries) -> BivariateSeries:
    z, t = B.z(P.order), B.t(P.order)
    return (1 - z * (1 - t) * P) / (1 - z * P)


def _R_zt(N):
    """Closed radical form of the (>,<=,-) distribution by dist."""
    z, t = B.z(N + 1), B.t(N + 1)
    disc = 1 - z * (2 + 2 * t - z + 6 * z * t - z * t * t)
    return ((1 + z * (3 - t) - disc.sqrt()).div_z() / 4).truncate(N)


def P_tilde_zt(N: int = DEFAULT_ORDER) -> BivariateSeries:
    """Multi-marked analogue of :func:`P_zt`, from its fixed-point equation."""
    z, t = B.z(N), B.t(N)
    w = z * (t - 1)
    step = z + z * z * t / (1 - z)
    P = B.constant(1, N)
    for _ in range(N + 1):
        P = 1 / (1 - (w + step * P))
    return P


def R_tilde_zt(N: int = DEFAULT_ORDER) -> BivariateSeries:
    return R_from_P(P_tilde_zt(N))


def _I_gt_lt(N):
    z, t = B.z(N + 1), B.t(N + 1)
    disc = (1 + z - z * t) ** 2 - 4 * z * (1 - z + z * t) / (1 - z)
    num = 1 + z * (2 - t) - z * z * (1 - t) - (1 - z) * disc.sqrt()
    return (num.div_z() / (2 * (2 - z))).truncate(N)


def _I_lt_dash_lt(N):
    z, t = B.z(N), B.t(N)
    num = 1 - 3 * z + z * t + 3 * z**2 - 2 * z**2 * t + z**2 * t**2 - z**3 + z**3 * t
    return num / (1 - z) ** 3


def _I_ne_lt(N):
    z, t = B.z(N), B.t(N)
    num = (
        1 - 4 * z + z * t + 6 * z**2 - 4 * z**2 * t + z**2 * t**2
        - 4 * z**3 + 5 * z**3 * t - z**3 * t**2 + z**4 - 2 * z**4 * t + z**4 * t**2
    )
    return num / ((1 - z) ** 2 * (1 - 2 * z + z**2 - z**2 * t))


def _I_ne_le(N):
    z, t = B.z(N), B.t(N)
    num = 1 - 2 * z + z * t + z**2 - 2 * z**2 * t + z**2 * t**2 + z**3 * t
    return num / ((1 - z) * (1 - z - z**2 * t))


def _I_gt_ne(N):
    z, t = B.z(N), B.t(N)
    root = ((1 + z - z * t) ** 2 - 4 * z).sqrt()
    num = 1 - 2 * z + z**2 * (1 - t) ** 2 + (1 - z + z * t) * root
    return num / (2 * (1 - z) * root)


def _I_ge_ne(N):
    z, t = B.z(N), B.t(N)
    return (1 - z - z * t + 2 * z**2 * t) / ((1 - z) * (1 - z * t) ** 2)


def _I_eq_lt(N):
    z, t = B.z(N), B.t(N)
    return (1 - z) / (1 - z - z * t)


def _I_eq_le(N):
    z, t = B.z(N), B.t(N)
    return 1 / (1 - z * t - z**2 * t)


def _I_ge_le_ne(N):
    z, t = B.z(N), B.t(N)
    return (1 - z + z**3 * t) / ((1 - z) * (1 - z * t - z**2 * t))


def _egf_ne_ne(N):
    z = S.z(N)
    return (z + z * z / 2).exp()


def _egf_lt_lt(N):
    """Exponential generating function of permutations avoiding consecutive 321.

    It is the reciprocal of ``sum_k z^{3k}/(3k)! - z^{3k+1}/(3k+1)!``, an
    exact rational series equal to the cosine form of the closed expression.
    """
    def denom(n):
        if n % 3 == 0:
            return Fraction(1, math.factorial(n))
        if n % 3 == 1:
            return Fraction(-1, math.factorial(n))
        return Fraction(0)

    return 1 / S.from_function(denom, N)


def egf_lt_lt_cos(z: float) -> float:
    """Floating-point value of the cosine closed form, for numerical cross-checks."""
    s3 = math.sqrt(3)
    return s3 / 2 * math.exp(z / 2) / math.cos(s3 * z / 2 + math.pi / 6)


# name -> (kind, builder)
CATALOG: dict[str, tuple[str, Callable[[int], _Series]]] = {
    "catalan": ("ogf", _catalan),
    "thm_1_3": ("ogf", _thm_1_3),
    "R_zt": ("bivariate", _R_zt),
    "I_lt_dash_lt": ("bivariate", _I_lt_dash_lt),
    "I_ne_lt": ("bivariate", _I_ne_lt),
    "I_ne_le": ("bivariate", _I_ne_le),
    "I_gt_lt": ("bivariate", _I_gt_lt),
    "I_gt_le": ("bivariate", _R_zt),
    "I_gt_ne": ("bivariate", _I_gt_ne),
    "I_ge_ne": ("bivariate", _I_ge_ne),
    "I_eq_lt": ("bivariate", _I_eq_lt),
    "I_eq_le": ("bivariate", _I_eq_le),
    "I_ge_le_ne": ("bivariate", _I_ge_le_ne),
    "egf_ne_ne": ("egf", _egf_ne_ne),
    "egf_lt_lt": ("egf", _egf_lt_lt),
}

# catalog entries that count avoiders of a triple of relations (text form)
CATALOG_TRIPLES = {
    "thm_1_3": ">,<=,-",
    "R_zt": ">,<=,-",
    "I_lt_dash_lt": "<,-,<",
    "I_ne_lt": "!=,<,-",
    "I_ne_le": "!=,<=,-",
    "I_gt_lt": ">,<,-",
    "I_gt_le": ">,<=,-",
    "I_gt_ne": ">,!=,-",
    "I_ge_ne": ">=,!=,-",
    "I_eq_lt": "=,<,-",
    "I_eq_le": "=,<=,-",
    "I_ge_le_ne": ">=,<=,!=",
}


def gf_catalog(name: str, N: int = DEFAULT_ORDER, kind: str | None = None) -> _Series:
    """Expand the named generating function exactly to order ``N``.

    ``kind`` may be given to assert the type of the entry (``ogf``, ``egf``
    or ``bivariate``).
    """
    if name not in CATALOG:
        raise KeyError(f"unknown generating function {name!r}; known: {', '.join(CATALOG)}")
    if N < 0:
        raise ValueError("order must be non-negative")
    entry_kind, build = CATALOG[name]
    if kind is not None and kind != entry_kind:
        raise ValueError(f"{name} is an {entry_kind}, not an {kind}")
    return build(N)


def egf_to_counts(s: TruncatedSeries) -> list[int]:
    """``n! * c_n`` for each coefficient, checked to be integral."""
    out = []
    for n, c in enumerate(s):
        v = c * math.factorial(n)
        if v.denominator != 1:
            raise VerificationError(f"n! times the coefficient of z^{n} is not an integer: {v}")
        out.append(v.numerator)
    return out
