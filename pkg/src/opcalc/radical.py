"""Exact scalars: Gaussian rationals extended by square roots of positive integers.

A :class:`RadicalScalar` is a finite sum ``sum_r (u_r + i*v_r) * sqrt(r)`` over
squarefree positive integer radicands ``r``, with Gaussian-rational
coefficients.  Radicand 1 carries the plain rational part.  The set is closed
under addition, multiplication and complex conjugation, which is everything the
two-mode oscillator algebra ever produces (``i``, ``sqrt(2)``, square roots of
rational physical parameters, ``sqrt(n+1)`` ladder factors).

Values are immutable; every operation returns a new object.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

#: Largest radicand (after square extraction) the engine will store.
RADICAND_BOUND = 2**63 - 1


class NonPositiveRadicand(ValueError):
    """Square root requested of a non-positive rational."""


class RadicandOverflow(OverflowError):
    """A radicand exceeded :data:`RADICAND_BOUND` after square extraction."""


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split ``n > 0`` as ``outer**2 * core`` with ``core`` squarefree.

    Trial division; fine for the small radicands the algebra produces
    (products of parameter numerators/denominators and ladder integers).
    """
    if n <= 0:
        raise NonPositiveRadicand(f"expected a positive integer, got {n}")
    outer = 1
    d = 2
    while d * d <= n:
        dd = d * d
        while n % dd == 0:
            n //= dd
            outer *= d
        d += 1
    return outer, n


def _merge_radicands(r: int, s: int) -> tuple[int, int]:
    # sqrt(r)*sqrt(s) = g*sqrt((r//g)*(s//g)) with g = gcd(r, s); the stored
    # radicands are squarefree, so the coprime product is squarefree too.
    g = math.gcd(r, s)
    core = (r // g) * (s // g)
    if core > RADICAND_BOUND:
        raise RadicandOverflow(f"radicand {core} exceeds bound {RADICAND_BOUND}")
    return g, core


_TermMap = dict[int, tuple[Fraction, Fraction]]


class RadicalScalar:
    """Element of Q(i) adjoined all square roots of squarefree positive integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: _TermMap | None = None):
        """Build from a radicand -> (re, im) map; zero coefficients are dropped.

        Radicands must already be squarefree and positive; use
        :meth:`from_radicand` for raw radicands.
        """
        clean: _TermMap = {}
        if terms:
            for rad, (re, im) in terms.items():
                if re or im:
                    clean[rad] = (re, im)
        self._terms = clean
        self._hash: int | None = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, q: Fraction | int) -> RadicalScalar:
        q = Fraction(q)
        return cls({1: (q, Fraction(0))})

    @classmethod
    def gaussian(cls, re: Fraction | int, im: Fraction | int) -> RadicalScalar:
        return cls({1: (Fraction(re), Fraction(im))})

    @classmethod
    def from_radicand(
        cls, radicand: int, re: Fraction | int = 1, im: Fraction | int = 0
    ) -> RadicalScalar:
        """``(re + i*im) * sqrt(radicand)`` with square extraction applied."""
        if radicand > RADICAND_BOUND:
            raise RadicandOverflow(
                f"radicand {radicand} exceeds bound {RADICAND_BOUND}"
            )
        outer, core = squarefree_decompose(radicand)
        return cls({core: (Fraction(re) * outer, Fraction(im) * outer)})

    @classmethod
    def sqrt_rational(cls, q: Fraction | int) -> RadicalScalar:
        """Exact positive square root of a positive rational.

        For ``q = p/d`` the result is ``(outer / (b*d')) * sqrt(core)`` where
        numerator and denominator are square-decomposed separately and the
        squarefree leftovers are merged via gcd, so no large number is ever
        factored.
        """
        q = Fraction(q)
        if q <= 0:
            raise NonPositiveRadicand(f"cannot take sqrt of {q}")
        a, p_core = squarefree_decompose(q.numerator)
        b, d_core = squarefree_decompose(q.denominator)
        # sqrt(p_core/d_core) = sqrt(p_core*d_core)/d_core
        g, core = _merge_radicands(p_core, d_core)
        coeff = Fraction(a * g, b * d_core)
        return cls({core: (coeff, Fraction(0))})

    @classmethod
    def zero(cls) -> RadicalScalar:
        return cls()

    # -- views --------------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, Fraction, Fraction], ...]:
        """Terms as (radicand, re, im) triples, sorted by radicand."""
        return tuple(
            (rad, re, im) for rad, (re, im) in sorted(self._terms.items())
        )

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_rational(self) -> bool:
        """True when the value lies in Q (single radicand 1, no imaginary part)."""
        if not self._terms:
            return True
        if set(self._terms) != {1}:
            return False
        return self._terms[1][1] == 0

    def rational_value(self) -> Fraction:
        """The value as a Fraction; raises ValueError when not rational."""
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        if not self._terms:
            return Fraction(0)
        return self._terms[1][0]

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: RadicalScalar | Fraction | int) -> RadicalScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for rad, (re, im) in other._terms.items():
            if rad in out:
                cre, cim = out[rad]
                out[rad] = (cre + re, cim + im)
            else:
                out[rad] = (re, im)
        return RadicalScalar(out)

    __radd__ = __add__

    def __neg__(self) -> RadicalScalar:
        return RadicalScalar(
            {rad: (-re, -im) for rad, (re, im) in self._terms.items()}
        )

    def __sub__(self, other: RadicalScalar | Fraction | int) -> RadicalScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Fraction | int) -> RadicalScalar:
        return (-self) + other

    def __mul__(self, other: RadicalScalar | Fraction | int) -> RadicalScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: _TermMap = {}
        for r1, (a1, b1) in self._terms.items():
            for r2, (a2, b2) in other._terms.items():
                g, core = _merge_radicands(r1, r2)
                re = (a1 * a2 - b1 * b2) * g
                im = (a1 * b2 + b1 * a2) * g
                if core in out:
                    cre, cim = out[core]
                    out[core] = (cre + re, cim + im)
                else:
                    out[core] = (re, im)
        return RadicalScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RadicalScalar:
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = RadicalScalar.from_rational(1)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> RadicalScalar:
        return RadicalScalar(
            {rad: (re, -im) for rad, (re, im) in self._terms.items()}
        )

    def abs_squared(self) -> RadicalScalar:
        """``self * conj(self)``; real and non-negative."""
        return self * self.conjugate()

    # -- numeric bridge ------------------------------------------------------

    def to_complex(self) -> complex:
        """Double-precision value; term order fixed by radicand."""
        out = 0j
        for rad, re, im in self.terms:
            root = math.sqrt(rad)
            out += complex(float(re) * root, float(im) * root)
        return out

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RadicalScalar.from_rational(other)
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- rendering ------------------------------------------------------------

    def __str__(self) -> str:
        return render_scalar(self)

    def __repr__(self) -> str:
        return f"RadicalScalar({render_scalar(self)!r})"


def _coerce(value: object) -> RadicalScalar:
    if isinstance(value, RadicalScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return RadicalScalar.from_rational(value)
    return NotImplemented


ZERO = RadicalScalar.zero()
ONE = RadicalScalar.from_rational(1)
IMAG_UNIT = RadicalScalar.gaussian(0, 1)


def _render_product(mag: Fraction, imag: bool, radicand: int) -> str:
    """One primitive product: sign, rational magnitude, optional i, optional sqrt."""
    parts: list[str] = []
    sign = "-" if mag < 0 else ""
    mag = abs(mag)
    if mag != 1 or (not imag and radicand == 1):
        parts.append(str(mag))
    if imag:
        parts.append("i")
    if radicand != 1:
        parts.append(f"sqrt({radicand})")
    return sign + "*".join(parts)


def render_scalar(value: RadicalScalar) -> str:
    """Render in the textual grammar: sums of ``p/q * i * sqrt(r)`` products."""
    if value.is_zero:
        return "0"
    products = []
    for rad, re, im in value.terms:
        if re:
            products.append(_render_product(re, False, rad))
        if im:
            products.append(_render_product(im, True, rad))
    return " + ".join(products)
