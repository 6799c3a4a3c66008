"""Normal-ordered polynomials over the two uncoupled boson modes.

Everything is expressed in the plus/minus mode generators ``a+``, ``a+^dag``,
``a-``, ``a-^dag`` with ``[a, a^dag] = 1`` within each mode and all cross-mode
commutators zero.  A monomial is stored in the canonical word order
``(a+^dag)^p (a+)^q (a-^dag)^r (a-)^s``; an operator is a finite map from
monomials to :class:`~opcalc.radical.RadicalScalar` coefficients, which makes
the representation unique and turns identity checking into "is the difference
empty".

:func:`catalog` builds every named operator of the planar Landau system
(positions, momenta, guiding-centre coordinates, symmetry generators, ladder
operators, Casimir) for a concrete :class:`ParameterSet`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple

from .radical import IMAG_UNIT, ONE, RadicalScalar, Rational

#: Largest exponent op multiplication will produce before raising.
DEGREE_BOUND = 64


class DegreeOverflow(OverflowError):
    """A product pushed some exponent past :data:`DEGREE_BOUND`."""


class UnknownOperator(ValueError):
    """Operator name outside the catalog."""

    def __init__(self, name: str, offset: int | None = None):
        self.name = name
        self.offset = offset
        super().__init__(f"unknown operator name {name!r}")


class Monomial(NamedTuple):
    """Exponents of the canonical word (a+^dag)^p (a+)^q (a-^dag)^r (a-)^s."""

    p: int
    q: int
    r: int
    s: int

    @property
    def degree(self) -> int:
        return self.p + self.q + self.r + self.s


IDENTITY_MONOMIAL = Monomial(0, 0, 0, 0)

_TermMap = dict[Monomial, RadicalScalar]


def _mode_reorder(q1: int, p2: int):
    """Contraction weights for ``a^q1 (a^dag)^p2`` within one mode.

    a^q (a^dag)^p = sum_k k! C(q,k) C(p,k) (a^dag)^(p-k) a^(q-k); the k-th
    term contracts k annihilators against k creators.
    """
    for k in range(min(q1, p2) + 1):
        yield k, math.factorial(k) * math.comb(q1, k) * math.comb(p2, k)


class OperatorPoly:
    """Normal-ordered operator polynomial with exact radical coefficients.

    Treat instances as immutable; arithmetic returns new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: _TermMap | None = None):
        clean: _TermMap = {}
        if terms:
            for mono, coeff in terms.items():
                if not coeff.is_zero:
                    clean[Monomial(*mono)] = coeff
        self._terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> OperatorPoly:
        return cls()

    @classmethod
    def identity(cls) -> OperatorPoly:
        return cls({IDENTITY_MONOMIAL: ONE})

    @classmethod
    def from_monomial(
        cls, mono: Monomial | tuple[int, int, int, int], coeff: RadicalScalar = ONE
    ) -> OperatorPoly:
        return cls({Monomial(*mono): coeff})

    @classmethod
    def from_scalar(cls, value: RadicalScalar | Fraction | int) -> OperatorPoly:
        if not isinstance(value, RadicalScalar):
            value = RadicalScalar.from_rational(value)
        return cls({IDENTITY_MONOMIAL: value})

    # -- views ----------------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[Monomial, RadicalScalar], ...]:
        """Terms in graded-lex order, highest first (the print order)."""
        key = lambda item: (item[0].degree,) + tuple(item[0])
        return tuple(sorted(self._terms.items(), key=key, reverse=True))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Max total degree over monomials; -1 for the zero operator."""
        if not self._terms:
            return -1
        return max(m.degree for m in self._terms)

    @property
    def creation_degree(self) -> int:
        """Max creation exponent in either mode; 0 for the zero operator."""
        if not self._terms:
            return 0
        return max(max(m.p, m.r) for m in self._terms)

    def coefficient(self, mono: Monomial | tuple[int, int, int, int]) -> RadicalScalar:
        return self._terms.get(Monomial(*mono), RadicalScalar.zero())

    # -- algebra ----------------------------------------------------------------

    def __add__(self, other: OperatorPoly) -> OperatorPoly:
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            if mono in out:
                out[mono] = out[mono] + coeff
            else:
                out[mono] = coeff
        return OperatorPoly(out)

    def __neg__(self) -> OperatorPoly:
        return OperatorPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: OperatorPoly) -> OperatorPoly:
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, value: RadicalScalar | Fraction | int) -> OperatorPoly:
        if not isinstance(value, RadicalScalar):
            value = RadicalScalar.from_rational(value)
        return OperatorPoly({m: c * value for m, c in self._terms.items()})

    def __mul__(
        self, other: OperatorPoly | RadicalScalar | Fraction | int
    ) -> OperatorPoly:
        if not isinstance(other, OperatorPoly):
            if isinstance(other, (RadicalScalar, Fraction, int)):
                return self.scale(other)
            return NotImplemented
        out: _TermMap = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                if (
                    m1.p + m2.p > DEGREE_BOUND
                    or m1.q + m2.q > DEGREE_BOUND
                    or m1.r + m2.r > DEGREE_BOUND
                    or m1.s + m2.s > DEGREE_BOUND
                ):
                    raise DegreeOverflow(
                        f"product exponent exceeds bound {DEGREE_BOUND}"
                    )
                c12 = c1 * c2
                for k, wk in _mode_reorder(m1.q, m2.p):
                    for j, wj in _mode_reorder(m1.s, m2.r):
                        mono = Monomial(
                            m1.p + m2.p - k,
                            m1.q + m2.q - k,
                            m1.r + m2.r - j,
                            m1.s + m2.s - j,
                        )
                        coeff = c12 * (wk * wj)
                        if mono in out:
                            out[mono] = out[mono] + coeff
                        else:
                            out[mono] = coeff
        return OperatorPoly(out)

    def __rmul__(self, other: RadicalScalar | Fraction | int) -> OperatorPoly:
        if isinstance(other, (RadicalScalar, Fraction, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> OperatorPoly:
        if n < 0:
            raise ValueError("negative operator powers are not supported")
        out = OperatorPoly.identity()
        for _ in range(n):
            out = out * self
        return out

    def dagger(self) -> OperatorPoly:
        """Hermitian adjoint.

        The adjoint word of ``(a+^dag)^p (a+)^q (a-^dag)^r (a-)^s`` is already
        normal ordered once cross-mode factors are commuted back into place,
        so this is the exponent swap (p,q,r,s) -> (q,p,s,r) with conjugated
        coefficients.
        """
        return OperatorPoly(
            {
                Monomial(m.q, m.p, m.s, m.r): c.conjugate()
                for m, c in self._terms.items()
            }
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        from .expr import render_poly

        return f"OperatorPoly({render_poly(self)!r})"


def commutator(a: OperatorPoly, b: OperatorPoly) -> OperatorPoly:
    return a * b - b * a


@dataclass(frozen=True)
class ParameterSet:
    """Exact physical parameters.

    ``charge`` is the magnitude of the particle charge; ``b_field`` is the
    signed magnetic field and must be nonzero.  The oscillator frequency
    ``omega`` is always derived as charge*|B|/(2*mass), never set directly.
    """

    hbar: Fraction = Fraction(1)
    mass: Fraction = Fraction(1)
    charge: Fraction = Fraction(1)
    b_field: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("hbar", "mass", "charge", "b_field"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.hbar <= 0 or self.mass <= 0 or self.charge <= 0:
            raise ValueError("hbar, mass and charge must be positive")
        if self.b_field == 0:
            raise ValueError("b_field must be nonzero")

    @property
    def abs_b(self) -> Fraction:
        return abs(self.b_field)

    @property
    def sgn_b(self) -> int:
        return 1 if self.b_field > 0 else -1

    @property
    def omega(self) -> Fraction:
        return self.charge * self.abs_b / (2 * self.mass)


def _ladder_primitives() -> dict[str, OperatorPoly]:
    return {
        "apd": OperatorPoly.from_monomial((1, 0, 0, 0)),
        "ap": OperatorPoly.from_monomial((0, 1, 0, 0)),
        "amd": OperatorPoly.from_monomial((0, 0, 1, 0)),
        "am": OperatorPoly.from_monomial((0, 0, 0, 1)),
    }


@lru_cache(maxsize=None)
def catalog(name: str, params: ParameterSet) -> OperatorPoly:
    """Named operator of the planar Landau system, expanded over the +/- modes.

    Sign-of-B dependent entries (guiding-centre coordinates ``xo``/``yo`` and
    the ladder pair ``Jp``/``Jm``) pick their branch from ``params.sgn_b``.
    """
    if name not in CATALOG_NAMES:
        raise UnknownOperator(name)
    prim = _ladder_primitives()
    apd, ap, amd, am = prim["apd"], prim["ap"], prim["amd"], prim["am"]
    if name in prim:
        return prim[name]
    if name == "I":
        return OperatorPoly.identity()

    ident = OperatorPoly.identity()
    sqrt_half = RadicalScalar.sqrt_rational(Fraction(1, 2))
    hbar, mass, charge = params.hbar, params.mass, params.charge
    b, abs_b, sgn, omega = params.b_field, params.abs_b, params.sgn_b, params.omega

    if name == "ax":
        return (ap + am).scale(sqrt_half)
    if name == "axd":
        return (apd + amd).scale(sqrt_half)
    if name == "ay":
        return (ap - am).scale(IMAG_UNIT * sqrt_half)
    if name == "ayd":
        return (apd - amd).scale(-IMAG_UNIT * sqrt_half)
    if name == "x":
        c = RadicalScalar.sqrt_rational(hbar / (2 * mass * omega))
        return (catalog("axd", params) + catalog("ax", params)).scale(c)
    if name == "y":
        c = RadicalScalar.sqrt_rational(hbar / (2 * mass * omega))
        return (catalog("ayd", params) + catalog("ay", params)).scale(c)
    if name == "Px":
        c = IMAG_UNIT * RadicalScalar.sqrt_rational(hbar * mass * omega / 2)
        return (catalog("axd", params) - catalog("ax", params)).scale(c)
    if name == "Py":
        c = IMAG_UNIT * RadicalScalar.sqrt_rational(hbar * mass * omega / 2)
        return (catalog("ayd", params) - catalog("ay", params)).scale(c)
    if name == "Np":
        return OperatorPoly.from_monomial((1, 1, 0, 0))
    if name == "Nm":
        return OperatorPoly.from_monomial((0, 0, 1, 1))
    if name in ("Mz", "Lz", "J3", "X3"):
        diff = OperatorPoly.from_monomial((1, 1, 0, 0)) - OperatorPoly.from_monomial(
            (0, 0, 1, 1)
        )
        return diff.scale(hbar)
    if name == "H2":
        tot = (
            OperatorPoly.from_monomial((1, 1, 0, 0))
            + OperatorPoly.from_monomial((0, 0, 1, 1))
            + ident
        )
        return tot.scale(hbar * omega)
    if name == "H3":
        diff = OperatorPoly.from_monomial((1, 1, 0, 0)) - OperatorPoly.from_monomial(
            (0, 0, 1, 1)
        )
        return diff.scale(hbar * charge * b / (2 * mass))
    if name == "H23":
        return catalog("H2", params) + catalog("H3", params)
    if name == "xo":
        c = RadicalScalar.sqrt_rational(hbar / (mass * omega)) * Fraction(1, 2)
        pair = (amd + am) if sgn > 0 else (apd + ap)
        return pair.scale(c)
    if name == "yo":
        c = (
            IMAG_UNIT
            * RadicalScalar.sqrt_rational(hbar / (mass * omega))
            * Fraction(sgn, 2)
        )
        pair = (amd - am) if sgn > 0 else (apd - ap)
        return pair.scale(c)
    if name == "J1":
        return catalog("yo", params).scale(-RadicalScalar.sqrt_rational(charge) * b)
    if name == "J2":
        return catalog("xo", params).scale(RadicalScalar.sqrt_rational(charge) * b)
    if name == "Jp":
        c = IMAG_UNIT * RadicalScalar.sqrt_rational(hbar * abs_b)
        return am.scale(c) if sgn > 0 else apd.scale(-c)
    if name == "Jm":
        c = IMAG_UNIT * RadicalScalar.sqrt_rational(hbar * abs_b)
        return amd.scale(-c) if sgn > 0 else ap.scale(c)
    if name == "Cbar":
        j1 = catalog("J1", params)
        j2 = catalog("J2", params)
        j3 = catalog("J3", params)
        return j1 * j1 + j2 * j2 + j3.scale(2 * b)
    if name == "X1":
        return catalog("Px", params).scale(
            -RadicalScalar.sqrt_rational(Fraction(1) / charge)
        )
    if name == "X2":
        return catalog("Py", params).scale(
            -RadicalScalar.sqrt_rational(Fraction(1) / charge)
        )
    if name == "W1":
        return catalog("y", params).scale(
            -RadicalScalar.sqrt_rational(charge) * (b / 2)
        )
    if name == "W2":
        return catalog("x", params).scale(
            RadicalScalar.sqrt_rational(charge) * (b / 2)
        )
    if name == "CE2":
        x1 = catalog("X1", params)
        x2 = catalog("X2", params)
        return x1 * x1 + x2 * x2
    raise UnknownOperator(name)  # pragma: no cover


CATALOG_NAMES: tuple[str, ...] = (
    "I",
    "ap",
    "am",
    "apd",
    "amd",
    "ax",
    "ay",
    "axd",
    "ayd",
    "x",
    "y",
    "Px",
    "Py",
    "Np",
    "Nm",
    "Mz",
    "Lz",
    "H2",
    "H3",
    "H23",
    "xo",
    "yo",
    "J1",
    "J2",
    "J3",
    "Jp",
    "Jm",
    "Cbar",
    "X1",
    "X2",
    "X3",
    "W1",
    "W2",
    "CE2",
)

#: Signature shared by :func:`catalog` and any test double of it.
CatalogFn = Callable[[str, ParameterSet], OperatorPoly]
