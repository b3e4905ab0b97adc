"""Truncated Laurent series over an exact coefficient ring.

A Series stores exact coefficients for every exponent e with
min_exp <= e < prec.  Coefficients below min_exp are known to be zero;
coefficients at e >= prec are unknown and may never be read.  This is an
absolute-precision model: every operation computes its output window
pessimistically, so a comparison that succeeds really has checked every
exponent below the reported bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .rings import INTEGER, RATIONAL, Ring, RingError, ring_from_tag


class SeriesError(ValueError):
    """Raised on precondition violations (window misuse, bad arguments)."""


class PrecisionError(SeriesError):
    """Raised when a coefficient beyond the known window is requested."""


@dataclass(frozen=True)
class Comparison:
    """Outcome of comparing two series over their common window.

    ``verified_through`` is exclusive: all exponents e < verified_through
    were checked.  On disagreement the first offending exponent and both
    coefficients are recorded.
    """

    equal: bool
    verified_through: int
    exponent: Optional[int] = None
    lhs: object = None
    rhs: object = None


class Series:
    """Immutable truncated Laurent series in q."""

    __slots__ = ("ring", "min_exp", "coeffs", "prec")

    def __init__(self, ring: Ring, min_exp: int, coeffs: Sequence, prec: int):
        coeffs = tuple(ring.coerce(c) for c in coeffs)
        if min_exp > prec:
            raise SeriesError(f"min_exp {min_exp} exceeds prec {prec}")
        if len(coeffs) != prec - min_exp:
            raise SeriesError(
                f"coefficient window has length {len(coeffs)}, "
                f"expected prec - min_exp = {prec - min_exp}"
            )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Series is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring, prec: int) -> "Series":
        """The series known to vanish below prec."""
        return cls(ring, prec, (), prec)

    @classmethod
    def constant(cls, ring: Ring, value, prec: int) -> "Series":
        if prec <= 0:
            return cls.zero(ring, prec)
        return cls(ring, 0, (value,) + (ring.zero,) * (prec - 1), prec)

    @classmethod
    def one(cls, ring: Ring, prec: int) -> "Series":
        return cls.constant(ring, ring.one, prec)

    @classmethod
    def monomial(cls, ring: Ring, exponent: int, prec: int, coeff=None) -> "Series":
        """coeff * q^exponent, known through prec."""
        if coeff is None:
            coeff = ring.one
        if prec <= exponent:
            return cls.zero(ring, prec)
        window = [ring.zero] * (prec - exponent)
        window[0] = coeff
        return cls(ring, exponent, window, prec)

    @classmethod
    def from_coeffs(cls, ring: Ring, min_exp: int, coeffs: Sequence, prec: Optional[int] = None) -> "Series":
        if prec is None:
            prec = min_exp + len(coeffs)
        pad = prec - min_exp - len(coeffs)
        if pad < 0:
            raise SeriesError("more coefficients than the window allows")
        return cls(ring, min_exp, tuple(coeffs) + (ring.zero,) * pad, prec)

    # -- basic accessors ---------------------------------------------------

    def coeff(self, e: int):
        """Exact coefficient at exponent e.

        Exponents below min_exp are known zeros; exponents at or beyond
        prec are unknown and raise rather than silently returning 0.
        """
        if e >= self.prec:
            raise PrecisionError(
                f"coefficient at q^{e} is beyond the known window "
                f"(prec {self.prec})"
            )
        if e < self.min_exp:
            return self.ring.zero
        return self.coeffs[e - self.min_exp]

    def valuation(self) -> Optional[int]:
        """Exponent of the first nonzero coefficient, or None if the
        series vanishes on its whole window."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.min_exp + i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def nonzero_items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        if self.ring != other.ring or self.prec != other.prec:
            return False
        lo = min(self.min_exp, other.min_exp)
        return all(
            self.coeff(e) == other.coeff(e) for e in range(lo, self.prec)
        )

    __hash__ = None

    def __repr__(self):
        terms = []
        for e, c in itertools.islice(self.nonzero_items(), 8):
            terms.append(f"{self.ring.coeff_to_text(c)}*q^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"<Series {self.ring.tag()} [{self.min_exp},{self.prec}) {body} ...>"

    # -- ring plumbing -----------------------------------------------------

    def _require_same_ring(self, other: "Series") -> None:
        if self.ring != other.ring:
            raise RingError(
                f"ring mismatch: {self.ring.tag()} vs {other.ring.tag()}"
            )

    def to_rational(self) -> "Series":
        """Promote an integer series into the rational ring."""
        if self.ring == RATIONAL:
            return self
        if self.ring != INTEGER:
            raise RingError("only integer series promote to rationals")
        return Series(RATIONAL, self.min_exp, [Fraction(c) for c in self.coeffs], self.prec)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_ring(other)
        min_exp = min(self.min_exp, other.min_exp)
        prec = min(self.prec, other.prec)
        if prec < min_exp:
            min_exp = prec
        out = [self.ring.zero] * (prec - min_exp)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                e = s.min_exp + i
                if e >= prec:
                    break
                if c:
                    out[e - min_exp] = out[e - min_exp] + c
        return Series(self.ring, min_exp, out, prec)

    def __neg__(self):
        return Series(self.ring, self.min_exp, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.__add__(-other)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_ring(other)
        min_exp = self.min_exp + other.min_exp
        prec = min(self.prec + other.min_exp, other.prec + self.min_exp)
        length = prec - min_exp
        if length <= 0:
            return Series.zero(self.ring, prec)
        out = [self.ring.zero] * length
        bcoeffs = other.coeffs
        nb = len(bcoeffs)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            jmax = min(nb, length - i)
            for j in range(jmax):
                b = bcoeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return Series(self.ring, min_exp, out, prec)

    def scale(self, c) -> "Series":
        """Multiply by an exact scalar; the window is unchanged."""
        c = self.ring.coerce(c)
        return Series(self.ring, self.min_exp, [c * x for x in self.coeffs], self.prec)

    def shift(self, k: int) -> "Series":
        """Multiply by q^k exactly; min_exp and prec both move by k."""
        if k == 0:
            return self
        return Series(self.ring, self.min_exp + k, self.coeffs, self.prec + k)

    def mul_binomial(self, c, e: int) -> "Series":
        """Multiply by the exact binomial (1 + c*q^e), e != 0.

        The binomial is exact, so only a negative e shrinks the window:
        the new window is [min_exp + min(0,e), prec + min(0,e)).
        """
        if e == 0:
            raise SeriesError("binomial exponent must be nonzero")
        c = self.ring.coerce(c)
        drop = min(0, e)
        min_exp = self.min_exp + drop
        prec = self.prec + drop
        out = [self.ring.zero] * (prec - min_exp)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            pos = self.min_exp + i - min_exp
            if pos < len(out):
                out[pos] = out[pos] + a
            pos += e
            if 0 <= pos < len(out):
                out[pos] = out[pos] + c * a
        return Series(self.ring, min_exp, out, prec)

    def div_binomial(self, c, e: int) -> "Series":
        """Divide by (1 - c*q^e) exactly, e >= 1; the window is unchanged."""
        if e < 1:
            raise SeriesError("binomial exponent must be positive")
        c = self.ring.coerce(c)
        out = [self.ring.zero] * (self.prec - self.min_exp)
        out[: len(self.coeffs)] = list(self.coeffs)
        for k in range(e, len(out)):
            prev = out[k - e]
            if prev:
                out[k] = out[k] + c * prev
        return Series(self.ring, self.min_exp, out, self.prec)

    def invert(self) -> "Series":
        """Multiplicative inverse.

        The first nonzero coefficient must be a unit (+-1 over the
        integers, nonzero over the rationals).  With valuation v the
        result has window [-v, prec - 2v): relative precision is
        preserved, absolute precision shrinks by 2v.
        """
        v = self.valuation()
        if v is None:
            raise SeriesError(
                f"cannot invert a series that vanishes through q^{self.prec - 1}"
            )
        lead = self.coeff(v)
        lead_inv = self.ring.invert_unit(lead, v)
        n_rel = self.prec - v
        a = [self.coeff(v + i) for i in range(n_rel)]
        b = [self.ring.zero] * n_rel
        b[0] = lead_inv
        for k in range(1, n_rel):
            acc = self.ring.zero
            for j in range(1, k + 1):
                aj = a[j]
                if aj:
                    acc = acc + aj * b[k - j]
            if acc:
                b[k] = -(lead_inv * acc)
        return Series(self.ring, -v, b, self.prec - 2 * v)

    def truncate(self, prec: int) -> "Series":
        """Restrict the window to exponents below prec (prec <= self.prec)."""
        if prec > self.prec:
            raise PrecisionError(
                f"cannot extend window: have prec {self.prec}, asked {prec}"
            )
        if prec >= self.prec:
            return self
        min_exp = min(self.min_exp, prec)
        return Series(self.ring, min_exp, self.coeffs[: prec - min_exp], prec)

    # -- substitutions and dissections --------------------------------------

    def inflate(self, t: int) -> "Series":
        """Substitute q -> q^t: the coefficient of q^n moves to q^(t*n).

        The output precision is exactly t*(prec-1)+1: every exponent
        below that bound is either t*n with n < prec or a non-multiple
        of t, and both are known.
        """
        if t < 1:
            raise SeriesError("inflation factor must be >= 1")
        if t == 1:
            return self
        min_exp = t * self.min_exp
        prec = max(t * (self.prec - 1) + 1, min_exp)
        out = [self.ring.zero] * (prec - min_exp)
        for i, c in enumerate(self.coeffs):
            if c:
                out[t * i] = c
        return Series(self.ring, min_exp, out, prec)

    def dissect(self, t: int, r: int) -> "Series":
        """Keep only exponents congruent to r mod t, in the original variable."""
        if t < 1:
            raise SeriesError("dissection modulus must be >= 1")
        if not 0 <= r < t:
            raise SeriesError(f"residue {r} out of range for modulus {t}")
        out = [
            c if (self.min_exp + i) % t == r else self.ring.zero
            for i, c in enumerate(self.coeffs)
        ]
        return Series(self.ring, self.min_exp, out, self.prec)

    def deflate(self, t: int, r: int) -> "Series":
        """Map the progression t*n + r onto n.

        Every nonzero coefficient must already sit on the progression;
        a stray coefficient raises, naming its exponent.
        """
        if t < 1:
            raise SeriesError("deflation modulus must be >= 1")
        if not 0 <= r < t:
            raise SeriesError(f"residue {r} out of range for modulus {t}")
        for e, c in self.nonzero_items():
            if e % t != r:
                raise SeriesError(
                    f"coefficient at q^{e} is off the progression "
                    f"{t}n+{r}; dissect first"
                )
        min_exp = -((r - self.min_exp) // t)  # ceil((min_exp - r) / t)
        prec = -((r - self.prec) // t)  # ceil((prec - r) / t)
        out = [self.ring.zero] * (prec - min_exp)
        for e, c in self.nonzero_items():
            out[(e - r) // t - min_exp] = c
        return Series(self.ring, min_exp, out, prec)

    def substitute_neg_q(self) -> "Series":
        """Substitute q -> -q: the coefficient at q^n picks up (-1)^n."""
        out = [
            -c if (self.min_exp + i) % 2 else c
            for i, c in enumerate(self.coeffs)
        ]
        return Series(self.ring, self.min_exp, out, self.prec)

    # -- comparison ----------------------------------------------------------

    def compare(self, other: "Series") -> Comparison:
        """Compare coefficients over the common window.

        Coefficients below either series' min_exp are exact zeros and
        participate in the comparison.  An empty common window signals a
        precision-management bug in the caller and raises.
        """
        self._require_same_ring(other)
        upper = min(self.prec, other.prec)
        if upper <= max(self.min_exp, other.min_exp) and upper <= min(
            self.min_exp, other.min_exp
        ):
            # Both windows are empty below upper: nothing was comparable.
            raise PrecisionError(
                f"empty comparison window (precs {self.prec}, {other.prec})"
            )
        lo = min(self.min_exp, other.min_exp)
        for e in range(lo, upper):
            a = self.coeff(e)
            b = other.coeff(e)
            if a != b:
                return Comparison(False, upper, e, a, b)
        return Comparison(True, upper)

    # -- serialization ---------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "ring": self.ring.tag(),
            "min_exp": self.min_exp,
            "prec": self.prec,
            "coeffs": [self.ring.coeff_to_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Series":
        ring = ring_from_tag(obj["ring"])
        coeffs = [ring.coeff_from_json(c) for c in obj["coeffs"]]
        return cls(ring, int(obj["min_exp"]), coeffs, int(obj["prec"]))

    def to_text(self) -> str:
        lines = [
            f"ring={self.ring.tag()} min_exp={self.min_exp} prec={self.prec}"
        ]
        for i, c in enumerate(self.coeffs):
            lines.append(f"q^{self.min_exp + i}: {self.ring.coeff_to_text(c)}")
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "Series":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        header = dict(part.split("=", 1) for part in lines[0].split())
        ring = ring_from_tag(header["ring"])
        coeffs = []
        for ln in lines[1:]:
            _, _, value = ln.partition(": ")
            if ring.kind == "cyclic-laurent":
                value = [int(v) for v in value.strip("()").split(",")]
            coeffs.append(ring.coeff_from_json(value))
        return cls(ring, int(header["min_exp"]), coeffs, int(header["prec"]))
