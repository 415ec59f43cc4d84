"""Exact field arithmetic over Q, GF(p) and small extension fields GF(p^k).

Rationals are represented by gmpy2.mpq when available (much faster), else
by fractions.Fraction; both keep values normalized with positive
denominator.  Prime and extension field elements are small immutable
wrapper objects that support the usual operators, promote Python ints
through the prime subfield, and refuse to combine across contexts.

Element text grammar:

    rationals:  "5", "-3", "n/d"
    GF(p):      integer literals, reduced mod p (fractions "a/b" accepted)
    GF(p^k):    polynomials in the generator t, e.g. "t+1", "2*t^2+t+4"

Canonical output is str(x) for rationals ("n" or "n/d" with d > 1), the
least nonnegative residue for GF(p), and a descending-degree polynomial
in t with coefficients reduced mod p for GF(p^k).
"""

from __future__ import annotations

import re

from .errors import (
    ContextMismatch,
    DivisionByZero,
    ParseError,
    ReducibleModulus,
    ZeroDenominator,
)

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a normal dependency
    from fractions import Fraction as Rational

MAX_EXTENSION_DEGREE = 8

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FieldContext:
    """Base class for field contexts; subclasses define the element type."""

    characteristic = None

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def label(self):
        raise NotImplementedError

    def __repr__(self):
        return self.label()


class Rationals(FieldContext):
    """The rational numbers, with exact arbitrary-precision arithmetic."""

    characteristic = 0

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        return Rational(value)

    def label(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def is_element(self, x):
        return isinstance(x, type(Rational(0)))

    def parse(self, text):
        m = _RATIONAL_RE.match(text.strip())
        if not m:
            raise ParseError(f"not a rational literal: {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return Rational(num)
        den = int(m.group(2))
        if den == 0:
            raise ZeroDenominator(f"zero denominator in {text!r}")
        return Rational(num, den)

    def format(self, x):
        return str(x)

    def sample(self, rng, height):
        """Uniform numerator and nonzero denominator in [-height, height]."""
        num = rng.randint(-height, height)
        den = 0
        while den == 0:
            den = rng.randint(-height, height)
        return Rational(num, den)


class PrimeFieldElement:
    """Element of GF(p), stored as the least nonnegative residue."""

    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.field != self.field:
                raise ContextMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.field)
        raise ContextMismatch(f"cannot combine {self.field} with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return PrimeFieldElement(self.value + other.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return PrimeFieldElement(self.value - other.value, self.field)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return PrimeFieldElement(self.value * other.value, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.value == 0:
            raise DivisionByZero(f"division by zero in {self.field}")
        inv = pow(other.value, self.field.p - 2, self.field.p)
        return PrimeFieldElement(self.value * inv, self.field)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return (self.field.one / self) ** (-n)
        return PrimeFieldElement(pow(self.value, n, self.field.p), self.field)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.field)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value} in {self.field}"


class PrimeField(FieldContext):
    """The prime field GF(p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, PrimeFieldElement):
            if value.field != self:
                raise ContextMismatch(f"{self} vs {value.field}")
            return value
        return PrimeFieldElement(value, self)

    def label(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def is_element(self, x):
        return isinstance(x, PrimeFieldElement) and x.field == self

    def parse(self, text):
        m = _RATIONAL_RE.match(text.strip())
        if not m:
            raise ParseError(f"not an element of {self}: {text!r}")
        num = self(int(m.group(1)))
        if m.group(2) is None:
            return num
        den = int(m.group(2))
        if den % self.p == 0:
            raise ZeroDenominator(f"denominator vanishes in {self}: {text!r}")
        return num / self(den)

    def format(self, x):
        return str(x.value)

    def sample(self, rng, height=None):
        return PrimeFieldElement(rng.randrange(self.p), self)


# -- polynomial helpers over GF(p), coefficients as int tuples (low first) --

def _poly_trim(c):
    n = len(c)
    while n > 0 and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        k = len(a) - 1 - dm
        f = (a[-1] * lead_inv) % p
        for i, mi in enumerate(m):
            a[k + i] = (a[k + i] - f * mi) % p
        a = list(_poly_trim(a))
    return _poly_trim(a)


def _poly_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        f = (a[-1] * lead_inv) % p
        q[k] = f
        for i, bi in enumerate(b):
            a[k + i] = (a[k + i] - f * bi) % p
        a = list(_poly_trim(a))
    return _poly_trim(q), _poly_trim(a)


def _poly_inv_mod(a, m, p):
    """Inverse of a modulo m over GF(p), via the extended Euclid algorithm."""
    r0, r1 = m, _poly_trim(a)
    s0, s1 = (), (1,)
    while r1:
        q, rem = _poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
        qs = _poly_mul(q, s1, p)
        s = [0] * max(len(s0), len(qs))
        for i, c in enumerate(s0):
            s[i] = c
        for i, c in enumerate(qs):
            s[i] = (s[i] - c) % p
        s0, s1 = s1, _poly_trim(s)
    if len(r0) != 1:
        raise DivisionByZero("element is not invertible")
    c = pow(r0[0], p - 2, p)
    return _poly_trim([x * c % p for x in s0])


def _is_irreducible(m, p):
    """Trial division by all monic polynomials of degree up to deg(m)/2."""
    deg = len(m) - 1
    if deg < 1 or m[-1] % p == 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for idx in range(p ** d):
            coeffs = []
            v = idx
            for _ in range(d):
                coeffs.append(v % p)
                v //= p
            coeffs.append(1)
            _, rem = _poly_divmod(m, tuple(coeffs), p)
            if not rem:
                return False
    return True


# Low-weight irreducible moduli over GF(2); other (p, k) pairs fall back to
# a deterministic search.
_GF2_MODULI = {
    2: (1, 1, 1),
    3: (1, 1, 0, 1),
    4: (1, 1, 0, 0, 1),
    5: (1, 0, 1, 0, 0, 1),
    6: (1, 1, 0, 0, 0, 0, 1),
    7: (1, 1, 0, 0, 0, 0, 0, 1),
    8: (1, 1, 0, 1, 1, 0, 0, 0, 1),
}


def default_modulus(p, k):
    """A built-in irreducible monic polynomial of degree k over GF(p)."""
    if p == 2 and k in _GF2_MODULI:
        return _GF2_MODULI[k]
    for idx in range(p ** k):
        coeffs = []
        v = idx
        for _ in range(k):
            coeffs.append(v % p)
            v //= p
        coeffs.append(1)
        if _is_irreducible(tuple(coeffs), p):
            return tuple(coeffs)
    raise ReducibleModulus(f"no irreducible polynomial found for GF({p}^{k})")


_TERM_RE = re.compile(r"^(?:(\d+)\*?)?t(?:\^(\d+))?$|^(\d+)$")


class ExtensionFieldElement:
    """Element of GF(p^k), stored as a coefficient tuple (low degree first)."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field):
        c = tuple(x % field.p for x in coeffs)
        self.coeffs = _poly_trim(c)
        self.field = field

    def _coerce(self, other):
        if isinstance(other, ExtensionFieldElement):
            if other.field != self.field:
                raise ContextMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return ExtensionFieldElement((other,), self.field)
        raise ContextMismatch(f"cannot combine {self.field} with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.field.p
        return ExtensionFieldElement(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return ExtensionFieldElement([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        prod = _poly_mul(self.coeffs, other.coeffs, self.field.p)
        return ExtensionFieldElement(
            _poly_mod(prod, self.field.modulus, self.field.p), self.field)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise DivisionByZero(f"division by zero in {self.field}")
        inv = _poly_inv_mod(self.coeffs, self.field.modulus, self.field.p)
        return ExtensionFieldElement(inv, self.field)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, ExtensionFieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _poly_trim((other % self.field.p,))
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"{self} in {self.field}"


class ExtensionField(FieldContext):
    """The extension field GF(p^k) with 2 <= k <= 8 and an irreducible modulus."""

    def __init__(self, p, k, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if not 2 <= k <= MAX_EXTENSION_DEGREE:
            raise ValueError(f"extension degree {k} outside 2..{MAX_EXTENSION_DEGREE}")
        if modulus is None:
            modulus = default_modulus(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}")
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.characteristic = p

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, ExtensionFieldElement):
            if value.field != self:
                raise ContextMismatch(f"{self} vs {value.field}")
            return value
        if isinstance(value, int):
            return ExtensionFieldElement((value,), self)
        return ExtensionFieldElement(tuple(value), self)

    @property
    def generator(self):
        return ExtensionFieldElement((0, 1), self)

    def label(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.k == self.k and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("GF", self.p, self.k, self.modulus))

    def is_element(self, x):
        return isinstance(x, ExtensionFieldElement) and x.field == self

    def parse(self, text):
        text = text.strip().replace(" ", "")
        if not text:
            raise ParseError("empty element literal")
        if text[0] == "+":
            text = text[1:]
        coeffs = [0] * self.k
        for signed in re.finditer(r"([+-]?)([^+-]+)", text):
            sign = -1 if signed.group(1) == "-" else 1
            m = _TERM_RE.match(signed.group(2))
            if not m:
                raise ParseError(f"bad term {signed.group(2)!r} in {text!r}")
            if m.group(3) is not None:
                c, e = int(m.group(3)), 0
            else:
                c = int(m.group(1)) if m.group(1) else 1
                e = int(m.group(2)) if m.group(2) else 1
            if e >= self.k:
                raise ParseError(f"degree {e} term exceeds field degree in {text!r}")
            coeffs[e] = (coeffs[e] + sign * c) % self.p
        return ExtensionFieldElement(coeffs, self)

    def format(self, x):
        if not x.coeffs:
            return "0"
        terms = []
        for e in range(len(x.coeffs) - 1, -1, -1):
            c = x.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append("t" if c == 1 else f"{c}*t")
            else:
                terms.append(f"t^{e}" if c == 1 else f"{c}*t^{e}")
        return "+".join(terms)

    def sample(self, rng, height=None):
        return ExtensionFieldElement(
            tuple(rng.randrange(self.p) for _ in range(self.k)), self)


_FIELD_RE = re.compile(r"^GF\((\d+)(?:\^(\d+))?\)$")


def parse_field(label):
    """Parse a field label: Q, GF(p) or GF(p^k)."""
    label = label.strip()
    if label in ("Q", "QQ"):
        return Rationals()
    m = _FIELD_RE.match(label)
    if not m:
        raise ParseError(f"bad field label {label!r}")
    p = int(m.group(1))
    if m.group(2) is None or int(m.group(2)) == 1:
        return PrimeField(p)
    return ExtensionField(p, int(m.group(2)))


def parse_element(text, ctx):
    """Parse an element literal in the given context."""
    return ctx.parse(text)


def format_element(x, ctx):
    """Canonical text form of an element."""
    return ctx.format(x)


_ARITH = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arith(a, b, op):
    """Apply one of add/sub/mul/div to two elements of the same context."""
    try:
        fn = _ARITH[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    try:
        return fn(a, b)
    except ZeroDivisionError as e:
        raise DivisionByZero(str(e) or "division by zero") from None
    except TypeError as e:
        raise ContextMismatch(str(e)) from None


def sample_element(ctx, rng, height):
    """Draw one element; uniform residues for finite fields, bounded-height rationals for Q."""
    if height < 1:
        raise ValueError("height bound must be >= 1")
    return ctx.sample(rng, height)
