"""Truncated Laurent series in w = e^{2*pi*i*z/N} over exact coefficients,
with the w*d/dw derivation, formal n-th roots of unit series, and
Dedekind-eta quotient expansion via the pentagonal-number theorem."""

from fractions import Fraction

from .exactnum import (
    AlgebraicNumber,
    NumberField,
    common_field as _common_field,
    domain_zero as _zero,
    lift as _lift,
)


class LaurentSeries:
    """Exact coefficients for exponents lead..prec-1; zero beyond is unknown,
    not asserted.  coeffs[0] is nonzero unless the series is 0 to precision."""

    __slots__ = ('width', 'lead', 'coeffs', 'field', 'prec')

    def __init__(self, width, lead, coeffs, field=None, prec=None):
        if width < 1:
            raise ValueError("width must be a positive integer")
        coeffs = [_lift(field, c) for c in coeffs]
        if prec is None:
            prec = lead + len(coeffs)
        if prec < lead + len(coeffs):
            coeffs = coeffs[:max(0, prec - lead)]
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            lead += 1
        while coeffs and not coeffs[-1]:
            # trailing zeros are kept implicitly by prec
            coeffs.pop()
        if not coeffs:
            lead = prec
        self.width = width
        self.lead = lead
        self.coeffs = tuple(coeffs)
        self.field = field
        self.prec = prec

    # -- basic views --------------------------------------------------
    @property
    def truncation(self):
        return self.prec - self.lead - 1

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, k):
        if k >= self.prec:
            raise ValueError(f"coefficient w^{k} is beyond precision {self.prec}")
        if k < self.lead or k - self.lead >= len(self.coeffs):
            return _zero(self.field)
        return self.coeffs[k - self.lead]

    def coefficients(self, lo, hi):
        return [self.coefficient(k) for k in range(lo, hi)]

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs[:6]):
            if c:
                parts.append(f"({c})w^{self.lead + i}")
        body = " + ".join(parts) if parts else "0"
        return f"LaurentSeries[N={self.width}]({body} + O(w^{self.prec}))"

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.width == other.width and self.lead == other.lead
                and self.prec == other.prec and self.coeffs == other.coeffs
                and self.field == other.field)

    def __hash__(self):
        return hash((self.width, self.lead, self.coeffs, self.prec))

    def agrees_with(self, other, lo=None, hi=None):
        """Coefficient-wise equality on the overlap of the known ranges."""
        if self.width != other.width:
            return False
        lo = max(self.lead, other.lead) if lo is None else lo
        hi = min(self.prec, other.prec) if hi is None else hi
        return all(self.coefficient(k) == other.coefficient(k)
                   for k in range(lo, hi))

    # -- ring operations ----------------------------------------------
    def _check_compat(self, other):
        if self.width != other.width:
            raise ValueError("width mismatch")
        return _common_field(self.field, other.field)

    def __add__(self, other):
        field = self._check_compat(other)
        prec = min(self.prec, other.prec)
        lead = min(self.lead, other.lead, prec)
        a = self.coefficients(lead, prec) if lead < prec else []
        b = other.coefficients(lead, prec) if lead < prec else []
        return LaurentSeries(self.width, lead,
                             [_lift(field, x) + _lift(field, y)
                              for x, y in zip(a, b)], field, prec)

    def __neg__(self):
        return LaurentSeries(self.width, self.lead, [-c for c in self.coeffs],
                             self.field, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        field = self._check_compat(other)
        if self.is_zero() or other.is_zero():
            # f = O(w^pf) times a series of lead l is O(w^(pf+l))
            if self.is_zero() and other.is_zero():
                prec = self.prec + other.prec
            elif self.is_zero():
                prec = self.prec + other.lead
            else:
                prec = other.prec + self.lead
            return LaurentSeries(self.width, prec, [], field, prec)
        lead = self.lead + other.lead
        prec = min(self.prec + other.lead, other.prec + self.lead)
        n = prec - lead
        a = [_lift(field, c) for c in self.coeffs]
        b = [_lift(field, c) for c in other.coeffs]
        out = [_zero(field)] * n
        for i, ai in enumerate(a):
            if not ai or i >= n:
                continue
            jmax = min(len(b), n - i)
            for j in range(jmax):
                if b[j]:
                    out[i + j] = out[i + j] + ai * b[j]
        return LaurentSeries(self.width, lead, out, field, prec)

    def scalar_mul(self, s):
        field = self.field
        if isinstance(s, AlgebraicNumber):
            field = _common_field(field, s.field)
        s = _lift(field, s)
        if not s:
            return LaurentSeries(self.width, self.prec, [], field, self.prec)
        return LaurentSeries(self.width, self.lead,
                             [_lift(field, c) * s for c in self.coeffs],
                             field, self.prec)

    def shift(self, k):
        """Multiply by w^k."""
        return LaurentSeries(self.width, self.lead + k, self.coeffs,
                             self.field, self.prec + k)

    def truncate(self, prec):
        if prec > self.prec:
            raise ValueError("cannot extend precision by truncation")
        return LaurentSeries(self.width, self.lead, self.coeffs, self.field, prec)

    def invert(self):
        """Reciprocal; the leading coefficient must be invertible (nonzero)."""
        if self.is_zero():
            raise ZeroDivisionError("cannot invert a series that is 0 to precision")
        field = self.field
        n = self.prec - self.lead
        c0 = self.coeffs[0]
        u = [_lift(field, c) / c0 for c in self.coefficients(self.lead, self.prec)]
        v = [_zero(field)] * n
        one = Fraction(1) if field is None else field.one()
        v[0] = one
        for k in range(1, n):
            acc = _zero(field)
            for j in range(1, min(k, len(u) - 1) + 1):
                if u[j] and v[k - j]:
                    acc = acc + u[j] * v[k - j]
            v[k] = -acc
        inv = [x / c0 for x in v]
        return LaurentSeries(self.width, -self.lead, inv, field,
                             -self.lead + n)

    def unit_normalized(self):
        """Strip to the form 1 + ... ; returns (unit, lead, leading_coeff).

        Ratios of root coefficients of the original series only depend on the
        unit part, so callers can account for the stripped monomial separately
        without enlarging the coefficient field.
        """
        if self.is_zero():
            raise ValueError("zero series has no unit normalization")
        c0 = self.coeffs[0]
        unit = LaurentSeries(self.width, 0,
                             [_lift(self.field, c) / c0 for c in self.coeffs],
                             self.field, self.prec - self.lead)
        return unit, self.lead, c0


def series_ring_ops(f, g, op):
    if op == 'add':
        return f + g
    if op == 'sub':
        return f - g
    if op == 'mul':
        return f * g
    raise ValueError(f"unknown op {op!r}")


def series_invert(f):
    return f.invert()


def series_pow(f, k):
    if k < 0:
        return series_pow(f.invert(), -k)
    acc = LaurentSeries(f.width, 0, [1], f.field, f.prec - f.lead)
    base = f
    while k:
        if k & 1:
            acc = acc * base
        base = base * base
        k >>= 1
    return acc


def derivation_wdw(f):
    """The derivation D = w * d/dw: multiply the w^k coefficient by k."""
    out = [c * Fraction(k) if f.field is None else c * k
           for k, c in zip(range(f.lead, f.prec), f.coeffs)]
    return LaurentSeries(f.width, f.lead, out, f.field, f.prec)


def nth_root_normalized(f, n):
    """Formal n-th root of f = 1 + c_1 w + ... with leading coefficient 1.

    Returns g = 1 + sum b_m w^m with g^n = f to precision; the recursion
    n*f*Dg = g*Df keeps every b_m inside the coefficient field of f.
    """
    if n < 1:
        raise ValueError("root degree must be a positive integer")
    if f.lead != 0 or f.is_zero() or f.coeffs[0] != 1:
        raise ValueError("nth root requires a normalized unit series 1 + O(w)")
    field = f.field
    T = f.prec
    c = f.coefficients(0, T)
    b = [_zero(field)] * T
    one = Fraction(1) if field is None else field.one()
    b[0] = one
    for k in range(1, T):
        acc = _zero(field)
        for j in range(1, k + 1):
            if c[j] and b[k - j]:
                acc = acc + (j * c[j]) * b[k - j]
        for j in range(1, k):
            if b[j] and c[k - j]:
                acc = acc - (n * j) * (b[j] * c[k - j])
        b[k] = acc / (n * k) if field is None else acc / field.from_rational(n * k)
    return LaurentSeries(f.width, 0, b, field, T)


# ----------------------------------------------------------------------
# Eta quotients.
# ----------------------------------------------------------------------

class EtaQuotient:
    """Finite product prod_delta eta(delta*z)^(r_delta), delta positive rational."""

    def __init__(self, terms):
        terms = [(Fraction(d), int(r)) for d, r in terms]
        if not terms:
            raise ValueError("eta quotient needs at least one term")
        if any(d <= 0 for d, _ in terms):
            raise ValueError("eta scales must be positive")
        self.terms = tuple(terms)

    def __repr__(self):
        return "EtaQuotient(%s)" % ", ".join(f"eta({d}z)^{r}" for d, r in self.terms)

    def minimal_width(self):
        """Smallest N for which the expansion lives in integer powers of w."""
        n = 1
        for d, _ in self.terms:
            # N*delta must be an integer
            n = n * d.denominator // _gcd(n, d.denominator)
        while True:
            tot = sum(Fraction(r) * d * n for d, r in self.terms) / 24
            if tot.denominator == 1 and all((n * d).denominator == 1
                                            for d, _ in self.terms):
                return n
            n += 1


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _pentagonal_coeffs(length, step):
    """Coefficients of prod_{n>=1} (1 - x^(step*n)) up to x^(length-1)."""
    c = [0] * length
    c[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2 * step
        g2 = k * (3 * k + 1) // 2 * step
        if g1 >= length and g2 >= length:
            break
        s = -1 if k % 2 else 1
        if g1 < length:
            c[g1] += s
        if g2 < length:
            c[g2] += s
        k += 1
    return c


def _imul_trunc(a, b, length):
    out = [0] * length
    for i, ai in enumerate(a):
        if not ai or i >= length:
            continue
        jmax = min(len(b), length - i)
        for j in range(jmax):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def _iinv_trunc(u, length):
    assert u[0] == 1
    v = [0] * length
    v[0] = 1
    for k in range(1, length):
        acc = 0
        for j in range(1, min(k, len(u) - 1) + 1):
            if u[j] and v[k - j]:
                acc += u[j] * v[k - j]
        v[k] = -acc
    return v


def _ipow_trunc(u, r, length):
    if r < 0:
        return _ipow_trunc(_iinv_trunc(u, length), -r, length)
    acc = [0] * length
    acc[0] = 1
    base = list(u[:length]) + [0] * max(0, length - len(u))
    while r:
        if r & 1:
            acc = _imul_trunc(acc, base, length)
        base = _imul_trunc(base, base, length)
        r >>= 1
    return acc


def eta_unit_product(eq, width, T):
    """The product part prod_delta prod_n (1 - w^(N*delta*n))^(r_delta) and the
    (possibly fractional) exponent of the stripped w^(N*sum r*delta/24)
    prefactor; needs only N*delta integral for every term."""
    if T < 0:
        raise ValueError("truncation must be nonnegative")
    steps = []
    for d, r in eq.terms:
        nd = Fraction(width) * d
        if nd.denominator != 1:
            raise ValueError(
                f"width {width} incompatible with eta({d}z): needs width divisible by {d.denominator}")
        steps.append((int(nd), r))
    lead = sum(Fraction(r) * d * width for d, r in eq.terms) / 24
    length = T + 1
    unit = [0] * length
    unit[0] = 1
    for step, r in steps:
        pent = _pentagonal_coeffs(length, step)
        unit = _imul_trunc(unit, _ipow_trunc(pent, r, length), length)
    return lead, LaurentSeries(width, 0, unit, None, length)


def eta_quotient_expand(eq, width, T):
    """Exact integer-coefficient expansion of an eta quotient at a given width.

    The width must make every factor's product part land on integer powers of
    w and the total q^(1/24)-prefactor land on an integer exponent.
    """
    lead, unit = eta_unit_product(eq, width, T)
    if lead.denominator != 1:
        raise ValueError(
            f"width {width} incompatible: leading exponent {lead} is not an integer "
            f"(minimal valid width is {eq.minimal_width()})")
    return unit.shift(int(lead))


# ----------------------------------------------------------------------
# Text serialization (bit-exact round trip).
# ----------------------------------------------------------------------

def _fmt_fraction(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def serialize_series(f):
    lines = ["series 1",
             f"width {f.width}",
             f"lead {f.lead}",
             f"truncation {f.prec - f.lead - 1}"]
    if f.field is None:
        lines.append("field rational")
    else:
        lines.append("field " + ",".join(str(c) for c in f.field.defining_poly))
    for k in range(f.lead, f.prec):
        c = f.coefficient(k)
        if f.field is None:
            lines.append(_fmt_fraction(c))
        else:
            lines.append(",".join(_fmt_fraction(x) for x in c.coords()))
    return "\n".join(lines) + "\n"


def deserialize_series(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].split() != ["series", "1"]:
        raise ValueError("bad series record header")
    header = {}
    i = 1
    while i < len(lines) and lines[i].split(maxsplit=1)[0] in ("width", "lead", "truncation", "field"):
        k, v = lines[i].split(maxsplit=1)
        header[k] = v
        i += 1
    width = int(header["width"])
    lead = int(header["lead"])
    trunc = int(header["truncation"])
    field = None
    if header["field"] != "rational":
        field = NumberField([int(c) for c in header["field"].split(",")])
    coeffs = []
    for ln in lines[i:]:
        if field is None:
            coeffs.append(Fraction(ln))
        else:
            coeffs.append(field.from_coords([Fraction(x) for x in ln.split(",")]))
    if len(coeffs) != trunc + 1:
        raise ValueError("series record length mismatch")
    return LaurentSeries(width, lead, coeffs, field, lead + trunc + 1)
