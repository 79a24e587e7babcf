"""Exact coefficient arithmetic: rationals, number fields, p-adic valuations.

Number fields are presented by a single monic irreducible integer polynomial.
Valuations above a rational prime p are read off Newton polygons of minimal
polynomials; a single coherent valuation is only used when the extension of
val_p to the field is provably unique (totally ramified segment, or a one
segment polygon with irreducible residual polynomial).
"""

from fractions import Fraction
import math

import sympy

INFINITY = math.inf  # valuation of 0


def is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def val_p(r, p):
    """p-adic valuation of a rational; INFINITY for 0."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    r = Fraction(r)
    if r == 0:
        return INFINITY
    v = 0
    num, den = r.numerator, r.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


# ----------------------------------------------------------------------
# Dense univariate polynomials over Q, coefficient lists low degree first.
# ----------------------------------------------------------------------

def qp_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def qp_deg(c):
    return len(c) - 1


def qp_add(a, b):
    n = max(len(a), len(b))
    return qp_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                    for i in range(n)])


def qp_neg(a):
    return [-x for x in a]


def qp_sub(a, b):
    return qp_add(a, qp_neg(b))


def qp_scale(a, s):
    if s == 0:
        return []
    return [x * s for x in a]


def qp_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return qp_trim(out)


def qp_divmod(a, b):
    """Exact polynomial division with remainder over Q."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lb = Fraction(b[-1])
    while len(qp_trim(a)) >= len(b):
        a = qp_trim(a)
        k = len(a) - len(b)
        f = a[-1] / lb
        q[k] = f
        for i, bi in enumerate(b):
            a[k + i] -= f * bi
    return qp_trim(q), qp_trim(a)


def qp_eval(c, x):
    acc = Fraction(0) if not isinstance(x, AlgebraicNumber) else x.field.zero()
    for ci in reversed(c):
        acc = acc * x + ci
    return acc


def qp_derivative(c):
    return qp_trim([i * ci for i, ci in enumerate(c)][1:])


def qp_monic(c):
    c = qp_trim(c)
    if not c:
        return c
    lc = c[-1]
    return [Fraction(x) / lc for x in c]


def qp_gcd(a, b):
    a, b = qp_trim(a), qp_trim(b)
    while b:
        a, b = b, qp_divmod(a, b)[1]
    return qp_monic(a)


def qp_shift(c, a):
    """Coefficients of f(x + a)."""
    out = []
    for ci in reversed(c):
        out = qp_add(qp_mul(out, [a, 1]), [ci])
    return out


def qp_resultant(f, g):
    """Resultant of two rational polynomials, by the Euclidean recurrence."""
    f, g = [Fraction(x) for x in qp_trim(f)], [Fraction(x) for x in qp_trim(g)]
    if not f or not g:
        return Fraction(0)
    res = Fraction(1)
    while True:
        if len(g) == 1:
            return res * g[0] ** (len(f) - 1)
        _, r = qp_divmod(f, g)
        r = qp_trim(r)
        if not r:
            return Fraction(0)
        res *= (Fraction(-1) ** ((len(f) - 1) * (len(g) - 1))
                * g[-1] ** (len(f) - len(r)))
        f, g = g, r


def qp_content_primitive(c):
    """Split an integer polynomial into content and primitive part."""
    c = qp_trim(c)
    if not c:
        return 0, []
    g = 0
    for x in c:
        g = math.gcd(g, abs(int(x)))
    sign = 1 if c[-1] > 0 else -1
    g *= sign
    return g, [int(x) // g for x in c]


def qp_integerize_monic(c):
    """Rescale a monic rational polynomial so that d*root satisfies a monic
    integer polynomial; returns (integer coefficients, d)."""
    c = qp_monic(c)
    n = qp_deg(c)
    need = {}
    for i, ci in enumerate(c[:-1]):
        den = Fraction(ci).denominator
        k = n - i  # c_i picks up a factor d^k
        f = 2
        while f * f <= den:
            e = 0
            while den % f == 0:
                den //= f
                e += 1
            if e:
                need[f] = max(need.get(f, 0), (e + k - 1) // k)
            f += 1
        if den > 1:
            need[den] = max(need.get(den, 0), 1)
    d = 1
    for q, e in need.items():
        d *= q ** e
    out = [Fraction(ci) * Fraction(d) ** (n - i) for i, ci in enumerate(c)]
    assert all(x.denominator == 1 for x in out)
    return [int(x) for x in out], d


def _to_sympy_poly(c, modulus=None):
    x = sympy.Symbol('x')
    coeffs = [sympy.Rational(Fraction(v).numerator, Fraction(v).denominator)
              for v in reversed(qp_trim(c))]
    if modulus is None:
        return sympy.Poly(coeffs, x, domain='QQ')
    return sympy.Poly([int(v) for v in coeffs], x, modulus=modulus)


def factor_poly_q(c):
    """Irreducible factorization over Q of a rational polynomial.

    Returns (rational content, [(primitive integer factor, multiplicity)]).
    """
    poly = _to_sympy_poly(c)
    cont, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        fc = [Fraction(int(v.numerator), int(v.denominator))
              for v in reversed(fac.all_coeffs())]
        g, prim = qp_content_primitive([int(v) for v in fc])
        cont *= sympy.Integer(g) ** mult
        out.append((prim, mult))
    return Fraction(int(sympy.fraction(cont)[0]), int(sympy.fraction(cont)[1])), out


def poly_is_irreducible_q(c):
    c = qp_trim(c)
    if qp_deg(c) < 1:
        return False
    _, factors = factor_poly_q(c)
    return len(factors) == 1 and factors[0][1] == 1


def poly_is_irreducible_modp(c, p):
    c = [int(x) % p for x in c]
    if qp_deg(qp_trim(c)) < 1:
        return False
    return _to_sympy_poly(c, modulus=p).is_irreducible


# ----------------------------------------------------------------------
# Number fields and algebraic numbers.
# ----------------------------------------------------------------------

class NumberField:
    """Q[t]/(f) for a monic irreducible integer polynomial f."""

    def __init__(self, coeffs, name='t'):
        coeffs = qp_trim(coeffs)
        if not coeffs or coeffs[-1] != 1:
            raise ValueError("defining polynomial must be monic")
        if any(Fraction(c).denominator != 1 for c in coeffs):
            raise ValueError("defining polynomial must have integer coefficients")
        if qp_deg(coeffs) < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        coeffs = [int(c) for c in coeffs]
        if not poly_is_irreducible_q(coeffs):
            raise ValueError("defining polynomial is reducible over Q")
        self.defining_poly = tuple(coeffs)
        self.degree = qp_deg(coeffs)
        self.name = name
        # integer reduction rows: t^(d+j) = rows[j] in the power basis
        d = self.degree
        rows = []
        cur = [-c for c in coeffs[:-1]]  # t^d
        rows.append(list(cur))
        for _ in range(d - 2):
            cur = [0] + cur
            top = cur.pop()  # coefficient of t^d
            cur = [ci + top * ri for ci, ri in zip(cur, rows[0])]
            rows.append(list(cur))
        self._red_rows = rows
        self._unique_prime_cache = {}

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.defining_poly):
            if c:
                terms.append(f"{c}*{self.name}^{i}")
        return f"NumberField({' + '.join(terms)})"

    def __eq__(self, other):
        return (isinstance(other, NumberField)
                and self.defining_poly == other.defining_poly)

    def __hash__(self):
        return hash(self.defining_poly)

    def zero(self):
        return AlgebraicNumber(self, (0,) * self.degree, 1)

    def one(self):
        return self.from_rational(1)

    def gen(self):
        num = [0] * self.degree
        if self.degree == 1:
            return self.from_rational(-self.defining_poly[0])
        num[1] = 1
        return AlgebraicNumber(self, tuple(num), 1)

    def from_rational(self, r):
        r = Fraction(r)
        num = [0] * self.degree
        num[0] = r.numerator
        return AlgebraicNumber(self, tuple(num), r.denominator)

    def from_coords(self, coords):
        coords = [Fraction(c) for c in coords]
        if len(coords) != self.degree:
            raise ValueError("coordinate vector length must equal field degree")
        den = 1
        for c in coords:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return AlgebraicNumber(self, tuple(c.numerator * (den // c.denominator)
                                           for c in coords), den)

    def element(self, value):
        if isinstance(value, AlgebraicNumber):
            if value.field != self:
                raise ValueError("element of a different number field")
            return value
        return self.from_rational(value)


class AlgebraicNumber:
    """Element of a NumberField: integer coordinate vector over a common
    positive denominator, in the power basis of the generator."""

    __slots__ = ('field', 'num', 'den')

    def __init__(self, field, num, den):
        if den < 0:
            num = tuple(-x for x in num)
            den = -den
        g = den
        for x in num:
            g = math.gcd(g, abs(x))
            if g == 1:
                break
        if g > 1:
            num = tuple(x // g for x in num)
            den //= g
        self.field = field
        self.num = tuple(num)
        self.den = den

    # -- construction helpers --------------------------------------
    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field != self.field:
                raise ValueError("mixed number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    # -- predicates -------------------------------------------------
    def __bool__(self):
        return any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("not a rational element")
        return Fraction(self.num[0], self.den)

    def coords(self):
        return tuple(Fraction(x, self.den) for x in self.num)

    # -- arithmetic --------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        da, db = self.den, o.den
        num = tuple(x * db + y * da for x, y in zip(self.num, o.num))
        return AlgebraicNumber(self.field, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.field, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.field.degree
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(self.num):
            if x:
                for j, y in enumerate(o.num):
                    if y:
                        conv[i + j] += x * y
        rows = self.field._red_rows
        out = conv[:d]
        for j in range(d, 2 * d - 1):
            c = conv[j]
            if c:
                row = rows[j - d]
                for k in range(d):
                    out[k] += c * row[k]
        return AlgebraicNumber(self.field, tuple(out), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("division by zero in number field")
        # extended Euclid in Q[t] against the defining polynomial
        f = [Fraction(c) for c in self.field.defining_poly]
        g = list(self.coords())
        s0, s1 = [], [Fraction(1)]
        a, b = f, qp_trim(g)
        while qp_deg(qp_trim(b)) > 0:
            q, r = qp_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, qp_sub(s0, qp_mul(q, s1))
            if not b:
                raise ZeroDivisionError("element is a zero divisor (reducible field?)")
        c = b[0]  # nonzero constant
        inv = qp_scale(s1, Fraction(1) / c)
        inv = (inv + [Fraction(0)] * self.field.degree)[:self.field.degree]
        return self.field.from_coords(inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        acc = self.field.one()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return self.is_rational() and self.as_fraction() == other
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return (self.field == other.field and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.field, self.num, self.den))

    def __repr__(self):
        t = self.field.name
        parts = []
        for i, c in enumerate(self.coords()):
            if c:
                parts.append(str(c) if i == 0 else
                             (f"{c}*{t}" if i == 1 else f"{c}*{t}^{i}"))
        return " + ".join(parts) if parts else "0"


def lift(field, v):
    """Coerce v into the coefficient domain (Q when field is None)."""
    if field is None:
        if isinstance(v, AlgebraicNumber):
            return v.as_fraction()
        return Fraction(v)
    if isinstance(v, AlgebraicNumber):
        if v.field != field:
            raise ValueError("coefficient from a different number field")
        return v
    return field.from_rational(v)


def domain_zero(field):
    return Fraction(0) if field is None else field.zero()


def domain_one(field):
    return Fraction(1) if field is None else field.one()


def common_field(f1, f2):
    if f1 is None:
        return f2
    if f2 is None or f1 == f2:
        return f1
    raise ValueError("mixed number fields")


# dense polynomials over an arbitrary exact domain (Q or a number field)

def dp_trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def dp_add(a, b, zero):
    n = max(len(a), len(b))
    return dp_trim([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero)
                    for i in range(n)])


def dp_neg(a):
    return [-x for x in a]


def dp_mul(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return dp_trim(out)


def dp_divmod(a, b, zero):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [zero] * max(0, len(a) - len(b) + 1)
    while len(dp_trim(a)) >= len(b):
        a = dp_trim(a)
        k = len(a) - len(b)
        f = a[-1] / b[-1]
        q[k] = f
        for i, bi in enumerate(b):
            a[k + i] = a[k + i] - f * bi
    return dp_trim(q), dp_trim(a)


def dp_gcd_monic(a, b, zero):
    a, b = dp_trim(a), dp_trim(b)
    while b:
        a, b = b, dp_divmod(a, b, zero)[1]
    if a:
        lc = a[-1]
        a = [x / lc for x in a]
    return a


def dp_eval(c, x, zero):
    acc = zero
    for ci in reversed(c):
        acc = acc * x + ci
    return acc


def nf_arith(a, b, op):
    """Field arithmetic on two elements of the same number field."""
    if isinstance(a, AlgebraicNumber):
        b = a._coerce(b)
    elif isinstance(b, AlgebraicNumber):
        a = b._coerce(a)
    else:
        a, b = Fraction(a), Fraction(b)
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ----------------------------------------------------------------------
# Exact linear algebra over Q (small systems).
# ----------------------------------------------------------------------

def solve_linear(rows, rhs):
    """Solve M x = rhs over Q; returns None if inconsistent/no solution.

    rows: list of rows of M (each a list of Fractions), len(rows) equations.
    """
    m = [list(map(Fraction, r)) + [Fraction(v)] for r, v in zip(rows, rhs)]
    neq = len(m)
    ncol = len(m[0]) - 1 if m else 0
    piv_cols = []
    r = 0
    for c in range(ncol):
        piv = next((i for i in range(r, neq) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(neq):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
        if r == neq:
            break
    for i in range(r, neq):
        if m[i][ncol] != 0:
            return None
    x = [Fraction(0)] * ncol
    for i, c in enumerate(piv_cols):
        x[c] = m[i][ncol]
    return x


def min_poly(a):
    """Monic minimal polynomial over Q of an algebraic number.

    Found as the first linear dependence among the powers of a.
    """
    if isinstance(a, (int, Fraction)):
        return [-Fraction(a), Fraction(1)]
    d = a.field.degree
    powers = [a.field.one()]
    for _ in range(d):
        powers.append(powers[-1] * a)
    coords = [list(p.coords()) for p in powers]
    for k in range(1, d + 1):
        # is a^k a combination of 1, a, ..., a^(k-1)?
        rows = [[coords[j][i] for j in range(k)] for i in range(d)]
        sol = solve_linear(rows, coords[k])
        if sol is not None:
            return [-s for s in sol] + [Fraction(1)]
    raise RuntimeError("no linear dependence found (broken field arithmetic)")


def field_norm(a):
    """Norm from the field of a down to Q, as the resultant of the defining
    polynomial with the coordinate polynomial of a."""
    if isinstance(a, (int, Fraction)):
        return Fraction(a)
    f = [Fraction(c) for c in a.field.defining_poly]
    g = list(a.coords())
    return qp_resultant(f, g)


# ----------------------------------------------------------------------
# Newton polygons and valuation profiles.
# ----------------------------------------------------------------------

class ValuationProfile:
    """Multiset of possible valuations of an element at primes above p,
    from the Newton polygon of its minimal polynomial (ord(p) = 1)."""

    def __init__(self, prime, slopes, unique_extension):
        self.prime = prime
        self.slopes = tuple(sorted(slopes))  # (valuation, multiplicity)
        self.unique_extension = unique_extension

    def values(self):
        return [v for v, _ in self.slopes]

    def min_value(self):
        return min(self.values())

    def max_value(self):
        return max(self.values())

    def __repr__(self):
        s = ", ".join(f"({v} x{m})" for v, m in self.slopes)
        return f"ValuationProfile(p={self.prime}, slopes=[{s}], unique={self.unique_extension})"


def lower_hull_slopes(points):
    """Slopes of the lower convex hull of (i, v) points, left to right.

    Returns [(slope, horizontal length), ...]; points with v = INFINITY are
    treated as absent (only possible in the interior).
    """
    pts = [(i, v) for i, v in points if v != INFINITY]
    if len(pts) < 2:
        return []
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies above the segment hull[-2]..pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    out = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        out.append((Fraction(y2 - y1, x2 - x1), x2 - x1))
    return out


def _segment_residual(coeffs, p, i0, i1, v0, slope):
    """Residual polynomial of one Newton polygon segment, over F_p."""
    e = slope.denominator
    d = (i1 - i0) // e
    res = []
    for j in range(d + 1):
        i = i0 + j * e
        target = v0 + slope * (i - i0)
        c = Fraction(coeffs[i])
        if c == 0:
            res.append(0)
            continue
        v = val_p(c, p)
        if v > target:
            res.append(0)
        else:
            # c / p^target reduced mod p; target is an integer on segment ticks
            t = int(target)
            red = Fraction(c, Fraction(p) ** t)
            num = red.numerator % p
            den = red.denominator % p
            res.append((num * pow(den, -1, p)) % p)
    return res


def newton_polygon_points(coeffs, p):
    return [(i, val_p(Fraction(c), p)) for i, c in enumerate(qp_trim(coeffs))]


def _polygon_certifies_unique(coeffs, p):
    """True if the Newton polygon of this polynomial proves a single prime
    above p in Q[x]/(f): one segment, and either totally ramified (slope
    denominator = degree) or irreducible residual polynomial."""
    coeffs = qp_trim(coeffs)
    n = qp_deg(coeffs)
    segs = lower_hull_slopes(newton_polygon_points(coeffs, p))
    if len(segs) != 1:
        return False
    slope, length = segs[0]
    if length != n:
        return False
    if slope.denominator == n:
        return True
    pts = newton_polygon_points(coeffs, p)
    v0 = pts[0][1]
    if v0 == INFINITY:
        return False
    res = _segment_residual([Fraction(c) for c in coeffs], p, 0, n, v0, slope)
    res = qp_trim(res)
    if qp_deg(res) * slope.denominator != n:
        return False
    # residual must be separable for the factor count to be read off
    dres = qp_trim([(i * c) % p for i, c in enumerate(res)][1:])
    if _fp_gcd_deg(res, dres, p) != 0:
        return False
    return poly_is_irreducible_modp(res, p)


def _fp_gcd_deg(a, b, p):
    a = [x % p for x in qp_trim(a)]
    b = [x % p for x in qp_trim(b)]
    while any(b):
        # reduce a mod b over F_p
        while len(a) >= len(b) and any(a):
            f = (a[-1] * pow(b[-1], -1, p)) % p
            k = len(a) - len(b)
            for i, bi in enumerate(b):
                a[k + i] = (a[k + i] - f * bi) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    while a and a[-1] == 0:
        a.pop()
    return len(a) - 1 if a else -1


def field_has_unique_prime_above(field, p):
    """Certify that val_p extends uniquely to the field.

    Tries the defining polynomial and its small integer shifts; a failure to
    certify returns False (it never guesses).
    """
    key = p
    cached = field._unique_prime_cache.get(key)
    if cached is not None:
        return cached
    ok = False
    coeffs = list(field.defining_poly)
    for a in range(p):
        if _polygon_certifies_unique(qp_shift(coeffs, a), p):
            ok = True
            break
    field._unique_prime_cache[key] = ok
    return ok


def newton_polygon_valuations(a, p):
    """ValuationProfile of a nonzero element: negated lower-hull slopes of its
    minimal polynomial, with multiplicities = horizontal segment lengths."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(a, (int, Fraction)):
        if a == 0:
            raise ValueError("zero has no valuation profile")
        return ValuationProfile(p, [(Fraction(val_p(Fraction(a), p)), 1)], True)
    if not a:
        raise ValueError("zero has no valuation profile")
    mp = min_poly(a)
    segs = lower_hull_slopes(newton_polygon_points(mp, p))
    slopes = {}
    total = 0
    for s, length in segs:
        v = -s
        slopes[v] = slopes.get(v, 0) + length
        total += length
    # leading/lowest infinite coefficients cannot occur: min poly is monic with
    # nonzero constant term (a != 0), so segments cover the whole degree
    assert total == qp_deg(mp)
    unique = field_has_unique_prime_above(a.field, p)
    return ValuationProfile(p, list(slopes.items()), unique)


def ord_at_unique_prime(a, p):
    """ord at the unique prime above p, normalized so ord(p) = 1.

    Requires a certified unique extension; equals val_p(Norm(a)) / degree.
    """
    if isinstance(a, (int, Fraction)):
        return val_p(Fraction(a), p)
    if not field_has_unique_prime_above(a.field, p):
        raise ValueError(
            f"uniqueness of the prime above {p} is not certified for {a.field}; "
            "fall back to the full ValuationProfile")
    if not a:
        return INFINITY
    n = field_norm(a)
    return Fraction(val_p(n, p), a.field.degree)
