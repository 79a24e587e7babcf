"""Unbounded-denominator detection for formal n-th roots of exact series.

The criterion: strip f to a unit series 1 + sum (a_m/a_0) w^m, rescale
valuations by v_min = min_m ord(a_m) so the integrality precondition holds
formally, and certify unboundedness as soon as some root-coefficient ratio
satisfies -ord(b_m/b_0) > tau = (ord(a_0) - v_min)/n.  A bounded root forces
-ord(b_m/b_0) <= tau for every m (the diagonal term of the n-th-power
convolution dominates), so a certificate is sound; BoundedSoFar never claims
boundedness beyond the scanned range.

Valuation policy ladder per coefficient field: exact val_p on Q; the norm
formula when a unique prime above p is certified; otherwise the full Newton
polygon profile, certifying only when every slope witnesses.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import (
    INFINITY,
    AlgebraicNumber,
    field_has_unique_prime_above,
    is_prime,
    newton_polygon_valuations,
    ord_at_unique_prime,
    val_p,
)
from .qseries import nth_root_normalized

RATIONAL = 'rational'
UNIQUE_PRIME = 'unique-prime-norm'
CONJUGATE = 'conjugate-profile'


@dataclass
class UbdVerdict:
    status: str                    # UnboundedCertified | BoundedSoFar | Inconclusive
    witness_index: object          # int or None
    witness_valuation: object      # Fraction (-ord of the witness ratio) or None
    threshold: Fraction
    truncation_used: int
    valuation_mode: str
    integrality_note: str = ""
    label: str = ""

    def certified(self):
        return self.status == 'UnboundedCertified'


@dataclass
class GrowthProfile:
    entries: tuple                 # ((m, running max of -ord(b_m/b_0)), ...)
    valuation_mode: str

    def final(self):
        return self.entries[-1][1] if self.entries else Fraction(0)

    def value_at(self, m):
        best = Fraction(0)
        for i, v in self.entries:
            if i > m:
                break
            best = v
        return best


def choose_mode(field, p):
    if field is None:
        return RATIONAL
    if field_has_unique_prime_above(field, p):
        return UNIQUE_PRIME
    return CONJUGATE


def _ord_values(value, p, mode):
    """Possible valuations of a coefficient at primes above p, ord(p) = 1."""
    if isinstance(value, AlgebraicNumber):
        if not value:
            return [INFINITY]
        if value.is_rational():
            return [Fraction(val_p(value.as_fraction(), p))]
        if mode == UNIQUE_PRIME:
            return [ord_at_unique_prime(value, p)]
        return [Fraction(v) for v in newton_polygon_valuations(value, p).values()]
    value = Fraction(value)
    if value == 0:
        return [INFINITY]
    return [Fraction(val_p(value, p))]


def _threshold(unit, n, p, mode, T):
    """tau = (worst-case ord(a_0) - worst-case v_min)/n over the scanned range;
    ord(a_0) = 0 after unit normalization, so tau = -v_min/n."""
    vmin = Fraction(0)  # a_0 = 1 contributes ord 0
    for m in range(1, T + 1):
        c = unit.coefficient(m)
        vals = _ord_values(c, p, mode)
        lo = min(vals)
        if lo != INFINITY and lo < vmin:
            vmin = Fraction(lo)
    return -vmin / n


def detect(f, root_degree, prime_p, T=300, label=""):
    """Scan the formal root_degree-th root of f for a certified witness.

    The ratios b_m/b_0 come from nth_root_normalized on the unit part, so
    everything stays in the coefficient field of f.
    """
    if not is_prime(prime_p):
        raise ValueError(f"{prime_p} is not prime")
    if root_degree < 2:
        raise ValueError("root degree must be at least 2")
    if f.is_zero():
        raise ValueError("cannot analyze a series that is 0 to precision")
    mode = choose_mode(f.field, prime_p)
    unit, _, _ = f.unit_normalized()
    M = min(T, unit.prec - 1)
    unit = unit.truncate(M + 1)
    tau = _threshold(unit, root_degree, prime_p, mode, M)
    root = nth_root_normalized(unit, root_degree)
    note = (f"a_m verified p-integral (after the v_min offset) for m <= {M}; "
            "the lemma's precondition beyond the truncation is assumed")
    partial = None
    for m in range(1, M + 1):
        b = root.coefficient(m)
        vals = _ord_values(b, prime_p, mode)
        if vals == [INFINITY]:
            continue
        neg_ords = [-v for v in vals]
        if min(neg_ords) > tau:
            return UbdVerdict('UnboundedCertified', m, min(neg_ords), tau, M,
                              mode, note, label)
        if mode == CONJUGATE and max(neg_ords) > tau and partial is None:
            partial = m
    if partial is not None:
        return UbdVerdict('Inconclusive', partial, None, tau, M, mode,
                          note + "; some but not all conjugate slopes witness",
                          label)
    return UbdVerdict('BoundedSoFar', None, None, tau, M, mode, note, label)


def growth_profile(f, root_degree, prime_p, T=300):
    """Running maxima of -ord(b_m/b_0); in conjugate-profile mode the sound
    lower bound (minimum over slopes) is tracked."""
    if not is_prime(prime_p):
        raise ValueError(f"{prime_p} is not prime")
    if f.is_zero():
        raise ValueError("cannot analyze a series that is 0 to precision")
    mode = choose_mode(f.field, prime_p)
    unit, _, _ = f.unit_normalized()
    M = min(T, unit.prec - 1)
    root = nth_root_normalized(unit.truncate(M + 1), root_degree)
    entries = []
    best = Fraction(0)
    for m in range(1, M + 1):
        b = root.coefficient(m)
        vals = _ord_values(b, prime_p, mode)
        if vals != [INFINITY]:
            neg = min(-v for v in vals)
            if neg > best:
                best = neg
        entries.append((m, best))
    return GrowthProfile(tuple(entries), mode)


@dataclass
class CatalogReport:
    index: int
    truncation: int
    verdicts: list
    certified: int
    bounded: int
    inconclusive: int
    hypothesis_confirmed: bool

    def lines(self):
        out = []
        for v in self.verdicts:
            w = f"m={v.witness_index}, -ord={v.witness_valuation}" \
                if v.witness_index is not None else "-"
            out.append(f"{v.label:8s} {v.status:20s} witness[{w}] "
                       f"tau={v.threshold} T={v.truncation_used} mode={v.valuation_mode}")
        return out


def analyze_catalog(entries, T=300, prime_p=None):
    """Run the detector over catalog entries at their root degrees.

    The main theorem's index-p hypothesis is confirmed when every
    expected-noncongruence entry is certified and no known-congruence entry
    is (falsely) certified.
    """
    verdicts = []
    for e in entries:
        p = prime_p if prime_p is not None else e.root_degree
        series = e.expansion(T + 2)
        verdicts.append(detect(series, e.root_degree, p, T, label=e.label))
    certified = sum(1 for v in verdicts if v.status == 'UnboundedCertified')
    bounded = sum(1 for v in verdicts if v.status == 'BoundedSoFar')
    inconclusive = sum(1 for v in verdicts if v.status == 'Inconclusive')
    ok = True
    for e, v in zip(entries, verdicts):
        if e.congruence_flag == 'expected-noncongruence' and not v.certified():
            ok = False
        if e.congruence_flag == 'known-congruence' and v.certified():
            ok = False
    index = entries[0].index if entries else 0
    return CatalogReport(index, T, verdicts, certified, bounded, inconclusive,
                         ok and bool(entries))
