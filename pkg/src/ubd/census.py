"""Counting type II(A) character groups via rank-2 sublattices.

A finite-index sublattice of Z^2 has a unique basis <l*a + n*b, m*b> with
l > 0, 0 <= n < m, so groups of index < X correspond to triples (l, n, m)
with l*m < X.  The census evaluates the closed double sum, checks the
gcd criterion for a join with a fixed sublattice to be everything, and runs
the lower-bound experiment behind the quadratic growth of certified groups.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class LatticeTriple:
    """<l*a + n*b, m*b> with l > 0 and 0 <= n < m; index = l*m."""
    l: int
    n: int
    m: int

    def __post_init__(self):
        if self.l < 1 or self.m < 1 or not 0 <= self.n < self.m:
            raise ValueError(f"not a canonical triple: {(self.l, self.n, self.m)}")

    @property
    def index(self):
        return self.l * self.m


@dataclass(frozen=True)
class CensusResult:
    X: int
    count: int

    @property
    def ratio(self):
        return Fraction(self.count, self.X ** 2)


def enumerate_triples(X):
    """All triples with l*m < X, each exactly once (strict inequality)."""
    if X < 2:
        raise ValueError("X must be at least 2")
    out = []
    for l in range(1, X):
        for m in range(1, (X - 1) // l + 1):
            for n in range(m):
                out.append(LatticeTriple(l, n, m))
    return out


def s_count(X):
    """S(X) = sum_{l=1}^{X-1} ceil(X/l)(ceil(X/l)-1)/2, the closed form of the
    triple count; agrees with enumerate_triples for integer X."""
    if X < 2:
        raise ValueError("X must be at least 2")
    total = 0
    for l in range(1, X):
        c = -(-X // l)  # ceil(X/l)
        total += c * (c - 1) // 2
    return CensusResult(X, total)


def join_is_full(gamma, b):
    """gcd(s, l) = 1 = gcd(v, m, s*n - u*l): the join of the two sublattices
    <l*a+n*b, m*b> and <s*a+u*b, v*b> is the full lattice."""
    l, n, m = gamma.l, gamma.n, gamma.m
    s, u, v = b.l, b.n, b.m
    return gcd(s, l) == 1 and gcd(gcd(v, m), abs(s * n - u * l)) == 1


def join_is_full_snf(gamma, b):
    """Smith-normal-form oracle: stack the four generators as rows of a 4x2
    integer matrix; the join is full iff the gcd of all 2x2 minors is 1."""
    rows = [(gamma.l, gamma.n), (0, gamma.m), (b.l, b.n), (0, b.m)]
    g = 0
    for i in range(4):
        for j in range(i + 1, 4):
            minor = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]
            g = gcd(g, abs(minor))
    return g == 1


def euler_phi(n):
    out = n
    f = 2
    while f * f <= n:
        if n % f == 0:
            while n % f == 0:
                n //= f
            out -= out // f
        f += 1
    if n > 1:
        out -= out // n
    return out


@dataclass
class LowerBoundExperiment:
    X: int
    b: LatticeTriple
    full_count: int
    restricted_count: int
    phi_bound: int

    @property
    def ratio(self):
        return Fraction(self.full_count, self.X ** 2)


def ubd_lower_bound_experiment(b, X):
    """Count triples joining fully with b, plus the restricted family l = 1,
    X/2 < m < X, gcd(s, m) = 1 that drives the quadratic lower bound.

    Every block of s consecutive integers inside (X/2, X) holds exactly
    phi(s) admissible m, and each admissible m contributes m >= floor(X/2)+1
    choices of n, so the restricted count is provably at least
    floor(L/s)*phi(s)*(floor(X/2)+1) with L the number of integers in the
    interval -- the phi(s)/(2s) * X^2/2 shape of the lemma.
    """
    if X < 4:
        raise ValueError("X must be at least 4")
    s = b.l
    full = 0
    restricted = 0
    for gamma in enumerate_triples(X):
        if join_is_full(gamma, b):
            full += 1
        if (gamma.l == 1 and 2 * gamma.m > X and gamma.m < X
                and gcd(s, gamma.m) == 1):
            restricted += 1
    interval_len = (X - 1) - (X // 2)
    phi_bound = (interval_len // s) * euler_phi(s) * (X // 2 + 1)
    if restricted < phi_bound:
        raise AssertionError(
            f"restricted count {restricted} fell below the phi(s)/(2s) bound "
            f"{phi_bound} at X={X}")
    return LowerBoundExperiment(X, b, full, restricted, phi_bound)
