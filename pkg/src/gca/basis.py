"""Projective cluster variables, dual PBW expansion, and structure checks.

For an acyclic seed in sink order, mutating along 1, 2, ..., n produces the
generalized projective cluster variables x_i^(n).  Their lex-leading terms
are triangular (exponent -1 at i, zero before, nonnegative after), which
yields a greedy expansion of algebra elements over the monomials

    x^<a> = prod x_i^(a_i)            for a_i >= 0,
            prod (x_i^(n))^(-a_i)     for a_i < 0,

with coefficients in ZP (integer Laurent polynomials in frozen variables).
The same module houses the coprimality test, the subalgebra-membership
witness, the frozen-row beta update identity, and the 3-cycle dependence
certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .laurent import LaurentPoly, gcd, leading_term, try_exact_div
from .seed import (
    ExtendedMatrix,
    GeneralizedSeed,
    _floor_pos,
    exchange_polynomial,
    mutate_matrix,
    mutate_seed,
)
from .graph import acyclic_order

DEFAULT_MAX_STEPS = 10 ** 6


class BasisError(Exception):
    pass


class CyclicSeed(BasisError):
    """Operation requires an acyclic seed in sink order."""


class LeadingShapeViolation(BasisError):
    """A projective variable's leading term broke the triangular shape."""


class NotInSpan(BasisError):
    """Coefficient division failed: the element is outside the ZP-span."""


class IterationCapExceeded(BasisError):
    """Expansion exceeded the step cap; membership undecided."""


class NoCycle(BasisError):
    """Requested 3-cycle does not have the positive sign pattern."""


class InternalShapeError(BasisError):
    """A paper-guaranteed shape failed; indicates a bug, not bad input."""


def require_acyclic_order(M: ExtendedMatrix) -> None:
    for i in range(2, M.n + 1):
        for j in range(1, i):
            if M.entry(i, j) < 0:
                hint = (
                    "seed is acyclic but not in sink order; reorder first"
                    if acyclic_order(M) is not None
                    else "seed digraph contains an oriented cycle"
                )
                raise CyclicSeed(f"b[{i}][{j}]={M.entry(i, j)} < 0: {hint}")


@dataclass(frozen=True)
class LeadingDatum:
    """Leading exponent (length n) and frozen coefficient of one x_i^(n)."""

    exponent: tuple[int, ...]
    coefficient: LaurentPoly


class ProjectiveData:
    """The seeds Sigma^(1)..Sigma^(n) with projective variables and leadings."""

    def __init__(self, initial: GeneralizedSeed, seeds, projective, leading):
        self.initial = initial
        self.seeds = tuple(seeds)
        self.projective = tuple(projective)
        self.leading = tuple(leading)
        self.m = initial.m
        self.n = initial.n
        self._pow_cache: dict[tuple[int, int], LaurentPoly] = {}

    def matrices(self) -> list[ExtendedMatrix]:
        """B-tilde^(0) (initial) through B-tilde^(n)."""
        return [self.initial.matrix] + [s.matrix for s in self.seeds]

    def projective_power(self, i: int, t: int) -> LaurentPoly:
        """(x_i^(n))**t for t >= 1, cached."""
        got = self._pow_cache.get((i, t))
        if got is None:
            got = self._pow_cache[(i, t)] = self.projective[i - 1] ** t
        return got

    def pbw_value(self, a) -> LaurentPoly:
        """The Laurent polynomial x^<a> in initial variables."""
        m, n = self.m, self.n
        exp = [0] * m
        out = None
        for i, ai in enumerate(a, start=1):
            if ai > 0:
                exp[i - 1] = ai
            elif ai < 0:
                p = self.projective_power(i, -ai)
                out = p if out is None else out * p
        mono = LaurentPoly.monomial(m, n, 1, exp)
        return mono if out is None else out * mono


def projective_sequence(seed: GeneralizedSeed) -> ProjectiveData:
    """Mutate along 1, ..., n and extract projective variables with leadings.

    Requires the seed acyclic and already in sink order.  Stability
    (x_i^(i) = x_i^(n)) and the return of the principal part are verified;
    a leading term off the triangular shape raises LeadingShapeViolation.
    """
    require_acyclic_order(seed.matrix)
    n = seed.n
    seeds = []
    cur = seed
    for i in range(1, n + 1):
        cur = mutate_seed(cur, i)
        seeds.append(cur)
    last = seeds[-1]
    if last.matrix.principal() != seed.matrix.principal():
        raise InternalShapeError("principal part did not return after the sink sequence")
    projective = []
    for i in range(1, n + 1):
        xi = seeds[i - 1].cluster[i - 1]
        if last.cluster[i - 1] != xi:
            raise InternalShapeError(f"x_{i}^({i}) changed after later mutations")
        projective.append(xi)
    leading = []
    for i in range(1, n + 1):
        e, c = leading_term(projective[i - 1])
        ok = (
            e[i - 1] == -1
            and all(e[j] == 0 for j in range(i - 1))
            and all(e[j] >= 0 for j in range(i, n))
        )
        if not ok:
            raise LeadingShapeViolation(f"leading exponent of x_{i}^({n}) is {e}")
        leading.append(LeadingDatum(exponent=e, coefficient=c))
    return ProjectiveData(seed, seeds, projective, leading)


def decode_leading_exponent(e, data: ProjectiveData) -> tuple[int, ...]:
    """Recover the unique a with leading exponent of x^<a> equal to e.

    Coordinate by coordinate: a_i is whatever remains at position i once the
    contributions of a_1..a_{i-1} are stripped; positive a_i consume a unit
    vector, negative a_i consume copies of the i-th leading exponent.
    """
    n = data.n
    rest = list(e)
    a = []
    for i in range(n):
        ai = rest[i]
        a.append(ai)
        if ai >= 0:
            rest[i] = 0
        else:
            le = data.leading[i].exponent
            for j in range(i, n):
                rest[j] += ai * le[j]
    return tuple(a)


@dataclass(frozen=True)
class PbwExpansion:
    """Finite map a -> nonzero frozen coefficient; evaluation reproduces p."""

    m: int
    n: int
    terms: tuple[tuple[tuple[int, ...], LaurentPoly], ...]

    @classmethod
    def from_dict(cls, m: int, n: int, d: dict) -> "PbwExpansion":
        items = tuple(sorted(((a, c) for a, c in d.items() if c), reverse=True))
        return cls(m=m, n=n, terms=items)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __len__(self) -> int:
        return len(self.terms)


def pbw_expand(p: LaurentPoly, data: ProjectiveData,
               max_steps: int = DEFAULT_MAX_STEPS) -> PbwExpansion:
    """Greedy triangular elimination of p against the projective monomials.

    Each round removes the lex-leading mutable group by the unique x^<a>
    whose leading exponent matches; the group coefficient must be divisible
    in ZP by the leading coefficient prod P_i^(-a_i), else NotInSpan.  The
    step cap distinguishes nontermination from non-membership.
    """
    if p.m != data.m or p.n != data.n:
        raise ValueError("element and projective data live in different rings")
    out: dict[tuple[int, ...], LaurentPoly] = {}
    rem = p
    steps = 0
    while rem:
        steps += 1
        if steps > max_steps:
            raise IterationCapExceeded(f"no result within {max_steps} eliminations")
        e, c = leading_term(rem)
        a = decode_leading_exponent(e, data)
        lead = None
        for i, ai in enumerate(a, start=1):
            if ai < 0:
                f = data.leading[i - 1].coefficient ** (-ai)
                lead = f if lead is None else lead * f
        if lead is None:
            q = c
        else:
            q = try_exact_div(c, lead)
            if q is None:
                raise NotInSpan(
                    f"coefficient at leading exponent {e} not divisible in ZP"
                )
        out[a] = q
        rem = rem - q * data.pbw_value(a)
    return PbwExpansion.from_dict(data.m, data.n, out)


def pbw_evaluate(ex: PbwExpansion, data: ProjectiveData) -> LaurentPoly:
    """Sum of coefficient * x^<a> over the expansion, in initial variables."""
    total = LaurentPoly.zero(data.m, data.n)
    for a, c in ex.terms:
        total = total + c * data.pbw_value(a)
    return total


# -- standard monomials and independence -------------------------------------

def standard_monomials(seed: GeneralizedSeed, flavor: str, max_degree: int) -> list[tuple[int, ...]]:
    """All descriptors a in Z^n with sum |a_i| <= max_degree.

    A descriptor denotes prod x_i^[a_i]_+ * y_i^[-a_i]_+ with y_i = x'_i
    (classic) or x_i^(n) (projective); per-coordinate sign coherence is
    exactly the no-x_i*y_i constraint, so the enumeration is shared.
    """
    if flavor not in ("classic", "projective"):
        raise ValueError(f"unknown flavor {flavor!r}")
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    n = seed.n
    out = []
    for a in itertools.product(range(-max_degree, max_degree + 1), repeat=n):
        if sum(abs(x) for x in a) <= max_degree:
            out.append(a)
    out.sort(key=lambda a: (sum(abs(x) for x in a), a))
    return out


def exchange_partners(seed: GeneralizedSeed) -> tuple[LaurentPoly, ...]:
    """The mutated variables x'_1, ..., x'_n of the seed, initial coordinates."""
    out = []
    for k in range(1, seed.n + 1):
        q = try_exact_div(exchange_polynomial(seed, k), seed.cluster[k - 1])
        if q is None:  # pragma: no cover - Laurent phenomenon
            raise InternalShapeError(f"exchange polynomial not divisible at {k}")
        out.append(q)
    return tuple(out)


def standard_monomial_value(seed: GeneralizedSeed, a, flavor: str,
                            data: ProjectiveData | None = None,
                            partners=None) -> LaurentPoly:
    """Expand one descriptor into the initial Laurent ring."""
    m, n = seed.m, seed.n
    if flavor == "projective":
        if data is None:
            raise ValueError("projective flavor needs ProjectiveData")
        return data.pbw_value(a)
    if flavor != "classic":
        raise ValueError(f"unknown flavor {flavor!r}")
    if partners is None:
        partners = exchange_partners(seed)
    exp = [0] * m
    out = None
    for i, ai in enumerate(a, start=1):
        if ai > 0:
            exp[i - 1] = ai
        elif ai < 0:
            p = partners[i - 1] ** (-ai)
            out = p if out is None else out * p
    mono = LaurentPoly.monomial(m, n, 1, exp)
    return mono if out is None else out * mono


@dataclass
class RankResult:
    count: int
    rank: int
    dependence: list[LaurentPoly] | None

    @property
    def full(self) -> bool:
        return self.rank == self.count


def independence_rank(monomials, seed: GeneralizedSeed, flavor: str = "classic",
                      data: ProjectiveData | None = None) -> RankResult:
    """Rank over Frac(ZP) of the given standard monomials; kernel if deficient.

    Each monomial is expanded and indexed by its mutable exponent groups; the
    resulting matrix with ZP entries is reduced by fraction-free row
    operations (cross-multiplication with exact content stripping), pivots
    chosen by minimal term count.  A zero row yields a nonzero ZP kernel
    vector c with sum c_i * monomial_i = 0, returned denominator-free.
    """
    partners = exchange_partners(seed) if flavor == "classic" else None
    values = [
        standard_monomial_value(seed, a, flavor, data=data, partners=partners)
        for a in monomials
    ]
    return _rank_over_zp(values, seed.m, seed.n)


def _rank_over_zp(values, m: int, n: int) -> RankResult:
    k = len(values)
    zeros = (0,) * n
    rows: list[dict] = []
    for p in values:
        groups: dict[tuple, dict] = {}
        for exp, c in p.terms.items():
            groups.setdefault(exp[:n], {})[zeros + exp[n:]] = c
        rows.append({e: LaurentPoly(m, n, t) for e, t in groups.items()})
    aug: list[dict] = [{i: LaurentPoly.one(m, n)} for i in range(k)]

    def strip_content(row: dict, extra: dict) -> tuple[dict, dict]:
        # divide the whole augmented row by its integer and monomial content
        ig = 0
        lo = None
        for part in (row, extra):
            for poly in part.values():
                for exp, c in poly.terms.items():
                    ig = _igcd(ig, c)
                    if lo is None:
                        lo = list(exp)
                    else:
                        for t, e in enumerate(exp):
                            if e < lo[t]:
                                lo[t] = e
        if ig in (0, 1) and (lo is None or not any(lo)):
            return row, extra
        shift = tuple(-e for e in lo)

        def fix(part):
            return {
                key: LaurentPoly(m, n, {
                    tuple(map(sum, zip(exp, shift))): c // ig
                    for exp, c in poly.terms.items()
                })
                for key, poly in part.items()
            }

        return fix(row), fix(extra)

    columns = sorted({e for row in rows for e in row}, reverse=True)
    active = list(range(k))
    rank = 0
    for col in columns:
        cands = [r for r in active if col in rows[r]]
        if not cands:
            continue
        piv = min(cands, key=lambda r: (len(rows[r][col].terms), r))
        pv = rows[piv][col]
        for r in cands:
            if r == piv:
                continue
            cv = rows[r][col]
            new_row: dict = {}
            for c2, val in rows[r].items():
                new_row[c2] = pv * val
            for c2, val in rows[piv].items():
                t = new_row.get(c2, None)
                t = (-cv) * val if t is None else t - cv * val
                if t:
                    new_row[c2] = t
                else:
                    new_row.pop(c2, None)
            new_aug: dict = {}
            for c2, val in aug[r].items():
                new_aug[c2] = pv * val
            for c2, val in aug[piv].items():
                t = new_aug.get(c2, None)
                t = (-cv) * val if t is None else t - cv * val
                if t:
                    new_aug[c2] = t
                else:
                    new_aug.pop(c2, None)
            rows[r], aug[r] = strip_content(new_row, new_aug)
        active.remove(piv)
        rank += 1
    dependence = None
    for r in active:
        if not rows[r]:
            vec = [LaurentPoly.zero(m, n) for _ in range(k)]
            for idx, val in aug[r].items():
                vec[idx] = val
            dependence = vec
            break
    return RankResult(count=k, rank=rank, dependence=dependence)


def _igcd(a, b) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


# -- coprimality --------------------------------------------------------------

@dataclass(frozen=True)
class PairCoprimality:
    i: int
    j: int
    gcd: LaurentPoly
    coprime: bool


def coprimality_check(seed: GeneralizedSeed) -> list[PairCoprimality]:
    """Pairwise GCDs of the exchange products x_i x'_i.

    Units of ZP[x_1..x_n] are +-(frozen monomials); the normalized GCD
    reduces those to 1, so a pair is coprime exactly when its GCD is 1.
    A shared integer factor > 1 is a genuine common divisor.
    """
    products = [exchange_polynomial(seed, i) for i in range(1, seed.n + 1)]
    one = LaurentPoly.one(seed.m, seed.n)
    out = []
    for i in range(1, seed.n + 1):
        for j in range(i + 1, seed.n + 1):
            g = gcd(products[i - 1], products[j - 1])
            out.append(PairCoprimality(i=i, j=j, gcd=g, coprime=(g == one)))
    return out


# -- Proposition 3.4 witness --------------------------------------------------

@dataclass(frozen=True)
class WitnessResult:
    direction: int
    monomial: LaurentPoly
    f: LaurentPoly
    check: bool
    expansion: PbwExpansion | None


def proposition_witness(seed: GeneralizedSeed, i: int,
                        data: ProjectiveData | None = None,
                        max_steps: int = DEFAULT_MAX_STEPS) -> WitnessResult:
    """Decompose prod_{k<i} x_k^(-b_ki) * x_i^(i) as x'_i * M + f.

    M is a frozen Laurent monomial built from the sink-sequence matrices;
    check is True when f expands with negative coordinates confined to
    positions below i, which is the constructive membership statement for
    the lower-bound subalgebra.
    """
    if data is None:
        data = projective_sequence(seed)
    m, n = seed.m, seed.n
    if not 1 <= i <= n:
        raise ValueError(f"direction {i} outside [1, {n}]")
    mats = data.matrices()
    B0 = seed.matrix
    lhs_exp = [0] * m
    for kk in range(1, i):
        lhs_exp[kk - 1] = -B0.entry(kk, i)
    lhs = LaurentPoly.monomial(m, n, 1, lhs_exp) * data.projective[i - 1]
    mono_exp = [0] * m
    for j in range(n + 1, m + 1):
        if mats[i - 1].entry(j, i) >= 0:
            continue
        e = -max(B0.entry(j, i), 0)
        for kk in range(1, i):
            if mats[kk - 1].entry(j, kk) < 0:
                e += mats[kk - 1].entry(kk, i) * mats[kk - 1].entry(j, kk)
        mono_exp[j - 1] = e
    monomial = LaurentPoly.monomial(m, n, 1, mono_exp)
    partners = exchange_partners(seed)
    f = lhs - partners[i - 1] * monomial
    expansion = None
    check = False
    try:
        expansion = pbw_expand(f, data, max_steps=max_steps)
    except NotInSpan:
        pass
    else:
        check = all(
            all(aj >= 0 for aj in a[i - 1:]) for a, _ in expansion.terms
        )
    return WitnessResult(direction=i, monomial=monomial, f=f,
                         check=check, expansion=expansion)


# -- frozen-row beta update ----------------------------------------------------

def beta_update_check(seed: GeneralizedSeed, i: int) -> bool:
    """Verify beta^(i-1)_ji = beta_ji - sum_S b^(k-1)_jk beta_ki, frozen rows j.

    S collects k in [1, i-1] with b^(k-1)_jk < 0.  Vacuously true for i = 1
    or when the seed has no frozen rows.
    """
    require_acyclic_order(seed.matrix)
    m, n = seed.m, seed.n
    if not 1 <= i <= n:
        raise ValueError(f"direction {i} outside [1, {n}]")
    mats = [seed.matrix]
    for kk in range(1, i):
        mats.append(mutate_matrix(mats[-1], kk))
    B0 = seed.matrix
    for j in range(n + 1, m + 1):
        lhs = mats[i - 1].beta(j, i)
        rhs = B0.beta(j, i)
        for kk in range(1, i):
            bjk = mats[kk - 1].entry(j, kk)
            if bjk < 0:
                rhs -= bjk * B0.beta(kk, i)
        if lhs != rhs:
            return False
    return True


# -- Theorem 4.1 certificate ---------------------------------------------------

@dataclass(frozen=True)
class DependenceCertificate:
    """Exact relation lhs = sum of rhs + residual among standard monomials.

    lhs is the descriptor of x'_i x'_j x'_k (coefficient 1); each rhs entry
    pairs a classic standard-monomial descriptor with a nonzero frozen
    coefficient; the residual is a polynomial in the mutable variables over
    ZP.  Together they exhibit a nontrivial ZP-linear dependence.
    """

    cycle: tuple[int, int, int]
    lhs: tuple[int, ...]
    lhs_value: LaurentPoly
    rhs: tuple[tuple[tuple[int, ...], LaurentPoly], ...]
    residual: LaurentPoly

    def residual_descriptors(self) -> list[tuple[tuple[int, ...], LaurentPoly]]:
        """Residual grouped as (pure-positive descriptor, frozen coefficient)."""
        n = self.residual.n
        zeros = (0,) * n
        groups: dict[tuple, dict] = {}
        for exp, c in self.residual.terms.items():
            groups.setdefault(exp[:n], {})[zeros + exp[n:]] = c
        return sorted(
            (e, LaurentPoly(self.residual.m, n, t)) for e, t in groups.items()
        )

    def involved_descriptors(self) -> list[tuple[int, ...]]:
        out = [self.lhs] + [a for a, _ in self.rhs]
        out += [a for a, _ in self.residual_descriptors()]
        return out


def three_cycle_certificate(seed: GeneralizedSeed, cycle) -> DependenceCertificate:
    """Dependence certificate for a 3-cycle with b_{kj}, b_{ji}, b_{ik} > 0.

    The cycle (i, j, k) follows the find_three_cycles convention (edges
    i->k, k->j, j->i); internally the vertices play the roles 1, 2, 3 of the
    bracket decomposition and the output is translated back.  The bracket
    sum, the three closed-form partial sums, and the residual positivity are
    all verified exactly; failure of a guaranteed shape raises
    InternalShapeError.
    """
    M = seed.matrix
    m, n = M.m, M.n
    c = tuple(cycle)
    if len(c) != 3 or len(set(c)) != 3 or not all(1 <= t <= n for t in c):
        raise ValueError(f"cycle {c} is not three distinct directions in [1, {n}]")
    c1, c2, c3 = c
    b21 = M.entry(c2, c1)
    b32 = M.entry(c3, c2)
    b13 = M.entry(c1, c3)
    if b21 <= 0 or b32 <= 0 or b13 <= 0:
        raise NoCycle(
            f"need b[{c2}][{c1}], b[{c3}][{c2}], b[{c1}][{c3}] > 0, "
            f"got {b21}, {b32}, {b13}"
        )
    b12 = M.entry(c1, c2)
    b23 = M.entry(c2, c3)
    b31 = M.entry(c3, c1)
    d1, d2, d3 = M.d[c1 - 1], M.d[c2 - 1], M.d[c3 - 1]
    beta = {
        (a, b): int(M.beta(a, b))
        for a in (c1, c2, c3) for b in (c1, c2, c3) if a != b
    }
    in_cycle = {c1, c2, c3}

    def coeff_factor(ci: int, r: int) -> LaurentPoly:
        """P_{i,r}: the string entry times every non-cycle variable power."""
        di = M.d[ci - 1]
        rho = seed.strings.entry(ci, r)
        if rho.coeff == 0:
            return LaurentPoly.zero(m, n)
        exp = [0] * n + list(rho.exp)
        for t in range(1, m + 1):
            if t in in_cycle:
                continue
            bt = M.beta(t, ci)
            if t <= n:
                e = r * max(int(bt), 0) + (di - r) * max(-int(bt), 0)
            else:
                e = _floor_pos(r * bt) + _floor_pos(-(di - r) * bt)
            exp[t - 1] += e
        return LaurentPoly.monomial(m, n, rho.coeff, exp)

    P1 = [coeff_factor(c1, r) for r in range(d1 + 1)]
    P2 = [coeff_factor(c2, r) for r in range(d2 + 1)]
    P3 = [coeff_factor(c3, r) for r in range(d3 + 1)]

    def bracket(r1: int, r2: int, r3: int) -> LaurentPoly:
        pc = P1[r1] * P2[r2] * P3[r3]
        if not pc:
            return pc
        shift = [0] * m
        shift[c1 - 1] = (r2 - d2) * beta[(c1, c2)] + r3 * beta[(c1, c3)] - 1
        shift[c2 - 1] = (r3 - d3) * beta[(c2, c3)] + r1 * beta[(c2, c1)] - 1
        shift[c3 - 1] = (r1 - d1) * beta[(c3, c1)] + r2 * beta[(c3, c2)] - 1
        return pc.shift(shift)

    partners = exchange_partners(seed)
    xp = {t: partners[t - 1] for t in (c1, c2, c3)}
    lhs_value = xp[c1] * xp[c2] * xp[c3]
    total = LaurentPoly.zero(m, n)
    for r1 in range(d1 + 1):
        for r2 in range(d2 + 1):
            for r3 in range(d3 + 1):
                total = total + bracket(r1, r2, r3)
    if total != lhs_value:
        raise InternalShapeError("bracket sum does not reproduce x'_i x'_j x'_k")

    def family_sum(triples) -> LaurentPoly:
        s = LaurentPoly.zero(m, n)
        for (r1, r2, r3) in triples:
            s = s + bracket(r1, r2, r3)
        return s

    fam1 = [(0, r2, d3) for r2 in range(d2 + 1)]
    fam2 = [(d1, 0, r3) for r3 in range(d3 + 1)]
    fam3 = [(r1, d2, 0) for r1 in range(d1 + 1)]
    S1, S2, S3 = family_sum(fam1), family_sum(fam2), family_sum(fam3)

    def shifted(poly: LaurentPoly, places: dict) -> LaurentPoly:
        shift = [0] * m
        for pos, e in places.items():
            shift[pos - 1] = e
        return poly.shift(shift)

    closed1 = P1[0] * P3[d3] * shifted(xp[c2], {c1: b13 - 1, c3: -b31 - 1})
    closed2 = P1[d1] * P2[0] * shifted(xp[c3], {c1: -b12 - 1, c2: b21 - 1})
    closed3 = P2[d2] * P3[0] * shifted(xp[c1], {c2: -b23 - 1, c3: b32 - 1})
    if S1 != closed1 or S2 != closed2 or S3 != closed3:
        raise InternalShapeError("closed-form partial sums disagree with brackets")

    covered = set(fam1) | set(fam2) | set(fam3)
    residual = LaurentPoly.zero(m, n)
    for r1 in range(d1 + 1):
        for r2 in range(d2 + 1):
            for r3 in range(d3 + 1):
                if (r1, r2, r3) not in covered:
                    residual = residual + bracket(r1, r2, r3)
    if lhs_value != S1 + S2 + S3 + residual:
        raise InternalShapeError("decomposition does not sum to the product")
    if any(e < 0 for exp in residual.terms for e in exp[:n]):
        raise InternalShapeError("residual has a negative mutable exponent")

    def descriptor(coeff_mono: LaurentPoly, partner: int, places: dict):
        if len(coeff_mono.terms) != 1:
            raise InternalShapeError("rhs coefficient is not a monomial")
        (exp, cval), = coeff_mono.terms.items()
        a = list(exp[:n])
        for pos, e in places.items():
            a[pos - 1] += e
        a[partner - 1] = -1
        if any(x < 0 for t, x in enumerate(a, start=1) if t != partner):
            raise InternalShapeError("rhs descriptor is not a standard monomial")
        frozen = LaurentPoly.monomial(m, n, cval, (0,) * n + exp[n:])
        return tuple(a), frozen

    rhs = (
        descriptor(P1[0] * P3[d3], c2, {c1: b13 - 1, c3: -b31 - 1}),
        descriptor(P1[d1] * P2[0], c3, {c1: -b12 - 1, c2: b21 - 1}),
        descriptor(P2[d2] * P3[0], c1, {c2: -b23 - 1, c3: b32 - 1}),
    )
    lhs_a = tuple(-1 if t in in_cycle else 0 for t in range(1, n + 1))
    cert = DependenceCertificate(
        cycle=c, lhs=lhs_a, lhs_value=lhs_value, rhs=rhs, residual=residual,
    )
    verify_certificate(seed, cert, partners=partners)
    return cert


def verify_certificate(seed: GeneralizedSeed, cert: DependenceCertificate,
                       partners=None) -> None:
    """Re-evaluate every descriptor from scratch and confirm the relation."""
    if partners is None:
        partners = exchange_partners(seed)
    lhs = standard_monomial_value(seed, cert.lhs, "classic", partners=partners)
    if lhs != cert.lhs_value:
        raise InternalShapeError("lhs descriptor does not evaluate to the product")
    total = cert.residual
    for a, coeff in cert.rhs:
        if not coeff:
            raise InternalShapeError("trivial rhs coefficient")
        total = total + coeff * standard_monomial_value(
            seed, a, "classic", partners=partners
        )
    if total != lhs:
        raise InternalShapeError("certificate relation failed re-evaluation")
