"""Shared builders: the two worked-example seeds and random generators."""

from __future__ import annotations

import math
import random

from gca import (
    ExtendedMatrix,
    FrozenMonomial,
    GeneralizedSeed,
    LaurentPoly,
    StringSet,
    coprimality_check,
)


def section3_seed() -> GeneralizedSeed:
    """Acyclic 7x3 example with l=x6, h=x4, d=x5 as the string monomials."""
    rows = [
        (0, -1, -3), (2, 0, -3), (2, 1, 0),
        (-1, 2, 1), (1, -1, 1), (1, 3, -2), (-2, 3, -3),
    ]
    matrix = ExtendedMatrix.from_rows(rows, (2, 1, 3))
    one = FrozenMonomial(1, (0, 0, 0, 0))
    l = FrozenMonomial(1, (0, 0, 1, 0))
    h = FrozenMonomial(1, (1, 0, 0, 0))
    d = FrozenMonomial(1, (0, 1, 0, 0))
    strings = StringSet(((one, l, one), (one, one), (one, h, d, one)))
    return GeneralizedSeed.initial(matrix, strings)


def section4_seed(h: int = 1, d: int = 1, l: int = 1) -> GeneralizedSeed:
    """Cyclic rank-3 example; h, d, l are integer string coefficients."""
    rows = [(0, -1, 3), (2, 0, -3), (-2, 1, 0)]
    matrix = ExtendedMatrix.from_rows(rows, (2, 1, 3))
    one = FrozenMonomial(1, ())
    strings = StringSet((
        (one, FrozenMonomial(h, ()), one),
        (one, one),
        (one, FrozenMonomial(d, ()), FrozenMonomial(l, ()), one),
    ))
    return GeneralizedSeed.initial(matrix, strings)


def a2_seed(sink_order: bool = False) -> GeneralizedSeed:
    """Classical A_2: binomial exchanges, d = (1, 1), trivial strings."""
    rows = [(0, -1), (1, 0)] if sink_order else [(0, 1), (-1, 0)]
    matrix = ExtendedMatrix.from_rows(rows, (1, 1))
    return GeneralizedSeed.initial(matrix, StringSet.trivial(2, 2, (1, 1)))


def random_matrix(rng: random.Random, n: int, m: int, bmax: int = 3,
                  acyclic: bool = False) -> ExtendedMatrix:
    """Skew-symmetrizable principal part with |b| <= bmax and dividing d.

    Entries come from b_ij = t s_j, b_ji = -t s_i for a positive symmetrizer
    s, which makes skew-symmetrizability hold by construction; acyclic mode
    forces t >= 0 for i > j, i.e. sink order.
    """
    s = [rng.choice((1, 1, 2)) for _ in range(n)]
    B = [[0] * n for _ in range(n)]
    for j in range(n):
        for i in range(j + 1, n):
            cap = min(bmax // s[j], bmax // s[i])
            if cap == 0:
                t = 0
            elif acyclic:
                t = rng.randint(0, cap)
            else:
                t = rng.randint(-cap, cap)
            B[i][j] = t * s[j]
            B[j][i] = -t * s[i]
    rows = [tuple(r) for r in B]
    for _ in range(m - n):
        rows.append(tuple(rng.randint(-bmax, bmax) for _ in range(n)))
    d = []
    for i in range(n):
        g = 0
        for j in range(n):
            g = math.gcd(g, B[j][i])
        d.append(rng.choice([t for t in (1, 2, 3) if g == 0 or g % t == 0]))
    return ExtendedMatrix.from_rows(rows, d)


def random_strings(rng: random.Random, M: ExtendedMatrix, emax: int = 2,
                   cmax: int = 3) -> StringSet:
    one = FrozenMonomial(1, (0,) * (M.m - M.n))
    rows = []
    for i in range(M.n):
        mid = [
            FrozenMonomial(
                rng.randint(1, cmax),
                tuple(rng.randint(0, emax) for _ in range(M.m - M.n)),
            )
            for _ in range(M.d[i] - 1)
        ]
        rows.append(tuple([one] + mid + [one]))
    return StringSet(tuple(rows))


def random_seed(rng: random.Random, nmax: int = 4, mmax: int = 6,
                acyclic: bool = False, nmin: int = 2) -> GeneralizedSeed:
    n = rng.randint(nmin, nmax)
    m = rng.randint(n, mmax)
    M = random_matrix(rng, n, m, acyclic=acyclic)
    return GeneralizedSeed.initial(M, random_strings(rng, M))


def random_acyclic_coprime_seed(rng: random.Random, n: int = 3,
                                mmax: int = 5) -> GeneralizedSeed:
    """Rejection-sample acyclic sink-ordered seeds until coprime."""
    while True:
        m = rng.randint(n, mmax)
        M = random_matrix(rng, n, m, acyclic=True)
        seed = GeneralizedSeed.initial(M, random_strings(rng, M))
        if all(p.coprime for p in coprimality_check(seed)):
            return seed


def random_cyclic_rank3_seed(rng: random.Random, mmax: int = 5) -> GeneralizedSeed:
    """n = 3 with the oriented cycle sign pattern b_21, b_32, b_13 > 0."""
    while True:
        s = [rng.choice((1, 1, 2)) for _ in range(3)]
        caps = [
            min(3 // s[0], 3 // s[1]),
            min(3 // s[1], 3 // s[2]),
            min(3 // s[2], 3 // s[0]),
        ]
        if 0 in caps:
            continue
        u = rng.randint(1, caps[0])
        v = rng.randint(1, caps[1])
        w = rng.randint(1, caps[2])
        B = [
            [0, -u * s[1], w * s[2]],
            [u * s[0], 0, -v * s[2]],
            [-w * s[0], v * s[1], 0],
        ]
        m = rng.randint(3, mmax)
        rows = [tuple(r) for r in B]
        for _ in range(m - 3):
            rows.append(tuple(rng.randint(-3, 3) for _ in range(3)))
        d = []
        for i in range(3):
            g = math.gcd(math.gcd(B[0][i], B[1][i]), B[2][i])
            d.append(rng.choice([t for t in (1, 2, 3) if g % t == 0]))
        M = ExtendedMatrix.from_rows(rows, d)
        return GeneralizedSeed.initial(M, random_strings(rng, M))


def walk_entry_max(seed: GeneralizedSeed, dirs) -> int:
    """Largest |principal entry| seen along the matrix walk of dirs."""
    from gca import mutate_matrix

    M = seed.matrix
    worst = max(abs(M.entry(i, j)) for i in range(1, M.n + 1) for j in range(1, M.n + 1))
    for k in dirs:
        M = mutate_matrix(M, k)
        worst = max(worst, max(
            abs(M.entry(i, j)) for i in range(1, M.n + 1) for j in range(1, M.n + 1)
        ))
    return worst


def bounded_walk(seed: GeneralizedSeed, dirs, entry_cap: int = 40) -> list[int]:
    """Longest prefix of dirs whose matrix walk keeps principal entries small.

    Principal entries bound the exponents appearing in exchange products, so
    this cheap matrix-only walk predicts (and avoids) the doubly-exponential
    wild-type blowups where a cluster variable would need ~10^8 terms.
    """
    from gca import mutate_matrix

    M = seed.matrix
    out = []
    for k in dirs:
        M = mutate_matrix(M, k)
        worst = max(
            abs(M.entry(i, j)) for i in range(1, M.n + 1) for j in range(1, M.n + 1)
        )
        if worst > entry_cap:
            break
        out.append(k)
    return out


def random_poly(rng: random.Random, m: int, n: int, terms: int = 4,
                emax: int = 2, cmax: int = 5, laurent: bool = True) -> LaurentPoly:
    lo = -emax if laurent else 0
    out = {}
    for _ in range(terms):
        exp = tuple(rng.randint(lo, emax) for _ in range(m))
        c = rng.randint(-cmax, cmax)
        if c:
            out[exp] = out.get(exp, 0) + c
    return LaurentPoly(m, n, {e: c for e, c in out.items() if c})
