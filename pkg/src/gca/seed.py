"""Generalized seeds of geometric type and their mutation.

A seed is (cluster, strings, extended matrix).  The extended matrix is m x n
integer with skew-symmetrizable principal part and a divisor vector d; the
strings weight the d_i + 1 terms of each exchange polynomial with frozen
monomials.  Every mutable cluster variable is stored as a Laurent polynomial
in the *initial* variables x_1..x_m, which makes the Laurent phenomenon a
checkable property: mutation performs an exact division that must succeed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .laurent import LaurentPoly, poly_to_terms, try_exact_div


class SeedError(Exception):
    """Base for seed-level failures."""


class LaurentViolation(SeedError):
    """Exact division failed in mutation; valid inputs never trigger this."""


class SeedFormatError(SeedError):
    """Structurally malformed seed data; carries a JSON-path location."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class ExtendedMatrix:
    """The m x n matrix B-tilde with divisor vector d; b[j][i] is b_{j+1,i+1}."""

    m: int
    n: int
    b: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= self.m:
            raise ValueError(f"need 1 <= n <= m, got n={self.n}, m={self.m}")
        if len(self.b) != self.m or any(len(row) != self.n for row in self.b):
            raise ValueError("matrix must have m rows of n integer entries")
        if len(self.d) != self.n or any(di < 1 for di in self.d):
            raise ValueError("d must hold n positive integers")

    @classmethod
    def from_rows(cls, rows, d) -> "ExtendedMatrix":
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        d = tuple(int(x) for x in d)
        n = len(d)
        return cls(m=len(rows), n=n, b=rows, d=d)

    def entry(self, j: int, i: int) -> int:
        """b_{ji}, 1-based."""
        return self.b[j - 1][i - 1]

    def beta(self, j: int, i: int) -> Fraction:
        """beta_{ji} = b_{ji} / d_i as an exact rational."""
        return Fraction(self.entry(j, i), self.d[i - 1])

    def principal(self) -> tuple[tuple[int, ...], ...]:
        return self.b[: self.n]

    def skew_symmetrizer(self) -> tuple[int, ...] | None:
        """Positive integer diagonal making the principal part skew, or None.

        Sign-pattern check plus weight propagation over the components of the
        nonzero-entry graph, with cycle consistency.
        """
        n = self.n
        B = self.principal()
        for i in range(n):
            for j in range(n):
                if (B[i][j] == 0) != (B[j][i] == 0):
                    return None
                if B[i][j] * B[j][i] > 0:
                    return None
            if B[i][i] != 0:
                return None
        weight: list[Fraction | None] = [None] * n
        for start in range(n):
            if weight[start] is not None:
                continue
            weight[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if B[i][j] == 0:
                        continue
                    # s_i b_{ij} = -s_j b_{ji}
                    w = weight[i] * Fraction(-B[i][j], B[j][i])
                    if w <= 0:
                        return None
                    if weight[j] is None:
                        weight[j] = w
                        stack.append(j)
                    elif weight[j] != w:
                        return None
        lcm = 1
        for w in weight:
            lcm = lcm * w.denominator // _gcd(lcm, w.denominator)
        return tuple(int(w * lcm) for w in weight)

    def divisibility_violations(self) -> list[tuple[int, int]]:
        """Pairs (j, i), 1-based, with d_i not dividing b_{ji} for j <= n."""
        bad = []
        for i in range(1, self.n + 1):
            di = self.d[i - 1]
            for j in range(1, self.n + 1):
                if self.entry(j, i) % di:
                    bad.append((j, i))
        return bad


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def mutate_matrix(M: ExtendedMatrix, k: int) -> ExtendedMatrix:
    """Matrix mutation mu_k: negate row/column k, adjust the rest; d unchanged."""
    if not 1 <= k <= M.n:
        raise ValueError(f"direction {k} outside [1, {M.n}]")
    kk = k - 1
    rows = []
    for j in range(M.m):
        row = []
        for i in range(M.n):
            if j == kk or i == kk:
                row.append(-M.b[j][i])
            else:
                bjk = M.b[j][kk]
                bki = M.b[kk][i]
                row.append(M.b[j][i] + (abs(bjk) * bki + bjk * abs(bki)) // 2)
        rows.append(tuple(row))
    return ExtendedMatrix(M.m, M.n, tuple(rows), M.d)


@dataclass(frozen=True)
class FrozenMonomial:
    """c * x_{n+1}^{e_1} ... x_m^{e_{m-n}}; coefficient 0 marks an absent term."""

    coeff: int
    exp: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exp", tuple(self.exp))

    def is_unit_one(self) -> bool:
        return self.coeff == 1 and not any(self.exp)

    def to_poly(self, m: int, n: int) -> LaurentPoly:
        if len(self.exp) != m - n:
            raise ValueError(f"frozen exponent length {len(self.exp)} != m-n={m - n}")
        return LaurentPoly(m, n, {(0,) * n + self.exp: self.coeff})


ONE = FrozenMonomial(1, ())


def unit_monomial(m: int, n: int) -> FrozenMonomial:
    return FrozenMonomial(1, (0,) * (m - n))


@dataclass(frozen=True)
class StringSet:
    """Per-direction coefficient strings rho_i = (rho_{i,0}, ..., rho_{i,d_i})."""

    strings: tuple[tuple[FrozenMonomial, ...], ...]

    @classmethod
    def trivial(cls, m: int, n: int, d) -> "StringSet":
        one = unit_monomial(m, n)
        return cls(tuple(tuple(one for _ in range(di + 1)) for di in d))

    def entry(self, i: int, r: int) -> FrozenMonomial:
        return self.strings[i - 1][r]


def mutate_strings(S: StringSet, k: int) -> StringSet:
    """String mutation: reverse string k, leave the others untouched."""
    if not 1 <= k <= len(S.strings):
        raise ValueError(f"direction {k} outside [1, {len(S.strings)}]")
    rows = list(S.strings)
    rows[k - 1] = tuple(reversed(rows[k - 1]))
    return StringSet(tuple(rows))


@dataclass(frozen=True)
class GeneralizedSeed:
    """(cluster, strings, matrix); history records mutations, ignored by ==."""

    matrix: ExtendedMatrix
    strings: StringSet
    cluster: tuple[LaurentPoly, ...]
    history: tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def initial(cls, matrix: ExtendedMatrix, strings: StringSet) -> "GeneralizedSeed":
        cluster = tuple(
            LaurentPoly.variable(matrix.m, matrix.n, i) for i in range(1, matrix.n + 1)
        )
        return cls(matrix=matrix, strings=strings, cluster=cluster)

    @property
    def m(self) -> int:
        return self.matrix.m

    @property
    def n(self) -> int:
        return self.matrix.n


@dataclass(frozen=True)
class Violation:
    path: str
    message: str


@dataclass
class ValidationReport:
    errors: list[Violation]
    warnings: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_obj(self) -> dict:
        return {
            "valid": self.ok,
            "errors": [{"path": v.path, "message": v.message} for v in self.errors],
            "warnings": [{"path": v.path, "message": v.message} for v in self.warnings],
        }


def validate_seed(seed: GeneralizedSeed) -> ValidationReport:
    """Check every seed invariant; violations are data, not exceptions."""
    errors: list[Violation] = []
    warnings: list[Violation] = []
    M = seed.matrix
    m, n = M.m, M.n

    if M.skew_symmetrizer() is None:
        errors.append(Violation("/B", "principal part is not skew-symmetrizable"))
    for j, i in M.divisibility_violations():
        errors.append(Violation(
            f"/B/{j - 1}/{i - 1}",
            f"d_{i}={M.d[i - 1]} does not divide b_{{{j}{i}}}={M.entry(j, i)}",
        ))

    if len(seed.strings.strings) != n:
        errors.append(Violation("/strings", f"expected {n} strings"))
    else:
        for i, row in enumerate(seed.strings.strings, start=1):
            if len(row) != M.d[i - 1] + 1:
                errors.append(Violation(
                    f"/strings/{i - 1}",
                    f"string {i} must have d_{i}+1={M.d[i - 1] + 1} entries, has {len(row)}",
                ))
                continue
            for r, mono in enumerate(row):
                path = f"/strings/{i - 1}/{r}"
                if len(mono.exp) != m - n:
                    errors.append(Violation(path, f"exponent length must be m-n={m - n}"))
                    continue
                if r in (0, len(row) - 1):
                    if not mono.is_unit_one():
                        errors.append(Violation(path, "first and last string entries must be 1"))
                else:
                    if any(e < 0 for e in mono.exp):
                        errors.append(Violation(path, "string monomials must have nonnegative exponents"))
                    if mono.coeff <= 0:
                        warnings.append(Violation(path, f"nonpositive string coefficient {mono.coeff}"))

    if len(seed.cluster) != n:
        errors.append(Violation("/cluster", f"expected {n} cluster variables"))
    else:
        for i, p in enumerate(seed.cluster, start=1):
            path = f"/cluster/{i - 1}"
            if p.m != m or p.n != n:
                errors.append(Violation(path, f"ambient (m={p.m}, n={p.n}) != (m={m}, n={n})"))
            elif not p:
                errors.append(Violation(path, "cluster variable is zero"))
        if not seed.history:
            for i, p in enumerate(seed.cluster, start=1):
                if p.terms and p != LaurentPoly.variable(m, n, i):
                    warnings.append(Violation(
                        f"/cluster/{i - 1}", "seed without history is not in initial form"
                    ))
                    break
    return ValidationReport(errors, warnings)


def _floor_pos(x: Fraction) -> int:
    """floor([x]_+): floor of x when positive, else 0."""
    return floor(x) if x > 0 else 0


def exchange_polynomial(seed: GeneralizedSeed, k: int) -> LaurentPoly:
    """The product x_k * x'_k of the seed, expressed in the initial variables.

    The sum runs in the seed's current variables using the current beta_{jk};
    each current cluster variable is then replaced by its stored Laurent
    polynomial, frozen variables stand for themselves.
    """
    M = seed.matrix
    m, n = M.m, M.n
    if not 1 <= k <= n:
        raise ValueError(f"direction {k} outside [1, {n}]")
    dk = M.d[k - 1]
    betas = [M.beta(j, k) for j in range(1, m + 1)]
    pow_cache: dict[tuple[int, int], LaurentPoly] = {}

    def power(j: int, e: int) -> LaurentPoly:
        got = pow_cache.get((j, e))
        if got is None:
            base = seed.cluster[j - 1] if j <= n else LaurentPoly.variable(m, n, j)
            got = pow_cache[(j, e)] = base ** e
        return got

    total = LaurentPoly.zero(m, n)
    for r in range(dk + 1):
        rho = seed.strings.entry(k, r)
        if rho.coeff == 0:
            continue
        term = rho.to_poly(m, n)
        for j in range(1, m + 1):
            bj = betas[j - 1]
            e = _floor_pos(r * bj) + _floor_pos(-(dk - r) * bj)
            if e:
                term = term * power(j, e)
        total = total + term
    return total


def mutate_seed(seed: GeneralizedSeed, k: int) -> GeneralizedSeed:
    """Seed mutation mu_k; the exact division is the Laurent-phenomenon check."""
    ex = exchange_polynomial(seed, k)
    new_var = try_exact_div(ex, seed.cluster[k - 1])
    if new_var is None:
        raise LaurentViolation(
            f"exchange polynomial not divisible by cluster variable {k}"
        )
    cluster = list(seed.cluster)
    cluster[k - 1] = new_var
    return GeneralizedSeed(
        matrix=mutate_matrix(seed.matrix, k),
        strings=mutate_strings(seed.strings, k),
        cluster=tuple(cluster),
        history=seed.history + (k,),
    )


def apply_sequence(seed: GeneralizedSeed, dirs) -> GeneralizedSeed:
    """Left-to-right fold of mutate_seed."""
    for k in dirs:
        seed = mutate_seed(seed, k)
    return seed


# -- seed files --------------------------------------------------------------

def seed_to_obj(seed: GeneralizedSeed) -> dict:
    """JSON object for a seed; cluster/history included for round trips."""
    return {
        "n": seed.n,
        "m": seed.m,
        "B": [list(row) for row in seed.matrix.b],
        "d": list(seed.matrix.d),
        "strings": [
            [{"coeff": str(mono.coeff), "exp": list(mono.exp)} for mono in row]
            for row in seed.strings.strings
        ],
        "cluster": [poly_to_terms(p) for p in seed.cluster],
        "history": list(seed.history),
    }


def _expect_int(obj, path: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise SeedFormatError(path, "expected an integer")
    return obj


def seed_from_obj(obj) -> GeneralizedSeed:
    """Parse a seed file object; the cluster always restarts in initial form.

    Extra keys ("cluster", "history", comments) are ignored: seed files
    carry combinatorial data only.
    """
    if not isinstance(obj, dict):
        raise SeedFormatError("", "seed file must be a JSON object")
    for key in ("n", "m", "B", "d", "strings"):
        if key not in obj:
            raise SeedFormatError(f"/{key}", "missing required field")
    n = _expect_int(obj["n"], "/n")
    m = _expect_int(obj["m"], "/m")
    if not 1 <= n <= m:
        raise SeedFormatError("/n", f"need 1 <= n <= m, got n={n}, m={m}")
    B = obj["B"]
    if not isinstance(B, list) or len(B) != m:
        raise SeedFormatError("/B", f"expected {m} rows")
    rows = []
    for j, row in enumerate(B):
        if not isinstance(row, list) or len(row) != n:
            raise SeedFormatError(f"/B/{j}", f"expected {n} entries")
        rows.append(tuple(_expect_int(e, f"/B/{j}/{i}") for i, e in enumerate(row)))
    d = obj["d"]
    if not isinstance(d, list) or len(d) != n:
        raise SeedFormatError("/d", f"expected {n} entries")
    dv = []
    for i, di in enumerate(d):
        di = _expect_int(di, f"/d/{i}")
        if di < 1:
            raise SeedFormatError(f"/d/{i}", "divisors must be positive")
        dv.append(di)
    raw_strings = obj["strings"]
    if not isinstance(raw_strings, list) or len(raw_strings) != n:
        raise SeedFormatError("/strings", f"expected {n} strings")
    strings = []
    for i, row in enumerate(raw_strings):
        if not isinstance(row, list):
            raise SeedFormatError(f"/strings/{i}", "expected an array of monomials")
        monos = []
        for r, item in enumerate(row):
            path = f"/strings/{i}/{r}"
            if not isinstance(item, dict) or set(item) != {"coeff", "exp"}:
                raise SeedFormatError(path, "expected an object with 'coeff' and 'exp'")
            raw = item["coeff"]
            if not isinstance(raw, str):
                raise SeedFormatError(f"{path}/coeff", "must be a decimal string")
            try:
                coeff = int(raw)
            except ValueError:
                raise SeedFormatError(f"{path}/coeff", f"{raw!r} is not a decimal integer") from None
            exp = item["exp"]
            if (not isinstance(exp, list) or len(exp) != m - n
                    or not all(isinstance(e, int) and not isinstance(e, bool) for e in exp)):
                raise SeedFormatError(f"{path}/exp", f"expected {m - n} integers")
            monos.append(FrozenMonomial(coeff, tuple(exp)))
        strings.append(tuple(monos))
    matrix = ExtendedMatrix(m=m, n=n, b=tuple(rows), d=tuple(dv))
    return GeneralizedSeed.initial(matrix, StringSet(tuple(strings)))


def load_seed(path: str) -> GeneralizedSeed:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SeedFormatError("", f"invalid JSON: {exc}") from None
    return seed_from_obj(obj)
