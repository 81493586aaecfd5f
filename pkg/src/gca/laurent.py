"""Exact sparse multivariate Laurent polynomial arithmetic.

Values live in Z[x_1^{+-1}, ..., x_m^{+-1}].  The first ``n`` variables are
the mutable cluster directions, the remaining ``m - n`` are frozen;
ring arithmetic ignores the split, the leading-term machinery does not.

A polynomial stores a finite map from exponent tuples (length ``m``, entries
may be negative) to nonzero integer coefficients.  Zero coefficients are
never stored, so two values are equal exactly when their term maps are.
Instances are immutable by convention: every operation returns a new value,
so polynomials can be shared freely across threads.

Exponent tuples compare lexicographically with x_1 most significant, which
is precisely Python's tuple ordering; ``max`` over a term map is therefore
the lex-leading exponent.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd as _int_gcd
from operator import add as _add, sub as _sub
from typing import Iterable, Mapping, Union

import numpy as np

Coeff = Union[int, Fraction]


class LaurentError(Exception):
    """Base for all Laurent-ring failures."""


class AmbientMismatch(LaurentError):
    """Operands live in different ambient rings (different m or n)."""


class DivisionByZero(LaurentError):
    """Exact division by the zero polynomial."""


class EmptyPolynomial(LaurentError):
    """leading_term of the zero polynomial."""


class ZeroSubstitution(LaurentError):
    """Zero assigned to a variable occurring with a negative exponent."""


class StepCapExceeded(LaurentError):
    """Internal guard tripped in exact division; never means NotDivisible."""


class TermFormatError(LaurentError):
    """Malformed JSON term list."""


def _as_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


# Hot loops (products, exact division) pack exponent vectors into single
# integers, one 32-bit lane per variable with x_1 most significant and a
# 2^30 offset keeping lanes nonnegative.  Lex order on exponent tuples is
# then plain numeric order, and adding exponent vectors is one integer
# addition (minus the offset constant).  Lanes never interact as long as
# every exponent stays below the overflow bound.
_LANE = 32
_MASK = (1 << _LANE) - 1
_OFFSET = 1 << 30
_PACK_LIMIT = 1 << 29


def _pack_const(m: int) -> int:
    c = 0
    for _ in range(m):
        c = (c << _LANE) | _OFFSET
    return c


def _pack(exp) -> int:
    k = 0
    for e in exp:
        k = (k << _LANE) | (e + _OFFSET)
    return k


def _unpack(key: int, m: int) -> tuple:
    out = [0] * m
    for i in range(m - 1, -1, -1):
        out[i] = (key & _MASK) - _OFFSET
        key >>= _LANE
    return tuple(out)


def _packable(terms) -> bool:
    return all(
        -_PACK_LIMIT < e < _PACK_LIMIT for exp in terms for e in exp
    )


# Above this pair count, products switch to a vectorized path: exponent
# vectors are packed into int64 keys by a mixed radix sized from the actual
# ranges, the outer product is materialized in blocks, and duplicate keys are
# merged by sort + reduceat.  All arithmetic stays in int64 with bounds
# checked up front, so the result is exact or the caller falls back.
_DENSE_PAIRS = 50_000
_DENSE_BLOCK = 8_000_000


def _mul_dense(a: dict, b: dict, m: int) -> dict | None:
    la, lb = len(a), len(b)
    ka = list(a)
    kb = list(b)
    lo = [0] * m
    hi = [0] * m
    for i in range(m):
        alo = min(e[i] for e in ka)
        ahi = max(e[i] for e in ka)
        blo = min(e[i] for e in kb)
        bhi = max(e[i] for e in kb)
        lo[i] = alo + blo
        hi[i] = ahi + bhi
    radix = [h - l + 1 for l, h in zip(lo, hi)]
    total_bits = 0
    for r in radix:
        total_bits += max(r - 1, 1).bit_length()
    if total_bits > 62:
        return None
    try:
        ca = np.fromiter((a[e] for e in ka), dtype=np.int64, count=la)
        cb = np.fromiter((b[e] for e in kb), dtype=np.int64, count=lb)
    except (OverflowError, TypeError, ValueError):
        return None
    max_a = int(np.max(np.abs(ca)))
    max_b = int(np.max(np.abs(cb)))
    if max_a * max_b * min(la, lb) >= 2 ** 62:
        return None
    weights = [1] * m
    acc = 1
    for i in range(m - 1, -1, -1):
        weights[i] = acc
        acc *= radix[i]

    def pack(keys, base_lo):
        out = np.zeros(len(keys), dtype=np.int64)
        for i in range(m):
            col = np.fromiter((e[i] for e in keys), dtype=np.int64, count=len(keys))
            out += (col - base_lo[i]) * weights[i]
        return out

    alos = [min(e[i] for e in ka) for i in range(m)]
    blos = [min(e[i] for e in kb) for i in range(m)]
    pa = pack(ka, alos)
    pb = pack(kb, blos)
    block = max(1, _DENSE_BLOCK // max(lb, 1))
    chunks_k = []
    chunks_c = []
    for start in range(0, la, block):
        kk = (pa[start:start + block, None] + pb[None, :]).ravel()
        cc = (ca[start:start + block, None] * cb[None, :]).ravel()
        order = np.argsort(kk, kind="stable")
        kk = kk[order]
        cc = cc[order]
        cuts = np.flatnonzero(np.diff(kk)) + 1
        starts = np.concatenate(([0], cuts))
        chunks_k.append(kk[starts])
        chunks_c.append(np.add.reduceat(cc, starts))
    kk = np.concatenate(chunks_k)
    cc = np.concatenate(chunks_c)
    if len(chunks_k) > 1:
        order = np.argsort(kk, kind="stable")
        kk = kk[order]
        cc = cc[order]
        cuts = np.flatnonzero(np.diff(kk)) + 1
        starts = np.concatenate(([0], cuts))
        kk = kk[starts]
        cc = np.add.reduceat(cc, starts)
    keep = cc != 0
    kk = kk[keep]
    cc = cc[keep]
    cols = []
    rest = kk
    for i in range(m):
        q, rest = np.divmod(rest, weights[i]) if weights[i] != 1 else (rest, np.zeros_like(rest))
        cols.append(q + lo[i])
    exps = np.stack(cols, axis=1) if m else np.zeros((len(kk), 0), dtype=np.int64)
    out: dict[tuple, int] = {}
    coeffs = cc.tolist()
    for idx, row in enumerate(exps.tolist()):
        out[tuple(row)] = coeffs[idx]
    return out


class LaurentPoly:
    """Sparse Laurent polynomial in m variables, n of them mutable."""

    __slots__ = ("m", "n", "terms")

    @classmethod
    def _raw(cls, m: int, n: int, terms: dict) -> "LaurentPoly":
        """Wrap an already-canonical term dict without copying."""
        p = object.__new__(cls)
        p.m = m
        p.n = n
        p.terms = terms
        return p

    def __init__(self, m: int, n: int, terms: Mapping[tuple, Coeff] | None = None):
        if not (1 <= n <= m):
            raise ValueError(f"ambient requires 1 <= n <= m, got m={m}, n={n}")
        self.m = m
        self.n = n
        canon: dict[tuple, Coeff] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff == 0:
                    continue
                exp = tuple(exp)
                if len(exp) != m:
                    raise ValueError(f"exponent length {len(exp)} != m={m}")
                canon[exp] = _as_coeff(coeff)
        self.terms = canon

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, m: int, n: int) -> "LaurentPoly":
        return cls(m, n)

    @classmethod
    def constant(cls, m: int, n: int, value: Coeff) -> "LaurentPoly":
        return cls(m, n, {(0,) * m: value})

    @classmethod
    def one(cls, m: int, n: int) -> "LaurentPoly":
        return cls.constant(m, n, 1)

    @classmethod
    def variable(cls, m: int, n: int, index: int, power: int = 1) -> "LaurentPoly":
        """x_index**power, with index in [1, m]."""
        if not 1 <= index <= m:
            raise ValueError(f"variable index {index} outside [1, {m}]")
        exp = [0] * m
        exp[index - 1] = power
        return cls(m, n, {tuple(exp): 1})

    @classmethod
    def monomial(cls, m: int, n: int, coeff: Coeff, exp: Iterable[int]) -> "LaurentPoly":
        return cls(m, n, {tuple(exp): coeff})

    # -- basic queries -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.m, self.n, tuple(sorted(self.terms.items()))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_frozen(self) -> bool:
        """Support touches only the frozen coordinates n+1..m."""
        n = self.n
        return all(not any(exp[:n]) for exp in self.terms)

    def min_exponents(self) -> tuple:
        """Componentwise minimum over the support (the monomial content)."""
        if not self.terms:
            raise EmptyPolynomial("zero polynomial has no exponents")
        its = iter(self.terms)
        lo = list(next(its))
        for exp in its:
            for i, e in enumerate(exp):
                if e < lo[i]:
                    lo[i] = e
        return tuple(lo)

    def coefficient(self, exp: Iterable[int]) -> Coeff:
        return self.terms.get(tuple(exp), 0)

    # -- arithmetic --------------------------------------------------------

    def _check_ambient(self, other: "LaurentPoly") -> None:
        if self.m != other.m or self.n != other.n:
            raise AmbientMismatch(
                f"(m={self.m}, n={self.n}) vs (m={other.m}, n={other.n})"
            )

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            self._check_ambient(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.m, self.n, other)
        return None

    def __add__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in q.terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                del out[exp]
        return LaurentPoly._raw(self.m, self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.m, self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in q.terms.items():
            v = out.get(exp, 0) - c
            if v:
                out[exp] = v
            else:
                del out[exp]
        return LaurentPoly._raw(self.m, self.n, out)

    def __rsub__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q - self

    def __mul__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.terms, q.terms
        if not a or not b:
            return LaurentPoly.zero(self.m, self.n)
        if len(a) > len(b):
            a, b = b, a
        m = self.m
        if len(a) * len(b) >= _DENSE_PAIRS:
            dense = _mul_dense(a, b, m)
            if dense is not None:
                return LaurentPoly._raw(m, self.n, dense)
        if _packable(a) and _packable(b):
            const = _pack_const(m)
            bp = [(_pack(e), c) for e, c in b.items()]
            out: dict[int, Coeff] = {}
            get = out.get
            for ea, ca in a.items():
                ka = _pack(ea) - const
                for kb, cb in bp:
                    k = ka + kb
                    v = get(k, 0) + ca * cb
                    if v:
                        out[k] = v
                    else:
                        del out[k]
            return LaurentPoly._raw(
                m, self.n, {_unpack(k, m): v for k, v in out.items()}
            )
        out2: dict[tuple, Coeff] = {}
        get2 = out2.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(map(_add, ea, eb))
                v = get2(e, 0) + ca * cb
                if v:
                    out2[e] = v
                else:
                    del out2[e]
        return LaurentPoly._raw(m, self.n, out2)

    __rmul__ = __mul__

    def _square(self) -> "LaurentPoly":
        m = self.m
        if len(self.terms) ** 2 >= _DENSE_PAIRS:
            dense = _mul_dense(self.terms, self.terms, m)
            if dense is not None:
                return LaurentPoly._raw(m, self.n, dense)
        if _packable(self.terms):
            const = _pack_const(m)
            items = [(_pack(e), c) for e, c in self.terms.items()]
            out: dict[int, Coeff] = {}
            get = out.get
            for idx, (ka, ca) in enumerate(items):
                k = ka + ka - const
                v = get(k, 0) + ca * ca
                if v:
                    out[k] = v
                else:
                    del out[k]
                ca2 = ca + ca
                kc = ka - const
                for kb, cb in items[idx + 1:]:
                    k = kc + kb
                    v = get(k, 0) + ca2 * cb
                    if v:
                        out[k] = v
                    else:
                        del out[k]
            return LaurentPoly._raw(
                m, self.n, {_unpack(k, m): v for k, v in out.items()}
            )
        items2 = list(self.terms.items())
        out2: dict[tuple, Coeff] = {}
        get2 = out2.get
        for idx, (ea, ca) in enumerate(items2):
            e = tuple(x + x for x in ea)
            v = get2(e, 0) + ca * ca
            if v:
                out2[e] = v
            else:
                del out2[e]
            ca2 = ca + ca
            for eb, cb in items2[idx + 1:]:
                e = tuple(map(_add, ea, eb))
                v = get2(e, 0) + ca2 * cb
                if v:
                    out2[e] = v
                else:
                    del out2[e]
        return LaurentPoly._raw(m, self.n, out2)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k == 0:
            return LaurentPoly.one(self.m, self.n)
        if k < 0:
            return self.inverse_monomial() ** (-k)
        base = self
        out = None
        while k:
            if k & 1:
                out = base if out is None else out * base
            k >>= 1
            if k:
                base = base._square()
        return out

    def shift(self, exp: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial x^exp."""
        exp = tuple(exp)
        return LaurentPoly._raw(
            self.m, self.n,
            {tuple(map(_add, e, exp)): c for e, c in self.terms.items()},
        )

    def inverse_monomial(self) -> "LaurentPoly":
        """Inverse of a +-1-coefficient monomial."""
        if len(self.terms) != 1:
            raise LaurentError("only monomials are invertible")
        (exp, c), = self.terms.items()
        if c not in (1, -1):
            raise LaurentError(f"coefficient {c} is not a unit of Z")
        return LaurentPoly(self.m, self.n, {tuple(-e for e in exp): c})

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly(m={self.m}, n={self.n}, {str(self)})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            vs = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exp) if e
            )
            if not vs:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(vs)
            elif c == -1:
                chunks.append(f"-{vs}")
            else:
                chunks.append(f"{c}*{vs}")
        out = " + ".join(chunks)
        return out.replace("+ -", "- ")


def try_exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly | None:
    """Exact quotient p/q in the Laurent ring, or None when no quotient exists.

    Both operands are shifted by monomials to clear negative exponents, then
    reduced by lex leading-term long division; any leftover means not
    divisible.  The step cap only guards against nontermination bugs and
    raises StepCapExceeded rather than misreporting NotDivisible.
    """
    p._check_ambient(q)
    if not q:
        raise DivisionByZero("exact division by zero")
    if not p:
        return LaurentPoly.zero(p.m, p.n)
    sp = p.min_exponents()
    sq = q.min_exponents()
    pd = {tuple(e - s for e, s in zip(exp, sp)): c for exp, c in p.terms.items()}
    qd = {tuple(e - s for e, s in zip(exp, sq)): c for exp, c in q.terms.items()}
    cap = (len(pd) + 1) * (len(qd) + 1) * 64
    quot = _poly_div_raw(pd, qd, cap)
    if quot is None:
        return None
    shift = tuple(a - b for a, b in zip(sp, sq))
    return LaurentPoly(p.m, p.n, {
        tuple(map(sum, zip(e, shift))): c for e, c in quot.items()
    })


def _poly_div_raw(pd: dict, qd: dict, cap: int | None = None) -> dict | None:
    """Long division of nonnegative-exponent term dicts; None if inexact.

    The leading exponent of the remainder is tracked by a lazily pruned heap
    (negating keys turns Python's min-heap into a lex max-heap), so each
    elimination costs about |q| log instead of a full remainder scan.
    Exponents are packed into integer keys when they fit the lanes.
    """
    if _packable(pd) and _packable(qd):
        some = next(iter(pd))
        return _poly_div_packed(pd, qd, len(some), cap)
    qlead = max(qd)
    qc = qd[qlead]
    rem = dict(pd)
    heap = [tuple(-x for x in e) for e in pd]
    heapq.heapify(heap)
    quot: dict[tuple, int] = {}
    steps = 0
    while True:
        rlead = None
        while heap:
            e = tuple(-x for x in heap[0])
            if e in rem:
                rlead = e
                break
            heapq.heappop(heap)
        if rlead is None:
            break
        steps += 1
        if cap is not None and steps > cap:
            raise StepCapExceeded(f"exact division exceeded {cap} eliminations")
        t = tuple(map(_sub, rlead, qlead))
        if any(e < 0 for e in t):
            return None
        c, r = divmod(rem[rlead], qc)
        if r:
            return None
        quot[t] = c
        for qe, qco in qd.items():
            key = tuple(map(_add, qe, t))
            old = rem.get(key)
            if old is None:
                rem[key] = -c * qco
                heapq.heappush(heap, tuple(-x for x in key))
            else:
                v = old - c * qco
                if v:
                    rem[key] = v
                else:
                    del rem[key]
    return quot


def _poly_div_packed(pd: dict, qd: dict, m: int, cap: int | None) -> dict | None:
    const = _pack_const(m)
    rem = {_pack(e): c for e, c in pd.items()}
    qp = [(_pack(e), c) for e, c in qd.items()]
    qlead = max(k for k, _ in qp)
    qc = dict(qp)[qlead]
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[tuple, int] = {}
    steps = 0
    while True:
        rlead = None
        while heap:
            k = -heap[0]
            if k in rem:
                rlead = k
                break
            heapq.heappop(heap)
        if rlead is None:
            break
        steps += 1
        if cap is not None and steps > cap:
            raise StepCapExceeded(f"exact division exceeded {cap} eliminations")
        t = rlead - qlead + const
        texp = _unpack(t, m)
        if any(e < 0 for e in texp):
            return None
        c, r = divmod(rem[rlead], qc)
        if r:
            return None
        quot[texp] = c
        tshift = t - const
        for qk, qco in qp:
            key = qk + tshift
            old = rem.get(key)
            if old is None:
                rem[key] = -c * qco
                heapq.heappush(heap, -key)
            else:
                v = old - c * qco
                if v:
                    rem[key] = v
                else:
                    del rem[key]
    return quot


def leading_term(p: LaurentPoly) -> tuple[tuple, LaurentPoly]:
    """Lex-greatest mutable exponent group and its full frozen coefficient.

    Terms are grouped by their exponents on coordinates 1..n; the returned
    coefficient collects every term of the winning group as a polynomial
    supported on the frozen coordinates only.
    """
    if not p:
        raise EmptyPolynomial("leading term of the zero polynomial")
    n = p.n
    e = max(exp[:n] for exp in p.terms)
    zeros = (0,) * n
    coeff = {
        zeros + exp[n:]: c for exp, c in p.terms.items() if exp[:n] == e
    }
    return e, LaurentPoly(p.m, p.n, coeff)


def evaluate(p: LaurentPoly, assignment: Mapping[int, Coeff]) -> LaurentPoly:
    """Substitute values for variables (1-based indices), exactly.

    Values may be integers or Fractions; a zero value is rejected when the
    variable occurs with a negative exponent.  Coefficients of the result may
    be Fractions when negative exponents meet non-unit values.
    """
    for idx in assignment:
        if not 1 <= idx <= p.m:
            raise ValueError(f"variable index {idx} outside [1, {p.m}]")
    for idx, val in assignment.items():
        if val == 0 and any(exp[idx - 1] < 0 for exp in p.terms):
            raise ZeroSubstitution(f"x{idx}=0 but x{idx} occurs with negative exponent")
    out: dict[tuple, Coeff] = {}
    for exp, c in p.terms.items():
        val: Coeff = c
        ne = list(exp)
        dead = False
        for idx, v in assignment.items():
            k = exp[idx - 1]
            ne[idx - 1] = 0
            if k == 0:
                continue
            if v == 0:
                dead = True
                break
            val = val * (Fraction(v) ** k if k < 0 else v ** k)
        if dead:
            continue
        key = tuple(ne)
        s = out.get(key, 0) + val
        if s:
            out[key] = s
        else:
            del out[key]
    return LaurentPoly(p.m, p.n, out)


# -- multivariate GCD (primitive PRS, one variable at a time) ---------------

def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """A GCD of the polynomial parts, deterministic primitive-PRS recursion.

    Monomial factors (the units of the Laurent ring) are stripped from both
    inputs and never reappear; integer content is kept, since integers other
    than +-1 are not units.  The result has nonnegative exponents, zero
    minimum exponent in every variable, and positive lex-leading coefficient.
    gcd(p, 0) is the normalization of p; gcd(0, 0) = 0.
    """
    p._check_ambient(q)
    if not p and not q:
        return LaurentPoly.zero(p.m, p.n)
    if not p:
        return LaurentPoly(p.m, p.n, _positive(_strip_monomial(q)))
    if not q:
        return LaurentPoly(p.m, p.n, _positive(_strip_monomial(p)))
    g = _dict_gcd(_strip_monomial(p), _strip_monomial(q), p.m)
    return LaurentPoly(p.m, p.n, _positive(g))


def _strip_monomial(p: LaurentPoly) -> dict:
    lo = p.min_exponents()
    return {tuple(e - s for e, s in zip(exp, lo)): c for exp, c in p.terms.items()}


def _positive(d: dict) -> dict:
    if d and d[max(d)] < 0:
        return {e: -c for e, c in d.items()}
    return d


def _dict_gcd(a: dict, b: dict, m: int) -> dict:
    if not a:
        return _positive(b)
    if not b:
        return _positive(a)
    v = None
    for exp in a:
        for i, e in enumerate(exp):
            if e:
                v = i if v is None else min(v, i)
                break
    for exp in b:
        for i, e in enumerate(exp):
            if e:
                v = i if v is None else min(v, i)
                break
    if v is None:
        za = (0,) * m
        return {za: _int_gcd(a[za], b[za])}
    ua, ub = _to_univar(a, v), _to_univar(b, v)
    ca, pa = _univar_content_pp(ua, m)
    cb, pb = _univar_content_pp(ub, m)
    cont = _dict_gcd(ca, cb, m)
    f, g = (pa, pb) if max(pa) >= max(pb) else (pb, pa)
    while g:
        r = _pseudo_rem(f, g, m)
        f, g = g, (_univar_content_pp(r, m)[1] if r else {})
    return _dict_mul(cont, _from_univar(f, v, m), m)


def _to_univar(d: dict, v: int) -> dict:
    """View a term dict as univariate in variable index v over sub-dicts."""
    out: dict[int, dict] = {}
    for exp, c in d.items():
        k = exp[v]
        rest = exp[:v] + (0,) + exp[v + 1:]
        out.setdefault(k, {})[rest] = c
    return out


def _from_univar(u: dict, v: int, m: int) -> dict:
    out: dict[tuple, int] = {}
    for k, sub in u.items():
        for exp, c in sub.items():
            e = list(exp)
            e[v] = k
            out[tuple(e)] = c
    return out


def _univar_content_pp(u: dict, m: int) -> tuple[dict, dict]:
    """(content, primitive part) of a univariate-over-dicts polynomial."""
    cont: dict = {}
    for k in sorted(u):
        cont = _dict_gcd(cont, u[k], m)
    pp = {k: _dict_exact_div(sub, cont) for k, sub in u.items()}
    return cont, pp


def _dict_exact_div(a: dict, b: dict) -> dict:
    quot = _poly_div_raw(a, b)
    if quot is None:  # pragma: no cover - PRS theory guarantees exactness
        raise LaurentError("internal: inexact division during GCD")
    return quot


def _dict_mul(a: dict, b: dict, m: int) -> dict:
    out: dict[tuple, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(_add, ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def _dict_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            del out[e]
    return out


def _dict_scale(a: dict, c) -> dict:
    if c == 0:
        return {}
    return {e: co * c for e, co in a.items()}


def _pseudo_rem(f: dict, g: dict, m: int) -> dict:
    """Pseudo-remainder of univariate-over-dict polynomials (content-safe)."""
    dg = max(g)
    lc_g = g[dg]
    r = f
    while r and max(r) >= dg:
        dr = max(r)
        lc_r = r[dr]
        # r := lc_g * r - lc_r * x^(dr-dg) * g, keeping coefficients integral
        new: dict[int, dict] = {}
        for k, sub in r.items():
            new[k] = _dict_mul(sub, lc_g, m)
        for k, sub in g.items():
            t = k + dr - dg
            prod = _dict_mul(sub, lc_r, m)
            new[t] = _dict_sub(new.get(t, {}), prod)
        r = {k: sub for k, sub in new.items() if sub}
    return r


# -- JSON term-list interchange ---------------------------------------------

def poly_to_terms(p: LaurentPoly) -> list[dict]:
    """Serialize as a term list, lex-descending on the exponent vector."""
    out = []
    for exp in sorted(p.terms, reverse=True):
        c = _as_coeff(p.terms[exp])
        if not isinstance(c, int):
            raise TermFormatError(f"non-integer coefficient {c!r} is not serializable")
        out.append({"coeff": str(c), "exp": list(exp)})
    return out


def poly_from_terms(m: int, n: int, items, path: str = "") -> LaurentPoly:
    """Parse the JSON term-list format, rejecting duplicates and zeros."""
    if not isinstance(items, list):
        raise TermFormatError(f"{path}: expected an array of terms")
    terms: dict[tuple, int] = {}
    for i, item in enumerate(items):
        here = f"{path}/{i}"
        if not isinstance(item, dict) or set(item) != {"coeff", "exp"}:
            raise TermFormatError(f"{here}: term must be an object with 'coeff' and 'exp'")
        raw = item["coeff"]
        if not isinstance(raw, str):
            raise TermFormatError(f"{here}/coeff: must be a decimal string")
        try:
            coeff = int(raw)
        except ValueError:
            raise TermFormatError(f"{here}/coeff: {raw!r} is not a decimal integer") from None
        if coeff == 0:
            raise TermFormatError(f"{here}/coeff: zero coefficients are not stored")
        exp = item["exp"]
        if (not isinstance(exp, list) or len(exp) != m
                or not all(isinstance(e, int) and not isinstance(e, bool) for e in exp)):
            raise TermFormatError(f"{here}/exp: expected {m} integers")
        key = tuple(exp)
        if key in terms:
            raise TermFormatError(f"{here}/exp: duplicate exponent vector {exp}")
        terms[key] = coeff
    return LaurentPoly(m, n, terms)
