"""Built-in golden verification suite.

The two worked examples live as data files next to the code; every check
recomputes a quantity and compares it against the recorded value, so a
corrupted data file or a regression both surface as a named failing check.
"""

from __future__ import annotations

import json
from importlib import resources

from .basis import (
    exchange_partners,
    independence_rank,
    pbw_expand,
    projective_sequence,
    proposition_witness,
    coprimality_check,
    three_cycle_certificate,
)
from .graph import build_digraph, find_three_cycles, is_acyclic
from .laurent import LaurentPoly, poly_from_terms
from .seed import mutate_matrix, seed_from_obj, validate_seed


def _load(name: str) -> dict:
    text = resources.files("gca.data").joinpath(name).read_text(encoding="utf-8")
    return json.loads(text)


def _poly(doc_seed, items) -> LaurentPoly:
    return poly_from_terms(doc_seed.m, doc_seed.n, items)


def _section3_checks(doc: dict):
    seed = seed_from_obj(doc["seed"])
    exp = doc["expected"]
    m, n = seed.m, seed.n

    def c_validate():
        rep = validate_seed(seed)
        return rep.ok, "; ".join(v.message for v in rep.errors)

    yield "section3/validate", c_validate

    def make_exchange(i):
        def check():
            got = exchange_partners(seed)[i - 1]
            want = _poly(seed, exp["exchange"][i - 1])
            return got == want, f"x'_{i} = {got}"
        return check

    for i in (1, 2, 3):
        yield f"section3/exchange-{i}", make_exchange(i)

    def c_mu1():
        got = mutate_matrix(seed.matrix, 1)
        want = tuple(tuple(r) for r in exp["matrix_mu1"])
        return got.b == want, str(got.b)

    yield "section3/matrix-mu1", c_mu1

    def c_mu12():
        got = mutate_matrix(mutate_matrix(seed.matrix, 1), 2)
        want = tuple(tuple(r) for r in exp["matrix_mu1_mu2"])
        return got.b == want, str(got.b)

    yield "section3/matrix-mu1-mu2", c_mu12

    data = None

    def get_data():
        nonlocal data
        if data is None:
            data = projective_sequence(seed)
        return data

    def c_proj1():
        got = get_data().projective[0]
        return got == _poly(seed, exp["projective_1"]), str(got)

    yield "section3/projective-1", c_proj1

    def c_proj2():
        got = get_data().projective[1]
        return got == _poly(seed, exp["projective_2"]), str(got)

    yield "section3/projective-2", c_proj2

    def c_f1():
        # x_1 * x_2^(2) = x'_2 + f_1
        d = get_data()
        f1 = _poly(seed, exp["f1"])
        lhs = LaurentPoly.variable(m, n, 1) * d.projective[1]
        rhs = exchange_partners(seed)[1] + f1
        return lhs == rhs, f"f1 = {f1}"

    yield "section3/identity-f1", c_f1

    def c_witness2():
        w = proposition_witness(seed, 2, get_data())
        ok = (
            w.monomial == _poly(seed, exp["witness_monomial_2"])
            and w.f == _poly(seed, exp["f1"])
            and w.check
        )
        return ok, f"M = {w.monomial}, check = {w.check}"

    yield "section3/witness-2", c_witness2

    def c_witness3():
        # x_1^3 x_2^3 x_3^(3) = x'_3 * M + f_2 with f_2 expandable
        w = proposition_witness(seed, 3, get_data())
        ok = w.monomial == _poly(seed, exp["witness_monomial_3"]) and w.check
        return ok, f"M = {w.monomial}, check = {w.check}, |f2 expansion| = {len(w.expansion or ())}"

    yield "section3/witness-3", c_witness3

    def c_leading1():
        ld = get_data().leading[0]
        ok = (
            list(ld.exponent) == exp["leading_1"]["exponent"]
            and ld.coefficient == _poly(seed, exp["leading_1"]["coefficient"])
        )
        return ok, f"exponent {ld.exponent}, coefficient {ld.coefficient}"

    yield "section3/leading-1", c_leading1

    def c_coprime():
        pairs = coprimality_check(seed)
        return all(p.coprime for p in pairs), \
            ", ".join(f"({p.i},{p.j}):{p.coprime}" for p in pairs)

    yield "section3/coprime", c_coprime

    def c_acyclic():
        return is_acyclic(build_digraph(seed.matrix)), ""

    yield "section3/acyclic", c_acyclic


def _section4_checks(doc: dict):
    seed = seed_from_obj(doc["seed"])
    exp = doc["expected"]

    def c_validate():
        rep = validate_seed(seed)
        return rep.ok, "; ".join(v.message for v in rep.errors)

    yield "section4/validate", c_validate

    def make_exchange(i):
        def check():
            got = exchange_partners(seed)[i - 1]
            want = _poly(seed, exp["exchange"][i - 1])
            return got == want, f"x'_{i} = {got}"
        return check

    for i in (1, 2, 3):
        yield f"section4/exchange-{i}", make_exchange(i)

    def c_cycles():
        got = [list(c) for c in find_three_cycles(build_digraph(seed.matrix))]
        return got == exp["three_cycles"], str(got)

    yield "section4/three-cycles", c_cycles

    cert = None

    def get_cert():
        nonlocal cert
        if cert is None:
            cert = three_cycle_certificate(seed, (1, 2, 3))
        return cert

    def c_rhs():
        got = [(list(a), c) for a, c in get_cert().rhs]
        want = [
            (item["descriptor"], _poly(seed, item["coefficient"]))
            for item in exp["certificate_rhs"]
        ]
        return got == want, str([(a, str(c)) for a, c in got])

    yield "section4/certificate-rhs", c_rhs

    def c_residual():
        got = get_cert().residual
        return got == _poly(seed, exp["certificate_residual"]), str(got)

    yield "section4/certificate-residual", c_residual

    def c_deficient():
        res = independence_rank(get_cert().involved_descriptors(), seed)
        return (not res.full) and res.dependence is not None, \
            f"rank {res.rank} of {res.count}"

    yield "section4/independence-deficient", c_deficient


def run_selftest(filter_substr: str | None = None) -> tuple[dict, bool]:
    """Run the golden checks; returns (report object, all passed)."""
    suites = (
        ("section3.json", _section3_checks),
        ("section4.json", _section4_checks),
    )
    results = []
    all_ok = True
    for fname, gen in suites:
        try:
            doc = _load(fname)
            checks = list(gen(doc))
        except Exception as exc:
            results.append({
                "name": fname.removesuffix(".json") + "/load",
                "passed": False,
                "detail": f"{type(exc).__name__}: {exc}",
            })
            all_ok = False
            continue
        for name, fn in checks:
            if filter_substr and filter_substr not in name:
                continue
            try:
                ok, detail = fn()
            except Exception as exc:
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            results.append({"name": name, "passed": bool(ok), "detail": detail})
            all_ok = all_ok and ok
    return {"checks": results, "passed": all_ok}, all_ok
