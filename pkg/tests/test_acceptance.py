"""The acceptance gate: one test per criterion, each printing a verdict line.

Run `pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
All tolerances are exact equality; the scalars are exact rationals or prime
residues throughout, so no numeric tolerance exists anywhere.
"""

import pytest

from paper_data import (
    COHOMOLOGY_SERIES,
    CYCLIC_SERIES,
    HOMOLOGY_GRID,
    HOMOLOGY_SERIES,
    HOMOLOGY_TOTALS,
)

from fk3hh import cohomology as cohomod
from fk3hh import homology as homod
from fk3hh import ncgroebner as ncg
from fk3hh.cohomology import CohomologyComplex, co_tables_agree_with_formulas
from fk3hh.cupring import CupRing
from fk3hh.exactmath import QQ, PrimeField
from fk3hh.fk3core import (
    DIM,
    WORD_INDEX,
    AlgElem,
    dual_basis,
    dual_word_left_action,
    mul_words,
)
from fk3hh.homology import HomologyComplex, tables_agree_with_formulas
from fk3hh.resolution import (
    BimoduleResolution,
    fb_elem,
    koszul_diff_elem,
)

FP = PrimeField(10007)
ONE = WORD_INDEX[""]


def _verdict(num, label, ok):
    print(f"[criterion {num:2}] {'PASS' if ok else 'FAIL'}  {label}")
    assert ok, f"criterion {num}: {label}"


@pytest.fixture(scope="module")
def hom_q():
    return HomologyComplex(QQ, max_n=19)


@pytest.fixture(scope="module")
def coh_q():
    return CohomologyComplex(QQ, max_n=20)


def test_criterion_1_homology_dimensions(hom_q):
    grid, totals = hom_q.homology_dims(19)
    ok = all(totals[n] == HOMOLOGY_TOTALS[n] for n in range(20))
    for m, row in HOMOLOGY_GRID.items():
        for n, want in enumerate(row):
            if want is not None and grid.get((n, m), 0) != want:
                ok = False
    _verdict(1, "homology dimension grid and totals, n = 0..19", ok)


def test_criterion_2_homology_hilbert_series(hom_q):
    ok = all(hom_q.hilbert_series(n) == HOMOLOGY_SERIES[n] for n in range(6))
    ok = ok and all(hom_q.hilbert_series(n) == homod.hilbert_series_formula(n)
                    for n in range(6, 20))
    _verdict(2, "homology Hilbert series: explicit n <= 5, general to 19", ok)


def test_criterion_3_cohomology(coh_q):
    _, totals = coh_q.cohomology_dims(20)
    ok = all(totals[n] == cohomod.total_dim_formula(n) for n in range(21))
    ok = ok and all(coh_q.hilbert_series(n) == COHOMOLOGY_SERIES[n]
                    for n in range(8))
    ok = ok and all(coh_q.hilbert_series(n) == cohomod.hilbert_series_formula(n)
                    for n in range(8, 21))
    _verdict(3, "cohomology dims and Laurent series, n = 0..20", ok)


def test_criterion_4_cyclic_homology(hom_q):
    gs = hom_q.cyclic_series(12)
    ok = all(gs[n] == CYCLIC_SERIES[n] for n in range(4))
    ok = ok and all(gs[n] == homod.cyclic_series_formula(n)
                    for n in range(4, 13))
    _verdict(4, "cyclic homology series: explicit n <= 3, general to 12", ok)


@pytest.fixture(scope="module")
def res_q():
    return BimoduleResolution(QQ, max_n=13)


def test_criterion_5_resolution_validity(res_q):
    ok = True
    # delta squared vanishes on every free generator through degree 13
    for n in range(2, 14):
        for i, g in res_q.pb_gens(n):
            e = {(i, ONE, g, ONE): 1}
            if res_q.delta_elem(n - 1, res_q.delta_elem(n, e)):
                ok = False
    # minimality: no unit coefficients in generator images
    for n in range(1, 13):
        if res_q.minimality_violations(n):
            ok = False
    # exactness by rank in degrees 1..12
    for n in range(1, 13):
        if res_q.exactness_defect(n) != 0:
            ok = False
    # anticommutation of the published comparison maps, j = 0..8
    for n in range(0, 9):
        for g in dual_basis(n + 1):
            e = {(0, ONE, g, ONE): 1}
            lhs = koszul_diff_elem(n + 4, fb_elem(n + 1, e))
            rhs = fb_elem(n, koszul_diff_elem(n + 1, e))
            tot = dict(lhs)
            for k, c in rhs.items():
                tot[k] = tot.get(k, 0) + c
                if tot[k] == 0:
                    del tot[k]
            if tot:
                ok = False
    _verdict(5, "resolution: delta^2 = 0, minimal, exact in degrees 1..12, "
                "anticommutation for j <= 8", ok)


def test_criterion_6_tables_equal_formulas():
    ok = tables_agree_with_formulas(max_n=12) == []
    ok = ok and co_tables_agree_with_formulas(max_n=12) == []
    _verdict(6, "published image tables equal the closed formulas entrywise",
             ok)


@pytest.fixture(scope="module")
def ring_q():
    return CupRing(QQ, max_n=12, lift_horizon=7)


def test_criterion_7_cup_relations(ring_q):
    alg = ncg.ring_algebra()
    rep1 = ring_q.verify_relations(ncg.load_commutation_relations(alg))
    rep2 = ring_q.verify_relations(ncg.load_ideal_relations(alg))
    ok = rep1["ok"] and rep1["checked"] == 97
    ok = ok and rep2["ok"] and rep2["checked"] == 63
    comm = ring_q.verify_graded_commutativity(max_total=7)
    ok = ok and comm["ok"]
    _verdict(7, "all 160 relations vanish under cup products; graded "
                f"commutativity for {comm['checked']} pairs to degree 7", ok)


def _complete(field):
    alg = ncg.ring_algebra(field)
    rels = ncg.load_commutation_relations(alg) + ncg.load_ideal_relations(alg)
    return alg, ncg.buchberger_complete(alg, rels, degree_bound=6)


def test_criterion_8_groebner(coh_q):
    alg, gb = _complete(QQ)
    pub = ncg.load_published_basis(alg)
    ok = len(gb) == 184 and not gb.truncated
    ok = ok and sorted(map(tuple, gb.lead_words())) == \
        sorted(tuple(ncg.lead_word(p)) for p in pub)
    pub_basis = ncg.GBasis(alg, pub)
    ok = ok and all(ncg.normal_form(p, gb) == {} for p in pub)
    ok = ok and all(ncg.normal_form(p, pub_basis) == {} for p in gb.polys)
    words = ncg.standard_words(gb, up_to_hom_degree=16)
    by_len = {}
    for w in words:
        by_len[len(w)] = by_len.get(len(w), 0) + 1
    # NOTE: the published length-4 list prints 89 tokens but repeats
    # x9^3*x12, so it contains 88 distinct words; the computed enumeration
    # gives exactly those 88 (see test_ring_presentation for the set-level
    # comparison).  The count is also forced by the published length-3 count
    # and the x*x14 periodicity: 68 + 20 = 88.
    ok = ok and by_len.get(2) == 46 and by_len.get(3) == 68 \
        and by_len.get(4) == 88
    counts = ncg.standard_word_counts(gb, up_to_hom_degree=20)
    for n in range(0, 21):
        gbrow = {d: c for (h, d), c in counts.items() if h == n}
        if gbrow != coh_q.hilbert_series(n):
            ok = False
    _verdict(8, "completion: 184 elements, printed leading words, mutual "
                "reduction zero, standard words 46/68/88 (printed list has "
                "89 tokens with one duplicate), bigraded table equals "
                "cohomology to degree 20", ok)


def test_criterion_9_algebra_sanity():
    ok = True
    words = [AlgElem({i: QQ.one}) for i in range(DIM)]
    for x in words:
        for y in words:
            xy = x * y
            for z in words:
                if (xy) * z != x * (y * z):
                    ok = False
    a, b, c = AlgElem.word("a"), AlgElem.word("b"), AlgElem.word("c")
    zero = AlgElem({})
    rels = [a * a, b * b, c * c, a * b + b * c + c * a, b * a + a * c + c * b]
    ok = ok and all(r == zero for r in rels)
    # dual-action compatibility with the power identities through degree 12
    for n in range(1, 13):
        for deg in (n + 1, n + 2):
            for f in dual_basis(deg):
                start = {f: 1}
                for X, Y in (("b", "c"), ("c", "b")):
                    if dual_word_left_action(X + Y * n, start) != \
                            dual_word_left_action("a" * n + X, start):
                        ok = False
                    tail = "a" * n + (X if n % 2 == 0 else Y)
                    if dual_word_left_action(X + "a" * n, start) != \
                            dual_word_left_action(tail, start):
                        ok = False
    _verdict(9, "multiplication associative on all basis triples, defining "
                "relations vanish, dual actions satisfy the power identities "
                "to degree 12", ok)


def test_criterion_10_field_independence(hom_q, coh_q, res_q):
    ok = True
    # criterion 1 over F_p
    hom_p = HomologyComplex(FP, max_n=19)
    _, tq = hom_q.homology_dims(19)
    _, tp = hom_p.homology_dims(19)
    ok = ok and tq == tp
    # criterion 3 over F_p
    coh_p = CohomologyComplex(FP, max_n=20)
    _, cq = coh_q.cohomology_dims(20)
    _, cp = coh_p.cohomology_dims(20)
    ok = ok and cq == cp
    # criterion 5 over F_p
    res_p = BimoduleResolution(FP, max_n=13)
    for n in range(1, 13):
        if res_p.exactness_defect(n) != 0:
            ok = False
        if res_p.minimality_violations(n):
            ok = False
    # criterion 6 is integer table data, identical over any field; check a
    # differential matrix entrywise across the two fields
    for (n, m) in ((5, 2), (8, 3), (4, 1)):
        mq = hom_q.matrix(n, m)
        mp = hom_p.matrix(n, m)
        reduced = sorted((i, j, FP.of(v)) for i, j, v in mq.triplets())
        if reduced != mp.triplets():
            ok = False
    # criterion 8 over F_p
    algp, gbp = _complete(FP)
    algq, gbq = _complete(QQ)
    ok = ok and len(gbp) == 184
    ok = ok and sorted(map(tuple, gbp.lead_words())) == \
        sorted(map(tuple, gbq.lead_words()))
    # criterion 9 over F_p: the structure constants are integers, and the
    # associativity sweep is scalar-free; verify products coerce consistently
    for i in range(DIM):
        for j in range(DIM):
            prod = mul_words(i, j)
            assert all(FP.of(v) == v % FP.p for v in prod.values())
    _verdict(10, "criteria 1, 3, 5, 6, 8, 9 reproduce identically over "
                 "F_10007", ok)
