"""Acceptance criteria, one test each.

Every test records a single ``criterion N: PASS|FAIL ...`` line; conftest
prints them in the terminal summary.
"""

import time
from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest

from chowkit import binary, determinantal, hyperelliptic, ternary, veronese
from chowkit.arith import GF, Matrix, SparsePoly, det, pfaffian
from chowkit.exterior import check_gr_signs, random_element, top_coefficient, wedge
from chowkit.fixtures import bracket_matrix, load_fixture, render_entry
from chowkit.grassmann import (
    bracket_matrix_eval,
    constant_ratio,
    eval_bracket,
    plucker_relations_check,
    proportional_on_random_points,
    random_stiefel,
    rows_wedge,
    wedge_to_bracket,
)

F = GF(2**31 - 1)
RESULTS = {}


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    return ok


# -- 1 ---------------------------------------------------------------------------


def test_criterion_1_hyperelliptic_BA_zero():
    t0 = time.perf_counter()
    pairs = [(g, k) for k in range(1, 13) for g in range(k)]
    failed = [gk for gk in pairs if not hyperelliptic.verify_BA_zero_hyper(*gk)]
    dt = time.perf_counter() - t0
    ok = not failed and dt < 600
    assert record(1, ok, f"B*A = 0 for {len(pairs) - len(failed)}/{len(pairs)} pairs 1 <= g+1 <= k <= 12 in {dt:.1f}s")


# -- 2 ---------------------------------------------------------------------------


def test_criterion_2_binary_BA_zero():
    failed = [d for d in range(1, 13) if not binary.verify_BA_zero_binary(d)]
    assert record(2, not failed, f"B*A = 0 in Lambda^3 V for d = 1..12, failures {failed}")


# -- 3 ---------------------------------------------------------------------------


def test_criterion_3_binary_cross_check():
    worked = binary.sylvester_resultant([1, 0, -1], [1, 0, -4]), binary.bezout_resultant([1, 0, -1], [1, 0, -4])
    constants, problems = {}, []
    for d in range(1, 9):
        rng = np.random.default_rng(300 + d)
        pairs = []
        for _ in range(200):
            f = [Fraction(int(x)) for x in rng.integers(-3, 4, d + 1)]
            g = [Fraction(int(x)) for x in rng.integers(-3, 4, d + 1)]
            if rng.random() < 0.3:
                r = Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4)))
                f[-1] -= sum(c * r ** (d - i) for i, c in enumerate(f))
                g[-1] -= sum(c * r ** (d - i) for i, c in enumerate(g))
            if not any(f) or not any(g):
                continue
            s = binary.sylvester_resultant(f, g)
            if (s == 0) != binary.common_root_binary(f, g):
                problems.append((d, "oracle"))
            pairs.append((s, binary.bezout_resultant(f, g)))
        ratio, _, bad = constant_ratio(pairs)
        constants[d] = ratio
        if bad or ratio is None:
            problems.append((d, "ratio"))
    ok = not problems and worked == (9, -9) and constants[2] == -1
    cs = ",".join(str(constants[d]) for d in range(1, 9))
    assert record(3, ok, f"Res = 9, Bezout = {worked[1]}; c_d (d=1..8) = {cs}; problems {problems}")


# -- 4 ---------------------------------------------------------------------------


def test_criterion_4_ternary_quadrics():
    t0 = time.perf_counter()
    rng = np.random.default_rng(4)
    planted_ok, pairs = 0, []
    while planted_ok < 100:
        P = [F.random(rng) for _ in range(3)]
        if not any(P):
            continue
        qs = ternary.planted_common_zero_quadrics(P, rng, F)
        assert ternary.resultant_quadrics(*qs) == 0 == ternary.pfaffian_resultant_quadrics(*qs)
        planted_ok += 1
    for _ in range(100):
        qs = [ternary.random_quadric(rng, F) for _ in range(3)]
        pairs.append((ternary.resultant_quadrics(*qs), ternary.pfaffian_resultant_quadrics(*qs)))
    nonzero = all(a != 0 and b != 0 for a, b in pairs)
    ratio, _, bad = constant_ratio(pairs)
    a, b, c = (ternary.random_quadric(rng, F) for _ in range(3))
    lam = F.random(rng, nonzero=True)
    scaling = ternary.resultant_quadrics(tuple(lam * x for x in a), b, c) == lam**4 * ternary.resultant_quadrics(a, b, c)
    dt = time.perf_counter() - t0
    ok = nonzero and bad == 0 and ratio is not None and scaling and dt < 60
    assert record(4, ok, f"100 planted zero, 100 random nonzero, Pf/det = {ratio}, lambda^4 scaling {scaling}, {dt:.1f}s")


# -- 5 ---------------------------------------------------------------------------


def test_criterion_5_eagon_northcott():
    rng = np.random.default_rng(5)
    cases = bad = 0
    for g in range(1, 4):
        for f in range(g, 7):
            for n in range(0, 7):
                entries = tuple(
                    tuple(tuple(int(x) for x in rng.integers(-3, 4, n + 1)) for _ in range(f)) for _ in range(g)
                )
                L = determinantal.eagon_northcott(determinantal.LinearMatrix(g, f, n, entries))
                cases += 1
                if not determinantal.composites_vanish(L) or L.ranks[0] != L.ranks[-1]:
                    bad += 1
    assert record(5, bad == 0, f"{cases - bad}/{cases} complexes (g <= 3, f <= 6, n <= 6) exact with rank P_c = rank P_0")


# -- 6 ---------------------------------------------------------------------------

RNC_RATIOS = {2: 1, 3: -1, 4: 1, 5: 1, 6: 1}


def _signed(x):
    return int(x) if int(x) <= F.p // 2 else int(x) - F.p


def _rnc_part():
    out = {}
    for d in range(2, 7):
        rng = np.random.default_rng(60 + d)
        D = determinantal.chow_form_determinantal(determinantal.rnc_matrix(d))
        Bz = binary.bezout_bracket_matrix(d)
        out[d] = proportional_on_random_points(
            lambda S: det(bracket_matrix_eval(Bz, S)), D.evaluate, 2, d + 1, rng, points=50
        )
    return out


def _scroll_parts():
    rng = np.random.default_rng(66)
    D = determinantal.chow_form_determinantal(determinantal.scroll_matrix([2, 1]))
    printed = bracket_matrix("scroll3")
    vs_printed = proportional_on_random_points(
        lambda S: det(bracket_matrix_eval(printed, S)), D.evaluate, 3, 5, rng, points=50
    )
    vanish = sum(D.evaluate(determinantal.incident_plane([2, 1], 3, F, rng)[0]) == 0 for _ in range(100))
    return vs_printed, vanish


def test_criterion_6_rnc_and_incident_planes():
    rnc = _rnc_part()
    _, vanish = _scroll_parts()
    ok = all(c == 50 and b == 0 for _, c, b in rnc.values()) and vanish == 100
    assert ok and {d: r for d, (r, _, _) in rnc.items()} == RNC_RATIOS


def test_criterion_6_corrected_scroll_is_proportional():
    # the printed matrix with the sign of [013] in entry (1,2) flipped
    M = bracket_matrix("scroll3")
    M[0][1] = -M[0][1]
    rng = np.random.default_rng(67)
    D = determinantal.chow_form_determinantal(determinantal.scroll_matrix([2, 1]))
    r, c, b = proportional_on_random_points(lambda S: det(bracket_matrix_eval(M, S)), D.evaluate, 3, 5, rng, points=50)
    assert (r, c, b) == (F(-1), 50, 0)


@pytest.mark.xfail(strict=True, reason="printed 3x3 scroll matrix is not proportional to det Psi; see decisions ledger")
def test_criterion_6_psi_reproduction():
    rnc = _rnc_part()
    (ratio, count, bad), vanish = _scroll_parts()
    rnc_ok = all(c == 50 and b == 0 for _, c, b in rnc.values())
    ok = rnc_ok and vanish == 100 and bad == 0
    detail = (
        f"RNC d=2..6 proportional {rnc_ok} (ratios {[_signed(r) for r, _, _ in rnc.values()]}); "
        f"det Psi(S(2,1)) vanishes on {vanish}/100 incident planes; "
        f"printed scroll matrix vs det Psi: {bad}/{count} mismatches"
    )
    assert record(6, ok, detail)


# -- 7 ---------------------------------------------------------------------------


def test_criterion_7_hyperelliptic_semantics():
    report, ok = [], True
    for g in range(3):
        for k in range(g + 1, 6):
            rng = np.random.default_rng(700 + 10 * g + k)
            pairs = []
            for _ in range(50):
                inst = hyperelliptic.random_instance(g, k, F, rng)
                s, b = hyperelliptic.resultant(inst), hyperelliptic.resultant(inst, "bezout")
                ok &= s != 0 and b != 0
                pairs.append((s, b))
                planted, _ = hyperelliptic.planted_instance(g, k, F, rng)
                ok &= hyperelliptic.resultant(planted) == 0 == hyperelliptic.resultant(planted, "bezout")
            ratio, _, bad = constant_ratio(pairs)
            ok &= bad == 0 and ratio is not None
            report.append(f"({g},{k}):{_signed(ratio) if ratio is not None else None}")
            # b = d = 0 reductions
            inst = hyperelliptic.random_instance(g, k, F, rng, zero_bd=True)
            Bv = bracket_matrix_eval(binary.bezout_bracket_matrix(k), Matrix.from_rows([list(inst.a), list(inst.c)]))
            Z = Matrix.fill(k, k, F.zero)
            ok &= hyperelliptic.hyperelliptic_bezout(inst) == Matrix.block([[Z, Bv], [Bv, Z]])
            res = binary.sylvester_resultant(list(inst.a), list(inst.c))
            ok &= det(hyperelliptic.hyperelliptic_sylvester(inst)) in (res**2, -(res**2))
    assert record(7, ok, "Bezout/Sylvester ratios " + " ".join(report) + "; b=d=0 reductions hold")


# -- 8 ---------------------------------------------------------------------------

# the display, typed entry by entry
ELLIPTIC_DISPLAY = [
    ["-r1*r2*[13]-r1*[03]-r2*[03]", "-r1*r2*[23]+[03]", "[01]", "[02]"],
    ["-r1*r2*[23]+[03]", "r1*[23]+r2*[23]+[13]", "[02]", "[12]"],
    ["[01]", "[02]", "r3*[13]+[03]", "r3*[23]"],
    ["[02]", "[12]", "r3*[23]", "-[23]"],
]


def test_criterion_8_elliptic():
    obj = load_fixture("elliptic4")
    rendered = [[render_entry(e, obj["parameters"]) for e in row] for row in obj["entries"]]
    fixture_ok = rendered == ELLIPTIC_DISPLAY
    rng = np.random.default_rng(8)
    pairs = []
    while len(pairs) < 50:
        x = [F.random(rng) for _ in range(8)]
        rho = [F.random(rng) for _ in range(3)]
        if len({r.v for r in rho}) < 3:
            continue
        pairs.append((hyperelliptic.resultant(hyperelliptic.elliptic_as_hyperelliptic(*x, *rho), "bezout"),
                      hyperelliptic.elliptic_resultant(*x, *rho)))
    ratio, _, bad = constant_ratio(pairs)
    planted = sum(hyperelliptic.elliptic_resultant(*hyperelliptic.planted_elliptic(F, rng)[0]) == 0 for _ in range(50))
    ok = fixture_ok and bad == 0 and ratio is not None and planted == 50
    assert record(8, ok, f"fixture matches display {fixture_ok}; ratio to hyperelliptic Bezout {ratio} on 50; planted zeros {planted}/50")


# -- 9 ---------------------------------------------------------------------------


def test_criterion_9_tables():
    ranks = all(
        veronese.schur_rank(veronese.ulrich_partition(n, d), n) == d ** comb(n, 2)
        for n in range(1, 6)
        for d in range(1, 6)
    )
    no_rank2 = all((2 % veronese.min_rank_divisor(3, d) == 0) == (d % 3 != 0) for d in range(1, 40))
    factorial_ok = all(veronese.min_rank_divisor(k, factorial(k)) == factorial(k) for k in range(1, 7))

    def classical(k, d):
        return k <= 3 or (k == 4 and d <= 3) or (k == 5 and d <= 2) or d == 1

    weakly = all(
        bool(veronese.weakly_ulrich_line_range(k, d)) == classical(k, d) for k in range(1, 11) for d in range(1, 11)
    )
    zeros = all(
        {e for e in range(-(k + 1) * d, d + 1) if veronese.ulrich_chi(1, k, d, e) == 0} == {-i * d for i in range(1, k + 1)}
        for k in range(0, 8)
        for d in range(1, 8)
    )
    ok = ranks and no_rank2 and factorial_ok and weakly and zeros
    assert record(
        9, ok,
        f"hook ranks {ranks}; no rank 2 iff 3 | d {no_rank2}; k! | rank {factorial_ok}; "
        f"weakly-Ulrich list {weakly}; chi zero sets {zeros}",
    )


# -- 10 --------------------------------------------------------------------------


def _skew_poly_matrix(n, rng, nv=3):
    def entry():
        terms = {}
        for _ in range(2):
            e = tuple(int(v) for v in rng.integers(0, 2, nv))
            terms[e] = terms.get(e, 0) + int(rng.integers(-3, 4))
        return SparsePoly(nv, terms)

    rows = [[SparsePoly(nv)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = entry()
            rows[i][j], rows[j][i] = v, -v
    return Matrix.from_rows(rows)


def test_criterion_10_property_suites():
    rng = np.random.default_rng(10)
    counts, failures = {}, {}

    def tally(name, ok):
        counts[name] = counts.get(name, 0) + 1
        failures[name] = failures.get(name, 0) + (not ok)

    for n in (2, 4, 6, 8):
        for _ in range(3):
            M = _skew_poly_matrix(n, rng)
            tally("Pf^2=det", pfaffian(M) ** 2 == det(M))
    for v in range(1, 6):
        for k in range(0, v):
            for i in range(0, k + 2):
                for j in range(0, k + 2 - i):
                    tally("gr-signs", check_gr_signs(v, k, i, j, trials=20, rng=rng))
    for _ in range(100):
        k1 = int(rng.integers(1, 4))
        tally("Pluecker", plucker_relations_check(random_stiefel(k1, k1 + int(rng.integers(1, 4)), F, rng)))
    for n in range(1, 7):
        for k in range(0, n):
            for _ in range(100):
                omega = random_element(n + 1, n - k, rng)
                S = random_stiefel(k + 1, n + 1, F, rng)
                lhs = eval_bracket(wedge_to_bracket(omega, k), S)
                tally("wedge_to_bracket", lhs == top_coefficient(wedge(omega.map_coeffs(F), rows_wedge(S))))
    ok = not any(failures.values())
    detail = "; ".join(f"{name} {counts[name] - failures[name]}/{counts[name]}" for name in counts)
    assert record(10, ok, detail)
