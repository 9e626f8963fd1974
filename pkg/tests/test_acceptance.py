"""Acceptance suite: nine criteria, one PASS/FAIL line each.

Each test collects named sub-checks, records them in ``RESULTS`` and asserts
they all hold.  The lines are printed in the pytest terminal summary and by
running this file directly::

    python tests/test_acceptance.py
"""
import itertools
import os
import random
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import numpy as np
import pytest

from nucoprod import dual as D
from nucoprod.algebra import (Functional, check_idempotent_algebra, check_nondegenerate,
                              finite_algebra, multiply)
from nucoprod.coproduct import (Infinite, NoSolution, canonical_map, check_coassoc_extension,
                                check_coassoc_single_T1, check_coassoc_T1T2, check_coassoc_T3T4,
                                check_counit, check_counit_homomorphism, check_extension_unit,
                                check_fullness, check_homomorphism, check_nondegenerate_coproduct,
                                check_surjective, check_weak_nondegeneracy, map_status,
                                regularity_report, slice_delta, solve_counit)
from nucoprod.element import Element
from nucoprod.errors import DegenerateProduct
from nucoprod.gallery.registry import build, family_names
from nucoprod.gallery.trivial import unital_right_unit
from nucoprod.multiplier import finite_multiplier_algebra
from nucoprod.verdict import Status

DEPTH = 6
BUDGET = 60.0
TITLES = {
    1: "group family",
    2: "matrix coproduct",
    3: "matrix dual tier",
    4: "trivial and split examples",
    5: "sandwich families",
    6: "structural cross-checks",
    7: "finite multiplier solver",
    8: "dense oracle on S3",
    9: "determinism of the CLI",
}
RESULTS = {}   # criterion -> [(check, ok)]
TIMES = {}     # criterion -> seconds

_cache = {}


def entry(name, **params):
    key = (name, tuple(sorted(params.items())))
    if key not in _cache:
        _cache[key] = build(name, **params)
    return _cache[key]


def cp_of(name, **params):
    return entry(name, **params).cp


def record(n, items, started):
    RESULTS.setdefault(n, []).extend(items)
    TIMES[n] = TIMES.get(n, 0.0) + time.perf_counter() - started
    failed = [name for name, ok in items if not ok]
    assert not failed, f"criterion {n}: {failed}"
    assert TIMES[n] < BUDGET, f"criterion {n} took {TIMES[n]:.1f}s"


def summary_lines():
    lines = []
    for n in sorted(TITLES):
        items = RESULTS.get(n)
        if not items:
            lines.append(f"criterion {n}: NOT RUN  {TITLES[n]}")
            continue
        failed = [name for name, ok in items if not ok]
        mark = "FAIL" if failed else "PASS"
        tail = f"  failed: {'; '.join(failed)}" if failed else ""
        lines.append(f"criterion {n}: {mark}  {TITLES[n]}  "
                     f"({len(items) - len(failed)}/{len(items)} checks, {TIMES.get(n, 0):.1f}s){tail}")
    return lines


# -- 1 ---------------------------------------------------------------------------------------

def test_criterion_1_groups():
    """[PAPER] K(G) for S3, Z and F2: regular, coassociative, counital, full, non-degenerate."""
    t0 = time.perf_counter()
    items = []
    for name in ("group:S3", "group:Z", "group:F2"):
        cp = cp_of(name)
        exact = cp.alg.finite
        rep = regularity_report(cp, DEPTH)
        items.append((f"{name} all maps regular", all(m.regular for m in rep.maps.values())))
        t12 = check_coassoc_T1T2(cp, DEPTH)
        items.append((f"{name} coassociativity T1/T2", t12.ok))
        items.append((f"{name} coassociativity T3/T4", check_coassoc_T3T4(cp, DEPTH).ok))
        items.append((f"{name} single-map coassociativity", check_coassoc_single_T1(cp, DEPTH).ok))
        ext = check_coassoc_extension(cp, DEPTH)
        items.append((f"{name} extension coassociativity agrees", ext.ok == t12.ok and ext.ok))
        eps = cp.counit
        items.append((f"{name} counit T1/T2", check_counit(cp, eps, "T1T2", DEPTH).ok))
        items.append((f"{name} counit T3/T4", check_counit(cp, eps, "T3T4", DEPTH).ok))
        items.append((f"{name} counit homomorphism", check_counit_homomorphism(cp, eps, DEPTH).ok))
        full = check_fullness(cp, DEPTH).full
        nd = check_nondegenerate_coproduct(cp, DEPTH)
        want = Status.HOLDS if exact else Status.VERIFIED_TO_DEPTH
        items.append((f"{name} full ({want.value})", full.status is want))
        items.append((f"{name} non-degenerate ({want.value})", nd.status is want))
    record(1, items, t0)


# -- 2 ---------------------------------------------------------------------------------------

def test_criterion_2_matrix():
    """[PAPER] matrix Δ(e_pq) = Σ e_pj⊗e_jq: T3, T4 regular; T1 singular exactly when q = r."""
    t0 = time.perf_counter()
    cp = cp_of("matrix")
    rep = regularity_report(cp, DEPTH)
    items = [("profile T1,T2 non-regular / T3,T4 regular",
              rep.profile() == {"T1": "non_regular", "T2": "non_regular", "T3": "regular", "T4": "regular"})]
    labels = cp.alg.enumerate(DEPTH)
    pattern = all(isinstance(canonical_map(1, a, b, cp), Infinite) == (a[1] == b[0])
                  for a in labels for b in labels)
    items.append(("T1(e_pq⊗e_rs) infinite iff q = r", pattern))
    w = rep.maps[1].witness
    items.append(("T1 witness has q = r", w[0][1] == w[1][0]))
    items.append(("T1((1,2),(2,1)) infinite, T1((1,2),(3,1)) = 0",
                  isinstance(canonical_map(1, (1, 2), (2, 1), cp), Infinite)
                  and canonical_map(1, (1, 2), (3, 1), cp) == Element.zero()))
    eps = cp.counit
    items.append(("counit T3/T4", check_counit(cp, eps, "T3T4", DEPTH).ok))
    e12, e21 = Element.basis((1, 2)), Element.basis((2, 1))
    items.append(("ε(e12e21) = 1, ε(e12)ε(e21) = 0",
                  eps(multiply(e12, e21, cp.alg)) == 1 and eps(e12) * eps(e21) == 0))
    coords = [D.DualElement(Functional.coordinate(k)) for k in labels]
    items.append(("strong coassociativity T3/T4 on coordinates",
                  D.check_strong_coassociativity(cp, DEPTH, "T3T4", samples=coords).ok))
    record(2, items, t0)


# -- 3 ---------------------------------------------------------------------------------------

def test_criterion_3_dual_tier():
    """[PAPER] matrix dual: product table, ε ∈ B minus B0 as a unit, M(B0) = B, B0 acts onto A."""
    t0 = time.perf_counter()
    cp = cp_of("matrix")
    idx = range(1, 7)
    grid = list(itertools.product(idx, idx))
    table = True
    for r, s, r2, s2 in itertools.product(idx, repeat=4):
        p = D.dual_product(Functional.coordinate((r, s)), Functional.coordinate((r2, s2)), "left", cp)
        want = {(r, s2): 1} if s == r2 else {}
        got = {k: p.at(k) for k in grid if p.at(k)}
        table = table and got == want
    items = [("f_rs·f_r's' = δ(s,r')f_rs' for indices ≤ 6", table)]
    eps = D.DualElement(cp.counit)
    items.append(("ε ∈ B", D.membership(eps, "B", cp, DEPTH).ok))
    items.append(("ε ∉ B0", D.membership(eps, "B0", cp, DEPTH).fails))
    samples = [D.DualElement(f) for f in cp.dual_samples(random.Random(0), 50)]
    labels = cp.alg.enumerate(DEPTH * DEPTH)
    unit = all(D.membership(w, "B", cp, DEPTH).ok
               and D.functionals_equal(D.dual_product(eps, w, "left", cp), w, labels) is None
               and D.functionals_equal(D.dual_product(w, eps, "left", cp), w, labels) is None
               for w in samples)
    items.append(("ε two-sided unit on 50 samples of B", unit))
    items.append(("left and right products agree on the samples",
                  D.check_products_agree(cp, DEPTH, samples=samples).ok))
    items.append(("M(B0) = B", D.dual_multiplier_check(cp, 5, "B0", "B").ok))
    items.append(("M(B0l) pairs with Br", D.dual_multiplier_check(cp, 5, "B0l", "Br").ok))
    items.append(("M(B0r) pairs with Bl", D.dual_multiplier_check(cp, 5, "B0r", "Bl").ok))
    P = D.pairing_actions(cp)
    left_onto = right_onto = True
    for p in idx:
        for q in idx:
            e = Element.basis((p, q))
            fqq, fpp = Functional.coordinate((q, q)), Functional.coordinate((p, p))
            left_onto = left_onto and D.membership(fqq, "B0", cp, DEPTH).ok and P.act(fqq, e) == e \
                and slice_delta(cp, "right", fqq, (p, q)).value == e
            right_onto = right_onto and P.act_right(e, fpp) == e \
                and slice_delta(cp, "left", fpp, (p, q)).value == e
    items.append(("B0▷A = A on e_pq, p,q ≤ 6", left_onto))
    items.append(("A◁B0 = A on e_pq, p,q ≤ 6", right_onto))
    record(3, items, t0)


@pytest.mark.xfail(strict=True, reason="a whole row lies in B0l's multipliers but outside Bl")
def test_criterion_3_left_tier_literal():
    """[PAPER] the literal claim M(B0l) = Bl at depth 5; expected to fail with witness row1."""
    t0 = time.perf_counter()
    v = D.dual_multiplier_check(cp_of("matrix"), 5, "B0l", "Bl")
    name = "M(B0l) = Bl" + ("" if v.ok else f" (witness {v.witness})")
    record(3, [(name, v.ok)], t0)


# -- 4 ---------------------------------------------------------------------------------------

def test_criterion_4_trivial_and_split():
    """[PAPER] Δ(a) = a⊗1 on K(N) and the split coproduct."""
    t0 = time.perf_counter()
    cp = cp_of("trivial-right-unit")
    rep = regularity_report(cp, DEPTH)
    items = [("a⊗1 profile T1,T3 regular / T2,T4 non-regular",
              rep.profile() == {"T1": "regular", "T2": "non_regular", "T3": "regular", "T4": "non_regular"})]
    items.append(("single-map coassociativity holds", check_coassoc_single_T1(cp, DEPTH).ok))
    items.append(("solve_counit returns NoSolution", isinstance(solve_counit(cp, "T1", DEPTH), NoSolution)))
    f0 = Functional.coordinate(0)
    items.append(("(f⊗ι)Δ(a) leaves A on K(N)", D.membership(f0, "Bl", cp, DEPTH).fails))
    q2 = unital_right_unit()
    rng = random.Random(0)
    one = Element({0: 1, 1: 1})
    formula = True
    for _ in range(20):
        w1 = Functional.from_values({0: rng.randint(-5, 5), 1: rng.randint(-5, 5)})
        w2 = Functional.from_values({0: rng.randint(-5, 5), 1: rng.randint(-5, 5)})
        p = D.dual_product(w1, w2, "left", q2)
        formula = formula and all(p.at(k) == w1.at(k) * w2(one) for k in (0, 1))
    items.append(("(ω1ω2)(a) = ω1(a)ω2(1) on Q^2", formula))
    nd = D.check_dual_algebra_laws(q2, "B", 2)["nondegeneracy"]
    items.append(("dual product degenerate, witness -e0+e1",
                  nd.fails and nd.witness == Element({0: -1, 1: 1})))
    split = cp_of("tensor-split")
    items.append(("split: all four maps non-regular",
                  not any(m.regular for m in regularity_report(split, DEPTH).maps.values())))
    items.append(("split: extension coassociativity", check_coassoc_extension(split, DEPTH).ok))
    record(4, items, t0)


# -- 5 ---------------------------------------------------------------------------------------

def test_criterion_5_sandwich():
    """[PAPER] ex4_3, ex3_32, qn, ex3_24 and ex3_25 against their stated properties."""
    t0 = time.perf_counter()
    items = []
    cp = cp_of("sandwich:ex4_3")
    prof = regularity_report(cp, DEPTH).profile()
    items.append(("ex4_3 T3,T4 regular", prof["T3"] == prof["T4"] == "regular"))
    full = check_fullness(cp, 5).full
    items.append(("ex4_3 not full, witness e11⊗e21",
                  full.fails and full.witness == Element.basis(((1, 1), (2, 1)))))
    nd = D.check_dual_algebra_laws(cp, "B", 5)["nondegeneracy"]
    items.append(("ex4_3 degenerate dual, witness f(e11⊗e12)",
                  nd.fails and nd.witness == Element.basis(((1, 1), (1, 2)))))

    cp = cp_of("sandwich:ex3_32")
    items.append(("ex3_32 all maps regular",
                  all(m.regular for m in regularity_report(cp, DEPTH).maps.values())))
    E = cp.idempotent
    squares = all(E.lmul(E.lmul(Element.basis(z))) == E.lmul(Element.basis(z))
                  and E.rmul(E.rmul(Element.basis(z))) == E.rmul(Element.basis(z))
                  for z in cp.square.enumerate(DEPTH * DEPTH))
    items.append(("ex3_32 E² = E", squares))
    items.append(("ex3_32 weak non-degeneracy", check_weak_nondegeneracy(cp, E, DEPTH).ok))
    items.append(("ex3_32 extension coassociativity", check_coassoc_extension(cp, DEPTH).ok))

    cp = cp_of("sandwich:qn")
    prof = regularity_report(cp, DEPTH).profile()
    items.append(("qn T1,T2,T3 regular / T4 non-regular",
                  prof == {"T1": "regular", "T2": "regular", "T3": "regular", "T4": "non_regular"}))
    m4 = map_status(cp, 4, DEPTH)
    items.append(("qn T4 witness E(e11⊗1)",
                  m4.witness == ((1, (1, 1)), (1, (1, 1))) and "e_j1⊗p_j" in m4.description))

    for name in ("sandwich:ex3_24", "sandwich:ex3_25"):
        cp = cp_of(name)
        items.append((f"{name} homomorphism", check_homomorphism(cp, DEPTH).ok))
        keys = cp.E.X.enumerate(DEPTH * DEPTH)
        idem = all(multiply(cp.E.q(k), cp.E.q(k), cp.E.Y) == cp.E.q(k) for k in keys)
        idem = idem and any(not isinstance(c, int) for k in keys for _, c in cp.E.q(k).items())
        items.append((f"{name} q_ij idempotent at formal t", idem))
        prof = regularity_report(cp, DEPTH).profile()
        items.append((f"{name} T1,T3 regular / T2,T4 non-regular",
                      prof == {"T1": "regular", "T2": "non_regular", "T3": "regular", "T4": "non_regular"}))
        items.append((f"{name} full", check_fullness(cp, DEPTH).full.ok))
    record(5, items, t0)


# -- 6 ---------------------------------------------------------------------------------------

def test_criterion_6_structure():
    """[PAPER] A = A² under the stated hypotheses; S3 surjectivity; Δ₁(1)."""
    t0 = time.perf_counter()
    items = []
    qualified = []
    for name in family_names():
        cp = cp_of(name)
        if not (check_nondegenerate(cp.alg, DEPTH).ok and check_homomorphism(cp, DEPTH).ok):
            continue
        if not any(m.regular for m in regularity_report(cp, DEPTH).maps.values()):
            continue
        qualified.append(name)
        items.append((f"{name} A = A²", check_idempotent_algebra(cp.alg, DEPTH).ok))
    excluded = {"matrix", "sandwich:ex4_3", "tensor-split"}
    items.append(("all entries but matrix, ex4_3, tensor-split qualify",
                  qualified == [n for n in family_names() if n not in excluded]))
    s3 = cp_of("group:S3")
    for w in (1, 2):
        v = check_surjective(s3, w, DEPTH)
        items.append((f"S3 T{w} surjective (rank 36)", v.status is Status.HOLDS and v.evidence["rank"] == 36))
    items.append(("S3 Δ non-degenerate", check_nondegenerate_coproduct(s3, DEPTH).status is Status.HOLDS))
    items.append(("S3 Δ₁(1) = 1⊗1", check_extension_unit(s3, DEPTH).ok))
    cp = cp_of("sandwich:ex3_32")
    items.append(("ex3_32 Δ₁(1) = E", check_extension_unit(cp, DEPTH, cp.idempotent).ok))
    record(6, items, t0)


# -- 7 ---------------------------------------------------------------------------------------

def _m2():
    return finite_algebra("M2", 4, [(2 * i + j, 2 * j + l, 2 * i + l, 1)
                                    for i in range(2) for j in range(2) for l in range(2)])


def _q3():
    return finite_algebra("Q3", 3, [(i, i, i, 1) for i in range(3)])


def _upper2():
    return finite_algebra("T2", 3, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)])


def test_criterion_7_multipliers():
    """[DERIVED] unital inputs give M(A) = A; span{e11, e12} is rejected at e12."""
    t0 = time.perf_counter()
    items = []
    for build_alg, dim in ((_m2, 4), (_q3, 3), (_upper2, 3)):
        A = build_alg()
        M = finite_multiplier_algebra(A)
        items.append((f"{A.name} dim M(A) = {dim}", M.dimension == dim == A.dimension))
        items.append((f"{A.name} M(A) = embed(A)", M.embedded_span_equal()))
    try:
        finite_multiplier_algebra(finite_algebra("span", 2, [(0, 0, 0, 1), (0, 1, 1, 1)]))
        rejected = False
    except DegenerateProduct as err:
        rejected = err.witness == Element.basis(1)
    items.append(("span{e11,e12} rejected with witness e12", rejected))
    record(7, items, t0)


# -- 8 ---------------------------------------------------------------------------------------

def _s3_dense():
    """Δ, the product and T1..T4 of K(S3) as dense integer arrays, from permutations alone."""
    G = sorted(itertools.permutations(range(3)))
    n = len(G)
    at = {g: i for i, g in enumerate(G)}
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))
    Dl = np.zeros((n, n, n), dtype=np.int64)          # Δ(δ_a) = Σ_{xy=a} δ_x⊗δ_y
    for x in G:
        for y in G:
            Dl[at[compose(x, y)], at[x], at[y]] = 1
    m = np.zeros((n, n, n), dtype=np.int64)           # pointwise product δ_iδ_j = δ_ij δ_i
    for i in range(n):
        m[i, i, i] = 1
    T = {
        1: np.einsum("auy,ybv->uvab", Dl, m),         # Δ(a)(1⊗b)
        2: np.einsum("cxu,axv->uvca", m, Dl),         # (c⊗1)Δ(a)
        3: np.einsum("auy,byv->uvab", Dl, m),         # (1⊗b)Δ(a)
        4: np.einsum("axv,xcu->uvca", Dl, m),         # Δ(a)(c⊗1)
    }
    T = {w: M.reshape(n * n, n * n) for w, M in T.items()}
    left = np.einsum("axy,xuk,yvl->auvkl", Dl, m, m)   # Δ(a)(u⊗v)
    right = np.einsum("axy,uxk,vyl->auvkl", Dl, m, m)  # (u⊗v)Δ(a)
    return G, at, Dl, T, left, right


def _dense(x, at, n):
    out = np.zeros((n, n), dtype=np.int64)
    for (u, v), c in x.items():
        out[at[u], at[v]] = int(c)
    return out


def _vec(x, at, n):
    out = np.zeros(n, dtype=np.int64)
    for k, c in x.items():
        out[at[k]] = int(c)
    return out


def test_criterion_8_dense_oracle():
    """[DERIVED] every code path on K(S3) equals the dense oracle entry for entry."""
    t0 = time.perf_counter()
    cp = cp_of("group:S3")
    G, at, Dl, T, left, right = _s3_dense()
    n = len(G)
    items = [("labels are the permutations of 3 letters", sorted(cp.alg.basis()) == G)]
    maps = True
    for w in (1, 2, 3, 4):
        for x in G:
            for y in G:
                got = canonical_map(w, x, y, cp)
                col = T[w][:, at[x] * n + at[y]].reshape(n, n)
                maps = maps and not isinstance(got, Infinite) and np.array_equal(_dense(got, at, n), col)
    items.append(("canonical maps T1..T4 (4·36 columns)", maps))
    actions = True
    for a in G:
        d = cp.delta(a)
        for u in G:
            for v in G:
                actions = actions \
                    and np.array_equal(_dense(d.left.on_basis((u, v)), at, n), left[at[a], at[u], at[v]]) \
                    and np.array_equal(_dense(d.right.on_basis((u, v)), at, n), right[at[a], at[u], at[v]])
    items.append(("rule-based multiplier actions of Δ(a)", actions))
    slices = True
    for p in G:
        f = Functional.coordinate(p)
        for a in G:
            sl, sr = slice_delta(cp, "left", f, a), slice_delta(cp, "right", f, a)
            slices = slices and sl.is_element and sr.is_element \
                and np.array_equal(_vec(sl.value, at, n), Dl[at[a], at[p], :]) \
                and np.array_equal(_vec(sr.value, at, n), Dl[at[a], :, at[p]])
    items.append(("coordinate slices of Δ", slices))
    products = True
    for p in G:
        for q in G:
            want = Dl[:, at[p], at[q]]                 # (f_p f_q)(a) = Δ[a,(p,q)]
            for conv in ("left", "right"):
                w = D.dual_product(Functional.coordinate(p), Functional.coordinate(q), conv, cp)
                products = products and np.array_equal(np.array([int(w.at(a)) for a in G]), want)
    items.append(("dual products, both conventions", products))
    table = D.finite_dual_table(cp)
    items.append(("finite dual structure constants",
                  all(np.array_equal(_vec(table[(p, q)], at, n), Dl[:, at[p], at[q]]) for p in G for q in G)))
    record(8, items, t0)


# -- 9 ---------------------------------------------------------------------------------------

def _sweep(out_dir, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    codes = {}
    for name in family_names():
        target = Path(out_dir) / (name.replace(":", "_") + ".json")
        proc = subprocess.run([sys.executable, "-m", "nucoprod.cli", "--family", name, "--format", "json",
                               "--depth", str(DEPTH), "--seed", "0", "-o", str(target)],
                              env=env, capture_output=True, text=True)
        codes[name] = proc.returncode
    return codes


def test_criterion_9_determinism():
    """[DERIVED] two full CLI sweeps with the same seed write byte-identical reports."""
    t0 = time.perf_counter()
    with tempfile.TemporaryDirectory() as tmp:
        a, b = Path(tmp) / "a", Path(tmp) / "b"
        a.mkdir()
        b.mkdir()
        codes_a = _sweep(a, 1)
        codes_b = _sweep(b, 2)
        items = [("every family writes a report", all(c in (0, 2) for c in codes_a.values()))]
        items.append(("exit codes identical", codes_a == codes_b))
        same = all((a / f.name).read_bytes() == f.read_bytes() for f in sorted(b.iterdir()))
        items.append((f"{len(codes_a)} JSON reports byte-identical",
                      same and len(list(a.iterdir())) == len(family_names())))
    record(9, items, t0)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for fn in sorted(tests, key=lambda f: f.__name__):
        try:
            fn()
        except AssertionError:
            pass
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for items in RESULTS.values() for _, ok in items) else 1)
