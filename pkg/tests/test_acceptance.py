"""Acceptance sweep: every closed form against an independent oracle.

Each test prints one PASS line (visible with pytest -s); a failed
assertion is the corresponding FAIL.  The oracle budget for subspace
sweeps is 10^6 subspaces per instance; instances above it are skipped.
"""

import itertools
import random
import time

import numpy as np

from ccodes.codes import (
    brute_ghw,
    brute_min_weight,
    dual_code,
    dual_hierarchy,
    extremal_polynomials,
    gaussian_binomial,
    generator_matrix,
    ghw_closed_form,
    hierarchy,
    matmul,
    max_common_zeros,
    min_distance_closed_form,
    monomial_evaluations,
    points,
    rank,
    spec_from_parts,
    wei_duality_check,
)
from ccodes.gf import field_create
from ccodes.grid import (
    GridShape,
    brute_min_shadow,
    check_clements_lindstrom,
    count_deg_le,
    min_shadow_size,
    rank_desc,
    tuple_at_rank_desc,
    tuples_deg_eq,
    tuples_deg_le,
)
from ccodes.hilbert import (
    Polynomial,
    box_ideal,
    footprint_upper_bound,
    graded_lex_key,
    hilbert_fn,
    leading_term,
)

from corpus import corpus_specs

SUBSPACE_BUDGET = 10 ** 6
CODEWORD_BUDGET = 10 ** 6

HARNESS_SHAPES = [GridShape(d) for d in [(2, 2), (2, 3), (3, 3), (2, 2, 2)]]


def _report(num, name, details):
    print(f"ACCEPTANCE {num} ({name}): PASS ({details})")


def test_criterion_1_ghw_closed_form_vs_subspace_oracle():
    start = time.monotonic()
    checked = 0
    skipped = 0
    for label, spec in corpus_specs():
        code = generator_matrix(spec)
        q = spec.field.q
        for r in range(1, spec.dimension + 1):
            if gaussian_binomial(spec.dimension, r, q) > SUBSPACE_BUDGET:
                skipped += 1
                continue
            closed = ghw_closed_form(spec, r)
            oracle = brute_ghw(code, r, budget=SUBSPACE_BUDGET)
            assert closed == oracle, f"{label} r={r}: closed {closed} vs oracle {oracle}"
            checked += 1
    elapsed = time.monotonic() - start
    assert checked > 0
    assert elapsed < 300.0, f"sweep took {elapsed:.1f}s, over the 5 minute cap"
    _report(1, "ghw closed form vs subspace oracle",
            f"{checked} ranks checked, {skipped} over budget, {elapsed:.1f}s")


def test_criterion_2_extremal_families_attain_maximum():
    checked = 0
    for label, spec in corpus_specs():
        polys = extremal_polynomials(spec, spec.dimension)
        pts = points(spec)
        evals = np.array([[f.evaluate(pt).to_int() for pt in pts] for f in polys])
        still_zero = np.ones(spec.n, dtype=bool)
        for r in range(1, spec.dimension + 1):
            still_zero &= evals[r - 1] == 0
            zeros = int(still_zero.sum())
            expected = max_common_zeros(spec, r)
            assert zeros == expected, f"{label} r={r}: {zeros} vs {expected}"
            assert rank(evals[:r], spec.field) == r, f"{label} r={r}: rank deficit"
            checked += 1
    _report(2, "extremal polynomial families", f"{checked} family prefixes checked")


def test_criterion_3_min_distance_vs_codeword_sweep():
    checked = 0
    for label, spec in corpus_specs():
        assert spec.field.q ** spec.dimension <= CODEWORD_BUDGET, label
        code = generator_matrix(spec)
        closed = min_distance_closed_form(spec)
        oracle = brute_min_weight(code, budget=CODEWORD_BUDGET)
        assert closed == oracle, f"{label}: closed {closed} vs oracle {oracle}"
        assert closed == hierarchy(spec)[0], label
        checked += 1
    _report(3, "minimum distance vs codeword sweep", f"{checked} specs checked")


def test_criterion_4_duality():
    checked = 0
    oracle_ranks = 0
    for label, spec in corpus_specs():
        code = generator_matrix(spec)
        dual = dual_code(spec)
        assert code.dimension + dual.dimension == spec.n, label
        if dual.dimension == 0:
            continue
        product = matmul(code.matrix, dual.matrix.T, spec.field)
        assert np.count_nonzero(product) == 0, f"{label}: dual not orthogonal"
        dh = dual_hierarchy(spec)
        assert len(dh) == dual.dimension, label
        q = spec.field.q
        for r in range(1, dual.dimension + 1):
            if gaussian_binomial(dual.dimension, r, q) > SUBSPACE_BUDGET:
                continue
            oracle = brute_ghw(dual, r, budget=SUBSPACE_BUDGET)
            assert dh[r - 1] == oracle, f"{label} dual r={r}: {dh[r - 1]} vs {oracle}"
            oracle_ranks += 1
        checked += 1
    _report(4, "dual code identities",
            f"{checked} duals orthogonal, {oracle_ranks} dual ranks vs oracle")


def test_criterion_5_wei_duality_partition():
    checked = 0
    for label, spec in corpus_specs():
        if spec.d <= spec.k - 1:
            report = wei_duality_check(spec)
            assert report.ok, f"{label}: overlap {report.overlap} missing {report.missing}"
        else:
            assert hierarchy(spec) == tuple(range(1, spec.n + 1)), label
        checked += 1
    _report(5, "wei duality partition", f"{checked} specs checked")


def test_criterion_6_shadow_compression_powerset():
    checked = 0
    for shape in HARNESS_SHAPES:
        for u in range(shape.k):
            level = tuples_deg_eq(shape, u)
            assert len(level) <= 12
            for size in range(len(level) + 1):
                for subset in itertools.combinations(level, size):
                    report = check_clements_lindstrom(shape, u, subset)
                    assert report.holds, (shape, u, subset, report.counterexample)
                    checked += 1
    _report(6, "shadow compression harness", f"{checked} subsets, zero counterexamples")


def test_criterion_7_minimal_shadows_vs_subset_exhaustion():
    checked = 0
    for shape in HARNESS_SHAPES:
        for v in range(shape.k + 1):
            for r in range(1, min(4, count_deg_le(shape, v)) + 1):
                closed = min_shadow_size(shape, v, r)
                oracle = brute_min_shadow(shape, v, r)
                assert closed == oracle, (shape, v, r, closed, oracle)
                checked += 1
    _report(7, "minimal shadow vs subset exhaustion", f"{checked} instances")


def test_criterion_8_footprint_bound_random_tuples():
    tuples_per_spec = 1000
    checked = 0
    consistency = 0
    for index, (label, spec) in enumerate(corpus_specs()):
        rng = random.Random(0xC0DE5 + index)
        shape = spec.shape
        monos = sorted(tuples_deg_le(shape, spec.d),
                       key=graded_lex_key, reverse=True)
        K = len(monos)
        rows = monomial_evaluations(spec.field, spec.sets, monos)
        q = spec.field.q
        coeff_blocks = []
        lead_sets = []
        for _ in range(tuples_per_spec):
            r = rng.randint(1, min(3, K))
            lead = sorted(rng.sample(range(K), r))
            block = np.zeros((r, K), dtype=spec.field.int_dtype)
            for bi, li in enumerate(lead):
                block[bi, li] = rng.randint(1, q - 1)
                for j in range(li + 1, K):
                    block[bi, j] = rng.randint(0, q - 1)
            coeff_blocks.append(block)
            lead_sets.append(tuple(monos[i] for i in lead))
        evals = matmul(np.vstack(coeff_blocks), rows, spec.field)
        bounds = {}
        offset = 0
        for block, lts in zip(coeff_blocks, lead_sets):
            r = block.shape[0]
            zeros = int(np.all(evals[offset:offset + r] == 0, axis=0).sum())
            offset += r
            if lts not in bounds:
                bound = footprint_upper_bound(shape, lts)
                assert bound == hilbert_fn(box_ideal(shape, lts), shape.k), (label, lts)
                bounds[lts] = bound
                consistency += 1
            assert zeros <= bounds[lts], (label, lts, zeros, bounds[lts])
            checked += 1
        # spot-check that the sampled coefficient layout pins the leading term
        sample = coeff_blocks[0]
        poly = Polynomial(spec.field, spec.m,
                          {monos[j]: int(sample[0, j]) for j in range(K) if sample[0, j]})
        assert leading_term(poly) == lead_sets[0][0]
    assert checked >= 1000 * len(corpus_specs())
    _report(8, "footprint bound on random tuples",
            f"{checked} tuples, {consistency} bound/Hilbert agreements, no violations")


def test_criterion_9_rank_unrank_bijection():
    shapes = [GridShape(dims) for m in (1, 2, 3)
              for dims in itertools.combinations_with_replacement(range(1, 7), m)]
    shapes += [GridShape(d) for d in [(2, 3, 5, 7), (10, 10), (2, 2, 2, 2, 2, 2),
                                      (1000,), (4, 4, 4, 4), (1, 1, 4)]]
    shapes = [s for s in shapes if s.n <= 1000]
    checked = 0
    for shape in shapes:
        expected = sorted(itertools.product(*(range(d) for d in shape.dims)),
                          reverse=True)
        for r, t in enumerate(expected, start=1):
            assert tuple_at_rank_desc(shape, r) == t, (shape, r)
            assert rank_desc(shape, t) == r, (shape, t)
        checked += shape.n
    _report(9, "rank/unrank bijection", f"{len(shapes)} shapes, {checked} ranks")


def test_criterion_10_reed_muller_specialization():
    checked = 0
    for q in (2, 3):
        field = field_create(q)
        sets_text = ",".join(str(i) for i in range(q))
        for m in (1, 2, 3):
            k = m * (q - 1)
            for d in range(1, k + 1):
                spec = spec_from_parts(f"{q}^1", ";".join([sets_text] * m), d)
                box = itertools.product(range(q), repeat=m)
                ascending = sorted(a for a in box if sum(a) >= k - d)
                expected = tuple(1 + sum(a[i] * q ** (m - 1 - i) for i in range(m))
                                 for a in ascending)
                assert hierarchy(spec) == expected, (q, m, d)
                checked += 1
    _report(10, "reed-muller specialization", f"{checked} (q, m, d) triples")
