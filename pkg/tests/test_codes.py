import json
from math import gcd

import numpy as np
import pytest

from codebench.codes import (
    CodeSpec,
    LinearCode,
    bch_build,
    classify_h,
    codeword_iter,
    dump_codewords,
    dual,
    min_distance,
    nullspace,
    parity_check_rows,
    rref,
    same_row_space,
    trace_dual,
)
from codebench.diophantine import count_unit_solutions
from codebench.errors import BudgetExceeded, DegenerateDimension, NotCoprime
from codebench.galois import field_new, subfield_embedding


def test_bch_dimensions():
    assert bch_build(CodeSpec(q=9, n=10, delta=3, h=3)).k == 6
    assert bch_build(CodeSpec(q=8, n=9, delta=3, h=3)).k == 5
    assert bch_build(CodeSpec(q=2, n=33, delta=3, h=8)).k == 13


def test_codespec_validation():
    with pytest.raises(NotCoprime):
        CodeSpec(q=2, n=10, delta=3, h=1)


def test_family_detection():
    assert classify_h(9, 3) == ("q-minus-pi", 1)
    assert classify_h(9, 1) == ("pi-minus-1", 1)
    assert classify_h(16, 6) == ("q-minus-pi", 2)
    assert classify_h(16, 4) == ("q-minus-pi", 3)
    assert classify_h(9, 2) == ("generic", None)
    assert classify_h(16, 0) == ("generic", None)


def test_generator_matrix_annihilates_check_matrix():
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    f = code.field
    prod = np.zeros((code.k, code.n - code.k), dtype=np.int64)
    for i, grow in enumerate(code.gen_matrix):
        for j, hrow in enumerate(code.check_matrix):
            acc = 0
            for a, b in zip(grow, hrow):
                acc = f.add(acc, f.mul(int(a), int(b)))
            prod[i, j] = acc
    assert not prod.any()


def test_cyclic_dual_matches_nullspace_dual():
    for spec in [CodeSpec(9, 10, 3, 3), CodeSpec(8, 9, 3, 3), CodeSpec(3, 10, 3, 3)]:
        code = bch_build(spec)
        cyc = code.dual().gen_matrix
        generic = nullspace(code.gen_matrix, code.field)
        assert same_row_space(cyc, generic, code.field)


def test_dual_involution_and_dimensions():
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    dd = dual(dual(code))
    assert dd.k == code.k
    assert same_row_space(dd.gen_matrix, code.gen_matrix, code.field)
    assert dual(code).k == 4


def test_dual_of_full_space_is_zero_code():
    f = field_new(3, 1)
    full = LinearCode(f, 4, np.eye(4, dtype=np.int64))
    z = dual(full)
    assert z.k == 0
    words = list(codeword_iter(z))
    assert len(words) == 1 and not words[0].any()


def test_min_distances():
    assert min_distance(bch_build(CodeSpec(8, 9, 3, 3))) == 5
    assert min_distance(bch_build(CodeSpec(9, 10, 3, 3))) == 4
    assert min_distance(bch_build(CodeSpec(2, 33, 3, 8))) == 10


def test_bch_bound_holds():
    for spec in [CodeSpec(4, 5, 3, 1), CodeSpec(9, 10, 3, 3), CodeSpec(8, 9, 3, 2),
                 CodeSpec(2, 33, 3, 8), CodeSpec(3, 28, 3, 12)]:
        assert min_distance(bch_build(spec)) >= spec.delta


def test_min_distance_criterion_q4():
    # gcd(2h+1, q+1) > 1 exactly characterises distance 3 (smallest case)
    q = 4
    for h in range(q + 1):
        d = min_distance(bch_build(CodeSpec(q, q + 1, 3, h)))
        assert (d == 3) == (gcd(2 * h + 1, q + 1) > 1), h


def test_codeword_iter_counts():
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3)).dual()
    words = list(codeword_iter(code))
    assert len(words) == 9**4
    seen = {tuple(w.tolist()) for w in words[:500]}
    assert len(seen) == 500
    d = min_distance(code)
    assert all((w != 0).sum() >= d for w in words[1:200])


def test_codeword_budget():
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    with pytest.raises(BudgetExceeded):
        list(codeword_iter(code, budget=100))
    with pytest.raises(BudgetExceeded):
        code.codewords(budget=100)
    with pytest.raises(BudgetExceeded):
        min_distance(code, budget=3)


def test_trace_dual_zero_pair_and_injectivity():
    td = trace_dual(9, 3)
    assert not td.codeword(0, 0).any()
    words = td.codewords()
    assert len(np.unique(words, axis=0)) == 9**4


def test_trace_dual_degenerate():
    with pytest.raises(DegenerateDimension):
        trace_dual(9, 4)
    with pytest.raises(DegenerateDimension):
        trace_dual(16, 8)  # h = q/2: the two cosets merge


def test_trace_dual_weight_identity_sample():
    td = trace_dual(9, 3)
    rng = np.random.default_rng(1)
    for _ in range(100):
        a, b = (int(x) for x in rng.integers(0, 81, size=2))
        if a == 0 and b == 0:
            continue
        wt = int((td.codeword(a, b) != 0).sum())
        assert wt == 10 - count_unit_solutions(9, 3, a, b).value


def test_trace_dual_matches_algebraic_dual_q8_q9():
    for q, h in [(8, 3), (9, 3), (9, 1)]:
        td = trace_dual(q, h)
        code = bch_build(CodeSpec(q=q, n=q + 1, delta=3, h=h))
        wt = np.unique(td.codewords(), axis=0)
        wa = np.unique(code.dual().codewords(), axis=0)
        assert np.array_equal(wt, wa), (q, h)


def test_parity_check_rows():
    H, f2 = parity_check_rows(9, 3)
    assert H.shape == (4, 10)
    assert (H[:, 0] == 1).all()
    # rank 4 over GF(81)
    assert rref(H, f2)[0].shape[0] == 4
    # every generator row of the code annihilates every row of H
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    emb = subfield_embedding(f2, code.field)
    for grow in code.gen_matrix:
        lifted = emb.embed_arr(grow)
        for hrow in H:
            acc = 0
            for a, b in zip(lifted, hrow):
                acc = f2.add(acc, f2.mul(int(a), int(b)))
            assert acc == 0


def test_parity_check_rows_degenerate():
    with pytest.raises(DegenerateDimension):
        parity_check_rows(9, 4)


def test_trace_basis_matrix_spans_dual():
    td = trace_dual(9, 3)
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    assert same_row_space(td.basis_matrix(), code.dual().gen_matrix, code.field)


def test_code_json_and_dump():
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    payload = json.loads(code.to_json())
    assert payload["q"] == 9 and payload["n"] == 10 and payload["k"] == 6
    assert payload["family"] == "q-minus-pi"
    assert payload["gen_poly"] == list(code.gen_poly.coeffs)
    dump = dump_codewords(code.dual())  # the [10,4] dual
    lines = dump.strip().split("\n")
    assert len(lines) == 9**4
    assert all(len(line.split()) == 10 for line in lines[:20])


def test_contains():
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    assert code.contains(code.gen_matrix[0])
    bad = code.gen_matrix[0].copy()
    bad[0] = (bad[0] + 1) % 9
    assert not code.contains(bad)


def test_parity_check_rows_family2_order():
    # family 2 uses the row order (-(h+1), -h, h, h+1) on the circle
    from codebench.galois import unit_circle

    q, h = 9, 1
    H, f2 = parity_check_rows(q, h)
    circle = unit_circle(f2)
    n = q + 1
    exps = [(-(h + 1)) % n, (-h) % n, h, h + 1]
    for r, e in enumerate(exps):
        expected = [circle.elements[(e * i) % n] for i in range(n)]
        assert H[r].tolist() == expected


def test_generator_matrices_have_full_rank():
    for spec in [CodeSpec(9, 10, 3, 3), CodeSpec(2, 33, 3, 8), CodeSpec(16, 17, 3, 6)]:
        code = bch_build(spec)
        assert rref(code.gen_matrix, code.field)[0].shape[0] == code.k
        d = code.dual()
        assert rref(d.gen_matrix, d.field)[0].shape[0] == d.k
