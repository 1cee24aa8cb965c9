from itertools import combinations
from math import comb

import numpy as np
import pytest

from codebench.codes import CodeSpec, LinearCode, bch_build, trace_dual
from codebench.designs import (
    design_from_blocks,
    steiner_check,
    supports_of_weight,
    verify_design,
    weight4_blocks_det,
    weight5_blocks_rank,
)
from codebench.errors import (
    BudgetExceeded,
    InvalidParameters,
    MultiplicityNotQMinus1,
    NotRegular,
)
from codebench.galois import field_new


def test_supports_below_distance_empty():
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    sup = supports_of_weight(code, 3)
    assert sup.b == 0 and sup.multiset == {}


def test_supports_of_dual_q9():
    sup = supports_of_weight(trace_dual(9, 3), 6)
    assert sup.b == 240 // 8 == 30
    assert all(mult == 8 for mult in sup.multiset.values())


def test_supports_of_primal_q9():
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    sup = supports_of_weight(code, 4)
    assert sup.b == 30
    lam, b = verify_design(sup.blocks, 10, 3)
    assert (lam, b) == (1, 30)


def test_supports_multiplicity_violation():
    # the full space [2,2] over GF(3) has four weight-2 words on one support
    f = field_new(3, 1)
    full = LinearCode(f, 2, np.eye(2, dtype=np.int64))
    with pytest.raises(MultiplicityNotQMinus1):
        supports_of_weight(full, 2)


def test_verify_design_complete():
    blocks = list(combinations(range(5), 4))
    lam, b = verify_design(blocks, 5, 3)
    assert (lam, b) == (2, 5)


def test_verify_design_not_regular_witness():
    with pytest.raises(NotRegular) as exc:
        verify_design([(0, 1, 2, 3)], 6, 3)
    assert len(exc.value.subset) == 3


def test_verify_design_empty():
    assert verify_design([], 10, 3) == (0, 0)


def test_design_object_and_block_file():
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    sup = supports_of_weight(code, 4)
    d = design_from_blocks(sup.blocks, 10, 3)
    assert (d.t, d.lam, d.b, d.k) == (3, 1, 30, 4)
    assert steiner_check(d)
    assert d.to_json_dict() == {"n": 10, "k": 4, "t": 3, "lambda": 1, "b": 30, "steiner": True}
    text = d.to_block_file()
    lines = text.strip().split("\n")
    assert lines[0] == "10 4 30"
    assert len(lines) == 31
    assert lines[1:] == sorted(lines[1:])


def test_steiner_check_false_cases():
    blocks = list(combinations(range(5), 4))
    d = design_from_blocks(blocks, 5, 3)
    assert not steiner_check(d)  # lambda = 2


def test_weight4_blocks_det_q9_matches_supports():
    det_blocks = weight4_blocks_det(9, 3)
    assert len(det_blocks) == 30
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    sup = supports_of_weight(code, 4)
    assert tuple(sorted(det_blocks)) == sup.blocks


def test_weight4_blocks_det_q16():
    blocks = weight4_blocks_det(16, 6)
    d = design_from_blocks(blocks, 17, 3)
    assert (d.lam, d.b) == (2, 340)
    assert comb(17, 3) * d.lam == d.b * comb(4, 3)


def test_weight4_blocks_det_empty_for_mds():
    assert weight4_blocks_det(8, 3) == []


def test_weight5_blocks_q9():
    blocks = weight5_blocks_rank(9, 3)
    d = design_from_blocks(blocks, 10, 3)
    assert (d.lam, d.b) == (6, 72)


def test_weight5_requires_ternary_family():
    with pytest.raises(InvalidParameters):
        weight5_blocks_rank(16, 6)


def test_structural_supports_match_enumeration_q9():
    # force the structural route by shrinking the budget below 9^6 and
    # compare with direct enumeration
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    sup_enum = supports_of_weight(code, 4)
    sup_rank = supports_of_weight(code, 4, budget=10_000)
    assert sup_enum.blocks == sup_rank.blocks
    sup5_enum = supports_of_weight(code, 5)
    assert sup5_enum.blocks == tuple(sorted(weight5_blocks_rank(9, 3)))


def test_budget_errors():
    code = bch_build(CodeSpec(q=9, n=10, delta=3, h=3))
    with pytest.raises(BudgetExceeded):
        supports_of_weight(code, 6, budget=10_000)  # no structural route for k=6
    with pytest.raises(BudgetExceeded):
        weight4_blocks_det(9, 3, budget=10)
