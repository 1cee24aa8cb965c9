"""Weight distributions, the MacWilliams transform, and Singleton classes.

All counting is exact big-integer arithmetic: binomials through math.comb,
counts as Python ints.  The MacWilliams transform solves the triangular
system of the identity

    sum_{i<=n-j} C(n-i, j) A_i  =  q^(k-j) * sum_{i<=j} C(n-i, n-j) A_i*

for the dual counts in increasing j, which doubles as a consistency check:
a non-integer intermediate raises immediately rather than rounding.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from . import _kernels as kernels
from .codes import LinearCode, TraceDualSpec, trace_dual
from .config import default_budget
from .errors import (
    BudgetExceeded,
    FourWeightViolation,
    InvalidParameters,
    NonIntegerResult,
)
from .galois import prime_power


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    q: int
    k: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise InvalidParameters("need exactly n+1 counts")
        if self.counts[0] != 1:
            raise InvalidParameters("A_0 must be 1")
        if any(c < 0 for c in self.counts):
            raise InvalidParameters("counts must be non-negative")
        if sum(self.counts) != self.q**self.k:
            raise InvalidParameters(
                f"counts sum to {sum(self.counts)}, expected q^k = {self.q**self.k}"
            )

    def d(self) -> int | None:
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        return None

    def nonzero(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.counts) if c}

    def support(self) -> set[int]:
        return {i for i in range(1, self.n + 1) if self.counts[i]}

    def to_csv(self) -> str:
        lines = ["i,A_i"] + [f"{i},{c}" for i, c in enumerate(self.counts) if c]
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "q": self.q, "k": self.k, "counts": list(self.counts)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def weight_distribution(
    source: LinearCode | TraceDualSpec,
    budget: int | None = None,
    threads: int = 1,
) -> WeightDistribution:
    """Exact weight distribution; enumerates the cheaper of the code and its
    dual (projectively), transforming back when the dual side was counted."""
    if isinstance(source, TraceDualSpec):
        return source.weight_distribution(budget=budget, threads=threads)
    budget = default_budget() if budget is None else budget
    code = source
    direct_cost = code.enumeration_cost()
    dual_cost = kernels.projective_count(code.q, code.n - code.k) + 1
    if direct_cost <= min(dual_cost, budget):
        counts = kernels.weight_counts(code.gen_matrix, code.field, threads=threads)
        return WeightDistribution(
            n=code.n, q=code.q, k=code.k, counts=tuple(int(c) for c in counts)
        )
    if dual_cost <= budget:
        dcode = code.dual()
        counts = kernels.weight_counts(dcode.gen_matrix, dcode.field, threads=threads)
        dual_wd = WeightDistribution(
            n=code.n, q=code.q, k=dcode.k, counts=tuple(int(c) for c in counts)
        )
        return macwilliams(dual_wd)
    raise BudgetExceeded(
        f"min(direct={direct_cost}, dual={dual_cost}) exceeds budget {budget}"
    )


def macwilliams(wd: WeightDistribution) -> WeightDistribution:
    """Weight distribution of the dual code from the triangular system."""
    n, k, q = wd.n, wd.k, wd.q
    out: list[int] = []
    for j in range(n + 1):
        lhs = sum(comb(n - i, j) * wd.counts[i] for i in range(n - j + 1))
        # divide by q^(k-j); for j > k this is a multiplication
        if j >= k:
            s = lhs * q ** (j - k)
        else:
            denom = q ** (k - j)
            if lhs % denom:
                raise NonIntegerResult(f"A*_{j} is not an integer")
            s = lhs // denom
        s -= sum(comb(n - i, n - j) * out[i] for i in range(j))
        if s < 0:
            raise NonIntegerResult(f"A*_{j} = {s} is negative")
        out.append(s)
    return WeightDistribution(n=n, q=q, k=n - k, counts=tuple(out))


@dataclass(frozen=True)
class Classification:
    label: str  # MDS | NMDS | AMDS-not-NMDS | ordinary
    d: int
    d_dual: int
    singleton_defect: int

    def to_json_dict(self) -> dict:
        return {"label": self.label, "d": self.d, "d_dual": self.d_dual}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def classify(code: LinearCode, budget: int | None = None, threads: int = 1) -> Classification:
    """Singleton classification from exact d and d_dual.

    One enumeration serves both distances: whichever side is counted, the
    other side's distribution comes from the MacWilliams transform.
    """
    if code.k == 0 or code.k == code.n:
        raise InvalidParameters("classification needs 0 < k < n")
    budget = default_budget() if budget is None else budget
    direct_cost = code.enumeration_cost()
    dual_cost = kernels.projective_count(code.q, code.n - code.k) + 1
    if min(direct_cost, dual_cost) > budget:
        raise BudgetExceeded(f"both sides exceed budget {budget}")
    if direct_cost <= dual_cost:
        counts = kernels.weight_counts(code.gen_matrix, code.field, threads=threads)
        primal = WeightDistribution(code.n, code.q, code.k, tuple(int(c) for c in counts))
        ddual = macwilliams(primal).d()
        d = primal.d()
    else:
        dcode = code.dual()
        counts = kernels.weight_counts(dcode.gen_matrix, dcode.field, threads=threads)
        dwd = WeightDistribution(code.n, code.q, dcode.k, tuple(int(c) for c in counts))
        ddual = dwd.d()
        d = macwilliams(dwd).d()
    defect = code.n - code.k + 1 - d
    dual_defect = code.k + 1 - ddual
    if defect == 0:
        label = "MDS"
    elif defect == 1 and dual_defect == 1:
        label = "NMDS"
    elif defect == 1:
        label = "AMDS-not-NMDS"
    else:
        label = "ordinary"
    return Classification(label=label, d=d, d_dual=ddual, singleton_defect=defect)


def enumerator_formula(q: int, p_m: int) -> WeightDistribution:
    """Closed-form five-term weight distribution of the 4-dimensional dual
    for the two h-families (valid whenever p^m >= 3)."""
    if p_m < 3:
        raise InvalidParameters("closed form requires p^m >= 3")
    p, s = prime_power(q)
    pm_p, m = prime_power(p_m)
    if pm_p != p or s % m != 0 or m >= s:
        raise InvalidParameters(f"p^m={p_m} is not a proper subfield order of q={q}")
    n = q + 1
    counts = [0] * (n + 1)
    counts[0] = 1
    pairs = [
        (q - p_m, (q - 1) ** 2 * q * (q + 1), (p_m**2 - 1) * p_m),
        (q - 1, (q**2 - 1) * q * ((q + 1) * (p_m - 1) - (q - 1)), 2 * (p_m - 1)),
        (q, (q**2 - 1) * (q**2 - q + p_m), p_m),
        (q + 1, p_m * (q - 1) ** 2 * q * (q + 1), 2 * (p_m + 1)),
    ]
    for w, num, den in pairs:
        if num % den:
            raise NonIntegerResult(f"A_{w} is not an integer")
        counts[w] = num // den
    return WeightDistribution(n=n, q=q, k=4, counts=tuple(counts))


def verify_four_weight(q: int, h: int, budget: int | None = None, threads: int = 1) -> dict:
    """Check the dual of C_(q,q+1,3,h) is four-weight with support
    {q-p^m, q-1, q, q+1}; returns the counts and the formula comparison."""
    td = trace_dual(q, h)  # raises DegenerateDimension when the dual is not 4-dim
    family, i = td.family, td.i
    if i is None:
        raise InvalidParameters(f"h={h} is in neither family for q={q}")
    p, s = prime_power(q)
    from math import gcd

    m = gcd(i, s)
    p_m = p**m
    wd = td.weight_distribution(budget=budget, threads=threads)
    expected = {q - p_m, q - 1, q, q + 1}
    if wd.support() != expected:
        raise FourWeightViolation(
            f"support {sorted(wd.support())} != expected {sorted(expected)}"
        )
    if wd.d() != q - p_m:
        raise FourWeightViolation(f"min distance {wd.d()} != {q - p_m}")
    report = {
        "q": q,
        "h": h,
        "family": family,
        "i": i,
        "p_m": p_m,
        "weights": sorted(wd.support()),
        "counts": {w: wd.counts[w] for w in sorted(wd.support())},
        "formula_match": None,
    }
    if p_m >= 3:
        report["formula_match"] = enumerator_formula(q, p_m).counts == wd.counts
        if not report["formula_match"]:
            raise FourWeightViolation("distribution differs from the closed form")
    return report
