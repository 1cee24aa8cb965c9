"""Counting lemmas and the unit-circle solution counter N(a,b).

Brute force is the authoritative method everywhere; the closed forms
(linear congruence counts, the two gcd identities, and the single-nonzero
case predictions) are predictors under test.  The case predictions are a
straight composition of the congruence lemma with the gcd identities:
the count is gcd(coeff, q+1) when that gcd divides the discrete-log
target, and 0 otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .codes import FAMILY_Q_MINUS_PI, classify_h
from .errors import (
    InvalidParameters,
    NoDelta,
    NotApplicable,
    NotFullCase,
    ValueSetViolation,
)
from .galois import field_for_order, field_new, subfield_members, unit_circle


@dataclass(frozen=True)
class SolutionCount:
    value: int
    method: str  # closed_form | brute_force


def congruence_solutions(a: int, b: int, m: int) -> list[int]:
    """All x in [0, m) with a*x = b (mod m): empty unless gcd(a, m) | b,
    else exactly gcd(a, m) solutions spaced m/gcd apart."""
    if m < 1:
        raise InvalidParameters("modulus must be >= 1")
    a %= m
    b %= m
    if m == 1:
        return [0]
    e = gcd(a, m)
    if b % e:
        return []
    mm = m // e
    x0 = (b // e) * pow(a // e, -1, mm) % mm
    return [x0 + j * mm for j in range(e)]


def gcd_plus_plus(p: int, i: int, s: int) -> int:
    """gcd(p^i + 1, p^s + 1): p^m + 1 when i/m and s/m are both odd
    (m = gcd(i, s)); otherwise 1 for even p, 2 for odd p."""
    if min(p, i, s) < 1:
        raise InvalidParameters("p, i, s must be positive")
    m = gcd(i, s)
    if (i // m) % 2 == 1 and (s // m) % 2 == 1:
        return p**m + 1
    return 1 if p % 2 == 0 else 2


def gcd_minus_plus(p: int, i: int, s: int) -> int:
    """gcd(p^i - 1, p^s + 1): p^m + 1 when i/m is even; else 1 or 2 by parity of p."""
    if min(p, i, s) < 1:
        raise InvalidParameters("p, i, s must be positive")
    m = gcd(i, s)
    if (i // m) % 2 == 0:
        return p**m + 1
    return 1 if p % 2 == 0 else 2


# ---------------------------------------------------------------------------
# zeros of P_a(X) = X^(p^k + 1) + X + a


def count_zeros_Pa(p: int, n: int, k: int, a: int) -> SolutionCount:
    """Brute-force root count of P_a over GF(p^n); must land in
    {0, 1, 2, p^e + 1}, e = gcd(n, k)."""
    if a == 0:
        raise InvalidParameters("a must be nonzero")
    field = field_new(p, n)
    reps = np.arange(field.q, dtype=np.int64)
    vals = field.add_arr(field.add_arr(field.pow_arr(reps, p**k + 1), reps), a)
    count = int((vals == 0).sum())
    e = gcd(n, k)
    if count not in {0, 1, 2, p**e + 1}:
        raise ValueSetViolation(f"N_a = {count} outside {{0, 1, 2, {p**e + 1}}}")
    return SolutionCount(value=count, method="brute_force")


def zeros_Pa_brute(p: int, n: int, k: int, a: int) -> list[int]:
    field = field_new(p, n)
    reps = np.arange(field.q, dtype=np.int64)
    vals = field.add_arr(field.add_arr(field.pow_arr(reps, p**k + 1), reps), a)
    return [int(r) for r in reps[vals == 0]]


def all_zeros_Pa(p: int, n: int, k: int, a: int, x0: int) -> list[int]:
    """Construct all p^e + 1 zeros of P_a from one known zero x0, via the
    auxiliary delta and w0 equations of the full-count case."""
    field = field_new(p, n)
    e = gcd(n, k)
    pe = p**e
    if field.add(field.add(field.pow(x0, p**k + 1), x0), a) != 0:
        raise InvalidParameters("x0 is not a zero of P_a")
    if count_zeros_Pa(p, n, k, a).value != pe + 1:
        raise NotFullCase("P_a does not have p^e + 1 zeros")
    # delta with delta^(p^k - 1) = x0^2 / a
    rhs = field.div(field.mul(x0, x0), a)
    logs = congruence_solutions(p**k - 1, field.log_of(rhs), field.q - 1)
    if not logs:
        raise NoDelta("x0^2 / a is not a (p^k - 1)-th power")
    delta = field.alpha_pow(logs[0])
    # w0: a root of the linearized equation w^(p^k) - w + 1/(delta x0) = 0,
    # whose solution set is a coset of the copy of GF(p^e)
    c = field.inv(field.mul(delta, x0))
    reps = np.arange(field.q, dtype=np.int64)
    vals = field.add_arr(
        field.sub_arr(field.pow_arr(reps, p**k), reps), c
    )
    wroots = reps[vals == 0]
    if len(wroots) != pe:
        raise ValueSetViolation(
            f"auxiliary equation has {len(wroots)} roots, expected p^e = {pe}"
        )
    w0 = int(wroots[0])
    zeros = {x0}
    for gamma in subfield_members(field, pe):
        t = field.add(w0, int(gamma))
        z = field.mul(field.pow(t, p**k - 1), x0)
        zeros.add(z)
    if len(zeros) != pe + 1:
        raise ValueSetViolation(f"constructed {len(zeros)} zeros, expected {pe + 1}")
    for z in zeros:
        if field.add(field.add(field.pow(z, p**k + 1), z), a) != 0:
            raise ValueSetViolation(f"constructed value {z} is not a zero")
    return sorted(zeros)


# ---------------------------------------------------------------------------
# N(a, b) over the unit circle


def _family_data(q: int, h: int):
    family, i = classify_h(q, h)
    if i is None:
        raise InvalidParameters(f"h={h} is in neither family for q={q}")
    from .galois import prime_power

    p, s = prime_power(q)
    return family, i, p, s


def count_unit_solutions(q: int, h: int, a: int, b: int) -> SolutionCount:
    """Brute-force count of unit-circle solutions of the family equation;
    value must lie in {0, 1, 2, p^m + 1}, m = gcd(i, s)."""
    if a == 0 and b == 0:
        raise InvalidParameters("(a, b) must be nonzero")
    family, i, p, s = _family_data(q, h)
    f2 = field_for_order(q * q)
    circle = unit_circle(f2)
    pi = p**i
    aq = f2.pow(a, q)
    bq = f2.pow(b, q)
    count = 0
    for u in circle.elements:
        upi = f2.pow(u, pi)
        upi1 = f2.mul(upi, u)
        if family == FAMILY_Q_MINUS_PI:
            v = f2.add(f2.add(a, f2.mul(b, u)), f2.add(f2.mul(bq, upi), f2.mul(aq, upi1)))
        else:
            v = f2.add(f2.add(bq, f2.mul(aq, u)), f2.add(f2.mul(a, upi), f2.mul(b, upi1)))
        if v == 0:
            count += 1
    m = gcd(i, s)
    if count not in {0, 1, 2, p**m + 1}:
        raise ValueSetViolation(f"N(a,b) = {count} outside {{0, 1, 2, {p**m + 1}}}")
    return SolutionCount(value=count, method="brute_force")


def unit_solution_counts(q: int, h: int) -> np.ndarray:
    """Vectorised N(a, b) over all q^4 pairs; index is a_rep * q^2 + b_rep.

    Entry for (0, 0) is q + 1 (every unit solves the zero equation)."""
    family, i, p, s = _family_data(q, h)
    f2 = field_for_order(q * q)
    circle = unit_circle(f2)
    pi = p**i
    q2 = f2.q
    mul_tab = f2.mul_table()
    add_tab = f2.add_table()
    reps = np.arange(q2, dtype=np.int64)
    a_grid = np.repeat(reps, q2)
    b_grid = np.tile(reps, q2)
    aq = f2.pow_arr(a_grid, q)
    bq = f2.pow_arr(b_grid, q)
    counts = np.zeros(q2 * q2, dtype=np.int64)
    for u in circle.elements:
        upi = f2.pow(u, pi)
        upi1 = f2.mul(upi, u)
        if family == FAMILY_Q_MINUS_PI:
            v = add_tab[
                add_tab[a_grid, mul_tab[b_grid, u]],
                add_tab[mul_tab[bq, upi], mul_tab[aq, upi1]],
            ]
        else:
            v = add_tab[
                add_tab[bq, mul_tab[aq, u]],
                add_tab[mul_tab[a_grid, upi], mul_tab[b_grid, upi1]],
            ]
        counts += v == 0
    return counts


def predict_case12(q: int, h: int, a: int, b: int) -> SolutionCount:
    """Closed-form N(a, b) when exactly one of a, b is nonzero.

    Composes the congruence-count lemma with the gcd identities: reduce the
    equation to u^c = alpha^target over the circle, count t-solutions of
    c*t = target (mod q+1).  Must agree with count_unit_solutions.
    """
    if (a == 0) == (b == 0):
        raise NotApplicable("exactly one of a, b must be zero")
    family, i, p, s = _family_data(q, h)
    f2 = field_for_order(q * q)
    pi = p**i
    nz = a if b == 0 else b
    r = f2.log_of(nz)
    # which exponent the equation collapses to:
    #   family 1: b=0 -> p^i + 1;  a=0 -> p^i - 1
    #   family 2: b=0 -> p^i - 1;  a=0 -> p^i + 1
    plus_case = (b == 0) == (family == FAMILY_Q_MINUS_PI)
    coeff = pi + 1 if plus_case else pi - 1
    e = gcd_plus_plus(p, i, s) if plus_case else gcd_minus_plus(p, i, s)
    assert e == gcd(coeff, q + 1)
    if p == 2:
        target = (-r) % (q + 1)
    elif family == FAMILY_Q_MINUS_PI:
        target = ((q + 1) // 2 - r) % (q + 1)
    else:
        target = ((q + 1) // 2 + r) % (q + 1)
    value = e if target % e == 0 else 0
    return SolutionCount(value=value, method="closed_form")


def sweep_rows(q: int, h: int):
    """Yield (a_rep, b_rep, N, predicted-or-None) over all nonzero pairs."""
    counts = unit_solution_counts(q, h)
    q2 = q * q
    for a in range(q2):
        for b in range(q2):
            if a == 0 and b == 0:
                continue
            n_ab = int(counts[a * q2 + b])
            pred: int | None = None
            if (a == 0) != (b == 0):
                pred = predict_case12(q, h, a, b).value
            yield a, b, n_ab, pred


def sweep_csv(q: int, h: int) -> str:
    lines = ["a_rep,b_rep,N,predicted"]
    for a, b, n_ab, pred in sweep_rows(q, h):
        lines.append(f"{a},{b},{n_ab},{'' if pred is None else pred}")
    return "\n".join(lines) + "\n"
