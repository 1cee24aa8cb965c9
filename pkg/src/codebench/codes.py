"""BCH codes C_(q,n,delta,h), duals, and the length-(q+1) trace representation.

The builder expands minimal polynomials in the splitting field GF(q^m),
m = ord_n(q), takes their lcm as the generator polynomial, and realises
generator/check matrices as cyclic shift staircases.  For the length-(q+1)
codes with a 4-dimensional dual, the dual is also available as the trace
code {c_(a,b)} over the unit circle, which is the representation all
weight/design verifications cross-check against.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import _kernels as kernels
from .config import default_budget
from .cyclotomic import Poly, coset, minimal_poly, splitting_field
from .errors import (
    BudgetExceeded,
    DegenerateDimension,
    InvalidParameters,
    NotCoprime,
    SpecMismatch,
)
from .galois import (
    Field,
    field_for_order,
    prime_power,
    subfield_embedding,
    trace_table,
    unit_circle,
)

FAMILY_Q_MINUS_PI = "q-minus-pi"
FAMILY_PI_MINUS_1 = "pi-minus-1"
FAMILY_GENERIC = "generic"


@dataclass(frozen=True)
class CodeSpec:
    q: int
    n: int
    delta: int
    h: int

    def __post_init__(self):
        if gcd(self.n, self.q) != 1:
            raise NotCoprime((self.n, self.q))
        if not 2 <= self.delta <= self.n:
            raise InvalidParameters("need 2 <= delta <= n")
        if self.h < 0:
            raise InvalidParameters("h must be >= 0")

    def to_json_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "delta": self.delta, "h": self.h}


def classify_h(q: int, h: int) -> tuple[str, int | None]:
    """Detect which h-family (if either) the offset belongs to.

    Family 1: h = (q - p^i)/2 for 0 < i < s, any p.
    Family 2: h = (p^i - 1)/2 for 0 < i < s, odd p.
    """
    p, s = prime_power(q)
    t = q - 2 * h
    if t > 1:
        i = 0
        while t % p == 0:
            t //= p
            i += 1
        if t == 1 and 0 < i < s:
            return FAMILY_Q_MINUS_PI, i
    if p != 2:
        t = 2 * h + 1
        i = 0
        while t % p == 0:
            t //= p
            i += 1
        if t == 1 and 0 < i < s:
            return FAMILY_PI_MINUS_1, i
    return FAMILY_GENERIC, None


# ---------------------------------------------------------------------------
# linear algebra over a field (small matrices)


def rref(mat: np.ndarray, field: Field) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (R, pivot column list)."""
    R = np.array(mat, dtype=np.int64)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = None
        for i in range(r, rows):
            if R[i, c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = field.mul_arr(R[r], field.inv(int(R[r, c])))
        for i in range(rows):
            if i != r and R[i, c] != 0:
                R[i] = field.add_arr(R[i], field.neg_arr(field.mul_arr(R[r], int(R[i, c]))))
        pivots.append(c)
        r += 1
    return R[: len(pivots)], pivots


def rank(mat: np.ndarray, field: Field) -> int:
    return rref(mat, field)[0].shape[0]


def nullspace(mat: np.ndarray, field: Field) -> np.ndarray:
    """Basis of the right nullspace, one vector per row."""
    R, pivots = rref(mat, field)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for idx, fcol in enumerate(free):
        basis[idx, fcol] = 1
        for r, pcol in enumerate(pivots):
            basis[idx, pcol] = field.neg(int(R[r, fcol]))
    return basis


def same_row_space(a: np.ndarray, b: np.ndarray, field: Field) -> bool:
    ra = rank(a, field)
    rb = rank(b, field)
    if ra != rb:
        return False
    stacked = np.vstack([a, b])
    return rank(stacked, field) == ra


# ---------------------------------------------------------------------------
# linear codes


class LinearCode:
    """An [n, k] linear code over GF(q), with optional cyclic structure."""

    def __init__(
        self,
        field: Field,
        n: int,
        gen_matrix: np.ndarray,
        gen_poly: Poly | None = None,
        family: str = FAMILY_GENERIC,
        spec: CodeSpec | None = None,
    ):
        self.field = field
        self.n = n
        self.gen_matrix = np.ascontiguousarray(gen_matrix, dtype=np.int64)
        self.k = self.gen_matrix.shape[0]
        if self.gen_matrix.shape != (self.k, n):
            raise InvalidParameters("generator matrix shape mismatch")
        self.gen_poly = gen_poly
        self.family = family
        self.spec = spec
        self._check_matrix: np.ndarray | None = None
        self._dual: LinearCode | None = None

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def check_matrix(self) -> np.ndarray:
        if self._check_matrix is None:
            self._check_matrix = self.dual().gen_matrix
        return self._check_matrix

    def dual(self) -> "LinearCode":
        if self._dual is None:
            if self.gen_poly is not None and not self.gen_poly.is_zero:
                # parity-check polynomial reciprocal, made monic
                xn1 = Poly.x_pow_n_minus_1(self.field, self.n)
                hpoly, rem = divmod(xn1, self.gen_poly)
                assert rem.is_zero
                gdual = hpoly.reciprocal().monic()
                dual = cyclic_code(self.field, self.n, gdual, family=self.family)
            else:
                basis = nullspace(self.gen_matrix, self.field)
                dual = LinearCode(self.field, self.n, basis)
            dual._dual = self
            self._dual = dual
        return self._dual

    def codeword_count(self) -> int:
        return self.q**self.k

    def enumeration_cost(self) -> int:
        """Projective message count (scalar classes enumerated once)."""
        return kernels.projective_count(self.q, self.k) + 1

    def codewords(self, budget: int | None = None) -> np.ndarray:
        """Materialise all q^k codewords as an array (small codes only)."""
        budget = default_budget() if budget is None else budget
        if self.codeword_count() > budget:
            raise BudgetExceeded(
                f"{self.codeword_count()} codewords exceed budget {budget}"
            )
        add_tab = self.field.add_table()
        out = np.zeros((1, self.n), dtype=np.int32)
        for j in range(self.k):
            mults = self.field.mul_arr(
                np.arange(self.q, dtype=np.int64)[:, None], self.gen_matrix[j][None, :]
            ).astype(np.int32)
            out = add_tab[out[:, None, :], mults[None, :, :]].reshape(-1, self.n)
        return out

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64)
        if word.shape != (self.n,):
            raise SpecMismatch("word length mismatch")
        if self.gen_poly is not None:
            f = Poly.make(self.field, word.tolist())
            return (f % self.gen_poly).is_zero
        H = self.check_matrix
        f = self.field
        for row in H:
            acc = 0
            for a, b in zip(row, word):
                acc = f.add(acc, f.mul(int(a), int(b)))
            if acc != 0:
                return False
        return True

    def min_distance(self, budget: int | None = None, threads: int = 1) -> int:
        return min_distance(self, budget=budget, threads=threads)

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "gen_poly": list(self.gen_poly.coeffs) if self.gen_poly else None,
            "family": self.family,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"


def cyclic_code(
    field: Field, n: int, gen_poly: Poly, family: str = FAMILY_GENERIC, spec=None
) -> LinearCode:
    k = n - gen_poly.degree
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + gen_poly.degree + 1] = gen_poly.coeffs
    return LinearCode(field, n, G, gen_poly=gen_poly, family=family, spec=spec)


def bch_build(spec: CodeSpec | None = None, *, q=None, n=None, delta=None, h=None) -> LinearCode:
    """Build C_(q,n,delta,h): the cyclic code whose generator is the lcm of
    the minimal polynomials of beta^h .. beta^(h+delta-2)."""
    if spec is None:
        spec = CodeSpec(q=q, n=n, delta=delta, h=h)
    q, n, delta, h = spec.q, spec.n, spec.delta, spec.h
    base = field_for_order(q)
    big, beta = splitting_field(q, n)
    polys = []
    seen: set[int] = set()
    for j in range(h, h + delta - 1):
        cs = coset(n, q, j % n)
        if cs.leader in seen:
            continue
        seen.add(cs.leader)
        polys.append(minimal_poly(beta, cs))
    gen = polys[0]
    for pp in polys[1:]:
        gen = gen * pp  # distinct cosets => coprime minimal polynomials
    family, _ = classify_h(q, h) if n == q + 1 else (FAMILY_GENERIC, None)
    return cyclic_code(base, n, gen.monic(), family=family, spec=spec)


def dual(code: LinearCode) -> LinearCode:
    return code.dual()


def codeword_iter(code: LinearCode, budget: int | None = None):
    """Yield every codeword exactly once (all GF(q) row combinations)."""
    budget = default_budget() if budget is None else budget
    if code.codeword_count() > budget:
        raise BudgetExceeded(
            f"{code.codeword_count()} codewords exceed budget {budget}"
        )
    f = code.field
    q, k, n = code.q, code.k, code.n
    word = np.zeros(n, dtype=np.int64)
    digits = [0] * k
    while True:
        yield word.copy()
        t = k - 1
        while t >= 0 and digits[t] == q - 1:
            digits[t] = 0
            t -= 1
        if t < 0:
            return
        digits[t] += 1
        word = np.zeros(n, dtype=np.int64)
        for j in range(k):
            if digits[j]:
                word = f.add_arr(word, f.mul_arr(digits[j], code.gen_matrix[j]))


def dump_codewords(code: LinearCode, budget: int | None = None) -> str:
    """One codeword per line, space-separated integer representations."""
    words = code.codewords(budget=budget)
    return "\n".join(" ".join(map(str, row)) for row in words) + "\n"


def min_distance(code: LinearCode, budget: int | None = None, threads: int = 1) -> int:
    """Exact minimum distance via the cheaper of direct or dual-side
    enumeration (dual side goes through the MacWilliams transform)."""
    from .weights import weight_distribution

    wd = weight_distribution(code, budget=budget, threads=threads)
    d = wd.d()
    if d is None:
        raise InvalidParameters("zero code has no minimum distance")
    return d


# ---------------------------------------------------------------------------
# trace representation of the dual for n = q + 1


def _family_row_exponents(q: int, h: int, family: str) -> list[int]:
    n = q + 1
    if family == FAMILY_PI_MINUS_1:
        return [(-(h + 1)) % n, (-h) % n, h % n, (h + 1) % n]
    return [h % n, (h + 1) % n, (q - h) % n, (q - h + 1) % n]


def parity_check_rows(q: int, h: int) -> tuple[np.ndarray, Field]:
    """The 4 x (q+1) parity-check matrix over GF(q^2) for C_(q,q+1,3,h).

    Rows are beta-power evaluations at the generator's four roots; the row
    order follows the h-family convention.  Requires the dual dimension to
    be exactly 4.
    """
    n = q + 1
    ch, ch1 = coset(n, q, h % n), coset(n, q, (h + 1) % n)
    if ch.leader == ch1.leader or ch.size != 2 or ch1.size != 2:
        raise DegenerateDimension(
            f"dual of C_({q},{n},3,{h}) has dimension {len(set(ch.members) | set(ch1.members))}"
        )
    p, t = prime_power(q)
    field2 = field_for_order(q * q)
    circle = unit_circle(field2)
    family, _ = classify_h(q, h)
    exps = _family_row_exponents(q, h, family)
    H = np.empty((4, n), dtype=np.int64)
    for r, e in enumerate(exps):
        for i in range(n):
            H[r, i] = circle.elements[(e * i) % n]
    return H, field2


class TraceDualSpec:
    """Generator of the dual codewords c_(a,b) via the relative trace.

    c_(a,b)[i] = Tr(a * beta^(h i) + b * beta^((h+1) i)) for i = 0..q,
    with the trace values carried back to the canonical GF(q) through the
    subfield embedding.  The map (a, b) -> c_(a,b) is GF(q)-bilinear and
    injective exactly when the dual dimension is 4.
    """

    def __init__(self, q: int, h: int):
        n = q + 1
        ch, ch1 = coset(n, q, h % n), coset(n, q, (h + 1) % n)
        dim = len(set(ch.members) | set(ch1.members))
        if dim != 4:
            raise DegenerateDimension(f"dual dimension is {dim}, not 4")
        self.q, self.h, self.n = q, h, n
        self.family, self.i = classify_h(q, h)
        self.field = field_for_order(q)
        self.field2 = field_for_order(q * q)
        self.circle = unit_circle(self.field2)
        self.embedding = subfield_embedding(self.field2, self.field)
        f2 = self.field2
        self._bh = np.array(
            [f2.pow(self.circle.beta, (h * i)) for i in range(n)], dtype=np.int64
        )
        self._bh1 = np.array(
            [f2.pow(self.circle.beta, ((h + 1) * i)) for i in range(n)], dtype=np.int64
        )

    def codeword(self, a: int, b: int) -> np.ndarray:
        """Single dual codeword, coordinates in canonical GF(q)."""
        f2 = self.field2
        vals = f2.add_arr(f2.mul_arr(a, self._bh), f2.mul_arr(b, self._bh1))
        traces = f2.add_arr(vals, f2.pow_arr(vals, self.q))
        return self.embedding.project_arr(traces)

    def basis_matrix(self) -> np.ndarray:
        """4 x (q+1) generator matrix of the trace code over GF(q):
        rows c_(1,0), c_(alpha,0), c_(0,1), c_(0,alpha)."""
        a = self.field2.alpha_pow(1)
        rows = [
            self.codeword(1, 0),
            self.codeword(a, 0),
            self.codeword(0, 1),
            self.codeword(0, a),
        ]
        return np.array(rows, dtype=np.int64)

    def codewords(self, budget: int | None = None) -> np.ndarray:
        """All q^4 dual codewords, one per (a, b), vectorised emission."""
        budget = default_budget() if budget is None else budget
        q, n = self.q, self.n
        total = q**4
        kernels.check_budget(total, budget)
        f2 = self.field2
        q2 = f2.q
        mul_tab = f2.mul_table()
        add_tab = f2.add_table()
        tr = trace_table(f2)
        proj = self.embedding.project_table()
        reps = np.arange(q2, dtype=np.int64)
        a_grid = np.repeat(reps, q2)
        b_grid = np.tile(reps, q2)
        out = np.empty((total, n), dtype=np.int32)
        for i in range(n):
            va = mul_tab[a_grid, self._bh[i]]
            vb = mul_tab[b_grid, self._bh1[i]]
            out[:, i] = proj[tr[add_tab[va, vb]]]
        return out

    def weight_distribution(self, budget: int | None = None, threads: int = 1):
        from .weights import WeightDistribution

        budget = default_budget() if budget is None else budget
        cost = kernels.projective_count(self.q, 4) + 1
        kernels.check_budget(cost, budget)
        counts = kernels.weight_counts(self.basis_matrix(), self.field, threads=threads)
        return WeightDistribution(n=self.n, q=self.q, k=4, counts=tuple(int(c) for c in counts))


def trace_dual(q: int, h: int) -> TraceDualSpec:
    return TraceDualSpec(q, h)
