"""Finite fields GF(p^m) with a canonical, reproducible representation.

An element is an integer in ``[0, q)`` whose base-p digits are its
polynomial-basis coordinates, low degree first.  The modulus is always the
lexicographically smallest primitive monic polynomial of degree m over
GF(p) (coefficients compared low-degree-first as base-p digits), so alpha,
the residue class of x, is a primitive element and every golden value

downstream is reproducible.  For prime fields the modulus is ``x - a`` with
``a`` the smallest primitive root mod p, so alpha is that root.

Arithmetic runs on log/antilog tables plus Zech logarithms, making every
scalar operation O(1) lookups; vectorised variants operate on numpy arrays
of element representations.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import (
    BudgetExceeded,
    DivisionByZero,
    NotInSubfield,
    NotPrime,
    NotSquareField,
    SpecMismatch,
)

TABLE_BUDGET = 1 << 24  # largest field size we will build tables for
_SMALL_TABLE_MAX = 2048  # largest q for cached dense q x q op tables


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (n <= 2^48 scale)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise NotPrime."""
    fs = factorize(q)
    if len(fs) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, m),) = fs.items()
    return p, m


# ---------------------------------------------------------------------------
# canonical modulus search


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    m = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                res[i + j] = (res[i + j] + ca * cb) % p
    for i in range(len(res) - 1, m - 1, -1):
        c = res[i]
        if c:
            for j in range(m + 1):
                res[i - m + j] = (res[i - m + j] - c * mod[j]) % p
    res = res[:m]
    res.extend([0] * (m - len(res)))
    return res


def _x_pow_mod(e: int, mod: list[int], p: int) -> list[int]:
    m = len(mod) - 1
    result = [1] + [0] * (m - 1)
    base = _poly_mulmod([0, 1], [1], mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _is_primitive_modulus(mod: list[int], p: int) -> bool:
    # x must be a unit with multiplicative order exactly p^m - 1; that order
    # forces irreducibility, so no separate irreducibility test is needed.
    if mod[0] == 0:
        return False
    m = len(mod) - 1
    group = p**m - 1
    one = [1] + [0] * (m - 1)
    if _x_pow_mod(group, mod, p) != one:
        return False
    return all(_x_pow_mod(group // f, mod, p) != one for f in factorize(group))


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factorize(p - 1)):
            return g
    raise AssertionError("no primitive root found")  # pragma: no cover


def lex_smallest_primitive_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return ((-smallest_primitive_root(p)) % p, 1)
    for c in range(p**m):
        digits, t = [], c
        for _ in range(m):
            digits.append(t % p)
            t //= p
        mod = digits + [1]
        if _is_primitive_modulus(mod, p):
            return tuple(mod)
    raise AssertionError("no primitive polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------
# field construction


def _build_exp_chain(p: int, m: int, q: int, modulus: tuple[int, ...]) -> np.ndarray:
    """exp[i] = representation of alpha^i for 0 <= i < q - 1."""
    exp = np.empty(q - 1, dtype=np.int64)
    if m == 1:
        a = smallest_primitive_root(p)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            x = x * a % p
        return exp
    if p == 2:
        # digits are bits: multiply-by-x is a shift and conditional xor
        mod_int = 0
        for i, c in enumerate(modulus):
            mod_int |= c << i
        mod_int &= q - 1  # drop the monic leading term
        x = 1
        for i in range(q - 1):
            exp[i] = x
            x <<= 1
            if x & q:
                x = (x ^ mod_int) & (q - 1)
        return exp
    digits = [0] * m
    digits[0] = 1
    powers = [p**i for i in range(m)]
    mod_low = modulus[:m]
    for i in range(q - 1):
        exp[i] = sum(d * w for d, w in zip(digits, powers))
        lead = digits[m - 1]
        digits = [0] + digits[:-1]
        if lead:
            digits = [(d - lead * c) % p for d, c in zip(digits, mod_low)]
    return exp


class Field:
    """A concrete GF(p^m); immutable once constructed, shareable freely."""

    __slots__ = (
        "p",
        "m",
        "q",
        "modulus",
        "generator_index",
        "exp",
        "log",
        "zech",
        "_neg_offset",
        "_tables",
    )

    def __init__(self, p: int, m: int):
        if not is_prime(p):
            raise NotPrime(p)
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**m
        if q > TABLE_BUDGET:
            raise BudgetExceeded(q)
        self.p, self.m, self.q = p, m, q
        self.generator_index = 1
        self.modulus = lex_smallest_primitive_modulus(p, m)
        base = _build_exp_chain(p, m, q, self.modulus)
        # doubled antilog table: exp[i + j] valid for i, j < q - 1 without mod
        self.exp = np.concatenate([base, base])
        self.log = np.full(q, -1, dtype=np.int64)
        self.log[base] = np.arange(q - 1, dtype=np.int64)
        # zech[k] = log(1 + alpha^k); -1 where the sum is zero
        d0 = base % p
        plus_one = base - d0 + (d0 + 1) % p
        self.zech = self.log[plus_one]
        self._neg_offset = 0 if p == 2 else (q - 1) // 2
        self._tables: dict[str, np.ndarray] = {}

    # -- scalar arithmetic on integer representations ----------------------

    def add(self, x: int, y: int) -> int:
        if x == 0:
            return int(y)
        if y == 0:
            return int(x)
        i = self.log[x]
        d = self.log[y] - i
        if d < 0:
            d += self.q - 1
        z = self.zech[d]
        if z < 0:
            return 0
        return int(self.exp[i + z])

    def neg(self, x: int) -> int:
        if x == 0 or self.p == 2:
            return int(x)
        return int(self.exp[self.log[x] + self._neg_offset])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.exp[self.log[x] + self.log[y]])

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        lg = self.log[x]
        return int(self.exp[(self.q - 1 - lg) % (self.q - 1)])

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise DivisionByZero("negative power of zero")
        e %= self.q - 1  # reduce first: log * e must stay within int64
        return int(self.exp[(self.log[x] * e) % (self.q - 1)])

    def frob(self, x: int, j: int = 1) -> int:
        return self.pow(x, self.p**j)

    def alpha_pow(self, e: int) -> int:
        return int(self.exp[e % (self.q - 1)])

    def log_of(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("log of zero")
        return int(self.log[x])

    # -- vectorised arithmetic on arrays of representations ----------------

    def add_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = np.where(a == 0, b, a).copy()
        mask = (a != 0) & (b != 0)
        if mask.any():
            i = self.log[a[mask]]
            d = self.log[b[mask]] - i
            d[d < 0] += self.q - 1
            z = self.zech[d]
            out[mask] = np.where(z < 0, 0, self.exp[i + np.maximum(z, 0)])
        return out

    def neg_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        out = a.copy()
        mask = a != 0
        out[mask] = self.exp[self.log[a[mask]] + self._neg_offset]
        return out

    def sub_arr(self, a, b) -> np.ndarray:
        return self.add_arr(a, self.neg_arr(np.asarray(b, dtype=np.int64)))

    def mul_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        mask = (a != 0) & (b != 0)
        if mask.any():
            out[mask] = self.exp[self.log[a[mask]] + self.log[b[mask]]]
        return out

    def pow_arr(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros(a.shape, dtype=np.int64)
        mask = a != 0
        if e == 0:
            out[:] = 1
            return out
        e %= self.q - 1
        out[mask] = self.exp[(self.log[a[mask]] * e) % (self.q - 1)] if e else 1
        return out

    # -- cached dense tables for kernel use ---------------------------------

    def _dense(self, name: str, build) -> np.ndarray:
        if name not in self._tables:
            if self.q > _SMALL_TABLE_MAX:
                raise BudgetExceeded(
                    f"dense {name} table for q={self.q} exceeds {_SMALL_TABLE_MAX}"
                )
            self._tables[name] = build()
        return self._tables[name]

    def add_table(self) -> np.ndarray:
        def build():
            r = np.arange(self.q, dtype=np.int64)
            return self.add_arr(r[:, None], r[None, :]).astype(np.int32)

        return self._dense("add", build)

    def mul_table(self) -> np.ndarray:
        def build():
            r = np.arange(self.q, dtype=np.int64)
            return self.mul_arr(r[:, None], r[None, :]).astype(np.int32)

        return self._dense("mul", build)

    def neg_table(self) -> np.ndarray:
        def build():
            return self.neg_arr(np.arange(self.q, dtype=np.int64)).astype(np.int32)

        return self._dense("neg", build)

    def inv_table(self) -> np.ndarray:
        def build():
            t = np.zeros(self.q, dtype=np.int32)
            lg = np.arange(1, self.q, dtype=np.int64)
            t[1:] = self.exp[(self.q - 1 - self.log[lg]) % (self.q - 1)]
            return t

        return self._dense("inv", build)

    # -- misc ----------------------------------------------------------------

    def element(self, rep: int) -> "FieldElement":
        return FieldElement(self, int(rep) % self.q)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def alpha(self) -> "FieldElement":
        return FieldElement(self, int(self.exp[1 % (self.q - 1)]) if self.q > 2 else 1)

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return self is other or (
            isinstance(other, Field) and (self.p, self.m) == (other.p, other.m)
        )

    def __hash__(self):
        return hash((self.p, self.m))

    def to_json_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


_FIELD_CACHE: dict[tuple[int, int], Field] = {}


def field_new(p: int, m: int) -> Field:
    """Construct (or fetch the cached) canonical GF(p^m)."""
    key = (p, m)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, m)
    return _FIELD_CACHE[key]


def field_for_order(q: int) -> Field:
    return field_new(*prime_power(q))


def field_from_json(text: str) -> Field:
    data = json.loads(text)
    f = field_new(int(data["p"]), int(data["m"]))
    if list(f.modulus) != [int(c) for c in data["modulus"]]:
        raise SpecMismatch("modulus does not match the canonical construction")
    return f


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class FieldElement:
    """Thin wrapper over an integer representation; ops check field identity."""

    field: Field
    rep: int

    def _peer(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise SpecMismatch("elements of different fields")
            return other.rep
        if isinstance(other, int):
            return other % self.field.p  # prime-subfield constant
        raise TypeError(f"cannot combine FieldElement with {type(other)!r}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.rep, self._peer(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.rep, self._peer(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.rep, self._peer(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.rep, self._peer(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.rep, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.rep))

    def __int__(self):
        return self.rep

    def __bool__(self):
        return self.rep != 0

    def __repr__(self):
        return f"{self.field!r}({self.rep})"


# ---------------------------------------------------------------------------
# relative trace, unit circle, subfield embedding


def rel_trace(field: Field, x: int) -> int:
    """Trace x + x^q of GF(q^2) onto its index-2 subfield copy."""
    q = isqrt(field.q)
    if q * q != field.q:
        raise NotSquareField(field.q)
    return field.add(x, field.pow(x, q))


def trace_table(field: Field) -> np.ndarray:
    """Vector of rel_trace over all representations (cached)."""

    def build():
        q = isqrt(field.q)
        if q * q != field.q:
            raise NotSquareField(field.q)
        reps = np.arange(field.q, dtype=np.int64)
        return field.add_arr(reps, field.pow_arr(reps, q)).astype(np.int32)

    return field._dense("trace", build)


@dataclass(frozen=True)
class UnitCircle:
    """The q+1 roots of X^(q+1) - 1 in GF(q^2), as powers of beta = alpha^(q-1)."""

    field: Field
    q: int
    beta: int
    elements: tuple[int, ...]

    def __len__(self):
        return len(self.elements)


def unit_circle(field: Field) -> UnitCircle:
    q = isqrt(field.q)
    if q * q != field.q:
        raise NotSquareField(field.q)
    beta = field.alpha_pow(q - 1)
    elems = tuple(field.alpha_pow((q - 1) * j) for j in range(q + 1))
    assert len(set(elems)) == q + 1
    return UnitCircle(field=field, q=q, beta=beta, elements=elems)


class SubfieldEmbedding:
    """Field embedding of the canonical GF(p^t) into GF(p^s), t | s.

    The image of alpha_small is a root gamma of the small field's modulus
    inside the big field, which makes the map a ring isomorphism onto the
    subfield copy {x : x^(p^t) = x}.  Edges with a proper intermediate
    subfield are composed through the largest one, so towers built from
    these embeddings commute; on direct edges the discrete-log candidate
    alpha_big^((p^s-1)/(p^t-1)) is preferred when it is a root, with the
    smallest-representation root as fallback.
    """

    __slots__ = ("big", "small", "ratio", "gamma", "_embed", "_project")

    def __init__(self, big: Field, small: Field):
        if big.p != small.p or big.m % small.m != 0:
            raise NotInSubfield(f"{small!r} does not embed in {big!r}")
        self.big, self.small = big, small
        self.ratio = (big.q - 1) // (small.q - 1)
        mid_m = self._largest_intermediate()
        if mid_m is not None:
            mid = field_new(big.p, mid_m)
            upper = subfield_embedding(big, mid)
            lower = subfield_embedding(mid, small)
            embed = upper._embed[lower._embed]
            self.gamma = int(embed[small.alpha.rep]) if small.q > 2 else 1
        else:
            self.gamma = self._find_gamma()
            gpow = [1]
            for _ in range(small.m - 1):
                gpow.append(big.mul(gpow[-1], self.gamma))
            embed = np.zeros(small.q, dtype=np.int64)
            for r in range(1, small.q):
                acc, t = 0, r
                for g in gpow:
                    d = t % small.p
                    t //= small.p
                    if d:
                        acc = big.add(acc, big.mul(d, g))
                embed[r] = acc
        self._embed = embed
        project = np.full(big.q, -1, dtype=np.int64)
        project[embed] = np.arange(small.q, dtype=np.int64)
        self._project = project

    def _largest_intermediate(self) -> int | None:
        """Largest proper divisor of big.m that small.m properly divides."""
        best = None
        for d in range(self.small.m + 1, self.big.m):
            if self.big.m % d == 0 and d % self.small.m == 0:
                best = d
        return best

    def _find_gamma(self) -> int:
        big, small = self.big, self.small
        if big is small:
            return int(big.exp[1 % (big.q - 1)]) if big.q > 2 else 1
        candidates = [int(big.exp[(j * self.ratio) % (big.q - 1)]) for j in range(small.q - 1)]
        roots = []
        for c in candidates:
            acc = 0
            for coeff in reversed(small.modulus):
                acc = big.add(big.mul(acc, c), coeff)
            if acc == 0:
                roots.append(c)
        assert roots, "small modulus must split in the big field"
        preferred = int(big.exp[self.ratio % (big.q - 1)])
        return preferred if preferred in roots else min(roots)

    def embed(self, x: int) -> int:
        return int(self._embed[x])

    def project(self, x: int) -> int:
        r = int(self._project[x])
        if r < 0:
            raise NotInSubfield(f"rep {x} is outside the subfield copy")
        return r

    def embed_arr(self, a) -> np.ndarray:
        return self._embed[np.asarray(a, dtype=np.int64)]

    def project_arr(self, a) -> np.ndarray:
        out = self._project[np.asarray(a, dtype=np.int64)]
        if (out < 0).any():
            raise NotInSubfield("some representations are outside the subfield copy")
        return out

    def project_table(self) -> np.ndarray:
        return self._project


_EMBED_CACHE: dict[tuple[int, int, int], SubfieldEmbedding] = {}


def subfield_embedding(big: Field, small: Field) -> SubfieldEmbedding:
    key = (big.p, big.m, small.m)
    if key not in _EMBED_CACHE:
        _EMBED_CACHE[key] = SubfieldEmbedding(big, small)
    return _EMBED_CACHE[key]


def subfield_members(field: Field, q: int) -> np.ndarray:
    """All reps of the copy of GF(q) inside this field (x with x^q = x)."""
    reps = np.arange(field.q, dtype=np.int64)
    return reps[field.pow_arr(reps, q) == reps]
