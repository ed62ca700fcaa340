"""Schur-basis symmetric function engine.

Everything is exact: vectors carry integer or Fraction coefficients,
symmetric group characters come from border-strip recursion, and the
Kronecker coefficient is the class-sum character formula

    g(lam, mu, nu) = sum over cycle types rho of
                     |class(rho)| * chi^lam(rho) chi^mu(rho) chi^nu(rho) / n!

evaluated in integer arithmetic (the class-sum form is mathematically
identical to averaging over all n! permutations but exponentially cheaper).
The h-basis appears only as formal monomial lists inside the Jacobi-Trudi
expansion; the public algebra is Schur-basis only.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import cache
from math import factorial
from typing import NamedTuple, Union

from .partition import Partition, partitions_list
from .tableau import lr_coefficient, schur_expand_product

Coeff = Union[int, Fraction]


class SchurVector:
    """Finite formal linear combination of Schur functions, exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data: dict[Partition, Coeff] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for lam, coeff in items:
            if coeff:
                key = Partition(lam)
                data[key] = data.get(key, 0) + coeff
        self.terms = {k: v for k, v in data.items() if v}

    def items(self):
        return self.terms.items()

    def __getitem__(self, lam) -> Coeff:
        return self.terms.get(Partition(lam), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SchurVector) and self.terms == other.terms

    def __add__(self, other: "SchurVector") -> "SchurVector":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchurVector(out)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) - c
        return SchurVector(out)

    def scale(self, factor: Coeff) -> "SchurVector":
        return SchurVector({lam: factor * c for lam, c in self.terms.items()})

    def homogeneous_degree(self) -> int:
        """Common size of the indexing partitions; error if mixed or empty."""
        sizes = {lam.size for lam in self.terms}
        if len(sizes) != 1:
            raise ValueError(f"vector is not homogeneous: degrees {sorted(sizes)}")
        return sizes.pop()

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].size, kv[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "SchurVector(0)"
        bits = []
        for lam, c in self.sorted_items():
            name = "s[" + ",".join(str(x) for x in lam) + "]"
            bits.append(name if c == 1 else f"{c}*{name}")
        return "SchurVector(" + " + ".join(bits) + ")"


def schur(lam) -> SchurVector:
    """The Schur basis element s_lam."""
    return SchurVector({Partition(lam): 1})


def schur_product(f: SchurVector, g: SchurVector) -> SchurVector:
    """Bilinear extension of s_mu * s_nu = sum_lam c^lam_{mu nu} s_lam."""
    out: dict[Partition, Coeff] = {}
    for mu, a in f.items():
        for nu, b in g.items():
            ab = a * b
            for lam, c in schur_expand_product(mu, nu).items():
                out[lam] = out.get(lam, 0) + ab * c
    return SchurVector(out)


def coproduct(lam) -> list[tuple[Partition, Partition, int]]:
    """All (mu, nu, c^lam_{mu nu}) with positive coefficient, over all bidegrees."""
    lam = Partition(lam)
    out = []
    n = lam.size
    for k in range(n + 1):
        for mu in partitions_list(k):
            for nu in partitions_list(n - k):
                c = lr_coefficient(lam, mu, nu)
                if c:
                    out.append((mu, nu, c))
    return out


def hall_inner(f: SchurVector, g: SchurVector) -> Coeff:
    """Hall inner product; the Schur basis is orthonormal."""
    if len(f.terms) > len(g.terms):
        f, g = g, f
    return sum(c * g.terms.get(lam, 0) for lam, c in f.items())


class SignedHookProduct(NamedTuple):
    """One Leibniz term of the hook determinant expansion of s_lam."""

    sign: int
    hooks: tuple[Partition, ...]


def giambelli_leibniz(lam) -> list[SignedHookProduct]:
    """Expand the hook determinant for s_lam into d! signed hook products.

    With Frobenius coordinates (arms | legs) of length d, the term for a
    permutation p of the legs is sgn(p) * prod_i s_(arms[i]+1, 1^legs[p(i)]).
    """
    lam = Partition(lam)
    if not lam:
        raise ValueError("empty partition has no hook expansion")
    arms, legs = lam.frobenius()
    d = len(arms)
    out: list[SignedHookProduct] = []
    from itertools import permutations

    for perm in permutations(range(d)):
        inv = sum(
            1 for i in range(d) for j in range(i + 1, d) if perm[i] > perm[j]
        )
        sign = -1 if inv % 2 else 1
        hooks = tuple(
            Partition((arms[i] + 1,) + (1,) * legs[perm[i]]) for i in range(d)
        )
        out.append(SignedHookProduct(sign, hooks))
    return out


def giambelli_expand(lam) -> SchurVector:
    """Multiply out the signed hook products; must reproduce s_lam."""
    total = SchurVector()
    for term in giambelli_leibniz(lam):
        vec = schur(term.hooks[0])
        for h in term.hooks[1:]:
            vec = schur_product(vec, schur(h))
        total = total + (vec if term.sign == 1 else vec.scale(-1))
    return total


def jacobi_trudi(lam) -> list[tuple[int, tuple[int, ...]]]:
    """Signed complete-homogeneous monomials from det(h_{lam_i - i + j}).

    Terms containing any negative index vanish and are dropped; h_0 = 1 is
    removed from the monomials.  The empty partition yields [(1, ())].
    """
    lam = Partition(lam)
    size = len(lam)
    out: list[tuple[int, tuple[int, ...]]] = []

    def rec(i: int, used: int, sign: int, mono: tuple[int, ...]):
        if i == size:
            out.append((sign, tuple(sorted((x for x in mono if x), reverse=True))))
            return
        for j in range(size):
            if used >> j & 1:
                continue
            idx = lam[i] - (i + 1) + (j + 1)
            if idx < 0:
                continue
            flips = bin(used >> (j + 1)).count("1")
            rec(i + 1, used | 1 << j, -sign if flips % 2 else sign, mono + (idx,))

    rec(0, 0, 1, ())
    return out


@cache
def h_monomial_to_schur(mono: tuple[int, ...]) -> SchurVector:
    """Expand h_{m1} h_{m2} ... in the Schur basis (h_k = s_(k), iterated Pieri)."""
    vec = schur(())
    for k in mono:
        vec = schur_product(vec, schur((k,)))
    return vec


def jacobi_trudi_to_schur(lam) -> SchurVector:
    """Evaluate the Jacobi-Trudi expansion back into the Schur basis."""
    total = SchurVector()
    for sign, mono in jacobi_trudi(lam):
        vec = h_monomial_to_schur(mono)
        total = total + (vec if sign == 1 else vec.scale(-1))
    return total


# ---------------------------------------------------------------------------
# symmetric group characters


class CycleType(NamedTuple):
    """A cycle type with its centralizer order z = prod i^{m_i} m_i!."""

    partition: Partition
    z: int

    @classmethod
    def of(cls, mu) -> "CycleType":
        mu = Partition(mu)
        return cls(mu, centralizer_order(mu))


def centralizer_order(mu) -> int:
    """z_mu = prod_i i^{m_i} m_i! over the multiplicities of mu."""
    mu = Partition(mu)
    mult: dict[int, int] = {}
    for p in mu:
        mult[p] = mult.get(p, 0) + 1
    z = 1
    for i, m in mult.items():
        z *= i**m * factorial(m)
    return z


_char_cache: dict[tuple[Partition, Partition], int] = {}
_char_cache_limit = 14


def set_character_cache_limit(n: int) -> None:
    """Only cache character values for partitions of size <= n."""
    global _char_cache_limit
    _char_cache_limit = n


def character(lam, mu) -> int:
    """chi^lam evaluated on cycle type mu, by border-strip removal."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"|{lam!r}| != |{mu!r}|")
    return _char(lam, mu)


def _char(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    hit = _char_cache.get(key)
    if hit is not None:
        return hit
    k = mu[0]
    rest = Partition(mu[1:])
    # Beta numbers lam_i + (L - i) encode the shape; removing a border strip
    # of size k replaces one beta b by b - k, with sign from the betas crossed.
    size = len(lam)
    betas = [lam[i] + size - 1 - i for i in range(size)]
    bset = set(betas)
    total = 0
    for b in betas:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        crossed = sum(1 for x in betas if nb < x < b)
        nb_sorted = sorted((x if x != b else nb for x in betas), reverse=True)
        newlam = Partition(
            tuple(nb_sorted[i] - (size - 1 - i) for i in range(size))
        )
        term = _char(newlam, rest)
        total += -term if crossed % 2 else term
    if lam.size <= _char_cache_limit:
        _char_cache[key] = total
    return total


@cache
def kronecker_coefficient(lam, mu, nu) -> int:
    """g(lam, mu, nu) by the class-sum character formula; exact, nonnegative."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = lam.size
    if mu.size != n or nu.size != n:
        raise ValueError("all three partitions must have the same size")
    nfact = factorial(n)
    total = 0
    for rho in partitions_list(n):
        class_size = nfact // centralizer_order(rho)
        total += class_size * _char(lam, rho) * _char(mu, rho) * _char(nu, rho)
    value, remainder = divmod(total, nfact)
    if remainder or value < 0:
        raise ArithmeticError(f"character sum is not a Kronecker coefficient: {total}/{nfact}")
    return value


def kronecker_product(f: SchurVector, g: SchurVector) -> SchurVector:
    """Bilinear extension of s_lam (*) s_mu = sum_nu g(lam, mu, nu) s_nu."""
    if not f.terms or not g.terms:
        return SchurVector()
    n = f.homogeneous_degree()
    if g.homogeneous_degree() != n:
        raise ValueError("internal product requires equal homogeneous degrees")
    out: dict[Partition, Coeff] = {}
    for lam, a in f.items():
        for mu, b in g.items():
            ab = a * b
            for nu in partitions_list(n):
                coeff = kronecker_coefficient(lam, mu, nu)
                if coeff:
                    out[nu] = out.get(nu, 0) + ab * coeff
    return SchurVector(out)


# ---------------------------------------------------------------------------
# character cache persistence (documented JSON schema)


def save_character_cache(path: str) -> int:
    """Write cached character values as {"n": max_size, "entries": [[lam, mu, value], ...]}."""
    entries = sorted(
        [list(lam), list(mu), value] for (lam, mu), value in _char_cache.items()
    )
    n = max((sum(e[0]) for e in entries), default=0)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump({"n": n, "entries": entries}, handle)
    return len(entries)


def load_character_cache(path: str) -> int:
    """Merge a saved character table into the in-process cache."""
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    count = 0
    for lam, mu, value in data["entries"]:
        _char_cache[(Partition(lam), Partition(mu))] = int(value)
        count += 1
    return count
