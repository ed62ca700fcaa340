"""Near-hook Kronecker coefficients via hook-indexed expansions.

A near-hook is (a, b, 1^c) with a >= b >= 2.  Writing n = a + b + c, the
hook determinant identity for s_(a,b,1^c) together with the coproduct
compatibility of the internal product turns g(lam, (a,b,1^c), nu) into a
signed double expansion over hook-indexed Kronecker coefficients and LR
coefficients (near_hook_expansion).  Specializing lam to a two-row (d, e)
collapses the LR factors to interval indicators (triple1 - triple2), and
filtering out the vanishing terms via strip-chain counts and the two-row x
hook closed form gives positively-supported index sets J+ / J- and the
reduced sums triple3 - triple4.

When b = 2 and nu = (a+2, 2^(s-1), 1^(c+2-2s)), the negative side is a
singleton (d inside an explicit interval) or empty (d outside), so the
coefficient becomes a count of hook-rule tableaux - minus one in the
singleton case, realized by removing the lexicographically least witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Optional

from .colored import ColoredTableau, enumerate_blasiak
from .partition import Partition, hook_partition, is_double_hook, partitions_list
from .rosas import rosas_kronecker, xi
from .symfun import kronecker_coefficient
from .tableau import lr_coefficient, strip_chain_count


@dataclass(frozen=True)
class TermCertificate:
    """One signed summand: contribution = sign * lr_value * g_value."""

    sign: int
    index: tuple
    lr_value: int
    g_value: int

    @property
    def contribution(self) -> int:
        return self.sign * self.lr_value * self.g_value

    def to_json(self) -> dict:
        names = ("eta", "delta", "theta") if len(self.index) == 3 and isinstance(
            self.index[1], Partition
        ) else ("first", "j", "r")
        index = {}
        for name, value in zip(names, self.index):
            index[name] = list(value) if isinstance(value, tuple) else value
        return {
            "sign": self.sign,
            "index": index,
            "lr": self.lr_value,
            "g": self.g_value,
        }


def _g_hook(theta, hook: Partition, other, backend: str) -> int:
    """g(theta, hook, other) by the configured backend."""
    if backend == "oracle":
        return kronecker_coefficient(theta, hook, other)
    if backend == "rosas":
        theta = Partition(theta)
        if len(theta) > 2:
            raise ValueError(f"closed form needs a two-row first index, got {theta!r}")
        n = theta.size
        a = hook[0]
        c = len(hook) - 2
        return rosas_kronecker(n, theta.part(2), a, c, other)
    raise ValueError(f"unknown g backend {backend!r}")


def near_hook_expansion(
    lam, nu, a: int, b: int, c: int
) -> tuple[list[TermCertificate], int]:
    """Signed expansion of g(lam, (a,b,1^c), nu) over hook-indexed terms.

    Positive terms run over (eta, delta, theta) with eta, theta of size
    n-b+1 and delta of size b-1; negative terms over eta of size a and
    delta, theta of size n-a.  A certificate is emitted whenever both LR
    factors are positive, its g factor evaluated by the character oracle.
    Returns (certificates, total); the total is the coefficient itself.
    """
    lam, nu = Partition(lam), Partition(nu)
    if not (a >= b >= 2 and c >= 0):
        raise ValueError("near-hook parameters need a >= b >= 2 and c >= 0")
    n = a + b + c
    if lam.size != n or nu.size != n:
        raise ValueError(f"lam and nu must be partitions of {n}")
    first_hook = hook_partition(a, c + 1)
    second_hook = hook_partition(b - 1, c + 1)
    certs: list[TermCertificate] = []
    for delta in partitions_list(b - 1):
        for eta in partitions_list(n - b + 1):
            outer_lr = lr_coefficient(nu, eta, delta)
            if not outer_lr:
                continue
            for theta in partitions_list(n - b + 1):
                inner_lr = lr_coefficient(lam, theta, delta)
                if not inner_lr:
                    continue
                g = kronecker_coefficient(theta, first_hook, eta)
                certs.append(
                    TermCertificate(1, (eta, delta, theta), outer_lr * inner_lr, g)
                )
    for delta in partitions_list(n - a):
        for eta in partitions_list(a):
            outer_lr = lr_coefficient(nu, eta, delta)
            if not outer_lr:
                continue
            for theta in partitions_list(n - a):
                inner_lr = lr_coefficient(lam, eta, theta)
                if not inner_lr:
                    continue
                g = kronecker_coefficient(theta, second_hook, delta)
                certs.append(
                    TermCertificate(-1, (eta, delta, theta), outer_lr * inner_lr, g)
                )
    return certs, sum(t.contribution for t in certs)


def _check_two_row_params(d, e, a, b, c, nu) -> tuple[Partition, int]:
    if not (d >= e >= 0):
        raise ValueError("two-row index needs d >= e >= 0")
    if not (a >= b >= 2 and c >= 1):
        raise ValueError("triple sums need a >= b >= 2 and c >= 1")
    n = a + b + c
    if d + e != n:
        raise ValueError(f"d + e must equal {n}")
    nu = Partition(nu)
    if nu.size != n:
        raise ValueError(f"nu must be a partition of {n}")
    return nu, n


def triple1(d, e, a, b, c, nu, g_backend: str = "rosas") -> int:
    """Positive interval-gated sum over (eta, j, r), of size n - b + 1 terms."""
    nu, n = _check_two_row_params(d, e, a, b, c, nu)
    big_n = n - b + 1
    total = 0
    for eta in partitions_list(big_n):
        for j in range((b - 1) // 2 + 1):
            coeff = lr_coefficient(nu, eta, Partition((b - 1 - j, j)))
            if not coeff:
                continue
            for r in range(big_n // 2 + 1):
                if not max(big_n - r + j, r + b - 1 - j) <= d <= n - r - j:
                    continue
                total += coeff * _g_hook(
                    Partition((big_n - r, r)), hook_partition(a, c + 1), eta, g_backend
                )
    return total


def triple2(d, e, a, b, c, nu, g_backend: str = "rosas") -> int:
    """Negative interval-gated sum over (delta, i, r), of size n - a terms."""
    nu, n = _check_two_row_params(d, e, a, b, c, nu)
    big_m = n - a
    total = 0
    for delta in partitions_list(big_m):
        for i in range(a // 2 + 1):
            coeff = lr_coefficient(nu, Partition((a - i, i)), delta)
            if not coeff:
                continue
            for r in range(big_m // 2 + 1):
                if not max(a - i + r, i + big_m - r) <= d <= n - i - r:
                    continue
                total += coeff * _g_hook(
                    Partition((big_m - r, r)),
                    hook_partition(b - 1, c + 1),
                    delta,
                    g_backend,
                )
    return total


@cache
def index_set_plus(nu, a: int, b: int, c: int) -> frozenset:
    """Tuples (eta, j, r) whose triple1 summand is strictly positive."""
    nu = Partition(nu)
    n = a + b + c
    big_n = n - b + 1
    out = set()
    for eta in partitions_list(big_n):
        if not is_double_hook(eta, big_n):
            continue
        for j in range((b - 1) // 2 + 1):
            if strip_chain_count(nu, eta, j, b - 1 - j) <= strip_chain_count(
                nu, eta, j - 1, b - j
            ):
                continue
            for r in range(big_n // 2 + 1):
                if xi(eta, a, r, c) > 0:
                    out.add((eta, j, r))
    return frozenset(out)


@cache
def index_set_minus(nu, a: int, b: int, c: int) -> frozenset:
    """Tuples (delta, i, r) whose triple2 summand is strictly positive."""
    nu = Partition(nu)
    n = a + b + c
    big_m = n - a
    out = set()
    for delta in partitions_list(big_m):
        if not is_double_hook(delta, big_m):
            continue
        for i in range(a // 2 + 1):
            if strip_chain_count(nu, delta, i, a - i) <= strip_chain_count(
                nu, delta, i - 1, a - i + 1
            ):
                continue
            for r in range(big_m // 2 + 1):
                if xi(delta, b - 1, r, c) > 0:
                    out.add((delta, i, r))
    return frozenset(out)


def j_plus(d: int, nu, a: int, b: int, c: int) -> frozenset:
    """index_set_plus filtered by the two-row interval condition at d."""
    n = a + b + c
    big_n = n - b + 1
    return frozenset(
        (eta, j, r)
        for eta, j, r in index_set_plus(Partition(nu), a, b, c)
        if max(big_n - r + j, r + b - 1 - j) <= d <= big_n + b - 1 - r - j
    )


def j_minus(d: int, nu, a: int, b: int, c: int) -> frozenset:
    """index_set_minus filtered by the two-row interval condition at d."""
    n = a + b + c
    big_m = n - a
    return frozenset(
        (delta, i, r)
        for delta, i, r in index_set_minus(Partition(nu), a, b, c)
        if max(a - i + r, i + big_m - r) <= d <= a + big_m - i - r
    )


def _sorted_tuples(index_set) -> list:
    return sorted(index_set, key=lambda t: (t[2], t[0], t[1]))


def triple3(
    d, e, a, b, c, nu, g_backend: str = "rosas"
) -> tuple[int, list[TermCertificate]]:
    """triple1 restricted to its positive support; certificates all positive."""
    nu, n = _check_two_row_params(d, e, a, b, c, nu)
    big_n = n - b + 1
    certs = []
    for eta, j, r in _sorted_tuples(j_plus(d, nu, a, b, c)):
        coeff = lr_coefficient(nu, eta, Partition((b - 1 - j, j)))
        g = _g_hook(
            Partition((big_n - r, r)), hook_partition(a, c + 1), eta, g_backend
        )
        cert = TermCertificate(1, (eta, j, r), coeff, g)
        if cert.contribution <= 0:
            raise ArithmeticError(f"non-positive reduced term at {(eta, j, r)}")
        certs.append(cert)
    return sum(t.contribution for t in certs), certs


def triple4(
    d, e, a, b, c, nu, g_backend: str = "rosas"
) -> tuple[int, list[TermCertificate]]:
    """triple2 restricted to its positive support; certificates all positive."""
    nu, n = _check_two_row_params(d, e, a, b, c, nu)
    big_m = n - a
    certs = []
    for delta, i, r in _sorted_tuples(j_minus(d, nu, a, b, c)):
        coeff = lr_coefficient(nu, Partition((a - i, i)), delta)
        g = _g_hook(
            Partition((big_m - r, r)), hook_partition(b - 1, c + 1), delta, g_backend
        )
        cert = TermCertificate(1, (delta, i, r), coeff, g)
        if cert.contribution <= 0:
            raise ArithmeticError(f"non-positive reduced term at {(delta, i, r)}")
        certs.append(cert)
    return sum(t.contribution for t in certs), certs


def g_two_row_near_hook(d, e, a, b, c, nu, g_backend: str = "rosas") -> int:
    """g((d,e), (a,b,1^c), nu) as triple3 - triple4."""
    plus, _ = triple3(d, e, a, b, c, nu, g_backend)
    minus, _ = triple4(d, e, a, b, c, nu, g_backend)
    return plus - minus


# ---------------------------------------------------------------------------
# b = 2 witness families


def special_nu(a: int, c: int, s: int) -> Partition:
    """(a+2, 2^(s-1), 1^(c+2-2s)), the target shape of the witness families."""
    return Partition((a + 2,) + (2,) * (s - 1) + (1,) * (c + 2 - 2 * s))


def delta_star(c: int, s: int) -> Partition:
    """(2^s, 1^(c+2-2s)), the unique negative-side shape."""
    return Partition((2,) * s + (1,) * (c + 2 - 2 * s))


def _witness_hypotheses(a: int, c: int, d: int, e: int, s: int) -> bool:
    n = a + 2 + c
    return (
        a >= 2
        and c >= 1
        and d + e == n
        and d >= e >= 0
        and 1 <= s <= (c + 2) // 2
    )


def _in_interval(a: int, c: int, d: int, s: int) -> bool:
    return max(a + s, c + 2 - s) <= d <= a + c + 2 - s


def singleton_case_check(
    a: int, b: int, c: int, d: int, e: int, s: int
) -> Optional[tuple]:
    """The unique negative-side tuple (delta*, 0, s), or None if outside scope.

    Scope: b = 2, the witness hypotheses, and d inside the explicit interval.
    Inside scope the negative index set must be exactly the singleton and its
    term must equal 1; a violation raises.
    """
    if b != 2 or not _witness_hypotheses(a, c, d, e, s) or not _in_interval(a, c, d, s):
        return None
    nu = special_nu(a, c, s)
    expected = (delta_star(c, s), 0, s)
    members = j_minus(d, nu, a, 2, c)
    if members != frozenset({expected}):
        raise ArithmeticError(f"negative index set is not the expected singleton: {sorted(members)}")
    value, certs = triple4(d, e, a, 2, c, nu)
    if value != 1 or len(certs) != 1:
        raise ArithmeticError(f"singleton term is not 1: {value}")
    return expected


def null_case_check(a: int, b: int, c: int, d: int, e: int, s: int) -> bool:
    """True iff d lies outside the interval; then J- is empty and triple4 = 0."""
    if b != 2:
        raise ValueError("vanishing case requires b = 2")
    if not _witness_hypotheses(a, c, d, e, s):
        raise ValueError("witness hypotheses not met")
    if _in_interval(a, c, d, s):
        return False
    nu = special_nu(a, c, s)
    if j_minus(d, nu, a, 2, c):
        raise ArithmeticError("negative index set should be empty")
    value, _ = triple4(d, e, a, 2, c, nu)
    if value != 0:
        raise ArithmeticError("triple4 should vanish")
    return True


@dataclass(frozen=True)
class WitnessMember:
    tableau: ColoredTableau
    source: tuple  # (eta, 0, r)


@dataclass(frozen=True)
class WitnessSet:
    """Disjoint union of hook-rule tableau blocks, canonically ordered.

    Members are (tableau, source) pairs; identical tableaux arising from
    different sources stay distinct.  Ordering is lexicographic by (shape,
    row reading word), ties broken by source r then source shape.  When the
    singleton case applies, the least member is removed and recorded.
    """

    members: tuple[WitnessMember, ...]
    removed_min: Optional[WitnessMember]

    @property
    def surviving(self) -> tuple[WitnessMember, ...]:
        return self.members[1:] if self.removed_min is not None else self.members

    def to_json(self) -> dict:
        def member_json(m: WitnessMember) -> dict:
            eta, j, r = m.source
            return {
                "tableau": m.tableau.to_json(),
                "source": {"eta": list(eta), "j": j, "r": r},
            }

        return {
            "members": [member_json(m) for m in self.members],
            "removed_min": member_json(self.removed_min) if self.removed_min else None,
        }


def _member_key(m: WitnessMember):
    return (
        tuple(m.tableau.shape),
        tuple(x.key for x in m.tableau.reading_word()),
        m.source[2],
        m.source[0],
    )


def _witness_blocks(a: int, c: int, d: int, s: int) -> tuple[WitnessSet, int]:
    n = a + 2 + c
    nu = special_nu(a, c, s)
    members = []
    total = 0
    for eta, j, r in _sorted_tuples(j_plus(d, nu, a, 2, c)):
        if j != 0:
            raise ArithmeticError("positive index set must have j = 0 when b = 2")
        block = enumerate_blasiak(Partition((n - 1 - r, r)), c + 1, eta)
        if not block:
            raise ArithmeticError(f"hook-rule block for {(eta, j, r)} is empty")
        members.extend(WitnessMember(t, (eta, 0, r)) for t in block)
        total += len(block)
    members.sort(key=_member_key)
    return tuple(members), total


def witnesses_singleton_case(
    a: int, c: int, d: int, e: int, s: int
) -> tuple[int, WitnessSet]:
    """g((d,e), (a,2,1^c), special_nu) = |witnesses| - 1, d inside the interval."""
    if singleton_case_check(a, 2, c, d, e, s) is None:
        raise ValueError(
            "singleton hypotheses not met; use witnesses_null_case or g_two_row_near_hook"
        )
    members, total = _witness_blocks(a, c, d, s)
    witness_set = WitnessSet(members, removed_min=members[0])
    value = total - 1
    if value != len(witness_set.surviving):
        raise ArithmeticError("witness count does not match the removal policy")
    return value, witness_set


def witnesses_null_case(
    a: int, c: int, d: int, e: int, s: int
) -> tuple[int, WitnessSet]:
    """g((d,e), (a,2,1^c), special_nu) = |witnesses|, d outside the interval."""
    if not null_case_check(a, 2, c, d, e, s):
        raise ValueError(
            "vanishing-case hypotheses not met; use witnesses_singleton_case"
        )
    members, total = _witness_blocks(a, c, d, s)
    witness_set = WitnessSet(members, removed_min=None)
    if total != len(witness_set.surviving):
        raise ArithmeticError("witness count mismatch")
    return total, witness_set
