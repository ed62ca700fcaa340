"""Exhaustive small-case verification sweeps.

Each suite is a list of independent work units plus a pure runner mapping a
unit to (number of checks, failure messages).  Units can be fanned across
worker processes; reports are assembled in unit order, so output is byte
identical regardless of worker count.
"""

from __future__ import annotations

from math import comb

from . import colored, nearhook, rosas, symfun, tableau
from .partition import (
    Partition,
    contains,
    from_frobenius,
    is_double_hook,
    is_horizontal_strip,
    partition_count,
    partitions_list,
)


def _fail(messages: list[str], text: str) -> None:
    messages.append(text)


def _fmt(p: Partition) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


# ---------------------------------------------------------------------------
# suite: partitions


def units_partitions(limit: int):
    return [("involution", n) for n in range(limit + 1)] + [
        ("count", n) for n in range(max(limit, 30) + 1)
    ]


def run_partitions(unit) -> tuple[int, list[str]]:
    kind, n = unit
    checks, fails = 0, []
    if kind == "involution":
        for lam in partitions_list(n):
            checks += 2
            if lam.transpose().transpose() != lam:
                _fail(fails, f"transpose not involutive at {_fmt(lam)}")
            if lam and from_frobenius(lam.frobenius()) != lam:
                _fail(fails, f"frobenius round trip broke at {_fmt(lam)}")
    else:
        checks += 1
        if len(partitions_list(n)) != partition_count(n):
            _fail(fails, f"enumerated count != p({n})")
    return checks, fails


# ---------------------------------------------------------------------------
# suite: lr (tableau-level identities)


def units_lr(limit: int):
    units = [("symmetry", n) for n in range(limit + 1)]
    units += [("pieri", (n, limit - n)) for n in range(limit + 1)]
    units += [("two-row", t) for t in range(11)]
    units += [("strip-diff", n) for n in range(limit + 1)]
    units += [("product-dim", n) for n in range(min(limit, 8) + 1)]
    return units


def run_lr(unit) -> tuple[int, list[str]]:
    kind, n = unit
    checks, fails = 0, []
    if kind == "symmetry":
        for lam in partitions_list(n):
            for k in range(n + 1):
                for mu in partitions_list(k):
                    for nu in partitions_list(n - k):
                        checks += 1
                        if tableau.lr_coefficient(lam, mu, nu) != tableau.lr_coefficient(
                            lam, nu, mu
                        ):
                            _fail(
                                fails,
                                f"lr symmetry broke at {_fmt(lam)}/{_fmt(mu)},{_fmt(nu)}",
                            )
    elif kind == "pieri":
        # horizontal-strip indicator == Pieri coefficient of h_k s_mu,
        # over all |mu| + k up to the sweep limit
        n, kmax = n
        for mu in partitions_list(n):
            for k in range(kmax + 1):
                for lam in partitions_list(n + k):
                    checks += 1
                    coeff = tableau.lr_coefficient(lam, mu, Partition((k,)))
                    strip = (
                        1
                        if contains(mu, lam) and is_horizontal_strip(mu, lam)
                        else 0
                    )
                    if coeff != strip:
                        _fail(
                            fails,
                            f"pieri mismatch at mu={_fmt(mu)} k={k} lam={_fmt(lam)}",
                        )
    elif kind == "two-row":
        total = n
        for x in range(total + 1):
            for y in range(min(x, total - x) + 1):
                for u in range(total - x - y + 1):
                    v = total - x - y - u
                    if v > u:
                        continue
                    for d in range((total + 1) // 2, total + 1):
                        checks += 1
                        closed = tableau.lr_two_row(x, y, u, v, d, total - d)
                        direct = tableau.lr_coefficient(
                            Partition((d, total - d)),
                            Partition((x, y)),
                            Partition((u, v)),
                        )
                        if closed != direct:
                            _fail(
                                fails,
                                f"two-row closed form broke at {(x, y, u, v, d, total - d)}",
                            )
    elif kind == "strip-diff":
        for nu in partitions_list(n):
            for b in range(1, n + 2):
                if n - b + 1 < 0:
                    continue
                for eta in partitions_list(n - b + 1):
                    for j in range((b - 1) // 2 + 1):
                        checks += 1
                        via = tableau.lr_via_strip_difference(nu, eta, b, j)
                        direct = tableau.lr_coefficient(
                            nu, eta, Partition((b - 1 - j, j))
                        )
                        if via != direct:
                            _fail(
                                fails,
                                f"strip-difference broke at nu={_fmt(nu)} eta={_fmt(eta)} b={b} j={j}",
                            )
    else:  # product-dim
        for k in range(n + 1):
            for mu in partitions_list(k):
                for nu in partitions_list(n - k):
                    checks += 1
                    total = sum(
                        c * tableau.dimension(lam)
                        for lam, c in tableau.schur_expand_product(mu, nu).items()
                    )
                    expected = (
                        comb(n, k) * tableau.dimension(mu) * tableau.dimension(nu)
                    )
                    if total != expected:
                        _fail(
                            fails,
                            f"product dimension broke at {_fmt(mu)} x {_fmt(nu)}",
                        )
    return checks, fails


# ---------------------------------------------------------------------------
# suite: giambelli


def units_giambelli(limit: int):
    return [n for n in range(1, limit + 1)]


def run_giambelli(n) -> tuple[int, list[str]]:
    checks, fails = 0, []
    for lam in partitions_list(n):
        checks += 1
        if symfun.giambelli_expand(lam) != symfun.schur(lam):
            _fail(fails, f"hook determinant expansion broke at {_fmt(lam)}")
    return checks, fails


# ---------------------------------------------------------------------------
# suite: jacobi-trudi


def units_jacobi_trudi(limit: int):
    return [n for n in range(limit + 1)]


def run_jacobi_trudi(n) -> tuple[int, list[str]]:
    checks, fails = 0, []
    for lam in partitions_list(n):
        checks += 1
        if symfun.jacobi_trudi_to_schur(lam) != symfun.schur(lam):
            _fail(fails, f"jacobi-trudi expansion broke at {_fmt(lam)}")
    return checks, fails


# ---------------------------------------------------------------------------
# suite: littlewood


def units_littlewood(limit: int):
    units = []
    for total in range(limit + 1):
        for k in range(total + 1):
            for lam in partitions_list(k):
                for mu in partitions_list(total - k):
                    units.append((lam, mu))
    return units


def run_littlewood(unit) -> tuple[int, list[str]]:
    lam, mu = unit
    checks, fails = 0, []
    n = lam.size + mu.size
    product = symfun.schur_product(symfun.schur(lam), symfun.schur(mu))
    for nu in partitions_list(n):
        checks += 1
        lhs = symfun.kronecker_product(product, symfun.schur(nu)) if product else symfun.SchurVector()
        rhs = symfun.SchurVector()
        for tau in partitions_list(lam.size):
            for eta in partitions_list(mu.size):
                coeff = tableau.lr_coefficient(nu, tau, eta)
                if not coeff:
                    continue
                left = symfun.kronecker_product(symfun.schur(tau), symfun.schur(lam))
                right = symfun.kronecker_product(symfun.schur(eta), symfun.schur(mu))
                rhs = rhs + symfun.schur_product(left, right).scale(coeff)
        if lhs != rhs:
            _fail(
                fails,
                f"coproduct compatibility broke at lam={_fmt(lam)} mu={_fmt(mu)} nu={_fmt(nu)}",
            )
    return checks, fails


# ---------------------------------------------------------------------------
# suite: kron-basics (S3 symmetry, conjugation, trivial/sign rows)


def units_kron_basics(limit: int):
    units = [("s3", n) for n in range(min(limit, 8) + 1)]
    units += [("conjugation", n) for n in range(min(limit, 8) + 1)]
    units += [("trivial-sign", n) for n in range(limit + 1)]
    units += [("hall", n) for n in range(min(limit, 5) + 1)]
    return units


def run_kron_basics(unit) -> tuple[int, list[str]]:
    kind, n = unit
    checks, fails = 0, []
    parts = partitions_list(n)
    if kind == "s3":
        from itertools import permutations

        for lam in parts:
            for mu in parts:
                for nu in parts:
                    base = symfun.kronecker_coefficient(lam, mu, nu)
                    for order in permutations((lam, mu, nu)):
                        checks += 1
                        if symfun.kronecker_coefficient(*order) != base:
                            _fail(
                                fails,
                                f"index permutation changed g at {_fmt(lam)},{_fmt(mu)},{_fmt(nu)}",
                            )
    elif kind == "conjugation":
        for lam in parts:
            for mu in parts:
                for nu in parts:
                    checks += 1
                    if symfun.kronecker_coefficient(
                        lam, mu, nu
                    ) != symfun.kronecker_coefficient(
                        lam, mu.transpose(), nu.transpose()
                    ):
                        _fail(
                            fails,
                            f"conjugation invariance broke at {_fmt(lam)},{_fmt(mu)},{_fmt(nu)}",
                        )
    elif kind == "trivial-sign":
        row = Partition((n,)) if n else Partition()
        column = Partition((1,) * n)
        for lam in parts:
            for mu in parts:
                checks += 2
                expected = 1 if lam == mu else 0
                if symfun.kronecker_coefficient(row, lam, mu) != expected:
                    _fail(fails, f"trivial row rule broke at {_fmt(lam)},{_fmt(mu)}")
                expected = 1 if lam == mu.transpose() else 0
                if symfun.kronecker_coefficient(column, lam, mu) != expected:
                    _fail(fails, f"sign column rule broke at {_fmt(lam)},{_fmt(mu)}")
    else:  # hall: <f*g, h> == <f, g*h> on basis elements
        for lam in parts:
            for mu in parts:
                for nu in parts:
                    checks += 1
                    left = symfun.hall_inner(
                        symfun.kronecker_product(symfun.schur(lam), symfun.schur(mu)),
                        symfun.schur(nu),
                    )
                    right = symfun.hall_inner(
                        symfun.schur(lam),
                        symfun.kronecker_product(symfun.schur(mu), symfun.schur(nu)),
                    )
                    if left != right:
                        _fail(
                            fails,
                            f"inner product adjunction broke at {_fmt(lam)},{_fmt(mu)},{_fmt(nu)}",
                        )
    return checks, fails


# ---------------------------------------------------------------------------
# suite: rosas-vs-oracle


def units_rosas(limit: int):
    return [(n, r) for n in range(1, limit + 1) for r in range(n // 2 + 1)]


def run_rosas(unit) -> tuple[int, list[str]]:
    n, r = unit
    checks, fails = 0, []
    two_row = Partition((n - r, r))
    seen_cases: dict[tuple, str] = {}
    for a in range(1, n):
        c = n - a - 1
        hook = Partition((a,) + (1,) * (c + 1))
        for nu in partitions_list(n):
            checks += 1
            closed = rosas.rosas_kronecker(n, r, a, c, nu)
            oracle = symfun.kronecker_coefficient(two_row, hook, nu)
            if closed != oracle:
                _fail(
                    fails,
                    f"closed form != oracle at n={n} r={r} a={a} nu={_fmt(nu)}: {closed} vs {oracle}",
                )
            # positivity localization: positive iff double hook with positive branch
            positive = oracle > 0
            branch = rosas.xi_report(nu, a, r, c)
            claim = is_double_hook(nu, n) and branch.value > 0
            checks += 1
            if positive != claim:
                _fail(
                    fails,
                    f"positivity characterization broke at n={n} r={r} a={a} nu={_fmt(nu)}",
                )
            key = (tuple(nu), r == 0)
            prior = seen_cases.get(key)
            if prior is not None and prior != branch.case:
                _fail(
                    fails,
                    f"branch depends on a at nu={_fmt(nu)} r={r}: {prior} vs {branch.case}",
                )
            seen_cases[key] = branch.case
    return checks, fails


# ---------------------------------------------------------------------------
# suite: blasiak-vs-oracle


def units_blasiak(limit: int):
    return [
        (lam, d)
        for n in range(1, limit + 1)
        for lam in partitions_list(n)
        for d in range(n)
    ]


def run_blasiak(unit) -> tuple[int, list[str]]:
    lam, d = unit
    checks, fails = 0, []
    n = lam.size
    hook = Partition((n - d,) + (1,) * d)
    by_shape = colored.blasiak_by_shape(lam, d)
    for nu in partitions_list(n):
        checks += 1
        count = len(by_shape.get(nu, ()))
        oracle = symfun.kronecker_coefficient(lam, hook, nu)
        if count != oracle:
            _fail(
                fails,
                f"tableau count != oracle at lam={_fmt(lam)} d={d} nu={_fmt(nu)}: {count} vs {oracle}",
            )
    return checks, fails


# ---------------------------------------------------------------------------
# suite: fundamental-vs-oracle (the signed hook-indexed expansion)


def units_fundamental(limit: int):
    units = []
    for n in range(4, limit + 1):
        for b in range(2, n // 2 + 1):
            for a in range(b, n - b + 1):
                units.append((n, a, b))
    return units


def run_fundamental(unit) -> tuple[int, list[str]]:
    n, a, b = unit
    c = n - a - b
    checks, fails = 0, []
    for lam in partitions_list(n):
        for nu in partitions_list(n):
            checks += 1
            _, value = nearhook.near_hook_expansion(lam, nu, a, b, c)
            oracle = symfun.kronecker_coefficient(
                lam, Partition((a, b) + (1,) * c), nu
            )
            if value != oracle:
                _fail(
                    fails,
                    f"expansion != oracle at lam={_fmt(lam)} (a,b,c)=({a},{b},{c}) nu={_fmt(nu)}: {value} vs {oracle}",
                )
    return checks, fails


# ---------------------------------------------------------------------------
# suite: triples-vs-oracle


def units_triples(limit: int):
    units = []
    for n in range(5, limit + 1):
        for b in range(2, n - 2):
            for a in range(b, n - b):
                c = n - a - b
                if c < 1:
                    continue
                units.append(("value", n, a, b))
    for n in range(3, min(limit, 8) + 1):
        units.append(("membership", n, 0, 0))
    return units


def run_triples(unit) -> tuple[int, list[str]]:
    kind, n, a, b = unit
    checks, fails = 0, []
    if kind == "value":
        c = n - a - b
        near_hook = Partition((a, b) + (1,) * c)
        for nu in partitions_list(n):
            for d in range((n + 1) // 2, n + 1):
                e = n - d
                oracle = symfun.kronecker_coefficient(Partition((d, e)), near_hook, nu)
                t1 = nearhook.triple1(d, e, a, b, c, nu)
                t2 = nearhook.triple2(d, e, a, b, c, nu)
                checks += 1
                if t1 - t2 != oracle:
                    _fail(
                        fails,
                        f"triple1-triple2 != oracle at (d,e)=({d},{e}) (a,b,c)=({a},{b},{c}) nu={_fmt(nu)}",
                    )
                t3, certs3 = nearhook.triple3(d, e, a, b, c, nu)
                t4, certs4 = nearhook.triple4(d, e, a, b, c, nu)
                checks += 1
                if t3 - t4 != oracle:
                    _fail(
                        fails,
                        f"triple3-triple4 != oracle at (d,e)=({d},{e}) (a,b,c)=({a},{b},{c}) nu={_fmt(nu)}",
                    )
                checks += 1
                if t3 != t1 or t4 != t2:
                    _fail(
                        fails,
                        f"positive support lost terms at (d,e)=({d},{e}) (a,b,c)=({a},{b},{c}) nu={_fmt(nu)}",
                    )
                checks += 1
                if any(cert.contribution <= 0 for cert in certs3 + certs4):
                    _fail(fails, f"non-positive reduced certificate at nu={_fmt(nu)}")
    else:
        # membership <=> strict positivity of the product, via the oracle route
        for aa in range(1, n):
            for bb in range(1, n - aa + 1):
                cc = n - aa - bb
                if cc < 0:
                    continue
                big_n = n - bb + 1
                for nu in partitions_list(n):
                    plus = nearhook.index_set_plus(nu, aa, bb, cc)
                    for eta in partitions_list(big_n):
                        for j in range((bb - 1) // 2 + 1):
                            coeff = tableau.lr_coefficient(
                                nu, eta, Partition((bb - 1 - j, j))
                            )
                            for r in range(big_n // 2 + 1):
                                checks += 1
                                g = symfun.kronecker_coefficient(
                                    Partition((big_n - r, r)),
                                    Partition((aa,) + (1,) * (cc + 1)),
                                    eta,
                                )
                                member = (eta, j, r) in plus
                                if member != (coeff * g > 0):
                                    _fail(
                                        fails,
                                        f"positive-support membership broke at nu={_fmt(nu)} eta={_fmt(eta)} j={j} r={r}",
                                    )
                    if bb < 2:
                        continue  # the negative-side hook (b-1, 1^(c+1)) needs b >= 2
                    big_m = n - aa
                    minus = nearhook.index_set_minus(nu, aa, bb, cc)
                    for delta in partitions_list(big_m):
                        for i in range(aa // 2 + 1):
                            coeff = tableau.lr_coefficient(
                                nu, Partition((aa - i, i)), delta
                            )
                            for r in range(big_m // 2 + 1):
                                checks += 1
                                g = symfun.kronecker_coefficient(
                                    Partition((big_m - r, r)),
                                    Partition((bb - 1,) + (1,) * (cc + 1)),
                                    delta,
                                )
                                member = (delta, i, r) in minus
                                if member != (coeff * g > 0):
                                    _fail(
                                        fails,
                                        f"negative-support membership broke at nu={_fmt(nu)} delta={_fmt(delta)} i={i} r={r}",
                                    )
    return checks, fails


# ---------------------------------------------------------------------------
# suite: mainresults (witness families, b = 2)


def units_mainresults(limit: int):
    units = []
    for n in range(4, limit + 1):
        for a in range(2, n - 2):
            c = n - 2 - a
            if c < 1:
                continue
            for s in range(1, (c + 2) // 2 + 1):
                units.append((n, a, s))
    return units


def run_mainresults(unit) -> tuple[int, list[str]]:
    n, a, s = unit
    c = n - 2 - a
    checks, fails = 0, []
    nu = nearhook.special_nu(a, c, s)
    near_hook = Partition((a, 2) + (1,) * c)
    for d in range((n + 1) // 2, n + 1):
        e = n - d
        oracle = symfun.kronecker_coefficient(Partition((d, e)), near_hook, nu)
        inside = nearhook.singleton_case_check(a, 2, c, d, e, s) is not None
        if inside:
            value, witness_set = nearhook.witnesses_singleton_case(a, c, d, e, s)
        else:
            checks += 1
            if not nearhook.null_case_check(a, 2, c, d, e, s):
                _fail(fails, f"interval logic inconsistent at (n,a,s,d)=({n},{a},{s},{d})")
                continue
            value, witness_set = nearhook.witnesses_null_case(a, c, d, e, s)
        checks += 2
        if value != oracle:
            _fail(
                fails,
                f"witness value != oracle at (n,a,s,d)=({n},{a},{s},{d}): {value} vs {oracle}",
            )
        if value != len(witness_set.surviving):
            _fail(fails, f"removal policy broke at (n,a,s,d)=({n},{a},{s},{d})")
        # single-box LR guarantee for the positive index set
        for eta, j, r in nearhook.j_plus(d, nu, a, 2, c):
            checks += 1
            if tableau.lr_coefficient(nu, eta, Partition((1,))) != 1:
                _fail(
                    fails,
                    f"single-box LR coefficient != 1 at eta={_fmt(eta)} (n,a,s,d)=({n},{a},{s},{d})",
                )
    return checks, fails


# ---------------------------------------------------------------------------
# registry


SUITES = {
    "partitions": (12, units_partitions, run_partitions),
    "lr": (8, units_lr, run_lr),
    "giambelli": (9, units_giambelli, run_giambelli),
    "jacobi-trudi": (8, units_jacobi_trudi, run_jacobi_trudi),
    "littlewood": (7, units_littlewood, run_littlewood),
    "kron-basics": (10, units_kron_basics, run_kron_basics),
    "rosas-vs-oracle": (10, units_rosas, run_rosas),
    "blasiak-vs-oracle": (8, units_blasiak, run_blasiak),
    "fundamental-vs-oracle": (8, units_fundamental, run_fundamental),
    "triples-vs-oracle": (9, units_triples, run_triples),
    "mainresults": (10, units_mainresults, run_mainresults),
}


def _run_unit(task):
    suite, unit = task
    _, _, runner = SUITES[suite]
    return runner(unit)


def run_suite(name: str, limit: int | None = None, jobs: int = 1):
    """Run one suite; returns (checks, failures) with deterministic ordering."""
    default_limit, unit_maker, _ = SUITES[name]
    units = unit_maker(default_limit if limit is None else limit)
    tasks = [(name, unit) for unit in units]
    if jobs > 1 and len(tasks) > 1:
        from multiprocessing import get_context

        with get_context("fork").Pool(jobs) as pool:
            results = pool.map(_run_unit, tasks, chunksize=1)
    else:
        results = [_run_unit(task) for task in tasks]
    checks = sum(r[0] for r in results)
    failures = [msg for r in results for msg in r[1]]
    return checks, failures


def report(name: str, limit: int | None, checks: int, failures: list[str]) -> str:
    lines = [
        f"suite: {name}",
        f"limit: {'default' if limit is None else limit}",
        f"checks: {checks}",
        f"failures: {len(failures)}",
    ]
    lines.extend(failures[:50])
    lines.append("PASS" if not failures else "FAIL")
    return "\n".join(lines)
