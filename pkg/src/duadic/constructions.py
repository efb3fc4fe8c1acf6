"""Family-level constructors for self-dual codes from duadic defining sets.

Each ``build_*`` function checks the hypotheses of one construction family,
builds the code(s), and then re-verifies every claimed property through
independent oracles:

* defining-set route: the dual defining set computed by the annihilator
  formula must equal the predicted set exactly;
* matrix route: the Gram matrix ``G . conj(G)^T`` must vanish, and for small
  lengths the kernel-computed dual must span the same row space;
* distance: exhaustive enumeration within budget, else the consecutive-root
  certificate, else honest bounds (refined by the pre-extension distance).

The two dual routes are never collapsed into one; a family claim passes only
when all routes agree.  Failed hypotheses raise ``HypothesisViolatedError``
unless ``force=True``, which builds anyway (when structurally possible) so a
verifier can probe what actually holds.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field as dataclass_field

from .codes import (
    DEFAULT_BUDGET,
    DistanceResult,
    LinearCode,
    code_from_defining_set,
    dual_code,
    extend_double,
    extend_single,
    gram_nonzero_witness,
    matrix_rank,
    min_distance,
    row_space_equal,
)
from .cosets import (
    DefiningSet,
    apply_multiplier,
    build_cosets,
    euclidean_dual_set,
    find_splitting,
    hermitian_dual_set,
)
from .errors import (
    DegenerateParameterError,
    FieldTooLargeError,
    HypothesisViolatedError,
    NoGammaSolutionError,
    NoSplittingError,
    NotCoprimeError,
    NotPrimeError,
    NoSquareRootError,
    OrderNotDividingError,
)
from .fields import (
    ORDER_CAP,
    FieldElement,
    FieldSpec,
    field_from_order,
    is_prime,
    is_quadratic_residue,
    make_field,
    multiplicative_order,
    prime_power,
    solve_norm,
    solve_square,
)

__all__ = [
    "EQUATIONS",
    "FAMILIES",
    "STATUS_PASS",
    "STATUS_HYPOTHESIS_FAIL",
    "STATUS_PROPERTY_FAIL",
    "STATUS_UNVERIFIED_DISTANCE",
    "STATUS_FIELD_TOO_LARGE",
    "CheckItem",
    "GammaSolution",
    "OrderFacts",
    "ConstructionRecipe",
    "VerificationReport",
    "solve_gamma",
    "predict_gamma_existence",
    "order_facts",
    "mds_generator_code",
    "build_cyclic_euclidean",
    "build_cyclic_hermitian",
    "build_nega_centered",
    "build_nega_allodd",
    "build_nega_extended",
]

EQUATIONS = ("eq1", "eq3", "eq4")
FAMILIES = (
    "cyclic_euclidean",
    "cyclic_hermitian",
    "nega_centered",
    "nega_allodd_euclidean",
    "nega_allodd_hermitian",
    "nega_extended_2pt",
)

STATUS_PASS = "PASS"
STATUS_HYPOTHESIS_FAIL = "HYPOTHESIS_FAIL"
STATUS_PROPERTY_FAIL = "PROPERTY_FAIL"
STATUS_UNVERIFIED_DISTANCE = "UNVERIFIED_DISTANCE"
STATUS_FIELD_TOO_LARGE = "FIELD_TOO_LARGE"

# kernel-route dual verification is pure Python and cubic; cap its length
ROUTE_CAP = 36


def _scalar(field: FieldSpec, value: int) -> FieldElement:
    """The integer ``value`` as a prime-subfield constant of ``field``."""
    return field.from_index(value % field.p)


# ---------------------------------------------------------------------------
# check bookkeeping
# ---------------------------------------------------------------------------


@dataclass
class CheckItem:
    """One named check with its outcome and a human-readable witness."""

    name: str
    outcome: str  # "pass" | "fail" | "skip" | "info"
    witness: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "outcome": self.outcome, "witness": self.witness}


def _record(checks: list[CheckItem], name: str, ok, witness: str = "") -> bool:
    checks.append(CheckItem(name, "pass" if ok else "fail", witness))
    return bool(ok)


def _skip(checks: list[CheckItem], name: str, witness: str) -> None:
    checks.append(CheckItem(name, "skip", witness))


def _info(checks: list[CheckItem], name: str, witness: str) -> None:
    checks.append(CheckItem(name, "info", witness))


# ---------------------------------------------------------------------------
# gamma equations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GammaSolution:
    """A verified solution of one extension equation.

    eq1: 1 + gamma^2 n = 0;  eq3: 1 + gamma^(sqrt(q)+1) n = 0 in a
    square-order field;  eq4: 2 + gamma^2 n = 0.  The residual is recomputed
    on construction so a GammaSolution can never carry a wrong value.
    """

    equation: str
    field: FieldSpec
    n: int
    gamma: FieldElement

    def __post_init__(self):
        if self.equation not in EQUATIONS:
            raise ValueError(f"unknown equation {self.equation!r}")
        if not self.residual().is_zero:
            raise ValueError(
                f"gamma #{self.gamma.index} does not solve {self.equation} "
                f"for n = {self.n} over {self.field}"
            )

    def residual(self) -> FieldElement:
        f = self.field
        n_elt = _scalar(f, self.n)
        if self.equation == "eq1":
            return f.one + self.gamma * self.gamma * n_elt
        if self.equation == "eq3":
            qbar = f.p ** (f.m // 2)
            return f.one + self.gamma ** (qbar + 1) * n_elt
        return _scalar(f, 2) + self.gamma * self.gamma * n_elt

    def to_dict(self) -> dict:
        return {
            "equation": self.equation,
            "field": self.field.to_dict(),
            "n": self.n,
            "gamma_index": self.gamma.index,
            "gamma_coeffs": list(self.gamma.coeffs),
        }


def solve_gamma(equation: str, field: FieldSpec, n: int) -> GammaSolution:
    """Canonical (smallest-index) solution of an extension equation.

    eq1 and eq4 reduce to a square root; eq3 is a norm equation over the
    square-order ``field`` whose full solution coset is scanned for the
    smallest element.  Raises DegenerateParameterError when the equation
    collapses (n = 0, or coefficient 2 = 0 in characteristic 2 for eq4) and
    NoGammaSolutionError when no solution exists.
    """
    if equation not in EQUATIONS:
        raise ValueError(f"unknown equation {equation!r}")
    n_elt = _scalar(field, n)
    if n_elt.is_zero:
        raise DegenerateParameterError(
            f"n = {n} vanishes in characteristic {field.p}; the equation degenerates"
        )
    if equation in ("eq1", "eq4"):
        if equation == "eq1":
            target = -n_elt.inverse()
        else:
            two = _scalar(field, 2)
            if two.is_zero:
                raise DegenerateParameterError(
                    "constant 2 vanishes in characteristic 2; eq4 degenerates"
                )
            target = -(two * n_elt.inverse())
        try:
            gamma = solve_square(target)
        except NoSquareRootError as exc:
            raise NoGammaSolutionError(
                f"{equation}: gamma^2 = element #{target.index} of {field} "
                f"has no square root"
            ) from exc
        return GammaSolution(equation, field, n, gamma)
    # eq3: gamma^(qbar+1) = -1/n over GF(qbar^2)
    if field.m % 2:
        raise DegenerateParameterError(
            f"eq3 needs a square-order field; {field} has odd degree"
        )
    qbar = field.p ** (field.m // 2)
    target = -n_elt.inverse()
    gamma0 = solve_norm(field, target)  # norm is onto, so this cannot fail
    kernel_gen = field.generator ** (qbar - 1)
    best = gamma0
    cur = gamma0
    for _ in range(qbar):
        cur = cur * kernel_gen
        if cur.index < best.index:
            best = cur
    return GammaSolution(equation, field, n, best)


def predict_gamma_existence(r: int, t: int, p: int, m: int = 1) -> str:
    """Sufficient-condition test for solvability of eq1 over GF(r**t).

    Returns "exists" when one of the two known sufficient cases holds for
    n = p**m dividing r**t - 1 (r, t odd):

    1. r = 3 mod 4, p = 3 mod 4, and m odd;
    2. r = 1 mod 4 and p odd (m arbitrary; for even m the square root of -1
       available mod r repairs the sign).

    Returns "unknown" otherwise -- the condition is sufficient, not
    necessary.  Raises HypothesisViolatedError when p**m does not divide
    r**t - 1.
    """
    if not is_prime(r):
        raise NotPrimeError(f"{r} is not prime")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if t < 1 or m < 1:
        raise DegenerateParameterError("exponents must be positive")
    n = p**m
    if (r**t - 1) % n != 0:
        raise HypothesisViolatedError(f"{n} does not divide {r}^{t} - 1")
    if r % 2 == 1 and t % 2 == 1 and p % 2 == 1:
        if r % 4 == 3 and p % 4 == 3 and m % 2 == 1:
            return "exists"
        if r % 4 == 1:
            return "exists"
    return "unknown"


# ---------------------------------------------------------------------------
# multiplicative-order bookkeeping for the length-2p^t family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrderFacts:
    """Multiplicative orders of q modulo p, p**t and 2p**t, plus the
    valuation z = v_p(q^ord_p - 1) and consistency flags.

    ``remark_formula_holds`` cross-checks ord_{p^t} = p^(t-1) ord_p when
    z = 1 (None when z != 1).  ``parity_prediction_consistent`` cross-checks
    the quadratic-residue parity facts: p = 1 mod 4 and (q|p) = -1 forces
    ord_p = 0 mod 4; (q|p) = +1 and p = 3 mod 4 forces ord_p odd (None when
    neither premise applies).
    """

    q: int
    p: int
    t: int
    ord_p: int
    ord_pt: int
    ord_2pt: int
    z: int
    parity_class: str  # "odd" | "0 mod 4" | "2 mod 4"
    quadratic_residue: bool
    remark_formula_holds: bool | None
    parity_prediction_consistent: bool | None

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "t": self.t,
            "ord_p": self.ord_p,
            "ord_pt": self.ord_pt,
            "ord_2pt": self.ord_2pt,
            "z": self.z,
            "parity_class": self.parity_class,
            "quadratic_residue": self.quadratic_residue,
            "remark_formula_holds": self.remark_formula_holds,
            "parity_prediction_consistent": self.parity_prediction_consistent,
        }


def order_facts(q: int, p: int, t: int = 1) -> OrderFacts:
    """Compute the order facts used by the length-2p^t construction."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if t < 1:
        raise DegenerateParameterError("t must be positive")
    if q < 2 or math.gcd(q, p) != 1:
        raise NotCoprimeError(f"q = {q} is not a unit modulo {p}")
    if q % 2 == 0:
        raise NotCoprimeError(f"q = {q} is even, so it has no order modulo 2*{p}^{t}")
    ord_p = multiplicative_order(q, p)
    ord_pt = multiplicative_order(q, p**t)
    ord_2pt = multiplicative_order(q, 2 * p**t)
    z = 1
    while pow(q, ord_p, p ** (z + 1)) == 1:
        z += 1
    if ord_2pt % 2 == 1:
        parity = "odd"
    elif ord_2pt % 4 == 0:
        parity = "0 mod 4"
    else:
        parity = "2 mod 4"
    qr = is_quadratic_residue(q % p, p)
    remark = None
    if z == 1:
        remark = ord_pt == p ** (t - 1) * ord_p
    prediction = None
    if p % 4 == 1 and not qr:
        prediction = ord_p % 4 == 0
    elif p % 4 == 3 and qr:
        prediction = ord_p % 2 == 1
    return OrderFacts(
        q, p, t, ord_p, ord_pt, ord_2pt, z, parity, qr, remark, prediction
    )


# ---------------------------------------------------------------------------
# recipes and reports
# ---------------------------------------------------------------------------


@dataclass
class ConstructionRecipe:
    """Family name, full parameter record, and per-hypothesis outcomes."""

    family: str
    params: dict
    hypothesis_checks: list[CheckItem] = dataclass_field(default_factory=list)

    @property
    def hypotheses_ok(self) -> bool:
        return all(c.outcome != "fail" for c in self.hypothesis_checks)

    def failure_message(self) -> str:
        failed = [
            f"{c.name} ({c.witness})" if c.witness else c.name
            for c in self.hypothesis_checks
            if c.outcome == "fail"
        ]
        return f"{self.family}: hypothesis failed: " + "; ".join(failed)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "hypothesis_checks": [c.to_dict() for c in self.hypothesis_checks],
        }


@dataclass
class VerificationReport:
    """Everything needed to replay one construction-and-verification run."""

    entry: dict
    recipe: ConstructionRecipe | None
    status: str
    checks: list[CheckItem] = dataclass_field(default_factory=list)
    timings: dict = dataclass_field(default_factory=dict)
    codes: tuple = ()
    distances: tuple = ()
    gamma: GammaSolution | None = None

    def to_dict(self, include_timings: bool = True, codes: str = "summary") -> dict:
        """JSON form; ``codes`` is "full" (with matrices), "summary", or "none"."""
        out = {
            "entry": dict(self.entry),
            "recipe": self.recipe.to_dict() if self.recipe else None,
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
            "gamma": self.gamma.to_dict() if self.gamma else None,
            "distances": [d.to_dict() for d in self.distances],
        }
        if include_timings:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        if codes == "full":
            out["codes"] = [c.to_dict() for c in self.codes]
        elif codes == "summary":
            out["codes"] = [_code_summary(c) for c in self.codes]
        return out

    def summary_line(self) -> str:
        params = " ".join(
            f"{k}={v}" for k, v in self.entry.items() if isinstance(v, (int, str))
        )
        return f"[{self.status}] {params}"


def _code_summary(code: LinearCode) -> dict:
    return {
        "field": code.field.to_dict(),
        "n": code.n,
        "k": code.k,
        "shift": code.shift,
        "defining_set": code.defining_set.to_dict() if code.defining_set else None,
        "gen_poly": list(code.gen_poly.indices()) if code.gen_poly else None,
    }


def _status_from(
    recipe: ConstructionRecipe, checks: list[CheckItem], distance_open: bool
) -> str:
    if not recipe.hypotheses_ok:
        return STATUS_HYPOTHESIS_FAIL
    if any(c.outcome == "fail" for c in checks):
        return STATUS_PROPERTY_FAIL
    if distance_open:
        return STATUS_UNVERIFIED_DISTANCE
    return STATUS_PASS


# ---------------------------------------------------------------------------
# shared oracle phases
# ---------------------------------------------------------------------------


def _self_dual_oracles(
    checks: list[CheckItem], code: LinearCode, kind: str, label: str
) -> None:
    """Dimension + Gram-matrix + (small lengths) kernel-route self-duality."""
    _record(
        checks,
        f"{label}_dimension",
        2 * code.k == code.n,
        f"2k = {2 * code.k}, n = {code.n}",
    )
    wit = gram_nonzero_witness(code, kind)
    _record(
        checks,
        f"{label}_gram_{kind}",
        wit is None,
        ""
        if wit is None
        else f"inner product of rows {wit[0]} and {wit[1]} is element #{wit[2]} != 0",
    )
    if code.n <= ROUTE_CAP:
        _record(
            checks,
            f"{label}_rank",
            matrix_rank(code.genmat, code.field) == code.k,
            f"rank {code.k}",
        )
        if 2 * code.k == code.n:
            dual = dual_code(code, kind)
            same = row_space_equal(dual.genmat, code.genmat, code.field)
            _record(
                checks,
                f"{label}_kernel_route",
                same,
                "kernel-computed dual spans the same row space"
                if same
                else "kernel-computed dual is a different subspace",
            )
    else:
        _info(
            checks,
            f"{label}_rank",
            "rank k structurally: row i of the generator matrix starts with "
            "exactly i zeros (the generator polynomial has nonzero constant "
            "term), and appended tail columns cannot break that ladder",
        )
        _skip(
            checks,
            f"{label}_kernel_route",
            f"n = {code.n} > {ROUTE_CAP}; Gram-matrix oracle covers self-duality",
        )


def _dual_set_route(
    checks: list[CheckItem],
    ds: DefiningSet,
    kind: str,
    expected: frozenset[int],
    label: str,
) -> None:
    """Compare the annihilator-formula dual defining set against a prediction."""
    dual = euclidean_dual_set(ds) if kind == "euclidean" else hermitian_dual_set(ds)
    ok = dual.members == expected
    if ok:
        witness = f"dual defining set = {sorted(expected)} as predicted"
    else:
        N = ds.system.N
        qbar = 1 if kind == "euclidean" else math.isqrt(ds.system.qhat)
        offender = next(
            (i for i in sorted(ds.members) if (-qbar * i) % N in ds.members), None
        )
        witness = (
            f"got {sorted(dual.members)}, expected {sorted(expected)}"
            if offender is None
            else f"-{qbar}*{offender} = {(-qbar * offender) % N} mod {N} lies in T"
        )
    _record(checks, f"{label}_dual_set_identity", ok, witness)


def _even_like_oracles(
    checks: list[CheckItem],
    field: FieldSpec,
    ds_even: DefiningSet,
    odd_like: LinearCode,
    kind: str,
    label: str,
) -> None:
    """The even-like code must be self-orthogonal and equal the odd-like dual."""
    even = code_from_defining_set(field, ds_even)
    wit = gram_nonzero_witness(even, kind)
    _record(
        checks,
        f"{label}_self_orthogonal",
        wit is None,
        "" if wit is None else f"Gram entry ({wit[0]},{wit[1]}) = element #{wit[2]}",
    )
    if even.n <= ROUTE_CAP:
        dual = dual_code(odd_like, kind)
        same = row_space_equal(dual.genmat, even.genmat, field)
        _record(
            checks,
            f"{label}_equals_kernel_dual",
            same,
            "defining-set dual == kernel dual"
            if same
            else "defining-set route and kernel route disagree",
        )
    else:
        _skip(
            checks,
            f"{label}_equals_kernel_dual",
            f"n = {even.n} > {ROUTE_CAP}; set-route and Gram oracles cover",
        )


def _distance_claim(
    checks: list[CheckItem],
    code: LinearCode,
    label: str,
    budget: int,
    claimed_d: int | None,
    floor: int | None = None,
) -> tuple[DistanceResult, bool]:
    """Measure a distance and judge a claimed value.

    Returns (result, open) where ``open`` means the claim could be neither
    confirmed nor refuted within budget.  ``floor`` is a proven lower bound
    inherited from a pre-extension code (a zero truncation forces zero
    tails).
    """
    dist = min_distance(code, budget)
    if not dist.is_exact and floor is not None and floor > (dist.lower or 1):
        dist = DistanceResult(
            None, floor, dist.upper, "extension_bound", dist.enumerated
        )
    if claimed_d is None:
        _info(
            checks,
            f"{label}_distance",
            f"no distance claim; measured {dist.to_dict()}",
        )
        return dist, False
    if dist.is_exact:
        ok = dist.value == claimed_d
        _record(
            checks,
            f"{label}_distance",
            ok,
            f"d = {dist.value} by {dist.method}"
            + ("" if ok else f", claimed {claimed_d}"),
        )
        return dist, False
    lower = dist.lower or 1
    if claimed_d < lower or claimed_d > dist.upper:
        _record(
            checks,
            f"{label}_distance",
            False,
            f"claimed d = {claimed_d} outside proven bounds [{lower}, {dist.upper}]",
        )
        return dist, False
    _skip(
        checks,
        f"{label}_distance",
        f"claimed d = {claimed_d} within bounds [{lower}, {dist.upper}] "
        f"(method {dist.method}); enumeration of {code.field.q}^{code.k} - 1 "
        f"codewords exceeds budget {budget}",
    )
    return dist, True


def _pair_distance_agreement(
    checks: list[CheckItem],
    dist1: DistanceResult,
    dist2: DistanceResult,
    multiplier_name: str,
) -> None:
    """The pair partner is the image of a coordinate permutation (the
    multiplier), and the single-extension tail is a permutation-invariant
    sum, so the two extended codes are weight-equivalent: exact distances
    must agree."""
    if dist1.is_exact and dist2.is_exact:
        _record(
            checks,
            "pair_distance_agreement",
            dist1.value == dist2.value,
            f"d = {dist1.value} and {dist2.value}; the {multiplier_name} "
            "permutation preserves weight",
        )
    else:
        _info(
            checks,
            "pair_distance_agreement",
            f"pair codes are weight-equivalent through the {multiplier_name} "
            "permutation; measured bounds "
            f"[{dist1.lower}, {dist1.upper}] and [{dist2.lower}, {dist2.upper}]",
        )


# ---------------------------------------------------------------------------
# single-window MDS cyclic codes
# ---------------------------------------------------------------------------


def mds_generator_code(field: FieldSpec, n: int, k: int, j: int = 1) -> LinearCode:
    """The [n, k] cyclic code with defining set {j, ..., j+n-k-1} mod n.

    Requires n | q - 1 so that every residue is its own cyclotomic coset;
    the n - k consecutive roots certify d = n - k + 1 (meeting the Singleton
    bound), so the result is MDS by construction.
    """
    if n < 1 or (field.q - 1) % n != 0:
        raise OrderNotDividingError(f"{n} does not divide {field.q} - 1")
    if not 0 < k <= n:
        raise DegenerateParameterError(f"need 0 < k <= n, got k = {k}")
    system = build_cosets(n, field.q, "full")
    window = frozenset((j + i) % n for i in range(n - k))
    return code_from_defining_set(field, DefiningSet(system, window))


# ---------------------------------------------------------------------------
# family builders
# ---------------------------------------------------------------------------


def _finish(
    entry: dict,
    recipe: ConstructionRecipe,
    checks: list[CheckItem],
    timings: dict,
    codes: tuple,
    distances: tuple,
    gamma: GammaSolution | None,
    distance_open: bool,
) -> VerificationReport:
    return VerificationReport(
        entry=entry,
        recipe=recipe,
        status=_status_from(recipe, checks, distance_open),
        checks=checks,
        timings=timings,
        codes=codes,
        distances=distances,
        gamma=gamma,
    )


def _euclidean_theorem_case(r: int, t: int, n: int) -> tuple[str | None, str]:
    """Which of the four extension-existence cases covers (q = r^t, n)."""
    pm: tuple[int, int] | None
    try:
        pm = prime_power(n)
    except NotPrimeError:
        pm = None
    if r == 2 and t % 2 == 1 and pm is not None and pm[1] == 1:
        return "i", "case i: q = 2^t with t odd and n an odd prime"
    if t % 2 == 0 and n >= 1 and (r - 1) % n == 0:
        return "ii", f"case ii: t even and n = {n} divides r - 1 = {r - 1}"
    if pm is not None:
        p, m = pm
        if r % 4 == 3 and t % 2 == 1 and p % 4 == 3 and m % 2 == 1:
            return "iii", "case iii: r = 3 mod 4, t odd, p = 3 mod 4, m odd"
        if r % 4 == 1 and t % 2 == 1 and p % 2 == 1:
            return "iv", "case iv: r = 1 mod 4, t odd, p odd"
    return None, (
        "no extension-existence case applies "
        f"(q = {r}^{t}, n = {n}): needs one of "
        "[i] r = 2, t odd, n prime; [ii] t even, n | r - 1; "
        "[iii] r = 3 mod 4, t odd, n = p^m with p = 3 mod 4, m odd; "
        "[iv] r = 1 mod 4, t odd, n = p^m with p odd"
    )


def build_cyclic_euclidean(
    q: int, n: int, *, budget: int = DEFAULT_BUDGET, force: bool = False
) -> tuple[tuple[LinearCode, LinearCode], VerificationReport]:
    """Extended duadic pair with defining sets {1..(n-1)/2} and its negative.

    Claims, re-verified before return: both extended codes are
    [n+1, (n+1)/2, (n+3)/2] MDS and Euclidean self-dual over GF(q).
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    r, t = prime_power(q)
    field = field_from_order(q)
    params = {
        "family": "cyclic_euclidean",
        "q": q,
        "r": r,
        "t": t,
        "n": n,
        "extended_length": n + 1,
    }
    try:
        p_, m_ = prime_power(n)
        params["p"], params["m"] = p_, m_
    except NotPrimeError:
        pass
    hyp: list[CheckItem] = []
    _record(hyp, "n_odd", n % 2 == 1, f"n = {n}")
    _record(
        hyp,
        "n_divides_q_minus_1",
        n >= 1 and (q - 1) % n == 0,
        f"n = {n}, q - 1 = {q - 1}",
    )
    case, case_detail = _euclidean_theorem_case(r, t, n)
    _record(hyp, "extension_case", case is not None, case_detail)
    if case is not None:
        params["extension_case"] = case
    recipe = ConstructionRecipe("cyclic_euclidean", params, hyp)
    timings["hypothesis"] = time.perf_counter() - t0
    if not recipe.hypotheses_ok and not force:
        raise HypothesisViolatedError(recipe.failure_message())

    t0 = time.perf_counter()
    system = build_cosets(n, q, "full")
    half = frozenset(range(1, (n - 1) // 2 + 1))
    ds1 = DefiningSet(system, half)
    ds1.require_coset_union()
    ds2 = apply_multiplier(ds1, -1)
    ds2.require_coset_union()
    d1 = code_from_defining_set(field, ds1)
    d2 = code_from_defining_set(field, ds2)
    gamma = solve_gamma("eq1", field, n)
    params["gamma_index"] = gamma.gamma.index
    e1 = extend_single(d1, gamma.gamma)
    e2 = extend_single(d2, gamma.gamma)
    timings["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    checks: list[CheckItem] = []
    k_claim = (n + 1) // 2
    _record(
        checks,
        "pre_extension_dimensions",
        d1.k == k_claim and d2.k == k_claim,
        f"k = {d1.k}, {d2.k}; claimed {k_claim}",
    )
    split = find_splitting(system, -1)
    _record(
        checks,
        "splitting_mu_minus1_type_i",
        split is not None and split.kind == "typeI",
        "mu_-1 splits the nonzero residues with fixed part {0}",
    )
    _record(
        checks,
        "pair_is_multiplier_image",
        ds2.members == frozenset((-i) % n for i in half),
        "second defining set = (-1) * first",
    )
    _dual_set_route(checks, ds1, "euclidean", half | {0}, "odd_like_d1")
    _dual_set_route(checks, ds2, "euclidean", ds2.members | {0}, "odd_like_d2")
    _even_like_oracles(
        checks, field, DefiningSet(system, half | {0}), d1, "euclidean", "even_like"
    )
    _self_dual_oracles(checks, e1, "euclidean", "extended_d1")
    _self_dual_oracles(checks, e2, "euclidean", "extended_d2")
    timings["oracles"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    pre1, _ = _distance_claim(checks, d1, "pre_d1", budget, k_claim)
    pre2, _ = _distance_claim(checks, d2, "pre_d2", budget, k_claim)
    dist1, open1 = _distance_claim(
        checks, e1, "extended_d1", budget, k_claim + 1, floor=pre1.value or pre1.lower
    )
    dist2, open2 = _distance_claim(
        checks, e2, "extended_d2", budget, k_claim + 1, floor=pre2.value or pre2.lower
    )
    _pair_distance_agreement(checks, dist1, dist2, "mu_-1")
    timings["distance"] = time.perf_counter() - t0
    report = _finish(
        dict(params),
        recipe,
        checks,
        timings,
        (e1, e2),
        (dist1, dist2),
        gamma,
        open1 or open2,
    )
    return (e1, e2), report


def build_cyclic_hermitian(
    q: int, p: int, m: int = 1, *, budget: int = DEFAULT_BUDGET, force: bool = False
) -> tuple[tuple[LinearCode, LinearCode], VerificationReport]:
    """Extended duadic pair over GF(q^2) from the centered root window.

    The underlying length is n = p**m with n | q^2 + 1; the defining set is
    the window {(n-1)/4 + 1, ..., 3(n-1)/4} of (n-1)/2 consecutive residues.
    Claims: both extended codes are [n+1, (n+1)/2, (n+3)/2] MDS and
    Hermitian self-dual over GF(q^2).
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    r, t = prime_power(q)
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if m < 1:
        raise DegenerateParameterError("m must be positive")
    n = p**m
    if (r ** (2 * t)) > ORDER_CAP:
        raise FieldTooLargeError(f"GF({q}^2) exceeds the order cap {ORDER_CAP}")
    big = make_field(r, 2 * t)
    params = {
        "family": "cyclic_hermitian",
        "q": q,
        "r": r,
        "t": t,
        "p": p,
        "m": m,
        "n": n,
        "field_order": q * q,
        "extended_length": n + 1,
    }
    hyp: list[CheckItem] = []
    _record(hyp, "base_characteristic_odd", r % 2 == 1, f"r = {r}")
    _record(
        hyp,
        "n_divides_q_squared_plus_1",
        (q * q + 1) % n == 0,
        f"n = {n}, q^2 + 1 = {q * q + 1}",
    )
    _record(hyp, "n_congruent_1_mod_4", n % 4 == 1, f"n = {n}")
    _record(
        hyp,
        "n_nonzero_in_prime_field",
        n % r != 0,
        f"n = {n} mod {r} = {n % r}",
    )
    recipe = ConstructionRecipe("cyclic_hermitian", params, hyp)
    timings["hypothesis"] = time.perf_counter() - t0
    if not recipe.hypotheses_ok and not force:
        raise HypothesisViolatedError(recipe.failure_message())

    t0 = time.perf_counter()
    system = build_cosets(n, q * q, "full")
    lo = (n - 1) // 4 + 1
    hi = 3 * (n - 1) // 4
    window = frozenset(range(lo, hi + 1))
    ds1 = DefiningSet(system, window)
    ds1.require_coset_union()
    ds2 = apply_multiplier(ds1, -q)
    ds2.require_coset_union()
    d1 = code_from_defining_set(big, ds1)
    d2 = code_from_defining_set(big, ds2)
    gamma = solve_gamma("eq3", big, n)
    params["gamma_index"] = gamma.gamma.index
    e1 = extend_single(d1, gamma.gamma)
    e2 = extend_single(d2, gamma.gamma)
    timings["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    checks: list[CheckItem] = []
    k_claim = (n + 1) // 2
    _record(
        checks,
        "pre_extension_dimensions",
        d1.k == k_claim and d2.k == k_claim,
        f"k = {d1.k}, {d2.k}; claimed {k_claim}",
    )
    split = find_splitting(system, -q)
    _record(
        checks,
        "splitting_mu_minus_q_type_i",
        split is not None and split.kind == "typeI",
        "mu_-q splits the nonzero residues with fixed part {0}",
    )
    _record(
        checks,
        "pair_is_multiplier_image",
        ds2.members == frozenset((-q * i) % n for i in window),
        "second defining set = (-q) * first",
    )
    _dual_set_route(checks, ds1, "hermitian", window | {0}, "odd_like_d1")
    _dual_set_route(checks, ds2, "hermitian", ds2.members | {0}, "odd_like_d2")
    _even_like_oracles(
        checks, big, DefiningSet(system, window | {0}), d1, "hermitian", "even_like"
    )
    _self_dual_oracles(checks, e1, "hermitian", "extended_d1")
    _self_dual_oracles(checks, e2, "hermitian", "extended_d2")
    timings["oracles"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    pre1, _ = _distance_claim(checks, d1, "pre_d1", budget, k_claim)
    pre2, _ = _distance_claim(checks, d2, "pre_d2", budget, k_claim)
    dist1, open1 = _distance_claim(
        checks, e1, "extended_d1", budget, k_claim + 1, floor=pre1.value or pre1.lower
    )
    dist2, open2 = _distance_claim(
        checks, e2, "extended_d2", budget, k_claim + 1, floor=pre2.value or pre2.lower
    )
    _pair_distance_agreement(checks, dist1, dist2, "mu_-q")
    timings["distance"] = time.perf_counter() - t0
    report = _finish(
        dict(params),
        recipe,
        checks,
        timings,
        (e1, e2),
        (dist1, dist2),
        gamma,
        open1 or open2,
    )
    return (e1, e2), report


def build_nega_centered(
    q: int, n: int, *, budget: int = DEFAULT_BUDGET, force: bool = False
) -> tuple[LinearCode, VerificationReport]:
    """Negacyclic self-dual code from a centered window of odd residues.

    The defining set is the run of n/2 consecutive odd residues centered at
    (q+1)/2 inside the odd residues mod 2n.  Claims: the code is
    [n, n/2, n/2 + 1] MDS and Euclidean self-dual over GF(q).
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    r, t = prime_power(q)
    field = field_from_order(q)
    nprime = n // 2 if n % 2 == 0 else 0
    nsecond = (q + 1) // 2
    params = {
        "family": "nega_centered",
        "q": q,
        "r": r,
        "t": t,
        "n": n,
        "n_prime": nprime,
        "n_second": nsecond,
    }
    hyp: list[CheckItem] = []
    _record(
        hyp,
        "n_twice_odd",
        n % 2 == 0 and nprime % 2 == 1,
        f"n = {n} = 2 * {nprime}",
    )
    _record(hyp, "q_odd", r % 2 == 1, f"q = {q}")
    _record(hyp, "q_congruent_1_mod_4", q % 4 == 1, f"q mod 4 = {q % 4}")
    _record(
        hyp,
        "half_length_divides_half_successor",
        nprime >= 1 and q % 4 == 1 and nsecond % nprime == 0,
        f"n' = {nprime}, n'' = (q+1)/2 = {nsecond}",
    )
    recipe = ConstructionRecipe("nega_centered", params, hyp)
    timings["hypothesis"] = time.perf_counter() - t0
    if not recipe.hypotheses_ok and not force:
        raise HypothesisViolatedError(recipe.failure_message())

    t0 = time.perf_counter()
    system = build_cosets(2 * n, q, "odd")
    center = ((q + 1) // 2) % (2 * n)
    members = frozenset(
        (center + i) % (2 * n) for i in range(-(nprime - 1), nprime, 2)
    )
    ds = DefiningSet(system, members)
    ds.require_coset_union()
    code = code_from_defining_set(field, ds)
    timings["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    checks: list[CheckItem] = []
    _record(
        checks,
        "defining_set_size",
        len(members) == nprime,
        f"|T| = {len(members)}",
    )
    _record(checks, "dimension_claim", code.k == n // 2, f"k = {code.k}")
    _dual_set_route(checks, ds, "euclidean", members, "self_dual")
    _self_dual_oracles(checks, code, "euclidean", "code")
    timings["oracles"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    dist, open_ = _distance_claim(checks, code, "code", budget, n // 2 + 1)
    timings["distance"] = time.perf_counter() - t0
    report = _finish(
        dict(params), recipe, checks, timings, (code,), (dist,), None, open_
    )
    return code, report


def build_nega_allodd(
    q: int,
    n: int,
    kind: str,
    *,
    budget: int = DEFAULT_BUDGET,
    force: bool = False,
) -> tuple[LinearCode, VerificationReport]:
    """Negacyclic code whose defining set is every odd residue in [1, n-1].

    ``kind`` selects the claimed duality: "euclidean" (over GF(q), needs
    q = 1 mod 2^(a+1) n'' for some odd multiple n'' of the odd part of n) or
    "hermitian" (over GF(q^2), needs a > 1 and q = 1 mod 2^a n'').  Claims:
    [n, n/2, n/2 + 1] MDS and self-dual of the selected kind.  The matrix
    oracle always runs: for some parameters the dual-set route refutes the
    hermitian claim, and the two routes must agree on that refutation.
    """
    if kind not in ("euclidean", "hermitian"):
        raise ValueError(f"kind must be 'euclidean' or 'hermitian', got {kind!r}")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    r, t = prime_power(q)
    if n < 2 or n % 2:
        raise DegenerateParameterError(f"negacyclic length must be even, got {n}")
    a = (n & -n).bit_length() - 1
    nprime = n >> a
    exp = a + 1 if kind == "euclidean" else a
    witness_nsecond = None
    for cand in range(nprime, q + 2, 2 * nprime):
        if (q - 1) % ((1 << exp) * cand) == 0:
            witness_nsecond = cand
            break
    if kind == "euclidean":
        field = field_from_order(q)
        qhat = q
        family = "nega_allodd_euclidean"
    else:
        if r ** (2 * t) > ORDER_CAP:
            raise FieldTooLargeError(f"GF({q}^2) exceeds the order cap {ORDER_CAP}")
        field = make_field(r, 2 * t)
        qhat = q * q
        family = "nega_allodd_hermitian"
    params = {
        "family": family,
        "q": q,
        "r": r,
        "t": t,
        "n": n,
        "a": a,
        "n_prime": nprime,
    }
    if witness_nsecond is not None:
        params["n_second"] = witness_nsecond
    if kind == "hermitian":
        params["field_order"] = q * q
    hyp: list[CheckItem] = []
    if kind == "euclidean":
        _record(hyp, "length_even", a >= 1, f"n = {n} = 2^{a} * {nprime}")
    else:
        _record(
            hyp,
            "two_adic_exponent_greater_1",
            a > 1,
            f"n = {n} = 2^{a} * {nprime}",
        )
    _record(hyp, "q_odd", r % 2 == 1, f"q = {q}")
    _record(
        hyp,
        "congruence_witness",
        witness_nsecond is not None,
        f"q = 1 mod 2^{exp} * n'' holds with n'' = {witness_nsecond}"
        if witness_nsecond is not None
        else f"no odd multiple n'' of {nprime} up to {q + 1} gives "
        f"q = 1 mod 2^{exp} * n'' (q - 1 = {q - 1})",
    )
    recipe = ConstructionRecipe(family, params, hyp)
    timings["hypothesis"] = time.perf_counter() - t0
    if not recipe.hypotheses_ok and not force:
        raise HypothesisViolatedError(recipe.failure_message())

    t0 = time.perf_counter()
    system = build_cosets(2 * n, qhat, "odd")
    members = frozenset(range(1, n, 2))
    ds = DefiningSet(system, members)
    ds.require_coset_union()
    code = code_from_defining_set(field, ds)
    timings["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    checks: list[CheckItem] = []
    _record(checks, "dimension_claim", code.k == n // 2, f"k = {code.k}")
    _dual_set_route(checks, ds, kind, members, "self_dual")
    _self_dual_oracles(checks, code, kind, "code")
    timings["oracles"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    dist, open_ = _distance_claim(checks, code, "code", budget, n // 2 + 1)
    timings["distance"] = time.perf_counter() - t0
    report = _finish(
        dict(params), recipe, checks, timings, (code,), (dist,), None, open_
    )
    return code, report


def build_nega_extended(
    q: int, p: int, t: int = 1, *, budget: int = DEFAULT_BUDGET, force: bool = False
) -> tuple[tuple[LinearCode, LinearCode], VerificationReport]:
    """Doubly-extended duadic pair of negacyclic codes of length 2p**t + 2.

    A type-II splitting of the odd residues mod 4p**t under mu_-1 gives two
    odd-like negacyclic codes; appending the two alternating-sum coordinates
    scaled by a solution of 2 + gamma^2 n = 0 yields the claimed pair of
    [n+2, n/2+1] Euclidean self-dual codes over GF(q).  No distance is
    claimed for this family; the exact distance is measured and reported
    when enumeration fits the budget.
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    if q < 2 or not is_prime(q):
        raise NotPrimeError(f"{q} is not prime")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if t < 1:
        raise DegenerateParameterError("t must be positive")
    n = 2 * p**t
    field = field_from_order(q)
    params = {
        "family": "nega_extended_2pt",
        "q": q,
        "p": p,
        "t": t,
        "n": n,
        "extended_length": n + 2,
    }
    hyp: list[CheckItem] = []
    _record(hyp, "q_prime_3_mod_4", q % 4 == 3, f"q = {q} mod 4 = {q % 4}")
    _record(hyp, "p_prime_3_mod_4", p % 4 == 3, f"p = {p} mod 4 = {p % 4}")
    distinct = p != q
    _record(
        hyp,
        "q_quadratic_residue_mod_p",
        distinct and is_quadratic_residue(q % p, p),
        f"q mod p = {q % p}",
    )
    if distinct:
        facts = order_facts(q, p, t)
        params["z"] = facts.z
        params["ord_p"] = facts.ord_p
        _record(hyp, "valuation_z_equals_1", facts.z == 1, f"z = {facts.z}")
    else:
        _record(hyp, "valuation_z_equals_1", False, "p = q; no multiplicative order")
    _record(hyp, "t_odd", t % 2 == 1, f"t = {t}")
    recipe = ConstructionRecipe("nega_extended_2pt", params, hyp)
    timings["hypothesis"] = time.perf_counter() - t0
    if not recipe.hypotheses_ok and not force:
        raise HypothesisViolatedError(recipe.failure_message())

    t0 = time.perf_counter()
    system = build_cosets(2 * n, q, "odd")
    split = find_splitting(system, -1, require="typeII")
    if split is None:
        raise NoSplittingError(
            f"mu_-1 does not induce a type II splitting of the odd residues mod {2 * n}"
        )
    ds1 = DefiningSet(system, split.S1)
    ds2 = DefiningSet(system, split.S2)
    d1 = code_from_defining_set(field, ds1)
    d2 = code_from_defining_set(field, ds2)
    gamma = solve_gamma("eq4", field, n)
    params["gamma_index"] = gamma.gamma.index
    e1 = extend_double(d1, gamma.gamma)
    e2 = extend_double(d2, gamma.gamma)
    timings["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    checks: list[CheckItem] = []
    _record(
        checks,
        "splitting_type_ii",
        split.X == frozenset({n // 2, 3 * n // 2}),
        f"X = {sorted(split.X)}",
    )
    _record(
        checks,
        "pre_extension_dimensions",
        d1.k == n // 2 + 1 and d2.k == n // 2 + 1,
        f"k = {d1.k}, {d2.k}",
    )
    _dual_set_route(checks, ds1, "euclidean", split.S1 | split.X, "odd_like_d1")
    _dual_set_route(checks, ds2, "euclidean", split.S2 | split.X, "odd_like_d2")
    _even_like_oracles(
        checks,
        field,
        DefiningSet(system, split.S1 | split.X),
        d1,
        "euclidean",
        "even_like",
    )
    _self_dual_oracles(checks, e1, "euclidean", "extended_d1")
    _self_dual_oracles(checks, e2, "euclidean", "extended_d2")
    timings["oracles"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    pre1, _ = _distance_claim(checks, d1, "pre_d1", budget, None)
    pre2, _ = _distance_claim(checks, d2, "pre_d2", budget, None)
    dist1, _ = _distance_claim(
        checks, e1, "extended_d1", budget, None, floor=pre1.value or pre1.lower
    )
    dist2, _ = _distance_claim(
        checks, e2, "extended_d2", budget, None, floor=pre2.value or pre2.lower
    )
    timings["distance"] = time.perf_counter() - t0
    report = _finish(
        dict(params),
        recipe,
        checks,
        timings,
        (e1, e2),
        (dist1, dist2),
        gamma,
        False,
    )
    return (e1, e2), report
