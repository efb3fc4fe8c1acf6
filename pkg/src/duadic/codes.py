"""Linear codes over finite fields: generator matrices, dual checks by two
independent routes, coordinate extensions, and minimum distance.

Generator matrices are (k, n) numpy int64 arrays of element *indices*; all
bulk arithmetic runs on base-p digit planes, so no per-entry Python objects
are created.  Self-duality is decided by an explicit Gram-matrix
computation; :func:`dual_code` independently computes the dual through a
matrix kernel so the two routes can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .cosets import DefiningSet, longest_consecutive_run
from .errors import (
    DistanceNotExactError,
    FieldMismatchError,
    LengthParityError,
    NonSquareFieldError,
)
from .fields import TABLE_CAP, FieldElement, FieldSpec, make_field
from .poly import Poly, generator_poly

__all__ = [
    "DEFAULT_BUDGET",
    "LinearCode",
    "DistanceResult",
    "code_from_defining_set",
    "gram_matrix",
    "gram_nonzero_witness",
    "is_self_dual",
    "dual_code",
    "kernel_basis",
    "row_space_equal",
    "extend_single",
    "extend_double",
    "min_distance",
    "is_mds",
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a minimum-distance computation.

    ``value`` is the exact distance when known, else None with honest
    [lower, upper] bounds.  ``method`` is one of "exhaustive",
    "bch_singleton_certificate", "bounded_only", or "degenerate" (k = 0).
    ``enumerated`` counts the messages actually visited.
    """

    value: int | None
    lower: int | None
    upper: int | None
    method: str
    enumerated: int = 0

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "method": self.method,
            "enumerated": self.enumerated,
        }


class LinearCode:
    """An [n, k] linear code given by a full-rank generator matrix.

    ``shift`` records the cyclic convention the code was built under
    (+1 cyclic, -1 negacyclic, None for plain/extended codes), and
    ``defining_set``/``generator_poly`` carry root provenance when the code
    came from one.
    """

    def __init__(
        self,
        field: FieldSpec,
        genmat: np.ndarray,
        shift: int | None = None,
        defining_set: DefiningSet | None = None,
        gen_poly: Poly | None = None,
    ):
        genmat = np.asarray(genmat, dtype=np.int64)
        if genmat.ndim != 2:
            raise ValueError("generator matrix must be two-dimensional")
        if genmat.size and (genmat.min() < 0 or genmat.max() >= field.q):
            raise ValueError(f"matrix entries must be indices into {field}")
        self.field = field
        self.genmat = genmat
        self.k, self.n = genmat.shape
        self.shift = shift
        self.defining_set = defining_set
        self.gen_poly = gen_poly

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over {self.field})"

    def parameters(self) -> tuple[int, int]:
        return self.n, self.k

    def encode(self, message) -> np.ndarray:
        """Codeword indices for a length-k message of indices."""
        msg = np.asarray(message, dtype=np.int64).reshape(self.k)
        prod = self.field.mul_index_arrays(msg[:, None], self.genmat)
        planes = self.field.index_to_planes(prod).sum(axis=0)
        return self.field.planes_to_index(planes)

    def words(self):
        """Iterate all q**k codewords (small codes only; used by oracles)."""
        q, k = self.field.q, self.k
        for msg in np.ndindex(*([q] * k)):
            yield self.encode(np.array(msg, dtype=np.int64))

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "n": self.n,
            "k": self.k,
            "shift": self.shift,
            "genmat": self.genmat.tolist(),
            "defining_set": self.defining_set.to_dict() if self.defining_set else None,
            "gen_poly": list(self.gen_poly.indices()) if self.gen_poly else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LinearCode":
        field = FieldSpec.from_dict(d["field"])
        ds = DefiningSet.from_dict(d["defining_set"]) if d.get("defining_set") else None
        gp = Poly.from_indices(field, d["gen_poly"]) if d.get("gen_poly") else None
        genmat = np.array(d["genmat"], dtype=np.int64).reshape(d["k"], d["n"])
        return cls(field, genmat, d.get("shift"), ds, gp)


def code_from_defining_set(field: FieldSpec, defining_set: DefiningSet) -> LinearCode:
    """Cyclic (full universe) or negacyclic (odd universe) code with the
    given root positions.  The set must be a union of whole cosets."""
    system = defining_set.system
    if system.qhat != field.q:
        raise FieldMismatchError(
            f"defining set was built for GF({system.qhat}), not {field}"
        )
    if system.universe == "full":
        n, shift = system.N, 1
    else:
        n, shift = system.N // 2, -1
    g = generator_poly(defining_set, field)
    k = n - g.degree
    gi = g.indices()
    genmat = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        genmat[i, i : i + len(gi)] = gi
    return LinearCode(field, genmat, shift, defining_set, g)


# ---------------------------------------------------------------------------
# Gram matrices and self-duality (matrix route)
# ---------------------------------------------------------------------------


def _conjugated(code: LinearCode, kind: str) -> np.ndarray:
    if kind == "euclidean":
        return code.genmat
    if kind == "hermitian":
        if code.field.m % 2:
            raise NonSquareFieldError(
                f"Hermitian forms need a square field order, not {code.field}"
            )
        return code.field.conj_index_arrays(code.genmat)
    raise ValueError(f"unknown duality kind {kind!r}")


def gram_matrix(code: LinearCode, kind: str = "euclidean") -> np.ndarray:
    """(k, k) index matrix of pairwise row inner products.

    Euclidean: sum_j a_j b_j; Hermitian: sum_j a_j b_j**sqrt(q).  Computed
    on digit planes with integer matmuls, one per coefficient pair.
    """
    field = code.field
    A = field.index_to_planes(code.genmat)  # (k, n, m)
    B = field.index_to_planes(_conjugated(code, kind))
    k, m = code.k, field.m
    conv = np.zeros((k, k, 2 * m - 1), dtype=np.int64)
    for u in range(m):
        for v in range(m):
            conv[:, :, u + v] += A[:, :, u] @ B[:, :, v].T
    conv %= field.p
    res = conv[:, :, :m]
    if m > 1:
        res = res + conv[:, :, m:] @ field.xpow_matrix()
    return field.planes_to_index(res)


def gram_nonzero_witness(
    code: LinearCode, kind: str = "euclidean"
) -> tuple[int, int, int] | None:
    """First (i, j, index) with <row_i, row_j> != 0, or None if orthogonal."""
    gram = gram_matrix(code, kind)
    nz = np.argwhere(gram != 0)
    if nz.size == 0:
        return None
    i, j = map(int, nz[0])
    return i, j, int(gram[i, j])


def is_self_dual(code: LinearCode, kind: str = "euclidean") -> bool:
    """True iff n = 2k and the code is self-orthogonal under the form."""
    if 2 * code.k != code.n:
        return False
    return gram_nonzero_witness(code, kind) is None


# ---------------------------------------------------------------------------
# dual via matrix kernel (independent route)
# ---------------------------------------------------------------------------


def _to_elements(mat: np.ndarray, field: FieldSpec) -> list[list[FieldElement]]:
    return [[field.from_index(int(x)) for x in row] for row in mat]


def _rref(rows: list[list[FieldElement]], field: FieldSpec, ncols: int | None = None):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def matrix_rank(mat: np.ndarray, field: FieldSpec) -> int:
    return len(_rref(_to_elements(mat, field), field)[1])


def kernel_basis(mat: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Basis of the right kernel {v : mat @ v = 0}, as (dim, ncols) indices."""
    mat = np.asarray(mat, dtype=np.int64)
    ncols = mat.shape[1]
    rows, pivots = _rref(_to_elements(mat, field), field, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append([e.index for e in vec])
    return np.array(basis, dtype=np.int64).reshape(len(free), ncols)


def row_space_equal(a: np.ndarray, b: np.ndarray, field: FieldSpec) -> bool:
    ra, pa = _rref(_to_elements(np.asarray(a, np.int64), field), field)
    rb, pb = _rref(_to_elements(np.asarray(b, np.int64), field), field)
    return pa == pb and ra == rb


def dual_code(code: LinearCode, kind: str = "euclidean") -> LinearCode:
    """The dual computed through the matrix kernel (no root provenance).

    Euclidean dual = ker(G); Hermitian dual = conjugate of ker(G).
    """
    ker = kernel_basis(code.genmat, code.field)
    if kind == "hermitian":
        if code.field.m % 2:
            raise NonSquareFieldError(
                f"Hermitian forms need a square field order, not {code.field}"
            )
        ker = code.field.conj_index_arrays(ker)
    elif kind != "euclidean":
        raise ValueError(f"unknown duality kind {kind!r}")
    return LinearCode(code.field, ker, shift=None)


# ---------------------------------------------------------------------------
# coordinate extensions
# ---------------------------------------------------------------------------


def _row_sums(genmat: np.ndarray, field: FieldSpec, signs: np.ndarray) -> np.ndarray:
    """Index array of sum_j signs[j] * row[j] for each row (signs in {1,-1})."""
    planes = field.index_to_planes(genmat)  # (k, n, m)
    signed = planes * signs[None, :, None]
    return field.planes_to_index(signed.sum(axis=1))


def extend_single(code: LinearCode, gamma: FieldElement) -> LinearCode:
    """Append the column c_inf = -gamma * (sum of coordinates) to each row."""
    field = code.field
    gamma = field.element(gamma)
    sums = _row_sums(code.genmat, field, np.ones(code.n, dtype=np.int64))
    tail = field.mul_index_arrays(np.int64((-gamma).index), sums)
    return LinearCode(field, np.hstack([code.genmat, tail[:, None]]))


def extend_double(code: LinearCode, gamma: FieldElement) -> LinearCode:
    """Append a_inf = gamma * sum (-1)**i a_{2i} and a_star = gamma *
    sum (-1)**i a_{2i+1}, in that order.  Requires even length."""
    if code.n % 2:
        raise LengthParityError(f"double extension needs even length, got {code.n}")
    field = code.field
    gamma = field.element(gamma)
    half = code.n // 2
    alt = np.where(np.arange(half) % 2 == 0, 1, -1).astype(np.int64)
    even_sums = _row_sums(code.genmat[:, 0::2], field, alt)
    odd_sums = _row_sums(code.genmat[:, 1::2], field, alt)
    g_idx = np.int64(gamma.index)
    a_inf = field.mul_index_arrays(g_idx, even_sums)
    a_star = field.mul_index_arrays(g_idx, odd_sums)
    return LinearCode(
        field, np.hstack([code.genmat, a_inf[:, None], a_star[:, None]])
    )


# ---------------------------------------------------------------------------
# minimum distance
# ---------------------------------------------------------------------------


def _enumeration_supported(field: FieldSpec) -> bool:
    return field.m == 1 or field.q <= TABLE_CAP


def _enumerate_min_weight(code: LinearCode, stop_at: int) -> tuple[int, int]:
    field = code.field
    total = field.q**code.k - 1
    if field.m == 1:
        return _kernels.min_weight_prime(code.genmat, field.p, total, stop_at)
    q = field.q
    idx = np.arange(q, dtype=np.int64)
    nxt = np.roll(idx, -1)
    diff_planes = (field.index_to_planes(nxt) - field.index_to_planes(idx)) % field.p
    diffs = field.planes_to_index(diff_planes)  # successor deltas per digit value
    steps = field.mul_index_arrays(
        diffs[None, :, None], code.genmat[:, None, :]
    ).astype(np.int32)
    return _kernels.min_weight_table(steps, field.add_table(), total, stop_at)


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Exact minimum distance when affordable, honest bounds otherwise.

    Order of attack: exhaustive enumeration when q**k - 1 fits the budget
    and a kernel covers the field; else the consecutive-root certificate
    (lower bound meets the Singleton bound); else [bounds].
    """
    n, k = code.n, code.k
    if k == 0:
        return DistanceResult(None, None, None, "degenerate")
    singleton = n - k + 1
    run_lower = 1
    if code.defining_set is not None:
        run_lower = longest_consecutive_run(code.defining_set) + 1
    total = code.field.q**k - 1
    if total <= budget and _enumeration_supported(code.field):
        best, visited = _enumerate_min_weight(code, stop_at=run_lower)
        return DistanceResult(best, best, best, "exhaustive", visited)
    if run_lower == singleton:
        return DistanceResult(
            singleton, singleton, singleton, "bch_singleton_certificate"
        )
    return DistanceResult(None, min(run_lower, singleton), singleton, "bounded_only")


def is_mds(code: LinearCode, dist: DistanceResult | None = None) -> bool:
    """True iff d = n - k + 1 exactly; raises if only bounds are known."""
    dist = dist or min_distance(code)
    if not dist.is_exact:
        raise DistanceNotExactError(
            f"no exact distance for {code!r} (method {dist.method})"
        )
    return dist.value == code.n - code.k + 1
