"""Polynomials over a finite field, minimal polynomials, and the
factorization of x**n - a (a = +1 or -1) into cyclotomic-coset factors.

The factorization is computed from first principles: adjoin a primitive
n-th (or 2n-th) root of unity in the canonical splitting field GF(q**s),
group its powers into cyclotomic cosets, take the product of the linear
factors in each orbit, and project the coefficients back down.  Code
generator polynomials are products of these coset factors.
"""

from __future__ import annotations

from functools import lru_cache

from .cosets import CosetSystem, DefiningSet, build_cosets
from .errors import FieldMismatchError, NotCoprimeError, ZeroElementError
from .fields import (
    FieldElement,
    FieldSpec,
    make_field,
    multiplicative_order,
    nth_root_of_unity,
    subfield_map,
)

__all__ = [
    "Poly",
    "minimal_poly",
    "factor_xn_minus_a",
    "generator_poly",
    "splitting_context",
]


class Poly:
    """Immutable dense polynomial, coefficients constant-term first.

    Trailing zeros are stripped; the zero polynomial has empty coefficients
    and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs=()):
        elems = []
        for c in coeffs:
            e = field.element(c) if not isinstance(c, FieldElement) else c
            if e.field != field:
                raise FieldMismatchError(f"{e!r} is not in {field}")
            elems.append(e)
        while elems and elems[-1].is_zero:
            elems.pop()
        self.field = field
        self.coeffs = tuple(elems)

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_indices(cls, field: FieldSpec, indices) -> "Poly":
        return cls(field, [field.from_index(int(i)) for i in indices])

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, (field.zero, field.one))

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, scale=None) -> "Poly":
        lead = field.one if scale is None else field.element(scale)
        return cls(field, (field.zero,) * k + (lead,))

    # -- basics ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def indices(self) -> tuple[int, ...]:
        return tuple(c.index for c in self.coeffs)

    def coefficient(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.q, tuple(c.coeffs for c in self.coeffs)))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"Poly(0 over {self.field})"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            if k == 0:
                terms.append(str(c.index))
            else:
                head = "" if c == self.field.one else f"{c.index}*"
                terms.append(f"{head}x^{k}" if k > 1 else f"{head}x")
        return f"Poly({' + '.join(terms)} over {self.field})"

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError("polynomials over different fields")
            return other
        if isinstance(other, (FieldElement, int)):
            return Poly(self.field, (self.field.element(other) if isinstance(other, int) else other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            s = self.field.element(other) if isinstance(other, int) else other
            return Poly(self.field, tuple(s * c for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial powers are undefined")
        result = Poly.one(self.field)
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroElementError("polynomial division by zero")
        lead_inv = other.coeffs[-1].inverse()
        rem = list(self.coeffs)
        quo = [self.field.zero] * max(len(rem) - len(other.coeffs) + 1, 0)
        db = other.degree
        while len(rem) - 1 >= db and rem:
            c = rem[-1] * lead_inv
            shift = len(rem) - 1 - db
            quo[shift] = c
            for j, b in enumerate(other.coeffs):
                rem[shift + j] = rem[shift + j] - c * b
            rem.pop()
            while rem and rem[-1].is_zero:
                rem.pop()
        return Poly(self.field, quo), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self * self.coeffs[-1].inverse()

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, self._coerce(other)
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def evaluate(self, point: FieldElement) -> FieldElement:
        point = self.field.element(point)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc


# ---------------------------------------------------------------------------
# minimal polynomials and x**n - a factorization
# ---------------------------------------------------------------------------


def minimal_poly(base: FieldSpec, ext: FieldSpec, beta: FieldElement) -> Poly:
    """Minimal polynomial of ``beta`` (in ext) over the base field.

    Product of x - beta**(q**j) over the Frobenius orbit, with coefficients
    projected back into the base field.
    """
    emb = subfield_map(base, ext)
    orbit = [beta]
    nxt = beta**base.q
    while nxt != beta:
        orbit.append(nxt)
        nxt = nxt**base.q
    prod = Poly.one(ext)
    for b in orbit:
        prod = prod * Poly(ext, (-b, ext.one))
    return Poly(base, tuple(emb.project(c) for c in prod.coeffs))


class SplittingContext:
    """Shared data for factoring x**n - a over GF(q): the coset system, the
    canonical splitting field, the embedding, and the root whose powers
    enumerate all roots of x**n - a (exponents = the universe)."""

    def __init__(self, field: FieldSpec, n: int, a: int):
        if a not in (1, -1):
            raise ValueError(f"constant term must be +1 or -1, got {a}")
        if n < 1:
            raise ValueError(f"length must be positive, got {n}")
        if n % field.p == 0:
            raise NotCoprimeError(
                f"length {n} shares a factor with the characteristic {field.p}"
            )
        if a == -1 and field.p == 2:
            raise NotCoprimeError("x**n + 1 equals x**n - 1 in characteristic 2")
        N = n if a == 1 else 2 * n
        universe = "full" if a == 1 else "odd"
        self.field = field
        self.n = n
        self.a = a
        self.system: CosetSystem = build_cosets(N, field.q, universe)
        s = multiplicative_order(field.q, N) if N > 1 else 1
        self.ext = make_field(field.p, field.m * s)
        self.emb = subfield_map(field, self.ext)
        self.root = nth_root_of_unity(self.ext, N) if N > 1 else self.ext.one

    def root_power(self, i: int) -> FieldElement:
        return self.root ** (i % self.system.N)


@lru_cache(maxsize=None)
def splitting_context(field: FieldSpec, n: int, a: int) -> SplittingContext:
    return SplittingContext(field, n, a)


@lru_cache(maxsize=None)
def factor_xn_minus_a(
    field: FieldSpec, n: int, a: int
) -> tuple[tuple[tuple[int, ...], Poly], ...]:
    """Factor x**n - a into its cyclotomic-coset irreducible factors.

    Returns ``((coset, factor), ...)`` ordered by smallest coset member.
    The product of the factors is verified to reproduce x**n - a exactly.
    """
    ctx = splitting_context(field, n, a)
    factors = []
    product = Poly.one(field)
    for coset in ctx.system.cosets:
        prod = Poly.one(ctx.ext)
        for i in coset:
            prod = prod * Poly(ctx.ext, (-ctx.root_power(i), ctx.ext.one))
        g = Poly(field, tuple(ctx.emb.project(c) for c in prod.coeffs))
        factors.append((coset, g))
        product = product * g
    target = Poly.monomial(field, n) - field.element((a % field.p,))
    if product != target:  # pragma: no cover - internal consistency
        raise AssertionError(f"factor product mismatch for x**{n} - {a} over {field}")
    return tuple(factors)


def generator_poly(defining_set: DefiningSet, field: FieldSpec) -> Poly:
    """Generator polynomial with roots at the defining set's positions.

    The length and sign are read off the set's universe: the full universe
    mod N belongs to x**N - 1, the odd universe mod 2n to x**n + 1.  The set
    must be a union of whole cosets; the result is the product of the
    corresponding factors and has degree |T|.
    """
    defining_set.require_coset_union()
    system = defining_set.system
    if system.qhat != field.q:
        raise ValueError(f"defining set was built for GF({system.qhat}), not {field}")
    if system.universe == "full":
        n, a = system.N, 1
    else:
        n, a = system.N // 2, -1
    g = Poly.one(field)
    for coset, fac in factor_xn_minus_a(field, n, a):
        if coset[0] in defining_set.members:
            g = g * fac
    return g
