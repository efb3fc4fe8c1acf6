"""Cyclotomic cosets, multipliers, dual defining sets, and duadic splittings.

Root positions of a cyclic code of length n live in Z_n (the "full"
universe); root positions of a negacyclic code of even length n live among
the odd residues mod 2n (the "odd" universe).  Both cases share one
machinery: residues mod N partitioned into cyclotomic cosets under
multiplication by the field order q-hat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NonSquareFieldError, NotCoprimeError, NotUnionOfCosetsError

__all__ = [
    "CosetSystem",
    "DefiningSet",
    "Splitting",
    "build_cosets",
    "apply_multiplier",
    "euclidean_dual_set",
    "hermitian_dual_set",
    "find_splitting",
    "longest_consecutive_run",
]


class CosetSystem:
    """Cyclotomic cosets of q-hat on a residue universe mod N.

    ``universe="full"`` uses all of Z_N; ``universe="odd"`` uses the odd
    residues mod N (N must then be even).  Cosets are stored sorted and
    ordered by smallest member, so every derived object is deterministic.
    """

    def __init__(self, N: int, qhat: int, universe: str = "full"):
        if N < 1:
            raise ValueError(f"modulus must be positive, got {N}")
        if universe not in ("full", "odd"):
            raise ValueError(f"unknown universe {universe!r}")
        if universe == "odd" and N % 2:
            raise ValueError("the odd-residue universe needs an even modulus")
        if math.gcd(qhat % N if N > 1 else 1, N) != 1:
            raise NotCoprimeError(f"field order {qhat} shares a factor with {N}")
        self.N = N
        self.qhat = qhat
        self.universe = universe
        members = range(N) if universe == "full" else range(1, N, 2)
        self.members: tuple[int, ...] = tuple(members)
        seen: set[int] = set()
        cosets: list[tuple[int, ...]] = []
        for r in self.members:
            if r in seen:
                continue
            orbit = []
            x = r
            while x not in seen:
                seen.add(x)
                orbit.append(x)
                x = (x * qhat) % N
            cosets.append(tuple(sorted(orbit)))
        self.cosets: tuple[tuple[int, ...], ...] = tuple(cosets)
        self._coset_index: dict[int, int] = {
            r: i for i, c in enumerate(cosets) for r in c
        }

    def coset_containing(self, r: int) -> tuple[int, ...]:
        return self.cosets[self._coset_index[r % self.N]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CosetSystem):
            return NotImplemented
        return (self.N, self.qhat, self.universe) == (
            other.N,
            other.qhat,
            other.universe,
        )

    def __hash__(self) -> int:
        return hash((self.N, self.qhat, self.universe))

    def __repr__(self) -> str:
        return (
            f"CosetSystem(N={self.N}, qhat={self.qhat}, universe={self.universe!r},"
            f" {len(self.cosets)} cosets)"
        )


@lru_cache(maxsize=None)
def _build_cosets(N: int, qhat: int, universe: str) -> CosetSystem:
    return CosetSystem(N, qhat, universe)


def build_cosets(N: int, qhat: int, universe: str = "full") -> CosetSystem:
    """Cached :class:`CosetSystem` constructor."""
    return _build_cosets(N, qhat, universe)


@dataclass(frozen=True)
class DefiningSet:
    """A set of root positions inside a coset system's universe.

    Arbitrary subsets are allowed (multiplier images of ad-hoc sets need
    not be coset-closed); :meth:`is_coset_union` reports whether the set
    actually is a union of whole cosets, which code construction requires.
    """

    system: CosetSystem
    members: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        members = frozenset(int(r) for r in self.members)
        if not members <= set(self.system.members):
            bad = sorted(members - set(self.system.members))
            raise ValueError(f"positions {bad} lie outside the universe")
        object.__setattr__(self, "members", members)

    def is_coset_union(self) -> bool:
        return all(
            set(self.system.coset_containing(r)) <= self.members for r in self.members
        )

    def require_coset_union(self) -> None:
        if not self.is_coset_union():
            raise NotUnionOfCosetsError(
                f"{sorted(self.members)} is not a union of cyclotomic cosets"
            )

    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    def to_dict(self) -> dict:
        return {
            "N": self.system.N,
            "qhat": self.system.qhat,
            "universe": self.system.universe,
            "members": self.sorted_members(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DefiningSet":
        system = build_cosets(d["N"], d["qhat"], d["universe"])
        return cls(system, frozenset(d["members"]))

    def __repr__(self) -> str:
        return f"DefiningSet({sorted(self.members)} mod {self.system.N})"


@dataclass(frozen=True)
class Splitting:
    """A multiplier-induced partition universe = S1 | S2 | X with mu_s swapping
    S1 and S2 and fixing X.

    ``kind`` is "typeI" when X is trivial ({0} on the full universe, empty on
    the odd universe), "typeII" when X = {N/4, 3N/4} on the odd universe, and
    None for any other fixed-set shape.
    """

    system: CosetSystem
    multiplier: int
    S1: frozenset[int]
    S2: frozenset[int]
    X: frozenset[int]
    kind: str | None

    def defining_set(self, half: int, with_fixed: bool = False) -> DefiningSet:
        """The defining set S1 or S2 (half = 1 or 2), optionally including X."""
        base = self.S1 if half == 1 else self.S2
        return DefiningSet(self.system, base | (self.X if with_fixed else frozenset()))

    def __repr__(self) -> str:
        return (
            f"Splitting(mu={self.multiplier}, |S1|={len(self.S1)},"
            f" |S2|={len(self.S2)}, X={sorted(self.X)}, kind={self.kind})"
        )


def apply_multiplier(ds: DefiningSet, s: int) -> DefiningSet:
    """mu_s: pointwise multiplication of the set by s (s coprime to N)."""
    N = ds.system.N
    if math.gcd(s % N if N > 1 else 1, N) != 1:
        raise NotCoprimeError(f"multiplier {s} shares a factor with {N}")
    return DefiningSet(ds.system, frozenset((s * r) % N for r in ds.members))


def euclidean_dual_set(ds: DefiningSet) -> DefiningSet:
    """Defining set of the Euclidean dual: universe minus mu_{-1}(T)."""
    image = apply_multiplier(ds, -1 % ds.system.N if ds.system.N > 1 else 0)
    return DefiningSet(ds.system, frozenset(ds.system.members) - image.members)


def hermitian_dual_set(ds: DefiningSet) -> DefiningSet:
    """Defining set of the Hermitian dual: universe minus mu_{-sqrt(qhat)}(T)."""
    qbar = math.isqrt(ds.system.qhat)
    if qbar * qbar != ds.system.qhat:
        raise NonSquareFieldError(
            f"Hermitian duality needs a square field order, got {ds.system.qhat}"
        )
    image = apply_multiplier(ds, (-qbar) % ds.system.N)
    return DefiningSet(ds.system, frozenset(ds.system.members) - image.members)


def find_splitting(
    system: CosetSystem, s: int, require: str | None = None
) -> Splitting | None:
    """Partition the universe by the multiplier mu_s.

    Cosets are walked in ascending order of their smallest member; a coset
    mapped to itself joins X, otherwise the smaller-minimum coset of each
    swapped pair joins S1.  Returns None when ``require`` names a kind
    ("typeI"/"typeII") and the induced partition is of a different kind.
    """
    N = system.N
    if math.gcd(s % N if N > 1 else 1, N) != 1:
        raise NotCoprimeError(f"multiplier {s} shares a factor with {N}")
    S1: set[int] = set()
    S2: set[int] = set()
    X: set[int] = set()
    assigned: set[int] = set()
    for coset in system.cosets:  # already ordered by smallest member
        if coset[0] in assigned:
            continue
        image = system.coset_containing((s * coset[0]) % N)
        if image == coset:
            X.update(coset)
        else:
            S1.update(coset)
            S2.update(image)
        assigned.update(coset)
        assigned.update(image)
    if system.universe == "full":
        kind = "typeI" if X <= {0} else None
    else:
        if not X:
            kind = "typeI"
        elif N % 4 == 0 and X == {N // 4, 3 * N // 4}:
            kind = "typeII"
        else:
            kind = None
    if require is not None and kind != require:
        return None
    return Splitting(
        system, s % N, frozenset(S1), frozenset(S2), frozenset(X), kind
    )


def longest_consecutive_run(ds: DefiningSet) -> int:
    """Length of the longest cyclic run in T with the universe's native step.

    The step is 1 on the full universe and 2 on the odd universe; runs wrap
    around mod N and are capped at the universe size.
    """
    members = ds.members
    if not members:
        return 0
    size = len(ds.system.members)
    if len(members) == size:
        return size
    N = ds.system.N
    step = 1 if ds.system.universe == "full" else 2
    best = 0
    for t in members:
        if (t - step) % N in members:
            continue  # not the start of a run
        length = 1
        x = t
        while (x + step) % N in members:
            length += 1
            x = (x + step) % N
        best = max(best, length)
    return best
