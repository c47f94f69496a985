"""Breadth-first enumeration of the reflection orbit of the origin.

The orbit of (0,0,0) under the three affine reflections coincides with
the set of quadric solutions whose coefficients are nonnegative multiples
of four; this module enumerates it with exact deduplication, tests that
lattice membership, and realizes the constructive converse: a greedy
descent that walks any member back to the origin.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    GENERATORS,
    SYMMETRIZER,
    ZERO,
    MassVector,
    MuPolynomial,
    UNIT_WEIGHTS,
    Weights,
    apply_word,
    eval_at,
    pohozaev_residual,
    reflect,
)


@dataclass(frozen=True)
class OrbitElement:
    """An orbit member with its BFS discovery depth and a witness word."""

    sigma: MassVector
    level: int
    word: tuple[int, ...]


@dataclass(frozen=True)
class MembershipCertificate:
    """Per-condition diagnostics for lattice membership."""

    nonneg: bool
    div4: bool
    quadric_zero: bool

    @property
    def member(self) -> bool:
        return self.nonneg and self.div4 and self.quadric_zero

    def __bool__(self) -> bool:
        return self.member


class OrbitStore:
    """Deduplicated orbit elements plus bound bookkeeping.

    Iteration is canonical: by level, then by the 12-integer sort key of
    the mass vector, so output is deterministic no matter how the search
    was scheduled.
    """

    def __init__(self, elements: dict[MassVector, OrbitElement], max_level: int,
                 max_coefficient: int | None, truncated_by_coefficient: bool,
                 exhausted: bool) -> None:
        self._elements = dict(elements)
        self.max_level = max_level
        self.max_coefficient = max_coefficient
        self.truncated_by_coefficient = truncated_by_coefficient
        # True when no further elements exist beyond the explored bounds.
        self.exhausted = exhausted

    @property
    def truncated(self) -> bool:
        return self.truncated_by_coefficient or not self.exhausted

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, sigma: MassVector) -> bool:
        return sigma in self._elements

    def get(self, sigma: MassVector) -> OrbitElement | None:
        return self._elements.get(sigma)

    def __iter__(self):
        return iter(sorted(self._elements.values(),
                           key=lambda el: (el.level, el.sigma.sort_key())))

    def vectors(self) -> set[MassVector]:
        return set(self._elements)


def enumerate_orbit(max_level: int, max_coefficient: int | None = None) -> OrbitStore:
    """BFS over the reflection orbit of the origin.

    Levels count word length, so the origin sits at level 0.  A child is
    pruned when some coefficient exceeds ``max_coefficient``; pruning is
    recorded, never an error.
    """
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    if max_coefficient is not None and max_coefficient < 0:
        raise ValueError("max_coefficient must be >= 0")

    elements = {ZERO: OrbitElement(ZERO, 0, ())}
    frontier = [ZERO]
    pruned = False
    for level in range(1, max_level + 1):
        next_frontier: list[MassVector] = []
        for sigma in sorted(frontier, key=MassVector.sort_key):
            parent = elements[sigma]
            for index in GENERATORS:
                child = reflect(sigma, index)
                if child in elements:
                    continue
                if max_coefficient is not None and any(
                        v > max_coefficient for row in child.coeff for v in row):
                    pruned = True
                    continue
                elements[child] = OrbitElement(child, level, parent.word + (index,))
                next_frontier.append(child)
        frontier = next_frontier
    exhausted = not frontier
    return OrbitStore(elements, max_level, max_coefficient, pruned, exhausted)


def is_member_gamma_N(sigma: MassVector) -> MembershipCertificate:
    """Lattice membership test with per-condition certificate.

    The three flags are: all coefficients nonnegative, all divisible by
    four, and identically vanishing quadric residual.  Their conjunction
    characterizes the orbit.
    """
    if sigma.has_offset:
        raise ValueError("mass vector has a constant offset; not a pure mu-polynomial")
    entries = [v for row in sigma.coeff for v in row]
    nonneg = all(v >= 0 for v in entries)
    div4 = all(v % 4 == 0 for v in entries)
    residual = pohozaev_residual(sigma)
    assert isinstance(residual, MuPolynomial)
    return MembershipCertificate(nonneg, div4, residual.is_zero)


def _measure(sigma: MassVector, probe: Weights) -> Fraction:
    values = eval_at(sigma, probe)
    return sum((Fraction(w) * v for w, v in zip(SYMMETRIZER, values)), Fraction(0))


def descend_to_origin(sigma: MassVector, probe: Weights | None = None) -> list[int]:
    """Greedy word taking a lattice member back to the origin.

    Each step applies the smallest generator index that strictly lowers
    the weighted mass sigma1 + sigma2 + 2*sigma3 at the probe weights.
    The returned word is in application order: apply_word(sigma, word)
    is the origin.
    """
    if probe is None:
        probe = UNIT_WEIGHTS
    if not probe.is_numeric:
        raise ValueError("descent probe must be numeric")
    cert = is_member_gamma_N(sigma)
    if not cert:
        raise ValueError(f"not a lattice member: certificate {cert}")

    word: list[int] = []
    current = sigma
    measure = _measure(current, probe)
    while current != ZERO:
        best = None
        for index in GENERATORS:
            candidate = reflect(current, index)
            value = _measure(candidate, probe)
            if value < measure:
                best = (index, candidate, value)
                break  # smallest index wins ties by construction
        if best is None:
            raise ValueError("no reflection decreases the mass measure; "
                             "vector is not in the orbit")
        index, current, measure = best
        word.append(index)
    return word


@dataclass(frozen=True)
class RelationFailure:
    relation: str
    sigma: MassVector


@dataclass(frozen=True)
class RelationReport:
    trials: int
    seed: int
    failures: tuple[RelationFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


# Each relation is a pair of words (in application order) whose actions
# must agree on every vector; the identity is the empty word.
_RELATIONS: tuple[tuple[str, tuple[int, ...], tuple[int, ...]], ...] = (
    ("involution_1", (1, 1), ()),
    ("involution_2", (2, 2), ()),
    ("involution_3", (3, 3), ()),
    ("commute_12", (1, 2), (2, 1)),
    ("braid_13", (3, 1, 3, 1), (1, 3, 1, 3)),
    ("braid_23", (3, 2, 3, 2), (2, 3, 2, 3)),
    ("order4_13", (3, 1, 3, 1, 3, 1, 3, 1), ()),
    ("order4_23", (3, 2, 3, 2, 3, 2, 3, 2), ()),
)


def random_mass_vector(rng: random.Random, low: int = -100, high: int = 100) -> MassVector:
    """Uniform random integer mass vector (coefficients and offsets)."""
    coeff = tuple(tuple(rng.randint(low, high) for _ in range(3)) for _ in range(3))
    offset = tuple(rng.randint(low, high) for _ in range(3))
    return MassVector(coeff, offset)  # type: ignore[arg-type]


def check_relations(trials: int, rng_seed: int = 0,
                    low: int = -100, high: int = 100) -> RelationReport:
    """Probe the group presentation on random integer vectors.

    Covers the involutions, the commuting pair, both braid relations and
    both order-four products.  Failures are reported, not raised.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(rng_seed)
    failures: list[RelationFailure] = []
    for _ in range(trials):
        sigma = random_mass_vector(rng, low, high)
        for name, left, right in _RELATIONS:
            if apply_word(sigma, left) != apply_word(sigma, right):
                failures.append(RelationFailure(name, sigma))
    return RelationReport(trials, rng_seed, tuple(failures))
