"""Move-driven simulator of the bubbling mass-combination algebra.

A state is a pair (gamma_part, lattice_part): an orbit member plus an
integer lattice shift, so the simulated observable mass is always
gamma + 4n componentwise.  Far satellites merge as pure lattice shifts;
a local collapse applies a reflection word to the orbit part.  The
physical cascade only gains mass, so collapses that fail the gain bound
at the probe weights are rejected as non-physical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .algebra import MassVector, UNIT_WEIGHTS, Weights, ZERO, apply_word, eval_at
from .orbit import descend_to_origin, is_member_gamma_N


class InvalidSatellite(ValueError):
    """Satellite mass outside 4N x 4N x 4N."""


class NonPhysicalMove(ValueError):
    """Collapse whose mass gain falls below the physical lower bound."""


# The eight admissible collapse words for a pair {i,3}, keyed by the word
# written multiplicatively (leftmost factor acts last); values are in
# application order with 'i' standing for the non-3 member of the pair.
COLLAPSE_VARIANTS: dict[str, tuple[str, ...]] = {
    "e": (),
    "i": ("i",),
    "3": ("3",),
    "i3": ("3", "i"),
    "3i": ("i", "3"),
    "i3i": ("i", "3", "i"),
    "3i3": ("3", "i", "3"),
    "i3i3": ("3", "i", "3", "i"),
}

_VALID_SUBSETS = ((1,), (2,), (3,), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class SatelliteMerge:
    """Absorb far-satellite mass: a pure lattice shift by mass/4."""

    mass: tuple[int, int, int]

    def describe(self) -> str:
        return "merge " + " ".join(str(v) for v in self.mass)


@dataclass(frozen=True)
class Collapse:
    """Local blow-up of a subsystem: applies a reflection word.

    ``subset`` is the set of slow components.  Singletons and {1,2} have
    a single admissible word; a pair {i,3} takes one of the eight
    variants named in COLLAPSE_VARIANTS.
    """

    subset: tuple[int, ...]
    variant: str | None = None

    def __post_init__(self) -> None:
        subset = tuple(sorted(self.subset))
        object.__setattr__(self, "subset", subset)
        if subset not in _VALID_SUBSETS:
            raise ValueError(f"collapse subset must be a nonempty proper subset "
                             f"of {{1,2,3}}, got {subset}")
        if 3 in subset and len(subset) == 2:
            if self.variant not in COLLAPSE_VARIANTS:
                raise ValueError(f"collapse on {subset} needs a variant from "
                                 f"{sorted(COLLAPSE_VARIANTS)}, got {self.variant}")
        elif self.variant is not None:
            raise ValueError(f"collapse on {subset} does not take a variant")

    def word(self) -> tuple[int, ...]:
        """Generator word in application order."""
        if len(self.subset) == 1:
            return self.subset
        if self.subset == (1, 2):
            return (1, 2)
        i = self.subset[0]  # the non-3 member
        assert self.variant is not None
        return tuple(i if tok == "i" else 3 for tok in COLLAPSE_VARIANTS[self.variant])

    def describe(self) -> str:
        label = "".join(str(v) for v in self.subset)
        if self.variant is None:
            return f"collapse {label}"
        return f"collapse {label} {self.variant}"


Move = Union[SatelliteMerge, Collapse]


@dataclass(frozen=True)
class CascadeState:
    """Immutable simulator state; step() returns a new one."""

    gamma: MassVector = ZERO
    lattice: tuple[int, int, int] = (0, 0, 0)
    probe: Weights = UNIT_WEIGHTS
    history: tuple[Move, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not self.probe.is_numeric:
            raise ValueError("cascade probe weights must be numeric")

    def total(self) -> tuple[Fraction, Fraction, Fraction]:
        """Observable mass gamma + 4n, evaluated at the probe."""
        values = eval_at(self.gamma, self.probe)
        return tuple(v + 4 * n for v, n in zip(values, self.lattice))  # type: ignore[return-value]

    def total_sum(self) -> Fraction:
        return sum(self.total(), Fraction(0))


def initial_state(probe: Weights | None = None) -> CascadeState:
    return CascadeState(probe=probe if probe is not None else UNIT_WEIGHTS)


def _min_gain(probe: Weights) -> Fraction:
    assert probe.values is not None
    return 4 * min(probe.values)


def step(state: CascadeState, move: Move) -> CascadeState:
    """Apply one move, enforcing the physical gain bound.

    A satellite merge shifts the lattice by mass/4 and is always legal.
    A collapse keeps the lattice fixed and replaces the orbit part; if it
    changes the orbit part, the total mass at the probe must grow by at
    least min_i 4*mu_i, the lower bound the cascade realizes -- anything
    less is rejected as non-physical.
    """
    if isinstance(move, SatelliteMerge):
        if len(move.mass) != 3 or any(v < 0 or v % 4 for v in move.mass):
            raise InvalidSatellite(f"invalid satellite {move.mass}: entries must be "
                                   "nonnegative multiples of 4")
        lattice = tuple(n + v // 4 for n, v in zip(state.lattice, move.mass))
        return CascadeState(state.gamma, lattice, state.probe,  # type: ignore[arg-type]
                            state.history + (move,))

    new_gamma = apply_word(state.gamma, move.word())
    if new_gamma != state.gamma:
        before = sum(eval_at(state.gamma, state.probe), Fraction(0))
        after = sum(eval_at(new_gamma, state.probe), Fraction(0))
        gain = after - before
        if gain < _min_gain(state.probe):
            raise NonPhysicalMove(
                f"non-physical move {move.describe()}: total mass gain {gain} "
                f"falls below the bound {_min_gain(state.probe)}")
    return CascadeState(new_gamma, state.lattice, state.probe,
                        state.history + (move,))


@dataclass(frozen=True)
class Decomposition:
    """Orbit part, lattice part, and a descent certificate for the former."""

    gamma: MassVector
    lattice: tuple[int, int, int]
    descent_word: tuple[int, ...]


def decompose(state: CascadeState) -> Decomposition:
    """Split the state and certify the orbit part by descending it to 0."""
    cert = is_member_gamma_N(state.gamma)
    if not cert:
        raise ValueError(f"state invariant broken: gamma certificate {cert}")
    word = tuple(descend_to_origin(state.gamma, state.probe))
    return Decomposition(state.gamma, state.lattice, word)


def parse_scenario(text: str) -> list[Move]:
    """Parse a line-oriented scenario: 'merge k1 k2 k3' / 'collapse J [variant]'.

    Blank lines and '#' comments are skipped.  Subsets are digit strings
    like 1, 12, 13; pair-{i,3} collapses need a variant token.
    """
    moves: list[Move] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        try:
            if kind == "merge":
                if len(tokens) != 4:
                    raise ValueError("merge takes exactly three masses")
                moves.append(SatelliteMerge(tuple(int(t) for t in tokens[1:])))  # type: ignore[arg-type]
            elif kind == "collapse":
                if len(tokens) not in (2, 3):
                    raise ValueError("collapse takes a subset and an optional variant")
                subset = tuple(sorted(int(ch) for ch in tokens[1]))
                variant = tokens[2] if len(tokens) == 3 else None
                moves.append(Collapse(subset, variant))
            else:
                raise ValueError(f"unknown move kind {kind!r}")
        except ValueError as exc:
            raise ValueError(f"scenario line {lineno}: {exc}") from exc
    return moves


def replay(moves: Sequence[Move], probe: Weights | None = None) -> list[dict]:
    """Run a scenario from the origin state, returning one record per step."""
    state = initial_state(probe)
    trace = []
    for move in moves:
        state = step(state, move)
        trace.append({
            "move": move.describe(),
            "gamma_coeff": [list(row) for row in state.gamma.coeff],
            "lattice": list(state.lattice),
            "total": [str(v) for v in state.total()],
        })
    return trace
