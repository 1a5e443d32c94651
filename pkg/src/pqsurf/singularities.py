"""Singular points of (C1 x C2)/G and their cyclic-quotient types 1/n(1,a).

A fixed point is a pair of cover points whose stabilizers intersect in a
nontrivial cyclic group H of order n.  The oriented type stores a relative
to the first factor: pick the generator h of H acting on the tangent line
of the C1 point as the primitive root itself (exponent 1 mod n) and read a
off its rotation exponent on the C2 point.  Rotation exponents are discrete
logarithms in cyclic stabilizers, so everything stays exact and finite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

from .covers import SphericalSystem, branch_fiber, require_valid
from .errors import EngineInconsistencyError, ValidationError
from .groups import (
    FiniteGroup,
    coset_of,
    cyclic_subgroup,
    element_order,
    intersect_subgroups,
    orbit_partition,
)


@dataclass(frozen=True, order=True)
class SingularityType:
    n: int
    a: int

    def __post_init__(self) -> None:
        if self.n < 2 or not 1 <= self.a <= self.n - 1 or gcd(self.a, self.n) != 1:
            raise ValidationError(f"not a valid singularity type 1/{self.n}(1,{self.a})")

    def __str__(self) -> str:
        return f"1/{self.n}(1,{self.a})"


def dual_type(t: SingularityType) -> SingularityType:
    """(n, a') with a*a' = 1 mod n."""
    return SingularityType(t.n, pow(t.a, -1, t.n))


def normalized_key(t: SingularityType) -> SingularityType:
    """The lexicographically smaller of (n, a) and its dual; convention-free reporting key."""
    return min(t, dual_type(t))


@dataclass(frozen=True)
class SingularPoint:
    """One G-orbit of fixed points, over branch pair (i, j)."""

    branch_pair: tuple[int, int]
    type: SingularityType
    orbit_size: int
    rep: tuple[int, int]  # canonical coset representatives on each factor


@dataclass(frozen=True)
class SingularLocus:
    points: tuple[SingularPoint, ...]
    # (i, j) -> number of free G-orbits of coset pairs over that branch pair
    free_orbit_counts: dict[tuple[int, int], int]

    def type_counts(self) -> Counter:
        return Counter(p.type for p in self.points)

    def normalized_counts(self) -> Counter:
        return Counter(normalized_key(p.type) for p in self.points)

    def to_json(self) -> list[dict]:
        return [
            {
                "n": p.type.n,
                "a": p.type.a,
                "a_normalized": normalized_key(p.type).a,
                "branch_pair": list(p.branch_pair),
                "orbit_size": p.orbit_size,
            }
            for p in self.points
        ]


def rotation_exponent(group: FiniteGroup, rotation_generator: int, h: int, n: int) -> int:
    """Exponent k (mod n) with which h rotates the tangent line whose distinguished
    generator is ``rotation_generator``: h = r^e with e = k * (m/n)."""
    m = element_order(group, rotation_generator)
    if m % n != 0:
        raise EngineInconsistencyError("stabilizer order does not divide rotation order")
    acc, e = group.identity, 0
    while acc != h:
        acc = group.mul(acc, rotation_generator)
        e += 1
        if e > m:
            raise EngineInconsistencyError("element not in the cyclic group of its rotation")
    step = m // n
    if e % step != 0:
        raise EngineInconsistencyError("rotation exponent is not a multiple of m/n")
    return (e // step) % n


def _classify_pair(group: FiniteGroup, p, q) -> SingularityType | None:
    """Oriented type of the fixed point (p, q), or None if the pair is free."""
    inter = intersect_subgroups(group, p.stabilizer, q.stabilizer)
    n = inter.order
    if n == 1:
        return None
    for h in sorted(inter.members):
        if element_order(group, h) != n:
            continue
        if rotation_exponent(group, p.rotation_generator, h, n) == 1:
            a = rotation_exponent(group, q.rotation_generator, h, n)
            return SingularityType(n, a)
    raise EngineInconsistencyError("no stabilizer generator with rotation exponent 1")


def enumerate_singularities(sys1: SphericalSystem, sys2: SphericalSystem) -> SingularLocus:
    """Classify all G-orbits of fixed points on C1 x C2, cell by branch-pair cell."""
    if sys1.group is not sys2.group:
        raise ValidationError("systems must be over the same group")
    require_valid(sys1)
    require_valid(sys2)
    group = sys1.group
    points: list[SingularPoint] = []
    free_counts: dict[tuple[int, int], int] = {}
    for i in range(1, sys1.branch_count + 1):
        fiber1 = branch_fiber(sys1, i)
        sub1 = cyclic_subgroup(group, sys1.generators[i - 1])
        for j in range(1, sys2.branch_count + 1):
            fiber2 = branch_fiber(sys2, j)
            sub2 = cyclic_subgroup(group, sys2.generators[j - 1])
            by_rep = {p.coset_rep: p for p in fiber1}
            by_rep2 = {q.coset_rep: q for q in fiber2}
            fixed = []
            for p in fiber1:
                for q in fiber2:
                    t = _classify_pair(group, p, q)
                    if t is not None:
                        fixed.append(((p.coset_rep, q.coset_rep), t))
            free_pairs = len(fiber1) * len(fiber2) - len(fixed)
            if free_pairs % group.order != 0:
                raise EngineInconsistencyError("free coset pairs do not split into full orbits")
            free_counts[(i, j)] = free_pairs // group.order
            if not fixed:
                continue
            types = dict(fixed)

            def act(g: int, pair: tuple[int, int]) -> tuple[int, int]:
                s, t_ = pair
                return (
                    coset_of(group, sub1, group.mul(g, s)),
                    coset_of(group, sub2, group.mul(g, t_)),
                )

            for orbit in orbit_partition(group, [pair for pair, _ in fixed], act):
                rep = orbit[0]
                t = types[rep]
                if len(orbit) * t.n != group.order:
                    raise EngineInconsistencyError(
                        f"orbit size {len(orbit)} inconsistent with stabilizer order {t.n}"
                    )
                if any(types[other] != t for other in orbit):
                    raise EngineInconsistencyError("type varies along a G-orbit")
                points.append(SingularPoint((i, j), t, len(orbit), rep))
    return SingularLocus(tuple(points), free_counts)
