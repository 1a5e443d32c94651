"""Branched G-covers of curves encoded by spherical systems of generators.

A spherical system over a base of genus g' is an ordered tuple of group
elements whose product (together with the commutators of the hyperbolic
pairs, when g' > 0) is the identity and which generates the group.  The
points of the cover over branch point i correspond to the left cosets of
the cyclic subgroup generated by the i-th element.

Rotation convention: the distinguished generator t*g_i*t^-1 of the
stabilizer of the coset-t point acts on the tangent line at that point as
multiplication by exp(2*pi*I/m_i).  Changing this convention swaps every
singularity type (n, a) with its dual (n, a'); the duality tests downstream
would detect the flip.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError
from .groups import (
    FiniteGroup,
    Subgroup,
    cyclic_subgroup,
    element_order,
    group_from_generators,
    left_cosets,
)


class NonIntegralGenusError(ValidationError):
    pass


class GenusTooSmallError(ValidationError):
    pass


@dataclass(frozen=True)
class SphericalSystem:
    group: FiniteGroup
    base_genus: int
    generators: tuple[int, ...]
    signature: tuple[int, ...]
    # each pair (u, v) contributes the commutator [u, v] to the long relation
    hyperbolic_pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.base_genus < 0:
            raise ValidationError("base genus must be non-negative")
        if len(self.generators) != len(self.signature):
            raise ValidationError("signature length must match generator count")
        if len(self.hyperbolic_pairs) != self.base_genus:
            raise ValidationError("need one hyperbolic pair per handle of the base")

    @property
    def branch_count(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class CoverPoint:
    """A point of the cover lying over branch point ``branch_index``."""

    branch_index: int
    coset_rep: int
    stabilizer: Subgroup
    rotation_generator: int


@dataclass(frozen=True)
class SystemReport:
    ok: bool
    violation: str | None = None


def make_system(
    group: FiniteGroup,
    generators: tuple[int, ...] | list[int],
    base_genus: int = 0,
    hyperbolic_pairs: tuple[tuple[int, int], ...] = (),
) -> SphericalSystem:
    """Build a system with the signature derived from the element orders."""
    gens = tuple(generators)
    signature = tuple(element_order(group, g) for g in gens)
    return SphericalSystem(group, base_genus, gens, signature, hyperbolic_pairs)


def validate_system(sys: SphericalSystem) -> SystemReport:
    """Check the long relation, the signature and generation; report the first failure."""
    group = sys.group
    acc = group.identity
    for u, v in sys.hyperbolic_pairs:
        comm = group.mul(group.mul(u, v), group.mul(group.inv(u), group.inv(v)))
        acc = group.mul(acc, comm)
    for g in sys.generators:
        acc = group.mul(acc, g)
    if acc != group.identity:
        return SystemReport(False, "long relation: product of generators is not the identity")
    for g, m in zip(sys.generators, sys.signature):
        if m < 2:
            return SystemReport(False, f"signature entry {m} < 2")
        if element_order(group, g) != m:
            return SystemReport(
                False, f"order mismatch: element has order {element_order(group, g)}, signature says {m}"
            )
    perms = [group.element(g) for g in sys.generators]
    for u, v in sys.hyperbolic_pairs:
        perms.extend([group.element(u), group.element(v)])
    if group_from_generators(perms, cap=group.order).order != group.order:
        return SystemReport(False, "generators do not generate the whole group")
    return SystemReport(True)


def require_valid(sys: SphericalSystem) -> None:
    report = validate_system(sys)
    if not report.ok:
        raise ValidationError(f"invalid spherical system: {report.violation}")


def rh_genus(sys: SphericalSystem) -> int:
    """Genus of the cover by Riemann-Hurwitz:
    2g - 2 = |G| (2g' - 2 + sum_i (1 - 1/m_i))."""
    total = Fraction(2 * sys.base_genus - 2)
    for m in sys.signature:
        total += 1 - Fraction(1, m)
    rhs = sys.group.order * total
    if rhs.denominator != 1 or (rhs.numerator % 2) != 0 or rhs < -2:
        raise NonIntegralGenusError(f"branching data gives 2g - 2 = {rhs}, not an admissible value")
    return (int(rhs) + 2) // 2


def require_genus_at_least_two(sys: SphericalSystem) -> int:
    g = rh_genus(sys)
    if g < 2:
        raise GenusTooSmallError(f"cover has genus {g} < 2")
    return g


def branch_fiber(sys: SphericalSystem, i: int) -> list[CoverPoint]:
    """Points of the cover over branch point i (1-based), one per left coset."""
    if not 1 <= i <= sys.branch_count:
        raise ValidationError(f"branch index {i} out of range 1..{sys.branch_count}")
    group = sys.group
    g = sys.generators[i - 1]
    base = cyclic_subgroup(group, g)
    points = []
    for t in left_cosets(group, base):
        stab = Subgroup(group, frozenset(group.conjugate(h, t) for h in base.members))
        points.append(
            CoverPoint(
                branch_index=i,
                coset_rep=t,
                stabilizer=stab,
                rotation_generator=group.conjugate(g, t),
            )
        )
    return points


def quotient_data(sys: SphericalSystem) -> tuple[int, int]:
    """(base genus, branch point count)."""
    return sys.base_genus, sys.branch_count
