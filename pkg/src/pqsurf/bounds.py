"""Degree bounds and genus checks for the basis curves of a surface model.

Verifies, curve by curve, the inequality (K - E).C <= 2(2g(C) - 2) for
curves not contained in the exceptional divisor, together with the
tangent-case arithmetic for central components (K_Y.Y, Y.E, Y^2 and the
non-negative string defect r - sum a_i/n_i) and the two-route genus
cross-check (adjunction on S against Riemann-Hurwitz for the quotient of
the opposite curve by the local stabilizer).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .covers import branch_fiber, rh_genus
from .errors import EngineInconsistencyError, ValidationError
from .groups import cyclic_subgroup, intersect_subgroups
from .surface import BasisCurve, DivisorClass, SurfaceModel


@dataclass(frozen=True)
class TangentCaseData:
    ky_dot_y: Fraction  # K_Y.Y = (K_S + Y).Y
    y_dot_e: Fraction
    y_sq: Fraction
    string_defect: Fraction  # r - sum a_i/n_i, must be >= 0


@dataclass(frozen=True)
class CurveReport:
    curve: BasisCurve
    genus: int
    kme_degree: Fraction  # (K - E).C
    bound: int  # 2(2g - 2)
    satisfied: bool
    n1_e: int  # strings meeting the curve, counted without multiplicities
    tangent_case: TangentCaseData | None = None

    def to_json(self) -> dict:
        out = {
            "curve": self.curve.label,
            "genus": self.genus,
            "KmE_degree": str(self.kme_degree),
            "bound": self.bound,
            "satisfied": self.satisfied,
            "N1_E": self.n1_e,
        }
        if self.tangent_case is not None:
            out["tangent_case"] = {
                "KY_dot_Y": str(self.tangent_case.ky_dot_y),
                "Y_dot_E": str(self.tangent_case.y_dot_e),
                "Y_sq": str(self.tangent_case.y_sq),
                "string_defect": str(self.tangent_case.string_defect),
            }
        return out


def degree_bound_report(model: SurfaceModel, curve: BasisCurve) -> CurveReport:
    if curve.kind == "Z":
        raise ValidationError("string components lie inside E; the bound excludes them")
    k = model.canonical_class()
    e = model.exceptional_class()
    d = DivisorClass.of(curve)
    genus = model.adjunction_genus(curve)
    kme = model.intersect(k - e, d)
    bound = 2 * (2 * genus - 2)
    tangent = None
    if curve.kind in ("N", "M"):
        y_sq = model.intersect(d, d)
        y_dot_e = model.intersect(d, e)
        ky_dot_y = model.intersect(k + d, d)
        defect = _string_defect(model, curve)
        if y_dot_e + y_sq != defect:
            raise EngineInconsistencyError(
                f"Y.E + Y^2 = {y_dot_e + y_sq} != r - sum a/n = {defect} on {curve.label}"
            )
        tangent = TangentCaseData(ky_dot_y, y_dot_e, y_sq, defect)
    return CurveReport(
        curve=curve,
        genus=genus,
        kme_degree=kme,
        bound=bound,
        satisfied=kme <= bound,
        n1_e=len(model.strings_meeting(curve)),
        tangent_case=tangent,
    )


def _string_defect(model: SurfaceModel, curve: BasisCurve) -> Fraction:
    defect = Fraction(0)
    for data in model.strings:
        i, j = data.branch_pair
        if curve.kind == "N" and i == curve.index:
            defect += 1 - Fraction(data.type.a, data.type.n)
        elif curve.kind == "M" and j == curve.index:
            a_dual = pow(data.type.a, -1, data.type.n)
            defect += 1 - Fraction(a_dual, data.type.n)
    return defect


@dataclass(frozen=True)
class GenusCrossCheck:
    curve: BasisCurve
    adjunction_genus: int
    rh_genus: int

    @property
    def equal(self) -> bool:
        return self.adjunction_genus == self.rh_genus


def central_component_genus_crosscheck(model: SurfaceModel, curve: BasisCurve) -> GenusCrossCheck:
    """Genus of a central component two ways: adjunction on S, and Riemann-Hurwitz
    for (opposite curve)/H with H the cyclic group of the branch generator."""
    if curve.kind not in ("N", "M"):
        raise ValidationError("cross-check applies to central components only")
    adj = model.adjunction_genus(curve)
    if curve.kind == "N":
        own, other = model.sys1, model.sys2
    else:
        own, other = model.sys2, model.sys1
    group = own.group
    h = cyclic_subgroup(group, own.generators[curve.index - 1])
    genus_cover = rh_genus(other)
    ramification = 0
    for j in range(1, other.branch_count + 1):
        for point in branch_fiber(other, j):
            ramification += intersect_subgroups(group, h, point.stabilizer).order - 1
    two_g_minus_2 = Fraction(2 * genus_cover - 2 - ramification, h.order)
    if two_g_minus_2.denominator != 1 or (int(two_g_minus_2) + 2) % 2 != 0:
        raise EngineInconsistencyError(f"Riemann-Hurwitz gives 2g - 2 = {two_g_minus_2}")
    rh = (int(two_g_minus_2) + 2) // 2
    check = GenusCrossCheck(curve, adj, rh)
    if not check.equal:
        raise EngineInconsistencyError(
            f"genus mismatch on {curve.label}: adjunction {adj}, Riemann-Hurwitz {rh}"
        )
    return check


@dataclass(frozen=True)
class LemmaCCReport:
    genera: tuple[tuple[str, int], ...]
    asserted: bool  # whether the non-rationality claim was in scope
    violations: tuple[str, ...]

    @property
    def all_nonrational(self) -> bool:
        return not self.violations


def lemma_cc_check(model: SurfaceModel, in_scope: bool) -> LemmaCCReport:
    """Report central-component genera; assert genus >= 1 only when the caller
    declares the surface in the P_g = 0, c_1^2 = 6 class."""
    genera = []
    violations = []
    for curve in model.N + model.M:
        g = model.adjunction_genus(curve)
        genera.append((curve.label, g))
        if g == 0:
            violations.append(curve.label)
    return LemmaCCReport(tuple(genera), in_scope, tuple(violations))


def solve_two_branch_elliptic(genus_cover: int) -> list[tuple[int, int]]:
    """Admissible (|H|, g(Y)) for 2g(C) - 2 = |H| (2g(Y) - 1) with two branch
    points of multiplicity 2 on the quotient: |H| >= 2, g(Y) >= 0 integers."""
    target = 2 * genus_cover - 2
    if target <= 0:
        raise ValidationError("need a cover of genus >= 2")
    out = []
    for h in range(2, target + 1):
        if target % h != 0:
            continue
        rem = target // h
        if rem % 2 == 1:
            out.append((h, (rem + 1) // 2))
    return out
