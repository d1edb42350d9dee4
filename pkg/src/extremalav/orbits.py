"""The multiplicative action of (Z/p)^* on CM types.

Two CM types give isomorphic polarized lattices exactly when one is a
multiplicative translate of the other, so classification happens at the level
of orbits.  The orbit count is cross-checked by a Burnside (orbit-counting
lemma) computation that never touches the enumeration: a translate-by-k fixed
point is a union of <k>-cosets, and negation pairs those cosets up whenever
-1 is outside <k>.
"""

from dataclasses import dataclass

from .cmtypes import DEFAULT_ENUMERATION_CAP, CmType, enumerate_cm_types
from .fp import PrimeContext, element_order, subgroup_generated


def act(ctx: PrimeContext, k: int, cm: CmType) -> CmType:
    """Translate a CM type by the unit k: every member s becomes k*s mod p."""
    ctx.check_residue(k)
    return CmType(ctx, tuple(k * s % ctx.p for s in cm.members))


def canonical_form(ctx: PrimeContext, cm: CmType) -> CmType:
    """The lexicographically smallest translate of ``cm``.

    Orbit-constant by construction, hence a canonical orbit representative.
    """
    best = cm.members
    for k in range(2, ctx.p):
        candidate = tuple(sorted(k * s % ctx.p for s in cm.members))
        if candidate < best:
            best = candidate
    return CmType(ctx, best)


@dataclass(frozen=True)
class Stabilizer:
    """The subgroup of units fixing a CM type setwise."""

    elements: tuple[int, ...]
    order: int
    generator: int

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "order": self.order,
            "generator": self.generator,
        }


def stabilizer(ctx: PrimeContext, cm: CmType) -> Stabilizer:
    """Stabilizer of ``cm`` under translation, with its smallest generator.

    The subgroup is cyclic, so the generator is the smallest residue whose
    order equals the subgroup order.  -1 never stabilizes a CM type (it maps
    the type onto its complement), so the order always divides g.
    """
    mask = cm.mask
    elements = []
    for k in range(1, ctx.p):
        m = 0
        for s in cm.members:
            m |= 1 << (k * s % ctx.p)
        if m == mask:
            elements.append(k)
    order = len(elements)
    generator = min(k for k in elements if element_order(ctx, k) == order)
    return Stabilizer(tuple(elements), order, generator)


@dataclass(frozen=True)
class OrbitClass:
    """One orbit of CM types under the multiplicative action."""

    canonical: CmType
    orbit_size: int
    stabilizer: Stabilizer

    def to_json(self) -> dict:
        return {
            "canonical": list(self.canonical.members),
            "orbit_size": self.orbit_size,
            "stabilizer": list(self.stabilizer.elements),
            "stabilizer_order": self.stabilizer.order,
        }


def orbit_classes(ctx: PrimeContext, cap: int = DEFAULT_ENUMERATION_CAP) -> list[OrbitClass]:
    """All orbits, sorted by canonical representative.

    Sweeps the lexicographic enumeration and emits a class the first time an
    orbit is met; since the sweep is lexicographic, that first member is the
    canonical representative.
    """
    seen: set[tuple[int, ...]] = set()
    classes = []
    for cm in enumerate_cm_types(ctx, cap):
        if cm.members in seen:
            continue
        orbit = {tuple(sorted(k * s % ctx.p for s in cm.members)) for k in range(1, ctx.p)}
        seen |= orbit
        canonical = CmType(ctx, min(orbit))
        classes.append(OrbitClass(canonical, len(orbit), stabilizer(ctx, canonical)))
    return classes


def burnside_count(ctx: PrimeContext) -> int:
    """Number of orbits, via the orbit-counting lemma in closed form.

    Translation by k fixes a CM type iff the type is a union of <k>-cosets
    containing one coset of each negation-paired couple; that is impossible
    when -1 lies in <k>, and otherwise leaves 2**((p-1)/(2*ord(k))) choices.
    """
    p = ctx.p
    total = 0
    for k in range(1, p):
        subgroup = subgroup_generated(ctx, k)
        if p - 1 in subgroup:
            continue
        total += 2 ** ((p - 1) // (2 * len(subgroup)))
    if total % (p - 1):
        raise ArithmeticError(f"fixed-point total {total} not divisible by {p - 1}")
    return total // (p - 1)
