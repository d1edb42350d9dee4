"""Arithmetic in the multiplicative group of integers modulo an odd prime.

Everything downstream works with residues 1..p-1 of an odd prime p = 2g+1
and needs element orders and cyclic subgroups, exactly and cheaply.
"""

from dataclasses import dataclass, field


def is_prime(n: int) -> bool:
    """Trial-division primality test; plenty for the sizes handled here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime p together with g = (p-1)/2."""

    p: int
    g: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p) or self.p < 3:
            raise ValueError(f"p must be an odd prime, got {self.p!r}")
        object.__setattr__(self, "g", (self.p - 1) // 2)

    def check_residue(self, k: int) -> int:
        """Validate that k is a unit residue, i.e. 1 <= k <= p-1."""
        if not isinstance(k, int) or not 1 <= k <= self.p - 1:
            raise ValueError(f"residue out of range 1..{self.p - 1}: {k!r}")
        return k


def element_order(ctx: PrimeContext, k: int) -> int:
    """Multiplicative order of k modulo p."""
    ctx.check_residue(k)
    order, acc = 1, k % ctx.p
    while acc != 1:
        acc = acc * k % ctx.p
        order += 1
    return order


def subgroup_generated(ctx: PrimeContext, k: int) -> tuple[int, ...]:
    """The cyclic subgroup <k> of (Z/p)^*, as a sorted tuple of residues."""
    ctx.check_residue(k)
    elements = {1}
    acc = k % ctx.p
    while acc not in elements:
        elements.add(acc)
        acc = acc * k % ctx.p
    return tuple(sorted(elements))
