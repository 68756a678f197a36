"""Series graded by symmetric-function degree, one homogeneous component per n."""

from __future__ import annotations

from .symseries import SymSeries


class GradedSeries:
    """Components indexed by n >= 2, each homogeneous of degree n."""

    __slots__ = ("n_max", "components")

    def __init__(self, n_max: int, components: dict[int, SymSeries]):
        self.n_max = n_max
        comps: dict[int, SymSeries] = {}
        for n, s in components.items():
            if n > n_max:
                continue
            if not s.is_homogeneous(n):
                raise ValueError(f"component {n} is not homogeneous of degree {n}")
            if s:
                comps[n] = s.truncate(n_max)
        self.components = comps

    def component(self, n: int) -> SymSeries:
        return self.components.get(n, SymSeries.zero(self.n_max))

    def total(self) -> SymSeries:
        """All components summed into a single series."""
        acc = SymSeries.zero(self.n_max)
        for n in sorted(self.components):
            acc = acc + self.components[n]
        return acc

    @classmethod
    def split(cls, s: SymSeries, n_min: int = 2) -> "GradedSeries":
        """Slice a series into its homogeneous degree components from n_min up."""
        comps = {n: s.homogeneous_part(n) for n in s.degrees() if n >= n_min}
        return cls(s.n_max, comps)

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        n_max = min(self.n_max, other.n_max)
        comps = {}
        for n in set(self.components) | set(other.components):
            if n <= n_max:
                comps[n] = self.component(n).truncate(n_max) + other.component(n).truncate(n_max)
        return GradedSeries(n_max, comps)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedSeries)
            and self.n_max == other.n_max
            and self.components == other.components
        )

    def is_zero(self) -> bool:
        return not self.components

    def __repr__(self) -> str:
        ns = sorted(self.components)
        return f"GradedSeries(n_max={self.n_max}, degrees={ns})"
