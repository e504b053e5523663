"""
Permutations of tensor legs: τ, ξ, ξ² and the general Φσ.
"""

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidPermutation


@dataclass(frozen=True)
class LegPermutation:
    """
    A permutation of the output legs of an arity-2 or arity-3 map.

    ``source[t-1]`` names the input leg (1-based) that lands on output leg
    ``t``. With this encoding ξ(x⊗y⊗z) = y⊗z⊗x is ``source=(2, 3, 1)`` and
    Φσ(x1⊗x2⊗x3) = x_{σ⁻¹(1)}⊗x_{σ⁻¹(2)}⊗x_{σ⁻¹(3)} is ``source = σ⁻¹``.
    """

    source: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(int(s) for s in self.source))
        if len(self.source) not in (2, 3):
            raise InvalidPermutation(f"Arity must be 2 or 3, got {len(self.source)}")
        if sorted(self.source) != list(range(1, len(self.source) + 1)):
            raise InvalidPermutation(f"{self.source} is not a permutation")

    @property
    def arity(self) -> int:
        return len(self.source)

    @classmethod
    def identity(cls, arity: int) -> "LegPermutation":
        return cls(tuple(range(1, arity + 1)))

    @classmethod
    def from_sigma(cls, sigma: Sequence[int]) -> "LegPermutation":
        """Build Φσ from σ given as images ``(σ(1), σ(2), ...)``."""
        inverse = [0] * len(sigma)
        for position, image in enumerate(sigma, start=1):
            inverse[image - 1] = position
        return cls(tuple(inverse))

    def compose(self, inner: "LegPermutation") -> "LegPermutation":
        """The permutation ``self ∘ inner`` (``inner`` acts first)."""
        if inner.arity != self.arity:
            raise InvalidPermutation("Cannot compose permutations of different arity")
        return LegPermutation(tuple(inner.source[s - 1] for s in self.source))

    def inverse(self) -> "LegPermutation":
        inverse = [0] * self.arity
        for t, s in enumerate(self.source, start=1):
            inverse[s - 1] = t
        return LegPermutation(tuple(inverse))

    def power(self, n: int) -> "LegPermutation":
        result = LegPermutation.identity(self.arity)
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            result = base.compose(result)
        return result

    def axes(self) -> tuple[int, ...]:
        """Transpose axes for a coefficient array whose axis 0 is the domain."""
        return (0, *self.source)

    def __str__(self) -> str:
        return "".join(str(s) for s in self.source)


TAU = LegPermutation((2, 1))
XI = LegPermutation((2, 3, 1))
XI2 = LegPermutation((3, 1, 2))
TAU_I = LegPermutation((2, 1, 3))  # τ⊗I
I_TAU = LegPermutation((1, 3, 2))  # I⊗τ
REVERSE3 = LegPermutation((3, 2, 1))
