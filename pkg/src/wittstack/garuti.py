"""Boundary divisors on Garuti's compactification tower.

Only the free abelian group on the classes Sigma_1..Sigma_n is modelled.
Generator ``i`` at level ``n`` stands for the total transform of Sigma_i
pulled back along the tower maps, so pulling back along ``r`` keeps
coefficients and raises the level.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError


@dataclass(frozen=True)
class TowerDivisor:
    level: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.level < 1:
            raise DomainError("tower level must be at least 1")
        clean = {int(i): int(c) for i, c in self.coeffs.items() if c}
        if any(not 1 <= i <= self.level for i in clean):
            raise DomainError(f"generator index outside 1..{self.level}")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def sigma(cls, i: int, level: int) -> TowerDivisor:
        return cls(level, {i: 1})

    def __add__(self, other: TowerDivisor) -> TowerDivisor:
        if self.level != other.level:
            raise DomainError("adding divisors on different levels")
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) + c
        return TowerDivisor(self.level, out)

    def scale(self, k: int) -> TowerDivisor:
        return TowerDivisor(self.level, {i: k * c for i, c in self.coeffs.items()})

    def __rmul__(self, k: int) -> TowerDivisor:
        return self.scale(k)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in sorted(self.coeffs, reverse=True):
            c = self.coeffs[i]
            term = f"Σ_{i}" if abs(c) == 1 else f"{abs(c)}·Σ_{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def to_json(self):
        return {"level": self.level, "coeffs": {str(i): c for i, c in sorted(self.coeffs.items())}}


def pull_r(d: TowerDivisor) -> TowerDivisor:
    """Pullback along the P^1-bundle map from level n to level n+1."""
    return TowerDivisor(d.level + 1, d.coeffs)


def pull_psi(d: TowerDivisor, p: int) -> TowerDivisor:
    """Pullback along the degree-p^n cover: every Sigma_i picks up a factor p."""
    return d.scale(p)


def boundary(n: int, p: int) -> TowerDivisor:
    """``B_1 = Sigma_1`` and ``B_n = Sigma_n + p r^* B_(n-1)``."""
    if n < 1:
        raise DomainError("n must be at least 1")
    b = TowerDivisor.sigma(1, 1)
    for k in range(2, n + 1):
        b = TowerDivisor.sigma(k, k) + p * pull_r(b)
    return b


def boundary_closed_form(n: int, p: int) -> TowerDivisor:
    if n < 1:
        raise DomainError("n must be at least 1")
    return TowerDivisor(n, {i: p ** (n - i) for i in range(1, n + 1)})
