"""Indexing of the truncated Fock bases.

Two layouts are used throughout:

  tripartite:  Alice (2 levels) x outgoing mode (n_max+1) x infalling mode (n_max+1)
  bipartite:   Alice (2 levels) x single bosonic mode (n_max+1)

Both are row-major with Alice outermost, so the Alice partial transpose of a
bipartite matrix is a swap of its two off-diagonal half-blocks.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Truncation:
    """Highest retained occupation number per bosonic mode."""

    n_max: int

    def __post_init__(self) -> None:
        if not isinstance(self.n_max, int) or self.n_max < 0:
            raise ValueError(f"n_max must be a non-negative integer, got {self.n_max!r}")

    @property
    def levels(self) -> int:
        return self.n_max + 1

    def dimension(self, space: str) -> int:
        """Total dimension: 2*(n_max+1) bipartite, 2*(n_max+1)**2 tripartite."""
        if space == "bipartite":
            return 2 * self.levels
        if space == "tripartite":
            return 2 * self.levels * self.levels
        raise ValueError(f"unknown space {space!r}")


@dataclass(frozen=True)
class BasisIndex:
    """Occupation labels of one tripartite (or bipartite) basis ket.

    ``hor_n is None`` marks the bipartite variant Alice x mode.
    """

    alice: int
    out_n: int
    hor_n: int | None = None


def _check_occ(name: str, value: int, upper: int) -> None:
    if not 0 <= value <= upper:
        raise IndexError(f"{name}={value} outside [0, {upper}]")


def flat_index(b: BasisIndex, t: Truncation) -> int:
    """Row-major flat index, Alice outermost, infalling mode innermost."""
    _check_occ("alice", b.alice, 1)
    _check_occ("out_n", b.out_n, t.n_max)
    if b.hor_n is None:
        return b.alice * t.levels + b.out_n
    _check_occ("hor_n", b.hor_n, t.n_max)
    return (b.alice * t.levels + b.out_n) * t.levels + b.hor_n


def unflatten(index: int, t: Truncation, space: str = "tripartite") -> BasisIndex:
    """Inverse of :func:`flat_index`."""
    dim = t.dimension(space)
    if not 0 <= index < dim:
        raise IndexError(f"index {index} outside [0, {dim})")
    if space == "bipartite":
        alice, out_n = divmod(index, t.levels)
        return BasisIndex(alice=alice, out_n=out_n)
    rest, hor_n = divmod(index, t.levels)
    alice, out_n = divmod(rest, t.levels)
    return BasisIndex(alice=alice, out_n=out_n, hor_n=hor_n)


def dimension(t: Truncation, space: str) -> int:
    return t.dimension(space)
