"""Divisor bounds for orders of the canonical bundles over edge spaces.

Pure big-integer arithmetic.  Only the bound formulas are evaluated; no
characteristic classes are computed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .hypergraphs import sheet_counts_ok as sheet_count_check

__all__ = [
    "DEFAULT_EMBEDDING_DIMENSION",
    "Euclidean",
    "OrderBound",
    "RealProjective",
    "RealProjectiveTimesEuclidean",
    "Sphere",
    "Surface",
    "a_coeff",
    "embedding_dimension_bound",
    "order_bound",
    "rho",
    "sheet_count_check",
]

# Embedding dimensions used when the caller does not supply one for the
# projective-space bounds.  Reference data, overridable: the values for
# m <= 3 are the known minima; beyond that the always-valid 2m bound is
# used rather than sharper published results.
DEFAULT_EMBEDDING_DIMENSION = {1: 2, 2: 4, 3: 5, 4: 8, 5: 10, 6: 12, 7: 14}


def rho(k: int) -> int:
    """Count of 1 <= j <= k with j congruent to 0, 1, 2 or 4 mod 8."""
    if k < 0:
        raise ValueError("rho is defined for non-negative integers")
    return sum(1 for j in range(1, k + 1) if j % 8 in (0, 1, 2, 4))


def _primes_upto(n: int) -> list[int]:
    sieve = [True] * (n + 1)
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, n + 1, p):
                sieve[q] = False
    return out


def a_coeff(m: int, n: int) -> int:
    """2^rho(m-1) times the product over odd primes p <= n of p^[(m-1)/2]."""
    if m < 1 or n < 1:
        raise ValueError("a_coeff requires m, n >= 1")
    value = 1 << rho(m - 1)
    exponent = (m - 1) // 2
    for p in _primes_upto(n):
        if p >= 3:
            value *= p**exponent
    return value


@dataclass(frozen=True)
class Surface:
    genus: int

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("surface bound requires genus >= 1")


@dataclass(frozen=True)
class Euclidean:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("dimension must be positive")


@dataclass(frozen=True)
class Sphere:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("dimension must be positive")


@dataclass(frozen=True)
class RealProjective:
    m: int
    n_embed: int | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("dimension must be positive")
        if self.n_embed is not None and self.n_embed < self.m + 1:
            raise ValueError("embedding dimension must be at least m + 1")


@dataclass(frozen=True)
class RealProjectiveTimesEuclidean:
    m: int
    k: int
    n_embed: int | None = None

    def __post_init__(self):
        if self.m < 1 or self.k < 1:
            raise ValueError("dimensions must be positive")
        if self.n_embed is not None and self.n_embed < self.m + 1:
            raise ValueError("embedding dimension must be at least m + 1")


SpaceDescriptor = Surface | Euclidean | Sphere | RealProjective | RealProjectiveTimesEuclidean


@dataclass(frozen=True)
class OrderBound:
    """o(xi(H_n)) divides `bound` for every level-n edge space."""

    bound: int

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("a divisor bound must be positive")


def _embedding_dimension(m: int, supplied: int | None) -> int:
    if supplied is not None:
        return supplied
    if m in DEFAULT_EMBEDDING_DIMENSION:
        return DEFAULT_EMBEDDING_DIMENSION[m]
    raise ValueError(
        f"no default embedding dimension for m={m}; pass n_embed explicitly"
    )


def order_bound(space: SpaceDescriptor, n: int) -> OrderBound:
    """The divisor bound for the order of the level-n bundle over `space`."""
    if n < 1:
        raise ValueError("level n must be positive")
    if isinstance(space, Surface):
        return OrderBound(4)
    if isinstance(space, Euclidean):
        return OrderBound(a_coeff(space.m, n))
    if isinstance(space, Sphere):
        m = space.m
        return OrderBound((1 << (rho(m) - rho(m - 1))) * a_coeff(m, n))
    if isinstance(space, RealProjective):
        m = space.m
        big_n = _embedding_dimension(m, space.n_embed)
        return OrderBound((1 << (rho(big_n - 1) - rho(m))) * a_coeff(m + 1, n))
    if isinstance(space, RealProjectiveTimesEuclidean):
        m, k = space.m, space.k
        big_n = _embedding_dimension(m, space.n_embed)
        if (m + k) % 2 == 0:
            warnings.warn(
                "odd-prime exponent (m+k-1)/2 is not integral; using the floor",
                RuntimeWarning,
                stacklevel=2,
            )
        exponent = (m + k - 1) // 2
        value = 1 << rho(big_n + k - 1)
        for p in _primes_upto(n):
            if p >= 3:
                value *= p**exponent
        return OrderBound(value)
    raise TypeError(f"unknown space descriptor {space!r}")


def embedding_dimension_bound(t: int, k: int) -> int:
    """Ambient dimension forced by a nonzero degree-t dual class: t + k."""
    if t < 0:
        raise ValueError("class degree must be non-negative")
    if k < 1:
        raise ValueError("regularity k must be positive")
    return t + k
