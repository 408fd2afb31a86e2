"""Closed-form and isoperimetric bounds on the cooling number.

The node-isoperimetric profile ``phi`` of a graph maps each size ``s`` to the
smallest possible border of an ``s``-node subset. Feeding the profile into
the recurrence ``x_1 = 1``, ``x_{i+1} = x_i + phi[x_i] + 1`` yields the
smallest index ``I`` with ``x_I >= n``, which upper-bounds the cooling number:
from any round boundary, one spread plus one mandatory source cools at least
``phi`` plus one nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, NamedTuple

from .generators import gen_grid, simplicial_order
from .graphs import DisconnectedGraphError, Graph, diameter
from .solver import (
    DEFAULT_BURNING_MAX_NODES,
    SearchLimits,
    burning_number,
)

DEFAULT_PROFILE_CAP = 16


class ProfileSizeError(ValueError):
    """Exact profile enumeration refused; use a family-specific profile
    (e.g. :func:`grid_iso_profile`) for larger instances."""


def node_border(g: Graph, nodes: AbstractSet[int]) -> frozenset[int]:
    """Nodes outside ``nodes`` adjacent to at least one member of it."""
    out: set[int] = set()
    for v in nodes:
        out.update(g.adj[v])
    return frozenset(out - set(nodes))


@dataclass(frozen=True)
class IsoProfile:
    """The vector ``phi[s]`` for ``s = 0..n`` (``phi[0] = phi[n] = 0``)."""

    n: int
    phi: tuple[int, ...]

    @property
    def peak(self) -> int:
        return max(self.phi)

    def smoothness_violations(self) -> list[tuple[int, int]]:
        """All ``(x, y)`` with ``phi[x] - y > phi[x + y]``; empty for real graphs."""
        bad = []
        for x in range(1, self.n + 1):
            for y in range(0, self.n - x + 1):
                if self.phi[x] - y > self.phi[x + y]:
                    bad.append((x, y))
        return bad


def iso_profile_exact(g: Graph, cap: int = DEFAULT_PROFILE_CAP) -> IsoProfile:
    """Exact profile by enumerating all subsets, bucketed by size.

    Runs in ``O(2^n)``; refuses graphs above ``cap`` nodes.
    """
    n = g.n
    if n > cap:
        raise ProfileSizeError(
            f"exact profile enumerates 2^{n} subsets; cap is {cap}. "
            "Use a family-specific profile such as grid_iso_profile."
        )
    masks = g.neighbor_masks
    size = 1 << n
    neigh = [0] * size  # union of neighborhoods over members, by subset
    best = [n + 1] * (n + 1)
    best[0] = 0
    for s in range(1, size):
        low = s & -s
        nb = neigh[s ^ low] | masks[low.bit_length() - 1]
        neigh[s] = nb
        b = (nb & ~s).bit_count()
        k = s.bit_count()
        if b < best[k]:
            best[k] = b
    return IsoProfile(n, tuple(best))


def grid_iso_profile(n: int) -> IsoProfile:
    """Profile of the n x n grid via simplicial-order prefixes.

    Prefixes of the simplicial order realize the minimum border at every
    size, so tracking the border incrementally gives the whole profile in
    ``O(n^2)``.
    """
    g = gen_grid(n)
    order = simplicial_order(n)
    in_set = bytearray(g.n)
    in_border = bytearray(g.n)
    border = 0
    phi = [0] * (g.n + 1)
    for i, v in enumerate(order, start=1):
        if in_border[v]:
            in_border[v] = 0
            border -= 1
        in_set[v] = 1
        for w in g.adj[v]:
            if not in_set[w] and not in_border[w]:
                in_border[w] = 1
                border += 1
        phi[i] = border
    return IsoProfile(g.n, tuple(phi))


class IsoUpperBound(NamedTuple):
    """Recurrence-based upper bound with its trajectory ``x_1..x_I``."""

    value: int
    trajectory: tuple[int, ...]


def iso_upper_bound(profile: IsoProfile) -> IsoUpperBound:
    """Smallest ``I`` with ``x_I >= n`` under ``x_{i+1} = x_i + phi[x_i] + 1``."""
    xs = [1]
    while xs[-1] < profile.n:
        xs.append(xs[-1] + profile.phi[xs[-1]] + 1)
    return IsoUpperBound(len(xs), tuple(xs))


@dataclass(frozen=True)
class BoundsReport:
    """Every bound on the cooling number we can compute for one graph."""

    n: int
    diameter: int
    order_upper: int
    diam_lower: int
    diam_upper: int
    iso_upper: int | None
    iso_trajectory: tuple[int, ...] | None
    burning_lower: int | None
    skipped: tuple[str, ...]

    def best_lower(self) -> int:
        lowers = [self.diam_lower]
        if self.burning_lower is not None:
            lowers.append(self.burning_lower)
        return max(lowers)

    def best_upper(self) -> int:
        uppers = [self.order_upper, self.diam_upper]
        if self.iso_upper is not None:
            uppers.append(self.iso_upper)
        return min(uppers)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "diameter": self.diameter,
            "order_upper": self.order_upper,
            "diam_lower": self.diam_lower,
            "diam_upper": self.diam_upper,
            "iso_upper": self.iso_upper,
            "iso_trajectory": list(self.iso_trajectory) if self.iso_trajectory else None,
            "burning_lower": self.burning_lower,
            "skipped": list(self.skipped),
        }


def bounds_report(g: Graph, *, iso_cap: int = DEFAULT_PROFILE_CAP,
                  burning_cap: int = DEFAULT_BURNING_MAX_NODES,
                  include_burning: bool = True) -> BoundsReport:
    """Assemble all computable bounds, listing the ones skipped for size."""
    if not g.is_connected:
        raise DisconnectedGraphError("bounds need a connected graph")
    d = diameter(g)
    skipped: list[str] = []
    iso_value = None
    iso_traj = None
    if g.n <= iso_cap:
        bound = iso_upper_bound(iso_profile_exact(g, cap=iso_cap))
        iso_value, iso_traj = bound.value, bound.trajectory
    else:
        skipped.append("iso_upper")
    burn = None
    if include_burning and g.n <= burning_cap:
        burn = burning_number(g, SearchLimits(max_nodes=burning_cap)).value
    else:
        skipped.append("burning_lower")
    return BoundsReport(
        n=g.n,
        diameter=d,
        order_upper=(g.n + 2) // 2,
        diam_lower=(d + 3) // 2,
        diam_upper=d + 1,
        iso_upper=iso_value,
        iso_trajectory=iso_traj,
        burning_lower=burn,
        skipped=tuple(skipped),
    )
