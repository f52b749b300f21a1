"""Arcs over a marked line segment: the linearly oriented type-A model.

Modules over the linearly oriented A_m quiver correspond to arcs [i,j]
(j >= i+2) over a segment with marked points 0..m+1.  Ext^1 is 0 or 1 and
detected by a single negative crossing; tilting sets are triangulations of
the (m+2)-gon; torsion pairs come from shortening closures.  These
functions also power wing-level computations inside a tube, since every
wing of width at most n+1 is equivalent to such a module category.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class AArc:
    i: int
    j: int

    def __str__(self) -> str:
        return f"[{self.i},{self.j}]"


def check_arc(m: int, x: AArc) -> None:
    if not (0 <= x.i and x.j <= m + 1 and x.j >= x.i + 2):
        raise ValueError(f"arc {x} does not fit on a segment with points 0..{m + 1}")


def all_arcs(m: int) -> List[AArc]:
    """Every arc on the segment, in lexicographic order."""
    return [AArc(i, j) for i in range(0, m) for j in range(i + 2, m + 2)]


def crossing(x: AArc, y: AArc) -> bool:
    return x.i < y.i < x.j < y.j or y.i < x.i < y.j < x.j


def ext_dim(x: AArc, y: AArc) -> int:
    """1 iff the crossing is negative from x's side: y.i < x.i < y.j < x.j."""
    return 1 if y.i < x.i < y.j < x.j else 0


def ses_middle(x: AArc, y: AArc) -> frozenset:
    """Middle-term arcs of the non-split extension of x by y.

    Two arcs [y.i, x.j] and [x.i, y.j] in general; the second degenerates
    (is a boundary segment) when y.j == x.i + 1.
    """
    if ext_dim(x, y) != 1:
        raise ValueError(f"no extension of {x} by {y}")
    mids = {AArc(y.i, x.j)}
    if y.j > x.i + 1:
        mids.add(AArc(x.i, y.j))
    return frozenset(mids)


def tau(x: AArc) -> Optional[AArc]:
    """One step left, or None at the left wall."""
    return AArc(x.i - 1, x.j - 1) if x.i >= 1 else None


def tau_inv(m: int, x: AArc) -> Optional[AArc]:
    return AArc(x.i + 1, x.j + 1) if x.j + 1 <= m + 1 else None


def hom_nonzero(x: AArc, y: AArc) -> bool:
    """Uniseriality: a nonzero map factors as left-shortening then inclusion."""
    return x.i <= y.i <= x.j - 2 and y.i + 2 <= x.j <= y.j


def injective_arcs(m: int) -> List[AArc]:
    """The fan at the right endpoint: arcs [i, m+1]."""
    return [AArc(i, m + 1) for i in range(m)]


def projective_arcs(m: int) -> List[AArc]:
    """The fan at the left endpoint: arcs [0, j]."""
    return [AArc(0, j) for j in range(2, m + 2)]


def left_closure(arcs) -> frozenset:
    out = set()
    for x in arcs:
        for i in range(x.i, x.j - 1):
            out.add(AArc(i, x.j))
    return frozenset(out)


def right_closure(arcs) -> frozenset:
    out = set()
    for x in arcs:
        for j in range(x.i + 2, x.j + 1):
            out.add(AArc(x.i, j))
    return frozenset(out)


def enumerate_tilting(m: int) -> List[frozenset]:
    """All tilting sets: maximal noncrossing m-subsets containing [0, m+1].

    Backtracking over the lexicographically ordered arc list with a
    compatibility bitmask per arc; output sorted for determinism.
    """
    if m == 0:
        return [frozenset()]
    arcs = all_arcs(m)
    total = len(arcs)
    masks = []
    for a, xa in enumerate(arcs):
        mask = 0
        for b, xb in enumerate(arcs):
            if a != b and not crossing(xa, xb):
                mask |= 1 << b
        masks.append(mask)
    base = arcs.index(AArc(0, m + 1))
    results: List[frozenset] = []

    def extend(chosen: List[int], cand: int) -> None:
        if len(chosen) == m:
            results.append(frozenset(arcs[t] for t in chosen))
            return
        if len(chosen) + cand.bit_count() < m:
            return
        c = cand
        while c:
            t = (c & -c).bit_length() - 1
            c &= c - 1
            extend(chosen + [t], c & masks[t])

    extend([base], masks[base])
    results.sort(key=lambda s: sorted((x.i, x.j) for x in s))
    return results


def is_tilting(m: int, arcs) -> bool:
    arcs = set(arcs)
    if len(arcs) != m or (m > 0 and AArc(0, m + 1) not in arcs):
        return False
    items = sorted(arcs, key=lambda a: (a.i, a.j))
    for p, x in enumerate(items):
        for y in items[p + 1:]:
            if crossing(x, y):
                return False
    return True


def torsion_pair_of_tilting(m: int, tilting) -> Tuple[frozenset, frozenset]:
    """(Gen U, Cogen tau(U)): close U under left-shortening; shift U one step
    left (dropping arcs at the wall) and close under right-shortening."""
    t_part = left_closure(tilting)
    shifted = [tau(x) for x in tilting if x.i >= 1]
    f_part = right_closure(shifted)
    return t_part, f_part


def second_torsion_pair_of_tilting(m: int, tilting) -> Tuple[frozenset, frozenset]:
    """(Gen tau^{-1}(U), Cogen U), the companion map."""
    shifted = [tau_inv(m, x) for x in tilting if x.j + 1 <= m + 1]
    t_part = left_closure(shifted)
    f_part = right_closure(tilting)
    return t_part, f_part


def tilting_of_torsion_pair(m: int, t_part) -> frozenset:
    """Ext-projective arcs of a torsion class containing every injective arc."""
    t_part = frozenset(t_part)
    if not is_torsion_class(t_part):
        raise ValueError("input is not a torsion class")
    if not set(injective_arcs(m)) <= t_part:
        raise ValueError("torsion class must contain every injective arc")
    items = sorted(t_part, key=lambda a: (a.i, a.j))
    return frozenset(
        x for x in items if all(ext_dim(x, y) == 0 for y in items)
    )


def is_oriented_ptolemy(arcs) -> bool:
    """Closed under resolving negative crossings."""
    arcs = frozenset(arcs)
    for x in arcs:
        for y in arcs:
            if ext_dim(x, y) == 1 and not ses_middle(x, y) <= arcs:
                return False
    return True


def is_torsion_class(arcs) -> bool:
    arcs = frozenset(arcs)
    return is_oriented_ptolemy(arcs) and left_closure(arcs) <= arcs


def is_torsionfree_class(arcs) -> bool:
    arcs = frozenset(arcs)
    return is_oriented_ptolemy(arcs) and right_closure(arcs) <= arcs


def is_torsion_pair(m: int, t_part, f_part) -> bool:
    """Exact mutual-perp test over the whole (finite) arc set."""
    t_part, f_part = frozenset(t_part), frozenset(f_part)
    universe = all_arcs(m)
    right = frozenset(
        y for y in universe if all(not hom_nonzero(t, y) for t in t_part)
    )
    left = frozenset(
        x for x in universe if all(not hom_nonzero(x, f) for f in f_part)
    )
    return right == f_part and left == t_part
