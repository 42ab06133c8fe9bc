"""Cyclic-word analysis of continued-fraction periods.

Cycles are nonempty tuples of positive integers regarded as cyclic words.
Palindromy means the cyclic word equals its own reversal up to rotation
(symmetry about an element or about a gap).
"""
from __future__ import annotations

from typing import Optional, Sequence

from .cfrac import Branch, QuadForm, expand_qform, _is_square

Cycle = tuple[int, ...]


def _as_cycle(c: Sequence[int]) -> Cycle:
    t = tuple(c)
    if not t:
        raise ValueError("cycle must be nonempty")
    if any(d < 1 for d in t):
        raise ValueError(f"cycle digits must be >= 1: {t}")
    return t


def rotate(c: Sequence[int], j: int) -> Cycle:
    t = _as_cycle(c)
    j %= len(t)
    return t[j:] + t[:j]


def canonical_rotation(c: Sequence[int]) -> Cycle:
    """Lexicographically least rotation; a rotation-invariant representative."""
    t = _as_cycle(c)
    return min(rotate(t, j) for j in range(len(t)))


def is_cyclic_palindrome(c: Sequence[int]) -> bool:
    """True iff some rotation of c equals the reversal of c."""
    t = _as_cycle(c)
    rev = t[::-1]
    return any(rotate(t, j) == rev for j in range(len(t)))


def is_cyclic_reverse(c1: Sequence[int], c2: Sequence[int]) -> bool:
    """True iff some rotation of c1 equals the reversal of c2."""
    t1, t2 = _as_cycle(c1), _as_cycle(c2)
    if len(t1) != len(t2):
        return False
    rev = t2[::-1]
    return any(rotate(t1, j) == rev for j in range(len(t1)))


def shift_distance(c1: Sequence[int], c2: Sequence[int]) -> Optional[int]:
    """Minimal circular offset aligning c1 with reverse(c2), or None.

    min(j, len - j) over all j with rotate(c1, j) == reverse(c2).
    """
    t1, t2 = _as_cycle(c1), _as_cycle(c2)
    if len(t1) != len(t2):
        return None
    rev = t2[::-1]
    length = len(t1)
    hits = [j for j in range(length) if rotate(t1, j) == rev]
    if not hits:
        return None
    return min(min(j, length - j) for j in hits)


def cycle_matrix(c: Sequence[int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Left-to-right product of [[a,1],[1,0]] over the digits.

    Determinant is (-1)^len; for even lengths this is the matrix shifting
    one period of the purely periodic value onto the next.
    """
    t = _as_cycle(c)
    p, q, r, s = 1, 0, 0, 1
    for a in t:
        p, q, r, s = p * a + q, p, r * a + s, r
    return ((p, q), (r, s))


def verify_fixed_point(c: Sequence[int]) -> bool:
    """Check that the purely periodic value with cycle c is a fixed point.

    With ((P,Q),(R,S)) = cycle_matrix(c), that value X satisfies
    R*X^2 + (S-P)*X - Q = 0; expanding the "+" root of this quadratic must
    give an empty head and a cycle rotation-identical to c.
    """
    t = _as_cycle(c)
    (p, q), (r, s) = cycle_matrix(t)
    disc = (s - p) * (s - p) + 4 * r * q
    if r == 0 or disc <= 0 or _is_square(disc):
        return False
    exp = expand_qform(QuadForm(r, s - p, -q, Branch.PLUS))
    return exp.head == () and canonical_rotation(exp.cycle) == canonical_rotation(t)
