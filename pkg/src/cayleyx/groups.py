"""Finite abelian groups as products of cyclic factors, and their characters.

A group is given by its factor list ``[d_1, ..., d_t]`` (each ``d_i >= 2``)
and represents ``Z_{d_1} x ... x Z_{d_t}`` written additively.  Elements and
character indices are plain tuples of residues, reduced coordinate-wise.
The character indexed by ``a`` sends ``x`` to ``prod_i exp(2*pi*i*a_i*x_i/d_i)``,
and the dual group is indexed exactly like the group itself.

Character sums are the workhorse of everything downstream: the eigenvalues of
a Cayley graph on ``G`` with connection set ``C`` are the values ``chi(C)``
over all characters ``chi``.
"""

from __future__ import annotations

import cmath
import itertools
import math
from functools import reduce

import numpy as np

__all__ = ["AbelianGroup", "cyclic"]

# Tolerance factor for "this character sum is real" decisions; the absolute
# tolerance used is IMAG_TOL_PER_TERM * |C|.
IMAG_TOL_PER_TERM = 1e-9

# Fourth roots of unity, exact.
_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


class AbelianGroup:
    """``Z_{d_1} x ... x Z_{d_t}``, written additively.

    Elements are tuples of ints with ``0 <= x_i < d_i``; the identity is the
    all-zero tuple.  Instances are immutable and safe to share.
    """

    def __init__(self, factors):
        factors = tuple(int(d) for d in factors)
        if not factors or any(d < 2 for d in factors):
            raise ValueError(f"every factor must be >= 2, got {factors}")
        self.factors = factors
        self.order = math.prod(factors)
        self.zero = (0,) * len(factors)
        # lcm of the factors; phases are multiples of 2*pi/lcm
        self._lcm = reduce(math.lcm, factors)

    # -- basic structure -------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"AbelianGroup({list(self.factors)})"

    def __contains__(self, g):
        return (
            isinstance(g, tuple)
            and len(g) == len(self.factors)
            and all(0 <= x < d for x, d in zip(g, self.factors))
        )

    def _check(self, g):
        if len(g) != len(self.factors):
            raise ValueError(
                f"element {g!r} has {len(g)} coordinates, group has {len(self.factors)} factors"
            )
        return g

    def element(self, coords):
        """Reduce an arbitrary integer tuple coordinate-wise into the group."""
        coords = tuple(coords)
        self._check(coords)
        return tuple(x % d for x, d in zip(coords, self.factors))

    def add(self, g, h):
        self._check(g)
        self._check(h)
        return tuple((x + y) % d for x, y, d in zip(g, h, self.factors))

    def sub(self, g, h):
        self._check(g)
        self._check(h)
        return tuple((x - y) % d for x, y, d in zip(g, h, self.factors))

    def neg(self, g):
        self._check(g)
        return tuple((-x) % d for x, d in zip(g, self.factors))

    def elements(self):
        """All elements in lexicographic order on coords."""
        return [tuple(t) for t in itertools.product(*(range(d) for d in self.factors))]

    def index_of(self, g):
        """Lexicographic rank of an element (mixed-radix value of coords)."""
        self._check(g)
        idx = 0
        for x, d in zip(g, self.factors):
            idx = idx * d + x
        return idx

    def element_at(self, idx):
        coords = []
        for d in reversed(self.factors):
            coords.append(idx % d)
            idx //= d
        return tuple(reversed(coords))

    # -- characters -------------------------------------------------------

    def character_value(self, a, x):
        """Value of the character with index ``a`` at the element ``x``.

        Exact fourth roots of unity are returned exactly; everything else is
        evaluated with double-precision cos/sin.
        """
        self._check(a)
        self._check(x)
        # phase numerator over the common denominator lcm(factors)
        t = sum(ai * xi * (self._lcm // d) for ai, xi, d in zip(a, x, self.factors)) % self._lcm
        if (4 * t) % self._lcm == 0:
            return _QUARTER_TURNS[(4 * t // self._lcm) % 4]
        return cmath.exp(2j * cmath.pi * t / self._lcm)

    def character_sum(self, a, C):
        """``chi_a(C) = sum_{c in C} chi_a(c)``.

        For symmetric ``C`` (``C = -C``) the sum is real; the imaginary part
        is checked against tolerance and dropped, and a float is returned.
        Otherwise the full complex value is returned.
        """
        C = list(C)
        total = sum(self.character_value(a, c) for c in C)
        if self.is_symmetric(C):
            if abs(total.imag) > IMAG_TOL_PER_TERM * max(len(C), 1):
                raise ArithmeticError(
                    f"character sum over symmetric set has imaginary part {total.imag}"
                )
            return total.real
        return total

    def character_sum_table(self, C):
        """``chi_a(C)`` for every character index ``a``, as a complex ndarray.

        The array is indexed on the factor grid, so ``table[a]`` (tuple index)
        is the sum for character ``a``.  Computed as a multidimensional DFT of
        the indicator array of ``C`` (conjugated to match the sign convention
        of :meth:`character_value`).  For symmetric ``C`` every entry is real.
        """
        ind = np.zeros(self.factors, dtype=float)
        for c in C:
            ind[self._check(tuple(c))] = 1.0
        table = np.fft.fftn(ind)
        return np.conj(table)  # fftn uses exp(-2*pi*i...); we want +

    def subgroup_generated(self, gens):
        """Closure of ``gens`` under addition and negation (contains 0)."""
        closure = {self.zero}
        frontier = [self.zero]
        gens = [self.element(g) for g in gens]
        while frontier:
            g = frontier.pop()
            for h in gens:
                for nxt in (self.add(g, h), self.sub(g, h)):
                    if nxt not in closure:
                        closure.add(nxt)
                        frontier.append(nxt)
        return frozenset(closure)

    def is_symmetric(self, C):
        Cset = set(C)
        return all(self.neg(c) in Cset for c in Cset)

    # -- serialization ----------------------------------------------------

    def to_json(self):
        return {"factors": list(self.factors)}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["factors"])


def cyclic(n):
    """Shorthand for ``Z_n``; elements are 1-tuples."""
    return AbelianGroup([n])
