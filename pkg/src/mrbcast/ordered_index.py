"""Integer ordered set over a universe [1..U] with O(log log U) operations.

A van Emde Boas layout: each internal node splits keys into high/low
halves of their bit width, keeps a summary over occupied clusters, and
lazily allocates clusters in a dict so a fresh index costs O(occupied),
not O(U).  The recursion bottoms out at a 64-wide bitmask leaf, which is
where the small constants come from at the scales used here (U <= 10^6).

Per the classic layout, a node's minimum lives in the node itself and is
never duplicated inside a cluster; the maximum is stored both places.
"""

from __future__ import annotations

from .errors import OutOfUniverse

_LEAF_BITS = 6  # 64-wide bitmask leaves


class _Leaf:
    __slots__ = ("mask",)

    def __init__(self):
        self.mask = 0

    @property
    def min(self):
        m = self.mask
        return (m & -m).bit_length() - 1 if m else None

    @property
    def max(self):
        m = self.mask
        return m.bit_length() - 1 if m else None

    def insert(self, x):
        self.mask |= 1 << x

    def delete(self, x):
        bit = 1 << x
        if self.mask & bit:
            self.mask &= ~bit
            return True
        return False

    def member(self, x):
        return bool(self.mask >> x & 1)

    def successor(self, x):
        m = self.mask >> (x + 1)
        if m:
            return x + 1 + ((m & -m).bit_length() - 1)
        return None

    def predecessor(self, x):
        m = self.mask & ((1 << x) - 1)
        if m:
            return m.bit_length() - 1
        return None


class _Node:
    __slots__ = ("shift", "lowmask", "hi_bits", "min", "max", "clusters", "summary")

    def __init__(self, bits):
        # Clusters cover the low floor(bits/2) bits; the summary spans the rest.
        self.shift = bits >> 1
        self.lowmask = (1 << self.shift) - 1
        self.hi_bits = bits - self.shift
        self.min = None
        self.max = None
        self.clusters = {}
        self.summary = None

    def insert(self, x):
        if self.min is None:
            self.min = self.max = x
            return
        if x == self.min:
            return
        if x < self.min:
            x, self.min = self.min, x
        h = x >> self.shift
        cl = self.clusters.get(h)
        if cl is None:
            cl = _make_node(self.shift)
            self.clusters[h] = cl
        if cl.min is None:
            if self.summary is None:
                self.summary = _make_node(self.hi_bits)
            self.summary.insert(h)
        cl.insert(x & self.lowmask)
        if x > self.max:
            self.max = x

    def delete(self, x):
        if self.min is None:
            return False
        if self.min == self.max:
            if x == self.min:
                self.min = self.max = None
                return True
            return False
        if x == self.min:
            h0 = self.summary.min
            x = (h0 << self.shift) | self.clusters[h0].min
            self.min = x
        h = x >> self.shift
        cl = self.clusters.get(h)
        if cl is None:
            return False
        if not cl.delete(x & self.lowmask):
            return False
        if cl.min is None:
            self.summary.delete(h)
            del self.clusters[h]
            if x == self.max:
                hm = self.summary.max
                if hm is None:
                    self.max = self.min
                else:
                    self.max = (hm << self.shift) | self.clusters[hm].max
        elif x == self.max:
            self.max = (h << self.shift) | cl.max
        return True

    def member(self, x):
        if x == self.min or x == self.max:
            return True
        cl = self.clusters.get(x >> self.shift)
        return cl is not None and cl.member(x & self.lowmask)

    def successor(self, x):
        if self.min is not None and x < self.min:
            return self.min
        h = x >> self.shift
        l = x & self.lowmask
        cl = self.clusters.get(h)
        if cl is not None and cl.max is not None and l < cl.max:
            return (h << self.shift) | cl.successor(l)
        h2 = self.summary.successor(h) if self.summary is not None else None
        if h2 is None:
            return None
        return (h2 << self.shift) | self.clusters[h2].min

    def predecessor(self, x):
        if self.max is not None and x > self.max:
            return self.max
        h = x >> self.shift
        l = x & self.lowmask
        cl = self.clusters.get(h)
        if cl is not None and cl.min is not None and l > cl.min:
            return (h << self.shift) | cl.predecessor(l)
        h2 = self.summary.predecessor(h) if self.summary is not None else None
        if h2 is None:
            if self.min is not None and x > self.min:
                return self.min
            return None
        return (h2 << self.shift) | self.clusters[h2].max


def _make_node(bits):
    return _Leaf() if bits <= _LEAF_BITS else _Node(bits)


class OrderedIndex:
    """Ordered set of integers in [1..U].

    insert/delete/successor/predecessor/min run in O(log log U).  Insert
    is idempotent; delete of an absent key is a no-op returning False.
    """

    def __init__(self, universe: int):
        if universe < 1:
            raise OutOfUniverse(f"universe must be >= 1, got {universe}")
        self.universe = int(universe)
        bits = max(1, (self.universe - 1).bit_length())
        self._root = _make_node(bits)
        self._size = 0

    def _check(self, k) -> int:
        k = int(k)
        if not (1 <= k <= self.universe):
            raise OutOfUniverse(f"key {k} outside 1..{self.universe}")
        return k - 1

    def __len__(self) -> int:
        return self._size

    def __contains__(self, k) -> bool:
        return self._root.member(self._check(k))

    def insert(self, k) -> None:
        x = self._check(k)
        if not self._root.member(x):
            self._root.insert(x)
            self._size += 1

    def delete(self, k) -> bool:
        removed = self._root.delete(self._check(k))
        if removed:
            self._size -= 1
        return removed

    def successor(self, k):
        """Smallest member strictly greater than k, or None."""
        r = self._root.successor(self._check(k))
        return None if r is None else r + 1

    def predecessor(self, k):
        """Largest member strictly smaller than k, or None."""
        r = self._root.predecessor(self._check(k))
        return None if r is None else r + 1

    def min(self):
        r = self._root.min
        return None if r is None else r + 1

    def max(self):
        r = self._root.max
        return None if r is None else r + 1
