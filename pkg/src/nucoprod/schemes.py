"""Index schemes: the label sets of algebra bases and their canonical enumerations.

Every scheme is enumerated shell by shell (shell 0, shell 1, ...), each shell
finite.  ``enumerate(depth)`` returns the first ``depth`` labels; ``pool(depth)``
returns every label whose shell is at most twice the shell reached by the
enumeration, which is the generator set used by existential checks (spans,
local units) so that their targets are not starved by the truncation.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Any, Hashable, Iterator, Sequence

from .errors import InvalidDepth


def check_depth(depth) -> int:
    if not isinstance(depth, int) or isinstance(depth, bool) or depth < 1:
        raise InvalidDepth(f"depth must be a positive integer, got {depth!r}")
    return depth


class IndexScheme:
    name = "scheme"
    finite = False

    def contains(self, idx) -> bool:
        raise NotImplementedError

    def shell(self, idx) -> int:
        raise NotImplementedError

    def shell_members(self, k: int) -> list:
        raise NotImplementedError

    def size(self):
        return None

    def iterate(self) -> Iterator:
        k = 0
        while True:
            members = self.shell_members(k)
            if self.finite and not members and k > self.max_shell():
                return
            yield from members
            k += 1

    def max_shell(self) -> int:
        return 0

    def enumerate(self, depth: int) -> list:
        check_depth(depth)
        return list(itertools.islice(self.iterate(), depth))

    def up_to_shell(self, radius: int) -> list:
        out = []
        for k in range(radius + 1):
            out.extend(self.shell_members(k))
        return out

    def pool(self, depth: int) -> list:
        targets = self.enumerate(depth)
        radius = max(1, 2 * max(self.shell(x) for x in targets))
        if self.finite:
            radius = min(radius, self.max_shell())
        return self.up_to_shell(radius)

    def at(self, n: int):
        """The label at position ``n`` of the canonical enumeration."""
        cache = self.__dict__.setdefault("_at_cache", [])
        if n >= len(cache):
            it = self.__dict__.get("_at_iter")
            if it is None:
                it = self.__dict__["_at_iter"] = self.iterate()
            while n >= len(cache):
                try:
                    cache.append(next(it))
                except StopIteration:
                    raise IndexError(f"{self.name} has no label at position {n}") from None
        return cache[n]

    def position(self, idx) -> int:
        """Position of ``idx`` in the canonical enumeration."""
        k = self.shell(idx)
        before = sum(len(self.shell_members(j)) for j in range(k))
        return before + self.shell_members(k).index(idx)

    def __eq__(self, other):
        return type(self) is type(other) and self.key() == other.key()

    def __hash__(self):
        return hash((type(self).__name__, self.key()))

    def key(self):
        return ()

    def __repr__(self):
        return self.name


class Naturals(IndexScheme):
    """Non-negative integers from ``start`` on."""

    def __init__(self, start: int = 0):
        self.start = start
        self.name = "N" if start == 0 else f"N>={start}"

    def key(self):
        return (self.start,)

    def contains(self, idx):
        return type(idx) is int and idx >= self.start

    def shell(self, idx):
        return idx - self.start

    def shell_members(self, k):
        return [self.start + k]

    def position(self, idx):
        return idx - self.start

    def at(self, n):
        return self.start + n


class Integers(IndexScheme):
    name = "Z"

    def contains(self, idx):
        return type(idx) is int

    def shell(self, idx):
        return abs(idx)

    def shell_members(self, k):
        return [0] if k == 0 else [k, -k]

    def position(self, idx):
        return 2 * idx - 1 if idx > 0 else -2 * idx

    def at(self, n):
        return (n + 1) // 2 if n % 2 else -(n // 2)


class IntPairs(IndexScheme):
    """Matrix-unit labels (i, j), optionally restricted to i <= j."""

    def __init__(self, start: int = 1, upper: bool = False):
        self.start = start
        self.upper = upper
        self.name = "IntPairs(upper)" if upper else "IntPairs"

    def key(self):
        return (self.start, self.upper)

    def contains(self, idx):
        return (type(idx) is tuple and len(idx) == 2 and type(idx[0]) is int and type(idx[1]) is int
                and idx[0] >= self.start and idx[1] >= self.start
                and (not self.upper or idx[0] <= idx[1]))

    def shell(self, idx):
        return max(idx) - self.start

    def shell_members(self, k):
        return _intpair_shell(self.start, self.upper, k)


@lru_cache(maxsize=None)
def _intpair_shell(start, upper, k):
    m = start + k
    out = []
    for i in range(start, m):
        out.append((i, m))
        if not upper:
            out.append((m, i))
    out.append((m, m))
    return out


class FiniteLabels(IndexScheme):
    finite = True

    def __init__(self, labels: Sequence[Hashable], name: str = "Finite"):
        self.labels = tuple(labels)
        self._set = frozenset(self.labels)
        if len(self._set) != len(self.labels):
            raise ValueError("duplicate labels in finite scheme")
        self.name = name

    def key(self):
        return self.labels

    def contains(self, idx):
        try:
            return idx in self._set
        except TypeError:
            return False

    def shell(self, idx):
        return 0

    def shell_members(self, k):
        return list(self.labels) if k == 0 else []

    def size(self):
        return len(self.labels)

    def position(self, idx):
        return self.labels.index(idx)


class GroupWords(IndexScheme):
    """Labels produced by a group handle, enumerated by word length."""

    def __init__(self, group):
        self.group = group
        self.name = group.name
        self.finite = group.order is not None

    def key(self):
        return (self.group.name,)

    def contains(self, idx):
        return self.group.contains(idx)

    def shell(self, idx):
        return self.group.length(idx)

    def shell_members(self, k):
        return self.group.sphere(k)

    def max_shell(self):
        return self.group.max_length()

    def size(self):
        return self.group.order

    def position(self, idx):
        return self.group.position(idx)


class ProductScheme(IndexScheme):
    """Pairs (x, y) of labels from two schemes; shell is the larger of the two shells."""

    def __init__(self, first: IndexScheme, second: IndexScheme):
        self.first = first
        self.second = second
        self.finite = first.finite and second.finite
        self.name = f"({first.name} x {second.name})"
        self._cache = {}

    def key(self):
        return (self.first, self.second)

    def contains(self, idx):
        return (type(idx) is tuple and len(idx) == 2
                and self.first.contains(idx[0]) and self.second.contains(idx[1]))

    def shell(self, idx):
        return max(self.first.shell(idx[0]), self.second.shell(idx[1]))

    def max_shell(self):
        return max(self.first.max_shell(), self.second.max_shell())

    def size(self):
        a, b = self.first.size(), self.second.size()
        return None if a is None or b is None else a * b

    def shell_members(self, k):
        if k in self._cache:
            return self._cache[k]
        if self.finite and k > self.max_shell():
            return []
        xs = self.first.up_to_shell(k) if not self.first.finite else \
            self.first.up_to_shell(min(k, self.first.max_shell()))
        ys = self.second.up_to_shell(k) if not self.second.finite else \
            self.second.up_to_shell(min(k, self.second.max_shell()))
        out = [(x, y) for x in xs for y in ys
               if max(self.first.shell(x), self.second.shell(y)) == k]
        self._cache[k] = out
        return out


def same_scheme(a: IndexScheme, b: IndexScheme) -> bool:
    return a == b


def sort_key(idx: Any):
    """Total order on nested labels, used only for canonical display and output."""
    if isinstance(idx, bool):
        return (0, int(idx))
    if isinstance(idx, int):
        return (0, idx)
    if isinstance(idx, tuple):
        return (1, len(idx), tuple(sort_key(x) for x in idx))
    if isinstance(idx, str):
        return (2, idx)
    return (3, repr(idx))
