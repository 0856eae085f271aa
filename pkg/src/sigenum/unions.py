"""Union closure of a set family, and its use for monotone CNF signatures.

Sets are handled as int bitmasks internally and surface as frozensets.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional

from .errors import SigenumError
from .formula import Cnf, Signature, is_monotone
from .instrument import WorkMeter


class SetFamily:
    """Members are subsets of ``{0, ..., ground_size - 1}``."""

    def __init__(self, ground_size: int, members: Iterable[Iterable[int]]):
        self.ground_size = ground_size
        masks = []
        for member in members:
            mask = member if isinstance(member, int) else _to_mask(member)
            if mask >> ground_size:
                raise ValueError(f"member {sorted(_from_mask(mask))} exceeds ground set")
            masks.append(mask)
        self.members: tuple[int, ...] = tuple(masks)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"SetFamily({self.ground_size}, {[sorted(_from_mask(x)) for x in self.members]})"


def _to_mask(items: Iterable[int]) -> int:
    mask = 0
    for x in items:
        mask |= 1 << x
    return mask


def _from_mask(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


class UnionTrie:
    """Binary trie of fixed depth over characteristic vectors.

    Only nodes on root-to-leaf paths of stored sets exist. ``ops`` counts
    levels walked, so one lookup or insert costs exactly ``depth``.
    """

    def __init__(self, depth: int):
        self.depth = depth
        self.root: list = [None, None]
        self.size = 0
        self.ops = 0

    def _walk(self, mask: int, create: bool):
        """Return (parent of the leaf slot, slot bit); parent is None if absent."""
        node = self.root
        for level in range(self.depth - 1):
            bit = mask >> level & 1
            child = node[bit]
            if child is None:
                if not create:
                    return None, 0
                child = node[bit] = [None, None]
            node = child
        self.ops += self.depth
        # depth 0: the single empty set lives in slot 0 of the root
        return node, (mask >> (self.depth - 1) & 1) if self.depth else 0

    def insert(self, mask: int) -> bool:
        """Store ``mask``; return False if it was already present."""
        node, bit = self._walk(mask, True)
        if node[bit] is None:
            node[bit] = True
            self.size += 1
            return True
        return False

    def __contains__(self, mask: int) -> bool:
        node, bit = self._walk(mask, False)
        return node is not None and node[bit] is not None

    def __len__(self) -> int:
        return self.size


def enumerate_union_masks(
    family: SetFamily, include_empty: bool = False, meter: Optional[WorkMeter] = None
) -> Iterator[int]:
    """Yield every distinct union of a nonempty subfamily, as bitmasks.

    Members seed a first-in-first-out queue. Before the head ``U`` is
    emitted, ``U | C`` is looked up for every member ``C`` and new unions are
    appended, so each output costs ``|members|`` trie operations of
    ``ground_size`` steps.
    """
    trie = UnionTrie(family.ground_size)
    queue: deque[int] = deque()

    def charge() -> None:
        if meter is not None:
            meter.add(trie.ops)
        trie.ops = 0

    if include_empty:
        if meter is not None:
            meter.mark()
        yield 0
    for c in family.members:
        # an empty member only reproduces the empty union emitted above
        if include_empty and c == 0:
            continue
        if trie.insert(c):
            queue.append(c)
    charge()
    while queue:
        u = queue.popleft()
        for c in family.members:
            w = u | c
            if trie.insert(w):
                queue.append(w)
        charge()
        if meter is not None:
            meter.mark()
        yield u
    if meter is not None:
        meter.finish()


def enumerate_unions(
    family: SetFamily, include_empty: bool = False, meter: Optional[WorkMeter] = None
) -> Iterator[frozenset[int]]:
    for mask in enumerate_union_masks(family, include_empty, meter):
        yield _from_mask(mask)


def monotone_signatures(
    cnf: Cnf, meter: Optional[WorkMeter] = None
) -> Iterator[tuple[Signature, dict[int, int]]]:
    """Signatures of a monotone CNF, one per union of clauses (the empty union first).

    The variables of the union are set to 0 and all others to 1, so clause
    ``i`` is false exactly when it lies inside the union.
    """
    if not is_monotone(cnf):
        raise SigenumError("monotone_signatures needs a formula with only positive literals")
    clause_masks = cnf.masks[0]
    family = SetFamily(cnf.n, clause_masks)
    full = (1 << cnf.n) - 1
    for u in enumerate_union_masks(family, include_empty=True, meter=meter):
        sig = tuple(0 if c & ~u == 0 else 1 for c in clause_masks)
        ones = full & ~u
        witness = {v: ones >> (v - 1) & 1 for v in range(1, cnf.n + 1)}
        yield sig, witness
