"""Permutation groups, subgroups and epimorphisms.

A :class:`Group` is given by generators and owns a stabilizer chain (order
and membership for arbitrary permutations).  For structural work every group
of desk-scale order also owns a Cayley table over its elements listed in
lexicographic order of their image tuples.  That order depends only on the
set of elements, so two equal groups index their elements identically and a
:class:`Subgroup` can be stored as a bitmask over its parent's elements.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from . import chain as _chain
from .config import DegreeTooLarge, EnumerationTooLarge, GroupError, NotNormalError, get_caps
from .perm import Array, Permutation, inv, is_identity, mul


# --- bitmask helpers -------------------------------------------------------

def mask_from_bits(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def bits_from_mask(mask: int, n: int) -> np.ndarray:
    raw = mask.to_bytes((n + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n].astype(bool)


def mask_from_indices(idx: Iterable[int], n: int) -> int:
    bits = np.zeros(n, dtype=bool)
    bits[np.fromiter(idx, dtype=np.int64)] = True
    return mask_from_bits(bits)


def _wrap(a: Array) -> Permutation:
    p = Permutation.__new__(Permutation)
    p.array = a
    return p


class _Table:
    __slots__ = ("arrays", "index", "mul", "inv")

    def __init__(self, arrays: list[Array], table: np.ndarray):
        self.arrays = arrays
        self.index = {a: i for i, a in enumerate(arrays)}
        self.mul = table
        self.inv = np.argmax(table == 0, axis=1)


def _table_from_elements(arrays: list[Array], generators: Sequence[Array]) -> np.ndarray:
    """Cayley table ``T[i, j] = index(e_i * e_j)`` via a spanning tree.

    If ``e_j = e_k * s`` for a generator ``s`` then column ``j`` is column
    ``k`` pushed through right multiplication by ``s``.
    """
    n = len(arrays)
    index = {a: i for i, a in enumerate(arrays)}
    dtype = np.int16 if n < 2**15 else np.int32
    gens = [g for g in dict.fromkeys(generators)]
    right = [np.fromiter((index[mul(a, s)] for a in arrays), dtype=np.int64, count=n) for s in gens]
    table = np.empty((n, n), dtype=dtype)
    table[:, 0] = np.arange(n)
    done = np.zeros(n, dtype=bool)
    done[0] = True
    queue = [0]
    for k in queue:
        col = table[:, k]
        for s, r in enumerate(right):
            j = r[k]
            if not done[j]:
                done[j] = True
                table[:, j] = r[col]
                queue.append(j)
    if not done.all():
        raise GroupError("generators do not generate the element list")
    return table


class Group:
    """A permutation group of a fixed degree."""

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None, *, _lazy_chain: bool = False):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise GroupError("degree required for an empty generator list")
            degree = gens[0].degree
        if degree < 1:
            raise GroupError("degree must be positive")
        for g in gens:
            if g.degree != degree:
                raise GroupError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = gens
        self._chain: _chain.StabChain | None = None
        self._table: _Table | None = None
        self._order: int | None = None
        if not _lazy_chain:
            self._chain = _chain.schreier_sims([g.array for g in gens], degree)
            self._order = self._chain.order

    @classmethod
    def _from_table(cls, arrays: list[Array], table: np.ndarray, generators: Sequence[Array], degree: int) -> Group:
        g = cls([_wrap(a) for a in generators], degree, _lazy_chain=True)
        g._table = _Table(arrays, table)
        g._order = len(arrays)
        return g

    # -- chain-level queries --

    @property
    def chain(self) -> _chain.StabChain:
        if self._chain is None:
            self._chain = _chain.schreier_sims([g.array for g in self.generators], self.degree)
        return self._chain

    @property
    def order(self) -> int:
        if self._order is None:
            self._order = self.chain.order
        return self._order

    def __len__(self) -> int:
        return self.order

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        if self._table is not None:
            return p.array in self._table.index
        return self.chain.contains(p.array)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    # -- table-level access --

    @property
    def table(self) -> _Table:
        if self._table is None:
            caps = get_caps()
            if self.order > caps.max_degree:
                raise EnumerationTooLarge(
                    f"group of order {self.order} exceeds the table cap {caps.max_degree}")
            arrays = sorted(self.chain.elements())
            self._table = _Table(arrays, _table_from_elements(arrays, [g.array for g in self.generators]))
        return self._table

    def element(self, i: int) -> Permutation:
        return _wrap(self.table.arrays[i])

    def index(self, p: Permutation) -> int:
        try:
            return self.table.index[p.array]
        except KeyError:
            raise GroupError(f"{p} is not in the group") from None

    def __iter__(self) -> Iterator[Permutation]:
        return elements(self)

    # -- subgroups --

    def whole(self) -> Subgroup:
        return Subgroup(self, (1 << self.order) - 1)

    def trivial(self) -> Subgroup:
        return Subgroup(self, 1)

    def subgroup(self, generators: Iterable[Permutation]) -> Subgroup:
        gens = [self.index(p) for p in generators]
        return Subgroup(self, mask_from_bits(generate(self, gens)), gens)

    def is_abelian(self) -> bool:
        gs = [g.array for g in self.generators]
        return all(mul(a, b) == mul(b, a) for a, b in itertools.combinations(gs, 2))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Group):
            return NotImplemented
        return (self.degree == other.degree and self.order == other.order
                and all(g in self for g in other.generators))

    def __hash__(self) -> int:
        return hash((self.degree, self.order))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"Group(degree={self.degree}, order={self.order}, gens=[{gens}])"


def build_chain(generators: Sequence[Permutation], degree: int | None = None) -> Group:
    """Group generated by ``generators`` with its stabilizer chain built."""
    return Group(generators, degree)


def elements(g: Group) -> Iterator[Permutation]:
    """Each element exactly once; raises above the element cap."""
    cap = get_caps().max_elements
    if g.order > cap:
        raise EnumerationTooLarge(f"enumeration too large: order {g.order} > cap {cap}")
    if g._table is not None:
        return (_wrap(a) for a in g._table.arrays)
    return (_wrap(a) for a in g.chain.elements())


def generate(g: Group, gens: Sequence[int], sub: np.ndarray | None = None,
             sub_gens: Sequence[int] = ()) -> np.ndarray:
    """Boolean membership vector of the subgroup generated by element indices.

    ``sub`` may give the indices of a subgroup already known to lie in the
    result, with ``sub_gens`` its generators; the result is then enumerated
    as a union of right cosets of it.
    """
    t = g.table.mul
    if sub is None:
        sub = np.zeros(1, dtype=np.int64)
    member = np.zeros(g.order, dtype=bool)
    member[sub] = True
    all_gens = list(dict.fromkeys([*sub_gens, *gens]))
    reps = [0]
    for r in reps:
        row = t[r]
        for s in all_gens:
            x = row[s]
            if not member[x]:
                member[t[sub, x]] = True
                reps.append(int(x))
    return member


# --- subgroups ---------------------------------------------------------------

class Subgroup:
    """A subgroup of ``parent`` stored as a bitmask over its elements."""

    __slots__ = ("parent", "mask", "_gens", "_group", "__weakref__")

    def __init__(self, parent: Group, mask: int, gens: Sequence[int] | None = None):
        self.parent = parent
        self.mask = mask
        self._gens = None if gens is None else tuple(int(i) for i in gens)
        self._group: Group | None = None

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.order

    @property
    def bits(self) -> np.ndarray:
        return bits_from_mask(self.mask, self.parent.order)

    @property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.bits)

    def has_index(self, i: int) -> bool:
        return (self.mask >> int(i)) & 1 == 1

    def __contains__(self, p: Permutation) -> bool:
        i = self.parent.table.index.get(p.array)
        return i is not None and self.has_index(i)

    def elements(self) -> list[Permutation]:
        arrays = self.parent.table.arrays
        return [_wrap(arrays[i]) for i in self.indices]

    @property
    def gens(self) -> tuple[int, ...]:
        """A small generating set (element indices), found greedily."""
        if self._gens is None:
            idx = self.indices
            t_order = self.order
            chosen: list[int] = []
            cur = np.zeros(1, dtype=np.int64)
            cur_bits = np.zeros(self.parent.order, dtype=bool)
            cur_bits[0] = True
            for i in idx[::-1]:
                if len(cur) == t_order:
                    break
                if not cur_bits[i]:
                    chosen.append(int(i))
                    cur_bits = generate(self.parent, [int(i)], cur, chosen[:-1])
                    cur = np.flatnonzero(cur_bits)
            self._gens = tuple(chosen)
        return self._gens

    @property
    def generators(self) -> list[Permutation]:
        arrays = self.parent.table.arrays
        return [_wrap(arrays[i]) for i in self.gens]

    @property
    def group(self) -> Group:
        """This subgroup re-hosted as a standalone group on the same points."""
        if self._group is None:
            if self.mask == (1 << self.parent.order) - 1:
                self._group = self.parent
            else:
                idx = self.indices
                parent = self.parent.table
                pos = np.full(self.parent.order, -1, dtype=np.int64)
                pos[idx] = np.arange(len(idx))
                sub_table = pos[parent.mul[np.ix_(idx, idx)]].astype(parent.mul.dtype)
                arrays = [parent.arrays[i] for i in idx]
                gens = [parent.arrays[i] for i in self.gens]
                self._group = Group._from_table(arrays, sub_table, gens, self.parent.degree)
        return self._group

    def embed(self, inner: Subgroup) -> Subgroup:
        """Map a subgroup of ``self.group`` into ``self.parent``."""
        if inner.parent is not self.group and inner.parent != self.group:
            raise GroupError("subgroup does not live in this re-hosted group")
        idx = self.indices[inner.indices]
        bits = np.zeros(self.parent.order, dtype=bool)
        bits[idx] = True
        gens = None if inner._gens is None else [int(self.indices[i]) for i in inner._gens]
        return Subgroup(self.parent, mask_from_bits(bits), gens)

    def restrict(self, other: Subgroup) -> Subgroup:
        """``other ∩ self`` as a subgroup of ``self.group``."""
        _same_parent(self, other)
        return Subgroup(self.group, mask_from_bits(other.bits[self.indices]))

    def is_trivial(self) -> bool:
        return self.mask == 1

    def is_whole(self) -> bool:
        return self.mask == (1 << self.parent.order) - 1

    def __le__(self, other: Subgroup) -> bool:
        _same_parent(self, other)
        return self.mask & other.mask == self.mask

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: Subgroup) -> bool:
        return other <= self

    def __gt__(self, other: Subgroup) -> bool:
        return other < self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.mask == other.mask and (self.parent is other.parent or self.parent == other.parent)

    def __hash__(self) -> int:
        return hash(self.mask)

    def __and__(self, other: Subgroup) -> Subgroup:
        return intersect(self, other)

    def __or__(self, other: Subgroup) -> Subgroup:
        return join(self, other)

    def __repr__(self) -> str:
        gens = ", ".join(str(p) for p in self.generators) or "()"
        return f"Subgroup(order={self.order}, gens=[{gens}])"


def _same_parent(a: Subgroup, b: Subgroup) -> None:
    if a.parent is not b.parent and a.parent != b.parent:
        raise GroupError("subgroups of different parent groups")


def as_subgroup(x: Group | Subgroup) -> Subgroup:
    return x.whole() if isinstance(x, Group) else x


def subgroup_from_bits(g: Group, bits: np.ndarray, gens: Sequence[int] | None = None) -> Subgroup:
    return Subgroup(g, mask_from_bits(bits), gens)


def conjugate(s: Subgroup, x: int) -> Subgroup:
    """``s^x = x^-1 s x`` for an element index ``x`` of the parent."""
    t = s.parent.table
    idx = t.mul[t.mul[t.inv[x], s.indices], x]
    bits = np.zeros(s.parent.order, dtype=bool)
    bits[idx] = True
    return Subgroup(s.parent, mask_from_bits(bits))


def is_normal(n: Subgroup, k: Subgroup | Group | None = None) -> bool:
    """Whether ``n`` is normalized by (the generators of) ``k``."""
    k = n.parent.whole() if k is None else as_subgroup(k)
    if not n <= k:
        return False
    gens = list(n.gens)
    if not gens:
        return True
    t = n.parent.table
    bits = n.bits
    for x in k.gens:
        if not bits[t.mul[t.mul[t.inv[x], gens], x]].all():
            return False
    return True


def normalizer(g: Group, s: Subgroup) -> Subgroup:
    t = g.table
    bits = s.bits
    gens = np.array(s.gens, dtype=np.int64)
    if len(gens) == 0:
        return g.whole()
    # x normalizes s iff x^-1 h x in s for every generator h
    conj = t.mul[t.mul[t.inv[:, None], gens[None, :]], np.arange(g.order)[:, None]]
    return subgroup_from_bits(g, bits[conj].all(axis=1))


def normal_closure(g: Group, seed: Subgroup, within: Subgroup | None = None) -> Subgroup:
    """Smallest subgroup containing ``seed`` normalized by ``within`` (default ``g``)."""
    k = g.whole() if within is None else within
    t = g.table
    cur_gens = list(seed.gens)
    bits = seed.bits
    changed = True
    while changed:
        changed = False
        for h in list(cur_gens):
            for x in k.gens:
                c = int(t.mul[t.mul[t.inv[x], h], x])
                if not bits[c]:
                    cur_gens.append(c)
                    bits = generate(g, [c], np.flatnonzero(bits), cur_gens[:-1])
                    changed = True
    return subgroup_from_bits(g, bits, cur_gens)


def centralizer(g: Group, s: Subgroup) -> Subgroup:
    """Elements of ``g`` commuting with every generator of ``s``."""
    t = g.table.mul
    keep = np.ones(g.order, dtype=bool)
    for a in s.gens:
        keep &= t[:, a] == t[a, :]
    return subgroup_from_bits(g, keep)


def intersect(a: Subgroup, b: Subgroup) -> Subgroup:
    _same_parent(a, b)
    return Subgroup(a.parent, a.mask & b.mask)


def join(a: Subgroup, b: Subgroup) -> Subgroup:
    _same_parent(a, b)
    if a <= b:
        return b
    if b <= a:
        return a
    big, small = (a, b) if a.order >= b.order else (b, a)
    extra = [i for i in small.gens if not big.has_index(i)]
    bits = generate(a.parent, extra, big.indices, big.gens)
    return subgroup_from_bits(a.parent, bits, [*big.gens, *extra])


def join_all(g: Group, subs: Iterable[Subgroup]) -> Subgroup:
    out = g.trivial()
    for s in subs:
        out = join(out, s)
    return out


def meet_all(g: Group, subs: Iterable[Subgroup]) -> Subgroup:
    out = g.whole()
    for s in subs:
        out = intersect(out, s)
    return out


def commutator_subgroup(g: Group, a: Subgroup, b: Subgroup) -> Subgroup:
    """``[a, b]`` for ``a`` and ``b`` normalized by the group ``<a, b>``."""
    t = g.table
    comms = []
    for x in a.gens:
        for y in b.gens:
            c = int(t.mul[t.mul[t.inv[x], t.inv[y]], t.mul[x, y]])
            if c != 0:
                comms.append(c)
    seed = subgroup_from_bits(g, generate(g, comms), comms)
    return normal_closure(g, seed, join(a, b))


# --- epimorphisms ------------------------------------------------------------

class Epimorphism:
    """A surjection ``source -> target`` given on element indices."""

    def __init__(self, source: Group, target: Group, images: np.ndarray, kernel: Subgroup):
        self.source = source
        self.target = target
        self._images = images
        self.kernel = kernel

    def image_map(self, p: Permutation) -> Permutation:
        return self.target.element(int(self._images[self.source.index(p)]))

    __call__ = image_map

    def image(self, s: Subgroup) -> Subgroup:
        bits = np.zeros(self.target.order, dtype=bool)
        bits[self._images[s.indices]] = True
        return subgroup_from_bits(self.target, bits)

    def preimage(self, s: Subgroup) -> Subgroup:
        return subgroup_from_bits(self.source, s.bits[self._images])


def quotient(g: Group, n: Subgroup) -> Epimorphism:
    """``g -> g/n`` realised by the right-multiplication action on cosets."""
    if not is_normal(n):
        raise NotNormalError("quotient by a subgroup that is not normal")
    index = g.order // n.order
    if index > get_caps().max_degree:
        raise DegreeTooLarge(f"coset action degree {index} exceeds cap {get_caps().max_degree}")
    t = g.table.mul
    coset = np.full(g.order, -1, dtype=np.int64)
    reps = []
    nidx = n.indices
    for x in range(g.order):
        if coset[x] < 0:
            coset[t[nidx, x]] = len(reps)
            reps.append(x)
    reps_a = np.array(reps, dtype=np.int64)
    coset_mul = coset[t[np.ix_(reps_a, reps_a)]]
    # the permutation of coset a sends coset c to c*a, i.e. column a
    perms = coset_mul.T
    order = np.lexsort(perms.T[::-1])
    rank = np.empty(index, dtype=np.int64)
    rank[order] = np.arange(index)
    arrays = [tuple(int(v) for v in perms[a]) for a in order]
    dtype = np.int16 if index < 2**15 else np.int32
    table = rank[coset_mul[np.ix_(order, order)]].astype(dtype)
    gen_arrays = [arrays[rank[coset[g.index(p)]]] for p in g.generators]
    target = Group._from_table(arrays, table, gen_arrays, index)
    return Epimorphism(g, target, rank[coset], n)


# --- direct products -----------------------------------------------------------

@dataclass
class DirectProduct:
    group: Group
    factors: tuple[Group, ...]
    offsets: tuple[int, ...]

    def embed(self, i: int, p: Permutation) -> Permutation:
        img = list(range(self.group.degree))
        off = self.offsets[i]
        for j, x in enumerate(p.array):
            img[off + j] = off + x
        return Permutation(img)

    def embedding(self, i: int, s: Subgroup | Group) -> Subgroup:
        s = as_subgroup(s)
        return self.group.subgroup([self.embed(i, p) for p in s.generators])

    def factor_subgroup(self, i: int) -> Subgroup:
        return self.embedding(i, self.factors[i])

    def projection(self, i: int) -> Epimorphism:
        off, deg = self.offsets[i], self.factors[i].degree
        fac = self.factors[i]
        images = np.fromiter(
            (fac.index(Permutation([x - off for x in a[off:off + deg]])) for a in self.group.table.arrays),
            dtype=np.int64, count=self.group.order)
        kernel = join_all(self.group, (self.factor_subgroup(j) for j in range(len(self.factors)) if j != i))
        return Epimorphism(self.group, fac, images, kernel)


def direct_product(*groups: Group) -> DirectProduct:
    """External direct product acting on disjoint blocks of points."""
    offsets = []
    total = 0
    for g in groups:
        offsets.append(total)
        total += g.degree
    dp = DirectProduct(Group([], total), tuple(groups), tuple(offsets))
    gens = [dp.embed(i, p) for i, g in enumerate(groups) for p in g.generators]
    dp.group = Group(gens, total)
    return dp
