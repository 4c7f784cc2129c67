"""Permutation-group arithmetic on fully enumerated small groups.

Elements are permutations stored as image tuples (0-based). Every group
carries its complete, canonically ordered element list plus integer
multiplication/inverse tables, so all later subgroup predicates are exact
integer work. Deliberately no stabilizer chains: the target scale
(order <= ~1000, hard cap 2000) makes full enumeration the simplest thing
that is always right.
"""

from __future__ import annotations

import itertools
import math
from array import array
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

DEFAULT_MAX_ORDER = 2000


class GroupError(ValueError):
    """Invalid group-theoretic input (degree mismatch, bad subgroup, ...)."""


class GroupBudgetError(RuntimeError):
    """A configured budget (max order, lattice size, time) was exceeded."""


# ---------------------------------------------------------------------------
# raw permutation helpers (image-tuple representation)


def identity_perm(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Product 'apply p, then q'."""
    return tuple(q[x] for x in p)


def invert(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_permutation(p: Sequence[int]) -> bool:
    n = len(p)
    return sorted(p) == list(range(n))


def perm_order(p: Sequence[int]) -> int:
    n = len(p)
    seen = [False] * n
    result = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        result = result * length // math.gcd(result, length)
    return result


def cycles_of(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Non-trivial cycles, 0-based, each rotated to start at its minimum."""
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        cycles.append(tuple(cyc))
    return cycles


def perm_to_cycle_text(p: Sequence[int]) -> str:
    """Cycle notation with 1-based points, e.g. ``(1 2 3)(4 5)``; identity is ``()``."""
    cycles = cycles_of(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in cyc) + ")" for cyc in cycles)


def perm_from_cycle_text(text: str, degree: int) -> tuple[int, ...]:
    """Parse 1-based cycle notation into an image tuple of the given degree."""
    images = list(range(degree))
    body = text.strip()
    if body in ("", "()"):
        return tuple(images)
    if not body.startswith("("):
        raise GroupError(f"bad cycle notation: {text!r}")
    depth_open = False
    current: list[int] = []
    token = ""
    touched: set[int] = set()

    def flush_token() -> None:
        nonlocal token
        if token:
            current.append(int(token))
            token = ""

    for ch in body:
        if ch == "(":
            if depth_open:
                raise GroupError(f"nested '(' in cycle notation: {text!r}")
            depth_open = True
            current = []
        elif ch == ")":
            if not depth_open:
                raise GroupError(f"unbalanced ')' in cycle notation: {text!r}")
            flush_token()
            depth_open = False
            if len(current) > 1:
                pts = [x - 1 for x in current]
                for x in pts:
                    if not 0 <= x < degree:
                        raise GroupError(f"point {x + 1} out of range for degree {degree}")
                    if x in touched:
                        raise GroupError(f"point {x + 1} repeated in {text!r}")
                    touched.add(x)
                for a, b in zip(pts, pts[1:] + pts[:1]):
                    images[a] = b
        elif ch in " ,\t":
            flush_token()
        elif ch.isdigit():
            token += ch
        else:
            raise GroupError(f"unexpected character {ch!r} in cycle notation: {text!r}")
    if depth_open:
        raise GroupError(f"unterminated cycle in {text!r}")
    return tuple(images)


def prime_factorization(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return prime_factorization(n) == [(n, 1)]


def is_prime_power(n: int) -> bool:
    """True for p^k with k >= 1 (1 is not a prime power here)."""
    return len(prime_factorization(n)) == 1 and n > 1


def is_primary_order(n: int) -> bool:
    """Order of a primary group: 1 or a single-prime power."""
    return n == 1 or is_prime_power(n)


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def pi_part(n: int, pi: Iterable[int]) -> int:
    out = 1
    for p in pi:
        out *= p_part(n, p)
    return out


# ---------------------------------------------------------------------------
# groups


class FiniteGroup:
    """A fully enumerated permutation group.

    Immutable after construction. ``elements`` is lexicographically sorted on
    image tuples, which makes every set-valued result downstream
    deterministic. ``_op_cache`` holds idempotent lazy results (lattices,
    residuals, normalizers, ...); concurrent duplicate computation is
    harmless by design.
    """

    __slots__ = (
        "degree",
        "elements",
        "order",
        "generators",
        "name",
        "_index",
        "_table",
        "_inv",
        "_identity",
        "_orders",
        "_op_cache",
    )

    def __init__(
        self,
        degree: int,
        elements: Sequence[tuple[int, ...]],
        generator_perms: Sequence[tuple[int, ...]],
        name: Optional[str] = None,
        _table: Optional[list[array]] = None,
    ):
        self.degree = degree
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.name = name
        self._index = {p: i for i, p in enumerate(self.elements)}
        ident = identity_perm(degree)
        if ident not in self._index:
            raise GroupError("element set does not contain the identity")
        self._identity = self._index[ident]
        gen_idx = []
        for g in generator_perms:
            idx = self._index.get(tuple(g))
            if idx is None:
                raise GroupError("generator outside element set")
            gen_idx.append(idx)
        self.generators = tuple(gen_idx)
        if _table is not None:
            self._table = _table
        else:
            self._table = self._build_table()
        inv = array("i", [-1]) * self.order
        e = self._identity
        for a in range(self.order):
            row = self._table[a]
            for b in range(self.order):
                if row[b] == e:
                    inv[a] = b
                    break
        self._inv = inv
        self._orders: Optional[array] = None
        self._op_cache: dict = {}

    def _build_table(self) -> list[array]:
        index = self._index
        elems = self.elements
        table = []
        for p in elems:
            table.append(array("i", (index[compose(p, q)] for q in elems)))
        return table

    # -- low-level element arithmetic (index space) --

    def mul(self, a: int, b: int) -> int:
        return self._table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, x: int, g: int) -> int:
        """g^-1 * x * g in index space."""
        t = self._table
        return t[t[self._inv[g]][x]][g]

    def commutator(self, a: int, b: int) -> int:
        t = self._table
        return t[t[t[self._inv[a]][self._inv[b]]][a]][b]

    @property
    def identity(self) -> int:
        return self._identity

    def element_orders(self) -> array:
        if self._orders is None:
            e = self._identity
            t = self._table
            out = array("i", [0]) * self.order
            for i in range(self.order):
                o, x = 1, i
                while x != e:
                    x = t[x][i]
                    o += 1
                out[i] = o
            self._orders = out
        return self._orders

    def whole(self) -> frozenset[int]:
        cached = self._op_cache.get("whole")
        if cached is None:
            cached = frozenset(range(self.order))
            self._op_cache["whole"] = cached
        return cached

    def closure(self, seeds: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by the seed elements, as an index set."""
        t = self._table
        e = self._identity
        gens = sorted({s for s in seeds if s != e})
        out = {e}
        frontier = [e]
        while frontier:
            new = []
            for x in frontier:
                row = t[x]
                for g in gens:
                    y = row[g]
                    if y not in out:
                        out.add(y)
                        new.append(y)
            frontier = new
        return frozenset(out)

    def greedy_generators(self, members: frozenset[int]) -> tuple[int, ...]:
        """A small deterministic generating set for a subgroup index set."""
        cache = self._op_cache.setdefault("gens", {})
        got = cache.get(members)
        if got is not None:
            return got
        gens: list[int] = []
        current: frozenset[int] = frozenset((self._identity,))
        if len(members) > 1:
            for x in sorted(members):
                if x not in current:
                    gens.append(x)
                    current = self.closure(gens)
                    if len(current) == len(members):
                        break
        result = tuple(gens)
        cache[members] = result
        return result

    def conjugate_set(self, members: Iterable[int], g: int) -> frozenset[int]:
        t = self._table
        gi = self._inv[g]
        return frozenset(t[t[gi][x]][g] for x in members)

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Element conjugacy classes, each sorted, ordered by minimum element."""
        cached = self._op_cache.get("conj_classes")
        if cached is not None:
            return cached
        gens = self.generators if self.generators else ()
        seen = [False] * self.order
        classes = []
        for i in range(self.order):
            if seen[i]:
                continue
            orbit = {i}
            work = [i]
            seen[i] = True
            while work:
                x = work.pop()
                for g in gens:
                    y = self.conj(x, g)
                    if not seen[y]:
                        seen[y] = True
                        orbit.add(y)
                        work.append(y)
            classes.append(tuple(sorted(orbit)))
        classes.sort(key=lambda c: c[0])
        self._op_cache["conj_classes"] = classes
        return classes

    def subgroup(self, members: Iterable[int], _trusted: bool = False) -> "SubgroupRef":
        ms = frozenset(members)
        if not _trusted:
            if not ms <= self.whole():
                raise GroupError("member indices outside the group")
            if self.closure(self.greedy_generators(ms) or [self._identity]) != ms:
                raise GroupError("member set is not closed (not a subgroup)")
        return SubgroupRef(self, ms)

    def as_subgroup(self) -> "SubgroupRef":
        cached = self._op_cache.get("self_sub")
        if cached is None:
            cached = SubgroupRef(self, self.whole())
            self._op_cache["self_sub"] = cached
        return cached

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<FiniteGroup {label}: degree {self.degree}, order {self.order}>"

    # -- constructors --

    @classmethod
    def from_generators(
        cls,
        generator_perms: Iterable[Sequence[int]],
        degree: int,
        max_order: int = DEFAULT_MAX_ORDER,
        name: Optional[str] = None,
    ) -> "FiniteGroup":
        gens = []
        for g in generator_perms:
            gt = tuple(g)
            if len(gt) != degree:
                raise GroupError(f"generator degree {len(gt)} != declared degree {degree}")
            if not is_permutation(gt):
                raise GroupError(f"not a permutation: {gt}")
            gens.append(gt)
        ident = identity_perm(degree)
        elems = {ident}
        frontier = [ident]
        gen_set = [g for g in dict.fromkeys(gens) if g != ident]
        while frontier:
            new = []
            for p in frontier:
                for g in gen_set:
                    q = compose(p, g)
                    if q not in elems:
                        elems.add(q)
                        new.append(q)
                        if len(elems) > max_order:
                            raise GroupBudgetError(
                                f"closure exceeded the max-order budget ({max_order})"
                            )
            frontier = new
        return cls(degree, sorted(elems), gens, name=name)

    @classmethod
    def from_table(
        cls,
        perms: Sequence[tuple[int, ...]],
        table: Sequence[Sequence[int]],
        generator_perms: Sequence[tuple[int, ...]],
        name: Optional[str] = None,
    ) -> "FiniteGroup":
        """Internal fast path: canonicalize a precomputed (perms, table) pair."""
        order = len(perms)
        sort_idx = sorted(range(order), key=lambda i: perms[i])
        new_of_old = [0] * order
        for new, old in enumerate(sort_idx):
            new_of_old[old] = new
        sorted_perms = [perms[old] for old in sort_idx]
        new_table = [
            array("i", (new_of_old[table[old_i][old_j]] for old_j in sort_idx))
            for old_i in sort_idx
        ]
        degree = len(sorted_perms[0])
        return cls(degree, sorted_perms, generator_perms, name=name, _table=new_table)


class SubgroupRef:
    """An identified subgroup: a parent group plus a member index set."""

    __slots__ = ("parent", "members", "order", "_sorted")

    def __init__(self, parent: FiniteGroup, members: frozenset[int]):
        self.parent = parent
        self.members = members
        self.order = len(members)
        self._sorted: Optional[tuple[int, ...]] = None

    @property
    def sorted_members(self) -> tuple[int, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.members))
        return self._sorted

    @property
    def generators(self) -> tuple[int, ...]:
        return self.parent.greedy_generators(self.members)

    def generator_perms(self) -> list[tuple[int, ...]]:
        gens = self.generators
        if not gens:
            return [identity_perm(self.parent.degree)]
        return [self.parent.elements[g] for g in gens]

    @property
    def sort_key(self) -> tuple:
        return (self.order, self.sorted_members)

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def contains(self, other: "SubgroupRef") -> bool:
        return other.members <= self.members

    def __contains__(self, idx: int) -> bool:
        return idx in self.members

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubgroupRef)
            and other.parent is self.parent
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"<SubgroupRef order {self.order} of {self.parent!r}>"


GroupLike = Union[FiniteGroup, SubgroupRef]


def _as_subgroup(G: GroupLike) -> SubgroupRef:
    return G.as_subgroup() if isinstance(G, FiniteGroup) else G


@dataclass(frozen=True)
class GroupHom:
    """A surjective homomorphism witnessing a quotient G -> G/N.

    ``element_map`` sends parent element indices (of the source member set) to
    element indices of ``image``; ``image`` is the permutation realization of
    the right-coset action.
    """

    source: SubgroupRef
    kernel: SubgroupRef
    image: FiniteGroup
    element_map: Mapping[int, int]

    def map_members(self, members: Iterable[int]) -> frozenset[int]:
        emap = self.element_map
        return frozenset(emap[x] for x in members)

    def map_subgroup(self, H: SubgroupRef) -> SubgroupRef:
        return self.image.subgroup(self.map_members(H.members), _trusted=True)

    def preimage_members(self, image_members: Iterable[int]) -> frozenset[int]:
        wanted = set(image_members)
        return frozenset(x for x, y in self.element_map.items() if y in wanted)

    def preimage_subgroup(self, H: SubgroupRef) -> SubgroupRef:
        parent = self.source.parent
        return parent.subgroup(self.preimage_members(H.members), _trusted=True)


# ---------------------------------------------------------------------------
# classical operations


def generate(
    generators: Iterable[Sequence[int]],
    degree: int,
    max_order: int = DEFAULT_MAX_ORDER,
    name: Optional[str] = None,
) -> FiniteGroup:
    """Close a generator list into a FiniteGroup (deterministic element order)."""
    return FiniteGroup.from_generators(generators, degree, max_order=max_order, name=name)


def subgroup_generated(G: GroupLike, seed: Iterable[int]) -> SubgroupRef:
    sub = _as_subgroup(G)
    parent = sub.parent
    seed = list(seed)
    for s in seed:
        if s not in sub.members:
            raise GroupError(f"seed element {s} not in the group")
    return SubgroupRef(parent, parent.closure(seed))


def normalizer(G: GroupLike, H: SubgroupRef) -> SubgroupRef:
    """N_G(H) = {g in G : H^g = H}."""
    amb = _as_subgroup(G)
    parent = amb.parent
    if not H.members <= amb.members:
        raise GroupError("H is not a subgroup of the ambient group")
    cache = parent._op_cache.setdefault("normalizer", {})
    key = (amb.members, H.members)
    got = cache.get(key)
    if got is not None:
        return got
    gens = H.generators
    mem = H.members
    t = parent._table
    inv = parent._inv
    out = set()
    for g in sorted(amb.members):
        gi = inv[g]
        row_gi = t[gi]
        ok = True
        for h in gens:
            if t[row_gi[h]][g] not in mem:
                ok = False
                break
        if ok:
            out.add(g)
    result = SubgroupRef(parent, frozenset(out))
    cache[key] = result
    return result


def centralizer(G: GroupLike, H: SubgroupRef) -> SubgroupRef:
    amb = _as_subgroup(G)
    parent = amb.parent
    gens = H.generators
    t = parent._table
    out = {g for g in amb.members if all(t[g][h] == t[h][g] for h in gens)}
    return SubgroupRef(parent, frozenset(out))


def core(B: GroupLike, A: SubgroupRef) -> SubgroupRef:
    """Core of A in B: the largest subgroup of A normal in B."""
    amb = _as_subgroup(B)
    parent = amb.parent
    if not A.members <= amb.members:
        raise GroupError("core requires A <= B")
    cache = parent._op_cache.setdefault("core", {})
    key = (amb.members, A.members)
    got = cache.get(key)
    if got is not None:
        return got
    gens = parent.greedy_generators(amb.members)
    current = A.members
    changed = True
    while changed:
        changed = False
        for g in gens:
            conj = parent.conjugate_set(current, g)
            if conj != current:
                current = current & conj
                changed = True
    # the fixpoint is closed and B-invariant, hence exactly the core
    result = SubgroupRef(parent, current)
    cache[key] = result
    return result


def normal_closure(G: GroupLike, seed: Iterable[int]) -> SubgroupRef:
    """Smallest subgroup containing the seed and normal in the ambient group."""
    amb = _as_subgroup(G)
    parent = amb.parent
    amb_gens = parent.greedy_generators(amb.members)
    current = parent.closure(seed)
    while True:
        extra = []
        for g in amb_gens:
            for x in parent.greedy_generators(current):
                y = parent.conj(x, g)
                if y not in current:
                    extra.append(y)
        if not extra:
            return SubgroupRef(parent, current)
        current = parent.closure(list(current | set(extra)))


def commutator_subgroup(G: GroupLike, A: SubgroupRef, B: SubgroupRef) -> SubgroupRef:
    """[A, B] inside the ambient group (normal closure of generator commutators)."""
    amb = _as_subgroup(G)
    parent = amb.parent
    seeds = set()
    a_gens = A.generators or (parent.identity,)
    b_gens = B.generators or (parent.identity,)
    for a in a_gens:
        for b in b_gens:
            seeds.add(parent.commutator(a, b))
    join = parent.closure(set(A.generators) | set(B.generators) | {parent.identity})
    return normal_closure(SubgroupRef(parent, join), seeds)


def derived_subgroup(G: GroupLike) -> SubgroupRef:
    sub = _as_subgroup(G)
    parent = sub.parent
    cache = parent._op_cache.setdefault("derived", {})
    got = cache.get(sub.members)
    if got is None:
        got = commutator_subgroup(sub, sub, sub)
        cache[sub.members] = got
    return got


def derived_series(G: GroupLike) -> list[SubgroupRef]:
    sub = _as_subgroup(G)
    series = [sub]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt.members == series[-1].members:
            break
        series.append(nxt)
    return series


def lower_central_series(G: GroupLike) -> list[SubgroupRef]:
    sub = _as_subgroup(G)
    series = [sub]
    while True:
        nxt = commutator_subgroup(sub, sub, series[-1])
        if nxt.members == series[-1].members:
            break
        series.append(nxt)
    return series


def prime_divisors(G: GroupLike) -> set[int]:
    return {p for p, _ in prime_factorization(_as_subgroup(G).order)}


def is_abelian(G: GroupLike) -> bool:
    sub = _as_subgroup(G)
    parent = sub.parent
    gens = sub.generators
    t = parent._table
    return all(t[a][b] == t[b][a] for a, b in itertools.combinations(gens, 2))


def is_nilpotent(G: GroupLike) -> bool:
    """Every Sylow subgroup normal, tested in element-order-count form.

    For each prime p, the p-power-order elements number exactly the p-part of
    |G| iff the Sylow p-subgroup is unique (= normal).
    """
    sub = _as_subgroup(G)
    parent = sub.parent
    orders = parent.element_orders()
    n = sub.order
    counts: dict[int, int] = {}
    for x in sub.members:
        o = orders[x]
        if o == 1:
            continue
        fac = prime_factorization(o)
        if len(fac) == 1:
            p = fac[0][0]
            counts[p] = counts.get(p, 0) + 1
    for p, _ in prime_factorization(n):
        if counts.get(p, 0) + 1 != p_part(n, p):
            return False
    return True


def is_soluble(G: GroupLike) -> bool:
    series = derived_series(G)
    return series[-1].order == 1


def is_elementary_abelian(G: GroupLike) -> bool:
    sub = _as_subgroup(G)
    if sub.order == 1:
        return True
    fac = prime_factorization(sub.order)
    if len(fac) != 1:
        return False
    p = fac[0][0]
    orders = sub.parent.element_orders()
    if any(orders[x] not in (1, p) for x in sub.members):
        return False
    return is_abelian(sub)


def exponent_of(G: GroupLike) -> int:
    sub = _as_subgroup(G)
    orders = sub.parent.element_orders()
    out = 1
    for x in sub.members:
        o = orders[x]
        out = out * o // math.gcd(out, o)
    return out


def sylow_subgroup(G: GroupLike, p: int) -> SubgroupRef:
    """A Sylow p-subgroup, grown deterministically through normalizers."""
    sub = _as_subgroup(G)
    parent = sub.parent
    n = sub.order
    if n % p != 0:
        raise GroupError(f"{p} does not divide the group order {n}")
    cache = parent._op_cache.setdefault("sylow", {})
    key = (sub.members, p)
    got = cache.get(key)
    if got is not None:
        return got
    target = p_part(n, p)
    orders = parent.element_orders()
    seed = min(x for x in sub.members if orders[x] % p == 0 and p_part(orders[x], p) == orders[x] and x != parent.identity)
    current = parent.closure([seed])
    while len(current) < target:
        norm = normalizer(sub, SubgroupRef(parent, current))
        grow = None
        for x in sorted(norm.members - current):
            o = orders[x]
            if o > 1 and p_part(o, p) == o:
                grow = x
                break
        if grow is None:
            raise GroupError("Sylow growth stalled (inconsistent group data)")
        current = parent.closure(list(parent.greedy_generators(current)) + [grow])
    result = SubgroupRef(parent, current)
    cache[key] = result
    return result


def p_core(G: GroupLike, p: int) -> SubgroupRef:
    """O_p(G): the largest normal p-subgroup (core of any Sylow p-subgroup)."""
    sub = _as_subgroup(G)
    if sub.order % p != 0:
        return SubgroupRef(sub.parent, frozenset((sub.parent.identity,)))
    return core(sub, sylow_subgroup(sub, p))


def fitting(G: GroupLike) -> SubgroupRef:
    """Fitting subgroup: the product of the p-cores, verified nilpotent."""
    sub = _as_subgroup(G)
    parent = sub.parent
    cached = parent._op_cache.setdefault("fitting", {})
    got = cached.get(sub.members)
    if got is not None:
        return got
    seeds: set[int] = {parent.identity}
    for p in sorted(prime_divisors(sub)):
        seeds |= p_core(sub, p).members
    result = SubgroupRef(parent, parent.closure(seeds))
    if not is_nilpotent(result):
        raise GroupError("Fitting computation produced a non-nilpotent subgroup")
    cached[sub.members] = result
    return result


def minimal_normal_subgroups(G: GroupLike) -> list[SubgroupRef]:
    from . import lattice  # local import: normal enumeration lives with the lattice code

    normals = lattice.normal_subgroups(G)
    nontrivial = [N for N in normals if N.order > 1]
    out = []
    for N in nontrivial:
        if not any(M.order < N.order and M.members < N.members for M in nontrivial):
            out.append(N)
    return out


def hall_subgroup_soluble(G: GroupLike, pi: Iterable[int]) -> SubgroupRef:
    """A Hall pi-subgroup of a soluble group, via chief-series descent.

    The complement step uses transversal averaging over an abelian normal
    Sylow subgroup (Schur-Zassenhaus in its constructive form).
    """
    sub = _as_subgroup(G)
    parent = sub.parent
    pi = sorted(set(pi))
    divisors = prime_divisors(sub)
    for p in pi:
        if p not in divisors:
            raise GroupError(f"{p} is not a prime divisor of the group order")
    if not is_soluble(sub):
        raise GroupError("Hall subgroups are only computed for soluble groups")
    members = _hall_members(sub, tuple(pi))
    return SubgroupRef(parent, members)


def _hall_members(sub: SubgroupRef, pi: tuple[int, ...]) -> frozenset[int]:
    parent = sub.parent
    target = pi_part(sub.order, pi)
    if target == sub.order:
        return sub.members
    if target == 1:
        return frozenset((parent.identity,))
    # work in a standalone realization when sub is proper, to reuse quotients
    if sub.is_whole():
        amb_group = sub.parent
        lift = None
    else:
        amb_group, lift = _subgroup_realization(sub)
    mins = minimal_normal_subgroups(amb_group)
    N = min(mins, key=lambda s: s.sort_key)
    p = next(iter(prime_divisors(N)))
    hom = quotient(amb_group, N)
    upstairs = _hall_members(hom.image.as_subgroup(), pi)
    K = hom.preimage_members(upstairs)
    if p in pi:
        result = K
    else:
        result = _complement_members(amb_group, K, N.members)
    if lift is not None:
        result = frozenset(lift[x] for x in result)
    return result


def _subgroup_as_group(sub: SubgroupRef) -> FiniteGroup:
    return _subgroup_realization(sub)[0]


def _subgroup_realization(sub: SubgroupRef) -> tuple[FiniteGroup, dict[int, int]]:
    """Realize a subgroup as its own FiniteGroup; returns (group, lift map)."""
    parent = sub.parent
    cache = parent._op_cache.setdefault("as_group", {})
    got = cache.get(sub.members)
    if got is not None:
        return got
    perms = [parent.elements[i] for i in sub.sorted_members]
    gens = sub.generator_perms()
    grp = FiniteGroup(parent.degree, sorted(perms), gens, name=None)
    lift = {grp._index[p]: parent._index[p] for p in perms}
    cache[sub.members] = (grp, lift)
    return grp, lift


def as_group(sub: SubgroupRef) -> FiniteGroup:
    """Public wrapper: a subgroup as a standalone FiniteGroup."""
    return _subgroup_as_group(sub)


def _complement_members(
    G: FiniteGroup, K_members: frozenset[int], N_members: frozenset[int]
) -> frozenset[int]:
    """Complement of an abelian normal Sylow subgroup N in K (|K/N| coprime |N|)."""
    t = G._table
    inv = G._inv
    m = len(K_members) // len(N_members)
    # transversal with canonical (minimal) coset representatives
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for x in sorted(K_members):
        if x in coset_of:
            continue
        r = len(reps)
        reps.append(x)
        for nn in N_members:
            coset_of[t[nn][x]] = r
    assert len(reps) == m
    exp = exponent_of(SubgroupRef(G, N_members))
    m_inv = pow(m, -1, exp)

    def power(x: int, k: int) -> int:
        out = G.identity
        base = x
        while k:
            if k & 1:
                out = t[out][base]
            base = t[base][base]
            k >>= 1
        return out

    cocycle: dict[tuple[int, int], int] = {}

    def c(i: int, j: int) -> int:
        got = cocycle.get((i, j))
        if got is None:
            prod = t[reps[i]][reps[j]]
            got = t[prod][inv[reps[coset_of[prod]]]]
            cocycle[(i, j)] = got
        return got

    complement = set()
    for i in range(m):
        sigma = G.identity
        for j in range(m):
            sigma = t[sigma][c(i, j)]
        complement.add(t[power(sigma, (exp - m_inv) % exp)][reps[i]])
    result = frozenset(complement)
    if len(result) != m or G.closure(result) != result:
        raise GroupError("complement construction failed (group not as expected)")
    return result


def quotient(G: GroupLike, N: SubgroupRef) -> GroupHom:
    """Quotient realized by the right-coset action; errors if N is not normal."""
    sub = _as_subgroup(G)
    parent = sub.parent
    if not N.members <= sub.members:
        raise GroupError("kernel is not contained in the group")
    gens = parent.greedy_generators(sub.members)
    for g in gens:
        if parent.conjugate_set(N.members, g) != N.members:
            raise GroupError("quotient kernel is not normal")
    cache = parent._op_cache.setdefault("quotient", {})
    key = (sub.members, N.members)
    got = cache.get(key)
    if got is not None:
        return got
    t = parent._table
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for x in sub.sorted_members:
        if x in coset_of:
            continue
        r = len(reps)
        reps.append(x)
        for nn in N.members:
            coset_of[t[nn][x]] = r
    q = len(reps)
    qtable = [[coset_of[t[reps[i]][reps[j]]] for j in range(q)] for i in range(q)]
    perms = [tuple(qtable[j][i] for j in range(q)) for i in range(q)]
    gen_perms = [perms[coset_of[g]] for g in gens] or [identity_perm(q)]
    image = FiniteGroup.from_table(perms, qtable, gen_perms, name=None)
    emap = {x: image._index[perms[r]] for x, r in coset_of.items()}
    hom = GroupHom(
        source=sub,
        kernel=N,
        image=image,
        element_map=emap,
    )
    cache[key] = hom
    return hom


# ---------------------------------------------------------------------------
# products


def direct_product(A: FiniteGroup, B: FiniteGroup, name: Optional[str] = None) -> FiniteGroup:
    """A x B on the disjoint union of the two point sets."""
    dA, dB = A.degree, B.degree
    gens = []
    for g in (A.elements[i] for i in A.generators):
        gens.append(tuple(g) + tuple(dA + x for x in range(dB)))
    for g in (B.elements[i] for i in B.generators):
        gens.append(tuple(range(dA)) + tuple(dA + x for x in g))
    got = FiniteGroup.from_generators(gens, dA + dB, max_order=A.order * B.order, name=name)
    if got.order != A.order * B.order:
        raise GroupError("direct product closure produced the wrong order")
    return got


def semidirect_product(
    A: FiniteGroup,
    B: FiniteGroup,
    action: Mapping[int, Sequence[int]],
    name: Optional[str] = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> FiniteGroup:
    """A x| B realized by the right regular action on the pair set A x B.

    ``action`` maps each B generator index to an automorphism of A given as an
    image array over A's element indices. The map is verified to consist of
    automorphisms and to extend to a homomorphism B -> Aut(A).
    """
    if A.order * B.order > max_order:
        raise GroupBudgetError("semidirect product exceeds the max-order budget")
    gen_phi: dict[int, tuple[int, ...]] = {}
    for b_gen in B.generators:
        if b_gen not in action:
            raise GroupError("action must be given on every B generator")
        phi = tuple(action[b_gen])
        if sorted(phi) != list(range(A.order)):
            raise GroupError("action image is not a bijection on A")
        if phi[A.identity] != A.identity:
            raise GroupError("action image does not fix the identity")
        for x in range(A.order):
            for y in range(A.order):
                if phi[A.mul(x, y)] != A.mul(phi[x], phi[y]):
                    raise GroupError("action image is not an automorphism of A")
        gen_phi[b_gen] = phi
    # extend along B's Cayley graph: phi(b*g) = phi(b) o phi(g);
    # a conflict between two generator words means no homomorphism exists
    auto_of: dict[int, tuple[int, ...]] = {B.identity: tuple(range(A.order))}
    work = [B.identity]
    while work:
        b = work.pop()
        phi_b = auto_of[b]
        for g, phi_g in gen_phi.items():
            bg = B.mul(b, g)
            phi = tuple(phi_b[y] for y in phi_g)
            prev = auto_of.get(bg)
            if prev is None:
                auto_of[bg] = phi
                work.append(bg)
            elif prev != phi:
                raise GroupError("action does not define a homomorphism into Aut(A)")
    if len(auto_of) != B.order:
        raise GroupError("action extension failed to cover B")

    nA, nB = A.order, B.order
    degree = nA * nB

    def pair_point(a: int, b: int) -> int:
        return a * nB + b

    gen_perms = []
    for a_gen in A.generators:
        images = [0] * degree
        for a in range(nA):
            for b in range(nB):
                images[pair_point(a, b)] = pair_point(A.mul(a, auto_of[b][a_gen]), b)
        gen_perms.append(tuple(images))
    for b_gen in B.generators:
        images = [0] * degree
        for a in range(nA):
            for b in range(nB):
                images[pair_point(a, b)] = pair_point(a, B.mul(b, b_gen))
        gen_perms.append(tuple(images))
    got = FiniteGroup.from_generators(gen_perms, degree, max_order=max_order, name=name)
    if got.order != nA * nB:
        raise GroupError("semidirect closure produced the wrong order")
    return got


def inversion_action(A: FiniteGroup, B: FiniteGroup) -> dict[int, tuple[int, ...]]:
    """Every B generator inverts the abelian group A."""
    if not is_abelian(A):
        raise GroupError("inversion action needs an abelian A")
    inv_map = tuple(A._inv[x] for x in range(A.order))
    return {g: inv_map for g in B.generators}
