"""Named group constructors and the curated verification catalog.

The catalog is the documented family the batch checks sweep over: all cyclic,
dihedral and dicyclic groups in range, abelian types of bounded 2-rank,
symmetric/alternating groups, SL(2,3), and a spread of semidirect products
(Frobenius groups, Schmidt groups, extraspecial groups, ...). Entries are
deduplicated by a cheap isomorphism-invariant fingerprint and returned in a
deterministic order.
"""

from __future__ import annotations

import itertools
import re
from importlib import resources
from typing import Iterable, Optional

from .groupfile import parse_group_text
from .permgroup import (
    DEFAULT_MAX_ORDER,
    FiniteGroup,
    GroupError,
    direct_product,
    inversion_action,
    is_abelian,
    prime_factorization,
    semidirect_product,
)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    if n == 1:
        return FiniteGroup.from_generators([], 1, name="C1")
    return FiniteGroup.from_generators([tuple(range(1, n)) + (0,)], n, name=f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n (n >= 3)."""
    if n < 3:
        raise GroupError("dihedral needs n >= 3 (use elem_abelian 2 2 for V4)")
    rot = tuple(range(1, n)) + (0,)
    ref = tuple((n - i) % n for i in range(n))
    return FiniteGroup.from_generators([rot, ref], n, name=f"D{n}")


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n (n >= 2); n = 2 is the quaternion group."""
    if n < 2:
        raise GroupError("dicyclic needs n >= 2")
    two_n = 2 * n

    def pt(j: int, e: int) -> int:
        return j % two_n + e * two_n

    gen_a = [0] * (4 * n)
    gen_b = [0] * (4 * n)
    for j in range(two_n):
        gen_a[pt(j, 0)] = pt(j + 1, 0)
        gen_a[pt(j, 1)] = pt(j - 1, 1)
        gen_b[pt(j, 0)] = pt(j, 1)
        gen_b[pt(j, 1)] = pt(j + n, 0)
    name = "Q8" if n == 2 else f"Dic{n}"
    return FiniteGroup.from_generators([tuple(gen_a), tuple(gen_b)], 4 * n, name=name)


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("symmetric needs n >= 1")
    if n == 1:
        return FiniteGroup.from_generators([], 1, name="S1")
    gens = [tuple(range(1, n)) + (0,), (1, 0) + tuple(range(2, n))]
    return FiniteGroup.from_generators(gens, n, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        raise GroupError("alternating needs n >= 3")
    three_cycle = (1, 2, 0) + tuple(range(3, n))
    if n == 3:
        gens = [three_cycle]
    elif n % 2 == 1:
        gens = [three_cycle, tuple(range(1, n)) + (0,)]
    else:
        gens = [three_cycle, (0,) + tuple(range(2, n)) + (1,)]
    return FiniteGroup.from_generators(gens, n, name=f"A{n}")


def elem_abelian(p: int, k: int) -> FiniteGroup:
    if not prime_factorization(p) == [(p, 1)]:
        raise GroupError("elem_abelian needs a prime p")
    if k < 1:
        raise GroupError("elem_abelian needs k >= 1")
    grp = cyclic(p)
    for _ in range(k - 1):
        grp = direct_product(grp, cyclic(p))
    grp.name = f"E{p}^{k}"
    return grp


def abelian_type(factors: Iterable[int]) -> FiniteGroup:
    """Direct product of cyclic groups of the given orders."""
    factors = list(factors)
    grp = cyclic(factors[0])
    for m in factors[1:]:
        grp = direct_product(grp, cyclic(m))
    grp.name = "x".join(f"C{m}" for m in factors)
    return grp


def cyclic_semidirect(n: int, k: int, m: int) -> FiniteGroup:
    """C_n x| C_k where the C_k generator acts by x -> x^m (m^k = 1 mod n)."""
    if pow(m, k, n) != 1 % n:
        raise GroupError(f"action exponent {m} has no order dividing {k} mod {n}")
    A = cyclic(n)
    B = cyclic(k)
    action_map = tuple((i * m) % n for i in range(n))
    action = {g: action_map for g in B.generators}
    grp = semidirect_product(A, B, action, name=f"C{n}:C{k}m{m}")
    return grp


def frobenius(p: int, k: int) -> FiniteGroup:
    """C_p x| C_k with a faithful action (k divides p-1)."""
    if (p - 1) % k != 0:
        raise GroupError(f"{k} does not divide {p} - 1")
    # deterministic generator of order k in (Z/p)*
    for m in range(2, p):
        if pow(m, k, p) == 1 and all(pow(m, d, p) != 1 for d in range(1, k) if k % d == 0):
            return cyclic_semidirect(p, k, m)
    raise GroupError(f"no order-{k} unit modulo {p}")


def _extend_generator_map(G: FiniteGroup, images: dict[int, int]) -> Optional[tuple[int, ...]]:
    """Extend a generator assignment to a full endomorphism array, or None."""
    out: dict[int, int] = {G.identity: G.identity}
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            for g, img_g in images.items():
                xg = G.mul(x, g)
                img = G.mul(out[x], img_g)
                prev = out.get(xg)
                if prev is None:
                    out[xg] = img
                    new.append(xg)
                elif prev != img:
                    return None
        frontier = new
    if len(out) != G.order:
        return None
    array = tuple(out[i] for i in range(G.order))
    if sorted(array) != list(range(G.order)):
        return None
    return array


def _automorphism_of_order(G: FiniteGroup, order: int) -> tuple[int, ...]:
    """Deterministic search for an automorphism of the given order."""
    gens = list(G.generators)
    orders = G.element_orders()
    candidate_images = [
        [y for y in range(G.order) if orders[y] == orders[g]] for g in gens
    ]
    for combo in itertools.product(*candidate_images):
        arr = _extend_generator_map(G, dict(zip(gens, combo)))
        if arr is None:
            continue
        # multiplicative check is implied by construction; test the order
        power = arr
        k = 1
        ident = tuple(range(G.order))
        while power != ident and k <= order:
            power = tuple(arr[x] for x in power)
            k += 1
        if k == order and power == ident:
            return arr
    raise GroupError(f"no automorphism of order {order} found")


def special_linear_2_3() -> FiniteGroup:
    """SL(2,3) as Q8 x| C3."""
    q8 = dicyclic(2)
    c3 = cyclic(3)
    phi = _automorphism_of_order(q8, 3)
    grp = semidirect_product(q8, c3, {c3.generators[0]: phi}, name="SL(2,3)")
    return grp


def _vector_action(p: int, k: int, matrix: list[list[int]]) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Elementary abelian group with the action of an invertible matrix."""
    A = elem_abelian(p, k)

    def decode(idx: int) -> tuple[int, ...]:
        perm = A.elements[idx]
        return tuple(perm[j * p] - j * p for j in range(k))

    encode: dict[tuple[int, ...], int] = {}
    for idx in range(A.order):
        encode[decode(idx)] = idx
    arr = [0] * A.order
    for idx in range(A.order):
        v = decode(idx)
        w = tuple(sum(matrix[r][c] * v[c] for c in range(k)) % p for r in range(k))
        arr[idx] = encode[w]
    return A, tuple(arr)


def matrix_semidirect(p: int, k: int, matrix: list[list[int]], cyc_order: int, name: str) -> FiniteGroup:
    A, arr = _vector_action(p, k, matrix)
    B = cyclic(cyc_order)
    return semidirect_product(A, B, {B.generators[0]: arr}, name=name)


def heisenberg_3() -> FiniteGroup:
    """Extraspecial group of order 27 and exponent 3 (E9 x| C3, shear action)."""
    return matrix_semidirect(3, 2, [[1, 1], [0, 1]], 3, "He3")


def schmidt_2_4_5() -> FiniteGroup:
    """E16 x| C5, the order-80 Schmidt group (irreducible C5-action)."""
    matrix = [
        [0, 0, 0, 1],
        [1, 0, 0, 1],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
    ]
    return matrix_semidirect(2, 4, matrix, 5, "E16:C5")


def schmidt_5_5_3() -> FiniteGroup:
    """E25 x| C3, the order-75 Schmidt group."""
    return matrix_semidirect(5, 2, [[0, -1], [1, -1]], 3, "E25:C3")


def e9_quarter_turn() -> FiniteGroup:
    """E9 x| C4 with the rotation action (order 36)."""
    return matrix_semidirect(3, 2, [[0, -1], [1, 0]], 4, "E9:C4")


def load_example864(max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """The shipped order-864 worked-example group."""
    text = resources.files("groupforms.data").joinpath("g864.pgrp").read_text(encoding="utf-8")
    return parse_group_text(text, max_order=max_order)


# ---------------------------------------------------------------------------
# named-constructor grammar (CLI surface)

_NAME_RE = re.compile(r"^([a-zA-Z_][a-zA-Z0-9_]*)\s*:\s*(.*)$")
_SHORTHAND = re.compile(r"^([CSDAQ])(\d+)$")


def build_named(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build a group from a constructor expression.

    Grammar: ``cyclic:N``, ``dihedral:N``, ``dicyclic:N``, ``symmetric:N``,
    ``alternating:N``, ``elem_abelian:P,K``, ``direct(expr,expr)``,
    ``semidirect(expr,expr,inversion)``, ``sl23``, ``example864``, plus
    shorthands like ``C12``, ``S4``, ``A5``, ``D6`` (dihedral), ``Q8``.
    """
    s = spec.strip()
    if s.startswith("direct(") and s.endswith(")"):
        a_spec, b_spec = _split_args(s[len("direct(") : -1], 2)
        return direct_product(build_named(a_spec, max_order), build_named(b_spec, max_order))
    if s.startswith("semidirect(") and s.endswith(")"):
        a_spec, b_spec, action = _split_args(s[len("semidirect(") : -1], 3)
        A = build_named(a_spec, max_order)
        B = build_named(b_spec, max_order)
        if action.strip() != "inversion":
            raise GroupError(f"unknown semidirect action {action!r} (only 'inversion' is named)")
        return semidirect_product(A, B, inversion_action(A, B), max_order=max_order)
    short = _SHORTHAND.match(s)
    if short:
        kind, num = short.group(1), int(short.group(2))
        if kind == "C":
            return cyclic(num)
        if kind == "S":
            return symmetric(num)
        if kind == "A":
            return alternating(num)
        if kind == "D":
            return dihedral(num)
        if kind == "Q":
            if num % 4 != 0:
                raise GroupError("Q-shorthand means dicyclic of order divisible by 4")
            return dicyclic(num // 4)
    if s == "sl23":
        return special_linear_2_3()
    if s == "example864":
        return load_example864(max_order)
    m = _NAME_RE.match(s)
    if not m:
        raise GroupError(f"unrecognized group spec {spec!r}")
    name, rest = m.group(1), m.group(2)
    args = [int(x) for x in rest.replace(",", " ").split()] if rest.strip() else []
    if name == "cyclic" and len(args) == 1:
        return cyclic(args[0])
    if name == "dihedral" and len(args) == 1:
        return dihedral(args[0])
    if name == "dicyclic" and len(args) == 1:
        return dicyclic(args[0])
    if name == "symmetric" and len(args) == 1:
        return symmetric(args[0])
    if name == "alternating" and len(args) == 1:
        return alternating(args[0])
    if name == "elem_abelian" and len(args) == 2:
        return elem_abelian(args[0], args[1])
    raise GroupError(f"unrecognized group spec {spec!r}")


def _split_args(body: str, expected: int) -> list[str]:
    parts: list[str] = []
    depth = 0
    current = ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(current)
            current = ""
        else:
            current += ch
    parts.append(current)
    if len(parts) != expected:
        raise GroupError(f"expected {expected} arguments, got {len(parts)}")
    return [p.strip() for p in parts]


# ---------------------------------------------------------------------------
# the curated catalog


def _abelian_types(max_order: int, max_two_rank: int = 4) -> list[FiniteGroup]:
    """All abelian isomorphism types up to max_order with bounded 2-rank.

    The 2-rank cap keeps subgroup lattices at a size the exhaustive sweeps
    can afford; E32 itself is included separately as the stress case.
    """
    out = []
    for n in range(2, max_order + 1):
        for typ in _abelian_partitions(n):
            if sum(1 for m in typ if m % 2 == 0) > max_two_rank:
                continue
            out.append(abelian_type(typ))
    return out


def _abelian_partitions(n: int) -> list[tuple[int, ...]]:
    """Cyclic-factor multisets (invariant-factor style) for abelian groups of order n."""
    fac = prime_factorization(n)
    per_prime: list[list[tuple[int, ...]]] = []
    for p, e in fac:
        parts = [tuple(sorted(part, reverse=True)) for part in _partitions(e)]
        per_prime.append([tuple(p**a for a in part) for part in parts])
    out = []
    for combo in itertools.product(*per_prime):
        factors: list[int] = []
        for chunk in combo:
            factors.extend(chunk)
        out.append(tuple(sorted(factors, reverse=True)))
    return sorted(set(out))


def _partitions(n: int) -> list[list[int]]:
    if n == 0:
        return [[]]
    out = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(list(acc))
            return
        for part in range(min(remaining, cap), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def fingerprint(G: FiniteGroup) -> tuple:
    """Cheap isomorphism invariant used for catalog deduplication only."""
    orders = G.element_orders()
    histogram: dict[int, int] = {}
    for x in range(G.order):
        histogram[orders[x]] = histogram.get(orders[x], 0) + 1
    from .permgroup import derived_subgroup

    return (
        G.order,
        tuple(sorted(histogram.items())),
        is_abelian(G),
        derived_subgroup(G).order,
    )


def catalog_groups(max_order: int = 120) -> list[FiniteGroup]:
    """The curated catalog, deduplicated and sorted by (order, name)."""
    entries: list[FiniteGroup] = []
    entries.extend(cyclic(n) for n in range(1, max_order + 1))
    entries.extend(dihedral(n) for n in range(3, max_order // 2 + 1))
    entries.extend(dicyclic(n) for n in range(2, max_order // 4 + 1))
    for n in (3, 4, 5):
        if _fact(n) <= max_order:
            entries.append(symmetric(n))
    for n in (4, 5):
        if _fact(n) // 2 <= max_order:
            entries.append(alternating(n))
    entries.extend(g for g in _abelian_types(max_order) if g.order <= max_order)
    if 32 <= max_order:
        entries.append(elem_abelian(2, 5))
    special = []
    if max_order >= 20:
        special.append(frobenius(5, 4))
    if max_order >= 21:
        special.append(frobenius(7, 3))
    if max_order >= 24:
        special.extend([special_linear_2_3(), cyclic_semidirect(3, 8, 2)])
    if max_order >= 27:
        special.extend([heisenberg_3(), cyclic_semidirect(9, 3, 4)])
    if max_order >= 36:
        special.append(e9_quarter_turn())
    if max_order >= 42:
        special.append(frobenius(7, 6))
    if max_order >= 32:
        special.append(cyclic_semidirect(16, 2, 7))  # semidihedral of order 32
    if max_order >= 39:
        special.append(frobenius(13, 3))
    if max_order >= 52:
        special.append(frobenius(13, 4))
    if max_order >= 55:
        special.append(frobenius(11, 5))
    if max_order >= 75:
        special.append(schmidt_5_5_3())
    if max_order >= 80:
        special.append(schmidt_2_4_5())
    if max_order >= 110:
        special.append(frobenius(11, 10))
    entries.extend(special)
    semis = []
    if max_order >= 18:
        A = elem_abelian(3, 2)
        semis.append(semidirect_product(A, cyclic(2), inversion_action(A, cyclic(2)), name="E9:C2"))
    if max_order >= 16:
        semis.extend([cyclic_semidirect(8, 2, 3), cyclic_semidirect(8, 2, 5)])
    if max_order >= 36:
        s3 = symmetric(3)
        semis.append(direct_product(s3, s3, name="S3xS3"))
    if max_order >= 18:
        semis.append(direct_product(symmetric(3), cyclic(3), name="S3xC3"))
    if max_order >= 24:
        semis.append(direct_product(alternating(4), cyclic(2), name="A4xC2"))
        semis.append(direct_product(dicyclic(2), cyclic(3), name="Q8xC3"))
    if max_order >= 36:
        semis.append(direct_product(alternating(4), cyclic(3), name="A4xC3"))
    if max_order >= 48:
        semis.append(direct_product(symmetric(4), cyclic(2), name="S4xC2"))
        semis.append(direct_product(alternating(4), cyclic(4), name="A4xC4"))
        semis.append(direct_product(alternating(4), elem_abelian(2, 2), name="A4xV4"))
    if max_order >= 72:
        semis.append(direct_product(symmetric(3), alternating(4), name="S3xA4"))
    if max_order >= 60:
        semis.append(direct_product(symmetric(3), dihedral(5), name="S3xD5"))
        semis.append(direct_product(alternating(4), cyclic(5), name="A4xC5"))
    if max_order >= 96:
        semis.append(direct_product(symmetric(4), elem_abelian(2, 2), name="S4xV4"))
        semis.append(direct_product(alternating(4), dicyclic(2), name="A4xQ8"))
        semis.append(direct_product(symmetric(3), cyclic_semidirect(8, 2, 3), name="S3xSD16"))
    if max_order >= 100:
        semis.append(direct_product(frobenius(5, 4), cyclic(5), name="F20xC5"))
    if max_order >= 120:
        semis.append(direct_product(symmetric(3), frobenius(5, 4), name="S3xF20"))
        semis.append(direct_product(alternating(4), dihedral(5), name="A4xD5"))
        semis.append(direct_product(symmetric(4), cyclic(5), name="S4xC5"))
    entries.extend(g for g in semis if g.order <= max_order)

    seen: dict[tuple, str] = {}
    unique: list[FiniteGroup] = []
    for g in entries:
        if g.order > max_order:
            continue
        fp = fingerprint(g)
        if fp in seen:
            continue
        seen[fp] = g.name or ""
        unique.append(g)
    unique.sort(key=lambda g: (g.order, g.name or ""))
    return unique


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out
