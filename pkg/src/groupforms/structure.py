"""Carter/Schmidt finders, E_F classification, and the theorem checkers.

Every checker computes both sides of its statement independently; a verdict
is a genuine verification, never a derivation. Checkers whose statement
carries formation hypotheses (saturated, superradical, ...) gate on the
declared flags and label the verdict empirical when a flag is missing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import lattice as _lattice
from . import reports
from .formations import Formation, residual
from .permgroup import (
    FiniteGroup,
    GroupError,
    GroupLike,
    SubgroupRef,
    _as_subgroup,
    derived_subgroup,
    is_elementary_abelian,
    is_nilpotent,
    is_prime,
    is_prime_power,
    is_primary_order,
    is_soluble,
    normalizer,
    p_part,
    prime_divisors,
    prime_factorization,
    sylow_subgroup,
    fitting,
)
from .formations import NILPOTENT, NILPOTENT_DERIVED
from .subnormal import (
    is_abnormal,
    is_absolutely_f_subnormal,
    is_f_abnormal,
    is_f_subnormal,
    is_self_normalizing,
)

_cyclic_cache: dict[int, FiniteGroup] = {}


def _cyclic_group(n: int) -> FiniteGroup:
    got = _cyclic_cache.get(n)
    if got is None:
        got = FiniteGroup.from_generators([tuple(range(1, n)) + (0,)], n, name=f"C{n}")
        _cyclic_cache[n] = got
    return got


def _contains_all_prime_orders(F: Formation, G: GroupLike) -> bool:
    return all(F.contains(_cyclic_group(p)) for p in sorted(prime_divisors(G)))


# ---------------------------------------------------------------------------
# finders


def primary_cyclic_subgroups(G: GroupLike) -> list[SubgroupRef]:
    """Non-trivial cyclic subgroups of prime-power order, deduplicated."""
    sub = _as_subgroup(G)
    parent = sub.parent
    orders = parent.element_orders()
    seen: dict[frozenset[int], None] = {}
    for x in sub.sorted_members:
        if orders[x] > 1 and is_prime_power(orders[x]):
            seen.setdefault(parent.closure([x]), None)
    return [SubgroupRef(parent, s) for s in sorted(seen, key=lambda s: (len(s), tuple(sorted(s))))]


def primary_cyclic_class_reps(G: GroupLike) -> list[SubgroupRef]:
    sub = _as_subgroup(G)
    parent = sub.parent
    sets = [H.members for H in primary_cyclic_subgroups(sub)]
    reps = _lattice.orbit_reps_under(parent, sets, sub.members)
    return [SubgroupRef(parent, s) for s in reps]


def primary_subgroup_class_reps(G: GroupLike) -> list[SubgroupRef]:
    """Non-trivial prime-power-order subgroups up to conjugacy.

    Every p-subgroup is conjugate into a fixed Sylow p-subgroup, so the
    Sylow sub-lattices cover everything; this stays feasible at order 864
    where the full lattice does not.
    """
    sub = _as_subgroup(G)
    parent = sub.parent
    sets = []
    for p in sorted(prime_divisors(sub)):
        syl = sylow_subgroup(sub, p)
        sets.extend(s for s in _lattice.subgroup_sets(syl) if len(s) > 1)
    reps = _lattice.orbit_reps_under(parent, sets, sub.members)
    return [SubgroupRef(parent, s) for s in reps]


def subgroup_class_reps(G: GroupLike) -> list[SubgroupRef]:
    lat = _lattice.all_subgroups(G)
    return _lattice.conjugacy_class_reps(lat)


def carter_subgroups(G: GroupLike) -> list[SubgroupRef]:
    """All nilpotent self-normalizing subgroups (may be empty)."""
    sub = _as_subgroup(G)
    parent = sub.parent
    lat = _lattice.all_subgroups(sub)
    out: list[SubgroupRef] = []
    for cls in lat.conjugacy_classes:
        rep = lat.nodes[cls[0]]
        if is_nilpotent(rep) and is_self_normalizing(sub, rep):
            out.extend(lat.nodes[i] for i in cls)
    return sorted(out, key=lambda r: r.sort_key)


def is_minimal_non_f(G: GroupLike, F: Formation) -> bool:
    """G outside F with every proper subgroup inside F."""
    sub = _as_subgroup(G)
    if F.contains(sub):
        return False
    lat = _lattice.all_subgroups(sub)
    if F.subgroup_closed:
        candidates = [M for M in _lattice.maximal_subgroups(sub)]
    else:
        candidates = [ref for ref in _lattice.conjugacy_class_reps(lat) if ref.order < sub.order]
    return all(F.contains(M) for M in candidates)


def is_schmidt(G: GroupLike) -> bool:
    return is_minimal_non_f(G, NILPOTENT)


def is_ef_group(G: GroupLike, F: Formation) -> bool:
    """G outside F whose every non-trivial subgroup is F-subnormal or F-abnormal."""
    sub = _as_subgroup(G)
    if F.contains(sub):
        return False
    for H in subgroup_class_reps(sub):
        if H.order == 1:
            continue
        if is_f_subnormal(sub, H, F) or is_f_abnormal(sub, H, F):
            continue
        return False
    return True


# ---------------------------------------------------------------------------
# verdicts


@dataclass
class TheoremVerdict:
    theorem: str
    group: str
    order: int
    formation: str
    hypothesis_ok: bool
    hypothesis_status: str
    statements: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def equivalence(self) -> Optional[bool]:
        if not self.hypothesis_ok or not self.statements:
            return None
        values = list(self.statements.values())
        return all(v == values[0] for v in values)

    def to_check_result(self) -> reports.CheckResult:
        if not self.hypothesis_ok:
            status = reports.SKIP
        else:
            status = reports.PASS if self.equivalence else reports.FAIL
        details = {
            "group": self.group,
            "order": self.order,
            "hypothesis": self.hypothesis_status,
            "statements": dict(sorted(self.statements.items())),
        }
        details.update(self.details)
        return reports.CheckResult(self.theorem, status, details, self.witnesses)


def _label(G: GroupLike) -> str:
    sub = _as_subgroup(G)
    if sub.is_whole() and sub.parent.name:
        return sub.parent.name
    return f"order{sub.order}"


def _hypothesis_status(F: Formation, needed: Sequence[str]) -> tuple[bool, str]:
    missing = [flag for flag in needed if not getattr(F, flag)]
    if not missing:
        return True, "flags satisfied"
    return False, "empirical only: formation not flagged " + ", ".join(sorted(missing))


def _find_cyclic_sylow_complement_witness(
    G: GroupLike,
    Gp: SubgroupRef,
    F: Formation,
) -> Optional[dict]:
    """Theorem-1 statement (3) witness: least x with <x> a self-normalizing
    Sylow subgroup complementing Gp and with Gp<x^p> in F."""
    sub = _as_subgroup(G)
    parent = sub.parent
    orders = parent.element_orders()
    n = sub.order
    for x in sub.sorted_members:
        o = orders[x]
        if o <= 1 or not is_prime_power(o):
            continue
        p = prime_factorization(o)[0][0]
        if o != p_part(n, p):
            continue
        P = SubgroupRef(parent, parent.closure([x]))
        if P.order != o:
            continue
        if Gp.order * P.order != n or (Gp.members & P.members) != {parent.identity}:
            continue
        if not is_self_normalizing(sub, P):
            continue
        xp = x
        for _ in range(p - 1):
            xp = parent._table[xp][x]
        part = SubgroupRef(
            parent, parent.closure(list(parent.greedy_generators(Gp.members)) + [xp])
        )
        if not F.contains(part):
            continue
        return {
            "x_index": x,
            "x_order": o,
            "prime": p,
            "complement_order": P.order,
            "tail_order": part.order,
        }
    return None


def check_theorem1(
    G: GroupLike,
    F: Formation,
    include_primary_class_checks: bool = True,
    lattice_budget: int = _lattice.DEFAULT_LATTICE_BUDGET,
) -> TheoremVerdict:
    """Equivalence of the three structure statements for primary cyclic subgroups.

    S1: every primary cyclic subgroup F-subnormal or self-normalizing.
    S2: every non-abnormal subgroup F-subnormal and in F.
    S3: G = G' x| <x> with <x> a self-normalizing Sylow subgroup, G' the
        nilpotent residual, and G'<x^p> in F.
    """
    sub = _as_subgroup(G)
    parent = sub.parent
    flags_ok, flag_text = _hypothesis_status(
        F, ("subgroup_closed", "saturated", "superradical", "contains_nilpotents")
    )
    if F.contains(sub):
        return TheoremVerdict(
            "theorem1", _label(sub), sub.order, F.name, False,
            f"hypothesis violated: group lies in {F.name}",
        )
    if not is_soluble(sub):
        return TheoremVerdict(
            "theorem1", _label(sub), sub.order, F.name, False,
            "hypothesis violated: group is insoluble",
        )
    verdict = TheoremVerdict("theorem1", _label(sub), sub.order, F.name, True, flag_text)

    s1 = True
    for C in primary_cyclic_class_reps(sub):
        if not (is_f_subnormal(sub, C, F) or is_self_normalizing(sub, C)):
            s1 = False
            verdict.witnesses.append({"statement": "S1", "subgroup": reports.subgroup_witness(C)})
            break
    verdict.statements["S1"] = s1

    if sub.order <= lattice_budget:
        s2 = True
        for H in subgroup_class_reps(sub):
            if is_abnormal(sub, H):
                continue
            if not (is_f_subnormal(sub, H, F) and F.contains(H)):
                s2 = False
                verdict.witnesses.append({"statement": "S2", "subgroup": reports.subgroup_witness(H)})
                break
        verdict.statements["S2"] = s2
    else:
        verdict.details["s2_skipped"] = "all-subgroup quantifier exceeds the lattice budget"

    d = derived_subgroup(sub)
    nil_res = residual(NILPOTENT, sub)
    s3 = d.members == nil_res.members
    witness = None
    if s3:
        witness = _find_cyclic_sylow_complement_witness(sub, d, F)
        s3 = witness is not None
    verdict.statements["S3"] = s3
    if witness:
        verdict.details["s3_witness"] = witness
    verdict.details["derived_equals_nilpotent_residual"] = d.members == nil_res.members

    if include_primary_class_checks:
        sn_or_selfnorm = True
        sn_or_abnormal = True
        for P in primary_subgroup_class_reps(sub):
            fsn = is_f_subnormal(sub, P, F)
            if sn_or_selfnorm and not (fsn or is_self_normalizing(sub, P)):
                sn_or_selfnorm = False
                verdict.witnesses.append(
                    {"statement": "primary_sn_or_selfnormalizing", "subgroup": reports.subgroup_witness(P)}
                )
            if sn_or_abnormal and not (fsn or is_f_abnormal(sub, P, F)):
                sn_or_abnormal = False
                verdict.witnesses.append(
                    {"statement": "primary_sn_or_abnormal", "subgroup": reports.subgroup_witness(P)}
                )
            if not sn_or_selfnorm and not sn_or_abnormal:
                break
        verdict.details["primary_sn_or_selfnormalizing"] = sn_or_selfnorm
        verdict.details["primary_sn_or_abnormal"] = sn_or_abnormal
    return verdict


def check_theorem2(
    G: GroupLike,
    F: Formation,
    lattice_budget: int = _lattice.DEFAULT_LATTICE_BUDGET,
) -> TheoremVerdict:
    """Biconditional: primary cyclic subgroups absolutely F-subnormal or
    self-normalizing iff G is non-nilpotent with all proper subgroups primary
    and G = G' x| <x>, G' elementary abelian p-group, <x> a maximal Carter
    subgroup of prime order q != p."""
    sub = _as_subgroup(G)
    parent = sub.parent
    flags_ok, flag_text = _hypothesis_status(
        F, ("subgroup_closed", "saturated", "contains_nilpotents")
    )
    if F.contains(sub):
        return TheoremVerdict(
            "theorem2", _label(sub), sub.order, F.name, False,
            f"hypothesis violated: group lies in {F.name}",
        )
    verdict = TheoremVerdict("theorem2", _label(sub), sub.order, F.name, True, flag_text)

    left = True
    for C in primary_cyclic_class_reps(sub):
        if not (is_absolutely_f_subnormal(sub, C, F) or is_self_normalizing(sub, C)):
            left = False
            verdict.witnesses.append({"statement": "left", "subgroup": reports.subgroup_witness(C)})
            break
    verdict.statements["left"] = left

    if sub.order > lattice_budget:
        verdict.details["right_skipped"] = "all-subgroup quantifier exceeds the lattice budget"
        verdict.details["left_side_soluble"] = is_soluble(sub) if left else None
        return verdict
    right = not is_nilpotent(sub)
    reason = None if right else "nilpotent"
    if right:
        for H in subgroup_class_reps(sub):
            if H.order < sub.order and not is_primary_order(H.order):
                right = False
                reason = "non-primary proper subgroup"
                verdict.witnesses.append(
                    {"statement": "right", "subgroup": reports.subgroup_witness(H)}
                )
                break
    if right:
        d = derived_subgroup(sub)
        right = False
        reason = "no maximal prime-order Carter complement"
        if is_elementary_abelian(d) and d.order > 1:
            p = prime_factorization(d.order)[0][0]
            orders = parent.element_orders()
            for x in sub.sorted_members:
                q = orders[x]
                if not is_prime(q) or q == p:
                    continue
                if d.order * q != sub.order:
                    continue
                P = SubgroupRef(parent, parent.closure([x]))
                if d.members & P.members != {parent.identity}:
                    continue
                if not is_self_normalizing(sub, P):
                    continue
                overs = _lattice.minimal_overgroups(sub, P, within=sub.members)
                if [o.members for o in overs] != [sub.members]:
                    continue
                right = True
                reason = None
                verdict.details["right_witness"] = {
                    "p": p,
                    "q": q,
                    "derived_order": d.order,
                }
                break
    verdict.statements["right"] = right
    if reason:
        verdict.details["right_failure"] = reason
    verdict.details["left_side_soluble"] = is_soluble(sub) if left else None
    return verdict


def check_corollary1(G: GroupLike, F: Formation) -> TheoremVerdict:
    """Order-divisibility split under Theorem 1 statement (1): proper A is
    abnormal when |Carter| divides |A|, else F-subnormal and in F."""
    sub = _as_subgroup(G)
    flags_ok, flag_text = _hypothesis_status(
        F, ("subgroup_closed", "saturated", "superradical", "contains_nilpotents")
    )
    if F.contains(sub) or not is_soluble(sub):
        return TheoremVerdict(
            "corollary1", _label(sub), sub.order, F.name, False,
            "hypothesis violated: needs a soluble group outside the formation",
        )
    s1 = all(
        is_f_subnormal(sub, C, F) or is_self_normalizing(sub, C)
        for C in primary_cyclic_class_reps(sub)
    )
    if not s1:
        return TheoremVerdict(
            "corollary1", _label(sub), sub.order, F.name, False,
            "hypothesis violated: Theorem 1 statement (1) fails",
        )
    carters = carter_subgroups(sub)
    if not carters:
        return TheoremVerdict(
            "corollary1", _label(sub), sub.order, F.name, False,
            "hypothesis violated: no Carter subgroup found",
        )
    verdict = TheoremVerdict("corollary1", _label(sub), sub.order, F.name, True, flag_text)
    k = carters[0].order
    verdict.details["carter_order"] = k
    divides_ok = True
    other_ok = True
    for A in subgroup_class_reps(sub):
        if A.order == sub.order:
            continue
        if A.order % k == 0:
            if not is_abnormal(sub, A):
                divides_ok = False
                verdict.witnesses.append(
                    {"statement": "divisible_implies_abnormal", "subgroup": reports.subgroup_witness(A)}
                )
        else:
            if not (is_f_subnormal(sub, A, F) and F.contains(A)):
                other_ok = False
                verdict.witnesses.append(
                    {"statement": "otherwise_subnormal_in_F", "subgroup": reports.subgroup_witness(A)}
                )
    verdict.statements["divisible_implies_abnormal"] = divides_ok
    verdict.statements["otherwise_subnormal_in_F"] = other_ok
    return verdict


def check_corollary2(G: GroupLike, F: Formation) -> TheoremVerdict:
    """Three-way equivalence: primary cyclics F-subnormal-or-F-abnormal,
    the E_F property, and the split shape with G' the F-residual."""
    sub = _as_subgroup(G)
    parent = sub.parent
    flags_ok, flag_text = _hypothesis_status(
        F, ("subgroup_closed", "saturated", "superradical", "contains_nilpotents")
    )
    if F.contains(sub) or not is_soluble(sub):
        return TheoremVerdict(
            "corollary2", _label(sub), sub.order, F.name, False,
            "hypothesis violated: needs a soluble group outside the formation",
        )
    verdict = TheoremVerdict("corollary2", _label(sub), sub.order, F.name, True, flag_text)

    c1 = True
    for C in primary_cyclic_class_reps(sub):
        if not (is_f_subnormal(sub, C, F) or is_f_abnormal(sub, C, F)):
            c1 = False
            verdict.witnesses.append({"statement": "C1", "subgroup": reports.subgroup_witness(C)})
            break
    verdict.statements["C1_primary_cyclic_sn_or_abn"] = c1
    verdict.statements["C2_ef_group"] = is_ef_group(sub, F)

    d = derived_subgroup(sub)
    f_res = residual(F, sub)
    c3 = d.members == f_res.members
    if c3:
        c3 = _find_cyclic_sylow_complement_witness(sub, d, F) is not None
    verdict.statements["C3_split_shape"] = c3
    return verdict


# ---------------------------------------------------------------------------
# lemma batteries


def _violation(lemma: str, group: str, detail: dict) -> dict:
    out = {"lemma": lemma, "group": group}
    out.update(detail)
    return out


def check_lemma1(G: GroupLike, F: Formation) -> list[dict]:
    """Properties (1)-(6) of F-subnormal subgroups."""
    sub = _as_subgroup(G)
    parent = sub.parent
    label = _label(sub)
    violations: list[dict] = []
    reps = subgroup_class_reps(sub)
    fsn_reps = [H for H in reps if is_f_subnormal(sub, H, F)]
    normals = _lattice.normal_subgroups(sub)

    # (1) transitivity
    for H in fsn_reps:
        if H.order == sub.order:
            continue
        for K in subgroup_class_reps(H):
            if is_f_subnormal(H, K, F) and not is_f_subnormal(sub, K, F):
                violations.append(
                    _violation("1.1", label, {"H": H.order, "K": K.order})
                )
    # (2) lifting from quotients
    from .permgroup import quotient

    for N in normals:
        if N.order == 1 or N.order == sub.order:
            continue
        hom = quotient(sub, N)
        for Kbar in subgroup_class_reps(hom.image):
            if is_f_subnormal(hom.image, Kbar, F):
                K = hom.preimage_subgroup(Kbar)
                if not is_f_subnormal(sub, K, F):
                    violations.append(
                        _violation("1.2", label, {"N": N.order, "K": K.order})
                    )
    # (3) pushing to quotients
    for N in normals:
        if N.order == sub.order:
            continue
        hom = quotient(sub, N)
        for H in fsn_reps:
            image = hom.image.subgroup(
                hom.map_members(parent.closure(set(H.members) | set(N.members))),
                _trusted=True,
            )
            if not is_f_subnormal(hom.image, image, F):
                violations.append(
                    _violation("1.3", label, {"N": N.order, "H": H.order})
                )
    if F.subgroup_closed:
        # (4) everything above the residual
        res = residual(F, sub)
        for L in _lattice.interval(sub, res):
            if not is_f_subnormal(sub, L, F):
                violations.append(_violation("1.4", label, {"L": L.order}))
        # (5) intersections into arbitrary subgroups
        all_sets = [r.members for r in _lattice.all_subgroups(sub).nodes]
        for H in fsn_reps:
            norm_h = normalizer(sub, H).members
            for K_set in _lattice.orbit_reps_under(parent, all_sets, norm_h):
                K = SubgroupRef(parent, K_set)
                meet = SubgroupRef(parent, H.members & K.members)
                if not is_f_subnormal(K, meet, F):
                    violations.append(
                        _violation("1.5", label, {"H": H.order, "K": K.order})
                    )
        # (6) descending inside F-members
        for H in fsn_reps:
            if not F.contains(H):
                continue
            for K in subgroup_class_reps(H):
                if not is_f_subnormal(sub, K, F):
                    violations.append(
                        _violation("1.6", label, {"H": H.order, "K": K.order})
                    )
    return violations


def check_lemma2(G: GroupLike, F: Formation) -> list[dict]:
    """F-abnormal subgroups: upward closure, self-normalization, abnormality."""
    sub = _as_subgroup(G)
    parent = sub.parent
    label = _label(sub)
    if not (F.subgroup_closed and _contains_all_prime_orders(F, sub)):
        return []
    violations = []
    soluble = is_soluble(sub)
    for A in subgroup_class_reps(sub):
        if not is_f_abnormal(sub, A, F):
            continue
        over_sets = [r.members for r in _lattice.interval(sub, A)]
        norm_a = normalizer(sub, A).members
        for B_set in _lattice.orbit_reps_under(parent, over_sets, norm_a):
            B = SubgroupRef(parent, B_set)
            if not is_f_abnormal(sub, B, F):
                violations.append(_violation("2.1", label, {"A": A.order, "B": B.order, "kind": "abnormal"}))
            if not is_self_normalizing(sub, B):
                violations.append(_violation("2.1", label, {"A": A.order, "B": B.order, "kind": "selfnorm"}))
        if soluble and not is_abnormal(sub, A):
            violations.append(_violation("2.2", label, {"A": A.order}))
    return violations


def check_lemma3(G: GroupLike) -> list[dict]:
    """Abnormal subgroups: Sylow normalizers, upward closure, quotients."""
    sub = _as_subgroup(G)
    parent = sub.parent
    label = _label(sub)
    violations = []
    for p in sorted(prime_divisors(sub)):
        N = normalizer(sub, sylow_subgroup(sub, p))
        if not is_abnormal(sub, N):
            violations.append(_violation("3.1", label, {"p": p, "normalizer": N.order}))
    normals = _lattice.normal_subgroups(sub)
    from .permgroup import quotient

    for A in subgroup_class_reps(sub):
        if not is_abnormal(sub, A):
            continue
        if not is_self_normalizing(sub, A):
            violations.append(_violation("3.abn-selfnorm", label, {"A": A.order}))
        over_sets = [r.members for r in _lattice.interval(sub, A)]
        norm_a = normalizer(sub, A).members
        for B_set in _lattice.orbit_reps_under(parent, over_sets, norm_a):
            B = SubgroupRef(parent, B_set)
            if not is_abnormal(sub, B):
                violations.append(_violation("3.2", label, {"A": A.order, "B": B.order, "kind": "abnormal"}))
            if not is_self_normalizing(sub, B):
                violations.append(_violation("3.2", label, {"A": A.order, "B": B.order, "kind": "selfnorm"}))
        for N in normals:
            if N.order == sub.order:
                continue
            hom = quotient(sub, N)
            image = hom.image.subgroup(
                hom.map_members(parent.closure(set(A.members) | set(N.members))),
                _trusted=True,
            )
            if not is_abnormal(hom.image, image):
                violations.append(_violation("3.3", label, {"A": A.order, "N": N.order}))
    return violations


def check_lemma4(G: GroupLike, F: Formation) -> Optional[list[dict]]:
    """All maximal subgroups F-subnormal forces membership; None = gated out."""
    sub = _as_subgroup(G)
    label = _label(sub)
    if not (F.subgroup_closed and F.saturated):
        return None
    if sub.order == 1:
        return []
    lat = _lattice.all_subgroups(sub)
    top = lat.node_index(sub.members)
    maximal_class_reps = []
    seen = set()
    for i, j in lat.edges:
        if j != top or i in seen:
            continue
        for cls in lat.conjugacy_classes:
            if i in cls:
                seen.update(cls)
                maximal_class_reps.append(lat.nodes[cls[0]])
                break
    if all(is_f_subnormal(sub, M, F) for M in maximal_class_reps):
        if not F.contains(sub):
            return [_violation("4", label, {"maximals": len(maximal_class_reps)})]
    return []


def check_lemma5(G: GroupLike, F: Formation) -> Optional[list[dict]]:
    """Soluble G in F iff every primary cyclic subgroup F-subnormal; None = gated."""
    sub = _as_subgroup(G)
    label = _label(sub)
    if not (
        F.subgroup_closed and F.saturated and F.superradical and F.contains_nilpotents
    ):
        return None
    if not is_soluble(sub):
        return None
    lhs = F.contains(sub)
    rhs = all(is_f_subnormal(sub, C, F) for C in primary_cyclic_class_reps(sub))
    if lhs != rhs:
        return [_violation("5", label, {"in_formation": lhs, "all_primary_cyclic_sn": rhs})]
    return []


def check_lemma6(G: GroupLike, F: Formation) -> Optional[list[dict]]:
    """G in F iff every primary cyclic subgroup absolutely F-subnormal; None = gated."""
    sub = _as_subgroup(G)
    label = _label(sub)
    if not (F.subgroup_closed and F.saturated and F.contains_nilpotents):
        return None
    lhs = F.contains(sub)
    rhs = all(
        is_absolutely_f_subnormal(sub, C, F) for C in primary_cyclic_class_reps(sub)
    )
    if lhs != rhs:
        return [_violation("6", label, {"in_formation": lhs, "all_primary_cyclic_abs_sn": rhs})]
    return []


_LEMMA_RUNNERS = {
    "1": lambda G, F: check_lemma1(G, F),
    "2": lambda G, F: check_lemma2(G, F),
    "3": lambda G, F: check_lemma3(G),
    "4": lambda G, F: check_lemma4(G, F),
    "5": lambda G, F: check_lemma5(G, F),
    "6": lambda G, F: check_lemma6(G, F),
}


def check_lemma_suite(
    groups: Iterable[FiniteGroup],
    F: Formation,
    lemmas: Sequence[str] = ("1", "2", "3", "4", "5", "6"),
) -> reports.VerdictReport:
    report = reports.VerdictReport(kind="lemma-suite", formation=F.name)
    for G in groups:
        label = G.name or f"order{G.order}"
        for lemma in lemmas:
            result = _LEMMA_RUNNERS[lemma](G, F)
            if result is None:
                report.add(
                    f"lemma{lemma}",
                    reports.SKIP,
                    {"group": label, "reason": "hypothesis flags not satisfied"},
                )
            elif result:
                report.add(f"lemma{lemma}", reports.FAIL, {"group": label}, result)
            else:
                report.add(f"lemma{lemma}", reports.PASS, {"group": label})
    return report


# ---------------------------------------------------------------------------
# the order-864 worked example


def verify_paper_example(G: FiniteGroup) -> reports.VerdictReport:
    """Machine-check of the order-864 worked example for the
    nilpotent-derived-subgroup formation. Checks run in the documented order;
    failures are report content, not exceptions."""
    if G.order != 864:
        raise GroupError(f"example group must have order 864, got {G.order}")
    F = NILPOTENT_DERIVED
    report = reports.VerdictReport(
        kind="example864", subject=reports.group_descriptor(G), formation=F.name
    )

    syl3 = sylow_subgroup(G, 3)
    ok = syl3.order == 27 and is_elementary_abelian(syl3)
    report.add("sylow3-elementary-abelian-27", reports.PASS if ok else reports.FAIL,
               {"order": syl3.order})
    ok = is_f_subnormal(G, syl3, F)
    report.add("sylow3-f-subnormal", reports.PASS if ok else reports.FAIL)

    syl2 = sylow_subgroup(G, 2)
    ok = syl2.order == 32 and is_self_normalizing(G, syl2)
    report.add("sylow2-selfnormalizing-32", reports.PASS if ok else reports.FAIL,
               {"order": syl2.order})
    report.add("sylow2-not-f-subnormal",
               reports.PASS if not is_f_subnormal(G, syl2, F) else reports.FAIL)
    report.add("sylow2-not-f-abnormal",
               reports.PASS if not is_f_abnormal(G, syl2, F) else reports.FAIL)

    bad: list[SubgroupRef] = []
    for s in _lattice.subgroup_sets(syl2):
        if len(s) == syl2.order:
            continue
        ref = SubgroupRef(G, s)
        if not is_f_subnormal(G, ref, F):
            bad.append(ref)
    report.add(
        "sylow2-proper-subgroups-f-subnormal",
        reports.PASS if not bad else reports.FAIL,
        {"proper_subgroups": len(_lattice.subgroup_sets(syl2)) - 1, "not_subnormal": len(bad)},
        [reports.subgroup_witness(b) for b in bad[:4]],
    )

    f_res = residual(F, G)
    fit = fitting(G)
    report.add("f-residual-36", reports.PASS if f_res.order == 36 else reports.FAIL,
               {"order": f_res.order})
    report.add("f-residual-equals-fitting",
               reports.PASS if f_res.members == fit.members else reports.FAIL,
               {"fitting_order": fit.order})
    nil_res = residual(NILPOTENT, G)
    report.add("nilpotent-residual-108", reports.PASS if nil_res.order == 108 else reports.FAIL,
               {"order": nil_res.order})
    d = derived_subgroup(G)
    report.add("derived-216", reports.PASS if d.order == 216 else reports.FAIL,
               {"order": d.order})
    chain_ok = f_res.members < nil_res.members < d.members
    report.add("residual-chain-strict", reports.PASS if chain_ok else reports.FAIL)
    return report
