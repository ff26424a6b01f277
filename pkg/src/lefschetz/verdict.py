"""Surjectivity verdicts and kernel tests for the Lefschetz homomorphism.

A verdict carries the reasons that led to it.  ``Unknown`` is an honest
outcome: the odd-p criteria are one-directional.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .borel_smith import require_borel_smith
from .perm import FiniteGroup, Subgroup, is_p_power
from .structure import (SubgroupClassTable, controls_fusion, is_dihedral, is_p_nilpotent,
                        normalizer, o_p_prime, p_subgroup_classes, quotient,
                        weakly_controls_fusion)
from .superclass import SuperclassFunction
from .tuples import min_generators, reduced_tuple_group, tuple_components
from .units import p2_surjectivity

SURJECTIVE = "Surjective"
NOT_SURJECTIVE = "NotSurjective"
UNKNOWN = "Unknown"


@dataclass
class Verdict:
    outcome: str
    reasons: list[tuple[str, Any]] = field(default_factory=list)
    certificate: dict[str, Any] | None = None

    def __post_init__(self):
        if self.outcome not in (SURJECTIVE, NOT_SURJECTIVE, UNKNOWN):
            raise ValueError(f"unknown outcome {self.outcome!r}")
        if self.outcome != UNKNOWN and not self.certificate:
            raise ValueError("a definite verdict needs a certificate")


@dataclass(frozen=True)
class HMarkCandidate:
    """Stand-in for an endotrivial complex: its h-mark function.

    ``trivial_homology`` is asserted by the caller, not checked.
    """

    h: SuperclassFunction
    trivial_homology: bool = True

    def __post_init__(self):
        require_borel_smith(self.h)


def _sylow_is_cyclic(table: SubgroupClassTable) -> bool:
    return table.sylow.is_cyclic()


def lefschetz_verdict(G: FiniteGroup, p: int, m: int | None = None,
                      table: SubgroupClassTable | None = None) -> Verdict:
    table = table if table is not None else p_subgroup_classes(G, p)
    if p == 2:
        return _verdict_p2(G, table, 1 if m is None else m)
    return _verdict_odd(G, p, p - 1 if m is None else m, table)


def _fusion_reasons(G: FiniteGroup, table: SubgroupClassTable) -> list[tuple[str, Any]]:
    S = table.sylow
    N = normalizer(G, S)
    return [
        ("fusion-control", controls_fusion(G, N, S, table)),
        ("weak-fusion-control (diagnostic)", weakly_controls_fusion(G, N, table)),
        ("dihedral-sylow", is_dihedral(S)),
    ]


def _verdict_p2(G: FiniteGroup, table: SubgroupClassTable, m: int) -> Verdict:
    reasons: list[tuple[str, Any]] = []
    if m > 1:
        comps = tuple_components(table, m)
        orders = [c.group.order for c in comps]
        reasons.append(("tuple-components", orders))
        if any(o > 1 for o in orders):
            reasons.append(("p2-exact-test", "applies only when every Hom component is trivial"))
            return Verdict(UNKNOWN, reasons)
    res = p2_surjectivity(G, table)
    reasons.append(("p2-dimension-test", {"image_dim": res.image.dim,
                                          "stable_unit_dim": res.stable_units.dim}))
    reasons.extend(_fusion_reasons(G, table))
    if res.surjective:
        cert = {"preimage_basis": [list(f.values) for f in res.preimages],
                "stable_units": [list(u.signs) for u in res.stable_units.signs()]}
        return Verdict(SURJECTIVE, reasons, cert)
    return Verdict(NOT_SURJECTIVE, reasons, {"missing_unit": list(res.missing.signs)})


def _verdict_odd(G: FiniteGroup, p: int, m: int, table: SubgroupClassTable) -> Verdict:
    reasons: list[tuple[str, Any]] = []
    S = table.sylow
    if S.order == 1:
        reasons.append(("trivial-sylow", True))
        return Verdict(SURJECTIVE, reasons, {"sylow_order": 1})
    cyclic = _sylow_is_cyclic(table)
    reasons.append(("cyclic-sylow", cyclic))
    if cyclic:
        period = period_cyclic(G, p, table)
        reasons.append(("period", period))
        return Verdict(SURJECTIVE, reasons, {"criterion": "cyclic-sylow", "period": period})
    autos = [table.automizer(c).order for c in range(len(table))]
    nilp = all(is_p_power(a, p) for a in autos)
    reasons.append(("p-nilpotent", nilp))
    if nilp:
        return Verdict(SURJECTIVE, reasons,
                       {"criterion": "p-nilpotent", "automizer_orders": autos})
    R = reduced_tuple_group(G, p, m, table)
    d, c = min_generators(R.group), table.c
    reasons.append(("generator-count", {"d": d, "c": c, "R": str(R.group)}))
    if d >= c:
        return Verdict(NOT_SURJECTIVE, reasons, {"d": d, "c": c})
    return Verdict(UNKNOWN, reasons)


def period_cyclic(G: FiniteGroup, p: int, table: SubgroupClassTable | None = None) -> int:
    """``2 |Aut_G(S)|`` for a nontrivial cyclic Sylow subgroup ``S``."""
    table = table if table is not None else p_subgroup_classes(G, p)
    S = table.sylow
    if S.order == 1 or not S.is_cyclic():
        raise ValueError("period_cyclic needs a nontrivial cyclic Sylow subgroup")
    return 2 * table.automizer(len(table) - 1).order


@dataclass
class KernelReport:
    holds: bool
    checks: list[dict[str, Any]]
    violation: dict[str, Any] | None = None
    exact: bool = True


def _require_homology(cand: HMarkCandidate) -> None:
    if not cand.trivial_homology:
        raise ValueError("kernel criteria apply to complexes with trivial homology")


def kernel_membership_cyclic(G: FiniteGroup, p: int, cand: HMarkCandidate,
                             table: SubgroupClassTable | None = None) -> KernelReport:
    """Exact kernel test for a cyclic Sylow subgroup."""
    _require_homology(cand)
    table = table if table is not None else cand.h.table
    S = table.sylow
    if not S.is_cyclic():
        raise ValueError("kernel_membership_cyclic needs a cyclic Sylow subgroup")
    h = cand.h.values
    checks: list[dict[str, Any]] = []
    odd = [i for i, v in enumerate(h) if v % 2]
    checks.append({"check": "even-valued", "ok": not odd})
    if odd:
        return KernelReport(False, checks, {"check": "even-valued", "class": odd[0]})
    if S.order == 1:
        return KernelReport(True, checks)
    modulus = period_cyclic(G, p, table)
    for cls in range(1, len(h)):
        ok = (h[0] - h[cls]) % modulus == 0
        checks.append({"check": "congruence", "pair": [0, cls], "modulus": modulus, "ok": ok})
        if not ok:
            return KernelReport(False, checks, checks[-1])
    return KernelReport(True, checks)


def section_automizer_modulus(table: SubgroupClassTable, K: Subgroup, H: Subgroup) -> int:
    """``2 |O_p'(Aut_{N_G(K)/K}(H/K))|`` for ``K`` normal of index p in ``H``."""
    G = table.group
    NK = normalizer(G, K)
    NKH = Subgroup(G, frozenset(g for g in NK.elements if H.is_normalized_by(g)))
    # elements acting trivially on H/K
    gens = [x for x in H.generators if x not in K.elements]
    trivial = frozenset(g for g in NKH.elements
                        if all(x.conjugate(g) * x.inverse() in K.elements for x in gens))
    Q = quotient(NKH, Subgroup(G, trivial))
    return 2 * len(o_p_prime(Q, table.p))


def kernel_necessary(G: FiniteGroup, p: int, cand: HMarkCandidate,
                     table: SubgroupClassTable | None = None) -> KernelReport:
    """Kernel test: exact for p = 2, necessary conditions only for odd p."""
    _require_homology(cand)
    table = table if table is not None else cand.h.table
    h = cand.h.values
    checks: list[dict[str, Any]] = []
    odd = [i for i, v in enumerate(h) if v % 2]
    checks.append({"check": "even-valued", "ok": not odd})
    if odd:
        return KernelReport(False, checks, {"check": "even-valued", "class": odd[0]},
                            exact=p == 2)
    if p == 2:
        return KernelReport(True, checks)
    subs = table.subgroups
    done: set = set()
    for k, K in enumerate(subs):
        for i, H in enumerate(subs):
            if H.order != K.order * p or not K.elements < H.elements:
                continue
            if not all(K.is_normalized_by(x) for x in H.generators):
                continue
            ck, ch = table.g_class_of[k], table.g_class_of[i]
            modulus = section_automizer_modulus(table, K, H)
            key = (ck, ch, modulus)
            if key in done:
                continue
            done.add(key)
            ok = (h[ck] - h[ch]) % modulus == 0
            checks.append({"check": "congruence", "pair": [ck, ch], "modulus": modulus, "ok": ok})
            if not ok:
                return KernelReport(False, checks, checks[-1], exact=False)
    return KernelReport(True, checks, exact=False)
