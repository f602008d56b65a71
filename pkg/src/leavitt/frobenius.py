"""Frobenius systems over the identity component for finite grading groups.

The trace is projection onto the identity degree, and the dual families are
the factorization certificates of the per-degree local identities: for each
group element the certificate pairs multiply back to that degree's local
identity, which reproduces any homogeneous element from either side. The
system is verified, never trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element
from .epsilon import ConstructionError, epsilon
from .grading import decompose
from .reports import Report
from .rings import INTEGERS


class FrobeniusBuildError(ValueError):
    """The system cannot be assembled; carries the blocking reason."""


@dataclass(frozen=True)
class FrobeniusSystem:
    degree_map: object
    ring: object
    bound_used: int
    pairs: tuple  # ((x_j, y_j), ...) with x_j, y_j homogeneous of inverse degrees
    epsilons: dict  # group element -> Element

    @property
    def graph(self):
        return self.degree_map.graph

    def trace(self, a):
        return projection_e(a, self.degree_map)


def projection_e(a, degree_map):
    """The identity-degree part of an element."""
    return decompose(a, degree_map).part(degree_map.group.identity)


def build_frobenius_system(degree_map, len_bound, ring=INTEGERS):
    """Assemble the dual pairs from every degree's local-identity certificate.

    Requires a finite group and an unflagged graph; any degree whose local
    identity is unavailable aborts the build with that degree's reason.
    """
    group = degree_map.group
    graph = degree_map.graph
    if not group.is_finite:
        raise FrobeniusBuildError(f"group {group.name} is not finite")
    if graph.infinite_emitters:
        raise FrobeniusBuildError("graph has flagged infinite emitters")
    pairs = []
    epsilons = {}
    for g in sorted(group.elements(), key=group.sort_key):
        rep = epsilon(g, degree_map, len_bound, ring)
        if not rep.present:
            raise FrobeniusBuildError(
                f"local identity at degree {group.render(g)} unavailable: {rep.absent_reason}"
            )
        epsilons[g] = rep.epsilon
        pairs.extend(rep.certificate)

    total = Element.zero(graph, ring)
    for x, y in pairs:
        total = total + x * y
    eps_sum = Element.zero(graph, ring)
    for e in epsilons.values():
        eps_sum = eps_sum + e
    if total != eps_sum:
        raise ConstructionError(
            f"pair products {total} do not sum to the local identities {eps_sum}"
        )
    return FrobeniusSystem(
        degree_map=degree_map,
        ring=ring,
        bound_used=len_bound,
        pairs=tuple(pairs),
        epsilons=epsilons,
    )


def verify_frobenius(system, samples, bimodule_triples=(), seed=None):
    """Check both reproduction identities on every sample, and the trace
    bimodule law on every (t, a, t') triple with t, t' of identity degree.

    Returns PASS or the first counterexample.
    """
    dm = system.degree_map
    graph, ring = system.graph, system.ring
    group = dm.group
    fields = {
        "group": group.name,
        "bound": system.bound_used,
        "pairs": len(system.pairs),
    }
    if seed is not None:
        fields["seed"] = seed

    checked = 0
    for s in samples:
        left = Element.zero(graph, ring)
        right = Element.zero(graph, ring)
        for x, y in system.pairs:
            left = left + x * projection_e(y * s, dm)
            right = right + projection_e(s * x, dm) * y
        if left != s or right != s:
            which = "x_j E(y_j s)" if left != s else "E(s x_j) y_j"
            fields["witness"] = {
                "element": str(s),
                "identity": which,
                "reconstructed": str(left if left != s else right),
            }
            return Report("frobenius-verification", "FAIL", fields)
        checked += 1
    fields["samples-verified"] = checked

    triples_checked = 0
    for t, a, t2 in bimodule_triples:
        for side in (t, t2):
            deg = decompose(side, dm).sole_degree()
            if not side.is_zero() and deg != group.identity:
                raise ValueError("bimodule factors must have identity degree")
        if projection_e(t * a * t2, dm) != t * projection_e(a, dm) * t2:
            fields["witness"] = {
                "law": "E(t a t')",
                "t": str(t),
                "a": str(a),
                "t2": str(t2),
            }
            return Report("frobenius-verification", "FAIL", fields)
        triples_checked += 1
    fields["bimodule-triples-verified"] = triples_checked
    return Report("frobenius-verification", "PASS", fields)
