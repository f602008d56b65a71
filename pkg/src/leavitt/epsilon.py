"""Order theory on monomial sets and the constructive grading checkers.

Monomials of one degree are preordered by comparing their real paths: x is
below y when the real path of x is an initial subpath of the real path of y.
Two monomials are equivalent exactly when their real paths agree, so classes
are keyed by that path, and n(x) = x x* depends only on the class.

For a finite graph the minimal classes of each degree are finite and the sum
of their n-values is a two-sided local identity for that degree; for
arbitrary elements the same construction applied to the element's own
support yields element-specific local units. The checkers below turn these
constructions, plus the structural sink criterion for strong gradings, into
verdicts with explicit certificates and witnesses.

A bounded enumeration is declared complete when every path of length equal
to the bound already extends some minimal class: any longer candidate would
be dominated through its prefix. Two minimal classes that differ only in
which sample edge of one flagged vertex they use certify an infinite
minimal set, since each of the infinitely many parallel edges yields an
incomparable class of its own.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, Monomial, enumerate_monomials
from .graph import is_initial_subpath
from .grading import decompose, enumerate_Xg
from .reports import Report
from .rings import INTEGERS


class DegreeMismatchError(ValueError):
    """Comparison of monomials of different degrees."""


class WindowError(ValueError):
    """A degree window missing the identity or not closed under inverse."""


class HomogeneityError(ValueError):
    """An element that must be nonzero homogeneous is not."""


class ConstructionError(RuntimeError):
    """A construction whose verification cannot fail did fail; a bug."""


@dataclass(frozen=True)
class ClassRep:
    """One equivalence class: its canonical representative and key path."""

    representative: Monomial
    alpha: object

    def render(self):
        return self.representative.render()


@dataclass(frozen=True)
class MinimalClassSet:
    degree: object
    classes: tuple
    bound_used: int
    verdict: str  # complete | bound-exhausted | infinite-witness
    witness: tuple = None

    def alphas(self):
        return tuple(c.alpha for c in self.classes)


@dataclass(frozen=True)
class EpsilonReport:
    degree: object
    degree_map: object
    bound_used: int
    epsilon: object  # Element or None
    absent_reason: str
    certificate: tuple  # pairs of Elements, or None
    identity_checked_on: int
    minimal: MinimalClassSet

    @property
    def present(self):
        return self.epsilon is not None

    def to_report(self):
        group = self.degree_map.group
        fields = {
            "degree": group.render(self.degree),
            "bound": self.bound_used,
            "minimal-verdict": self.minimal.verdict,
            "minimal-classes": [c.render() for c in self.minimal.classes],
        }
        if self.present:
            fields["epsilon"] = str(self.epsilon)
            fields["certificate"] = [[str(x), str(y)] for x, y in self.certificate]
            fields["identity-checked-on"] = self.identity_checked_on
        else:
            fields["reason"] = self.absent_reason
            if self.minimal.witness:
                fields["witness"] = [c.render() for c in self.minimal.witness]
        return Report(
            kind="epsilon-report",
            verdict="PRESENT" if self.present else "ABSENT",
            fields=fields,
        )


@dataclass(frozen=True)
class LocalUnitPair:
    """Element-specific local units: left acts as identity from the left,
    right from the right, both verified exactly at construction."""

    element: object
    degree: object
    left: object
    right: object
    left_certificate: tuple
    right_certificate: tuple


@dataclass(frozen=True)
class NondegeneracyWitness:
    element: object
    degree: object
    left: object
    right: object

    def to_report(self, degree_map):
        return Report(
            kind="nondegeneracy-witness",
            verdict="PASS",
            fields={
                "degree": degree_map.group.render(self.degree),
                "element": str(self.element),
                "left-witness": str(self.left),
                "right-witness": str(self.right),
            },
        )


def class_leq(x, y, degree_map):
    """The preorder on one degree: real path of x initial in that of y."""
    if degree_map.degree_of(x) != degree_map.degree_of(y):
        raise DegreeMismatchError(
            f"{x.render()} and {y.render()} have different degrees"
        )
    return is_initial_subpath(x.alpha, y.alpha)


def nmap(graph, ring, x):
    """n(x) = x x*; collapses to the normal form of (alpha, alpha)."""
    return Element.from_terms(graph, ring, [(Monomial(x.alpha, x.alpha), 1)])


def _parent_key(path):
    if path.length == 1:
        return (0, (path.base.id,))
    return (path.length - 1, path.sort_key()[1][:-1])


def minimal_classes(g, degree_map, len_bound):
    """The minimal classes of the degree-g monomial set, within the bound.

    A path is realized when some second path of matching range and degree
    exists within the bound; minimal classes are realized paths none of
    whose proper prefixes is realized. Every cover relation runs through
    prefixes, so a frontier path is dominated exactly when one of its
    prefixes is realized; the verdict is complete when that holds for the
    whole frontier.
    """
    if len_bound < 1:
        raise ValueError("len_bound must be >= 1")
    graph = degree_map.graph
    group = degree_map.group
    group.check(g)
    ginv = group.inverse(g)

    paths = graph.enumerate_paths(len_bound)
    degree = {}
    first_in_bucket = {}
    for p in paths:
        key = p.sort_key()
        if p.length == 0:
            d = group.identity
        else:
            d = group.op(degree[_parent_key(p)], degree_map.degree_of_edge(p.edges[-1]))
        degree[key] = d
        first_in_bucket.setdefault((p.range.id, d), p)

    covered = {}
    minimal = []
    frontier_ok = True
    for p in paths:
        key = p.sort_key()
        need = group.op(ginv, degree[key])
        realized = (p.range.id, need) in first_in_bucket
        parent_covered = covered[_parent_key(p)] if p.length else False
        covered[key] = parent_covered or realized
        if realized and not parent_covered:
            minimal.append(p)
        if p.length == len_bound and not covered[key]:
            frontier_ok = False

    classes = []
    for alpha in minimal:
        need = group.op(ginv, degree[alpha.sort_key()])
        beta = first_in_bucket[(alpha.range.id, need)]
        classes.append(ClassRep(Monomial(alpha, beta), alpha))

    witness = _sibling_witness(graph, classes)
    if witness is not None:
        verdict = "infinite-witness"
    elif frontier_ok:
        verdict = "complete"
    else:
        verdict = "bound-exhausted"
    return MinimalClassSet(
        degree=g,
        classes=tuple(classes),
        bound_used=len_bound,
        verdict=verdict,
        witness=witness,
    )


def _sibling_witness(graph, classes):
    """Two minimal classes differing only by sample edges of one flagged vertex."""
    if not graph.infinite_emitters:
        return None
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            a, b = classes[i].alpha, classes[j].alpha
            if a.length != b.length or a.length == 0:
                continue
            diff = [k for k in range(a.length) if a.edges[k] != b.edges[k]]
            if len(diff) != 1:
                continue
            ea, eb = a.edges[diff[0]], b.edges[diff[0]]
            if ea.source == eb.source and graph.is_flagged(ea.source):
                return (classes[i], classes[j])
    return None


def _epsilon_from_classes(mcs, graph, ring):
    eps = Element.zero(graph, ring)
    certificate = []
    for rep in mcs.classes:
        eps = eps + nmap(graph, ring, rep.representative)
        certificate.append(
            (
                Element.monomial(graph, ring, rep.representative),
                Element.monomial(graph, ring, rep.representative.involution()),
            )
        )
    return eps, tuple(certificate)


def epsilon(g, degree_map, len_bound, ring=INTEGERS):
    """The degree-g local identity, with certificate and identity checks.

    When the minimal classes are complete the candidate is the sum of their
    n-values; it is then verified as a left identity on every enumerated
    degree-g monomial and as a right identity on every enumerated monomial
    of the inverse degree. An empty monomial set yields zero, reported as
    present.
    """
    graph = degree_map.graph
    group = degree_map.group
    mcs = minimal_classes(g, degree_map, len_bound)
    if mcs.verdict == "infinite-witness":
        return EpsilonReport(g, degree_map, len_bound, None, "infinite minimal set", None, 0, mcs)
    if mcs.verdict == "bound-exhausted":
        return EpsilonReport(
            g, degree_map, len_bound, None, f"undetermined at bound {len_bound}", None, 0, mcs
        )

    eps, certificate = _epsilon_from_classes(mcs, graph, ring)
    checked = 0
    for x in enumerate_Xg(g, degree_map, len_bound):
        ex = Element.monomial(graph, ring, x)
        if eps * ex != ex:
            return EpsilonReport(
                g, degree_map, len_bound, None,
                f"identity verification failed on {x.render()}; raise the bound",
                None, checked, mcs,
            )
        checked += 1
    for y in enumerate_Xg(group.inverse(g), degree_map, len_bound):
        ey = Element.monomial(graph, ring, y)
        if ey * eps != ey:
            return EpsilonReport(
                g, degree_map, len_bound, None,
                f"identity verification failed on {y.render()}; raise the bound",
                None, checked, mcs,
            )
        checked += 1
    return EpsilonReport(g, degree_map, len_bound, eps, None, certificate, checked, mcs)


def _support_unit(s):
    """The local-unit element built from the minimal classes of s's support."""
    monos = s.support()
    alphas = []
    seen = set()
    for m in monos:
        if m.alpha not in seen:
            seen.add(m.alpha)
            alphas.append(m.alpha)
    minimal = [
        a
        for a in alphas
        if not any(b != a and is_initial_subpath(b, a) for b in alphas)
    ]
    minimal.sort(key=lambda p: p.sort_key())
    graph, ring = s.graph, s.ring
    unit = Element.zero(graph, ring)
    certificate = []
    for a in minimal:
        rep = next(m for m in monos if m.alpha == a)
        unit = unit + nmap(graph, ring, rep)
        certificate.append(
            (
                Element.monomial(graph, ring, rep),
                Element.monomial(graph, ring, rep.involution()),
            )
        )
    return unit, tuple(certificate)


def local_units(s, degree_map):
    """Element-specific local units for a nonzero homogeneous element.

    The left unit sums n over the minimal classes among s's own support, so
    no enumeration bound enters; the right unit is the left unit of the
    adjoint. Both identities are verified exactly.
    """
    if s.is_zero():
        raise HomogeneityError("the zero element has no local units")
    g = decompose(s, degree_map).sole_degree()
    if g is None:
        raise HomogeneityError("element is not homogeneous")
    left, left_cert = _support_unit(s)
    right, star_cert = _support_unit(s.involution())
    if left * s != s:
        raise ConstructionError(f"left unit failed on {s}")
    if s * right != s:
        raise ConstructionError(f"right unit failed on {s}")
    return LocalUnitPair(
        element=s,
        degree=g,
        left=left,
        right=right,
        left_certificate=left_cert,
        right_certificate=star_cert,
    )


def common_local_unit(elements, side, degree_map):
    """One element acting as identity on every listed element from one side.

    Built from the minimal classes of the concatenated supports, so a finite
    family of same-degree elements always has a common unit.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    elems = list(elements)
    if not elems:
        raise ValueError("need at least one element")
    nonzero = [e for e in elems if not e.is_zero()]
    if not nonzero:
        return Element.zero(elems[0].graph, elems[0].ring)
    degrees = {decompose(e, degree_map).sole_degree() for e in nonzero}
    if None in degrees or len(degrees) > 1:
        raise HomogeneityError("elements must be homogeneous of one common degree")
    graph, ring = nonzero[0].graph, nonzero[0].ring
    pool = {}
    for e in nonzero:
        source = e if side == "left" else e.involution()
        for m in source.terms:
            pool[m] = ring.coerce(1)
    unit, _ = _support_unit(Element(graph, ring, pool))
    for e in nonzero:
        acted = unit * e if side == "left" else e * unit
        if acted != e:
            raise ConstructionError(f"common {side} unit failed on {e}")
    return unit


def check_symmetric(degree_map, len_bound, ring=INTEGERS):
    """Verify m = m m* m for every monomial within the bound."""
    graph = degree_map.graph
    checked = 0
    for m in enumerate_monomials(graph, len_bound):
        em = Element.monomial(graph, ring, m)
        if em * em.involution() * em != em:
            return Report(
                kind="symmetric-grading-check",
                verdict="FAIL",
                fields={"bound": len_bound, "witness": m.render()},
            )
        checked += 1
    return Report(
        kind="symmetric-grading-check",
        verdict="PASS",
        fields={"bound": len_bound, "monomials-checked": checked},
    )


def _validate_window(group, window):
    window = list(window)
    if not window:
        raise WindowError("degree window must be nonempty")
    seen = set()
    for g in window:
        group.check(g)
        seen.add(g)
    if group.identity not in seen:
        raise WindowError("degree window must contain the identity")
    for g in seen:
        if group.inverse(g) not in seen:
            raise WindowError("degree window must be closed under inverse")
    return sorted(seen, key=group.sort_key)


def check_epsilon_strong(degree_map, degree_window, len_bound, ring=INTEGERS):
    """Run the local-identity construction over a degree window.

    EPSILON_STRONG when every degree in the window has a verified local
    identity; NOT_EPSILON_STRONG with the sibling-class witness when some
    degree has an infinite minimal set; UNDETERMINED when a degree exhausts
    the bound. For a graph with no flagged vertices the positive verdict is
    unconditional, finiteness alone forces it for every standard grading.
    """
    graph = degree_map.graph
    group = degree_map.group
    window = _validate_window(group, degree_window)
    epsilons = {}
    infinite = []
    undetermined = []
    checked = 0
    for g in window:
        rep = epsilon(g, degree_map, len_bound, ring)
        if rep.present:
            epsilons[group.render(g)] = str(rep.epsilon)
            checked += rep.identity_checked_on
        elif rep.minimal.verdict == "infinite-witness":
            infinite.append(rep)
        else:
            undetermined.append(rep)
    fields = {
        "bound": len_bound,
        "window": [group.render(g) for g in window],
        "unconditional": not graph.infinite_emitters,
    }
    if infinite:
        rep = infinite[0]
        fields["witness"] = {
            "degree": group.render(rep.degree),
            "sibling-classes": [c.render() for c in rep.minimal.witness],
        }
        return Report("epsilon-strong-check", "NOT_EPSILON_STRONG", fields)
    if undetermined:
        rep = undetermined[0]
        fields["witness"] = {
            "degree": group.render(rep.degree),
            "reason": rep.absent_reason,
        }
        return Report("epsilon-strong-check", "UNDETERMINED", fields)
    fields["epsilons"] = epsilons
    fields["identity-checked-on"] = checked
    return Report("epsilon-strong-check", "EPSILON_STRONG", fields)


def check_strongly_graded(degree_map, degree_window, len_bound, ring=INTEGERS):
    """Two independent verdicts on strong grading, reported together.

    The structural arm applies to unflagged graphs under the canonical
    Z-grading: strongly graded exactly when there is no sink. The
    computational arm declares the window strongly graded exactly when
    every degree's local identity equals the sum of all vertices. When both
    arms decide they must agree; a mismatch is reported as DISAGREEMENT.
    """
    graph = degree_map.graph
    group = degree_map.group
    window = _validate_window(group, degree_window)

    structural_applicable = degree_map.is_canonical_z() and not graph.infinite_emitters
    sinks = sorted(v.id for v in graph.sinks())
    structural = {
        "applicable": structural_applicable,
        "verdict": ("STRONG" if not sinks else "NOT_STRONG") if structural_applicable else None,
        "sinks": sinks,
    }

    ident = Element.identity(graph, ring)
    comp_verdict = "STRONG"
    comp_witness = None
    saw_undetermined = False
    for g in window:
        mcs = minimal_classes(g, degree_map, len_bound)
        if mcs.verdict == "infinite-witness":
            comp_verdict = "NOT_STRONG"
            comp_witness = {
                "degree": group.render(g),
                "reason": "infinite minimal set",
                "sibling-classes": [c.render() for c in mcs.witness],
            }
            break
        if mcs.verdict == "bound-exhausted":
            saw_undetermined = True
            continue
        eps, _ = _epsilon_from_classes(mcs, graph, ring)
        if eps != ident:
            comp_verdict = "NOT_STRONG"
            comp_witness = {
                "degree": group.render(g),
                "epsilon": str(eps),
                "identity": str(ident),
            }
            break
    if comp_verdict == "STRONG" and saw_undetermined:
        comp_verdict = "UNDETERMINED"
    computational = {
        "verdict": comp_verdict,
        "bound": len_bound,
        "window": [group.render(g) for g in window],
    }
    if comp_witness:
        computational["witness"] = comp_witness

    agreement = None
    if structural_applicable and comp_verdict != "UNDETERMINED":
        agreement = structural["verdict"] == comp_verdict

    if agreement is False:
        verdict = "DISAGREEMENT"
    elif comp_verdict != "UNDETERMINED":
        verdict = comp_verdict
    elif structural_applicable:
        verdict = structural["verdict"]
    else:
        verdict = "UNDETERMINED"
    return Report(
        kind="strongly-graded-check",
        verdict=verdict,
        fields={
            "structural": structural,
            "computational": computational,
            "agreement": agreement,
        },
    )


def check_nearly_epsilon(degree_map, samples):
    """Construct and verify local units for every homogeneous sample.

    The construction is total, so PASS is a certificate; a verification
    failure can only mean a defect in the engine and is reported as such.
    """
    certificates = []
    skipped = 0
    for s in samples:
        if s.is_zero():
            skipped += 1
            continue
        try:
            lu = local_units(s, degree_map)
        except ConstructionError as exc:
            return Report(
                kind="nearly-epsilon-check",
                verdict="FAIL",
                fields={"witness": str(s), "note": f"engine defect: {exc}"},
            )
        certificates.append(
            {"element": str(s), "left": str(lu.left), "right": str(lu.right)}
        )
    return Report(
        kind="nearly-epsilon-check",
        verdict="PASS",
        fields={
            "samples-verified": len(certificates),
            "skipped-zero": skipped,
            "certificates": certificates,
        },
    )


def check_nondegenerate(s, degree_map):
    """An explicit witness that s does not annihilate its inverse-degree side.

    Returns the verified pair: a left unit in the (g, g^-1) product span and
    a right unit in the (g^-1, g) product span, each reproducing s exactly.
    """
    lu = local_units(s, degree_map)
    return NondegeneracyWitness(
        element=s, degree=lu.degree, left=lu.left, right=lu.right
    )
