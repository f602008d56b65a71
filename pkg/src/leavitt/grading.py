"""Group gradings induced by assigning a group element to every edge.

Vertices have the identity degree, an edge carries its assigned degree, and
a ghost edge carries the inverse, so a monomial a b* has degree
deg(a) * deg(b)^-1. Supported groups: Z, Z^k, Z/n, and arbitrary finite
groups given by a Cayley table.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Element, Monomial, enumerate_monomials
from .rings import INTEGERS
from .reports import Report


class GroupError(ValueError):
    """An invalid group description or group element."""


class DegreeMapError(ValueError):
    """An invalid edge degree assignment."""


class Group:
    """A group with hashable, comparable elements and total operations."""

    name = "?"
    is_finite = False

    @property
    def identity(self):
        raise NotImplementedError

    def op(self, a, b):
        raise NotImplementedError

    def inverse(self, a):
        raise NotImplementedError

    def contains(self, a):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def render(self, a):
        return str(a)

    def sort_key(self, a):
        return a

    def elements(self):
        raise GroupError(f"{self.name} is not finite")

    def check(self, a):
        if not self.contains(a):
            raise GroupError(f"{a!r} is not an element of {self.name}")
        return a

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash((type(self), self.name))

    def __repr__(self):
        return f"Group({self.name})"


class IntegerGroup(Group):
    name = "Z"

    @property
    def identity(self):
        return 0

    def op(self, a, b):
        return a + b

    def inverse(self, a):
        return -a

    def contains(self, a):
        return isinstance(a, int)

    def parse(self, text):
        try:
            return int(text.strip())
        except ValueError:
            raise GroupError(f"{text!r} is not an integer") from None


class IntegerTupleGroup(Group):
    """Z^k with componentwise addition; elements are k-tuples of ints."""

    def __init__(self, rank):
        if not isinstance(rank, int) or rank < 1:
            raise GroupError(f"rank must be a positive integer, got {rank!r}")
        self.rank = rank
        self.name = f"Z^{rank}"

    @property
    def identity(self):
        return (0,) * self.rank

    def op(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inverse(self, a):
        return tuple(-x for x in a)

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == self.rank
            and all(isinstance(x, int) for x in a)
        )

    def parse(self, text):
        parts = [p.strip() for p in text.strip().split(",")]
        if len(parts) != self.rank:
            raise GroupError(f"{text!r} does not have {self.rank} components")
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            raise GroupError(f"{text!r} is not a tuple of integers") from None

    def render(self, a):
        return ",".join(str(x) for x in a)

    def __eq__(self, other):
        return type(self) is type(other) and self.rank == other.rank

    def __hash__(self):
        return hash((type(self), self.rank))


class CyclicGroup(Group):
    """Z/n; elements are canonical residues 0..n-1. n = 1 is the trivial group."""

    is_finite = True

    def __init__(self, modulus):
        if not isinstance(modulus, int) or modulus < 1:
            raise GroupError(f"modulus must be a positive integer, got {modulus!r}")
        self.modulus = modulus
        self.name = f"Z/{modulus}"

    @property
    def identity(self):
        return 0

    def op(self, a, b):
        return (a + b) % self.modulus

    def inverse(self, a):
        return (-a) % self.modulus

    def contains(self, a):
        return isinstance(a, int) and 0 <= a < self.modulus

    def parse(self, text):
        try:
            return int(text.strip()) % self.modulus
        except ValueError:
            raise GroupError(f"{text!r} is not a residue mod {self.modulus}") from None

    def elements(self):
        return tuple(range(self.modulus))

    def __eq__(self, other):
        return type(self) is type(other) and self.modulus == other.modulus

    def __hash__(self):
        return hash((type(self), self.modulus))


class TableGroup(Group):
    """A finite group given by its Cayley table over string symbols.

    The table is validated in full at construction: closure, associativity,
    a two-sided identity and two-sided inverses.
    """

    is_finite = True

    def __init__(self, symbols, table, name="table"):
        self.symbols = tuple(symbols)
        if len(set(self.symbols)) != len(self.symbols):
            raise GroupError("duplicate symbols in group table")
        if not self.symbols:
            raise GroupError("a group needs at least one element")
        self.table = dict(table)
        self.name = name
        self._index = {s: i for i, s in enumerate(self.symbols)}

        for a in self.symbols:
            for b in self.symbols:
                c = self.table.get((a, b))
                if c is None:
                    raise GroupError(f"missing table entry for ({a}, {b})")
                if c not in self._index:
                    raise GroupError(f"table entry {c!r} is not a listed symbol")
        identity = None
        for e in self.symbols:
            if all(
                self.table[(e, x)] == x and self.table[(x, e)] == x
                for x in self.symbols
            ):
                identity = e
                break
        if identity is None:
            raise GroupError("group table has no identity element")
        self._identity = identity
        self._inverse = {}
        for a in self.symbols:
            for b in self.symbols:
                if self.table[(a, b)] == identity and self.table[(b, a)] == identity:
                    self._inverse[a] = b
                    break
            else:
                raise GroupError(f"element {a!r} has no inverse")
        for a in self.symbols:
            for b in self.symbols:
                for c in self.symbols:
                    if self.table[(self.table[(a, b)], c)] != self.table[(a, self.table[(b, c)])]:
                        raise GroupError(
                            f"group table is not associative at ({a}, {b}, {c})"
                        )

    @property
    def identity(self):
        return self._identity

    def op(self, a, b):
        return self.table[(a, b)]

    def inverse(self, a):
        return self._inverse[a]

    def contains(self, a):
        return a in self._index

    def parse(self, text):
        sym = text.strip()
        if sym not in self._index:
            raise GroupError(f"{sym!r} is not a symbol of this group")
        return sym

    def sort_key(self, a):
        return self._index[a]

    def elements(self):
        return self.symbols

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.symbols == other.symbols
            and self.table == other.table
        )

    def __hash__(self):
        return hash((type(self), self.symbols))


def parse_group_table(text, name="table"):
    """Cayley table text: a line of N symbols, then N rows of N entries.

    Row i, column j holds the product (row element) * (column element).
    Blank lines and '#' comments are skipped.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GroupError("empty group table")
    symbols = rows[0]
    n = len(symbols)
    if len(rows) != n + 1:
        raise GroupError(f"expected {n} table rows after the symbol line, got {len(rows) - 1}")
    table = {}
    for i, row in enumerate(rows[1:]):
        if len(row) != n:
            raise GroupError(f"table row {i + 1} has {len(row)} entries, expected {n}")
        for j, entry in enumerate(row):
            table[(symbols[i], symbols[j])] = entry
    return TableGroup(symbols, table, name=name)


class DegreeMap:
    """An edge degree assignment and its extension to paths and monomials."""

    def __init__(self, graph, group, edge_degrees):
        self.graph = graph
        self.group = group
        degrees = {}
        for key, value in dict(edge_degrees).items():
            eid = key if isinstance(key, str) else key.id
            graph.edge(eid)
            degrees[eid] = group.check(value)
        missing = [e.id for e in graph.edges if e.id not in degrees]
        if missing:
            raise DegreeMapError(f"edges without a degree: {', '.join(missing)}")
        self.edge_degrees = degrees

    @classmethod
    def canonical(cls, graph):
        """The canonical Z-grading: every edge has degree 1."""
        return cls(graph, IntegerGroup(), {e.id: 1 for e in graph.edges})

    def is_canonical_z(self):
        return isinstance(self.group, IntegerGroup) and all(
            d == 1 for d in self.edge_degrees.values()
        )

    def degree_of_edge(self, edge):
        try:
            return self.edge_degrees[edge.id]
        except KeyError:
            raise DegreeMapError(f"unknown edge {edge.id!r}") from None

    def degree_of_path(self, path):
        g = self.group.identity
        for e in path.edges:
            g = self.group.op(g, self.degree_of_edge(e))
        return g

    def degree_of(self, mono):
        """deg(a) * deg(b)^-1 for the monomial a b*."""
        return self.group.op(
            self.degree_of_path(mono.alpha),
            self.group.inverse(self.degree_of_path(mono.beta)),
        )

    def __repr__(self):
        return f"DegreeMap({self.group.name}, {len(self.edge_degrees)} edges)"


def parse_degree_map(text, graph, table_loader=None):
    """Parse the degree-map file format.

    ::

        group Z            # or Z^k, Z/n, table <file>
        deg f1 = 1
        deg f2 = -1

    Every listed edge of the graph must receive a degree. The table file
    named after ``group table`` is fetched through table_loader.
    """
    group = None
    assignments = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        if parts[0] == "group":
            if group is not None:
                raise DegreeMapError(f"line {line_no}: duplicate group header")
            if len(parts) < 2:
                raise DegreeMapError(f"line {line_no}: missing group kind")
            group = _parse_group_header(parts[1].strip(), table_loader, line_no)
        elif parts[0] == "deg":
            if group is None:
                raise DegreeMapError(f"line {line_no}: 'group' header must come first")
            if len(parts) < 2 or "=" not in parts[1]:
                raise DegreeMapError(f"line {line_no}: expected 'deg <edge> = <degree>'")
            left, right = parts[1].split("=", 1)
            eid = left.strip()
            if not eid:
                raise DegreeMapError(f"line {line_no}: missing edge id")
            try:
                value = group.parse(right)
            except GroupError as exc:
                raise DegreeMapError(f"line {line_no}: {exc}") from None
            assignments.append((eid, value))
        else:
            raise DegreeMapError(f"line {line_no}: expected 'group' or 'deg', got {parts[0]!r}")
    if group is None:
        raise DegreeMapError("missing 'group' header")
    return DegreeMap(graph, group, dict(assignments))


def _parse_group_header(spec, table_loader, line_no):
    if spec == "Z":
        return IntegerGroup()
    if spec.startswith("Z^"):
        try:
            return IntegerTupleGroup(int(spec[2:]))
        except (ValueError, GroupError):
            raise DegreeMapError(f"line {line_no}: bad group {spec!r}") from None
    if spec.startswith("Z/"):
        try:
            return CyclicGroup(int(spec[2:]))
        except (ValueError, GroupError):
            raise DegreeMapError(f"line {line_no}: bad group {spec!r}") from None
    if spec.startswith("table"):
        filename = spec[len("table"):].strip()
        if not filename:
            raise DegreeMapError(f"line {line_no}: 'group table' needs a file name")
        if table_loader is None:
            raise DegreeMapError(f"line {line_no}: no loader available for table files")
        return parse_group_table(table_loader(filename), name=f"table:{filename}")
    raise DegreeMapError(f"line {line_no}: unknown group kind {spec!r}")


@dataclass
class HomogeneousDecomposition:
    """The homogeneous parts of an element, keyed by degree.

    Degrees with a zero part are absent; summing the parts restores the
    decomposed element.
    """

    degree_map: DegreeMap
    graph: object
    ring: object
    parts: dict = field(default_factory=dict)

    def degrees(self):
        return sorted(self.parts, key=self.degree_map.group.sort_key)

    def part(self, g):
        return self.parts.get(g, Element.zero(self.graph, self.ring))

    def reassemble(self):
        total = Element.zero(self.graph, self.ring)
        for p in self.parts.values():
            total = total + p
        return total

    def sole_degree(self):
        """The unique degree of a homogeneous nonzero element, else None."""
        if len(self.parts) == 1:
            return next(iter(self.parts))
        return None


def decompose(element, degree_map):
    """Group the terms of an element by monomial degree."""
    buckets = {}
    for m, c in element.terms.items():
        buckets.setdefault(degree_map.degree_of(m), {})[m] = c
    group = degree_map.group
    parts = {
        g: Element(element.graph, element.ring, terms)
        for g, terms in sorted(buckets.items(), key=lambda kv: group.sort_key(kv[0]))
    }
    return HomogeneousDecomposition(degree_map, element.graph, element.ring, parts)


def path_degree_buckets(degree_map, len_bound):
    """Paths up to len_bound grouped by (range vertex id, degree)."""
    buckets = {}
    for p in degree_map.graph.enumerate_paths(len_bound):
        buckets.setdefault((p.range.id, degree_map.degree_of_path(p)), []).append(p)
    return buckets


def enumerate_Xg(g, degree_map, len_bound):
    """All normal-form monomials of degree g with both paths <= len_bound.

    Canonically ordered; flagged vertices contribute their listed sample
    edges only, so for flagged graphs this is the sample slice of the true
    monomial set.
    """
    if len_bound < 0:
        raise ValueError("len_bound must be >= 0")
    graph = degree_map.graph
    group = degree_map.group
    group.check(g)
    ginv = group.inverse(g)
    buckets = path_degree_buckets(degree_map, len_bound)
    out = []
    for p in graph.enumerate_paths(len_bound):
        need = group.op(ginv, degree_map.degree_of_path(p))
        for b in buckets.get((p.range.id, need), ()):
            m = Monomial(p, b)
            if m.is_normal(graph):
                out.append(m)
    out.sort(key=Monomial.sort_key)
    return tuple(out)


def check_grading_axiom(degree_map, len_bound, ring=INTEGERS):
    """Verify that products land in the product degree, over all monomial
    pairs up to the length bound. Returns a PASS report or the first
    counterexample.
    """
    graph = degree_map.graph
    group = degree_map.group
    monos = enumerate_monomials(graph, len_bound)
    elements = {m: Element.monomial(graph, ring, m) for m in monos}
    degrees = {m: degree_map.degree_of(m) for m in monos}
    pairs = 0
    for x in monos:
        for y in monos:
            pairs += 1
            expected = group.op(degrees[x], degrees[y])
            product = elements[x] * elements[y]
            for d in decompose(product, degree_map).parts:
                if d != expected:
                    return Report(
                        kind="grading-axiom-check",
                        verdict="FAIL",
                        fields={
                            "bound": len_bound,
                            "witness": {
                                "left": x.render(),
                                "right": y.render(),
                                "expected-degree": group.render(expected),
                                "found-degree": group.render(d),
                                "product": str(product),
                            },
                        },
                    )
    return Report(
        kind="grading-axiom-check",
        verdict="PASS",
        fields={"bound": len_bound, "monomials": len(monos), "pairs-checked": pairs},
    )
