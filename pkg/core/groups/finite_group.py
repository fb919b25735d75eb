'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Finite permutation groups realised by closure over their generators.
'''
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence

from .permutation import Permutation, PermutationError, compose, conjugate, commutator, identity, inverse, shift

DEFAULT_ENUM_CAP = 10000
DEFAULT_MAX_NORMAL_CLOSURES = 24


class EnumerationCapError(RuntimeError):
    pass


class NormalSubgroupGuardError(RuntimeError):
    pass


class FiniteGroup(object):
    """
    A permutation group given by generators together with its full element set. Instances are built by
    ``enumerate_group`` and are never modified afterwards, so they can be shared freely.

    :Arguments:
        - generators (Sequence[Permutation]): Non-empty list of generators of one degree.
        - elements (Iterable[Permutation]): All elements of the generated group.

    :Properties:
        - degree (int): Number of points acted on.
        - order (int): Number of elements.
        - identity (Permutation): Identity of the right degree.
    """

    def __init__(self, generators: Sequence[Permutation], elements: Iterable[Permutation]) -> None:
        self._generators = tuple(generators)
        self._elements = frozenset(elements)
        self._degree = len(self._generators[0])

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple:
        return self._generators

    @property
    def elements(self) -> FrozenSet[Permutation]:
        return self._elements

    @property
    def order(self) -> int:
        return len(self._elements)

    @property
    def identity(self) -> Permutation:
        return identity(self._degree)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._elements

    def __iter__(self) -> Iterator[Permutation]:
        return iter(sorted(self._elements))

    def __len__(self) -> int:
        return len(self._elements)

    def __repr__(self) -> str:
        return 'FiniteGroup(order={}, degree={}, ngens={})'.format(self.order, self._degree, len(self._generators))


def enumerate_group(generators: Sequence[Sequence[int]], cap: int = DEFAULT_ENUM_CAP) -> FiniteGroup:
    """
    Breadth-first closure of ``generators`` under composition.

    :Arguments:
        - generators (Sequence): Permutations, or image sequences, all of one degree.
        - cap (int, optional): Largest group order accepted. Defaults to 10000.

    :Returns:
        FiniteGroup: The generated group.
    """
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
    if len(gens) == 0:
        raise PermutationError("a group needs at least one generator")
    degree = len(gens[0])
    for g in gens:
        if len(g) != degree:
            raise PermutationError("generators of degree {} and {} cannot be combined".format(degree, len(g)))

    e = identity(degree)
    elements = {e}
    frontier = [e]
    while frontier:
        found = []
        for g in frontier:
            for s in gens:
                h = Permutation(tuple(s[x] for x in g), check=False)
                if h not in elements:
                    elements.add(h)
                    if len(elements) > cap:
                        raise EnumerationCapError("group enumeration exceeded the cap of {} elements".format(cap))
                    found.append(h)
        frontier = found
    return FiniteGroup(gens, elements)


def trivial_subgroup(group: FiniteGroup) -> FiniteGroup:
    e = group.identity
    return FiniteGroup([e], [e])


def normal_closure(group: FiniteGroup, elements: Iterable[Permutation]) -> FiniteGroup:
    """
    Smallest normal subgroup of ``group`` containing ``elements``.
    """
    gens = []
    for x in elements:
        if not x.is_identity() and x not in gens:
            gens.append(x)
    if not gens:
        return trivial_subgroup(group)
    while True:
        sub = enumerate_group(gens, cap=group.order)
        extra = []
        for g in group.generators:
            for x in gens:
                y = conjugate(x, g)
                if y not in sub.elements and y not in extra:
                    extra.append(y)
        if not extra:
            return sub
        gens.extend(extra)


def derived_subgroup(group: FiniteGroup) -> FiniteGroup:
    """
    Commutator subgroup, computed as the normal closure of the commutators of generator pairs.
    """
    gens = group.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(group, comms)


def derived_series(group: FiniteGroup) -> List[FiniteGroup]:
    series = [group]
    while series[-1].order > 1:
        nxt = derived_subgroup(series[-1])
        if nxt.order == series[-1].order:
            break
        series.append(nxt)
    return series


def is_solvable(group: FiniteGroup) -> bool:
    return derived_series(group)[-1].order == 1


def is_abelian(group: FiniteGroup) -> bool:
    gens = group.generators
    return all(compose(a, b) == compose(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])


def conjugacy_classes(group: FiniteGroup) -> List[FrozenSet[Permutation]]:
    """
    Conjugacy classes, each found as the orbit of its smallest element under conjugation by the generators.
    """
    conjugators = [(g, inverse(g)) for g in group.generators]
    assigned = set()
    classes = []
    for x in sorted(group.elements):
        if x in assigned:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            found = []
            for y in frontier:
                for g, g_inv in conjugators:
                    z = compose(compose(g, y), g_inv)
                    if z not in orbit:
                        orbit.add(z)
                        found.append(z)
            frontier = found
        assigned.update(orbit)
        classes.append(frozenset(orbit))
    return classes


def normal_subgroups(group: FiniteGroup, max_closures: int = DEFAULT_MAX_NORMAL_CLOSURES) -> List[FiniteGroup]:
    """
    All normal subgroups of ``group``, sorted by order. The normal closures of single conjugacy classes are
    joined pairwise until no new subgroup appears; every normal subgroup is the join of the closures of its
    classes, so the list is complete.

    :Arguments:
        - group (FiniteGroup): Enumerated group.
        - max_closures (int, optional): Largest number of distinct class closures accepted. Defaults to 24.
    """
    closures: Dict[FrozenSet[Permutation], FiniteGroup] = dict()
    for cls in conjugacy_classes(group):
        rep = min(cls)
        if rep.is_identity():
            continue
        closure = normal_closure(group, [rep])
        closures.setdefault(closure.elements, closure)
    if len(closures) > max_closures:
        raise NormalSubgroupGuardError(
            "{} distinct class closures exceed the guard of {}".format(len(closures), max_closures)
        )

    trivial = trivial_subgroup(group)
    lattice = {trivial.elements: trivial}
    lattice.update(closures)
    irreducible = list(closures.values())
    queue = list(irreducible)
    while queue:
        a = queue.pop()
        for b in irreducible:
            if b.elements <= a.elements or a.elements <= b.elements:
                continue
            join = enumerate_group(a.generators + b.generators, cap=group.order)
            if join.elements not in lattice:
                lattice[join.elements] = join
                queue.append(join)
    return sorted(lattice.values(), key=lambda n: (n.order, sorted(n.elements)))


def is_direct_product(group: FiniteGroup, max_closures: int = DEFAULT_MAX_NORMAL_CLOSURES) -> bool:
    """
    Whether ``group`` has two proper nontrivial normal subgroups with trivial intersection whose orders multiply
    to the group order.
    """
    if group.order < 4:
        return False
    proper = [n for n in normal_subgroups(group, max_closures) if 1 < n.order < group.order]
    for i, a in enumerate(proper):
        for b in proper[i + 1:]:
            if a.order * b.order == group.order and len(a.elements & b.elements) == 1:
                return True
    return False


def direct_product(groups: Sequence[FiniteGroup], cap: int = DEFAULT_ENUM_CAP) -> FiniteGroup:
    """
    Direct product realised on disjoint supports, the degree being the sum of the factor degrees.
    """
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for s in g.generators:
            gens.append(shift(s, offset, degree))
        offset += g.degree
    return enumerate_group(gens, cap=cap)
