'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Permutations on a zero-based finite domain.
'''
import re
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple


class PermutationError(ValueError):
    pass


_CYCLE_PATTERN = re.compile(r'\(([^()]*)\)')


class Permutation(tuple):
    """
    Permutation of ``{0, ..., degree - 1}`` stored as its image tuple, so ``p[x]`` is the image of ``x``.
    It is a plain tuple underneath, which keeps hashing and equality cheap when whole groups are kept in sets.

    :Arguments:
        - images (Sequence[int]): Image of each point.
        - check (bool, optional): Validate that images form a bijection. Defaults to True.

    :Interfaces: from_cycles, cycles, inverse, order
    """

    def __new__(cls, images: Sequence[int], check: bool = True) -> 'Permutation':
        obj = super().__new__(cls, images)
        if check:
            if len(obj) == 0:
                raise PermutationError("permutation degree must be positive")
            if sorted(obj) != list(range(len(obj))):
                raise PermutationError("images {} are not a bijection on {} points".format(list(obj), len(obj)))
        return obj

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> Tuple[int, ...]:
        return tuple(self)

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> 'Permutation':
        """
        Parse zero-based cycle notation such as ``"(0,1,2)(3,4)"``. Points not mentioned are fixed,
        and ``"()"`` is the identity.
        """
        images = list(range(degree))
        seen = set()
        stripped = text.replace(' ', '')
        if _CYCLE_PATTERN.sub('', stripped) != '':
            raise PermutationError("cannot parse cycle string '{}'".format(text))
        for body in _CYCLE_PATTERN.findall(stripped):
            if body == '':
                continue
            try:
                points = [int(x) for x in body.split(',')]
            except ValueError:
                raise PermutationError("cannot parse cycle string '{}'".format(text))
            for x in points:
                if x < 0 or x >= degree:
                    raise PermutationError("point {} outside degree {} in '{}'".format(x, degree, text))
                if x in seen:
                    raise PermutationError("point {} repeated in '{}'".format(x, text))
                seen.add(x)
            for i, x in enumerate(points):
                images[x] = points[(i + 1) % len(points)]
        return cls(images)

    def cycles(self) -> List[Tuple[int, ...]]:
        return cycles(self)

    def inverse(self) -> 'Permutation':
        return inverse(self)

    def order(self) -> int:
        return element_order(self)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self))

    def __repr__(self) -> str:
        text = ''.join('(' + ','.join(str(x) for x in c) + ')' for c in cycles(self) if len(c) > 1)
        return 'Permutation({!r}, degree={})'.format(text or '()', len(self))


def identity(degree: int) -> Permutation:
    return Permutation(range(degree))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    Product ``p * q`` acting as ``x -> p(q(x))``.
    """
    if len(p) != len(q):
        raise PermutationError("cannot compose permutations of degree {} and {}".format(len(p), len(q)))
    return Permutation(tuple(p[x] for x in q), check=False)


def inverse(p: Permutation) -> Permutation:
    images = [0] * len(p)
    for x, y in enumerate(p):
        images[y] = x
    return Permutation(images, check=False)


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """
    ``g * p * g^-1``.
    """
    return compose(compose(g, p), inverse(g))


def commutator(p: Permutation, q: Permutation) -> Permutation:
    """
    ``p^-1 * q^-1 * p * q``.
    """
    return compose(compose(inverse(p), inverse(q)), compose(p, q))


def cycles(p: Sequence[int]) -> List[Tuple[int, ...]]:
    seen = [False] * len(p)
    result = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p[x]
        result.append(tuple(cycle))
    return result


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def lcm_all(values: Iterable[int]) -> int:
    return reduce(_lcm, values, 1)


def element_order(p: Permutation) -> int:
    """
    Order of ``p``, the least common multiple of its cycle lengths.
    """
    return lcm_all(len(c) for c in cycles(p))


def shift(p: Permutation, offset: int, degree: int) -> Permutation:
    """
    Embed ``p`` into a permutation of ``degree`` points acting on ``offset .. offset + p.degree - 1``.
    """
    images = list(range(degree))
    for x, y in enumerate(p):
        images[x + offset] = y + offset
    return Permutation(images, check=False)
