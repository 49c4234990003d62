"""Small permutation groups, fully materialized.

Permutations act on the right, as in the group-theory literature: ``p * q``
means "apply p, then q", so ``(p * q)(x) == q(p(x))`` and ``x ** (p * q)``
reads as ``(x ** p) ** q``.  Conjugation ``h ** g`` is ``g**-1 * h * g``.

Every ``PermGroup`` keeps the full sorted element list together with a
``(order, degree)`` numpy array; stabilizers, centralizers and orbits are
plain scans over that array.  This is meant for groups of a few thousand
elements, not for anything needing Schreier-Sims.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

TAG_MODULUS = 3


class DegreeMismatchError(ValueError):
    pass


class NotAMemberError(ValueError):
    pass


class IntransitiveError(ValueError):
    pass


def _compose_tags(a, b):
    if a is None or b is None:
        return None
    return (a + b) % TAG_MODULUS


class Permutation:
    """A bijection of ``range(degree)`` given by its image list.

    ``tag`` is an optional exponent modulo TAG_MODULUS that composes
    additively; it is used to carry the Frobenius exponent of a semilinear
    map through products.  Equality and hashing ignore the tag.
    """

    __slots__ = ("images", "tag")

    def __init__(self, images: Iterable[int], tag=None, check: bool = True):
        images = tuple(int(i) for i in images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self.tag = tag

    @classmethod
    def identity(cls, degree: int, tag=None) -> "Permutation":
        return cls(range(degree), tag=tag, check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __rpow__(self, x: int) -> int:
        # x ** g, the image of the point x
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise DegreeMismatchError(f"degrees {self.degree} and {other.degree}")
        o = other.images
        return Permutation((o[i] for i in self.images), _compose_tags(self.tag, other.tag), check=False)

    def __pow__(self, e: int) -> "Permutation":
        if isinstance(e, Permutation):
            return e.inverse() * self * e
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree, tag=None if self.tag is None else 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        tag = None if self.tag is None else (-self.tag) % TAG_MODULUS
        return Permutation(inv, tag, check=False)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = " ".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1)
        return f"Permutation({cyc or '()'}; degree={self.degree})"

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def image_of_set(self, s: Iterable[int]) -> frozenset:
        return frozenset(self.images[x] for x in s)


def close(generators: Sequence[Permutation], degree: int | None = None) -> "PermGroup":
    """Breadth-first closure of ``generators``."""
    gens = list(generators)
    if degree is None:
        if not gens:
            raise ValueError("degree is required when there are no generators")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError(f"generator of degree {g.degree} in a group of degree {degree}")
    tagged = all(g.tag is not None for g in gens)
    ident = Permutation.identity(degree, tag=0 if tagged else None)
    seen = {ident.images: ident}
    queue = deque([ident])
    while queue:
        h = queue.popleft()
        for g in gens:
            x = h * g
            if x.images not in seen:
                seen[x.images] = x
                queue.append(x)
    return PermGroup(seen.values(), degree, generators=gens)


class PermGroup:
    def __init__(self, elements: Iterable[Permutation], degree: int, generators=None):
        self.elements = tuple(sorted(elements))
        self.degree = degree
        if generators is not None:
            self.__dict__["generators"] = tuple(generators)
        self.array = np.array([e.images for e in self.elements], dtype=np.int16).reshape(-1, degree)
        self._index = {e.images: i for i, e in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g.images in self._index

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.degree == other.degree and self._index.keys() == other._index.keys()

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"<PermGroup degree={self.degree} order={self.order}>"

    def element(self, images) -> Permutation:
        """The stored element with these images (keeps its tag)."""
        return self.elements[self._index[tuple(int(i) for i in images)]]

    def issubgroup(self, other: "PermGroup") -> bool:
        return all(g in other for g in self.elements)

    @cached_property
    def generators(self) -> tuple[Permutation, ...]:
        """A small generating set, picked greedily in element order."""
        gens = []
        span = {self.identity.images}
        for g in self.elements:
            if g.images in span:
                continue
            gens.append(g)
            span = {e.images for e in close(gens, self.degree)}
            if len(span) == self.order:
                break
        return tuple(gens)

    @cached_property
    def identity(self) -> Permutation:
        return self.elements[self._index[tuple(range(self.degree))]]

    def _subgroup(self, mask) -> "PermGroup":
        idx = np.flatnonzero(mask)
        return PermGroup((self.elements[i] for i in idx), self.degree)

    # -- orbits and stabilizers --

    def orbit(self, x: int) -> tuple[int, ...]:
        return tuple(sorted(set(self.array[:, x].tolist())))

    def orbits(self, domain: Iterable[int] | None = None) -> list[tuple[int, ...]]:
        """Orbits meeting ``domain`` (default: all points), sorted by least element.

        ``domain`` should be a union of orbits for the lengths to add up.
        """
        domain = range(self.degree) if domain is None else sorted(domain)
        seen = set()
        out = []
        for x in domain:
            if x in seen:
                continue
            orb = self.orbit(x)
            seen.update(orb)
            out.append(orb)
        return out

    def set_orbit(self, block: Iterable[int]) -> list[tuple[int, ...]]:
        """Orbit of a point set under the setwise action, as sorted tuples."""
        block = sorted(block)
        imgs = np.sort(self.array[:, block], axis=1)
        return [tuple(r) for r in np.unique(imgs, axis=0).tolist()]

    def stabilizer(self, x: int) -> "PermGroup":
        return self._subgroup(self.array[:, x] == x)

    def pointwise_stabilizer(self, points: Iterable[int]) -> "PermGroup":
        pts = list(points)
        return self._subgroup(np.all(self.array[:, pts] == pts, axis=1))

    def set_stabilizer(self, block: Iterable[int]) -> "PermGroup":
        block = sorted(set(block))
        if not block:
            return self
        imgs = np.sort(self.array[:, block], axis=1)
        return self._subgroup(np.all(imgs == block, axis=1))

    def restricted(self, domain: Iterable[int]) -> "PermGroup":
        """Induced action on an invariant set, relabeled 0..len(domain)-1 in sorted order.

        The result may be a quotient: elements acting alike on ``domain`` merge.
        """
        dom = sorted(domain)
        pos = np.full(self.degree, -1, dtype=np.int64)
        pos[dom] = np.arange(len(dom))
        imgs = pos[self.array[:, dom]]
        if (imgs < 0).any():
            raise ValueError("domain is not invariant under the group")
        return PermGroup((Permutation(r, check=False) for r in np.unique(imgs, axis=0).tolist()), len(dom))

    def is_transitive(self, domain: Iterable[int] | None = None) -> bool:
        domain = list(range(self.degree)) if domain is None else list(domain)
        return set(self.orbit(domain[0])) == set(domain)

    # -- conjugation --

    def conjugates_of(self, h: Permutation) -> np.ndarray:
        """Row r holds h ** elements[r] (i.e. g^-1 h g)."""
        E = self.array
        out = np.empty_like(E)
        np.put_along_axis(out, E.astype(np.intp), E[:, list(h.images)], axis=1)
        return out

    def centralizer(self, g: Permutation) -> "PermGroup":
        """Centralizer of g in this group; g must be a member."""
        if g not in self:
            raise NotAMemberError(f"{g!r} is not in {self!r}")
        return self.centralizer_in(g)

    def centralizer_in(self, g: Permutation) -> "PermGroup":
        """Elements of this group commuting with g (g need not be a member)."""
        gi = np.array(g.images)
        E = self.array
        return self._subgroup(np.all(E[:, gi] == gi[E], axis=1))

    def normalizer(self, H: "PermGroup") -> "PermGroup":
        if not H.issubgroup(self):
            raise NotAMemberError(f"{H!r} is not a subgroup of {self!r}")
        keys = {e.images for e in H.elements}
        mask = np.ones(self.order, dtype=bool)
        for h in H.generators:
            conj = self.conjugates_of(h)
            mask &= np.array([tuple(r) in keys for r in conj.tolist()])
        return self._subgroup(mask)

    def conjugacy_class(self, h: Permutation) -> list[Permutation]:
        rows = np.unique(self.conjugates_of(h), axis=0)
        return [self.element(r) for r in rows.tolist()]

    def conjugacy_classes_of_prime_order(self, p: int) -> list[Permutation]:
        """One representative per conjugacy class of subgroups of order p.

        Each representative is the lexicographically least element of order
        p lying in some subgroup of its class; the list is sorted.
        """
        if self.order % p:
            raise ValueError(f"{p} does not divide the group order {self.order}")
        todo = {g.images for g in self.elements if g.order() == p}
        reps = []
        for g in self.elements:
            if g.images not in todo:
                continue
            # g is the least remaining element of order p; its subgroup class
            # consists of the conjugates of g and of its powers
            for k in range(1, p):
                for c in self.conjugacy_class(g ** k):
                    todo.discard(c.images)
            reps.append(g)
        return reps

    # -- structure --

    def is_abelian(self) -> bool:
        gens = self.generators
        return all((a * b) == (b * a) for a in gens for b in gens)

    def center(self) -> "PermGroup":
        mask = np.ones(self.order, dtype=bool)
        E = self.array
        for g in self.generators:
            gi = np.array(g.images)
            mask &= np.all(E[:, gi] == gi[E], axis=1)
        return self._subgroup(mask)

    def element_order_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(g.order() for g in self.elements).items()))

    def derived_subgroup(self) -> "PermGroup":
        gens = self.generators
        comms = {(a.inverse() * b.inverse() * a * b) for a in gens for b in gens}
        # normal closure of the generator commutators
        gens2 = set(comms)
        for c in comms:
            for g in gens:
                gens2.add(c ** g)
        H = close(sorted(gens2) or [self.identity], self.degree)
        while True:
            extra = [h ** g for h in H.generators for g in self.generators if (h ** g) not in H]
            if not extra:
                return H
            H = close(list(H.generators) + extra, self.degree)

    def is_normal(self, H: "PermGroup") -> bool:
        return all((h ** g) in H for h in H.generators for g in self.generators)

    def minimal_block(self, a: int, b: int) -> list[int]:
        """Block-system classes generated by identifying a and b (union-find)."""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        queue = deque([(a, b)])
        parent[find(b)] = find(a)
        gens = self.generators
        while queue:
            x, y = queue.popleft()
            for g in gens:
                u, v = find(g(x)), find(g(y))
                if u != v:
                    parent[v] = u
                    queue.append((g(x), g(y)))
        return [find(x) for x in range(self.degree)]

    def block_system(self, a: int, b: int) -> list[tuple[int, ...]]:
        roots = self.minimal_block(a, b)
        classes = {}
        for x, r in enumerate(roots):
            classes.setdefault(r, []).append(x)
        return sorted(tuple(c) for c in classes.values())

    def is_primitive(self):
        """(True, None) when primitive, else (False, witness block system)."""
        if not self.is_transitive():
            raise IntransitiveError(f"{self!r} is not transitive")
        for b in range(1, self.degree):
            blocks = self.block_system(0, b)
            if len(blocks) > 1:
                return False, blocks
        return True, None


def group_from_elements(elements: Iterable[Permutation], degree: int) -> PermGroup:
    return PermGroup(elements, degree)


def cyclic_group(n: int) -> PermGroup:
    return close([Permutation([(i + 1) % n for i in range(n)])])


def parse_generators(text: str) -> list[Permutation]:
    """Read the generator text format: degree on the first line, then one
    permutation per line as a space-separated image list."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty generator file")
    degree = int(lines[0])
    gens = []
    for ln in lines[1:]:
        images = [int(t) for t in ln.split()]
        if len(images) != degree:
            raise DegreeMismatchError(f"expected {degree} images, got {len(images)}")
        gens.append(Permutation(images))
    return gens


def format_generators(gens: Sequence[Permutation], degree: int | None = None) -> str:
    if degree is None:
        degree = gens[0].degree
    return f"{degree}\n" + "".join(" ".join(map(str, g.images)) + "\n" for g in gens)


# -- structural identification of small groups --

def _direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    n, m = A.degree, B.degree
    gens = [Permutation(list(a.images) + [n + i for i in range(m)]) for a in A.generators]
    gens += [Permutation(list(range(n)) + [n + i for i in b.images]) for b in B.generators]
    return close(gens)


def _affine_group(p: int, mult_order: int) -> PermGroup:
    """x -> a*x + b over Z/p, a ranging over the multiplicative subgroup of order mult_order."""
    root = next(w for w in range(2, p) if all(pow(w, (p - 1) // q, p) != 1 for q in range(2, p) if (p - 1) % q == 0))
    a = pow(root, (p - 1) // mult_order, p)
    return close([Permutation([(x + 1) % p for x in range(p)]), Permutation([(a * x) % p for x in range(p)])])


def _symmetric(n: int) -> PermGroup:
    return close([Permutation([1, 0] + list(range(2, n))), Permutation(list(range(1, n)) + [0])])


def reference_groups() -> dict[str, PermGroup]:
    """Concrete small groups used as oracles for structural identification."""
    s3 = _symmetric(3)
    z3 = cyclic_group(3)
    return {
        "Z3": z3,
        "Z6": cyclic_group(6),
        "Z9": cyclic_group(9),
        "E9": _direct_product(z3, z3),
        "S3": s3,
        "Z3xS3": _direct_product(z3, s3),
        "D14": _affine_group(7, 2),
        "F21": _affine_group(7, 3),
        "F42": _affine_group(7, 6),
        "A4": close([Permutation([1, 2, 0, 3]), Permutation([1, 0, 3, 2])]),
    }


def signature(G: PermGroup) -> tuple:
    return (G.order, G.is_abelian(), tuple(G.element_order_counts().items()))


def identify(G: PermGroup) -> str | None:
    """Name of the reference group with the same order/abelian/element-order
    signature, or None.  These invariants separate all the groups listed in
    reference_groups()."""
    sig = signature(G)
    for name, H in _reference_signatures().items():
        if H == sig:
            return name
    return None


_REF_SIGS = None


def _reference_signatures():
    global _REF_SIGS
    if _REF_SIGS is None:
        _REF_SIGS = {name: signature(H) for name, H in reference_groups().items()}
    return _REF_SIGS


def is_frobenius_f42(G: PermGroup) -> bool:
    """Order 42, normal subgroup of order 7, trivial center."""
    if G.order != 42:
        return False
    sevens = [g for g in G.elements if g.order() == 7]
    if not sevens:
        return False
    C7 = close([sevens[0]])
    return G.is_normal(C7) and G.center().order == 1 and identify(G) == "F42"
