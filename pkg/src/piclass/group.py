"""Permutations, permutation groups and their exhaustive enumeration.

Elements compose left to right: ``(x * y)(i) == y(x(i))``, i.e. apply ``x``
first.  Groups are enumerated in full (no stabilizer chains); the enumeration
cap keeps memory bounded and is read from ``PICLASS_CAP`` when not given.
"""

from __future__ import annotations

import math
import os
from collections import deque
from functools import total_ordering
from typing import Iterable, Sequence

from piclass.errors import CapExceeded, ParseError, UnknownName

__all__ = [
    "DEFAULT_CAP",
    "Permutation",
    "PermGroup",
    "default_cap",
    "direct_product",
    "element_order",
    "enumerate_group",
    "factor_embedding",
    "named_group",
    "subgroup_closure",
]

DEFAULT_CAP = 20000


def default_cap() -> int:
    env = os.environ.get("PICLASS_CAP")
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise ValueError(f"PICLASS_CAP must be an integer, got {env!r}") from None
        if cap < 1:
            raise ValueError("PICLASS_CAP must be positive")
        return cap
    return DEFAULT_CAP


@total_ordering
class Permutation:
    """A bijection of ``{0, ..., degree-1}`` stored as its image tuple.

    Ordering is lexicographic on the image tuple; that ordering is the canonical
    one used for every representative and tie-break in the package.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        """Product of the given cycles, applied left to right.

        >>> Permutation.from_cycles(3, [(0, 1, 2)])
        Permutation((1, 2, 0))
        """
        result = cls.identity(degree)
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"cycle {tuple(cyc)} repeats a point")
            img = list(range(degree))
            for i, a in enumerate(cyc):
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} outside 0..{degree - 1}")
                img[a] = cyc[(i + 1) % len(cyc)]
            result = result * cls(img, check=False)
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        o = other.images
        return Permutation([o[i] for i in self.images], check=False)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def __pow__(self, n: int) -> Permutation:
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, g: Permutation) -> Permutation:
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def commutator(self, other: Permutation) -> Permutation:
        """``[self, other] = self^-1 other^-1 self other``."""
        return self.inverse() * other.inverse() * self * other

    def commutes_with(self, other: Permutation) -> bool:
        a, b = self.images, other.images
        return all(b[a[i]] == a[b[i]] for i in range(len(a)))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cs = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.images})"

    def __str__(self) -> str:
        return self.cycle_string()


def element_order(x: Permutation) -> int:
    """Least ``n >= 1`` with ``x**n`` the identity (lcm of cycle lengths)."""
    return math.lcm(1, *(len(c) for c in x.cycles()))


class PermGroup:
    """A group given by permutation generators.

    The full element list is materialized on first access to ``elements`` (or
    ``order``) and then treated as immutable.  ``memo`` holds per-group caches
    filled by :mod:`piclass.structure`.
    """

    def __init__(
        self,
        generators: Sequence[Permutation],
        degree: int | None = None,
        label: str = "",
        cap: int | None = None,
        factors: tuple[tuple[PermGroup, int], ...] = (),
    ):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree is required when no generators are given")
            degree = generators[0].degree
        if degree < 1:
            raise ValueError("degree must be positive")
        if not generators:
            generators = [Permutation.identity(degree)]
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator {g!r} does not have degree {degree}")
        self.degree = degree
        self.generators = generators
        self.label = label or "<" + ", ".join(map(str, generators)) + ">"
        self.cap = default_cap() if cap is None else cap
        # ((factor group, first point of its block), ...) for direct products
        self.factors = factors
        self.memo: dict = {}
        self._elements: tuple[Permutation, ...] | None = None
        self._element_set: frozenset[Permutation] | None = None

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def elements(self) -> tuple[Permutation, ...]:
        if self._elements is None:
            self._elements = tuple(_closure(self.generators, self.identity, self.cap))
            self._element_set = frozenset(self._elements)
        return self._elements

    @property
    def element_set(self) -> frozenset[Permutation]:
        self.elements
        return self._element_set

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_enumerated(self) -> bool:
        return self._elements is not None

    def __contains__(self, x: Permutation) -> bool:
        return x in self.element_set

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"PermGroup({self.label!r}, degree={self.degree})"


def _closure(generators: Sequence[Permutation], identity: Permutation, cap: int | None):
    # breadth-first, right multiplication by generators in list order
    seen = {identity}
    order = [identity]
    queue = deque(order)
    while queue:
        x = queue.popleft()
        for g in generators:
            y = x * g
            if y not in seen:
                seen.add(y)
                order.append(y)
                if cap is not None and len(order) > cap:
                    raise CapExceeded(cap)
                queue.append(y)
    return order


def enumerate_group(G: PermGroup) -> tuple[Permutation, ...]:
    """All elements of ``G`` in breadth-first discovery order.

    Raises :class:`CapExceeded` if the closure grows past ``G.cap``.
    """
    return G.elements


def subgroup_closure(generators: Iterable[Permutation], degree: int) -> frozenset[Permutation]:
    """Element set of the subgroup generated by ``generators`` (no cap)."""
    return frozenset(_closure(list(generators), Permutation.identity(degree), None))


def _shift(x: Permutation, offset: int, degree: int) -> Permutation:
    img = list(range(degree))
    for i, j in enumerate(x.images):
        img[offset + i] = offset + j
    return Permutation(img, check=False)


def direct_product(A: PermGroup, B: PermGroup, cap: int | None = None) -> PermGroup:
    """``A x B`` acting on ``degree(A) + degree(B)`` points, A's block first."""
    cap = A.cap if cap is None else cap
    if A.order * B.order > cap:
        raise CapExceeded(cap)
    degree = A.degree + B.degree
    gens = [_shift(a, 0, degree) for a in A.generators]
    gens += [_shift(b, A.degree, degree) for b in B.generators]
    return PermGroup(
        gens,
        degree=degree,
        label=f"{A.label}x{B.label}",
        cap=cap,
        factors=((A, 0), (B, A.degree)),
    )


def factor_embedding(G: PermGroup, index: int) -> frozenset[Permutation]:
    """Elements of the ``index``-th direct factor of ``G`` as embedded in ``G``."""
    if not G.factors:
        raise ValueError(f"{G.label} was not built as a direct product")
    F, offset = G.factors[index]
    return frozenset(_shift(x, offset, G.degree) for x in F.elements)


# -- named constructors ------------------------------------------------------


def cyclic(n: int) -> list[Permutation]:
    return [Permutation([(i + 1) % n for i in range(n)], check=False)]


def dihedral(order: int) -> tuple[int, list[Permutation]]:
    n = order // 2
    if n == 1:
        return 2, [Permutation.from_cycles(2, [(0, 1)])]
    if n == 2:
        return 4, [Permutation.from_cycles(4, [(0, 1), (2, 3)]),
                   Permutation.from_cycles(4, [(0, 2), (1, 3)])]
    rot = Permutation([(i + 1) % n for i in range(n)], check=False)
    refl = Permutation([(-i) % n for i in range(n)], check=False)
    return n, [rot, refl]


def symmetric(n: int) -> list[Permutation]:
    if n == 1:
        return [Permutation.identity(1)]
    return [Permutation.from_cycles(n, [(0, 1)]),
            Permutation.from_cycles(n, [tuple(range(n))])]


def alternating(n: int) -> list[Permutation]:
    if n < 3:
        return [Permutation.identity(n)]
    return [Permutation.from_cycles(n, [(0, 1, i)]) for i in range(2, n)]


def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quaternion() -> list[Permutation]:
    """Q8 in its regular representation on 8 points."""
    units = []
    for k in range(4):
        for s in (1, -1):
            units.append(tuple(s if i == k else 0 for i in range(4)))
    index = {u: i for i, u in enumerate(units)}
    gens = []
    for g in (units[2], units[4]):  # i, j
        gens.append(Permutation([index[_qmul(g, u)] for u in units], check=False))
    return gens


def sl23() -> list[Permutation]:
    """SL(2,3) acting on the 8 nonzero vectors of F_3^2."""
    vectors = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def act(m):
        (a, b), (c, d) = m
        return Permutation(
            [index[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vectors],
            check=False,
        )

    return [act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))]


class _Parser:
    def __init__(self, text: str, cap: int | None):
        self.text = text
        self.pos = 0
        self.cap = cap

    def error(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def int_args(self) -> list[int]:
        self.expect("(")
        args = [self.integer()]
        while self.peek(","):
            self.pos += 1
            args.append(self.integer())
        self.expect(")")
        return args

    def parse(self) -> PermGroup:
        G = self.term()
        while self.peek("x"):
            self.pos += 1
            H = self.term()
            G = direct_product(G, H, cap=self.cap)
        self.skip()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return G

    def term(self) -> PermGroup:
        self.skip()
        start = self.pos
        for name in ("perm", "SL", "Q8", "C", "D", "S", "A"):
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                break
        else:
            end = start
            while end < len(self.text) and self.text[end].isalnum():
                end += 1
            if end > start:
                raise UnknownName(f"unknown group name {self.text[start:end]!r} at position {start}")
            self.error("expected a group name")
        if name == "perm":
            return self.raw_perm(start)
        if name == "Q8":
            return PermGroup(quaternion(), label="Q8", cap=self.cap)
        args = self.int_args()
        if name == "SL":
            if args != [2, 3]:
                raise UnknownName(f"only SL(2,3) is available, got SL{tuple(args)}")
            return PermGroup(sl23(), label="SL(2,3)", cap=self.cap)
        if len(args) != 1:
            self.error(f"{name} takes one argument", start)
        (n,) = args
        label = f"{name}({n})"
        if n < 1:
            self.error(f"{name} needs a positive argument", start)
        if name == "C":
            return PermGroup(cyclic(n), label=label, cap=self.cap)
        if name == "D":
            if n % 2:
                self.error("D(k) is the dihedral group of order k; k must be even", start)
            degree, gens = dihedral(n)
            return PermGroup(gens, degree=degree, label=label, cap=self.cap)
        if name == "S":
            return PermGroup(symmetric(n), degree=n, label=label, cap=self.cap)
        return PermGroup(alternating(n), degree=n, label=label, cap=self.cap)

    def raw_perm(self, start: int) -> PermGroup:
        self.expect("[")
        degree = self.integer()
        if degree < 1:
            self.error("degree must be positive", start)
        self.expect("]")
        self.expect("(")
        gens = [self.cycle_product(degree)]
        while self.peek(";"):
            self.pos += 1
            gens.append(self.cycle_product(degree))
        self.expect(")")
        label = self.text[start:self.pos].strip()
        return PermGroup(gens, degree=degree, label=label, cap=self.cap)

    def cycle_product(self, degree: int) -> Permutation:
        cycles = []
        at = self.pos
        if not self.peek("("):
            self.error("expected a cycle")
        while self.peek("("):
            self.pos += 1
            cyc = []
            while not self.peek(")"):
                cyc.append(self.integer())
            self.pos += 1
            cycles.append(cyc)
        try:
            return Permutation.from_cycles(degree, cycles)
        except ValueError as exc:
            self.error(str(exc), at)


def named_group(spec: str, cap: int | None = None) -> PermGroup:
    """Build a group from an expression such as ``"C(3)xD(10)"``.

    Names: ``C(n)`` cyclic, ``D(k)`` dihedral of order ``k``, ``S(n)``,
    ``A(n)``, ``Q8``, ``SL(2,3)``, and raw generators
    ``perm[5]((0 1 2 3 4); (1 4)(2 3))`` with 0-based points.  ``x`` forms
    direct products, left-associatively.
    """
    return _Parser(spec, cap).parse()
