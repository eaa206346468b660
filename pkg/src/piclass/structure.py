"""Element-level structure of an enumerated permutation group.

These are the ground-truth computations: conjugacy classes, centre,
centralizers, upper central series, Sylow subgroups, pi-elements.  Subgroups
are plain ``frozenset``s of :class:`~piclass.group.Permutation`.  Results are
cached in ``G.memo``; every function is a pure function of the group.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

from piclass.arith import PrimeSet, is_p_number, is_prime, part
from piclass.errors import InternalError, NotASubgroup
from piclass.group import Permutation, PermGroup, element_order, subgroup_closure

__all__ = [
    "ConjugacyClass",
    "UpperCentralSeries",
    "centralizer",
    "centre",
    "conjugacy_classes",
    "element_orders",
    "group_centre",
    "has_normal_hall_pi",
    "hypercentral_hall_oracle",
    "hypercentre",
    "is_nilpotent",
    "is_normal",
    "is_subgroup",
    "pi_elements",
    "sylow_subgroup",
    "upper_central_series",
]

ElementSet = frozenset


def _memo(fn):
    @functools.wraps(fn)
    def wrapper(G: PermGroup, *args):
        key = (fn.__name__, *args)
        try:
            return G.memo[key]
        except KeyError:
            value = G.memo[key] = fn(G, *args)
            return value

    return wrapper


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    members: frozenset

    @property
    def element_order(self) -> int:
        return element_order(self.representative)


@dataclass(frozen=True)
class UpperCentralSeries:
    """``Z_1 < Z_2 < ... < Z_m``; the last term is the hypercentre."""

    terms: tuple[frozenset, ...]
    stabilized: bool = True

    @property
    def hypercentre(self) -> frozenset:
        return self.terms[-1]

    def __len__(self) -> int:
        return len(self.terms)


@_memo
def element_orders(G: PermGroup) -> dict[Permutation, int]:
    return {x: element_order(x) for x in G.elements}


@_memo
def conjugacy_classes(G: PermGroup) -> list[ConjugacyClass]:
    """Conjugacy classes sorted by ``(size, representative)``.

    Each class is the orbit of an element under conjugation by the generators,
    which is its full class because the generators generate ``G``.
    """
    gens = [(g, g.inverse()) for g in G.generators]
    unseen = set(G.elements)
    classes = []
    for x in G.elements:
        if x not in unseen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g, gi in gens:
                z = gi * y * g
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        unseen -= orbit
        classes.append(ConjugacyClass(min(orbit), len(orbit), frozenset(orbit)))
    classes.sort(key=lambda c: (c.size, c.representative))
    return classes


@_memo
def class_size_of(G: PermGroup) -> dict[Permutation, int]:
    return {x: c.size for c in conjugacy_classes(G) for x in c.members}


@_memo
def centre(G: PermGroup) -> frozenset:
    return frozenset(c.representative for c in conjugacy_classes(G) if c.size == 1)


def centralizer(G: PermGroup, S: Iterable[Permutation]) -> frozenset:
    """Elements of ``G`` commuting with every element of ``S``.

    Passing a generating set of a subgroup gives that subgroup's centralizer.
    """
    S = list(S)
    return frozenset(g for g in G.elements if all(g.commutes_with(s) for s in S))


@_memo
def upper_central_series(G: PermGroup) -> UpperCentralSeries:
    """Upper central series by commutator lifting.

    ``Z_{i+1} = {x : [x, s] in Z_i for every generator s}``.  Checking
    generators suffices: ``[x, gh] = [x, h] [x, g]^h`` and ``Z_i`` is normal.
    """
    terms = [centre(G)]
    while True:
        Z = terms[-1]
        nxt = frozenset(
            x for x in G.elements if all(x.commutator(s) in Z for s in G.generators)
        )
        if nxt == Z:
            return UpperCentralSeries(tuple(terms))
        terms.append(nxt)


def hypercentre(G: PermGroup) -> frozenset:
    return upper_central_series(G).hypercentre


def is_nilpotent(G: PermGroup) -> bool:
    return len(hypercentre(G)) == G.order


@_memo
def pi_elements(G: PermGroup, P: PrimeSet) -> frozenset:
    orders = element_orders(G)
    return frozenset(x for x in G.elements if is_p_number(orders[x], P))


def _normalizes(y: Permutation, S: frozenset) -> bool:
    yi = y.inverse()
    return all(yi * s * y in S for s in S)


@_memo
def sylow_subgroup(G: PermGroup, q: int) -> frozenset:
    """A Sylow ``q``-subgroup, grown from the least nontrivial ``q``-element.

    While ``|P| < |G|_q``, ``P`` is replaced by ``P<y>`` for the least
    ``q``-element ``y`` outside ``P`` normalizing it.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    target = part(G.order, PrimeSet.of(q))
    ident = G.identity
    if target == 1:
        return frozenset([ident])
    orders = element_orders(G)
    q_elements = sorted(x for x in G.elements if is_p_number(orders[x], PrimeSet.of(q)))
    P = frozenset([ident])
    while len(P) < target:
        for y in q_elements:
            if y not in P and _normalizes(y, P):
                break
        else:
            raise InternalError(f"Sylow {q}-extension stalled at order {len(P)} in {G.label}")
        powers = [ident]
        z = y
        while z != ident:
            powers.append(z)
            z = z * y
        P = frozenset(p * w for p in P for w in powers)
    if len(P) != target:
        raise InternalError(f"Sylow {q}-subgroup of {G.label} has order {len(P)}, not {target}")
    return P


def group_centre(S: frozenset) -> frozenset:
    """Centre of a subgroup given as an element set."""
    return frozenset(x for x in S if all(x.commutes_with(y) for y in S))


def is_subgroup(S: Iterable[Permutation]) -> bool:
    """Whether a finite set of permutations is closed under composition."""
    S = frozenset(S)
    if not S:
        return False
    degree = next(iter(S)).degree
    gens: list[Permutation] = []
    H = frozenset([Permutation.identity(degree)])
    for x in sorted(S):
        if x in H:
            continue
        gens.append(x)
        H = subgroup_closure(gens, degree)
        if not H <= S:
            return False
    return H == S


def is_normal(S: frozenset, G: PermGroup) -> bool:
    return all(_normalizes(g, S) for g in G.generators)


def has_normal_hall_pi(C: Iterable[Permutation], P: PrimeSet) -> bool:
    """Whether the subgroup ``C`` has a normal Hall ``P``-subgroup.

    That happens exactly when the ``P``-elements of ``C`` number ``|C|_P`` and
    form a subgroup, which is then the unique Hall ``P``-subgroup.
    """
    C = frozenset(C)
    if not is_subgroup(C):
        raise NotASubgroup(f"element set of size {len(C)} is not closed")
    T = frozenset(x for x in C if is_p_number(element_order(x), P))
    return len(T) == part(len(C), P) and is_subgroup(T)


def hypercentral_hall_oracle(G: PermGroup, P: PrimeSet) -> bool:
    """Structural test for a hypercentral Hall ``P``-subgroup.

    True iff every ``P``-element lies in the hypercentre.  The ``P``-elements of
    the (nilpotent) hypercentre then form a normal Hall ``P``-subgroup of ``G``.
    """
    return pi_elements(G, P) <= hypercentre(G)
