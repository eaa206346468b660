"""Class-size frequency tables of pi-elements and the decisions they support.

A :class:`FrequencyTable` records, for a prime set ``pi``, how many conjugacy
classes of pi-elements have each size.  Everything below
:func:`frequency_table` looks at the table only; where a criterion needs a
number the table cannot supply (``|G|_q``, ``|Z(G)|_q``) it is an explicit
argument.  ``S3`` and ``A4`` with ``pi = {2}`` share a table while their
2-parts differ, so ``|G|_q`` really is extra information.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from piclass.arith import PrimeSet, is_p_number, is_prime, part
from piclass.errors import ParseError, QNotDividing, QNotInPi
from piclass.group import PermGroup
from piclass import structure

__all__ = [
    "SCHEMA",
    "FrequencyTable",
    "PropCCheck",
    "SigmaSum",
    "TheoremCCheck",
    "decide_hypercentral_hall_pi",
    "decide_nilpotent_from_multiset",
    "frequency_table",
    "hypercentre_q_part",
    "propc_hypothesis_check",
    "s_sigma",
    "sylow_hypercentral_criterion",
    "theorem_c_check",
]

SCHEMA = "piclass/1"


@dataclass(frozen=True)
class FrequencyTable:
    """``counts[n]`` = number of classes of ``pi``-elements of size ``n``."""

    pi: PrimeSet
    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        counts = tuple(sorted((int(n), int(w)) for n, w in dict(self.counts).items()))
        if len(counts) != len(self.counts):
            raise ValueError("duplicate class size in frequency table")
        for n, w in counts:
            if n < 1 or w < 1:
                raise ValueError(f"bad entry {n} -> {w}: sizes and counts must be positive")
        if not counts or counts[0][0] != 1:
            raise ValueError("a frequency table must record the identity class (size 1)")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_mapping(cls, pi: PrimeSet, counts: Mapping[int, int]) -> FrequencyTable:
        return cls(pi, tuple(counts.items()))

    def __getitem__(self, n: int) -> int:
        return dict(self.counts).get(n, 0)

    @property
    def support(self) -> list[int]:
        return [n for n, _ in self.counts]

    @property
    def N(self) -> int:
        """Number of ``pi``-elements, ``sum(n * w(n))``."""
        return sum(n * w for n, w in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def to_json_obj(self) -> dict:
        return {"schema": SCHEMA, "pi": str(self.pi), "counts": [[n, w] for n, w in self.counts]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, data: str | dict) -> FrequencyTable:
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"frequency table is not valid JSON: {exc}") from None
        if not isinstance(data, dict) or "pi" not in data or "counts" not in data:
            raise ParseError("frequency table JSON needs 'pi' and 'counts'")
        schema = data.get("schema", SCHEMA)
        if schema != SCHEMA:
            raise ParseError(f"unsupported schema {schema!r}")
        try:
            pairs = [(int(n), int(w)) for n, w in data["counts"]]
        except (TypeError, ValueError):
            raise ParseError("'counts' must be a list of [size, count] pairs") from None
        try:
            return cls(PrimeSet.parse(str(data["pi"])), tuple(pairs))
        except ValueError as exc:
            raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class SigmaSum:
    """Size of the union of those classes whose sizes are ``sigma``-numbers."""

    sigma: PrimeSet
    total: int
    _q_parts: dict = field(default_factory=dict, compare=False, repr=False)

    def q_part(self, q: int) -> int:
        if q not in self._q_parts:
            self._q_parts[q] = part(self.total, PrimeSet.of(q))
        return self._q_parts[q]


def frequency_table(G: PermGroup, P: PrimeSet) -> FrequencyTable:
    counts: dict[int, int] = {}
    pis = structure.pi_elements(G, P)
    for c in structure.conjugacy_classes(G):
        if c.representative in pis:
            counts[c.size] = counts.get(c.size, 0) + 1
    return FrequencyTable.from_mapping(P, counts)


def s_sigma(F: FrequencyTable, sigma: PrimeSet) -> SigmaSum:
    total = sum(n * w for n, w in F.counts if is_p_number(n, sigma))
    return SigmaSum(sigma, total)


def _require_q(F: FrequencyTable, q: int):
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q not in F.pi:
        raise QNotInPi(q, F.pi)


def hypercentre_q_part(F: FrequencyTable, q: int) -> int:
    """``q``-part of the number of ``pi``-elements with ``q``-power class size.

    For ``q`` in ``pi`` this equals the ``q``-part of the hypercentre's order.
    For ``q`` outside ``pi`` it does not (a ``q``-group with ``pi = {q}'`` has
    only the identity), and :class:`QNotInPi` is raised.
    """
    _require_q(F, q)
    return s_sigma(F, PrimeSet.of(q)).q_part(q)


def sylow_hypercentral_criterion(F: FrequencyTable, q: int, g_q_part: int) -> bool:
    """Whether a Sylow ``q``-subgroup is hypercentral, given ``|G|_q``."""
    return hypercentre_q_part(F, q) == g_q_part


def _all_sylows_hypercentral(F: FrequencyTable) -> bool:
    N = F.N
    return all(
        part(N, PrimeSet.of(q)) == hypercentre_q_part(F, q)
        for q in F.pi.primes_dividing(N)
    )


def decide_hypercentral_hall_pi(F: FrequencyTable) -> bool:
    """Decide from the table alone whether the group has a hypercentral Hall
    ``pi``-subgroup.

    With ``N`` the number of ``pi``-elements, the answer is yes iff
    ``N_q == hypercentre_q_part(F, q)`` for every ``q`` in ``pi`` dividing ``N``.

    If a hypercentral Hall ``pi``-subgroup ``H`` exists, it is normal and holds
    every ``pi``-element, so ``N = |G|_pi`` and ``N_q = |G|_q = |Z_inf(G)|_q``.
    Conversely ``|G|_pi`` always divides ``N`` (Frobenius: ``x^n = 1`` has a
    multiple of ``n`` solutions for ``n | |G|``), so
    ``N_q >= |G|_q >= |Z_inf(G)|_q``; equality pins every Sylow ``q``-subgroup,
    ``q`` in ``pi``, inside the hypercentre.  Primes outside ``pi`` that divide
    ``N`` play no role.
    """
    return _all_sylows_hypercentral(F)


def decide_nilpotent_from_multiset(F: FrequencyTable) -> bool:
    """Nilpotency from the full class-size multiset (``F.pi`` = all primes).

    Here ``N = |G|``, and the group is nilpotent iff every Sylow subgroup is
    hypercentral.
    """
    if not F.pi.is_all:
        raise ValueError(f"nilpotency needs the table over all primes, got pi = {F.pi}")
    return _all_sylows_hypercentral(F)


@dataclass(frozen=True)
class TheoremCCheck:
    """``|Z(G)|_q`` against the ``q``-part of the union of ``q'``-size classes."""

    q: int
    divides: bool
    equal: bool
    centre_q_part: int
    s_total: int
    s_q_part: int


def theorem_c_check(F: FrequencyTable, q: int, centre_q_part: int) -> TheoremCCheck:
    _require_q(F, q)
    s = s_sigma(F, PrimeSet.excluding(q))
    sq = s.q_part(q)
    return TheoremCCheck(
        q=q,
        divides=sq % centre_q_part == 0,
        equal=sq == centre_q_part,
        centre_q_part=centre_q_part,
        s_total=s.total,
        s_q_part=sq,
    )


@dataclass(frozen=True)
class PropCCheck:
    zq_central: bool
    cgq_normal_hall: bool
    conclusion_equal: bool

    @property
    def hypothesis(self) -> bool:
        return self.zq_central and self.cgq_normal_hall

    @property
    def implication_holds(self) -> bool:
        return self.conclusion_equal or not self.hypothesis


def propc_hypothesis_check(G: PermGroup, P: PrimeSet, q: int) -> PropCCheck:
    """Evaluate ``Z(Q) <= Z(G)`` and "``C_G(Q)`` has a normal Hall
    ``P``-subgroup" for a Sylow ``q``-subgroup ``Q``, next to the equality
    ``|Z(G)|_q == |S_{q'}(G_P)|_q`` they imply together.
    """
    if q not in P:
        raise QNotInPi(q, P)
    if G.order % q:
        raise QNotDividing(f"{q} does not divide |{G.label}| = {G.order}")
    Q = structure.sylow_subgroup(G, q)
    Z = structure.centre(G)
    zq_central = structure.group_centre(Q) <= Z
    cgq_normal_hall = structure.has_normal_hall_pi(structure.centralizer(G, Q), P)
    F = frequency_table(G, P)
    check = theorem_c_check(F, q, part(len(Z), PrimeSet.of(q)))
    return PropCCheck(zq_central, cgq_normal_hall, check.equal)
