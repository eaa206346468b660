"""Integer arithmetic for pi-part reasoning: factorization, pi-parts, prime sets.

Group orders handled here are small (well under 10**7), so factoring is plain
trial division.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from piclass.errors import ParseError

__all__ = [
    "Kind",
    "PrimeSet",
    "divisors",
    "factorize",
    "is_p_number",
    "is_prime",
    "part",
    "prime_divisors",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=4096)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> dict[int, int]:
    """Return ``{prime: exponent}`` with ``prod(p**e) == n``.

    >>> factorize(24)
    {2: 3, 3: 1}
    """
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    return dict(_factorize(n))


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


class Kind(enum.Enum):
    FINITE = "finite"
    COFINITE = "cofinite"


_FINITE_RE = re.compile(r"\s*\{\s*([0-9,\s]*)\}\s*('?)\s*$")


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of primes, or the complement of one (``{p}'`` style).

    ``members`` lists the set itself for ``FINITE`` and the excluded primes for
    ``COFINITE``.  ``PrimeSet.all()`` is the cofinite set with nothing excluded.
    """

    kind: Kind
    members: tuple[int, ...] = ()

    def __post_init__(self):
        ms = tuple(self.members)
        for p in ms:
            if not isinstance(p, int) or not is_prime(p):
                raise ValueError(f"{p!r} is not a prime")
        if list(ms) != sorted(set(ms)):
            ms = tuple(sorted(set(ms)))
        object.__setattr__(self, "members", ms)

    @classmethod
    def of(cls, *primes: int) -> PrimeSet:
        return cls(Kind.FINITE, tuple(primes))

    @classmethod
    def excluding(cls, *primes: int) -> PrimeSet:
        return cls(Kind.COFINITE, tuple(primes))

    @classmethod
    def all(cls) -> PrimeSet:
        return cls(Kind.COFINITE, ())

    @classmethod
    def parse(cls, text: str) -> PrimeSet:
        """Parse ``{2,3}``, ``{2}'`` (all primes but 2) or ``*``."""
        if text.strip() == "*":
            return cls.all()
        m = _FINITE_RE.match(text)
        if not m:
            raise ParseError("malformed prime set", text, 0)
        body, tick = m.groups()
        items = [s.strip() for s in body.split(",")] if body.strip() else []
        try:
            primes = [int(s) for s in items]
        except ValueError:
            raise ParseError("prime set members must be integers", text, m.start(1)) from None
        if len(set(primes)) != len(primes):
            raise ParseError("duplicate prime in set", text, m.start(1))
        try:
            return cls(Kind.COFINITE if tick else Kind.FINITE, tuple(primes))
        except ValueError as exc:
            raise ParseError(str(exc), text, m.start(1)) from None

    @property
    def is_all(self) -> bool:
        return self.kind is Kind.COFINITE and not self.members

    def __contains__(self, p: int) -> bool:
        if self.kind is Kind.FINITE:
            return p in self.members
        return is_prime(p) and p not in self.members

    def complement(self) -> PrimeSet:
        other = Kind.COFINITE if self.kind is Kind.FINITE else Kind.FINITE
        return PrimeSet(other, self.members)

    def primes_dividing(self, n: int) -> list[int]:
        """Primes of this set that divide ``n``, ascending."""
        return [p for p in prime_divisors(n) if p in self]

    def __str__(self) -> str:
        if self.is_all:
            return "*"
        body = "{" + ",".join(map(str, self.members)) + "}"
        return body + "'" if self.kind is Kind.COFINITE else body

    def __repr__(self) -> str:
        return f"PrimeSet({str(self)!r})"


def as_prime_set(p: PrimeSet | Iterable[int] | str) -> PrimeSet:
    if isinstance(p, PrimeSet):
        return p
    if isinstance(p, str):
        return PrimeSet.parse(p)
    return PrimeSet.of(*p)


def part(n: int, primes: PrimeSet) -> int:
    """The largest divisor of ``n`` whose prime factors all lie in ``primes``."""
    if n < 1:
        raise ValueError(f"part needs a positive integer, got {n}")
    out = 1
    for p, e in _factorize(n):
        if p in primes:
            out *= p**e
    return out


def is_p_number(n: int, primes: PrimeSet) -> bool:
    return part(n, primes.complement()) == 1
