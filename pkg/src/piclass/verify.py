"""Corpus harness: run every registered check on every group and prime set.

Each check compares a table-only decision (or a counted identity) with the
element-level answer from :mod:`piclass.structure` and records a
:class:`Verdict`.  A report is deterministic for a given corpus text.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Sequence

from piclass import structure
from piclass.arith import PrimeSet, divisors, part, prime_divisors
from piclass.errors import NotADivisor, ParseError, PiclassError
from piclass.group import PermGroup, factor_embedding, named_group
from piclass.pifreq import (
    SCHEMA,
    decide_hypercentral_hall_pi,
    decide_nilpotent_from_multiset,
    frequency_table,
    hypercentre_q_part,
    propc_hypothesis_check,
    s_sigma,
    theorem_c_check,
)

__all__ = [
    "ALL_SUBSETS",
    "CHECKS",
    "Corpus",
    "CorpusReport",
    "Verdict",
    "default_corpus",
    "frobenius_check",
    "parse_corpus",
    "pis_for",
    "run_corpus",
    "verify_group",
]

CHECKS = (
    "theo-hyp",
    "theorem-A",
    "theorem-C",
    "prop-C",
    "frobenius",
    "lemma-2.1",
    "chm-corollary",
    "centre-hypercentre-primes",
)

ALL_SUBSETS = "all-subsets"
MAX_SUBSET_PRIMES = 4


@dataclass
class Verdict:
    group_label: str
    pi: PrimeSet | None
    check_name: str
    passed: bool
    details: dict = field(default_factory=dict)
    q: int | None = None
    line: int = 0

    def __post_init__(self):
        if self.check_name not in CHECKS:
            raise ValueError(f"unregistered check {self.check_name!r}")

    def sort_key(self):
        return (
            self.line,
            self.group_label,
            self.check_name,
            "" if self.pi is None else str(self.pi),
            0 if self.q is None else self.q,
            self.details.get("n", 0),
        )

    def to_json_obj(self) -> dict:
        return {
            "line": self.line,
            "group": self.group_label,
            "check": self.check_name,
            "pi": None if self.pi is None else str(self.pi),
            "q": self.q,
            "passed": self.passed,
            "details": self.details,
        }


def _guarded(label: str, check: str, pi=None, q=None):
    """Run ``fn`` and turn an unexpected exception into a failed verdict."""

    def run(fn: Callable[[], tuple[bool, dict]]) -> Verdict:
        try:
            passed, details = fn()
        except PiclassError as exc:
            passed, details = False, {"error": f"{type(exc).__name__}: {exc}"}
        if not passed and not details:
            details = {"error": "check failed without witnesses"}
        return Verdict(label, pi, check, passed, details, q)

    return run


def frobenius_check(G: PermGroup, n: int) -> Verdict:
    """Count solutions of ``x**n == 1``; pass iff the count is a multiple of ``n``."""
    if n < 1 or G.order % n:
        raise NotADivisor(f"{n} does not divide |{G.label}| = {G.order}")
    orders = structure.element_orders(G)
    count = sum(1 for x in G.elements if n % orders[x] == 0)
    return Verdict(G.label, None, "frobenius", count % n == 0, {"n": n, "count": count})


def pis_for(G: PermGroup, policy=ALL_SUBSETS) -> list[PrimeSet]:
    """Prime sets to test on ``G``.

    ``ALL_SUBSETS`` gives every nonempty subset of the primes dividing ``|G|``
    when there are at most four of them, else the singletons plus the full set.
    Any other value is taken as an explicit list of prime sets.
    """
    if policy != ALL_SUBSETS:
        return list(policy)
    primes = prime_divisors(G.order)
    if len(primes) <= MAX_SUBSET_PRIMES:
        return [
            PrimeSet.of(*c)
            for r in range(1, len(primes) + 1)
            for c in itertools.combinations(primes, r)
        ]
    return [PrimeSet.of(p) for p in primes] + [PrimeSet.of(*primes)]


def _theo_hyp(G: PermGroup, P: PrimeSet, q: int):
    F = frequency_table(G, P)
    zinf = len(structure.hypercentre(G))
    z_pi = part(len(structure.centre(G)), P)
    total = s_sigma(F, PrimeSet.of(q)).total
    from_table = hypercentre_q_part(F, q)
    from_series = part(zinf, PrimeSet.of(q))
    congruent = (total - z_pi) % q == 0
    return from_table == from_series and congruent, {
        "hypercentre_q_part_from_table": from_table,
        "hypercentre_q_part": from_series,
        "s_q_total": total,
        "centre_pi_part": z_pi,
        "congruent_mod_q": congruent,
    }


def _theorem_a(G: PermGroup, P: PrimeSet):
    F = frequency_table(G, P)
    decision = decide_hypercentral_hall_pi(F)
    oracle = structure.hypercentral_hall_oracle(G, P)
    w1 = F[1]
    z_pi = part(len(structure.centre(G)), P)
    n_pi = len(structure.pi_elements(G, P))
    return decision == oracle and w1 == z_pi and F.N == n_pi, {
        "decision": decision,
        "oracle": oracle,
        "N": F.N,
        "pi_elements": n_pi,
        "w1": w1,
        "centre_pi_part": z_pi,
        "group_pi_part": part(G.order, P),
    }


def _theorem_c(G: PermGroup, P: PrimeSet, q: int):
    F = frequency_table(G, P)
    Z = structure.centre(G)
    r = theorem_c_check(F, q, part(len(Z), PrimeSet.of(q)))
    zq_central = structure.group_centre(structure.sylow_subgroup(G, q)) <= Z
    return r.divides and (zq_central or not r.equal), {
        "divides": r.divides,
        "equal": r.equal,
        "centre_q_part": r.centre_q_part,
        "s_q_prime_total": r.s_total,
        "s_q_prime_q_part": r.s_q_part,
        "sylow_centre_central": zq_central,
    }


def _prop_c(G: PermGroup, P: PrimeSet, q: int):
    r = propc_hypothesis_check(G, P, q)
    return r.implication_holds, {
        "zq_central": r.zq_central,
        "cgq_normal_hall": r.cgq_normal_hall,
        "conclusion_equal": r.conclusion_equal,
    }


def _chm(G: PermGroup):
    decision = decide_nilpotent_from_multiset(frequency_table(G, PrimeSet.all()))
    oracle = structure.is_nilpotent(G)
    return decision == oracle, {"decision": decision, "oracle": oracle, "order": G.order}


def _centre_hypercentre_primes(G: PermGroup):
    z = len(structure.centre(G))
    zinf = len(structure.hypercentre(G))
    missing = [p for p in prime_divisors(zinf) if z % p]
    return not missing, {"centre_order": z, "hypercentre_order": zinf, "missing_primes": missing}


def _factor_class_sizes(G: PermGroup):
    sizes = structure.class_size_of(G)
    details = {}
    ok = True
    for i, (F, _) in enumerate(G.factors):
        inside = sorted(sizes[x] for x in factor_embedding(G, i))
        alone = sorted(structure.class_size_of(F)[x] for x in F.elements)
        details[f"factor{i}_order"] = F.order
        details[f"factor{i}_match"] = inside == alone
        ok = ok and inside == alone
    return ok, details


def verify_group(
    G: PermGroup,
    pis: Sequence[PrimeSet] | str = ALL_SUBSETS,
    frobenius_bound: int | None = None,
) -> list[Verdict]:
    """All registered checks for ``G``, sorted deterministically.

    Per prime set ``P``: theorem-A; per ``q`` in ``P`` dividing ``|G|``:
    theo-hyp, theorem-C, prop-C.  Per group: frobenius for every divisor
    ``n <= frobenius_bound`` (all divisors by default), chm-corollary,
    centre-hypercentre-primes, and lemma-2.1 for direct products.
    """
    G.elements
    label = G.label
    out = []
    for P in pis_for(G, pis):
        out.append(_guarded(label, "theorem-A", P)(lambda: _theorem_a(G, P)))
        for q in P.primes_dividing(G.order):
            out.append(_guarded(label, "theo-hyp", P, q)(lambda: _theo_hyp(G, P, q)))
            out.append(_guarded(label, "theorem-C", P, q)(lambda: _theorem_c(G, P, q)))
            out.append(_guarded(label, "prop-C", P, q)(lambda: _prop_c(G, P, q)))
    for n in divisors(G.order):
        if frobenius_bound is None or n <= frobenius_bound:
            out.append(frobenius_check(G, n))
    out.append(_guarded(label, "chm-corollary")(lambda: _chm(G)))
    out.append(_guarded(label, "centre-hypercentre-primes")(lambda: _centre_hypercentre_primes(G)))
    if G.factors:
        out.append(_guarded(label, "lemma-2.1")(lambda: _factor_class_sizes(G)))
    out.sort(key=Verdict.sort_key)
    return out


@dataclass
class Corpus:
    entries: list[tuple[int, str]]
    cap: int | None = None
    digest: str = ""

    def __len__(self) -> int:
        return len(self.entries)


def parse_corpus(text: str) -> Corpus:
    """One group expression per line; ``#`` starts a comment.

    A ``cap=N`` line before the first expression sets the enumeration cap.
    """
    entries = []
    cap = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.replace(" ", "").startswith("cap="):
            if entries or cap is not None:
                raise ParseError(f"cap header must come before any group (line {lineno})")
            try:
                cap = int(line.split("=", 1)[1])
            except ValueError:
                raise ParseError(f"bad cap header on line {lineno}: {raw!r}") from None
            if cap < 1:
                raise ParseError(f"cap must be positive (line {lineno})")
            continue
        entries.append((lineno, line))
    return Corpus(entries, cap, hashlib.sha256(text.encode()).hexdigest())


def default_corpus() -> str:
    return resources.files("piclass").joinpath("data/default.corpus").read_text()


@dataclass
class CorpusReport:
    verdicts: list[Verdict]
    corpus_hash: str
    errors: list[dict] = field(default_factory=list)
    tables: list[dict] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, dict[str, int]]:
        out = {name: {"passed": 0, "failed": 0} for name in CHECKS}
        for v in self.verdicts:
            out[v.check_name]["passed" if v.passed else "failed"] += 1
        return out

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    @property
    def ok(self) -> bool:
        return not self.errors and not self.failures

    def to_json_obj(self) -> dict:
        return {
            "schema": SCHEMA,
            "corpus_hash": self.corpus_hash,
            "ok": self.ok,
            "summary": self.summary,
            "errors": self.errors,
            "tables": self.tables,
            "verdicts": [v.to_json_obj() for v in self.verdicts],
        }

    def to_text(self) -> str:
        rows = [("line", "group", "check", "pi", "q", "result", "details")]
        for v in self.verdicts:
            details = " ".join(f"{k}={val}" for k, val in v.details.items())
            rows.append((
                str(v.line),
                v.group_label,
                v.check_name,
                "-" if v.pi is None else str(v.pi),
                "-" if v.q is None else str(v.q),
                "pass" if v.passed else "FAIL",
                details,
            ))
        widths = [max(len(r[i]) for r in rows) for i in range(6)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r[:6], widths)) + "  " + r[6] for r in rows]
        for e in self.errors:
            lines.append(f"error line {e['line']} {e['spec']}: {e['error']}: {e['message']}")
        lines.append("")
        for name, tally in self.summary.items():
            lines.append(f"{name:<26} passed {tally['passed']:>5}  failed {tally['failed']:>5}")
        lines.append(f"corpus sha256 {self.corpus_hash}")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(line.rstrip() for line in lines) + "\n"


def run_corpus(
    corpus: Corpus | str,
    pi_policy=ALL_SUBSETS,
    cap: int | None = None,
    frobenius_bound: int | None = None,
) -> CorpusReport:
    """Verify every group of a corpus.

    ``cap`` overrides the corpus header, which overrides the default cap.
    Parse and enumeration failures become entries of ``report.errors``.
    """
    if isinstance(corpus, str):
        corpus = parse_corpus(corpus)
    cap = cap if cap is not None else corpus.cap
    verdicts: list[Verdict] = []
    errors: list[dict] = []
    tables: list[dict] = []
    for lineno, spec in corpus.entries:
        try:
            G = named_group(spec, cap=cap)
            G.elements
            group_verdicts = verify_group(G, pi_policy, frobenius_bound)
        except PiclassError as exc:
            errors.append({
                "line": lineno,
                "spec": spec,
                "error": type(exc).__name__,
                "message": str(exc),
            })
            continue
        for v in group_verdicts:
            v.line = lineno
        verdicts.extend(group_verdicts)
        for P in pis_for(G, pi_policy):
            tables.append({
                "line": lineno,
                "group": G.label,
                "table": frequency_table(G, P).to_json_obj(),
            })
    verdicts.sort(key=Verdict.sort_key)
    return CorpusReport(verdicts, corpus.digest, errors, tables)
