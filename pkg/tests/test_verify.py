import json

import pytest

from piclass.arith import PrimeSet
from piclass.errors import NotADivisor, ParseError
from piclass.verify import (
    CHECKS,
    Verdict,
    default_corpus,
    frobenius_check,
    parse_corpus,
    pis_for,
    run_corpus,
    verify_group,
)


def by_check(verdicts, name, pi=None, q=None):
    return [v for v in verdicts if v.check_name == name
            and (pi is None or v.pi == pi) and (q is None or v.q == q)]


def test_frobenius_examples(group):
    v = frobenius_check(group("S(3)"), 1)
    assert v.passed and v.details["count"] == 1
    v = frobenius_check(group("S(3)"), 2)
    assert v.passed and v.details["count"] == 4
    v = frobenius_check(group("C(5)xS(3)"), 10)
    assert v.passed and v.details["count"] == 20


def test_frobenius_requires_divisor(group):
    with pytest.raises(NotADivisor):
        frobenius_check(group("S(3)"), 4)


def test_verdict_registry():
    with pytest.raises(ValueError):
        Verdict("G", None, "made-up", True)


def test_verify_group_examples(group):
    vs = verify_group(group("A(4)"), [PrimeSet.of(2)])
    (a,) = by_check(vs, "theorem-A")
    assert a.passed and a.details["decision"] is False and a.details["oracle"] is False
    vs = verify_group(group("C(3)xD(10)"), [PrimeSet.of(2, 3)])
    (c,) = by_check(vs, "theorem-C", q=3)
    assert c.passed and c.details["divides"] and not c.details["equal"]
    vs = verify_group(group("Q8"), [PrimeSet.of(2)])
    (chm,) = by_check(vs, "chm-corollary")
    assert chm.passed and chm.details["decision"] is True


def test_verify_group_covers_every_combination(group):
    G = group("C(5)xS(3)")
    vs = verify_group(G)
    pis = pis_for(G)
    assert len(pis) == 7
    for P in pis:
        assert len(by_check(vs, "theorem-A", pi=P)) == 1
        for q in P.members:
            for name in ("theo-hyp", "theorem-C", "prop-C"):
                assert len(by_check(vs, name, pi=P, q=q)) == 1
    assert len(by_check(vs, "frobenius")) == 8
    assert len(by_check(vs, "lemma-2.1")) == 1
    assert all(v.passed for v in vs)
    assert vs == sorted(vs, key=Verdict.sort_key)


def test_pis_for_falls_back_above_four_primes(group):
    G = group("C(2310)")  # 2*3*5*7*11
    pis = pis_for(G)
    assert pis == [PrimeSet.of(p) for p in (2, 3, 5, 7, 11)] + [PrimeSet.of(2, 3, 5, 7, 11)]
    assert pis_for(G, [PrimeSet.of(3)]) == [PrimeSet.of(3)]
    assert pis_for(group("C(1)")) == []


def test_listed_pi_outside_group_primes(group):
    vs = verify_group(group("Q8"), [PrimeSet.of(3)])
    assert by_check(vs, "theo-hyp") == []
    (a,) = by_check(vs, "theorem-A")
    assert a.passed and a.details["N"] == 1


def test_frobenius_bound(group):
    vs = verify_group(group("S(4)"), [PrimeSet.of(2)], frobenius_bound=4)
    assert sorted(v.details["n"] for v in by_check(vs, "frobenius")) == [1, 2, 3, 4]


def test_parse_corpus():
    c = parse_corpus("# header\ncap=500\n\nS(3)  # trailing\nA(4)\n")
    assert c.cap == 500
    assert c.entries == [(4, "S(3)"), (5, "A(4)")]
    assert len(c.digest) == 64
    with pytest.raises(ParseError):
        parse_corpus("S(3)\ncap=5\n")
    with pytest.raises(ParseError):
        parse_corpus("cap=abc\n")


def test_empty_corpus():
    r = run_corpus("")
    assert r.ok and r.verdicts == [] and r.errors == []
    assert all(t == {"passed": 0, "failed": 0} for t in r.summary.values())


def test_cap_error_is_collected():
    r = run_corpus("cap=10\nC(3)\nS(5)\nnonsense(\n")
    assert not r.ok
    assert [(e["line"], e["error"]) for e in r.errors] == [(3, "CapExceeded"), (4, "UnknownName")]
    assert r.verdicts and all(v.group_label == "C(3)" for v in r.verdicts)


def test_explicit_cap_overrides_header():
    assert run_corpus("cap=10\nS(5)\n", cap=200).ok


def test_default_corpus_passes_and_is_deterministic():
    text = default_corpus()
    r1, r2 = run_corpus(text), run_corpus(text)
    assert r1.ok, [v.to_json_obj() for v in r1.failures]
    assert json.dumps(r1.to_json_obj()) == json.dumps(r2.to_json_obj())
    assert r1.to_text() == r2.to_text()
    assert {name for name in CHECKS} == {name for name, t in r1.summary.items() if t["passed"]}
    assert sum(t["passed"] + t["failed"] for t in r1.summary.values()) == len(r1.verdicts)


def test_default_corpus_lists_required_groups():
    specs = {s for _, s in parse_corpus(default_corpus()).entries}
    required = {f"C({n})" for n in range(1, 13)} | {f"D({2 * n})" for n in range(1, 11)}
    required |= {"S(3)", "S(4)", "S(5)", "A(4)", "A(5)", "Q8", "SL(2,3)",
                 "C(3)xD(10)", "C(5)xS(3)", "C(3)xS(3)", "Q8xC(3)"}
    assert required <= specs


def test_s3_a4_tables_identical_in_report():
    r = run_corpus("S(3)\nA(4)\n", [PrimeSet.of(2)])
    t = {e["group"]: json.dumps(e["table"]) for e in r.tables}
    assert t["S(3)"] == t["A(4)"] == '{"schema": "piclass/1", "pi": "{2}", "counts": [[1, 1], [3, 1]]}'


def test_report_json_schema():
    obj = run_corpus("S(3)\n").to_json_obj()
    assert obj["schema"] == "piclass/1"
    assert set(obj) == {"schema", "corpus_hash", "ok", "summary", "errors", "tables", "verdicts"}
    v = obj["verdicts"][0]
    assert set(v) == {"line", "group", "check", "pi", "q", "passed", "details"}
