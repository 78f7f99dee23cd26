import pytest

import treereduce as tr

NOTATION = """Ops a:2 c:1 d:0 e:0 b:2
Automaton A
States q1 q2 q3 q4 q5
Final States q1 q2
Transitions
e -> q3
d -> q5
c(q3) -> q4
c(q5) -> q4
a(q3,q4) -> q1
b(q3,q4) -> q2
"""


def test_parse_and_inspect():
    aut = tr.parse_timbuk(NOTATION)
    assert aut.stats()["states"] == 6
    assert aut.stats()["transitions"] == 6
    assert sorted(aut.initial) == ["q1", "q2"]
    assert "c(q3) -> q4" in aut.rules
    assert aut.accepts("a(e,c(d))")
    assert not aut.accepts("a(d,c(e))")
    assert tr.parse_timbuk(aut.to_timbuk()).rules == aut.rules


def test_enumeration():
    aut = tr.parse_timbuk(NOTATION)
    assert tr.enumerate_language(aut, 3) == {"a(e,c(d))", "a(e,c(e))", "b(e,c(d))", "b(e,c(e))"}


def test_heavy_preserves_language():
    aut = tr.generate(n=8, td=2.0, seed=3)
    small, report = tr.heavy(aut, 2, 4)
    assert report["sound"]
    assert report["output"]["states"] <= report["input"]["states"]
    assert report["passes"][0]["pass"] == "ru"
    equal, witness = tr.equivalent(aut, small)
    assert equal and witness is None


def test_quotient_counterexample():
    gfq = tr.fixture("gfq")
    assert ("p", "q") in tr.relation(gfq, "dw-sim")
    assert ("q", "r") in tr.relation(gfq, "up-sim(dw-sim)")
    assert tr.gfq_allowed("up-sim(dw-sim)") == "no"
    reduced, _ = tr.baseline(gfq, "ruq")
    assert tr.equivalent(gfq, reduced) == (True, None)


def test_forced_prune_is_flagged():
    fig = tr.fixture("fig1a")
    pruned, report = tr.force_prune(fig, "strict-up-sim(strict-dw-sim)", "id")
    assert not report["sound"]
    assert tr.equivalent(fig, pruned) == (False, "a(c,d)")
    assert tr.gfp_allowed("strict-up-sim(strict-dw-sim)", "id") == "no"


def test_errors():
    with pytest.raises(tr.ParseError):
        tr.parse_timbuk("Ops a:2\nAutomaton A\nStates q\nFinal States q\nTransitions\na(q) -> q\n")
    with pytest.raises(tr.CatalogError):
        tr.relation(tr.fixture("gfq"), "sideways")
    with pytest.raises(tr.Error):
        tr.generate(n=2, td=9.0)


def test_bench_csv():
    csv = tr.bench("td=1.0:2.0:1.0", ["ru", "heavy:1:1"], n=8, samples=2, seed=1, timing=False)
    lines = csv.strip().splitlines()
    assert lines[0] == "td,method,mean_states,mean_transitions,mean_ms,samples"
    assert len(lines) == 5
    assert csv == tr.bench("td=1.0:2.0:1.0", ["ru", "heavy:1:1"], n=8, samples=2, seed=1, timing=False)
