import pytest

import gammaring as gr


def by_name(name):
    for ring in gr.builtin_instances():
        if ring.name == name:
            return ring
    raise KeyError(name)


def test_builtins_load():
    names = [r.name for r in gr.builtin_instances()]
    assert "Z2" in names and "rect(1,2;2)" in names


def test_parse_round_trip():
    ring = gr.instance("rect", ["1", "2", "2"])
    again = gr.parse_instance(ring.to_text())
    assert again == ring
    assert again.hash() == ring.hash()
    assert ring.m_moduli == [2, 2]


def test_parse_error_is_typed():
    with pytest.raises(gr.ParseError):
        gr.parse_instance("gammaring v1\nM: 2\n")


def test_products():
    z2 = by_name("Z2")
    assert z2.product([1], [1], [1]) == [1]
    rect = gr.instance("rect", ["1", "2", "2"])
    assert rect.commutator([1, 0], [0, 1], [1, 0]) != [0, 0]


def test_analyze():
    rect = gr.instance("rect", ["1", "2", "2"])
    info = gr.analyze(rect)
    assert info["center_order"] == 1
    assert info["prime"] and not info["commutative"]
    dual = gr.instance("dual")
    assert not gr.analyze(dual)["semiprime"]


def test_maps():
    dual = gr.instance("dual")
    assert len(gr.enumerate_maps(dual, "left_derivation")) == 4
    rect = gr.instance("rect", ["1", "2", "2"])
    assert gr.enumerate_maps(rect, "endomorphism", scp=True) == [[[1, 0], [0, 1]]]
    verdicts = gr.classify_map(rect, [[0, 0], [0, 0]])
    assert verdicts["derivation"] and verdicts["endomorphism"] and verdicts["center_valued"]
    assert not verdicts["scp"]


def test_frobenius():
    ring, sigma = gr.frobenius_example()
    verdicts = gr.classify_map(ring, sigma)
    assert verdicts["endomorphism"] and verdicts["scp"]


def test_verify_theorem():
    rect = gr.instance("rect", ["1", "2", "2"])
    for tid in gr.theorem_ids():
        report = gr.verify_theorem(rect, tid, seed=3)
        assert report["verdict"] is True
        assert report["falsification"] is False


def test_search_finds_non_semiprime_witness():
    report = gr.search("left-derivation-not-central", seed=1, count=20)
    assert report["verdict"] is False
    assert report["falsification"] is False
    assert report["witnesses"][0]["instance"].startswith("random(")


def test_cap_exceeded():
    with pytest.raises(gr.CapExceeded):
        gr.enumerate_maps(gr.instance("rect", ["2", "2", "2"]), "additive_only", node_cap=10)


def test_cli_bridge():
    code, out, _ = gr.run_cli(["instance", "z2"])
    assert code == 0 and out.startswith("gammaring v1")
    code, _, err = gr.run_cli(["verify", "/nonexistent.gr", "--theorem", "thm-scp-derivation"])
    assert code == 2 and err
