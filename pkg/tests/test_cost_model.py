import itertools
import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzylex import (
    AxiomViolation,
    ConflictingSymmetry,
    CostModel,
    EpsilonEpsilon,
    MalformedLine,
    ShortCircuit,
    c1,
    epsilon_min,
    gamma1_arcs,
    kappa,
    parse_cost_model,
    serialize_cost_model,
)
from fuzzylex.cost_model import validate_cost_text

from generators import random_alphabet, random_model

FIXTURES = Path(__file__).parent / "fixtures"


def test_parse_rule_and_mirror():
    model = parse_cost_model("rn\tm\t0.5\n")
    assert ShortCircuit("rn", "m", 0.5) in model.shortcuts
    assert ShortCircuit("m", "rn", 0.5) in model.shortcuts
    assert len(model.shortcuts) == 2
    assert model.alphabet == {"r", "n", "m"}


@pytest.mark.parametrize(
    "text, error",
    [
        ("a\ta\t0.1\n", AxiomViolation),
        ("tout\ttt\t4.0\n", AxiomViolation),
        ("ab\tab\t0.5\n", AxiomViolation),
        ("a\tb\t0\n", AxiomViolation),
        ("a\tb\t-0.5\n", AxiomViolation),
        ("a\tb\t1\n", AxiomViolation),
        ("_\t\t0.5\n", EpsilonEpsilon),
        ("a\tb\n", MalformedLine),
        ("a\tb\tcheap\n", MalformedLine),
        ("a\tb\tnan\n", MalformedLine),
        ("a\tb\t0.5\t1\n", MalformedLine),
        ("rn\tm\t0.5\nm\trn\t0.75\n", ConflictingSymmetry),
        ("rn\tm\t0.5\nrn\tm\t0.75\n", ConflictingSymmetry),
    ],
)
def test_parse_rejects(text, error):
    with pytest.raises(error):
        parse_cost_model(text)


def test_error_carries_line_number():
    with pytest.raises(AxiomViolation) as info:
        parse_cost_model("# header\n\nrn\tm\t0.5\ntout\ttt\t4.0\n")
    assert info.value.line == 4


def test_validate_collects_every_problem():
    model, errors = validate_cost_text("a\ta\t0.1\nok\tfine\t1\ntout\ttt\t4.0\nx\n")
    assert model is None
    assert [e.line for e in errors] == [1, 3, 4]


def test_consistent_explicit_mirror_is_accepted():
    model = parse_cost_model("rn\tm\t0.5\nm\trn\t0.5\n")
    assert len(model.shortcuts) == 2


def test_identity_rule_at_zero_is_implicit():
    model = parse_cost_model("a\ta\t0\n")
    assert model.shortcuts == ()


def test_epsilon_markers_and_escapes():
    model = parse_cost_model("a\t_\t0.25\n\tb\t0.5\n\\_\t-\t0.5\n")
    assert model.cost("a", "") == 0.25
    assert model.cost("", "b") == 0.5
    assert model.cost("_", "-") == 0.5
    assert "_" in model.alphabet


def test_comments_blank_lines_and_crlf():
    model = parse_cost_model("# comment\r\n\r\nrn\tm\t0.5\r\n")
    assert model.cost("m", "rn") == 0.5


def test_c1_examples():
    empty = CostModel()
    ocr = CostModel.from_rules([("rn", "m", 0.5)])
    assert c1(empty, "a", "a") == 0
    assert c1(empty, "a", "") == 1
    assert c1(empty, "", "a") == 1
    assert c1(empty, "a", "b") == 1
    assert c1(ocr, "m", "rn") == 0.5
    assert c1(empty, "ab", "cd") is None
    assert c1(empty, "ab", "ab") is None
    assert c1(empty, "", "") is None


def test_gamma1_two_symbols():
    arcs = gamma1_arcs(CostModel(alphabet=frozenset("ab")))
    assert sorted(arcs) == sorted(
        [
            ("a", "a", 0),
            ("b", "b", 0),
            ("a", "b", 1),
            ("b", "a", 1),
            ("a", "", 1),
            ("b", "", 1),
            ("", "a", 1),
            ("", "b", 1),
        ]
    )


def test_gamma1_with_block_rule():
    arcs = gamma1_arcs(CostModel.from_rules([("aa", "a", 0.5)]))
    assert sorted(arcs) == sorted(
        [("a", "a", 0), ("a", "", 1), ("", "a", 1), ("aa", "a", 0.5), ("a", "aa", 0.5)]
    )


def test_gamma1_empty():
    assert gamma1_arcs(CostModel()) == []


def _brute_gamma1(model):
    """Every block pair up to the longest rule side, kept when its cost is defined."""
    longest = max([len(sc.left) for sc in model.shortcuts] + [len(sc.right) for sc in model.shortcuts] + [1])
    symbols = sorted(model.alphabet)
    blocks = ["".join(p) for k in range(longest + 1) for p in itertools.product(symbols, repeat=k)]
    return {(g, h, model.cost(g, h)) for g in blocks for h in blocks if model.cost(g, h) is not None}


@pytest.mark.parametrize("seed", range(40))
def test_gamma1_count_matches_enumeration(seed):
    rng = random.Random(seed)
    alphabet = random_alphabet(rng, rng.randint(1, 3))
    model = random_model(rng, alphabet, 6)
    arcs = gamma1_arcs(model)
    assert len(arcs) == (len(model.alphabet) + 1) ** 2 + model.kappa - 1
    assert set(arcs) == _brute_gamma1(model)


def test_kappa_and_epsilon():
    assert kappa(CostModel()) == 0
    assert epsilon_min(CostModel()) == 1
    ocr = CostModel.from_rules([("rn", "m", 0.5)])
    assert kappa(ocr) == 2
    assert epsilon_min(ocr) == 0.5
    free = CostModel.from_rules([("a", "", 0.25)])
    assert kappa(free) == 0
    assert epsilon_min(free) == 0.25


@pytest.mark.parametrize("name", ["ocr.tsv", "abbreviations.tsv", "spelling.tsv", "keyboard.tsv", "occident.tsv", "free_a.tsv"])
def test_fixture_files_are_valid(name):
    model = parse_cost_model((FIXTURES / name).read_text(encoding="utf-8"))
    assert model.shortcuts


models = st.builds(
    lambda seed, size, rules: random_model(random.Random(seed), random_alphabet(random.Random(seed), size), rules),
    st.integers(0, 2**32),
    st.integers(1, 5),
    st.integers(0, 10),
)


@settings(max_examples=200, deadline=None)
@given(models)
def test_round_trip(model):
    # the file only carries rules; extra alphabet symbols come from the dictionary
    model = CostModel(model.shortcuts)
    assert parse_cost_model(serialize_cost_model(model)) == model


def test_round_trip_special_blocks():
    model = CostModel.from_rules([("_", "", 0.5), ("\\", "x", 0.5), ("a_b", "ab", 1.5)])
    assert parse_cost_model(serialize_cost_model(model)) == model


@settings(max_examples=200, deadline=None)
@given(models, st.data())
def test_arc_cost_properties(model, data):
    symbols = sorted(model.alphabet)
    for g, h, cost in gamma1_arcs(model):
        assert model.cost(h, g) == cost
        assert (cost == 0) == (g == h)
        if max(len(g), len(h)) <= 1:
            assert 0 <= cost <= 1
        else:
            assert 0 < cost < max(len(g), len(h))
    a = data.draw(st.sampled_from(symbols))
    assert model.cost(a, a) == 0


def test_shortcircuit_enforces_axioms():
    with pytest.raises(AxiomViolation):
        ShortCircuit("abc", "x", 3.0)
    with pytest.raises(EpsilonEpsilon):
        ShortCircuit("", "", 0.5)


def test_model_rejects_asymmetric_table():
    with pytest.raises(ConflictingSymmetry):
        CostModel((ShortCircuit("rn", "m", 0.5),))
