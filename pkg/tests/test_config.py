import pytest

from gnetcode import minimum_distances, classify
from gnetcode.config import ConfigError, channel_from_config, config_digest

REPETITION = """
[field]
p = 2
k = 1

[weight]
kind = hamming

[channel]
kind = classical

[code]
codewords =
    0,0,0
    1,1,1
"""

MATRIX_RANK = """
[field]
p = 2

[weight]
kind = rank

[channel]
kind = matrix
a =
    1,0
b =
    1,0
    0,1

[code]
rows = 2
space = 2x1
"""

TOY_NETWORK = """
[field]
p = 3

[channel]
kind = network
nodes = s, a, b, c, d, t
source = s
sink = t
edges =
    s a
    s b
    s c
    a b
    b d
    c d
    a t
    d t
    c t

[code]
codewords =
    0,0,0
    1,1,1

[function a b]
0 = 0
1 = 1
2 = 2

[function a t]
0 = 0
1 = 1
2 = 2

[function c d]
0 = 0
1 = 1
2 = 2

[function c t]
0 = 0
1 = 1
2 = 2

[function b d]
0,0 = 0
0,1 = 0
0,2 = 0
1,0 = 2
1,1 = 1
1,2 = 0
2,0 = 0
2,1 = 0
2,2 = 0

[function d t]
0,0 = 0
0,1 = 0
0,2 = 0
1,0 = 1
1,1 = 1
1,2 = 0
2,0 = 0
2,1 = 1
2,2 = 0
"""

TABLE = """
[field]
p = 2

[channel]
kind = table
error_length = 1
output_length = 2

[code]
codewords =
    0
    1

[transfer]
0 ; 0 = 0,0
0 ; 1 = 0,1
1 ; 0 = 1,0
1 ; 1 = 1,1
"""


def test_classical_config():
    ch = channel_from_config(REPETITION)
    report = minimum_distances(ch)
    assert (report.d0_min, report.d1_min, report.d2_min) == (3, 3, 3)


def test_matrix_rank_config():
    ch = channel_from_config(MATRIX_RANK)
    assert ch.errors.measure.kind == "rank"
    assert len(ch.codewords) == 4
    verdict = classify(ch)
    assert verdict.error_linear and verdict.linear


def test_network_config_matches_builtin_fixture(toy):
    ch = channel_from_config(TOY_NETWORK)
    assert minimum_distances(ch).to_dict() == minimum_distances(toy).to_dict()


def test_table_config():
    ch = channel_from_config(TABLE)
    assert ch.evaluate((1,), (1,)) == (1, 1)


def test_generator_code():
    text = REPETITION.replace(
        "codewords =\n    0,0,0\n    1,1,1", "generator =\n    1,1,1")
    ch = channel_from_config(text)
    assert set(ch.codewords) == {(0, 0, 0), (1, 1, 1)}


def test_space_code():
    text = REPETITION.replace("codewords =\n    0,0,0\n    1,1,1", "space = 2")
    ch = channel_from_config(text)
    assert len(ch.codewords) == 4


def test_unknown_key_rejected():
    with pytest.raises(ConfigError, match="unknown key"):
        channel_from_config(REPETITION.replace("kind = hamming",
                                               "kind = hamming\nblocc = 1"))


def test_unknown_section_rejected():
    with pytest.raises(ConfigError, match="unknown section"):
        channel_from_config(REPETITION + "\n[extra]\nx = 1\n")
    with pytest.raises(ConfigError, match="only applies"):
        channel_from_config(REPETITION + "\n[transfer]\n0 ; 0 = 0\n")
    with pytest.raises(ConfigError, match="only applies"):
        channel_from_config(REPETITION + "\n[function a b]\n0 = 0\n")


def test_single_codeword_rejected():
    with pytest.raises(ConfigError, match="two codewords"):
        channel_from_config(REPETITION.replace("    1,1,1\n", ""))


def test_bad_field_rejected():
    with pytest.raises(ConfigError, match="prime"):
        channel_from_config(REPETITION.replace("p = 2", "p = 6"))


def test_bad_symbol_rejected():
    with pytest.raises(ConfigError, match="symbols"):
        channel_from_config(REPETITION.replace("1,1,1", "1,2,1"))


def test_weight_channel_mismatch():
    with pytest.raises(ConfigError, match="hamming"):
        channel_from_config(REPETITION.replace("kind = hamming", "kind = rank"))


def test_missing_section():
    with pytest.raises(ConfigError, match=r"\[field\]"):
        channel_from_config("[channel]\nkind = classical\n")


def test_budget_override():
    from gnetcode import BudgetError
    with pytest.raises(BudgetError, match="exceeds"):
        channel_from_config(REPETITION, pair_budget=3)


def test_digest_is_stable():
    assert config_digest(REPETITION) == config_digest(REPETITION)
    assert config_digest(REPETITION) != config_digest(TABLE)
