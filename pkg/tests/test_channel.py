import itertools

import pytest

from gnetcode import (Field, WeightMeasure, RANK, classical_channel,
                      matrix_channel, table_channel, classify,
                      enumerate_errors_up_to, ConstructionError, BudgetError)
from gnetcode import matrices as mx
from gnetcode.channel import Channel, VectorSpace, ErrorModel
from gnetcode.weights import HAMMING


def test_classical_channel_valid(gf2):
    ch = classical_channel(gf2, [(0, 0, 0), (1, 1, 1)])
    assert ch.zero_output((0, 0, 0)) == (0, 0, 0)
    assert ch.evaluate((1, 1, 1), (0, 1, 1)) == (1, 0, 0)


def test_classical_evaluate_example(gf2):
    ch = classical_channel(gf2, [(1, 1, 0), (0, 1, 1)])
    assert ch.evaluate((1, 1, 0), (0, 1, 1)) == (1, 0, 1)


def test_duplicate_codewords_collide(gf2):
    with pytest.raises(ConstructionError, match="distinct"):
        classical_channel(gf2, [(0, 0, 0), (0, 0, 0)])


def test_zero_error_collision_detected(gf2):
    # distinct codewords whose clean outputs collide through a table
    table = {}
    for x in ((0,), (1,)):
        for z in ((0,), (1,)):
            table[(x, z)] = (0,) if z == (0,) else (x[0],)
    with pytest.raises(ConstructionError, match="collide at zero error"):
        table_channel(gf2, [(0,), (1,)], 1, 1, table)


def test_single_codeword_rejected(gf2):
    with pytest.raises(ConstructionError, match="two codewords"):
        classical_channel(gf2, [(0, 0)])


def test_membership_validation(gf2, repetition):
    with pytest.raises(ValueError, match="not a codeword"):
        repetition.evaluate((1, 0, 0), (0, 0, 0))
    with pytest.raises(ValueError, match="error space"):
        repetition.evaluate((0, 0, 0), (0, 0))


def test_budget_rejected(gf3):
    with pytest.raises(BudgetError):
        classical_channel(gf3, [(0,) * 9, (1,) * 9], pair_budget=1000)


def test_matrix_channel_identity(gf2):
    ident = mx.identity(3)
    ch = matrix_channel(gf2, [(0, 0, 0), (1, 1, 1)], ident, ident)
    for z in ch.errors.space.elements():
        assert ch.evaluate((1, 1, 1), z) == tuple(1 ^ b for b in z)


def test_matrix_channel_dimension_mismatch(gf2):
    with pytest.raises(ConstructionError, match="columns"):
        matrix_channel(gf2, [(0, 0), (1, 1)], mx.identity(2), mx.zeros(2, 3))
    with pytest.raises(ConstructionError, match="length"):
        matrix_channel(gf2, [(0, 0, 0), (1, 1, 1)], mx.identity(2), mx.identity(2))


def test_classify_classical_linear(gf2, repetition):
    verdict = classify(repetition)
    assert verdict.error_linear and verdict.linear and verdict.witness is None


def test_classify_non_subspace_code(gf2):
    ch = classical_channel(gf2, [(0, 0, 1), (1, 1, 0)])
    verdict = classify(ch)
    assert verdict.error_linear
    assert not verdict.linear
    assert verdict.witness[0] == "code-not-subspace"


def test_classify_matrix_channels():
    gf3 = Field(3)
    a = ((1, 0, 1), (0, 1, 1))
    b = ((1, 1, 0), (0, 1, 1), (1, 0, 0))
    codewords = list(itertools.product(range(3), repeat=2))
    ch = matrix_channel(gf3, codewords, a, b)
    verdict = classify(ch)
    assert verdict.error_linear and verdict.linear


def test_classify_rank_channel(gf2):
    a = ((1, 0),)
    b = ((1, 0), (0, 1))
    codewords = [((0,), (0,)), ((0,), (1,)), ((1,), (0,)), ((1,), (1,))]
    ch = matrix_channel(gf2, codewords, a, b, WeightMeasure(RANK))
    verdict = classify(ch)
    assert verdict.error_linear and verdict.linear


def test_classify_toy_not_error_linear(toy):
    verdict = classify(toy)
    assert not verdict.error_linear and not verdict.linear
    tag, x, z = verdict.witness
    assert tag == "transfer-not-additive"
    # the witness must actually violate F(x, z) == F(x, 0) + h(z)
    x0 = toy.codewords[0]
    h = mx.vec_sub(toy.field, toy.evaluate(x0, z), toy.zero_output(x0))
    assert toy.evaluate(x, z) != mx.vec_add(toy.field, toy.zero_output(x), h)


def test_classify_reconstructs_transfer(gf2, repetition):
    # for an error-linear verdict, f + h rebuilds F exactly
    verdict = classify(repetition)
    assert verdict.error_linear
    x0 = repetition.codewords[0]
    for x in repetition.codewords:
        for z in repetition.errors.space.elements():
            h = mx.vec_sub(gf2, repetition.evaluate(x0, z), repetition.zero_output(x0))
            assert repetition.evaluate(x, z) == mx.vec_add(
                gf2, repetition.zero_output(x), h)


def test_classify_homomorphism_counterexample(gf2):
    # additive in (x, z) jointly but h fails the homomorphism: y = x + 2*z is
    # impossible over GF(2); instead use a table whose h is not additive
    table = {}
    for x in ((0,), (1,)):
        for z0, z1 in itertools.product(range(2), repeat=2):
            # h(z) depends nonlinearly on z = (z0, z1): h = z0 OR z1
            table[(x, (z0, z1))] = ((x[0] + (z0 | z1)) % 2,)
    ch = table_channel(gf2, [(0,), (1,)], 2, 1, table)
    verdict = classify(ch)
    assert not verdict.error_linear
    assert verdict.witness[0] == "error-map-not-homomorphic"


def test_classify_budget(gf3, toy):
    with pytest.raises(BudgetError):
        # force the homomorphism stage over the toy's 3^9 errors
        classify(classical_channel(gf3, [(0,) * 6, (1,) * 6]), pair_budget=10)


def test_enumerate_errors_up_to(gf3, toy):
    ch = classical_channel(gf3, [(0, 0, 0), (1, 1, 1)])
    zero_only = enumerate_errors_up_to(ch, 0)
    assert zero_only == [((0, 0, 0), 0)]
    radius1 = enumerate_errors_up_to(ch, 1)
    assert len(radius1) == 7  # 1 + 3 positions * 2 nonzero values
    assert [w for _, w in radius1] == sorted(w for _, w in radius1)
    radius2 = enumerate_errors_up_to(ch, 2)
    assert radius2[:len(radius1)] == radius1  # prefix property


def test_enumerate_rank_errors(gf2):
    a = ((1, 0),)
    b = ((1, 0), (0, 1))
    codewords = [((0,), (0,)), ((1,), (0,))]
    ch = matrix_channel(gf2, codewords, a, b, WeightMeasure(RANK))
    # zero matrix plus the nine rank-1 matrices in GF(2)^{2x2}
    assert len(enumerate_errors_up_to(ch, 1)) == 10


def test_custom_channel_rejects_output_outside_space(gf2):
    space = VectorSpace(gf2, 2)
    errors = ErrorModel(space, WeightMeasure(HAMMING))
    with pytest.raises(ConstructionError, match="output space"):
        Channel(gf2, [(0, 0), (1, 1)], errors, space, lambda x, z: (0, 0, 0))
