import pytest

from gnetcode import (Field, classical_channel, table_channel, mwd, mwd_bounded,
                      DETECTED, is_correctable, is_detectable, capability,
                      is_joint_correcting, InvalidDecoderError)


def single_edge_channel():
    return classical_channel(Field(2), [(0,), (1,)])


def disjoint_images_channel():
    gf2 = Field(2)
    table = {((x,), (z,)): (x, z) for x in range(2) for z in range(2)}
    return table_channel(gf2, [(0,), (1,)], 1, 2, table)


def test_mwd_toy(toy):
    assert mwd(toy, (0, 0, 0)).codeword == (0, 0, 0)
    assert mwd(toy, (1, 1, 1)).codeword == (1, 1, 1)


def test_mwd_repetition(repetition):
    assert mwd(repetition, (1, 0, 0)).codeword == (0, 0, 0)
    assert mwd(repetition, (1, 1, 0)).codeword == (1, 1, 1)


def test_mwd_tie_detects(gf2):
    ch = classical_channel(gf2, [(0, 0), (1, 1)])
    outcome = mwd(ch, (1, 0))
    assert outcome.detected
    assert outcome == DETECTED


def test_mwd_bounded_toy(toy):
    assert mwd_bounded(toy, 0, (0, 0, 0)).codeword == (0, 0, 0)
    assert mwd_bounded(toy, 1, (1, 0, 0)).codeword == (0, 0, 0)
    assert mwd_bounded(toy, 1, (2, 2, 2)).detected


def test_mwd_bounded_all_clean_outputs(toy, repetition, hamming_code_channel):
    for ch in (toy, repetition, hamming_code_channel):
        for x in ch.codewords:
            assert mwd_bounded(ch, 0, ch.zero_output(x)).codeword == x


def test_mwd_bounded_invalid_radius(repetition):
    with pytest.raises(InvalidDecoderError, match="intersect"):
        mwd_bounded(repetition, 2, (0, 0, 0))


def test_correctable(toy):
    zero = (0,) * 9
    assert is_correctable(toy, zero)
    # every single error is correctable on the fixture network
    for ei in range(9):
        for v in (1, 2):
            z = tuple(v if i == ei else 0 for i in range(9))
            assert is_correctable(toy, z)
    # the double error that lands on the other codeword's clean output is not
    z = (2, 0, 2, 0, 0, 0, 0, 0, 0)
    assert not is_correctable(toy, z)


def test_detectable(toy):
    z = (2, 0, 2, 0, 0, 0, 0, 0, 0)
    assert not is_detectable(toy, z)
    assert is_detectable(toy, (1, 0, 0, 0, 0, 0, 0, 0, 0))
    # an error a nonlinear node swallows entirely still counts as detectable
    assert is_detectable(toy, (0, 1, 0, 0, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError, match="nonzero"):
        is_detectable(toy, (0,) * 9)


def test_capability_toy(toy):
    cap = capability(toy)
    assert cap.max_correctable == 1
    assert cap.max_detectable == 1
    assert not cap.all_correctable and not cap.all_detectable


def test_capability_repetition(repetition):
    cap = capability(repetition)
    assert cap.max_correctable == 1
    assert cap.max_detectable == 2


def test_capability_single_edge():
    cap = capability(single_edge_channel())
    assert cap.max_correctable == 0
    assert cap.max_detectable == 0


def test_mwd_unreachable_word_detects():
    gf2 = Field(2)
    # constant-error channel: y = (x, 0); the words (x, 1) are unreachable
    table = {((x,), (z,)): (x, 0) for x in range(2) for z in range(2)}
    ch = table_channel(gf2, [(0,), (1,)], 1, 2, table)
    assert mwd(ch, (0, 1)).detected


def test_fully_correctable_channel_flagged():
    ch = disjoint_images_channel()
    cap = capability(ch)
    assert cap.all_correctable and cap.max_correctable == ch.w_max
    assert cap.all_detectable and cap.max_detectable == ch.w_max


def test_joint_toy(toy):
    assert is_joint_correcting(toy, 0, 1)
    assert is_joint_correcting(toy, 1, 0)
    assert not is_joint_correcting(toy, 0, 2)
    assert not is_joint_correcting(toy, 1, 1)
    assert not is_joint_correcting(toy, 2, 0)


def test_joint_grid_cross_checked(toy, repetition, hamming_code_channel):
    # is_joint_correcting cross-checks its two routes internally; sweeping a
    # grid over several channels exercises that agreement
    for ch in (toy, repetition, hamming_code_channel):
        for c in range(3):
            for cp in range(3):
                is_joint_correcting(ch, c, cp)


def test_joint_capability_consistency(toy, repetition):
    for ch in (toy, repetition):
        cap = capability(ch, joint_grid=(0, 0))
        assert is_joint_correcting(ch, cap.max_correctable, 0)
        assert is_joint_correcting(ch, 0, cap.max_detectable)


def test_capability_report_grid(toy):
    cap = capability(toy)
    assert cap.joint[(0, 1)] is True
    assert cap.joint[(1, 0)] is True
    assert cap.joint[(0, 2)] is False
    as_dict = cap.to_dict()
    assert as_dict["joint"]["0,1"] is True


def test_input_validation(repetition):
    with pytest.raises(ValueError, match="nonnegative"):
        mwd_bounded(repetition, -1, (0, 0, 0))
    with pytest.raises(ValueError, match="error space"):
        is_correctable(repetition, (0, 0))
    with pytest.raises(ValueError, match="nonnegative"):
        is_joint_correcting(repetition, -1, 0)


def test_mwd_matches_naive_oracle(repetition):
    import itertools
    import random
    from gnetcode import Field, random_table_channel
    from oracles import naive_mwd

    channels = [repetition, single_edge_channel(), disjoint_images_channel()]
    rng = random.Random(31)
    channels += [random_table_channel(rng, Field(q), n_codewords=3,
                                      error_length=2, output_length=2)
                 for q in (2, 3)]
    for ch in channels:
        q = ch.field.q
        n = len(ch.zero_output(ch.codewords[0]))
        for y in itertools.product(range(q), repeat=n):
            assert mwd(ch, y).codeword == naive_mwd(ch, y)
