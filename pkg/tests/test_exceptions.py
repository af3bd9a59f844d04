"""
异常体系测试
"""

import pytest

from src.shared.exceptions import (
    BaseError,
    ChainSpecError,
    ClaimError,
    ConfigError,
    CoverVerificationError,
    DisconnectedGraphError,
    HypothesisViolationError,
    LabelError,
    ParityError,
    SizeGateError,
    ValidationError,
    VertexOutOfRangeError,
    WitnessNotResolvingError,
)


def test_base_error_formats_code():
    err = BaseError("boom", code="X")
    assert str(err) == "[X] boom"
    assert str(BaseError("plain")) == "plain"
    assert err.to_dict() == {
        'error': 'BaseError',
        'message': 'boom',
        'code': 'X',
        'details': {},
        'exit_code': 2,
    }


@pytest.mark.parametrize("error, exit_code", [
    (ValidationError("bad"), 2),
    (ConfigError("bad"), 2),
    (ChainSpecError("bad", spec="even:"), 2),
    (ParityError("bad", cycle_lengths=[8, 9]), 2),
    (SizeGateError("pd", 20, 16), 2),
    (HypothesisViolationError("bad", requirement="n_i >= 5"), 2),
    (WitnessNotResolvingError("bad", pair=("v1_1", "v1_2")), 1),
    (CoverVerificationError("bad", edge=("v1_1", "v1_3")), 1),
])
def test_exit_codes(error, exit_code):
    assert error.exit_code == exit_code
    assert isinstance(error, BaseError)


def test_claim_errors_share_parent():
    assert issubclass(WitnessNotResolvingError, ClaimError)
    assert issubclass(CoverVerificationError, ClaimError)
    assert issubclass(HypothesisViolationError, ClaimError)


def test_details_are_collected():
    err = WitnessNotResolvingError("collision", pair=("v2_2", "v2_4"), instance="even:4,4,4")
    assert err.code == "WITNESS_NOT_RESOLVING"
    assert err.details == {'pair': ['v2_2', 'v2_4'], 'instance': 'even:4,4,4'}

    err = ParityError("odd length", cycle_lengths=(8, 9), parity="even")
    assert err.details == {'cycle_lengths': [8, 9], 'parity': 'even'}

    err = LabelError("unknown", label="v9_9", position=(9, 9))
    assert err.details == {'label': 'v9_9', 'position': [9, 9]}


def test_explicit_details_are_merged():
    err = ValidationError("bad", field="ns", value=[3], details={'hint': 'use 5'})
    assert err.details == {'hint': 'use 5', 'field': 'ns', 'value': [3]}


def test_size_gate_message():
    err = SizeGateError("partition_dimension_exact", 24, 16)
    assert "size gate" in str(err)
    assert err.details == {'operation': 'partition_dimension_exact', 'n': 24, 'limit': 16}


def test_graph_errors():
    err = VertexOutOfRangeError(7, 5)
    assert err.details == {'vertex': 7, 'vertex_count': 5}
    assert DisconnectedGraphError(operation="diameter").details == {'operation': 'diameter'}
