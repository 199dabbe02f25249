"""The frozen expected values still match a fresh run of the reference oracles."""

import json

import make_golden


def test_golden_file_is_fresh(golden):
    assert json.loads(json.dumps(make_golden.derive(), sort_keys=True)) == golden
