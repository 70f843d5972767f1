import json

import pytest

from grassop import SuiteConfig, run_suite
from grassop.errors import InvalidInput
from grassop.serialization import deserialize_operator


class TestSuite:
    def test_small_run_passes(self):
        report = run_suite(SuiteConfig(trials=5))
        assert report.ok
        assert len(report.results) == 17

    def test_reports_are_deterministic(self):
        a = run_suite(SuiteConfig(seed=11, trials=3)).to_json()
        b = run_suite(SuiteConfig(seed=11, trials=3)).to_json()
        assert a == b

    def test_different_seeds_differ_in_content_not_verdict(self):
        a = run_suite(SuiteConfig(seed=1, trials=3))
        b = run_suite(SuiteConfig(seed=2, trials=3))
        assert a.ok and b.ok

    def test_subset_selection(self):
        report = run_suite(SuiteConfig(trials=3, only=("fixed_rank2_pair",)))
        assert [r.name for r in report.results] == ["fixed_rank2_pair"]

    def test_failure_payloads_deserialize(self):
        # inject a failing check by hand: the payload schema must carry
        # operators that deserialize back to valid class members
        from grassop.suite import _payload
        from grassop import ClassSignature, random_operator
        import numpy as np

        op = random_operator(
            ClassSignature((0.0, 1.0), (2, 2), 4), np.random.default_rng(0)
        )
        payload = _payload(3, "synthetic", op)
        restored = deserialize_operator(payload["operators"][0])
        assert restored.signature.ambient_dim == 4

    def test_config_validation(self):
        with pytest.raises(InvalidInput):
            SuiteConfig(trials=0)
        with pytest.raises(InvalidInput):
            SuiteConfig(max_ambient=100)

    def test_json_shape(self):
        report = run_suite(SuiteConfig(trials=2, only=("fixed_rank2_pair",)))
        doc = json.loads(report.to_json())
        assert doc["ok"] is True
        assert doc["checks"][0]["name"] == "fixed_rank2_pair"
        assert "seconds" not in doc["checks"][0]
        timed = json.loads(report.to_json(include_timing=True))
        assert "seconds" in timed["checks"][0]
