#!/usr/bin/env python3
"""
Endpoint test suite for the vintv Flask app.
Uses Flask's test client to verify the JSON routes end-to-end.
Run: python -m unittest test_app
"""
import importlib
import json
import unittest
from unittest import mock

from app import app
app_module = importlib.import_module('app')


class AppEndpointTests(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        app.config["TESTING"] = True
        # test client requests come from 127.0.0.1, allowed by default
        cls.client = app.test_client()

    def post(self, path, payload):
        return self.client.post(path, data=json.dumps(payload), content_type="application/json")

    def test_health(self):
        resp = self.client.get("/health")
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp.get_json().get("status"), "ok")

    def test_algorithms_listing(self):
        resp = self.client.get("/algorithms")
        self.assertEqual(resp.status_code, 200)
        self.assertIn("insort_buggy", resp.get_json()["algorithms"])

    def test_merge(self):
        resp = self.post("/run/merge", {"a": [1, 4, 6], "b": [2, 4, 5, 8, 9]})
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp.get_json()["result"], [1, 2, 4, 4, 5, 6, 8, 9])

    def test_sum_with_trace(self):
        resp = self.post("/run/sum", {"low": 1, "high": 3, "trace": True})
        self.assertEqual(resp.status_code, 200)
        data = resp.get_json()
        self.assertEqual(data["result"], 6)
        self.assertEqual([e["kind"] for e in data["events"]].count("visit"), 3)

    def test_buggy_sort_is_a_422_with_diagnostic(self):
        resp = self.post("/run/insort_buggy", {"a": [10, 3, 7, 17, 11]})
        self.assertEqual(resp.status_code, 422)
        error = resp.get_json()["error"]
        self.assertEqual(error["kind"], "out_of_bounds")
        self.assertEqual((error["attempted_index"], error["vector_length"]), (5, 5))

    def test_empty_average_is_a_422(self):
        resp = self.post("/run/avg", {"a": []})
        self.assertEqual(resp.status_code, 422)

    def test_unknown_algorithm_returns_400(self):
        resp = self.post("/run/bogosort", {"a": [1]})
        self.assertEqual(resp.status_code, 400)
        self.assertEqual(resp.get_json()["error"]["kind"], "usage")

    def test_non_json_body_returns_400(self):
        resp = self.client.post("/run/avg", data="1,2,3", content_type="text/plain")
        self.assertEqual(resp.status_code, 400)
        self.assertIn("JSON object", resp.get_json()["error"]["message"])

    def test_non_numeric_element_is_rejected(self):
        resp = self.post("/run/avg", {"a": [1, "x"]})
        self.assertEqual(resp.status_code, 422)

    def test_trace_interval_lines(self):
        resp = self.post("/trace-interval", {"low": -1, "high": 1, "direction": "rl"})
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp.get_json()["lines"], [
            "[-1..1] = [[-1..0]..1]",
            "[-1..0] = [[-1..-1]..0]",
            "[-1..-1] = [[-1..-2]..-1]",
            "[-1..-2] = empty",
        ])

    def test_trace_interval_requires_bounds(self):
        resp = self.post("/trace-interval", {"direction": "lr"})
        self.assertEqual(resp.status_code, 400)

    def test_trace_limit_refuses_long_chains(self):
        with mock.patch.dict(app.config, {"TRACE_LIMIT": 2}):
            resp = self.post("/trace-interval", {"low": 0, "high": 9})
        self.assertEqual(resp.status_code, 400)
        error = resp.get_json()["error"]
        self.assertEqual((error["kind"], error["limit"], error["needed"]), ("trace_limit", 2, 11))

    def test_huge_interval_is_refused_up_front(self):
        with mock.patch("tracing.report_peels") as walk:
            resp = self.post("/trace-interval", {"low": 0, "high": 10 ** 9})
        self.assertEqual(resp.status_code, 400)
        walk.assert_not_called()

    def test_huge_sum_stops_at_the_limit(self):
        with mock.patch.dict(app.config, {"TRACE_LIMIT": 50}):
            resp = self.post("/run/sum", {"low": 0, "high": 10 ** 9, "trace": True})
        self.assertEqual(resp.status_code, 400)
        data = resp.get_json()
        self.assertEqual(data["error"]["kind"], "trace_limit")
        self.assertEqual(len(data["events"]), 50)

    def test_bounds_must_be_exact_integers(self):
        for low in (1.9, True, "1"):
            resp = self.post("/trace-interval", {"low": low, "high": 3})
            self.assertEqual(resp.status_code, 400, low)
        resp = self.post("/run/sum", {"low": 1, "high": 3.0})
        self.assertEqual(resp.status_code, 400)

    def test_ip_allowlist(self):
        with mock.patch.object(app_module, "ALLOWED_IPS", ["10.0.0.0/8"]):
            blocked = self.client.get("/algorithms", environ_overrides={"REMOTE_ADDR": "192.168.1.5"})
            allowed = self.client.get("/algorithms", environ_overrides={"REMOTE_ADDR": "10.1.2.3"})
            health_check = self.client.get("/health", environ_overrides={"REMOTE_ADDR": "192.168.1.5"})
        self.assertEqual(blocked.status_code, 403)
        self.assertEqual(allowed.status_code, 200)
        self.assertEqual(health_check.status_code, 200)

    def test_is_ip_allowed_rejects_garbage(self):
        self.assertFalse(app_module.is_ip_allowed("not-an-ip"))
        with mock.patch.object(app_module, "ALLOWED_IPS", ["127.0.0.1/32"]):
            self.assertTrue(app_module.is_ip_allowed("127.0.0.1"))


if __name__ == '__main__':
    unittest.main()
