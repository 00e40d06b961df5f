import json

import numpy as np
import pytest

from qpb.report import CheckReport, emit_report, make_report, report_as_dict


def test_make_report_pass_rule():
    assert make_report("c", "ref", 1e-9, 1e-8).passed
    assert make_report("c", "ref", 1e-8, 1e-8).passed
    assert not make_report("c", "ref", 1.1e-8, 1e-8).passed


def test_context_is_plain_python():
    report = make_report("c", "ref", 0.0, 1.0, context={
        "arr": np.arange(3.0),
        "np_float": np.float64(2.5),
        "np_int": np.int64(7),
        "np_bool": np.bool_(True),
        "nested": {"c": np.complex128(1 + 2j)},
    })
    ctx = report.context
    assert ctx["arr"] == [0.0, 1.0, 2.0]
    assert type(ctx["np_float"]) is float
    assert type(ctx["np_int"]) is int
    assert type(ctx["np_bool"]) is bool
    # the whole context must survive the strict JSON encoder
    json.dumps(ctx, allow_nan=False)


def test_json_field_order_and_pass_key():
    report = make_report("zeta", "some ref", 0.5, 1.0, context={"k": 1})
    keys = list(report_as_dict(report).keys())
    assert keys == ["check_id", "paper_ref", "residual", "tolerance", "pass", "context"]


def test_emit_json_byte_stable():
    reports = [make_report("b", "r2", 0.2, 0.1), make_report("a", "r1", 0.0, 1.0)]
    one = emit_report(reports, "json")
    two = emit_report(reports, "json")
    assert one == two
    parsed = json.loads(one)
    assert [row["check_id"] for row in parsed] == ["b", "a"]
    assert parsed[0]["pass"] is False
    # ascii-only output regardless of citation glyphs
    emit_report([make_report("c", "§ ½ —", 0.0, 1.0)], "json").encode("ascii")


def test_emit_empty_list():
    assert emit_report([], "json") == "[]"
    assert emit_report([], "table") == "(no checks ran)"


def test_emit_table_contains_verdicts():
    text = emit_report([make_report("ok", "r", 0.0, 1.0),
                        make_report("bad", "r", 2.0, 1.0)], "table")
    lines = text.splitlines()
    assert any("PASS" in line and "ok" in line for line in lines)
    assert any("FAIL" in line and "bad" in line for line in lines)


def test_emit_unknown_format_rejected():
    with pytest.raises(ValueError):
        emit_report([], "yaml")


def test_report_is_frozen():
    report = make_report("c", "ref", 0.0, 1.0)
    with pytest.raises(AttributeError):
        report.passed = False
    assert isinstance(report, CheckReport)
