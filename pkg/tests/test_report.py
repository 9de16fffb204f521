import json

from ppchars.report import Report


def make(rows):
    return Report(command="x", parameters={"a": 1}, rows=rows)


def test_status_rules():
    assert make([]).status == "pass"
    assert make([{"ok": True}, {"value": 3}]).status == "pass"
    assert make([{"ok": True}, {"ok": False}]).status == "fail"
    assert make([{"ok": True}, {"skipped": True}]).status == "partial"
    # a failing row wins over skipped rows
    assert make([{"skipped": True}, {"ok": False}]).status == "fail"


def test_failures_listing():
    report = make([{"ok": True, "id": 1}, {"ok": False, "id": 2}])
    assert [r["id"] for r in report.failures] == [2]


def test_json_round_trip():
    report = make([{"ok": True, "nested": {"k": [1, 2]}}])
    decoded = json.loads(report.to_json())
    assert decoded == json.loads(json.dumps(report.to_dict(), default=str))
    assert decoded["schema"] == 1
    assert decoded["status"] == "pass"
    assert decoded["rows"][0]["nested"] == {"k": [1, 2]}


def test_csv_header_union_and_nesting():
    report = make([{"a": 1, "b": [1, 2]}, {"a": 2, "c": "x"}])
    lines = report.to_csv().splitlines()
    assert lines[0] == "a,b,c"
    assert lines[1] == '1,"[1, 2]",'
    assert lines[2] == "2,,x"
