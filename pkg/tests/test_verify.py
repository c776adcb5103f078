"""The self-verification suite on small q."""
import pytest

from sl2q.verify import VerificationReport, verify_all

CHECK_NAMES = [
    "group_order", "class_partition", "unique_involution",
    "square_inverse_maps", "orthogonality", "degree_sum", "fs_indicators",
    "conjugation_trace", "real_table_rows", "fixed_dims",
    "order_2q_subgroups",
]


@pytest.mark.parametrize("q", [3, 5])
def test_everything_passes(q):
    report = verify_all(q)
    assert report.q == q
    assert report.overall
    assert [c.name for c in report.checks] == CHECK_NAMES
    for c in report.checks:
        assert c.passed, f"{c.name}: {c.details}"


def test_report_json_schema_and_round_trip():
    report = verify_all(3)
    obj = report.to_json()
    assert set(obj) == {"q", "checks", "overall"}
    assert obj["q"] == 3 and obj["overall"] is True
    for entry in obj["checks"]:
        assert set(entry) == {"name", "pass", "details"}
        assert isinstance(entry["details"], str)
    clone = VerificationReport.from_json(obj)
    assert clone.to_json() == obj


def test_report_text_rendering():
    text = verify_all(3).to_text()
    assert text.splitlines()[0] == "verification of SL2(3)"
    assert text.count("[PASS]") == len(CHECK_NAMES)
    assert "[FAIL]" not in text


def test_enumeration_bound_is_enforced():
    with pytest.raises(ValueError):
        verify_all(97)
    with pytest.raises(ValueError):
        verify_all(7, max_enum=5)


def test_rejects_non_prime():
    with pytest.raises(ValueError):
        verify_all(9)
