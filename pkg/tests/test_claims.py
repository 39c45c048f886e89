"""Claim verdict report: completeness, expected verdicts, reproducibility."""

import json

import pytest

from udplane.claims import (
    CLAIM_IDS,
    OUT_OF_SCOPE,
    claims_report,
    evaluate_all,
    evaluate_claim,
)

EXPECTED_VERDICTS = {
    "C1": "VERIFIED",
    "C2": "VERIFIED_SAMPLED",
    "C3": "REFUTED",
    "C4": "UNDECIDED_AT_DESK_SCALE",
    "C5": "VERIFIED",
    "C6": "UNDECIDED_AT_DESK_SCALE",
}


def test_report_completeness_and_verdicts():
    verdicts = evaluate_all(seed=0)
    ids = [v.id for v in verdicts]
    assert ids == list(CLAIM_IDS)
    for v in verdicts:
        assert v.verdict == EXPECTED_VERDICTS[v.id]
        assert v.statement and v.method
        assert set(v.evidence) == {"kind", "ref", "numbers"}


def test_c6_carries_proof_status():
    c6 = evaluate_claim("C6")
    assert c6.verdict == "UNDECIDED_AT_DESK_SCALE"
    assert c6.proof_status == "REFUTED-AS-ARGUED"


def test_c3_counterexample_numbers():
    c3 = evaluate_claim("C3")
    numbers = c3.evidence["numbers"]
    assert c3.evidence["ref"] == "c3_mink2"
    assert numbers["n"] == 12
    assert numbers["min_degree"] == 4


def test_c5_degree_annotation():
    c5 = evaluate_claim("C5")
    assert c5.evidence["numbers"]["patch_max_degree"] == 6
    assert c5.note is not None


def test_single_claim_matches_full_run():
    full = {v.id: v for v in evaluate_all(seed=0)}
    for cid in ("C1", "C3", "C4", "C5", "C6"):
        assert evaluate_claim(cid, seed=0) == full[cid]


def test_unknown_claim_id():
    with pytest.raises(KeyError):
        evaluate_claim("C9")


def test_report_schema_and_reproducibility():
    a = claims_report(seed=7)
    b = claims_report(seed=7)
    assert json.dumps(a) == json.dumps(b)
    assert set(a) == {"claims", "out_of_scope", "generated_by", "seed_set"}
    assert a["seed_set"] == [7]
    assert a["generated_by"].startswith("udplane ")
    assert [c["id"] for c in a["claims"]] == list(CLAIM_IDS)
    assert [e["id"] for e in a["out_of_scope"]] == [
        entry["id"] for entry in OUT_OF_SCOPE
    ]
    for entry in a["out_of_scope"]:
        assert "verdict" not in entry
        assert entry["reason"]


def test_report_single_id_filter():
    report = claims_report(seed=0, only="C3")
    assert [c["id"] for c in report["claims"]] == ["C3"]


def test_headline_result_is_marked_unreproducible():
    # the equality claim must not be VERIFIED by this workbench, and the
    # report must say the offered argument fails
    c6 = evaluate_claim("C6")
    assert c6.verdict != "VERIFIED"
    assert "refuted" in c6.statement.lower()
