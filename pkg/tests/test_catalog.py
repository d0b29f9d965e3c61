import dataclasses
import json

import pytest

from liftkit import catalog
from liftkit.errors import CasePredicateViolated, UnknownCase, VerificationFailed
from liftkit.scalars import zeta

z = zeta(12)


def _certify_all(case):
    """Certification checks of ``case`` over every admissible q12."""
    report = catalog.Report(case.id, "lifting")
    if case.braiding.is_numeric():
        instances = [None]
    else:
        instances = catalog.q12_instances(case)
    for v in instances:
        catalog._certify_instance(case, catalog._numeric(case, v), report, "")
    return report


def _with_rest(case, label, old, new):
    gens = []
    for g in case.generators:
        if g.label == label:
            assert old in g.rest
            g = dataclasses.replace(g, rest=g.rest.replace(old, new))
        gens.append(g)
    return dataclasses.replace(case, generators=tuple(gens))


@pytest.mark.parametrize("cid", ["A2-1a", "A2-2a", "B2-2c", "B2-3c", "R8-1a"])
def test_lifting_cases_verify(cid):
    assert catalog.verify_case(cid).passed


def test_a21b_printed_sign_fails():
    case = catalog.lifting_case("A2-1b")
    assert _certify_all(case).passed
    wrong = _with_rest(case, "[x1 x2]^3", catalog.A21B_MU1_TERM, catalog.A21B_MU1_TERM_PRINTED)
    assert not _certify_all(wrong).passed


@pytest.mark.parametrize("cid, name", [("B2-2c", "s12"), ("B2-3c", "s112")])
def test_flipped_counterterm_fails(cid, name):
    case = catalog.lifting_case(cid)
    label = next(g.label for g in case.generators if catalog.counterterm(name) in g.rest)
    wrong = _with_rest(case, label, " - (" + catalog.counterterm(name), " + (" + catalog.counterterm(name))
    assert not _certify_all(wrong).passed


def test_unknown_counterterm_is_reported():
    report = catalog.verify_case("R89-4b")
    assert report.passed
    assert any("UNKNOWN" in w for w in report.warnings)
    assert any(c.status == "unknown" for c in report.checks)


def test_nichols_dimensions():
    for cid, dim in [("A2-1a", 8), ("B2-4", 36), ("R8-2", 144)]:
        report = catalog.verify_case(cid, mode="nichols")
        assert report.passed
        assert str(dim) in report.dimension


def test_admissibility_labels():
    case = catalog.lifting_case("A2-1a")
    adm = catalog.case_admissibility(case.family)
    assert {k for k, a in adm.items() if a.status == "free"} == set(case.params)
    assert all(a.status in ("free", "forced-zero") for a in adm.values())


def test_lifting_ideal_zero_parameters_give_nichols():
    ideal = catalog.lifting_ideal("A2-1a", params={k: 0 for k in catalog.lifting_case("A2-1a").params})
    sys = ideal.system()
    from liftkit.pbw import enumerate_pbw_basis

    assert enumerate_pbw_basis(sys).free_dimension == 8


def test_errors():
    with pytest.raises(UnknownCase):
        catalog.lifting_case("X9")
    with pytest.raises(UnknownCase):
        catalog.verify_case("A2-1a", mode="other")
    pinned = next(c for c in catalog.LIFTING_IDS if catalog.lifting_case(c).predicate[0] == "q12 = 1")
    with pytest.raises(CasePredicateViolated):
        catalog.lifting_case(pinned, q12=z)


def test_failure_raises_with_report(monkeypatch):
    monkeypatch.setattr(catalog, "_zero_limit", lambda case, q: False)
    with pytest.raises(VerificationFailed) as info:
        catalog.verify_case("A2-1a")
    assert info.value.report is not None and not info.value.report.passed


def test_report_json_is_deterministic():
    a = json.dumps(catalog.verify_case("A2-2a").to_dict(), sort_keys=True)
    b = json.dumps(catalog.verify_case("A2-2a").to_dict(), sort_keys=True)
    assert a == b


@pytest.mark.parametrize("kind", ["power", "left-serre-power", "right-serre-power"])
def test_closed_forms(kind):
    derived, printed = catalog.derive_closed_form(kind, 3)
    assert derived == printed
