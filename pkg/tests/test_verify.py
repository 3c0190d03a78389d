"""The suites must notice planted bugs, not just pass."""

import jacobson.verify as verify
from jacobson import division, ymodule


def test_reports_are_seeded():
    a = verify.check_rw(seed=3)
    b = verify.check_rw(seed=3)
    assert a.cases == b.cases and a.ok and b.ok


def test_division_check_catches_wrong_remainder(monkeypatch):
    real = division.divide

    def off_by_one(beta, f):
        q, r = real(beta, f)
        return division.DivisionResult(q, r + 1)

    monkeypatch.setattr(verify, "divide", off_by_one)
    rep = verify.check_division(seed=0, size=5)
    assert not rep.ok and rep.failures


def test_baer_y_check_catches_wrong_solution(monkeypatch):
    def sloppy(p, y):
        return ymodule.YElement(y.w_coeff, y.series)  # ignores p

    monkeypatch.setattr(verify, "solve_pc_in_Y", sloppy)
    rep = verify.check_baer_y(seed=0, size=10)
    assert not rep.ok


def test_exceptions_become_failures(monkeypatch):
    def boom(*a, **k):
        raise RuntimeError("planted")

    monkeypatch.setattr(verify, "extend_hom_to_Uf", boom)
    rep = verify.check_baer_uf(seed=0, size=3)
    assert rep.failures and rep.failures[0]["check"] == "exception"


def test_unknown_suite():
    import pytest
    with pytest.raises(KeyError):
        verify.run_suite("nope")
