"""Smoke tests for the python bindings."""

import math

import pytest

import xcoh


def test_bell_state_measures():
    bell = xcoh.family("mnms", 1.0)
    m = xcoh.measure_all(bell)
    assert abs(m.c_rel - 1.0) < 1e-12
    assert abs(m.c_l1 - 1.0) < 1e-15
    assert abs(m.c_skew - 0.5) < 1e-12
    assert m.c_tr == m.c_l1
    assert m.c_rob == m.c_l1
    assert abs(m.concurrence - 1.0) < 1e-15
    assert m.d2 == 0.0
    assert abs(m.d2max - 1.0) < 1e-14


def test_make_and_validate():
    s = xcoh.make_xstate(0.25, 0.25, 0.25, 0.25, 0j, 0j)
    assert abs(s.r11 - 0.25) < 1e-15
    with pytest.raises(ValueError):
        xcoh.make_xstate(0.5, 0.0, 0.0, 0.5, 0.6 + 0j, 0j)


def test_canonicalize_phase():
    s = xcoh.make_xstate(0.5, 0.0, 0.0, 0.5,
                         0.3 * complex(math.cos(1.0), math.sin(1.0)), 0j)
    c = xcoh.canonicalize(s)
    assert abs(c.r14.real - 0.3) < 1e-14
    assert c.r14.imag == 0.0
    assert abs(xcoh.c_l1(s) - xcoh.c_l1(c)) < 1e-14


def test_sampler_is_deterministic():
    a = xcoh.sample_random(42, 7)
    b = xcoh.sample_random(42, 7)
    assert (a.r11, a.r22, a.r33, a.r44, a.r14, a.r23) == (
        b.r11, b.r22, b.r33, b.r44, b.r14, b.r23)


def test_eigenvalues_and_hidden_coherence():
    werner = xcoh.family("werner", 0.5)
    ev = xcoh.eigenvalues(werner)
    assert ev == pytest.approx([0.625, 0.125, 0.125, 0.125], abs=1e-14)
    assert xcoh.d2_max(xcoh.family("mnms", 0.0)) == 0.5


def test_mnms_ceiling_inversion():
    c = xcoh.c_rel(xcoh.family("mnms", 0.5))
    assert xcoh.mnms_ceiling_l1(c, "c_rel") == pytest.approx(0.5, abs=1e-10)


def test_ensemble_csv_and_verify(tmp_path):
    records = xcoh.run_ensemble(seed=1, n=300)
    assert len(records) == 300

    path = tmp_path / "ensemble.csv"
    xcoh.write_csv(path, records)
    back = xcoh.read_csv(path)
    assert len(back) == 300
    assert back[0].rho11 == records[0].rho11
    assert back[17].measures.c_l1 == records[17].measures.c_l1

    report = xcoh.verify(records)
    by_id = {c.id: c for c in report.claims}
    assert len(by_id) == 11
    for claim_id, claim in by_id.items():
        if claim_id == "V10":
            # the MEMS-below-Werner ordering genuinely fails at small epsilon
            assert not claim.passed
        else:
            assert claim.passed, f"{claim_id}: {claim.title}"


def test_svg_and_cli(tmp_path):
    records = xcoh.run_ensemble(seed=2, n=50)
    out = tmp_path / "fig.svg"
    xcoh.emit_svg_scatter("c_rel", "c_l1", ["mnms", "rho_l"], records, out)
    text = out.read_text()
    assert text.count("<circle ") == 50
    assert text.count("<polyline ") == 2

    csv_path = tmp_path / "cli.csv"
    assert xcoh.cli(["sample", "--n", "10", "--seed", "3",
                     "--out", str(csv_path)]) == 0
    assert len(xcoh.read_csv(csv_path)) == 10
    assert xcoh.cli(["sample", "--badflag"]) == 2
