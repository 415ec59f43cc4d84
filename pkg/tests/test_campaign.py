from leonardz.campaign import render_report, run_campaign
from leonardz.parray import LeonardType


def test_small_campaign_passes():
    report = run_campaign(types=[LeonardType.KRAWTCHOUK, LeonardType.DUAL_HAHN],
                          d_min=3, d_max=4, trials=3, seed=11)
    assert report.ok
    assert report.failure_count == 0
    assert report.skip_count == 0
    assert report.pass_count == sum(c.trials for c in report.cells)


def test_orphan_cells_limited_to_d3():
    report = run_campaign(types=[LeonardType.ORPHAN], d_min=3, d_max=6,
                          trials=2, seed=5)
    assert report.ok
    assert {c.d for c in report.cells} == {3}
    assert {c.field_label for c in report.cells} == {"GF(2^2)", "GF(2^3)"}


def test_render_is_deterministic():
    kwargs = dict(types=[LeonardType.KRAWTCHOUK], d_min=3, d_max=3,
                  trials=4, seed=21)
    text1 = render_report(run_campaign(**kwargs))
    text2 = render_report(run_campaign(**kwargs))
    assert text1 == text2
    assert "result: PASS" in text1


def test_render_seed_changes_content():
    kwargs = dict(types=[LeonardType.Q_RACAH], d_min=3, d_max=3, trials=2)
    t1 = render_report(run_campaign(seed=1, **kwargs))
    t2 = render_report(run_campaign(seed=2, **kwargs))
    assert t1 != t2


def test_conditioned_cells_present():
    report = run_campaign(types=[LeonardType.Q_RACAH], d_min=3, d_max=3,
                          trials=1, seed=3)
    modes = {c.mode for c in report.cells}
    assert modes == {"generic", "z:s_star=r1^2", "z:s_star=r2^2", "dim2",
                     "self-dual", "self-dual-spin"}
