import pytest

import zpoly


def test_cubic_box():
    r = zpoly.minimize({(3, 0): 1, (0, 3): 1}, [(1, 0, 3), (-1, 0, 3), (0, 1, 3), (0, -1, 3)])
    assert r["status"] == "optimal"
    assert r["point"] == [-3, -3]
    assert r["value"] == "-54"


def test_pell_with_oracle():
    f = {(4, 0): 1, (2, 2): -10, (0, 4): 25}
    box = [(-1, 0, -1), (1, 0, 100), (0, -1, -1), (0, 1, 100)]
    r = zpoly.minimize(f, box, mode="homogeneous", oracle=True)
    assert r["value"] == "1"
    assert r["oracle"]["agrees"] is True
    assert zpoly.is_translatable(f)


def test_unbounded_certificate():
    r = zpoly.minimize({(3, 0): -1}, [(-1, 0, 0), (0, -1, 0), (0, 1, 1)])
    assert r["status"] == "unbounded"
    assert r["ray"] == [1, 0]


def test_errors():
    with pytest.raises(zpoly.ZpolyError, match="DegreeTooHigh|NotTranslatable"):
        zpoly.minimize({(4, 0): 1, (0, 1): 1}, [(1, 0, 2), (-1, 0, 2), (0, 1, 2), (0, -1, 2)])


def test_regions_and_oracle():
    d = zpoly.regions({(3, 0): 1, (0, 3): 1}, box_radius=4, mode="homogeneous")
    assert len(d["convex_side"]) >= 3
    recs = zpoly.oracle(7, 3, box_radius=4)
    assert [r["result"] for r in recs] == ["match"] * 3


def test_splitmix_reference():
    assert zpoly.SplitMix64(0).next() == 0xE220A8397B1DCDAF
