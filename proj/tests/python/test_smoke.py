import math

import pytest

import subword_sums as ss


def brute_s(w, n):
    x = bin(n)[2:]
    t = [1] + [0] * len(w)
    for ch in x:
        for k in range(len(w), 0, -1):
            if w[k - 1] == ch:
                t[k] += t[k - 1]
    return t[len(w)]


def test_counts():
    assert ss.count_subword("10", 26) == 5
    assert ss.count_factor("10", 26) == 2
    assert ss.count_subword("0" * 31, 2**62) == math.comb(62, 31)
    for n in range(300):
        assert ss.count_subword("011", n) == brute_s("011", n)


def test_orbit_and_matrix():
    assert sorted(e["word"] for e in ss.orbit("011")) == ["001", "011", "101", "111"]
    m = ss.matrices("011", "001")
    assert m["M"] == [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, -1, 1], [1, 0, 0, -1]]
    assert m["c"] == [0, 2, 0, -2]
    assert ss.step("011", 1, "001") == (0, "011")


def test_partial_sums():
    direct = sum((-1) ** brute_s("01", n) for n in range(1001))
    assert ss.S("01", 1000) == direct
    assert ss.partial_sum("0110", 5000) == ss.partial_sum_direct("0110", 5000)


def test_spectra_and_certificates():
    est, tol = ss.spectral_radius("011")
    assert abs(est - math.sqrt(2)) < 1e-4
    assert not ss.detect_modulus_two("011")["present"]
    assert ss.detect_modulus_two("111")["eigenvalue_two"]
    assert ss.det_two_minus_m("111") == 0
    assert ss.find_certificate("011") is not None
    assert ss.find_certificate("111") is None
    assert ss.check_two_runs(1, 1, 1, "1")["w"] == "10"
    assert ss.check_long_prefix(0, 2, "11")["w"] == "00111"
    assert ss.check_one_run(1, 3)["verdict"] == "ProvedNotP"


def test_analyze():
    r = ss.analyze("011")
    assert r["verdict"] == "PROVED_P"
    assert r["det_2I_minus_M"] == "8"
    assert ss.analyze("11111")["verdict"] == "PROVED_NOT_P"


def test_errors():
    with pytest.raises(ValueError):
        ss.count_subword("01x", 3)
    with pytest.raises(ss.DomainError):
        ss.check_long_prefix(1, 2, "110", 0, "001")
