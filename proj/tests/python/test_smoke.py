import betaq


def test_f1_expansion():
    s = betaq.eta_expand("4^6*8^4/2^4 @8", 10)
    assert s.offset == 2
    assert s.coeffs[:5] == ["1", "0", "4", "0", "8"]


def test_h1_is_f1():
    assert betaq.h_k_series(1, 100) == betaq.eta_expand("4^6*8^4/2^4 @8", 100)


def test_identities():
    assert betaq.classical_identity("ramanujan", 200)["holds"]
    r = betaq.verify_theorem2(2, 120)
    assert r["holds"] and not r["difference_zero"]


def test_decompose_cusp_conditions():
    d = betaq.decompose(2, 80)
    assert d["gamma"] == "0"
    assert all(d["conditions"][c] for c in ("c1", "c2", "c3"))


def test_numbers():
    assert betaq.euler_number(6) == "-61"
    assert [betaq.t_count(1, n) for n in range(6)] == ["1", "4", "8", "16", "26", "32"]


def test_cm_and_limits():
    r = betaq.cm_report(1, 1, 128)
    assert float(r["rel_err"]) < 1e-15
    lim = betaq.limit_check(1)
    assert float(lim["rel_deviation"]) < 1e-3
