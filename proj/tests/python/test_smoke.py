import pytest

import proxideal as px


def test_fixture_ideals():
    z4 = px.Instance.fixture("F-Z4p")
    assert px.enumerate_ideals(z4) == [[0], [2], [0, 2], [0, 1, 3], [1, 2, 3], [0, 1, 2, 3]]
    assert z4.zero == 0 and z4.one == 1
    assert z4.units() == [1, 3]


def test_classification():
    z4 = px.Instance.fixture("F-Z4p")
    report = px.classify(z4, [0])
    assert report["prime"]["status"] == "fails"
    assert report["prime"]["points"] == [1, 2]
    assert report["one_absorbing_primary"]["status"] == "holds"
    assert report["radical"] == [0, 2]
    assert px.is_prime(z4, [0, 2])["holds"]


def test_radical_colon_quotient():
    z8 = px.Instance.fixture("F-Z8i")
    assert px.radical(z8, [0]) == [0, 2, 4, 6]
    q = px.quotient(z8, [0, 4])
    two = next(i for i, c in enumerate(q["cosets"]) if 2 in c)
    assert q["zero_divisor"][two] and q["nilpotent"][two]
    z6 = px.Instance.modular(6)
    assert px.colon(z6, [0, 3], 2) == [0, 3]


def test_space():
    sp = px.DescriptiveSpace.modular(4, 2)
    assert sp.upper_approx([0]) == [0, 2]
    assert sp.near([1], [3])
    assert all(sp.check_dp_axioms().values())


def test_flags_and_custom_tables():
    r = px.Instance.fixture("F-R013")
    flags = r.flags()
    assert flags["ring"] and not flags["op_closed"]
    z2 = px.Instance(px.DescriptiveSpace.injective(2), [[0, 1], [1, 0]], [[0, 0], [0, 1]], [0, 1])
    assert z2.flags()["ring"]
    assert px.Instance.parse(z2.serialize("Z2")).fingerprint == z2.fingerprint


def test_errors_carry_kind():
    z6 = px.Instance.fixture("F-Z6i")
    with pytest.raises(px.ProxidealError) as info:
        px.is_prime(z6, [0, 1])
    assert info.value.args[0] == "NotAnIdeal"
    with pytest.raises(px.ProxidealError):
        px.classical_oracle(px.Instance.fixture("F-Z4p"))


def test_suite_is_deterministic():
    a = px.run_suite("modular", 1, 6, 200, 5)
    b = px.run_suite("modular", 1, 6, 200, 5)
    assert a == b
    assert a["instances"] == 200
    assert {t["id"] for t in a["theorems"]} == set(px.theorem_ids())


def test_cli_entry():
    code, out, err = px.run_cli(["--machine", "suite", "--family", "fixtures", "--theorems", "CONV-K"])
    assert code == 0
    assert '"CONV-K"' in out
