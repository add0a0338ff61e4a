import pytest

import hansenpoly as hp

P4 = (4, [(0, 1), (1, 2), (2, 3)])


def test_count_faces():
    assert hp.count_faces(*P4) == 259
    assert hp.count_faces(2, [(0, 1)]) == 27
    assert hp.count_faces(0, []) == 3


def test_verify_report():
    r = hp.verify(*P4, f_vector=True)
    assert r["s"] == 259
    assert r["p_g"] == 16
    assert r["pi_a"] == r["pi_b"] == 49
    assert r["classes"] == {
        "primitive": 49,
        "positive": 81,
        "negative": 81,
        "small": 48,
    }
    assert r["f_vector"] == [16, 64, 98, 64, 16, 1]
    assert all(r["identities"].values())
    assert r["graph"]["split"] == {"clique": [1, 2], "stable": [0, 3]}


def test_classify():
    c = hp.classify(*P4)
    assert c["s"] == 259
    assert c["classes"]["small"] == 48


def test_p_g():
    assert hp.p_g(*P4) == 16
    assert hp.p_g(4, [(u, v) for u in range(4) for v in range(u + 1, 4)]) == 0


def test_split_recognition():
    assert hp.is_split(*P4)
    assert hp.split_cert(*P4) == ([1, 2], [0, 3])
    c5 = (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert not hp.is_split(*c5)
    assert hp.split_cert(*c5) is None
    with pytest.raises(ValueError):
        hp.p_g(*c5)


def test_threshold_and_hanner():
    assert hp.threshold_sequence(3, [(0, 1), (1, 2)]) == "IID"
    assert hp.threshold_sequence(*P4) is None
    assert hp.build_threshold("DDDII") == (5, [(0, 1), (0, 2), (1, 2)])
    assert hp.hanner_f_vector("IID") == [10, 28, 30, 12, 1]
    assert hp.f_vector(3, [(0, 1), (1, 2)]) == [10, 28, 30, 12, 1]


def test_seeded_generators():
    n, edges, clique, stable = hp.random_split(3, 3, 0.5, 7)
    assert (n, clique, stable) == (6, [0, 1, 2], [3, 4, 5])
    assert edges == [
        (0, 1), (0, 2), (0, 3), (0, 4), (1, 2),
        (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
    ]
    assert hp.random_threshold_sequence(5, 1) == "DDDII"


def test_budget():
    with pytest.raises(RuntimeError):
        hp.count_faces(*P4, budget=10)


def test_f_vector_polarity():
    # complement of P4 is again P4; its f-vector is self-reverse
    fv = hp.f_vector(*P4)
    assert fv[:-1] == fv[-2::-1]
