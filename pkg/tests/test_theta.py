import warnings

import pytest

from circlab import (
    InputError,
    ThetaTransform,
    adjacency,
    classify_theta,
    theta_exact_image,
    theta_fast,
    theta_vertex,
    type2_group_check,
    type2_set,
    vertex_permutation,
    vnm_set,
)
from circlab.classification import (
    IDENTICAL,
    NON_CIRCULANT_IMAGE,
    TYPE1,
    TYPE2,
)


# ------------------------------------------------------ vertex formula


def test_theta_vertex_values():
    assert theta_vertex(ThetaTransform(27, 3, 1), 4) == 7
    assert theta_vertex(ThetaTransform(16, 2, 2), 5) == 9
    assert theta_vertex(ThetaTransform(16, 2, 2), 4) == 4  # residue 0 is fixed
    with pytest.raises(InputError):
        theta_vertex(ThetaTransform(16, 2, 2), 16)


def test_theta_transform_validation():
    ThetaTransform(16, 2, 2)
    with pytest.raises(InputError):
        ThetaTransform(16, 3, 1)  # m must divide n
    with pytest.raises(InputError):
        ThetaTransform(16, 1, 1)  # m >= 2
    with pytest.raises(InputError):
        ThetaTransform(16, 2, 8)  # t <= n/m - 1
    with pytest.raises(InputError):
        ThetaTransform(16, 2, -1)


def test_vertex_permutation_is_bijection():
    for n, m, t in ((16, 2, 1), (16, 2, 2), (27, 3, 1), (54, 3, 2)):
        perm = vertex_permutation(ThetaTransform(n, m, t))
        assert sorted(perm) == list(range(n))


# -------------------------------------------------------- exact images


def test_exact_image_circulant(g):
    img = theta_exact_image(g(16, 2, 3, 5), ThetaTransform(16, 2, 2))
    assert img.is_circulant
    assert img.circulant_jumps.values == (1, 2, 7)


def test_exact_image_non_circulant(g):
    img = theta_exact_image(g(16, 2, 3, 5), ThetaTransform(16, 2, 1))
    assert not img.is_circulant
    assert img.circulant_jumps is None


def test_exact_image_edge_count_preserved(g):
    base = g(16, 1, 2, 4, 7)
    for t in range(8):
        img = theta_exact_image(base, ThetaTransform(16, 2, t))
        assert img.labeled.edge_count == adjacency(base).edge_count


# ---------------------------------------------------------- fast test


def test_fast_multiset_and_symmetry(g):
    res = theta_fast(g(16, 2, 3, 5).jumps, ThetaTransform(16, 2, 1))
    assert res.multiset == (2, 5, 7, 13, 14, 15)
    assert not res.symmetric
    assert res.reduced is None

    res = theta_fast(g(16, 2, 3, 5).jumps, ThetaTransform(16, 2, 2))
    assert res.symmetric
    assert res.reduced.values == (1, 2, 7)


def test_fast_agrees_with_exact_everywhere(g):
    # for m = 2 the shortcut is exact: symmetric iff the true image is
    # circulant, and the reduced sets match
    for n in range(4, 33, 2):
        for jumps in _all_jumpsets(n, max_size=3):
            base = g(n, *jumps)
            for t in range(n // 2):
                tr = ThetaTransform(n, 2, t)
                fast = theta_fast(base.jumps, tr)
                exact = theta_exact_image(base, tr)
                assert fast.symmetric == exact.is_circulant
                if fast.symmetric:
                    assert fast.reduced == exact.circulant_jumps


def _all_jumpsets(n, max_size):
    from itertools import combinations

    pool = range(1, n // 2 + 1)
    for size in range(1, max_size + 1):
        yield from combinations(pool, size)


# ------------------------------------------------------ classification


def test_classify_identity(g):
    c = classify_theta(g(16, 2, 3, 5), ThetaTransform(16, 2, 0))
    assert c.tag == IDENTICAL


def test_classify_type2(g):
    c = classify_theta(g(16, 2, 3, 5), ThetaTransform(16, 2, 2))
    assert c.tag == TYPE2
    assert (c.m, c.t) == (2, 2)


def test_classify_type1(g):
    c = classify_theta(g(16, 1, 3, 7), ThetaTransform(16, 2, 4))
    assert c.tag == TYPE1
    assert c.x == 7


def test_classify_non_circulant(g):
    c = classify_theta(g(16, 2, 3, 5), ThetaTransform(16, 2, 1))
    assert c.tag == NON_CIRCULANT_IMAGE


def test_precondition_warnings(g):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        vnm_set(g(15, 1, 2), 3)
    messages = [str(w.message) for w in caught]
    assert any("divides" in m for m in messages)
    assert any("fewer than 3" in m for m in messages)


def test_no_warning_when_preconditions_hold(g):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        type2_set(g(27, 1, 3, 8, 10), 3)
    assert caught == []


# ------------------------------------------------------------ families


def test_vnm_set_c27(g):
    images = vnm_set(g(27, 1, 3, 8, 10), 3)
    assert len(images) == 9  # one exact image per t in 0 .. n/m - 1
    assert all(img.is_circulant for img in images)
    literals = [str(img.circulant_jumps) for img in images[:3]]
    assert literals == ["C27(1,3,8,10)", "C27(3,4,5,13)", "C27(2,3,7,11)"]
    # the orbit repeats with period 3
    assert images[3].circulant_jumps == images[0].circulant_jumps


def test_type2_set_c27(g):
    result = type2_set(g(27, 1, 3, 8, 10), 3)
    assert [str(m) for m in result.members] == [
        "C27(1,3,8,10)",
        "C27(3,4,5,13)",
        "C27(2,3,7,11)",
    ]
    assert result.t1 == 1
    assert result.period == 3


def test_type2_set_c54(g):
    result = type2_set(g(54, 3, 5, 13, 23), 3)
    literals = [str(m) for m in result.members]
    assert literals == [
        "C54(3,5,13,23)",
        "C54(1,3,17,19)",
        "C54(3,7,11,25)",
    ]
    assert result.t1 == 2
    assert result.period == 6


def test_type2_set_c81(g):
    result = type2_set(g(81, 3, 8, 19, 35), 3)
    literals = [str(m) for m in result.members]
    assert literals == [
        "C81(3,8,19,35)",
        "C81(1,3,26,28)",
        "C81(3,10,17,37)",
    ]
    assert result.t1 == 3
    assert result.period == 9


def test_type2_group_check(g):
    result = type2_set(g(27, 1, 3, 8, 10), 3)
    report = type2_group_check(result)
    assert report.is_group
    assert report.abelian_ok
    assert report.cyclic
    assert report.order == 3


def test_type2_to_json(g):
    payload = type2_set(g(16, 2, 3, 5), 2).to_json()
    assert payload["base"] == {"n": 16, "jumps": [2, 3, 5]}
    assert payload["m"] == 2
    assert payload["t1"] == 2
    assert {"n": 16, "jumps": [1, 2, 7]} in payload["members"]


def test_circulant_images_isomorphic_under_oracle(g):
    # when a shifted image is circulant in standard position, the
    # backtracking oracle confirms the relabeling independently
    from circlab import CirculantGraph, isomorphic

    cases = [
        (g(16, 2, 3, 5), 2),
        (g(27, 1, 3, 8, 10), 3),
        (g(24, 1, 2, 11), 2),
        (g(32, 1, 3, 8), 2),
    ]
    seen = 0
    for graph, m in cases:
        for t in range(graph.order // m):
            image = theta_exact_image(graph, ThetaTransform(graph.order, m, t))
            if image.circulant_jumps is None:
                continue
            assert isomorphic(graph, CirculantGraph(image.circulant_jumps)) is not None
            seen += 1
    assert seen >= 12
