import pytest

import pathideal

EXAMPLE9 = "x1 x2\nx2 x3\nx3 x4\nx4 x5\nx5 x6\nx6 x7\nx4 x8\nx8 x9\n"


def test_generators_of_example9():
    assert pathideal.generators(EXAMPLE9, 7) == [["x1", "x2", "x3", "x4", "x5", "x6", "x7"]]


def test_classify_example9():
    doc = pathideal.classify(EXAMPLE9, 7)
    assert doc["verdict"] == "LinearQuotients"
    assert doc["trimmed_vertices"] == ["x%d" % i for i in range(1, 9)]
    assert doc["witness"]["type"] == "quotient_order"


def test_l53_is_not_linear():
    l53 = pathideal.family("Lnk:5,3")
    assert len(pathideal.generators(l53, 4)) == 6
    doc = pathideal.classify(l53, 4)
    assert doc["verdict"] == "NotLinearQuotients"
    assert doc["criterion_clause"] == "induced L_{5,3}"
    assert pathideal.linear_quotients_order(l53, 4) is None
    table, reg = pathideal.betti(l53, 4)
    assert reg == 5
    assert table == {(0, 4): 6, (1, 5): 6, (2, 7): 1}


def test_two_paths_regularity():
    # P_9 contains P_4 + P_4 as v1..v4, v6..v9
    p9 = pathideal.family("path:9")
    assert pathideal.classify(p9, 4)["verdict"] == "NotLinearQuotients"


def test_order_and_trim():
    p7 = pathideal.family("path:7")
    order = pathideal.linear_quotients_order(p7, 4)
    assert len(order["order"]) == 4
    assert order["certificates"][0] == []
    assert pathideal.trim(EXAMPLE9).count("\n") == 7


def test_random_tree_is_seeded():
    assert pathideal.random_tree(9, 5) == pathideal.random_tree(9, 5)


def test_errors_carry_codes():
    with pytest.raises(pathideal.PathIdealError) as info:
        pathideal.classify("a b\nb c\nc a\n", 4)
    assert pathideal.error_code(info.value) in {"CycleDetected", "MalformedLine"}
    with pytest.raises(pathideal.PathIdealError) as info:
        pathideal.classify(EXAMPLE9, 3)
    assert pathideal.error_code(info.value) == "nUnsupported"


def test_run_cli():
    code, out, err = pathideal.run_cli(["classify", "--family", "star:5", "--n", "4"])
    assert code == 0
    assert out.startswith("verdict: ZeroIdeal")
    code, _, err = pathideal.run_cli(["classify", "--family", "Lnk:5,3", "--n", "4"])
    assert code == 1
