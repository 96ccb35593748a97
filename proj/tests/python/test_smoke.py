import pytest

import hallmark


def test_version_and_catalog():
    assert hallmark.__version__
    names = {e["name"] for e in hallmark.catalog()}
    assert {"alt_5", "psl2_31", "semiaffine_2_3", "j1"} <= names
    assert hallmark.group_order("catalog:psl2_31") == 14880


def test_theorem_a_psl2_31():
    r = hallmark.check("A", "catalog:psl2_31", [3, 5])
    assert r["agree"] and r["criterion"]["outcome"] == "holds"
    assert r["summary"]["status"] == "agree"


def test_hall_a5_absent():
    h = hallmark.hall("catalog:alt_5", [2, 5])
    assert h["status"] == "proved-absent"
    assert "witness" not in h


def test_classes_semiaffine():
    t = hallmark.classes("catalog:semiaffine_2_3")
    sizes = {c["size"] for c in t["classes"] if c["element_order"] == 3}
    assert sizes == {28}
    assert sum(c["size"] for c in t["classes"]) == t["order"] == 168


def test_tables_and_blocks():
    assert "a5" in hallmark.shipped_tables()
    b = hallmark.table_blocks("shipped:a5", 5)
    assert sorted(sorted(x["degrees"]) for x in b["blocks"]) == [[1, 3, 3, 4], [5]]
    a = hallmark.table_analyze("shipped:psl2_31", [3, 5])
    assert a["C"]["outcome"] == "holds"


def test_lieorders():
    e = hallmark.lie_class_size("GL", 3, 2, 7)
    assert e["value"] == 24 and e["divisor_holds"]
    d = hallmark.lie_divisibility("GL", 2, 31, 3, 5)
    assert d["torus_chain"] and d["consistent"]
    assert hallmark.lie_grid()["ok"]


def test_errors_map_to_exceptions():
    with pytest.raises(hallmark.CapacityError):
        hallmark.check("A", "catalog:j1", [3, 5])
    with pytest.raises(hallmark.MalformedInput):
        hallmark.check("A", "catalog:no_such_group", [2, 3])
    with pytest.raises(hallmark.PreconditionError):
        hallmark.lie_class_size("GL", 2, 2, 7)
    with pytest.raises(hallmark.HallmarkError):
        hallmark.table_blocks("/nonexistent/table.json", 5)


def test_suite_section():
    r = hallmark.suite(["A"])
    assert r["schema"] == "hallmark-report/1"
    assert r["summary"]["disagree"] == 0
    assert "timings" not in r
