"""Smoke test for the fsind_py extension module.

Build and install first, e.g. `pip install crates/py` or
`maturin develop -m crates/py/Cargo.toml`.
"""

import json
import pathlib
import sys

import fsind_py as fs

SCHEMA_DIR = pathlib.Path(__file__).resolve().parent.parent / "schema"


def validate(doc, name):
    try:
        import jsonschema
    except ImportError:
        print(f"jsonschema missing; skipped {name} validation")
        return
    schema = json.loads((SCHEMA_DIR / name).read_text())
    jsonschema.validate(doc, schema)


def main():
    p = fs.Permutation("(1,2,3)(4,5)", 6)
    assert p.order() == 6 and p.sign() == -1
    assert str(p * p.inverse()) == "()"

    s6, a6 = fs.Group("sym:6"), fs.Group("alt:6")
    assert (s6.order(), a6.order()) == (720, 360)
    assert fs.Permutation("(1,2)", 6) not in a6
    assert fs.group_order("tilde-sym:7@8") == 120

    sc = fs.Scanner()
    report = sc.scan(s6, a6, 2)
    assert report.all_in([0, 1]), report.summary
    doc = json.loads(report.to_json())
    validate(doc, "indicator-report.schema.json")
    assert len(report.to_csv().splitlines()) == len(report) + 1

    c12 = fs.Group("cyclic:12")
    g = fs.Permutation("(1,2,7,8)(3,11,9,5)(4,12,10,6)", 12)
    assert sorted(sc.indicators_at(g, c12, 2)) == [-1, 1]
    assert not sc.vanishing_witness(fs.Permutation("(5,6)", 7), fs.Group("sym-embed:5,7"), 7)

    assert sc.census(3, 6) == (34, 20)
    cosets = sc.double_cosets(fs.Group("sym:5"), fs.Group("sym-embed:3,5"))
    assert sum(size for _, size, _ in cosets) == 120

    reports = json.loads(sc.verify("thm-An", n=6))
    validate(reports, "verification-reports.schema.json")
    assert reports[0]["status"] == "pass"
    quick = json.loads(sc.verify_all("quick"))
    validate(quick, "verification-reports.schema.json")

    table = fs.Group("sym:3").character_table()
    assert sorted(row[0] for row in table) == ["1", "1", "2"]

    try:
        fs.Group("sim:6")
    except fs.FsindError as e:
        assert "position 0" in str(e)
    else:
        raise AssertionError("bad spec accepted")
    try:
        fs.Scanner(index_bound=10).census(3, 6)
    except fs.BoundExceededError:
        pass
    else:
        raise AssertionError("bound not enforced")

    print("smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
