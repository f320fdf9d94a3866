"""Smoke test for the belyi_py extension.

Build and run from the repository root:

    cargo build -p belyi-py --release --features extension-module
    cp target/release/libbelyi_py.so python/belyi_py.so
    python3 python/smoke_test.py
"""

import json
import math
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import belyi_py  # noqa: E402


def main():
    assert belyi_py.rh_genus("7/7/7") == 3
    assert belyi_py.rh_genus("2/2/2") is None
    assert belyi_py.types_with_genus(7, 3) == ["7: [7][7][7]"]

    classes = belyi_py.census("7/7/7", workers=1)
    noncyclic = [c for c in classes if c["tag"] != "cyclic"]
    assert len(classes) == 30 and len(noncyclic) == 25
    assert sorted(c["order"] for c in noncyclic).count(168) == 2
    assert all(c["automorphisms"] == 1 for c in noncyclic)

    assert belyi_py.khadjavi(1, 1) == 512
    assert belyi_py.khadjavi(2, 1) == 8**144
    assert abs(belyi_py.khadjavi_log10_approx(2, 1) - 144 * math.log10(8)) < 1e-9

    assert belyi_py.verify_fermat4() == 8

    _, core, full = belyi_py.general_system("fermat4", 7, "7/7/7")
    assert core == (33, 41) and full == (34, 42)
    text, _, _ = belyi_py.general_system("p1", 2, "2/1,1/2")
    assert belyi_py.solve(text) == "nonempty"
    assert belyi_py.solve(text, max_steps=2) == "unknown"
    assert belyi_py.solve("var x\npoly: +1*x\npoly: +1*x -1\n") == "empty"

    code, out, _ = belyi_py.run(["--json", "genus", "--lambda", "7/7/7"])
    assert code == 0
    assert json.loads(out)["results"][0]["value"] == 3
    code, _, err = belyi_py.run(["genus", "--lambda", "7/7"])
    assert code == 2 and err

    try:
        belyi_py.rh_genus("nonsense")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("python smoke test ok")


if __name__ == "__main__":
    main()
