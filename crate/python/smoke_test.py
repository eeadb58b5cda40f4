#!/usr/bin/env python3
"""Smoke test for the bethe_py extension module.

Builds are produced by cargo (`cargo build -p bethe-py` or `--release`);
this script locates the cdylib, imports it under the proper module name,
and exercises the main operations end to end.
"""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_or_build_extension() -> Path:
    candidates = [
        REPO / "target" / "release" / "libbethe_py.so",
        REPO / "target" / "debug" / "libbethe_py.so",
        REPO / "target" / "release" / "bethe_py.dll",
        REPO / "target" / "debug" / "bethe_py.dll",
        REPO / "target" / "release" / "libbethe_py.dylib",
        REPO / "target" / "debug" / "libbethe_py.dylib",
    ]
    for c in candidates:
        if c.exists():
            return c
    print("extension not found; building with cargo ...")
    subprocess.run(["cargo", "build", "-p", "bethe-py"], cwd=REPO, check=True)
    for c in candidates:
        if c.exists():
            return c
    raise SystemExit("could not locate the built bethe_py extension")


def import_extension():
    lib = locate_or_build_extension()
    staging = Path(tempfile.mkdtemp(prefix="bethe-py-"))
    suffix = ".so" if lib.suffix in (".so", ".dylib") else ".pyd"
    shutil.copy2(lib, staging / f"bethe_py{suffix}")
    sys.path.insert(0, str(staging))
    import bethe_py

    return bethe_py


FAILURES = []


def check(name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"  {name}: {status}" + (f"  ({detail})" if detail else ""))
    if not ok:
        FAILURES.append(name)


def main():
    bp = import_extension()
    print(f"bethe_py {bp.__version__} loaded")

    # root data
    cartan, symmetrizer, order = bp.root_system("B2")
    check("root_system B2", cartan == [[2, -1], [-2, 2]] and symmetrizer == [2, 1] and order == 8)
    check("reflect_shifted sl2", bp.reflect_shifted("A1", 1, ["5/3"]) == ["-11/3"])
    check("wronskian W(x,1) = 1", bp.wronskian(["0/1", "1/1"], ["1/1"]) == ["1/1"])
    check("weight multiplicity", bp.weight_multiplicity([1, 1], 1) == 2)

    # population round trip on A2
    problem = json.dumps(
        {
            "type": "A2",
            "family": "TRIG",
            "Lambda": [["1/1", "1/1"]],
            "z": ["1/1"],
            "weight": ["1/5", "1/7"],
        }
    )
    pop_report = json.loads(bp.populate(problem))
    check(
        "populate A2",
        pop_report["status"] == "pass" and pop_report["payload"]["node_count"] == 6,
    )
    dump = json.dumps(pop_report["payload"])
    verify_report = json.loads(bp.verify(problem, dump))
    check("verify population", verify_report["status"] == "pass")
    kernel_report = json.loads(bp.kernel_check(problem, dump))
    check("kernel check A2", kernel_report["status"] == "pass")

    # numerics on sl2
    sl2 = json.dumps(
        {
            "type": "A1",
            "family": "TRIG",
            "Lambda": [["1/1"], ["1/1"]],
            "z": ["1/1", "2/1"],
            "weight": ["7/5"],
            "l": [1],
        }
    )
    solve_report = json.loads(bp.solve(sl2, attempts=150))
    count_line = next(c for c in solve_report["checks"] if c["name"] == "count_vs_multiplicity")
    check("solve count 2 = 2", solve_report["status"] == "pass", count_line["detail"])
    gaudin_report = json.loads(bp.gaudin_check(sl2, attempts=150))
    check("gaudin eigenvectors", gaudin_report["status"] == "pass")
    dwg_report = json.loads(bp.dwg_check(sl2, 20, conjecture_l=[1], attempts=150))
    check("dynamical Weyl suite", dwg_report["status"] == "pass")

    # folding B2 -> A3
    b2 = json.dumps(
        {
            "type": "B2",
            "family": "TRIG",
            "Lambda": [["1/1", "1/1"]],
            "z": ["1/1"],
            "weight": ["1/5", "1/7"],
        }
    )
    a3 = json.dumps(
        {
            "type": "A3",
            "family": "TRIG",
            "Lambda": [["1/1", "1/1", "1/1"]],
            "z": ["1/1"],
            "weight": ["1/5", "1/7", "1/5"],
        }
    )
    b2_dump = json.dumps(json.loads(bp.populate(b2))["payload"])
    a3_dump = json.dumps(json.loads(bp.populate(a3))["payload"])
    fold_report = json.loads(bp.fold_check(b2_dump, a3_dump))
    check("fold B2 into A3", fold_report["status"] == "pass")

    # error surface
    try:
        bp.verify("{ not json")
        check("malformed JSON raises", False)
    except ValueError:
        check("malformed JSON raises", True)

    if FAILURES:
        print(f"\n{len(FAILURES)} smoke checks failed: {FAILURES}")
        raise SystemExit(1)
    print("\nall smoke checks passed")


if __name__ == "__main__":
    main()
