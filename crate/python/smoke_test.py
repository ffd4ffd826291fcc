"""Smoke test for the `hochschild` extension module.

Builds the extension with cargo if needed, puts it on sys.path and checks
a few known values.
"""

import os
import shutil
import subprocess
import sys
import sysconfig
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

LOOP = "vertices: v\narrows: a: v -> v\nrelations: a a\n"
TWO_CYCLE = "vertices: 1 2\narrows: a: 1 -> 2, b: 2 -> 1\nrelations: a b, b a\n"
A3 = "vertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\nrelations: a b\n"


def build_and_import():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "hochschild-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    target = Path(os.environ.get("CARGO_TARGET_DIR", ROOT / "target")) / "release"
    for name in ("libhochschild.so", "libhochschild.dylib", "hochschild.dll"):
        if (target / name).exists():
            built = target / name
            break
    else:
        sys.exit(f"no built extension in {target}")
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    dest = Path(tempfile.mkdtemp()) / f"hochschild{suffix}"
    shutil.copy(built, dest)
    sys.path.insert(0, str(dest.parent))
    import hochschild

    return hochschild


def main():
    hh = build_and_import()

    loop = hh.parse(LOOP)
    assert loop.dims(8) == [2, 1, 1, 1, 1, 1, 1, 1, 1], loop.dims(8)
    assert loop.with_characteristic(2).dims(8, "formula") == [2] * 9

    cyc = hh.parse(TWO_CYCLE)
    assert cyc.is_gentle
    assert cyc.dims(6) == cyc.dims(6, "formula") == [1] * 7
    w = cyc.witness(4, "cup")
    assert w is not None and w["verified"] and w["omega"] == "(ab, e_1)", w
    b = cyc.witness(4, "bracket")
    assert b["verified"] and b["coefficient"] == "-1", b
    assert cyc.cup_table(2, 2) == [(0, 0, ["1"])]
    assert cyc.bracket_table(3, 5) == [(0, 0, ["-1"])]
    try:
        cyc.with_characteristic(3).witness(4, "bracket")
    except hh.HypothesisViolation:
        pass
    else:
        raise AssertionError("bracket witness in char 3 should be refused")
    assert all(passed for _, passed, _ in cyc.selftest(3))

    a3 = hh.parse(A3, char=3)
    assert a3.dims(5) == [1, 0, 0, 0, 0, 0]
    assert a3.witness(5) is None
    report = a3.formula_report(2)
    assert report["dim"] == 0 and report["degree"] == 2

    assert hh.validate("vertices: 1\narrows: x: 1 -> 1\n")["valid"] is False
    try:
        hh.parse("vertices: 1 2\narrows: a: 1 -> 2\nrelations: a c\n")
    except ValueError as e:
        assert "`c`" in str(e)
    else:
        raise AssertionError("unknown arrow should fail")
    try:
        hh.parse("vertices: 1\narrows: x: 1 -> 1\n")
    except hh.HypothesisViolation:
        pass
    else:
        raise AssertionError("infinite dimensional algebra should be rejected")

    print("smoke test passed:", repr(cyc))


if __name__ == "__main__":
    main()
