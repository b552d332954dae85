"""Smoke tests for the python bindings; plain asserts, no test framework."""

import qmorph


def test_segment_matches_oracle():
    pixels = [
        [1, 1, 2, 1],
        [1, 7, 1, 1],
        [2, 1, 0, 1],
        [1, 1, 1, 3],
    ]
    for mode in ("bottomhat", "tophat"):
        for threshold in (0, 1, 3):
            got = qmorph.segment(pixels, mode, threshold)
            want = qmorph.oracle_segment(pixels, mode, threshold)
            assert got == want, (mode, threshold, got, want)


def test_dense_backend_agrees():
    pixels = [[0, 3], [2, 1]]
    got = qmorph.segment(pixels, "bottomhat", 1, backend="dense")
    want = qmorph.oracle_segment(pixels, "bottomhat", 1)
    assert got == want


def test_histogram_counts_sum_to_shots():
    pixels = [[0, 3], [2, 1]]
    h = qmorph.histogram(pixels, "tophat", 1, shots=256, seed=3)
    assert sum(h["counts"].values()) == 256
    assert abs(sum(h["exact"].values()) - 1.0) < 1e-12
    assert all(len(label) == 3 for label in h["exact"])  # result bit + Y + X
    again = qmorph.histogram(pixels, "tophat", 1, shots=256, seed=3)
    assert h["counts"] == again["counts"]


def test_morphology_helpers():
    pixels = [[0, 0], [0, 7]]
    dilated = qmorph.dilate(pixels, q=3)
    assert dilated == [[0, 7], [7, 7]]  # cross reaches the axis neighbours only
    eroded = qmorph.erode(pixels, q=3)
    assert eroded == [[0, 0], [0, 0]]
    hat = qmorph.hat(pixels, "bottomhat", q=3)
    assert all(0 <= v <= 7 for row in hat for v in row)


def test_qasm_export():
    text = qmorph.export_qasm([[0, 3], [2, 1]], "bottomhat", 1)
    assert text.startswith("OPENQASM 2.0;")
    assert "measure" in text


def test_cost_report():
    report = qmorph.cost_report(2, 3)
    assert report["copy"] == 3
    assert report["reference"]["comparator"] == 18 * 3 - 13


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"[PASS] {name}")
            except AssertionError as exc:
                failures += 1
                print(f"[FAIL] {name}: {exc}")
    raise SystemExit(failures)
