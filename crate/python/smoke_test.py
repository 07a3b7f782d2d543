#!/usr/bin/env python3
"""Smoke test for the pyshades extension module.

Build the module first:

    cargo build -p shades-py --release

then run this script from anywhere inside the repository:

    python3 python/smoke_test.py
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path


def locate_library() -> Path:
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "release" / "libpyshades.so",
        root / "target" / "debug" / "libpyshades.so",
        root / "target" / "release" / "libpyshades.dylib",
        root / "target" / "debug" / "libpyshades.dylib",
    ]
    for c in candidates:
        if c.exists():
            return c
    sys.exit("libpyshades not found; run `cargo build -p shades-py --release` first")


def import_pyshades():
    lib = locate_library()
    tmp = Path(tempfile.mkdtemp(prefix="pyshades-"))
    shutil.copy(lib, tmp / "pyshades.so")
    sys.path.insert(0, str(tmp))
    import pyshades

    return pyshades


def main() -> None:
    ps = import_pyshades()

    # Exact counting.
    assert ps.binomial(4, 2) == 6
    assert ps.binomial(52, 5) == 2598960
    assert ps.binomial(200, 100) == math.comb(200, 100)
    assert ps.frankl_card(6, 3, 2, 1) == 4
    assert ps.frankl_card_center(2, 1, 0) == 1
    assert ps.g_card(4, 2, 1, 0, 1) == 5

    # Families and shades.
    assert ps.enumerate_k_subsets(3, 2) == [[1, 2], [1, 3], [2, 3]]
    assert ps.shade([1], 3) == [[1, 2], [1, 3]]
    assert ps.m_shade([1, 2], 4, 2) == [[1, 2]]
    assert ps.frankl_family(4, 2, 1, 0) == [[1, 2], [1, 3], [1, 4]]
    assert ps.shade_family([[1], [2]], 3) == [[1, 2], [1, 3], [2, 3]]
    assert ps.is_homogeneous([1, 2], [1, 2], 4)
    assert not ps.is_homogeneous([1, 3], [1, 2], 4)
    assert ps.covered_colourings_count([[1, 2]], 4, 2) == 2

    # Predicates.
    assert ps.is_t_intersecting(ps.frankl_family(6, 3, 2, 1), 6, 3, 2)
    assert not ps.is_t_intersecting([[1, 2], [3, 4]], 4, 2, 1)
    assert ps.is_cross_t_intersecting([[1, 2]], [[1, 3]], 4, 2, 2, 1)

    # Searches with witnesses.
    r = ps.max_t_intersecting(4, 2, 2)
    assert r.value == 1 and r.status == "OPTIMAL"
    assert ps.ak_value(6, 3, 2) == ps.max_t_intersecting(6, 3, 2).value
    r = ps.max_cross_product(4, 2, 2, 1)
    assert r.value == 9 and r.witness_b is not None
    r = ps.max_m_shade(6, 3, 2, 1)
    assert r.value == 10 == ps.conjecture_j1_value(6, 3, 2, 1)
    r = ps.sperner_max_shade(4)
    assert r.value == 7 and r.value <= 0.724 * 2**4

    # The known gap between brute force and the cross conjecture value.
    assert ps.max_cross_product(5, 2, 3, 1).value == 25
    assert ps.conjecture_j4_value(5, 2, 3, 1) == 24

    # Asymptotics.
    assert ps.std_normal_cdf(0.0) == 0.5
    assert abs(ps.std_normal_cdf(1.0) - 0.8413447460685429) < 1e-12
    assert abs(ps.log_binomial(4, 2) - math.log(6)) < 1e-12
    assert ps.f_shade_ratio(50, 1, 0) == 0.5
    assert abs(ps.f_shade_ratio(5000, 2, 0) - 0.25) < 1e-3
    assert abs(ps.dml_partial_sum(10000, 1.0, 1.0) - 0.6827) < 0.01
    assert abs(ps.lemma3_ratio(10**6, 10**3, 1.0, 1.0) - 0.68269) < 0.02

    rows = ps.probe_conjecture_j2(0.5, 0.75, [1000, 10000])
    assert len(rows) == 2 and rows[0][4] > rows[1][4]

    # Verification reports.
    reports = ps.verify_claim("ak-eq63", n_max=5)
    assert reports and all(r.verdict == "CONFIRMED" for r in reports)
    reports = ps.verify_claim("conj-j4", n_max=5)
    refuted = [r for r in reports if r.verdict == "REFUTED"]
    assert [r.params for r in refuted] == [[5, 2, 3, 1]]
    assert refuted[0].witness is not None

    print("pyshades smoke test: OK")


if __name__ == "__main__":
    main()
