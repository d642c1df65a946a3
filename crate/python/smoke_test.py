"""Smoke test for the subseq_census extension module.

Build the extension first:

    cargo build --release -p subseq-census-py

then run `python3 python/smoke_test.py`. The script loads the freshly built
shared library from target/release (or the path in SUBSEQ_CENSUS_LIB) unless
`subseq_census` is already importable, e.g. after `maturin develop`.
"""

import importlib.machinery
import importlib.util
import os
import sys
from fractions import Fraction
from itertools import product
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    try:
        import subseq_census

        return subseq_census
    except ImportError:
        pass
    candidates = [os.environ.get("SUBSEQ_CENSUS_LIB")] + [
        str(ROOT / "target" / profile / name)
        for profile in ("release", "debug")
        for name in ("libsubseq_census_py.so", "libsubseq_census_py.dylib", "subseq_census_py.dll")
    ]
    for path in filter(None, candidates):
        if Path(path).exists():
            loader = importlib.machinery.ExtensionFileLoader("subseq_census", path)
            spec = importlib.util.spec_from_loader("subseq_census", loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            return module
    sys.exit("subseq_census extension not found; run `cargo build --release -p subseq-census-py`")


def brute_force_total(s):
    seen = set()
    for mask in range(1 << len(s)):
        seen.add("".join(c for i, c in enumerate(s) if mask >> i & 1))
    return len(seen)


def main():
    sc = load()

    assert sc.count_total("0101") == 12
    assert sc.count_total_run_recursive("0101") == 12
    assert sc.census("0101") == [1, 2, 4, 4, 1]
    assert sc.count_length("0011", 2) == 3
    assert sc.count_total("abc", alphabet="general") == 8
    assert sc.enumerate_distinct("11") == ["", "1", "11"]
    for bits in product("01", repeat=7):
        s = "".join(bits)
        assert sc.count_total(s) == brute_force_total(s), s

    big = sc.count_total("01" * 200)
    assert isinstance(big, int) and big.bit_length() > 64

    s = sc.BitString("0100")
    assert len(s) == 4 and str(s) == "0100"
    assert s.runs() == ([1, 1, 2], "010")
    assert s.count_total() == sc.count_total("0100")
    assert str(s.slice(1, 3)) == "10"

    assert sc.expected_total(2) == Fraction(7, 2)
    assert sc.expected_total(10) == Fraction(58537, 512)
    assert sc.expected_total_recurrence(50) == sc.expected_total(50)
    assert sc.expected_length(2, 1) == Fraction(3, 2)
    assert sc.expected_length(4, 9) == 0
    assert sc.exhaustive_expected_total(6) == sc.expected_total(6)
    assert sc.exhaustive_expected_length(5, 4) == 3

    rows = sc.triangle(20)
    assert rows[2] == [1, Fraction(3, 2), 1]
    assert all(sum(row) == sc.expected_total(n) for n, row in enumerate(rows))

    assert sc.deficiency_polynomial(2) == [Fraction(1, 4), Fraction(1, 8), Fraction(1, 8)]
    report = sc.binomial_approximation_report(6, 2)
    assert (report.approximation, report.exact, report.error) == (Fraction(15, 4), Fraction(11, 2), Fraction(7, 4))

    est = sc.estimate_expected_total(12, 20000, seed=7)
    assert est.rng_id == sc.RNG_ID
    assert est.within_standard_errors(sc.expected_total(12), 4), est
    again = sc.estimate_expected_total(12, 20000, seed=7)
    assert (est.mean, est.std_error, est.ci95) == (again.mean, again.std_error, again.ci95)
    assert sc.estimate_expected_length(9, 9, 10, seed=1).mean_exact == 1

    for bad in (lambda: sc.count_total("012"), lambda: sc.deficiency_polynomial(65),
                lambda: sc.enumerate_distinct("0" * 25), lambda: sc.estimate_expected_length(3, 4, 10, 1)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print(f"subseq_census {sc.__version__}: smoke test passed")


if __name__ == "__main__":
    main()
