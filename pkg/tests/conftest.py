import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from spgen import _kernels_py

try:
    from spgen import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python"),
            pytest.param(_kernels_c, id="cython",
                         marks=pytest.mark.skipif(_kernels_c is None,
                                                  reason="extension not built"))]

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def random_fraction(rng: random.Random, bound: int = 5, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


# -- acceptance reporting -------------------------------------------------
_ACCEPTANCE: dict = {}


def record_acceptance(criterion: int, title: str, passed: bool, detail: str = "") -> None:
    entry = _ACCEPTANCE.setdefault(criterion, {"title": title, "passed": True, "details": []})
    entry["passed"] = entry["passed"] and passed
    if detail:
        entry["details"].append(detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        e = _ACCEPTANCE[key]
        status = "PASS" if e["passed"] else "FAIL"
        detail = "; ".join(e["details"])
        terminalreporter.write_line(f"[{status}] criterion {key}: {e['title']} -- {detail}")
