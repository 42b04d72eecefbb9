from pathlib import Path

import pytest
import sympy

from levikit.exactmat import Matrix

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.nrows, m.ncols,
                        [sympy.Rational(int(x.numerator), int(x.denominator)) for r in m.rows for x in r])


def sympy_rank_of_rows(rows, n: int) -> int:
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(int(x.numerator), int(x.denominator)) for x in r] for r in rows]).rank()
