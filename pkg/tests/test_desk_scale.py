import pytest

from bmgamma.kernels import factorial
from bmgamma.triangles import build_triangle, iter_signed
from bmgamma.verify import run_suite


@pytest.mark.slow
def test_full_suite_to_300():
    rep = run_suite(300, strict_gamma=True)
    assert rep.ok, rep.to_text()
    # the mode-location check is advisory in the report; at this range it should still hold
    assert not rep.warnings, rep.to_text()


@pytest.mark.slow
def test_signed_system_positive_to_500():
    for m, (al, be) in enumerate(iter_signed(500)):
        if m:
            assert all(c > 0 for c in al.coeffs + be.coeffs), m


@pytest.mark.slow
def test_first_alpha_column_to_1000():
    tri = build_triangle(1000)
    f = 1
    for m in range(1, 1001):
        f *= 4 * m - 2  # (2m)!/m! = (4m-2) * (2m-2)!/(m-1)!
        assert tri[m].alpha[0] == f == factorial(2 * m) // factorial(m)
