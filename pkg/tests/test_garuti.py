import pytest

from wittstack.errors import DomainError
from wittstack.garuti import TowerDivisor, boundary, boundary_closed_form, pull_psi, pull_r


def test_boundary_text():
    assert str(boundary(2, 2)) == "Σ_2 + 2·Σ_1"
    assert str(boundary(3, 2)) == "Σ_3 + 2·Σ_2 + 4·Σ_1"
    assert str(boundary(4, 3)) == "Σ_4 + 3·Σ_3 + 9·Σ_2 + 27·Σ_1"


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", range(1, 7))
def test_identities(p, n):
    b = boundary(n, p)
    assert b == boundary_closed_form(n, p)
    assert pull_psi(b, p) == p * b


def test_pullback_levels():
    s = TowerDivisor.sigma(1, 1)
    assert pull_r(s).level == 2
    with pytest.raises(DomainError):
        s + TowerDivisor.sigma(2, 2)
    with pytest.raises(DomainError):
        TowerDivisor(2, {3: 1})
    with pytest.raises(DomainError):
        boundary(0, 2)


def test_json():
    assert boundary(2, 3).to_json() == {"level": 2, "coeffs": {"1": 3, "2": 1}}
