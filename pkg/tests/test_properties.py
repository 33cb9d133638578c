import pytest
from hypothesis import given, settings, strategies as st

from charp.exactfield import multipoly_gcd
from properties import PRIMES, property_tests
from strategies import nonzero_polys, polys

LAWS = ("field_axioms", "leibniz", "pth_root", "round_trip")
# the 1000-case runs live in the acceptance suite
EXAMPLES = 200


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("law", LAWS)
def test_law(p, law):
    counter = {}
    property_tests(p, examples=EXAMPLES, counter=counter)[law]()
    assert counter[law] >= EXAMPLES


@pytest.mark.parametrize("p", PRIMES)
def test_gcd_laws(p):
    @settings(max_examples=300, deadline=None, derandomize=True, database=None)
    @given(polys(p, maxdeg=2, maxterms=3), nonzero_polys(p, maxdeg=2, maxterms=3),
           nonzero_polys(p, maxdeg=2, maxterms=3))
    def law(a, b, c):
        g = multipoly_gcd(a * c, b * c)
        assert c.monic().divides(g) or c.is_constant()
        assert g.divides(a * c) and g.divides(b * c)
        assert multipoly_gcd(a * c, b * c) == multipoly_gcd(b * c, a * c)

    law()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_division_inverts_multiplication(p, data):
    from strategies import elements, nonzero_elements
    a = data.draw(elements(p))
    b = data.draw(nonzero_elements(p))
    assert (a * b) / b == a
    assert (a / b) * b == a
