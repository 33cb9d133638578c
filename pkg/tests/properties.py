"""Algebraic laws checked by hypothesis; shared by the unit and acceptance suites."""

from hypothesis import HealthCheck, given, settings, strategies as st

from charp.exprparse import Context, parse_expr, print_canonical
from strategies import elements, field_for, nonzero_elements

PRIMES = (2, 3, 5)
EXAMPLES = 1000


def law_field_axioms(a, b, c):
    zero, one = a.field.zero(), a.field.one()
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a and a * one == a
    assert (a - a).is_zero()
    if not a.is_zero():
        assert a * a.inverse() == one


def law_leibniz(a, b):
    for v in a.field.generators:
        assert (a * b).derivative(v) == a * b.derivative(v) + b * a.derivative(v)


def law_pth_root(a):
    p = a.field.p
    assert (a**p).is_pth_power()
    assert (a**p).pth_root() == a
    # every derivative of a p-th power vanishes
    assert all((a**p).derivative(v).is_zero() for v in a.field.generators)


def law_round_trip(a, ctx):
    text = print_canonical(a)
    assert parse_expr(text, ctx) == a
    assert print_canonical(parse_expr(text, ctx)) == text


def property_tests(p, examples=EXAMPLES, counter=None):
    """Hypothesis-wrapped laws for one prime; ``counter`` collects run counts per law."""
    cfg = settings(max_examples=examples, deadline=None, derandomize=True, database=None,
                   suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
    ctx = Context.of(f"field GF({p})(t1, t2)")
    assert ctx.field is field_for(p)

    def tick(name):
        if counter is not None:
            counter[name] = counter.get(name, 0) + 1

    @cfg
    @given(elements(p), elements(p), elements(p))
    def field_axioms(a, b, c):
        tick("field_axioms")
        law_field_axioms(a, b, c)

    @cfg
    @given(elements(p), elements(p))
    def leibniz(a, b):
        tick("leibniz")
        law_leibniz(a, b)

    @cfg
    @given(elements(p))
    def pth_root(a):
        tick("pth_root")
        law_pth_root(a)

    @cfg
    @given(st.one_of(elements(p), nonzero_elements(p, maxdeg=3, maxterms=4)))
    def round_trip(a):
        tick("round_trip")
        law_round_trip(a, ctx)

    return {"field_axioms": field_axioms, "leibniz": leibniz, "pth_root": pth_root,
            "round_trip": round_trip}
