import pytest
from hypothesis import given, settings, strategies as st

from kshapes.bijection import varphi_trace
from kshapes.errors import DomainError, PreconditionError
from kshapes.partial import (ORDERS, PartialKShape, _hook, _Rewriter, ceil_half, is_saturated_in, label_of,
                             oplus, saturating_z)
from kshapes.pistols import enumerate_pistols, validate

EMPTY3 = PartialKShape(3)
COL = PartialKShape(3, ((2, 0, 1),))


def steps_of(n):
    """(s, j, z) for every rectangle sum made while running varphi on SP_n."""
    out = []
    for f in enumerate_pistols(n):
        tr = varphi_trace(f)
        for j in range(len(tr.z), 0, -1):
            out.append((tr.shapes[j + 1], j, tr.z[j - 1]))
    return out


STEPS = steps_of(2) + steps_of(3) + steps_of(4) + steps_of(5)
step_strategy = st.sampled_from(STEPS)


def test_labels_and_heights():
    assert [label_of(j) for j in (1, 2, 3, 4)] == [2, 1, 2, 1]
    assert [ceil_half(n) for n in (1, 2, 3, 4)] == [1, 1, 2, 2]


def test_saturation_examples():
    assert all(is_saturated_in(EMPTY3, i) for i in (1, 2))
    assert not is_saturated_in(COL, 1)
    assert is_saturated_in(PartialKShape(3, ((2, 0, 1), (1, 0, 2))), 1)
    with pytest.raises(DomainError):
        is_saturated_in(COL, 3)


def test_oplus_examples():
    rect = oplus(PartialKShape(5), 4, 3)
    assert rect.columns == ((3, 0, 1),) * 3
    assert oplus(COL, 1, 0) is COL
    assert oplus(COL, 1, 1).columns == ((2, 0, 1), (1, 0, 2))
    assert is_saturated_in(oplus(COL, 1, 1), 1)


def test_oplus_preconditions():
    with pytest.raises(PreconditionError):
        oplus(PartialKShape(4, ((1, 0, 2),)), 2, 1)
    with pytest.raises(DomainError):
        oplus(COL, 1, -1)
    with pytest.raises(DomainError):
        oplus(COL, 0, 1)
    with pytest.raises(DomainError):
        oplus(COL, 1, 1, order="sideways")


def test_saturating_z_examples():
    assert saturating_z(COL, 1, 1) == 1
    with pytest.raises(PreconditionError):
        saturating_z(PartialKShape(3, ((2, 0, 1), (1, 0, 2))), 1, 1)


def test_worked_example_step_five():
    tr = varphi_trace(validate((2, 8, 4, 10, 10, 6, 8, 10, 10, 10)), unique=True)
    assert tr.z[4] == 2
    assert tr.z == (3, 2, 1, 3, 2, 0, 0, 1)


def test_json_and_render():
    s = PartialKShape(3, ((2, 0, 1), (1, 0, 2)))
    assert PartialKShape.from_json(s.to_json()) == s
    assert s.to_json()["columns"][1] == {"h": 1, "b": 0, "label": 2}
    assert s.render().splitlines() == ["#", "#o"]


def _no_rule_fires(before, after):
    cols = before.columns
    protected = frozenset(c for c, (_, _, lab) in enumerate(cols) if lab == 1 and _hook(cols, c) == before.k)
    w = _Rewriter(after.k, after.columns, protected)
    return not any(rule(c) for c in range(len(after.columns)) for rule in (w.rule1, w.rule2, w.rule3))


@settings(max_examples=300, deadline=None)
@given(step_strategy)
def test_sum_reaches_a_fixpoint_within_hook_bounds(step):
    s, j, z = step
    t = oplus(s, j, z)
    t.check()
    assert _no_rule_fires(s, t)
    assert len(t) == len(s) + z
    assert sorted(t.heights, reverse=True) == list(t.heights)


@settings(max_examples=300, deadline=None)
@given(step_strategy)
def test_saturation_is_never_lost(step):
    s, j, z = step
    t = oplus(s, j, z)
    # column by column: a saturated column of s is still saturated afterwards
    assert s.saturated_columns() <= t.saturated_columns()
    # index by index, except where the glued label-1 columns are new columns of height i + 1
    for i in range(1, s.k - 1):
        glued_here = z > 0 and label_of(j) == 1 and ceil_half(j + 1) == i + 1
        if is_saturated_in(s, i) and not glued_here:
            assert is_saturated_in(t, i)


@settings(max_examples=300, deadline=None)
@given(step_strategy)
def test_scan_orders_agree(step):
    s, j, z = step
    assert len({oplus(s, j, z, order).columns for order in ORDERS}) == 1
