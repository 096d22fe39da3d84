"""Chain report mechanics: margins, relations, serialization."""

import pytest

from normlab.chains import ChainReport, chain


def test_two_link_pass_and_margin():
    rep = chain(("lhs", "rhs"), (5.0, 3.0))
    assert rep.ok
    assert rep.margins == (2.0,)
    assert rep.link_pass == (True,)
    assert rep.min_margin == 2.0


def test_descending_chain():
    rep = chain(("a", "b", "c"), (3.0, 2.0, 1.0))
    assert rep.ok
    assert rep.margins == (1.0, 1.0)


def test_failing_link():
    rep = chain(("a", "b"), (1.0, 2.0))
    assert not rep.ok
    assert rep.margins == (-1.0,)
    assert rep.link_pass == (False,)


def test_tolerance_is_relative_to_scale():
    # Slack scales with the magnitudes involved, floored at 1.
    assert chain(("a", "b"), (1e12, 1e12 + 1.0), tol=1e-8).ok
    assert not chain(("a", "b"), (1.0, 1.0 + 1e-4), tol=1e-8).ok
    assert chain(("a", "b"), (0.0, 1e-9), tol=1e-8).ok


def test_eq_relation():
    rep = chain(("a", "b"), (1.0, 1.0 + 1e-12), relations=("eq",))
    assert rep.ok
    rep = chain(("a", "b"), (2.0, 1.0), relations=("eq",))
    assert not rep.ok
    # ge would have passed the same values.
    assert chain(("a", "b"), (2.0, 1.0), relations=("ge",)).ok


def test_mixed_relations():
    rep = chain(("a", "b", "c"), (2.0, 2.0 + 1e-13, 1.0), relations=("eq", "ge"))
    assert rep.ok


def test_validation():
    with pytest.raises(ValueError):
        chain(("only",), (1.0,))
    with pytest.raises(ValueError):
        chain(("a", "b"), (1.0, 2.0, 3.0))
    with pytest.raises(ValueError):
        chain(("a", "b", "c"), (3.0, 2.0, 1.0), relations=("ge",))


def test_as_dict_shape():
    rep = chain(("a", "b"), (2.0, 1.0))
    d = rep.as_dict()
    assert d["labels"] == ["a", "b"]
    assert d["values"] == [2.0, 1.0]
    assert d["margins"] == [1.0]
    assert d["relations"] == ["ge"]
    assert d["link_pass"] == [True]
    assert d["pass"] is True
    assert isinstance(rep, ChainReport)
