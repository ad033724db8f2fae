"""Smoke test for the pydialgebra extension module.

Build and install first, e.g.
    cd crates/python && maturin build --release -o dist && pip install dist/*.whl
"""

import json
from fractions import Fraction

import pydialgebra as dg


def main():
    l1 = dg.Algebra.from_class("L1", a=2, b=1)
    assert l1.dim == 2
    assert l1.is_left_symmetric()
    assert l1.check_left_symmetric() == []

    # Der_(1,1,1) of L1(2,1) is spanned by [[1,1],[0,0]]
    basis = l1.derivation_space(1, 1, 1)
    assert basis == [[[Fraction(1), Fraction(1)], [Fraction(0), Fraction(0)]]], basis
    assert l1.is_derivation(1, 1, 1, [[2, 2], [0, 0]])
    assert not l1.is_derivation(1, 1, 1, [[1, 0], [0, 1]])

    # family tags and the δ family
    l6 = dg.Algebra.from_class("L6", a=3)
    assert len(l6.family_space("101")) == 2
    assert len(l6.derivation_space(0, 0, 0)) == 4
    assert dg.canonicalize(0, 2, 6) == ("01d", Fraction(3))
    assert dg.canonicalize(2, 2, 0) == ("110", None)
    assert dg.expected_dimension("L6", "01d") == 2

    # violations come back with 1-based indices
    bad = dg.Algebra.from_json(json.dumps(
        {"dim": 1, "left": [{"i": 1, "j": 1, "k": 1, "c": "1"}], "right": []}))
    axiom, triple, residual = bad.check_left_symmetric()[0]
    assert (axiom, triple, residual) == ("LS1", (1, 1, 1), [Fraction(1)])

    # basis change and morphisms
    p = [[1, 1], [-1, 2]]
    moved = l1.change_basis(p)
    assert moved != l1
    assert dg.is_morphism(moved, l1, p)
    assert dg.Algebra.from_json(moved.to_json()) == moved
    assert moved.product_left([1, 0], [0, 1]) is not None

    # Lie structure of Der
    assert l1.derivation_lie_series() == [1, 0]
    assert l1.is_characteristically_nilpotent()
    assert dg.Algebra.zero(2).derivation_lie_series() == [4, 3, 3]

    # rationals as strings; bad input raises ValueError
    assert len(l1.derivation_space("1/2", "1/2", "1/2")) == 1
    try:
        dg.Algebra.from_class("L1", a=0)
    except ValueError as e:
        assert "a ≠ 0" in str(e)
    else:
        raise AssertionError("a = 0 accepted")

    csv = dg.table(format="csv")
    assert csv.splitlines()[1] == "L1,2,3,,111,,1,1,true"
    assert len(csv.splitlines()) == 49
    print("pydialgebra smoke test: OK")


if __name__ == "__main__":
    main()
