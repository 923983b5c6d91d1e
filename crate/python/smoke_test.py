"""Smoke test for the sgdouble Python extension.

Build and install first:
    cd crates/python && maturin develop --release
or
    maturin build --release -o dist && pip install dist/sgdouble-*.whl
"""

import json

import sgdouble
from sgdouble import DuplicationSpec, NumericalSemigroup, RelativeIdeal


def main() -> None:
    t1 = NumericalSemigroup.from_generators([9, 10, 14, 15])
    assert t1.frobenius == 31
    assert t1.pseudo_frobenius() == [5, 26, 31]
    assert t1.minimal_generators() == [9, 10, 14, 15]
    assert 32 in t1 and 31 not in t1

    s1 = NumericalSemigroup([0, 3], 5)
    assert s1 == NumericalSemigroup.from_generators([3, 5, 7])
    assert s1.classify()["symmetry_class"] == "pseudo-symmetric"
    assert NumericalSemigroup.from_json(s1.to_json()) == s1
    assert json.loads(s1.to_json()) == {"small": [0, 3], "conductor": 5}

    family = sgdouble.enumerate_even_doubles(s1)
    assert [str(c.double) for c in family] == ["{0,3,6,7,9→}", "{0,5,6,7,9→}", "{0,6,7,9→}"]
    assert [(c.symmetry_class, c.type_number) for c in family] == [
        ("pseudo-symmetric", 2),
        ("pseudo-symmetric", 2),
        ("almost-symmetric-proper", 4),
    ]

    e2 = RelativeIdeal(s1, [0], 2)
    spec = DuplicationSpec(e2, 3)
    assert spec.duplicate() == family[0].double
    assert sgdouble.even_double_check(spec)
    m = sgdouble.maximal_ideal(s1)
    assert (m - e2).elements == [3] and (m - e2).conductor == 5

    d = sgdouble.decompose(t1, 5)
    assert d.ideal.elements == [2, 5, 7, 9, 10, 11, 12]
    assert sgdouble.half(t1) == d.base

    try:
        DuplicationSpec(RelativeIdeal(s1, [], 0), 3)
    except sgdouble.SgdoubleError as exc:
        assert "SumNotInS" in str(exc)
    else:
        raise AssertionError("invalid spec accepted")

    odd = sgdouble.enumerate_odd_doubles(s1, 17)
    assert all(c.double.frobenius % 2 == 1 for c in odd)
    print(f"ok: {len(family)} even and {len(odd)} odd doubles of {s1}")


if __name__ == "__main__":
    main()
