"""Smoke test for the factorlab Python extension.

Build and install first, e.g. `pip install ./crates/python`, then run
`python python/smoke_test.py`.
"""

import factorlab


def main() -> None:
    g = factorlab.Group([2, 2])
    assert g.davenport() == 3
    assert g.elasticity() == ("3/2", "3/2")
    z3 = factorlab.Group([3])
    assert z3.length_set([[1], [1], [1], [2], [2], [2]]) == [2, 3]
    assert len(z3.atoms()) == 4

    hereditary = factorlab.Shape([1, 1], [[0, 1], [0, 0]])
    assert hereditary.is_standard_form() and hereditary.is_hereditary()
    assert factorlab.Shape.violations([1, 1, 1], [[0, 1, 0], [0, 0, 0], [1, 0, 0]])
    reduced, _record = factorlab.Shape([1, 1], [[0, 0], [0, 0]]).reduce()
    assert reduced.partition == [2]

    alpha, alpha_prime = factorlab.witness_pair(2, 6, 2, 1)
    assert alpha.entries == [[3, 4], [1, 2]]
    assert (alpha * alpha_prime).entries == [[2, 0], [0, 2]]

    shape = factorlab.Shape([1, 1], [[0, 2], [0, 0]])
    four = factorlab.Matrix(2, 6, [[4, 0], [0, 4]])
    lengths, capped = factorlab.length_set(four, shape)
    assert lengths == [2, 4] and not capped

    b = factorlab.Matrix(2, 6, [[2, 0], [0, 1]])
    c = factorlab.Matrix(2, 6, [[2, 0], [4, 1]])
    gamma = factorlab.unit_recovery(b, c, 2)
    assert gamma.is_unit() and gamma * b == c

    assert factorlab.elasticity_upper_bound(2, 1, 2, 3, False) == "20"
    try:
        factorlab.Group([0])
    except ValueError:
        pass
    else:
        raise AssertionError("order 0 accepted")

    print(f"factorlab {factorlab.__version__}: smoke test passed")


if __name__ == "__main__":
    main()
