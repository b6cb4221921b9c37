"""Smoke test for the demice_py extension.

Build first:
    cargo build -p demice-py --release
    cp target/release/libdemice_py.so python/demice_py.so
then run `python3 python/smoke_test.py` from the repository root.
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import demice_py as dm  # noqa: E402


def main():
    s1s2 = dm.Permutation.parse("s1*s2", 3)
    assert s1s2.one_line == [2, 3, 1], s1s2.one_line
    assert s1s2.length() == 2
    assert (s1s2 * s1s2.inverse()).length() == 0

    z = dm.colored_partition_function([2, 1, 0], s1s2)
    assert str(z) == "z1^3*z2^2*z3 + z1^2*z2^3*z3", str(z)
    assert z == dm.demazure([2, 1, 0], s1s2, atom=True) * dm.LaurentPolynomial.parse("z1^2*z2", 3)

    schur = dm.schur([2, 1, 0])
    assert sum(c for _, c in schur.terms()) == 8

    assert dm.ybe_check(colored=True) == (True, 4096)
    assert dm.ybe_check(colored=False) == (True, 64)

    t = dm.Tableau(4, [[1, 1, 2, 4, 4], [2, 3, 4], [3]])
    assert t.gtp() == [[5, 3, 1, 0], [3, 2, 1], [3, 1], [2]]
    assert dm.algorithm1(t) == dm.Permutation.from_word(4, [2, 1])
    assert dm.algorithm2(t) == dm.Permutation.from_word(4, [2, 3])
    assert dm.right_key(t).rows == [[1, 2, 2, 4, 4], [2, 4, 4], [4]]
    assert dm.omega(t) == dm.algorithm2(t)
    assert t.lusztig().lusztig() == t

    assert dm.string_f(dm.Tableau(3, [[1, 2], [2]]), [1, 2, 1]) == [0, 2, 1]
    assert dm.omega_dagger(3, [0, 0, 0]) == dm.Permutation.longest(3)
    assert len(dm.enumerate_tableaux([2, 1, 0], 3)) == 8

    report = json.loads(dm.run_suite("keys"))
    assert report["passed"], report

    try:
        dm.Permutation([1, 1, 2])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid permutation accepted")

    print("smoke test ok")


if __name__ == "__main__":
    main()
