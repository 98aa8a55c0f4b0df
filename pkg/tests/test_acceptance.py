"""The thirteen acceptance criteria, one test each.

Each test prints a single ``PASS``/``FAIL`` line.  Run directly with
``python tests/test_acceptance.py`` for the same lines without pytest.
"""

import sys

import pytest

from bichain.suites import ACCEPTANCE, run_check

TITLES = {
    "pivot-lemma": "pivoting X(2n,2n) gives Y(2n,2n), n = 1..5",
    "zy-embedding": "Z/Y cross embeddings, n = 2..4",
    "universality": "bichain graphs on <= 5 vertices embed in Z(5,5)",
    "x-universality": "500 induced 5-subgraphs of X(10,10) embed in X(5,5)",
    "letters": "letter encodings of Z (<= 8) and Z* (<= 6)",
    "rankwidth-invariance": "rank-width invariant under pivots and local complements",
    "sandwich": "rwd <= cwd <= 2^(rwd+1) - 1",
    "chain-cliquewidth": "chain graphs have 3-expressions",
    "recognizers": "recognizer equivalences on <= 7 vertices",
    "antichain": "S_k and T_k labelled antichains, consecutive pairs",
    "column-intervals": "prime bichain graphs occupy column intervals",
    "x-columns": "X(2,7) in X(4,9) contains an aligned X(2,2)",
    "decomposition": "canonical decomposition recomposes and primality agrees",
}


def _line(i, name, result):
    return "criterion %2d %s: %s (%.0f ms)" % (i, "PASS" if result["pass"] else "FAIL", TITLES[name],
                                             result["millis"])


@pytest.mark.parametrize("index,name", list(enumerate(ACCEPTANCE, 1)), ids=ACCEPTANCE)
def test_criterion(index, name, capsys):
    result = run_check(name)
    with capsys.disabled():
        print("\n" + _line(index, name, result))
    assert result["pass"], result["details"]


if __name__ == "__main__":
    results = [(i, n, run_check(n)) for i, n in enumerate(ACCEPTANCE, 1)]
    for i, n, r in results:
        print(_line(i, n, r))
    sys.exit(0 if all(r["pass"] for _, _, r in results) else 1)
