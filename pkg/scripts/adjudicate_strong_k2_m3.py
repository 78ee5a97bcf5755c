"""Settle the strong k=2, m=3 row of the complete-bipartite table by exhaustive search.

The closed form lists 4 for this row while a hand construction suggests 5 could be
needed. Both the multiset solver and the general branch-and-bound are run on
K_{3,n} and the answer is written as a JSON fixture.

    python3 scripts/adjudicate_strong_k2_m3.py [-o tests/fixtures/strong_k2_m3.json]
"""

import argparse
import json

from romank.graph import complete_bipartite
from romank.kmn import gamma_s_kmn
from romank.solvers import solve_bnb, solve_kmn_multiset
from romank.weights import Variant, validate


def adjudicate(n_max: int = 9, bnb_n_max: int = 6) -> dict:
    rows = []
    for n in range(3, n_max + 1):
        ms = solve_kmn_multiset(3, n, 2, Variant.STRONG)
        g, _ = complete_bipartite(3, n)
        assert validate(g, ms.witness, Variant.STRONG)
        row = {"n": n, "formula": gamma_s_kmn(3, n, 2).value, "multiset": ms.value,
               "witness": list(ms.witness.values)}
        if n <= bnb_n_max:
            row["bnb"] = solve_bnb(g, 2, Variant.STRONG).value
        rows.append(row)
    values = {r["multiset"] for r in rows} | {r["bnb"] for r in rows if "bnb" in r}
    return {"variant": "strong", "m": 3, "k": 2, "candidates": [4, 5],
            "answer": values.pop() if len(values) == 1 else None, "rows": rows}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-o", "--out", default=None)
    ap.add_argument("--n-max", type=int, default=9)
    a = ap.parse_args()
    text = json.dumps(adjudicate(a.n_max), indent=1) + "\n"
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    print(text, end="")


if __name__ == "__main__":
    main()
