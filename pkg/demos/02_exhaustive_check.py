"""Check the formula against every graph with a given edge count.

For each (m, delta, t) the enumerator lists one graph per isomorphism class.
We compare the best K_t count with the formula, and the set of maximisers
with what the recognition rule accepts.
"""

from edgeturan import verify_main

rows = []
for delta in (2, 3, 4):
    for m in (6, 8, 10):
        for t in range(3, delta + 2):
            rep = verify_main(m, delta, t)
            rows.append((m, delta, t, rep.corpus_size, rep.oracle_max, rep.formula_value,
                         len(rep.argmax_certificates), rep.passed))

print(" m  delta  t   graphs  brute  formula  maximisers  ok")
for m, delta, t, size, brute, formula, nmax, ok in rows:
    print(f"{m:>2}  {delta:>5}  {t}  {size:>7}  {brute:>5}  {formula:>7}  {nmax:>10}  {ok}")

assert all(r[-1] for r in rows)
