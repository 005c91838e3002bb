# Total clique count (all orders >= 2). When s = 1 there are exactly two
# maximisers: the colex construction and q*K_{delta+1} + K_r + K_2.

from edgeturan import (clique_profile, decompose, is_total_extremal, total_extremal_graphs,
                       total_extremal_value, verify_total)
from edgeturan.graph import to_graph6

m, delta = 10, 3
d = decompose(m, delta)
print(f"m={m} delta={delta}: q={d.q} r={d.r} s={d.s}, best total = {total_extremal_value(delta, m)}")

for g in total_extremal_graphs(delta, m):
    prof = clique_profile(g)
    print(f"  {to_graph6(g):<12} counts={prof.counts} total={prof.total} "
          f"accepted={is_total_extremal(g, delta).is_extremal}")

rep = verify_total(m, delta)
print(f"exhaustive: {rep.corpus_size} graphs, {len(rep.argmax_certificates)} maximisers, passed={rep.passed}")

# s = 1 exactly when the tie shows up
for m in range(1, 13):
    rep = verify_total(m, delta)
    print(f"  m={m:>2} s={decompose(m, delta).s}  maximisers={len(rep.argmax_certificates)}")
