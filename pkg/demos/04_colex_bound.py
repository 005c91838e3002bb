"""Without a degree cap the colex graph L_m has the most K_t among m-edge
graphs, and k_t(L_m) sits below the real-valued bound C(x, t), x(x-1)/2 = m.
"""

from edgeturan import verify_kk
from edgeturan.colex import colex_decompose, colex_kt, kk_bound_real

t = 3
print(" m  r  s  k_3(L_m)  C(x,3)   slack")
for m in range(3, 22):
    d = colex_decompose(m)
    exact, real = colex_kt(m, t), kk_bound_real(m, t)
    print(f"{m:>2} {d.r:>2} {d.s:>2}  {exact:>8}  {real:7.3f}  {real - exact:6.3f}")

# the bound is tight when m is a triangular number; exhaustive check for small m
for m in (6, 7, 8, 9, 10):
    rep = verify_kk(m, t)
    print(f"m={m}: max over {rep.corpus_size} graphs = {rep.oracle_max}, achievers={len(rep.argmax_certificates)}, passed={rep.passed}")
