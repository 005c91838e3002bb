# Maximum number of K_t under an edge budget and a degree cap.
#
# Split m = q*C(delta+1, 2) + b and b = C(r, 2) + s. The best graph is q
# disjoint copies of K_{delta+1} next to the colex graph on b edges.

from edgeturan import build_extremal, clique_profile, decompose, extremal_value, to_graph6

delta = 4
print(f"delta = {delta}")
print(f"{'m':>3} {'q':>2} {'b':>2} {'r':>2} {'s':>2}   T_3  T_4  T_5   graph6")
for m in range(0, 31, 3):
    d = decompose(m, delta)
    vals = [extremal_value(t, delta, m) for t in (3, 4, 5)]
    g = build_extremal(3, delta, m)
    print(f"{m:>3} {d.q:>2} {d.b:>2} {d.r:>2} {d.s:>2}  " + " ".join(f"{v:>4}" for v in vals)
          + f"   {to_graph6(g)}")

# the construction really has those counts
g = build_extremal(3, delta, 24)
print("\nprofile of the m=24 construction:", clique_profile(g).counts)
