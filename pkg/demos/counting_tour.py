"""
Maximal independent sets against the matching number
=====================================================

A short walk through counting on a few familiar graphs.
"""

from misbounds import (
    connected_bound_h,
    count_independent_sets,
    count_mis,
    enumerate_mis,
    general_bound,
    make_basic,
    matching_number,
    parse_graph6,
    to_graph6,
)

# a pentagon has five maximal independent sets, all of size two
c5 = make_basic("cycle", 5)
print("C5 as graph6:", to_graph6(c5))
for s in enumerate_mis(c5):
    print("  ", sorted(s))

# counts and the matching number side by side
for name in ("complete", "cycle", "path", "star"):
    for n in (4, 6, 8):
        g = make_basic(name, n)
        mu = matching_number(g)
        print(f"{name:>8} n={n}  mu={mu}  mis={count_mis(g):>3}  i={count_independent_sets(g):>4}"
              f"  3^mu={general_bound(mu)}")

# connected graphs stay below 3^mu once mu >= 2
for t in range(1, 7):
    print(f"t={t}: 3^t={general_bound(t):>4}  connected bound={connected_bound_h(t):>4}")

# graph6 strings can be pasted straight in
g = parse_graph6("Dhc")
print("Dhc is C5:", g == c5)
