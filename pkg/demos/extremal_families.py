"""
Extremal families
=================

Build a member of each family, confirm it sits exactly on its bound, and
ask the recognizer about a shuffled copy.
"""

import random

from misbounds import bounds
from misbounds.families import make_E, make_G, make_general_extremal, make_M, make_P, make_Q3, recognize
from misbounds.graph import disjoint_union, make_basic, relabel
from misbounds.matching import matching_number
from misbounds.mis import count_mis

rng = random.Random(0)


def shuffled(g):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm)


cases = [
    ("GENERAL_T1", make_general_extremal(3, 2), bounds.general_bound),
    ("E_T", make_E(4, 2), bounds.connected_bound),
    ("M_T", make_M(5, 2, 1), bounds.triangle_free_bound),
    ("G_T", make_G(5, r=3), bounds.connected_triangle_free_bound),
    ("G_T", make_G(4, ell=(1, 2, 1)), bounds.connected_triangle_free_bound),
]
for family, g, bound in cases:
    mu = matching_number(g)
    print(f"{family:<10} n={g.n:>2} mu={mu} mis={count_mis(g):>3} bound={bound(mu):>3}"
          f" recognized={recognize(shuffled(g), family, t=mu)}")

# the attached-star construction: two small stars joined through a new centre
two_stars = disjoint_union([make_basic("star", 3), make_basic("star", 3)])
q = make_Q3(two_stars, 2, [1, 4])
print("Q3 member:", q.n, "vertices, mis", count_mis(q), "mu", matching_number(q), recognize(q, "F_T", t=3))

# the two-centre graphs all have four maximal independent sets
for ells in [(1, 1, 1), (2, 1, 3), (1, 4, 1)]:
    print("P", ells, "mis", count_mis(make_P(*ells)))
