# %% [markdown]
# # Moving between axiom systems
#
# Each arrow converts one defining object into another (rank table, closure
# map, flats, hyperplanes, circuits and so on).  Walking a cycle must return
# the object we started from.

# %%
from qmatroid import crypto as cr
from qmatroid import dual, uniform
from qmatroid.family import family_perp

M = uniform(2, 4, 2)
for path in cr.cycles(4):
    print(f"{str(path):45s}", cr.roundtrip_verify(M, path).ok)

# %% [markdown]
# Ranks are recovered from flats by the length of a cover chain, and flats are
# recovered from hyperplanes as all intersections.

# %%
F = M.family("flat")
print(cr.flats_to_rank(F) == M)
print(cr.hyperplanes_to_flats(M.family("hyperplane")) == F)

# %% [markdown]
# Duality: r*(A) = dim A - r(E) + r(A perp).  Bases of the dual are the
# orthogonal complements of bases; circuits of M are cocircuits of M*.

# %%
D = dual(uniform(3, 5, 2))
print(D, dual(D) == uniform(3, 5, 2))
print(D.family("basis") == family_perp(uniform(3, 5, 2).family("basis")))
print(cr.spanning_readings(uniform(3, 5, 2)))
