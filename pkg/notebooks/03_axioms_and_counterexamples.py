# %% [markdown]
# # Axiom systems and their counterexamples
#
# Every family derived from a q-matroid satisfies its axiom system.  Two
# builtin fixtures show why the fourth independence axiom and the third
# open-space axiom cannot be weakened.

# %%
from qmatroid import axioms as ax
from qmatroid.fixtures import example10_circuits, example10_independents, lo_prime, m6

for rep in ax.check_matroid(m6()):
    print(rep.summary())

# %% [markdown]
# All subspaces of I = <1001, 0110> in F_2^4 satisfy (I1)-(I3) but not (I4).
# The witness is the least violating tuple in canonical order.

# %%
rep = ax.check_independence(example10_independents(), variant="I4", mode="exhaustive")
print(rep.summary())
print(rep.first_failure().witness)

# %% [markdown]
# Its minimal dependent spaces satisfy (C1), (C2) and the weaker (C3bar),
# yet fail (C3).  There are many violating triples; list a few.

# %%
C = example10_circuits()
print(ax.check_circuits(C, variant="C3bar", mode="exhaustive").summary())
print(ax.check_circuits(C, variant="C3", mode="exhaustive").summary())
print(len(ax.circuit_c3_violations(C)), "violating triples, e.g.", ax.circuit_c3_violations(C)[:2])

# %% [markdown]
# Dropping one co-open space of the dual of M6 leaves a family that passes
# (O1), (O2), (O3bar) and fails (O3).

# %%
L = lo_prime()
print(ax.check_open(L, variant="O3bar", mode="exhaustive").summary())
print(ax.check_open(L, variant="O3", mode="exhaustive").first_failure())
