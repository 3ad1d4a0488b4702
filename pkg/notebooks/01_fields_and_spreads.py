# %% [markdown]
# # Finite fields and Desarguesian spreads
#
# GF(2^6) is built from the least primitive polynomial x^6 + x + 1.  Its
# multiplicative group has order 63; the powers alpha^(i + 9t) for t = 0, 1, 2
# span a 3-dimensional subspace G_i of F_2^6, and the nine G_i partition the
# nonzero vectors.

# %%
import numpy as np

from qmatroid.gf import ext_field_build, moore_determinant, subfield_rank
from qmatroid.representable import build_spread, format_elem

F = ext_field_build(2, 6)
a = F.alpha
print("modulus (low degree first):", F.modulus)
print("alpha^6 =", (a**6).coeffs, "which is 1 + alpha")

# %% [markdown]
# Elements print as alpha powers; the Moore determinant detects linear
# independence over the prime field, and with step 8 over GF(8).

# %%
print([format_elem(F, (a**k).code) for k in (0, 1, 9, 62)])
print("1, a independent over GF(2):", bool(moore_determinant([F.one, a])))
print("dimension of GF(64) over GF(8):", subfield_rank(F.elements()[1:], 8))

# %%
sp = build_spread(2, 3, 6)
for i, G in enumerate(sp.elements, start=1):
    print(f"G{i}:", G.row_strings())

hits = np.zeros(64, dtype=int)
for G in sp.elements:
    hits[G.vectors()] += 1
print("each nonzero vector lies in exactly one G_i:", bool((hits[1:] == 1).all()))

# %% [markdown]
# Other spreads: lines of F_2^4 (five of them), and the 21 two-dimensional elements of F_2^6.

# %%
for q, s, m in ((2, 2, 4), (2, 2, 6), (3, 1, 2)):
    print((q, s, m), "->", build_spread(q, s, m).e, "elements")
