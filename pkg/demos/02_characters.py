"""Primitive roots, characters, and the character-sum indicator of primitive roots."""
# %%
from primroots import PrimeModulus, least_prime_primitive_root, least_primitive_root
from primroots.characters import (
    all_characters,
    character_eval,
    characters_of_order,
    least_quadratic_nonresidue,
    psi_table,
)

# %%
m = PrimeModulus.of(41)
print(f"p={m.p}  p-1={m.pm1}  tau={m.tau}")
print("g =", least_primitive_root(m), " g* =", least_prime_primitive_root(m),
      " n =", least_quadratic_nonresidue(m.p))

# %% [markdown]
# Characters mod 7 grouped by order. Each value is a d-th root of unity.

# %%
m7 = PrimeModulus.of(7)
for d in (1, 2, 3, 6):
    for chi in characters_of_order(m7, d):
        vals = " ".join(f"{character_eval(chi, u):+.2f}" for u in range(1, 7))
        print(f"order {d} index {chi.index}: {vals}")

# %% [markdown]
# Summing all characters at u gives p-1 when u = 1 and 0 otherwise.

# %%
for u in range(1, 7):
    s = sum(character_eval(chi, u) for chi in all_characters(m7))
    print(u, round(abs(s), 12))

# %% [markdown]
# The weighted sum over squarefree d | p-1 recovers the primitive-root indicator.

# %%
for u, cs, direct in psi_table(41)[:12]:
    print(f"u={u:2d}  char sum={cs:+.3e}  direct={direct}")
