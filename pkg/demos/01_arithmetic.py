"""Factoring, multiplicative functions and the average of omega(n)."""
# %%
import math

import numpy as np

from primroots import factor, euler_phi, mobius, omega
from primroots.arithmetic import MERTENS_B1, omega_average, omega_sieve, prime_sieve

# %% [markdown]
# Factor a few integers, including one with two 32-bit prime factors.

# %%
for n in (2310, 2**32 + 1, 4294967291 * 4294967279, 2**64 - 1):
    f = factor(n)
    print(f"{n} = {f}   mu={mobius(f)} phi={euler_phi(f)} omega={omega(f)}")

# %% [markdown]
# The mean of omega(n) over n <= x grows like log log x + B1.

# %%
for k in range(2, 8):
    row = omega_average(10**k)
    print(f"x=1e{k}  mean={row.mean_omega:.5f}  loglog x + B1={row.predicted:.5f}  diff={row.deviation:+.5f}")

# %% [markdown]
# Distribution of omega over n <= 1e6 as a histogram.

# %%
w = omega_sieve(10**6)[1:]
counts = np.bincount(w)
for k, c in enumerate(counts):
    print(f"omega={k}: {c:7d}  {'#' * int(60 * c / counts.max())}")

# %%
primes = prime_sieve(10**6)
print(f"pi(1e6) = {primes.size}, x/log x = {1e6 / math.log(1e6):.0f}, B1 = {MERTENS_B1:.10f}")
