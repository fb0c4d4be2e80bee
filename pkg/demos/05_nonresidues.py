"""Running average of the least quadratic nonresidue over primes."""
# %%
import math

from primroots.arithmetic import prime_sieve
from primroots.survey import average_nres

# %% [markdown]
# Over primes, n(p) = p_k with probability about 2^-k, so the mean tends
# to sum_k p_k / 2^k.

# %%
ps = prime_sieve(1000).tolist()
limit_mean = math.fsum(p / 2.0**k for k, p in enumerate(ps, 1))
print(f"sum p_k / 2^k = {limit_mean:.9f}")

# %%
avg, count, marks = average_nres(10**7, checkpoints=True)
for x, a in marks:
    print(f"x={x:>9}  mean n(p)={a:.6f}  gap to limit={a - limit_mean:+.6f}")
