"""Sweep primes, tracking g, g*, n(p) and the two growth bounds on g*."""
# %%
import sys

from primroots import survey_range, write_csv

# %%
stream = survey_range(10**5, 10**6, epsilon=1.0)
worst = []
for r in stream:
    if r.g_star > r.bound_case1:
        worst.append(r)
print(stream.summary.as_text())

# %% [markdown]
# Primes whose least prime primitive root exceeds (log p)^2.

# %%
for r in worst[:10]:
    print(f"p={r.p}  g*={r.g_star}  (log p)^2={r.bound_case1:.1f}  omega(p-1)={r.omega_pm1}")

# %% [markdown]
# The same records as CSV.

# %%
write_csv(survey_range(3, 60), sys.stdout)
