"""Weighted prime-power sums split into principal and nonprincipal parts."""
# %%
import math

from primroots.lseries import (
    decomposition_check,
    kappa2,
    nonprincipal_partial_sum,
    principal_partial_sum,
    zeta_log_derivative_at_2,
)

# %%
print(f"-zeta'(2)/zeta(2) = {zeta_log_derivative_at_2():.15f}")
for p in (3, 7, 101):
    print(f"kappa2({p}) = {kappa2(p):.12f}")

# %% [markdown]
# The principal part approaches kappa2(p) at rate about log x / x.

# %%
for x in (10**2, 10**3, 10**4, 10**5):
    gap = principal_partial_sum(7, x, 2.0) - kappa2(7)
    print(f"x={x:>6}  gap={gap:+.3e}  log x/x={math.log(x) / x:.3e}")

# %% [markdown]
# The nonprincipal part settles to a nonzero constant instead of decaying
# like 1/x. Multiplying by x exposes the linear growth.

# %%
for p in (5, 7, 13):
    for x in (10**2, 10**3, 10**4, 10**5):
        v = nonprincipal_partial_sum(p, x, 2.0)
        print(f"p={p:2d} x={x:>6}  value={v:+.7f}  value*x={v * x:+.1f}")

# %%
r = decomposition_check(7, 1000, 2.0)
print(f"direct={r.weighted_total:.15f}  principal+nonprincipal={r.principal_part + r.nonprincipal_part:.15f}")
print(f"mismatch={r.mismatch:.1e}")
