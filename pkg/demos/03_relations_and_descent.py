# %% [markdown]
# # Relation coefficients and the Euler descent
#
# For g with E_k(g) = E_k(f), write D_I g = sum a[I, I'] D_I' f. The
# coefficients obey a shift rule, and the Euler formula pushes the relations
# one order down. With g = c*f the coefficients are c times the identity.

# %%
from fractions import Fraction

from derivrecon import (check_symmetry, derivative, descend, extract_relations, parse,
                        to_text)
from derivrecon.genericity import sample_certified
from derivrecon.polyring import euler_lhs

f, seed, _ = sample_certified(2, 5, 2, bound=50, seed=3, trial=0)
g = f.scale(Fraction(-1, 2))
a = extract_relations(f, g, 2)
print(a.as_matrix())

# %%
ok, violations = check_symmetry(a)
print("shift rule holds:", ok)

# %% Descend to order 1 and compare against the true partials of g
for K, h in descend(f, a, 2).items():
    assert h == derivative(g, K)
    assert euler_lhs(h) == h.scale(5 - 2 + 1)
    print(K, to_text(h)[:60], "...")

# %% A pair where the relations exist but the shift rule fails
a = extract_relations(parse("x0^2 + x1^2", 1), parse("x0*x1", 1), 1)
ok, violations = check_symmetry(a)
print("shift rule holds:", ok, "violations:", len(violations))
