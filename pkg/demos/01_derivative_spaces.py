# %% [markdown]
# # Derivative spaces of a binary quartic
#
# Partial derivatives, the apolar pairing and the catalecticant matrix whose
# row space is E_k(f), the span of all order-k partials.

# %%
from derivrecon import (apolar_pair, catalecticant, derivative, e_space, parse,
                        profile, to_text)

f = parse("x0^4 + x0*x1^3", 1)
print("f =", to_text(f))

# %% D_I f for every order-2 index, in canonical order (2,0), (1,1), (0,2)
for I in [(2, 0), (1, 1), (0, 2)]:
    print(I, "->", to_text(derivative(f, I)))

# %% The same partials through the apolar pairing <y^I, f>
P = parse("y0^2 - y1^2", 1, var="y")
print("<y0^2 - y1^2, f> =", to_text(apolar_pair(P, f)))

# %% Catalecticant for k = 2: rows are coefficient vectors of D_I f
cat = catalecticant(f, 2)
for row in cat.matrix:
    print(" ".join(f"{x!s:>3}" for x in row))
print("rank", cat.rank)

# %% E_1(f) in canonical RREF form
V = e_space(f, 1)
print(V.to_dict())

# %% Compare with the Fermat quartic, whose mixed partials all vanish
for g in (f, parse("x0^4 + x1^4", 1)):
    prof = profile(g)
    print(to_text(g), "dims", prof.dims, "member", prof.member)
