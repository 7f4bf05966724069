# %% [markdown]
# # Recovering a form from the span of its partials
#
# Solve {g : D_I g in V for all |I| = k} exactly. A one-dimensional
# solution space is the certificate that V determines f up to scale.

# %%
from derivrecon import e_space, parse, sample, solve_from_span, to_text, verify_theorem

f = parse("x0^4 + x0*x1^3", 1)
res = solve_from_span(e_space(f, 1), 1, 4, 1)
print(res.verdict, res.solution_dim, [to_text(g) for g in res.basis])

# %% A random ternary sextic from its second-order partials
g = sample(2, 6, bound=20, seed=1)
rep = verify_theorem(g, 2)
print("hypothesis:", rep.hypothesis, "dims:", rep.dims)
print("verdict:", rep.verdict, "basis = %s * g" % rep.witness)

# %% At k = d/2 the span is everything, so nothing can be recovered
res = solve_from_span(e_space(sample(1, 4, seed=2), 2), 1, 4, 2)
print(res.verdict, res.solution_dim)

# %% The Fermat quartic fails the hypothesis and is genuinely ambiguous
res = solve_from_span(e_space(parse("x0^4 + x1^4", 1), 1), 1, 4, 1)
print(res.verdict, [to_text(h) for h in res.basis])

# %% ...while a pure power fails it too but is still recovered
rep = verify_theorem(parse("x0^7", 1), 2)
print("x0^7: hypothesis", rep.hypothesis, "verdict", rep.verdict)
