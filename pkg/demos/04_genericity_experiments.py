# %% [markdown]
# # Genericity, fingerprints and experiment reports
#
# Random integer forms land in U_{n,d}(k) for k <= d/2; each claim is backed
# by an exact rank computation. Reports are byte-reproducible from the seed.

# %%
from derivrecon import ExperimentConfig, certify_generic, fingerprint, run_experiment, sample

f = sample(2, 4, seed=10)
print([certify_generic(f, k) for k in range(5)])

# %% Fingerprints of E_1 are projective invariants
print(fingerprint(f, 1).digest == fingerprint(f.scale(-7), 1).digest)

# %% Experiments
for kind, k in [("genericity", 2), ("theorem", 1), ("collision", 1), ("chain", 2)]:
    rep = run_experiment(ExperimentConfig(kind, 2, 5, k, trials=10, seed=42))
    print(kind, rep.summary)

# %% CSV report
rep = run_experiment(ExperimentConfig("theorem", 1, 6, 2, trials=5, seed=42))
print(rep.to_csv())
