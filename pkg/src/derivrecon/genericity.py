"""Genericity certification, U_{n,d}(k) membership, fingerprints, experiments.

"Generic" here always means: sampled at random and then certified by an
exact rank computation. Random draws use numpy's PCG64 seeded through
``SeedSequence([seed, trial, attempt])`` so each trial has its own stream and
the order in which trials run cannot change any result.
"""

import csv
import hashlib
import io
import json
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .derivspace import e_dim, e_space, rank_bound
from .errors import ConfigInvalid, InvariantViolation, ZeroPolynomial
from .exactla import subspace_equal
from .multiindex import dim_S, enumerate_indices
from .polyring import HomPoly
from .reconstruct import verify_theorem

DEFAULT_BOUND = 1000
MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class GenericityProfile:
    n: int
    d: int
    dims: tuple
    member: tuple

    def violations(self):
        """Orders k where member[k] holds but member[k-1] fails."""
        return [k for k in range(1, len(self.member))
                if self.member[k] and not self.member[k - 1]]

    def bound_violations(self):
        return [k for k, r in enumerate(self.dims) if r > rank_bound(self.n, self.d, k)]

    def to_dict(self):
        return {"n": self.n, "d": self.d, "dims": list(self.dims),
                "member": list(self.member)}


def profile(f, check=True):
    """dim E_k(f) and U_{n,d}(k) membership for k = 0..d.

    With ``check`` set, a broken chain or rank bound raises
    :class:`InvariantViolation`.
    """
    if not f:
        raise ZeroPolynomial("profile of the zero polynomial")
    dims = tuple(e_dim(f, k) for k in range(f.d + 1))
    member = tuple(r == dim_S(f.n, k) for k, r in enumerate(dims))
    prof = GenericityProfile(f.n, f.d, dims, member)
    if check and (prof.violations() or prof.bound_violations()):
        raise InvariantViolation(f"profile {prof} breaks the membership chain or rank bound")
    return prof


def certify_generic(f, k):
    """True iff dim E_k(f) = dim S_{n,k}."""
    if not f or k < 0 or k > f.d:
        return False
    return e_dim(f, k) == dim_S(f.n, k)


def substream_seed(seed, *path):
    """Derive a 64-bit seed for a sub-stream (e.g. trial, attempt)."""
    ss = np.random.SeedSequence([seed & MASK64, *path])
    return int(ss.generate_state(1, np.uint64)[0])


def sample(n, d, bound=DEFAULT_BOUND, seed=0):
    """Coefficients uniform on the integers in [-bound, bound]."""
    if bound < 1:
        raise ConfigInvalid("bound must be >= 1")
    rng = np.random.default_rng(np.random.SeedSequence(seed & MASK64))
    basis = enumerate_indices(n, d)
    draws = rng.integers(-bound, bound, size=len(basis), endpoint=True)
    return HomPoly(n, d, {I: int(c) for I, c in zip(basis, draws)})


def sample_certified(n, d, k, bound, seed, trial, max_attempts=50):
    """Draw until certify_generic(f, k) holds.

    Returns (f, seed_used, rejected) where ``rejected`` lists the
    (seed, dim E_k) of every failed draw.
    """
    rejected = []
    for attempt in range(max_attempts):
        s = substream_seed(seed, trial, attempt)
        f = sample(n, d, bound, s)
        if certify_generic(f, k):
            return f, s, rejected
        rejected.append((s, e_dim(f, k) if f else 0))
    raise ConfigInvalid(
        f"no sample certified in U_{n},{d}({k}) after {max_attempts} draws")


# -- fingerprints ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Fingerprint:
    n: int
    d: int
    k: int
    canonical: object
    digest: str

    def __eq__(self, other):
        if not isinstance(other, Fingerprint):
            return NotImplemented
        return ((self.n, self.d, self.k) == (other.n, other.d, other.k)
                and self.digest == other.digest
                and subspace_equal(self.canonical, other.canonical))

    def __hash__(self):
        return hash(self.digest)


def fingerprint(f, k):
    """Canonical form of E_k(f) plus a SHA-256 digest of its JSON."""
    if not f:
        raise ZeroPolynomial("fingerprint of the zero polynomial")
    V = e_space(f, k)
    payload = json.dumps({"d": f.d, "k": k, "space": V.to_dict()},
                         separators=(",", ":"))
    return Fingerprint(f.n, f.d, k, V, hashlib.sha256(payload.encode()).hexdigest())


def projective_key(f):
    """f scaled so its leading coefficient is 1; equal for proportional forms."""
    return f.scale(1 / f.terms()[0][1])


def find_collisions(fingerprints):
    """Pairs (i, j), i < j, of exactly equal fingerprints."""
    by_digest = {}
    collisions = []
    for j, fp in enumerate(fingerprints):
        for i in by_digest.get(fp.digest, []):
            if fingerprints[i] == fp:
                collisions.append((i, j))
        by_digest.setdefault(fp.digest, []).append(j)
    return collisions


# -- experiments -------------------------------------------------------------

KINDS = ("genericity", "theorem", "collision", "chain")
CSV_COLUMNS = ("trial", "seed", "n", "d", "k", "certified", "dimE_k", "verdict",
               "solution_dim", "elapsed_ms")


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    n: int
    d: int
    k: int
    trials: int
    bound: int = DEFAULT_BOUND
    seed: int = 0
    timings: bool = False

    def validate(self):
        if self.kind not in KINDS:
            raise ConfigInvalid(f"kind must be one of {', '.join(KINDS)}")
        if self.trials < 1:
            raise ConfigInvalid("trials must be >= 1")
        if self.k < 0:
            raise ConfigInvalid("k must be >= 0")
        if self.n < 1 or self.d < 1:
            raise ConfigInvalid("need n >= 1 and d >= 1")
        if self.k > self.d:
            raise ConfigInvalid("k must not exceed d")
        if self.bound < 1:
            raise ConfigInvalid("bound must be >= 1")
        if self.kind == "theorem" and self.k + 1 > self.d:
            raise ConfigInvalid("theorem needs k + 1 <= d")


@dataclass
class ExperimentReport:
    config: ExperimentConfig
    rows: list = field(default_factory=list)
    rejected: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({c: _csv_cell(row[c]) for c in CSV_COLUMNS})
        return buf.getvalue()

    def to_dict(self):
        return {
            "config": asdict(self.config),
            "summary": self.summary,
            "rows": self.rows,
            "rejected": self.rejected,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def write(self, path, fmt=None):
        fmt = fmt or ("csv" if str(path).endswith(".csv") else "json")
        text = self.to_csv() if fmt == "csv" else self.to_json()
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def _row(cfg, trial, seed, certified, dim, verdict=None, solution_dim=None, elapsed=None):
    return {
        "trial": trial, "seed": seed, "n": cfg.n, "d": cfg.d, "k": cfg.k,
        "certified": certified, "dimE_k": dim, "verdict": verdict,
        "solution_dim": solution_dim,
        "elapsed_ms": round(elapsed * 1000, 3) if cfg.timings and elapsed is not None else None,
    }


def special_polynomials(n, d):
    """x0^d, the Fermat form sum x_i^d, and x0^(d-1)*x1."""
    out = [("monomial", HomPoly.monomial((d,) + (0,) * n))]
    fermat = {tuple(d if i == j else 0 for i in range(n + 1)): 1 for j in range(n + 1)}
    out.append(("fermat", HomPoly(n, d, fermat)))
    if n >= 1 and d >= 1:
        out.append(("mixed", HomPoly.monomial((d - 1, 1) + (0,) * (n - 1))))
    return out


def _run_genericity(cfg, report):
    passed = 0
    for t in range(cfg.trials):
        s = substream_seed(cfg.seed, t, 0)
        start = time.perf_counter()
        f = sample(cfg.n, cfg.d, cfg.bound, s)
        dim = e_dim(f, cfg.k) if f else 0
        ok = dim == dim_S(cfg.n, cfg.k)
        passed += ok
        report.rows.append(_row(cfg, t, s, ok, dim, elapsed=time.perf_counter() - start))
        if not ok:
            report.rejected.append({"trial": t, "seed": s, "dimE_k": dim})
    report.summary = {"passed": passed, "failed": cfg.trials - passed}


def _run_theorem(cfg, report):
    counts = {}
    contradictions = 0
    for t in range(cfg.trials):
        start = time.perf_counter()
        f, s, rejected = sample_certified(cfg.n, cfg.d, cfg.k + 1, cfg.bound, cfg.seed, t)
        report.rejected.extend({"trial": t, "seed": rs, "dimE_k+1": rd} for rs, rd in rejected)
        rep = verify_theorem(f, cfg.k)
        good = rep.verdict == "UNIQUE" and rep.proportional
        verdict = rep.verdict if good or rep.verdict != "UNIQUE" else "UNIQUE_NOT_PROPORTIONAL"
        counts[verdict] = counts.get(verdict, 0) + 1
        contradictions += rep.contradiction
        report.rows.append(_row(cfg, t, s, rep.hypothesis, rep.dims[cfg.k], verdict,
                                rep.solution_dim, time.perf_counter() - start))
    report.summary = {"verdicts": dict(sorted(counts.items())),
                      "contradictions": contradictions}


def _run_collision(cfg, report):
    # U(k+1) is empty once k+1 > d/2; past that point probe U(k) instead
    order = cfg.k + 1 if cfg.k + 1 <= cfg.d // 2 else cfg.k
    seen = {}
    by_digest = {}
    collisions = []
    duplicates = 0
    for t in range(cfg.trials):
        start = time.perf_counter()
        f, s, rejected = sample_certified(cfg.n, cfg.d, order, cfg.bound, cfg.seed, t)
        report.rejected.extend({"trial": t, "seed": rs, "dimE_r": rd} for rs, rd in rejected)
        key = projective_key(f)
        fp = fingerprint(f, cfg.k)
        if key in seen:
            duplicates += 1
            verdict = f"DUPLICATE:{seen[key]}"
        else:
            seen[key] = t
            verdict = "DISTINCT"
            # digest matches are re-checked on the canonical subspaces
            for i, other in by_digest.get(fp.digest, []):
                if other == fp:
                    collisions.append([i, t])
                    verdict = f"COLLIDES:{i}"
            by_digest.setdefault(fp.digest, []).append((t, fp))
        report.rows.append(_row(cfg, t, s, True, fp.canonical.dim, verdict,
                                elapsed=time.perf_counter() - start))
    report.summary = {
        "certified_order": order,
        "classes": len(seen),
        "duplicates": duplicates,
        "collisions": collisions,
        "covered_by_theorem": 1 <= cfg.k <= cfg.d // 2 - 1,
    }


def _run_chain(cfg, report):
    polys = []
    for t in range(cfg.trials):
        s = substream_seed(cfg.seed, t, 0)
        polys.append((t, s, sample(cfg.n, cfg.d, cfg.bound, s)))
    for offset, (name, f) in enumerate(special_polynomials(cfg.n, cfg.d)):
        polys.append((cfg.trials + offset, name, f))
    violations = 0
    for t, s, f in polys:
        start = time.perf_counter()
        if not f:
            continue
        prof = profile(f, check=False)
        bad = prof.violations() or prof.bound_violations()
        violations += bool(bad)
        report.rows.append(_row(cfg, t, s, prof.member[cfg.k], prof.dims[cfg.k],
                                "VIOLATION" if bad else "OK",
                                elapsed=time.perf_counter() - start))
    report.summary = {"profiled": len(report.rows), "violations": violations}


_RUNNERS = {
    "genericity": _run_genericity,
    "theorem": _run_theorem,
    "collision": _run_collision,
    "chain": _run_chain,
}


def run_experiment(config, path=None, fmt=None):
    """Run the trials described by ``config``; optionally write the report."""
    config.validate()
    report = ExperimentReport(config)
    _RUNNERS[config.kind](config, report)
    if path is not None:
        report.write(path, fmt)
    return report
