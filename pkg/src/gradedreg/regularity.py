"""The four regularity conditions evaluated independently, and the corpus runner."""

from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from .errors import GradedRegError, SearchExhaustedError
from .koszul import ab_check, depth
from .resolutions import ModulePresentation, pd_finite, tor_ring_change
from .rings import SEARCH_SEED, embedding_dim, find_nonzerodivisor
from .spectral import _cor, abutment_check, cor_e2, d2_vanishing_check

REGULAR = "regular"
NON_REGULAR = "non-regular"
INCONCLUSIVE = "inconclusive-bound"
INCONSISTENT = "inconsistent"


def polynomial_hilbert(n, D):
    if n == 0:
        return [1] + [0] * D
    return [comb(d + n - 1, n - 1) for d in range(D + 1)]


@dataclass
class RegularityReport:
    ring: str
    n: int
    embedding_dim: int
    cond_a: object
    cond_b: bool
    cond_c: bool
    cond_d: bool
    gldh: object = None
    status: str = ""
    findings: list = field(default_factory=list)

    @property
    def consistent(self):
        return self.status in (REGULAR, NON_REGULAR)

    @property
    def regular(self):
        return self.status == REGULAR

    def conditions(self):
        return {"a": self.cond_a.finite, "b": self.cond_b, "c": self.cond_c, "d": self.cond_d}

    def summary_line(self):
        if self.status == REGULAR:
            return f"REGULAR, n={self.n}, gldh={self.gldh}"
        if self.status == NON_REGULAR:
            return (f"NOT REGULAR, n={self.n}, embdim={self.embedding_dim}, "
                    f"pd_A k {self.cond_a}")
        if self.status == INCONCLUSIVE:
            return f"INCONCLUSIVE (raise bound beyond {self.cond_a.bound}), n={self.n}"
        return f"INCONSISTENT, n={self.n}: " + "; ".join(self.findings)


def regularity_report(A, bound=None, D=12):
    """Evaluate conditions a)-d) on A, each through its own computation."""
    n = A.dim
    a = pd_finite(A, bound)
    emb = embedding_dim(A)
    b = emb == n
    h = A.hilbert_prefix(D)
    mingens = h[1] if len(h) > 1 else 0  # dim_k m/m^2 read off the Hilbert function
    c = mingens == n
    d = h == polynomial_hilbert(n, D)
    report = RegularityReport(A.name, n, emb, a, b, c, d)
    if a.finite:
        report.gldh = a.length
        if a.length != n:
            report.findings.append(f"finite global dimension {a.length} differs from dim {n}")
    verdicts = [a.finite, b, c, d]
    if all(verdicts) and not report.findings:
        report.status = REGULAR
    elif not any(verdicts):
        report.status = NON_REGULAR
    elif not a.finite and b and c and d:
        report.status = INCONCLUSIVE
    else:
        report.status = INCONSISTENT
        report.findings.append(f"conditions disagree: a={a.finite} b={b} c={c} d={d}")
    return report


@dataclass
class CorpusConfig:
    bound: object = None
    D: int = 12
    window: int = 4
    seed: int = SEARCH_SEED
    cor_degree: object = None


def change_of_rings_suite(A, g, window, D=None):
    """tor_ring_change, E^2, d^2 ranks and abutment for one (A, g)."""
    D = _cor(A, g, window, D).D
    tor = tor_ring_change(A, g, window)
    e2 = cor_e2(A, g, window, D)
    d2 = d2_vanishing_check(A, g, window, D)
    ab = abutment_check(A, g, window, D)
    findings = []
    expected = [1, 1] + [0] * (window - 1)
    if tor != expected[: window + 1]:
        findings.append(f"Tor^A_p(A/gA, k) = {tor}, expected {expected[: window + 1]}: g is a zero-divisor")
    for row in d2:
        if not row.vanishes:
            findings.append(f"d^2 out of E^2_(0,{row.q}) has rank {row.d2_rank}")
    for row in ab:
        if not row.equal:
            findings.append(f"abutment mismatch at n={row.n}: {row.lhs} != {row.rhs}")
    return {"g": str(g.rep if hasattr(g, "rep") else g), "tor": tor, "e2": e2, "d2": d2,
            "abutment": ab, "findings": findings}


@dataclass
class CorpusEntry:
    ring: str
    path: str
    report: object = None
    cor: object = None
    ab: list = field(default_factory=list)
    depth: object = None
    error: str = None
    findings: list = field(default_factory=list)


def run_corpus(paths, config=None):
    """Process every ring file independently; failures are recorded, not raised."""
    from .ringfile import load_ring_file
    config = config or CorpusConfig()
    entries = []
    for path in sorted(Path(p) for p in paths):
        entry = CorpusEntry(path.stem, str(path))
        entries.append(entry)
        try:
            A = load_ring_file(path).presentation()
            rep = regularity_report(A, config.bound, config.D)
            entry.report = rep
            entry.findings.extend(rep.findings)
            entry.depth = depth(A)
            if rep.regular and entry.depth != rep.n:
                entry.findings.append(f"regular ring with depth {entry.depth} != dim {rep.n}")
            try:
                g = find_nonzerodivisor(A, seed=config.seed)
            except SearchExhaustedError:
                g = None
            if g is not None:
                entry.cor = change_of_rings_suite(A, g, config.window, config.cor_degree)
                entry.findings.extend(entry.cor["findings"])
            if rep.regular:
                mods = [("k", ModulePresentation.residue_field(A)), ("A", ModulePresentation.free(A))]
                if A.nvars:
                    x = A.ring.gens()
                    mods.append((f"A/({x[0]})", ModulePresentation.cyclic(A, [x[0]])))
                for label, M in mods:
                    r = ab_check(A, M)
                    entry.ab.append((label, r))
                    if not r.holds:
                        entry.findings.append(f"Auslander-Buchsbaum fails for {label}: {r}")
        except (GradedRegError, ValueError, OSError) as exc:
            entry.error = f"{type(exc).__name__}: {exc}"
    return entries


def corpus_summary(entries):
    statuses = {}
    for e in entries:
        key = "error" if e.error else e.report.status
        statuses[key] = statuses.get(key, 0) + 1
    return {
        "rings": len(entries),
        "statuses": dict(sorted(statuses.items())),
        "inconsistencies": sum(1 for e in entries if e.report and e.report.status == INCONSISTENT),
        "findings": sum(len(e.findings) for e in entries),
        "errors": sum(1 for e in entries if e.error),
    }
