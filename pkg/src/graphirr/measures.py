"""Degree-based irregularity measures and the pair degree-difference spectrum.

All of these quantify how far a graph is from regular; each is zero exactly on
regular graphs.  Most depend only on the degree sequence.  The two pair-count
measures ira and irb are built from n0, the number of unordered vertex pairs
with equal degrees: ira is the odds that a random pair has distinct degrees,
irb the probability of the same event.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from decimal import ROUND_HALF_UP, Decimal

from .graphs import DegreeSequence, Graph, degree_sequence, is_connected
from .spectral import DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE, _lambda1_unchecked, rho as _rho

__all__ = [
    "NkSpectrum",
    "MeasureReport",
    "nk_spectrum",
    "irr_t",
    "n0",
    "ira",
    "irb",
    "gini",
    "gini_sequence",
    "variance",
    "discrepancy",
    "degree_deviation",
    "albertson",
    "sigma",
    "degree_set_size",
    "compute_all",
    "round_half_away",
    "format_value",
]


def round_half_away(x: float, decimals: int = 3) -> float:
    """Round with ties going away from zero (so 0.0005 -> 0.001 at 3 decimals)."""
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_HALF_UP))


def format_value(x, decimals: int = 3) -> str:
    """Fixed-point display string; integers stay integers, None becomes ''."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, int):
        return str(x)
    quantum = Decimal(1).scaleb(-decimals)
    quantized = Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_HALF_UP)
    if quantized.is_zero():
        quantized = abs(quantized)  # avoid a -0.000 display
    return str(quantized)


@dataclass(frozen=True)
class NkSpectrum:
    """Counts of unordered vertex pairs at each degree difference k (zero counts omitted)."""

    counts: dict[int, int]
    n: int

    @property
    def total_pairs(self) -> int:
        return sum(self.counts.values())

    @property
    def weighted_sum(self) -> int:
        """Sum of k * N_k; equals the total irregularity of the same graph."""
        return sum(k * c for k, c in self.counts.items())


def nk_spectrum(d) -> NkSpectrum:
    """Degree-difference pair counts over all C(n, 2) unordered vertex pairs."""
    d = DegreeSequence.of(d)
    if d.n < 2:
        raise ValueError(f"nk_spectrum needs n >= 2 (no pairs for n={d.n})")
    counts: dict[int, int] = {}
    degs = d.degrees
    for i in range(d.n):
        for j in range(i + 1, d.n):
            k = degs[i] - degs[j]  # sorted non-increasing, so never negative
            counts[k] = counts.get(k, 0) + 1
    return NkSpectrum(counts=counts, n=d.n)


def irr_t(d) -> int:
    """Total irregularity: sum of |d_u - d_v| over all unordered vertex pairs."""
    d = DegreeSequence.of(d)
    degs = d.degrees
    return sum(degs[i] - degs[j] for i in range(d.n) for j in range(i + 1, d.n))


def n0(d) -> int:
    """Number of unordered vertex pairs with equal degrees.

    Computed from the degree multiplicities as sum of c*(c-1)/2, taken over
    every occurring degree value including 0, so that it always equals the
    k=0 entry of nk_spectrum.
    """
    d = DegreeSequence.of(d)
    if d.n < 2:
        raise ValueError(f"n0 needs n >= 2, got n={d.n}")
    return sum(c * (c - 1) // 2 for c in d.multiplicities.values())


def ira(d) -> float:
    """Odds that a random vertex pair has distinct degrees: n(n-1)/(2*n0) - 1."""
    d = DegreeSequence.of(d)
    return d.n * (d.n - 1) / (2 * n0(d)) - 1.0


def irb(d) -> float:
    """Fraction of vertex pairs with distinct degrees: 1 - 2*n0/(n(n-1))."""
    d = DegreeSequence.of(d)
    return 1.0 - 2 * n0(d) / (d.n * (d.n - 1))


def gini(d) -> float:
    """Gini index of the degree sequence: irr_t/(2mn)."""
    d = DegreeSequence.of(d)
    if d.total == 0:
        raise ValueError("gini is undefined for an edgeless graph (mean degree 0)")
    return irr_t(d) / (d.total * d.n)


def gini_sequence(y) -> float:
    """Gini index of a non-negative real sequence.

    Uses the rank-weighted form 1 - (sum of (2i-1)*y_i)/(n^2 * mean) on the
    sequence sorted non-increasing; equals the pairwise double-sum form.
    """
    ys = sorted((float(v) for v in y), reverse=True)
    if not ys:
        raise ValueError("empty sequence")
    if ys[-1] < 0:
        raise ValueError("sequence values must be non-negative")
    total = sum(ys)
    if total == 0:
        raise ValueError("gini is undefined when the mean is zero")
    n = len(ys)
    weighted = sum((2 * i - 1) * v for i, v in enumerate(ys, start=1))
    return 1.0 - weighted / (n * total)


def variance(d) -> float:
    """Degree variance: mean squared deviation from the average degree."""
    d = DegreeSequence.of(d)
    mean = d.total / d.n
    return sum((v - mean) ** 2 for v in d.degrees) / d.n


def discrepancy(d) -> float:
    """Mean absolute deviation of the degrees from the average degree."""
    d = DegreeSequence.of(d)
    mean = d.total / d.n
    return sum(abs(v - mean) for v in d.degrees) / d.n


def degree_deviation(d) -> float:
    """Total absolute deviation from the average degree: n times the discrepancy."""
    d = DegreeSequence.of(d)
    mean = d.total / d.n
    return float(sum(abs(v - mean) for v in d.degrees))


def albertson(g: Graph) -> int:
    """Sum of |d_u - d_v| over the edges."""
    deg = g.degrees()
    return sum(abs(deg[u] - deg[v]) for u, v in g.edges())


def sigma(g: Graph) -> int:
    """Sum of (d_u - d_v)^2 over the edges."""
    deg = g.degrees()
    return sum((deg[u] - deg[v]) ** 2 for u, v in g.edges())


def degree_set_size(d) -> int:
    """Number of distinct degree values."""
    d = DegreeSequence.of(d)
    return len(set(d.degrees))


# CSV column order for MeasureReport serialization.
CSV_COLUMNS = (
    "n", "m", "irr_t", "degset_minus_1", "cs", "albertson", "sigma",
    "var", "s", "gini", "rho", "n0", "ira", "irb",
)


@dataclass(frozen=True)
class MeasureReport:
    """Every measure for one graph, plus basic degree statistics."""

    n: int
    m: int
    max_degree: int
    min_degree: int
    degree_set_size: int
    irr_t: int
    albertson: int
    sigma: int
    n0: int
    ira: float
    irb: float
    gini: float | None
    var: float
    disc: float
    s: float
    cs: float | None
    rho: float | None
    connected: bool

    @property
    def degset_minus_1(self) -> int:
        return self.degree_set_size - 1

    def value(self, name: str):
        """Look up a field or derived column by name."""
        if name == "degset_minus_1":
            return self.degset_minus_1
        return getattr(self, name)

    def to_dict(self, decimals: int | None = None) -> dict:
        """Plain-data dict of all fields; floats optionally rounded half away from zero."""
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if decimals is not None and isinstance(v, float):
                v = round_half_away(v, decimals)
            out[f.name] = v
        return out

    @staticmethod
    def csv_header(columns=CSV_COLUMNS) -> str:
        return ",".join(columns)

    def csv_row(self, decimals: int = 3, columns=CSV_COLUMNS) -> str:
        return ",".join(format_value(self.value(c), decimals) for c in columns)


def compute_all(
    g: Graph,
    spectral_tolerance: float = DEFAULT_TOLERANCE,
    *,
    spectral: bool = True,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    lenient: bool = False,
) -> MeasureReport:
    """Compute every measure for g and return one MeasureReport.

    cs and rho are computed even for disconnected input (the report's
    ``connected`` flag records the caveat), skipped entirely when
    spectral=False, and set to None when undefined (rho needs n >= 3 and no
    isolated vertex).  An edgeless graph has no Gini index; by default that
    raises, with lenient=True it yields gini=None instead.
    """
    d = degree_sequence(g)
    connected = is_connected(g)

    if d.total == 0:
        if not lenient:
            raise ValueError("gini is undefined for an edgeless graph (mean degree 0)")
        gini_value = None
    else:
        gini_value = gini(d)

    if d.n >= 2:
        n0_value = n0(d)
        ira_value = ira(d)
        irb_value = irb(d)
    else:
        n0_value, ira_value, irb_value = 0, 0.0, 0.0

    cs_value = None
    rho_value = None
    if spectral:
        lam = _lambda1_unchecked(g, spectral_tolerance, max_iterations)
        cs_value = lam.lambda1 - 2 * g.m / g.n
        if g.n >= 3 and d.min_degree >= 1:
            rho_value = _rho(g)

    return MeasureReport(
        n=d.n,
        m=d.m,
        max_degree=d.max_degree,
        min_degree=d.min_degree,
        degree_set_size=degree_set_size(d),
        irr_t=irr_t(d),
        albertson=albertson(g),
        sigma=sigma(g),
        n0=n0_value,
        ira=ira_value,
        irb=irb_value,
        gini=gini_value,
        var=variance(d),
        disc=discrepancy(d),
        s=degree_deviation(d),
        cs=cs_value,
        rho=rho_value,
        connected=connected,
    )
