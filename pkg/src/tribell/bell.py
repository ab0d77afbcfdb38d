"""Tripartite Bell-type functionals over two dichotomic settings per party.

Each functional combines the four setting triples (1,1,2), (1,2,1),
(2,1,1) and (2,2,2) with signs +, +, +, -.  The correlator variant takes
the absolute value of the signed combination; the coherence and
skew-information variants return the signed combination itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import herm_eig, kron, psd_sqrt
from .measures import _prob_entropy, _skew_from_root, von_neumann_entropy
from .states import (
    DensityMatrix,
    Observable,
    ParameterOutOfRangeError,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    bloch_observable,
    collective_observable,
    ghz_class_pure,
    pure_density,
    w_class_pure,
    werner_mix,
)

TERMS = ((1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2, 2))
TERM_SIGNS = (1.0, 1.0, 1.0, -1.0)
VIOLATION_MARGIN = 1e-9


class FunctionalKind(Enum):
    MABK = "mabk"
    L1 = "l1"
    REL_ENT = "rel-ent"
    SKEW = "skew"


PRODUCT_BOUNDS: dict[FunctionalKind, float] = {
    FunctionalKind.MABK: 2.0,
    FunctionalKind.L1: 14.0,
    FunctionalKind.REL_ENT: 6.0,
    FunctionalKind.SKEW: 6.0,
}


def product_bound(kind: FunctionalKind) -> float:
    """Largest value attainable on fully product states."""
    return PRODUCT_BOUNDS[kind]


@dataclass(frozen=True)
class BellSettings:
    """Two dichotomic observables per party."""

    m_a1: Observable
    m_a2: Observable
    m_b1: Observable
    m_b2: Observable
    m_c1: Observable
    m_c2: Observable

    def __post_init__(self) -> None:
        for name in ("m_a1", "m_a2", "m_b1", "m_b2", "m_c1", "m_c2"):
            ob = getattr(self, name)
            if not isinstance(ob, Observable):
                raise TypeError(f"{name} must be an Observable")
            if not ob.dichotomic:
                raise ValueError(f"{name} must be dichotomic")

    def for_term(self, term: tuple[int, int, int]) -> tuple[Observable, Observable, Observable]:
        """The (A, B, C) observables selected by a setting triple."""
        i, j, k = term
        a = self.m_a1 if i == 1 else self.m_a2
        b = self.m_b1 if j == 1 else self.m_b2
        c = self.m_c1 if k == 1 else self.m_c2
        return (a, b, c)


def example1_settings() -> BellSettings:
    """Axis-aligned settings: A uses x/z, B uses -y/z, C uses x/z."""
    return BellSettings(
        m_a1=Observable(PAULI_X),
        m_a2=Observable(PAULI_Z),
        m_b1=Observable(-PAULI_Y),
        m_b2=Observable(PAULI_Z),
        m_c1=Observable(PAULI_X),
        m_c2=Observable(PAULI_Z),
    )


def example2_settings() -> BellSettings:
    """Rotated settings in the xz plane, party pairs staying orthogonal.

    Party A measures z/x; parties B and C measure the same pair rotated
    by pi/6 and pi/3 respectively.
    """

    def rotated_pair(alpha: float) -> tuple[Observable, Observable]:
        first = math.cos(alpha) * PAULI_Z - math.sin(alpha) * PAULI_X
        second = math.sin(alpha) * PAULI_Z + math.cos(alpha) * PAULI_X
        return (Observable(first), Observable(second))

    b1, b2 = rotated_pair(math.pi / 6)
    c1, c2 = rotated_pair(math.pi / 3)
    return BellSettings(
        m_a1=Observable(PAULI_Z),
        m_a2=Observable(PAULI_X),
        m_b1=b1,
        m_b2=b2,
        m_c1=c1,
        m_c2=c2,
    )


def _term_unitaries(settings: BellSettings):
    """8x8 product-basis unitaries for the four terms.

    The Kronecker product of the three party eigenvector matrices stacks
    the product kets in the same lexicographic column order that
    product_basis uses, so each unitary equals the corresponding
    ProductBasis.unitary() exactly.
    """
    vecs = {
        name: herm_eig(getattr(settings, name).matrix).eigenvectors
        for name in ("m_a1", "m_a2", "m_b1", "m_b2", "m_c1", "m_c2")
    }
    out = []
    for i, j, k in TERMS:
        out.append(
            np.kron(
                vecs[f"m_a{i}"], np.kron(vecs[f"m_b{j}"], vecs[f"m_c{k}"])
            )
        )
    return out


def mabk(rho: DensityMatrix, settings: BellSettings) -> float:
    """Absolute value of the signed combination of product correlators."""
    total = 0.0
    for sign, term in zip(TERM_SIGNS, TERMS):
        a, b, c = settings.for_term(term)
        joint = kron(kron(a.matrix, b.matrix), c.matrix)
        total += sign * float(np.trace(rho.matrix @ joint).real)
    return abs(total)


def bell_l1(rho: DensityMatrix, settings: BellSettings) -> float:
    """Signed combination of l1 coherences in the term product bases."""
    total = 0.0
    for sign, u in zip(TERM_SIGNS, _term_unitaries(settings)):
        rep = u.conj().T @ rho.matrix @ u
        total += sign * (float(np.sum(np.abs(rep))) - 1.0)
    return total


def bell_rel_ent(rho: DensityMatrix, settings: BellSettings) -> float:
    """Signed combination of relative-entropy coherences in the term bases."""
    state_entropy = von_neumann_entropy(rho)
    total = 0.0
    for sign, u in zip(TERM_SIGNS, _term_unitaries(settings)):
        populations = np.einsum("ij,jk,ki->i", u.conj().T, rho.matrix, u).real
        total += sign * max(0.0, _prob_entropy(populations) - state_entropy)
    return total


def bell_skew(rho: DensityMatrix, settings: BellSettings) -> float:
    """Signed combination of skew informations of collective observables."""
    root = psd_sqrt(rho.matrix)
    total = 0.0
    for sign, term in zip(TERM_SIGNS, TERMS):
        joint = collective_observable(*settings.for_term(term))
        total += sign * _skew_from_root(root, joint)
    return total


_EVALUATORS = {
    FunctionalKind.MABK: mabk,
    FunctionalKind.L1: bell_l1,
    FunctionalKind.REL_ENT: bell_rel_ent,
    FunctionalKind.SKEW: bell_skew,
}


def evaluate(kind: FunctionalKind, rho: DensityMatrix, settings: BellSettings) -> float:
    """Evaluate one functional kind on a state with given settings."""
    return _EVALUATORS[kind](rho, settings)


@dataclass(frozen=True)
class BellReport:
    """Outcome of one functional evaluation."""

    kind: FunctionalKind
    value: float
    bound: float
    violated: bool
    state: str
    settings: str


def make_report(
    kind: FunctionalKind,
    rho: DensityMatrix,
    settings: BellSettings,
    state_desc: str = "custom",
    settings_desc: str = "custom",
) -> BellReport:
    value = evaluate(kind, rho, settings)
    bound = product_bound(kind)
    return BellReport(
        kind=kind,
        value=value,
        bound=bound,
        violated=value > bound + VIOLATION_MARGIN,
        state=state_desc,
        settings=settings_desc,
    )


class Family(Enum):
    W_PURE = "w-pure"
    GHZ_PURE = "ghz-pure"
    W_WERNER = "w-werner"
    GHZ_WERNER = "ghz-werner"


FAMILY_DOMAINS: dict[Family, tuple[tuple[float, float], ...]] = {
    Family.W_PURE: ((0.0, math.pi), (0.0, 2.0 * math.pi)),
    Family.GHZ_PURE: ((0.0, math.pi),),
    Family.W_WERNER: ((0.0, 1.0),),
    Family.GHZ_WERNER: ((0.0, 1.0),),
}


def family_param_count(family: Family) -> int:
    return len(FAMILY_DOMAINS[family])


def family_state(family: Family, params: tuple[float, ...]) -> DensityMatrix:
    """Construct the parametrized family member, validating the domain."""
    domain = FAMILY_DOMAINS[family]
    if len(params) != len(domain):
        raise ParameterOutOfRangeError(
            f"family {family.value} takes {len(domain)} parameter(s), got {len(params)}"
        )
    for value, (lo, hi) in zip(params, domain):
        if not lo <= value <= hi:
            raise ParameterOutOfRangeError(
                f"parameter {value!r} outside [{lo:.6g}, {hi:.6g}] for family {family.value}"
            )
    if family is Family.W_PURE:
        return pure_density(w_class_pure(params[0], params[1]))
    if family is Family.GHZ_PURE:
        return pure_density(ghz_class_pure(params[0]))
    base = w_class_pure(math.asin(1.0 / math.sqrt(3.0)), math.pi / 4.0)
    if family is Family.GHZ_WERNER:
        base = ghz_class_pure(math.pi / 4.0)
    return werner_mix(pure_density(base), params[0])


@dataclass(frozen=True)
class FamilyCurve:
    """One functional kind traced along one state family at fixed settings."""

    family: Family
    kind: FunctionalKind
    settings: BellSettings


def evaluate_family(curve: FamilyCurve, params) -> float:
    """Evaluate the curve at a parameter point (scalar or tuple)."""
    if np.isscalar(params):
        point = (float(params),)
    else:
        point = tuple(float(v) for v in params)
    rho = family_state(curve.family, point)
    return evaluate(curve.kind, rho, curve.settings)


class NoSignChangeError(RuntimeError):
    """Raised when a bisection bracket does not straddle the bound."""


class NotMonotoneError(RuntimeError):
    """Raised when the curve is not monotone across the bracket."""


def threshold_bisect(curve: FamilyCurve, bracket: tuple[float, float], tol: float = 1e-9) -> float:
    """Parameter where a one-parameter curve crosses its product bound.

    Checks that the bracket endpoints straddle the bound and that the
    curve is monotone on a 16-point interior sample before bisecting.
    """
    if family_param_count(curve.family) != 1:
        raise ValueError("threshold_bisect needs a one-parameter family")
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        raise ValueError(f"invalid bracket ({lo!r}, {hi!r})")
    bound = product_bound(curve.kind)

    def gap(t: float) -> float:
        return evaluate_family(curve, t) - bound

    gap_lo, gap_hi = gap(lo), gap(hi)
    if gap_lo == 0.0:
        return lo
    if gap_hi == 0.0:
        return hi
    if math.copysign(1.0, gap_lo) == math.copysign(1.0, gap_hi):
        raise NoSignChangeError(
            f"no crossing of {bound:g} on [{lo:.6g}, {hi:.6g}]: endpoint gaps {gap_lo:.3e}, {gap_hi:.3e}"
        )
    samples = [gap_lo] + [gap(lo + (hi - lo) * k / 17.0) for k in range(1, 17)] + [gap_hi]
    diffs = np.diff(samples)
    if not (np.all(diffs >= -1e-12) or np.all(diffs <= 1e-12)):
        raise NotMonotoneError(f"curve is not monotone on [{lo:.6g}, {hi:.6g}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        gap_mid = gap(mid)
        if gap_mid == 0.0:
            return mid
        if math.copysign(1.0, gap_mid) == math.copysign(1.0, gap_lo):
            lo, gap_lo = mid, gap_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def settings_from_angles(angles) -> BellSettings:
    """Build settings from 12 Bloch angles, (theta, phi) per observable.

    Order: A1, A2, B1, B2, C1, C2.
    """
    values = [float(v) for v in np.asarray(angles, dtype=float).ravel()]
    if len(values) != 12:
        raise ValueError(f"expected 12 angles, got {len(values)}")
    obs = [bloch_observable(values[2 * i], values[2 * i + 1]) for i in range(6)]
    return BellSettings(*obs)


def random_settings(seed: int) -> BellSettings:
    """Six independent uniform Bloch directions from a seed."""
    rng = np.random.default_rng(seed)
    angles = []
    for _ in range(6):
        u, v = rng.uniform(), rng.uniform()
        angles.extend([math.acos(1.0 - 2.0 * u), 2.0 * math.pi * v])
    return settings_from_angles(angles)


def _coordinate_ascent(objective, start, iterations: int, step0: float, floor: float):
    """Greedy per-coordinate ascent with step halving.

    After a successful probe the search keeps walking in the same
    direction while the value improves, which matters near the kinks of
    the l1 functional.
    """
    x = np.array(start, dtype=float)
    best = objective(x)
    step = step0
    for _ in range(iterations):
        improved = False
        for i in range(x.size):
            for delta in (step, -step):
                trial = x.copy()
                trial[i] += delta
                value = objective(trial)
                if value > best:
                    x, best, improved = trial, value, True
                    while True:
                        trial = x.copy()
                        trial[i] += delta
                        value = objective(trial)
                        if value > best:
                            x, best = trial, value
                        else:
                            break
                    break
        if not improved:
            step *= 0.5
            if step < floor:
                break
    return x, best


def optimize_settings(
    rho: DensityMatrix,
    kind: FunctionalKind,
    restarts: int = 8,
    iterations: int = 200,
    seed: int = 0,
) -> tuple[BellSettings, float]:
    """Search over all 12 Bloch angles for settings maximizing a functional.

    Deterministic for fixed arguments: restart r draws its start point
    from default_rng([seed, r]).  Returns the best settings found and
    their value.
    """
    if restarts < 1 or iterations < 1:
        raise ValueError("restarts and iterations must be positive")

    def objective(angles: np.ndarray) -> float:
        return evaluate(kind, rho, settings_from_angles(angles))

    best_angles = None
    best_value = -math.inf
    for r in range(restarts):
        rng = np.random.default_rng([seed, r])
        start = np.empty(12)
        for i in range(6):
            start[2 * i] = rng.uniform(0.0, math.pi)
            start[2 * i + 1] = rng.uniform(0.0, 2.0 * math.pi)
        angles, value = _coordinate_ascent(
            objective, start, iterations, step0=math.pi / 8.0, floor=1e-9
        )
        if value > best_value:
            best_angles, best_value = angles, value
    return settings_from_angles(best_angles), best_value
