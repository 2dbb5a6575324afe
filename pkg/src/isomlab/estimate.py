"""Numerical estimation of isometry-group Lie-algebra dimensions and
C-numerical quantities.

The dimension estimator turns the first-order isometry condition along
``t -> exp(tT)`` into one linear constraint per random sample: if g_X is the
norm gradient at X, a generator T of a one-parameter isometry group must
satisfy ``<g_X, T X> = 0``.  Stacking many samples gives a constraint matrix
on the d*d unknowns of T whose numerical null space is the Lie algebra of
the (linear) isometry group; its dimension is read off a singular-value gap.
For the classified norms the answer is dichotomous: the adjoint-group
dimension for genuinely invariant norms, the full rotation-group dimension
d(d-1)/2 for the Euclidean one, never anything in between.

The C-numerical range ``{tr(A X) : X in the similarity orbit of C}`` is
sampled by Haar conjugations plus the n! permutation alignments of the two
spectra (certified attained points), and its radius is maximized by
multi-start gradient ascent on the unitary group.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import DegeneratePoint, InconclusiveDimension, InvalidDimension
from .matspace import (
    HERMITIAN_TRACELESS,
    SKEW_REAL,
    basis_for,
    random_element,
    vectorize,
)
from .norms import NormSpec, norm_gradient
from .groups import haar_unitary

#: smallest acceptable ratio across the singular-value gap
GAP_RATIO_MIN = 1e3

#: resampling budget per constraint row before giving up
MAX_RESAMPLE = 20


@dataclass(frozen=True, eq=False)
class DimensionReport:
    """Outcome of one Lie-algebra dimension estimation run."""

    space: str
    n: int
    spec: NormSpec
    estimated_dim: int
    singular_values: np.ndarray
    gap_ratio: float
    samples_used: int
    matched_case: str


@dataclass(frozen=True, eq=False)
class RangeSample:
    """Sampled values of a C-numerical range, with extremes and radius."""

    values: np.ndarray
    lo: float
    hi: float
    radius: float


def _constraint_rows(spec: NormSpec, n: int, basis, indices, seed):
    rows = np.empty((len(indices), basis.d * basis.d))
    for out, i in enumerate(indices):
        for attempt in range(MAX_RESAMPLE):
            X = random_element(spec.space, n, [seed, int(i), attempt])
            try:
                g = norm_gradient(X, spec)
            except DegeneratePoint:
                continue
            rows[out] = np.outer(vectorize(g, basis), vectorize(X, basis)).ravel()
            break
        else:
            raise DegeneratePoint(
                f"no generic sample found for row {i} after {MAX_RESAMPLE} tries"
            )
    return rows


def _null_space_dimension(svals: np.ndarray):
    """Largest-gap cut through a descending singular-value sequence.

    Returns (null_dim, gap_ratio); the ratio must clear GAP_RATIO_MIN.
    """
    best_k, best_ratio = None, 0.0
    for k in range(1, len(svals)):
        hi, lo = svals[k - 1], svals[k]
        ratio = math.inf if lo == 0.0 else hi / lo
        if ratio > best_ratio:
            best_ratio, best_k = ratio, k
    if best_k is None or best_ratio < GAP_RATIO_MIN:
        raise InconclusiveDimension(
            f"no singular-value gap of ratio >= {GAP_RATIO_MIN:.0e} "
            f"(best {best_ratio:.2e})"
        )
    return len(svals) - best_k, float(best_ratio)


def _algebra_dimension(
    spec: NormSpec,
    n: int,
    num_samples: int | None,
    seed,
    adjoint_dim: int,
    threads: int = 1,
) -> DimensionReport:
    basis = basis_for(spec.space, n)
    d = basis.d
    if num_samples is None:
        num_samples = 3 * d * d
    if num_samples < d * d:
        raise InvalidDimension(
            f"need at least d^2 = {d * d} samples to resolve the spectrum"
        )
    indices = np.arange(num_samples)
    if threads > 1:
        chunks = np.array_split(indices, threads)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(
                pool.map(lambda ch: _constraint_rows(spec, n, basis, ch, seed), chunks)
            )
        rows = np.vstack(parts)
    else:
        rows = _constraint_rows(spec, n, basis, indices, seed)
    svals = np.linalg.svd(rows, compute_uv=False)
    null_dim, gap_ratio = _null_space_dimension(svals)
    full_dim = d * (d - 1) // 2
    if null_dim == adjoint_dim:
        matched = "adjoint_group"
    elif null_dim == full_dim:
        matched = "full_orthogonal"
    else:
        matched = "inconclusive"
    return DimensionReport(
        space=spec.space,
        n=n,
        spec=spec,
        estimated_dim=null_dim,
        singular_values=svals,
        gap_ratio=gap_ratio,
        samples_used=int(num_samples),
        matched_case=matched,
    )


def isometry_algebra_dimension(
    spec: NormSpec, n: int, num_samples: int | None = None, seed=0, threads: int = 1
) -> DimensionReport:
    """Estimate the Lie-algebra dimension of the isometry group of a
    Hermitian-space norm; the adjoint-group target is n**2 - 1."""
    if spec.space != HERMITIAN_TRACELESS:
        raise InvalidDimension("spec lives on the skew space; use the skew estimator")
    return _algebra_dimension(spec, n, num_samples, seed, n * n - 1, threads)


def skew_isometry_algebra_dimension(
    spec: NormSpec, n: int, num_samples: int | None = None, seed=0, threads: int = 1
) -> DimensionReport:
    """Skew-space analogue; the adjoint-group target is n(n-1)/2."""
    if spec.space != SKEW_REAL:
        raise InvalidDimension("spec lives on the Hermitian space; use the Hermitian estimator")
    return _algebra_dimension(spec, n, num_samples, seed, n * (n - 1) // 2, threads)


def _haar_batch(n: int, count: int, seed) -> np.ndarray:
    rng = np.random.default_rng(seed)
    Z = (
        rng.standard_normal((count, n, n)) + 1j * rng.standard_normal((count, n, n))
    ) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    diag = np.einsum("...ii->...i", R)
    return Q * (diag / np.abs(diag))[:, None, :]


def permutation_trace_values(A: np.ndarray, C: np.ndarray) -> np.ndarray:
    """All n! spectral alignment values sum_j lam_j(A) lam_pi(j)(C).

    Each is attained on the similarity orbit (align the eigenbases through a
    permutation), so they are certified members of the C-numerical range.
    """
    from itertools import permutations

    lam_a = np.linalg.eigvalsh(A)
    lam_c = np.linalg.eigvalsh(C)
    perms = np.array(list(permutations(range(len(lam_c)))))
    return lam_c[perms] @ lam_a


def c_numerical_range_sample(
    A: np.ndarray, C: np.ndarray, trials: int, seed=0
) -> RangeSample:
    """Sample tr(A U C U*) over Haar unitaries, plus all permutation values."""
    A = np.asarray(A)
    C = np.asarray(C)
    if A.shape != C.shape:
        raise InvalidDimension(f"shape mismatch: {A.shape} vs {C.shape}")
    n = A.shape[0]
    mc = np.empty(0)
    if trials > 0:
        U = _haar_batch(n, trials, seed)
        orbit = U @ C @ np.conj(np.transpose(U, (0, 2, 1)))
        mc = np.einsum("ij,kji->k", A, orbit).real
    values = np.concatenate([mc, permutation_trace_values(A, C)])
    lo = float(np.min(values))
    hi = float(np.max(values))
    return RangeSample(values=values, lo=lo, hi=hi, radius=max(abs(lo), abs(hi)))


def _ascend(A, C, U0, max_iter=120, tol=1e-13):
    """Gradient ascent for |tr(A U C U*)| on the unitary group, with an
    exponential retraction and adaptive step."""
    n = A.shape[0]
    U = U0
    X = U @ C @ U.conj().T
    f = float(np.trace(A @ X).real)
    step = 0.5 / (1.0 + np.linalg.norm(A) * np.linalg.norm(C))
    for _ in range(max_iter):
        s = 1.0 if f >= 0 else -1.0
        G = s * (A @ X - X @ A)  # skew-Hermitian ascent direction for s*f
        gnorm = np.linalg.norm(G)
        if gnorm < 1e-12 * (1.0 + abs(f)):
            break
        improved = False
        while step > 1e-12:
            Unew = scipy.linalg.expm(step * G) @ U
            Xnew = Unew @ C @ Unew.conj().T
            fnew = float(np.trace(A @ Xnew).real)
            if abs(fnew) > abs(f) + 1e-15:
                U, X, f = Unew, Xnew, fnew
                step *= 1.5
                improved = True
                break
            step *= 0.5
        if not improved:
            break
        if step > 1.0:
            step = 1.0
    return abs(f)


def c_numerical_radius(
    A: np.ndarray, C: np.ndarray, restarts: int = 8, seed=0
) -> float:
    """Maximum modulus over the C-numerical range.

    Multi-start ascent over the unitary group, warm-started from the best
    spectral alignments; the returned value always dominates the best
    permutation bound (those points are attained).
    """
    A = np.asarray(A)
    C = np.asarray(C)
    if A.shape != C.shape:
        raise InvalidDimension(f"shape mismatch: {A.shape} vs {C.shape}")
    n = A.shape[0]
    perm_best = float(np.max(np.abs(permutation_trace_values(A, C))))
    best = perm_best
    lam_a, Va = np.linalg.eigh(A)
    lam_c, Vc = np.linalg.eigh(C)
    # warm starts: eigenbasis alignments of the two extreme orderings
    warm = [Va @ Vc.conj().T, Va[:, ::-1] @ Vc.conj().T]
    starts = warm + [haar_unitary(n, [seed, t]) for t in range(restarts)]
    for U0 in starts:
        best = max(best, _ascend(A, C, U0))
    return best


@dataclass(frozen=True, eq=False)
class PreserverReport:
    """Max deviations of the C-numerical quantities under the canonical
    preserver forms (conjugation / involution branches, both signs)."""

    radius_dev: dict = field(default_factory=dict)
    wc_interval_dev: float = 0.0
    wc_pointwise_dev: float = 0.0
    trials: int = 0


def verify_preserver_forms(
    C: np.ndarray, n: int, trials: int, seed=0, restarts: int = 4, mc_trials: int = 400
) -> PreserverReport:
    """Check that both canonical forms preserve the C-numerical radius, and
    that conjugation preserves the sampled range as an interval.

    For each trial a random element A and Haar unitary U are drawn; the
    radius is compared across ``A -> eta U A U*`` and
    ``A -> eta U (-A.T) U*`` for both signs, and for the plain conjugation
    the sampled range endpoints and the conjugation-invariance of individual
    sampled values are checked.
    """
    radius_dev = {"conj_plus": 0.0, "conj_minus": 0.0, "cartan_plus": 0.0, "cartan_minus": 0.0}
    wc_interval = 0.0
    wc_pointwise = 0.0
    for t in range(trials):
        A = random_element(HERMITIAN_TRACELESS, n, [seed, t, 0])
        U = haar_unitary(n, [seed, t, 1])
        r0 = c_numerical_radius(A, C, restarts=restarts, seed=[seed, t, 2])
        images = {
            "conj_plus": U @ A @ U.conj().T,
            "conj_minus": -(U @ A @ U.conj().T),
            "cartan_plus": U @ (-A.T) @ U.conj().T,
            "cartan_minus": -(U @ (-A.T) @ U.conj().T),
        }
        for key, LA in images.items():
            r1 = c_numerical_radius(LA, C, restarts=restarts, seed=[seed, t, 3])
            radius_dev[key] = max(radius_dev[key], abs(r1 - r0))
        scale = float(np.linalg.norm(A)) * float(np.linalg.norm(C))
        s0 = c_numerical_range_sample(A, C, mc_trials, seed=[seed, t, 4])
        s1 = c_numerical_range_sample(images["conj_plus"], C, mc_trials, seed=[seed, t, 5])
        wc_interval = max(
            wc_interval,
            max(abs(s0.lo - s1.lo), abs(s0.hi - s1.hi)) / max(scale, 1e-30),
        )
        # conjugation moves each orbit point to another: values match exactly
        V = haar_unitary(n, [seed, t, 6])
        X = V @ C @ V.conj().T
        val_moved = float(np.trace(images["conj_plus"] @ (U @ X @ U.conj().T)).real)
        val_base = float(np.trace(A @ X).real)
        wc_pointwise = max(wc_pointwise, abs(val_moved - val_base))
    return PreserverReport(
        radius_dev=radius_dev,
        wc_interval_dev=wc_interval,
        wc_pointwise_dev=wc_pointwise,
        trials=trials,
    )
