"""Harmonic measure: closed forms for sectors, half-planes and strips, and a
walk-on-spheres (WoS) estimator for domains bounded by labelled horizontal and
vertical pieces.

WoS determinism: paths are processed in fixed blocks of ``BLOCK`` walks, block
``b`` drawing from ``Philox`` seeded by ``SeedSequence(seed, spawn_key=(b,))``.
Counts are reduced in block order, so the estimate depends only on
``(seed, paths)``, never on the number of worker threads.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
import json
import math

import numpy as np

from .complexcore import as_point, principal_arg
from .errors import DomainError

__all__ = [
    "BoundaryPrimitive",
    "HarmonicEstimate",
    "hm_sector",
    "hm_halfplane_halfline",
    "hm_strip_top",
    "wos_label_counts",
    "wos_estimate",
    "example51_domain",
    "example51_bounds",
    "example52_rectangle",
    "example52_chain",
    "Example52Report",
    "EPS_SHELL",
]

EPS_SHELL = 1e-4
BLOCK = 4096
MAX_STEPS = 100_000
KINDS = ("horizontal-line", "horizontal-ray-left", "segment", "vertical-segment")


@dataclass(frozen=True)
class BoundaryPrimitive:
    """A labelled boundary piece.

    ``horizontal-line``: ``Im w = anchor.imag``.
    ``horizontal-ray-left``: ``{x + i anchor.imag : x <= anchor.real}``.
    ``segment``: horizontal, from ``anchor`` to ``anchor + extent`` (extent may be inf).
    ``vertical-segment``: from ``anchor`` to ``anchor + i*extent`` (extent may be inf).
    """

    kind: str
    anchor: complex
    extent: float = 0.0
    label: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown primitive kind {self.kind!r}")
        if self.kind in ("segment", "vertical-segment") and not self.extent > 0:
            raise ValueError("segments need a positive extent")

    def distance(self, x, y):
        """Euclidean distance from the points ``x + iy`` (arrays) to the piece."""
        a, c = self.anchor.real, self.anchor.imag
        if self.kind == "horizontal-line":
            return np.abs(y - c)
        if self.kind == "horizontal-ray-left":
            dx = np.maximum(x - a, 0.0)
            return np.hypot(dx, y - c)
        if self.kind == "segment":
            dx = np.maximum(np.maximum(a - x, x - (a + self.extent)), 0.0)
            return np.hypot(dx, y - c)
        dy = np.maximum(np.maximum(c - y, y - (c + self.extent)), 0.0)
        return np.hypot(x - a, dy)


@dataclass(frozen=True)
class HarmonicEstimate:
    value: float
    stderr: float = 0.0
    method: str = "exact"
    paths: int = 0
    seed: int = 0

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict())


def _exact(v):
    return HarmonicEstimate(float(v), 0.0, "exact", 0, 0)


def hm_sector(z, alpha, beta, side="beta"):
    """Harmonic measure of one bounding ray of ``{alpha < Arg w < beta}``."""
    z = as_point(z)
    if not (-math.pi <= alpha < beta <= math.pi):
        raise DomainError("need -pi <= alpha < beta <= pi")
    if z == 0:
        raise DomainError("apex is on the boundary")
    a = principal_arg(z)
    if not (alpha < a < beta):
        raise DomainError(f"{z!r} is outside the open sector")
    v = (a - alpha) / (beta - alpha)
    if side == "beta":
        return _exact(v)
    if side == "alpha":
        return _exact(1.0 - v)
    raise ValueError("side must be 'alpha' or 'beta'")


def hm_halfplane_halfline(z, c=0.0):
    """Harmonic measure of ``(-inf, c]`` in the upper half-plane."""
    z = as_point(z)
    if not z.imag > 0:
        raise DomainError("need Im z > 0")
    return _exact(principal_arg(z - c) / math.pi)


def hm_strip_top(z, bottom, height):
    """Harmonic measure of the top line of ``{bottom < Im w < bottom + height}``."""
    z = as_point(z)
    if not height > 0:
        raise DomainError("height must be positive")
    if not (bottom < z.imag < bottom + height):
        raise DomainError(f"{z!r} is outside the open strip")
    return _exact((z.imag - bottom) / height)


# ---------------------------------------------------------------------------
# walk on spheres


def _default_box(z):
    return max(10.0 * abs(z.real), 1e4)


def _walk_block(prims, box, z, n, rng, wall_index):
    """Run ``n`` walks from ``z``; returns the absorbing primitive index for each."""
    x = np.full(n, z.real)
    y = np.full(n, z.imag)
    out = np.full(n, -1, dtype=np.int64)
    live = np.arange(n)
    for _ in range(MAX_STEPS):
        if live.size == 0:
            break
        d = np.stack([p.distance(x, y) for p in prims])
        near = np.argmin(d, axis=0)
        dmin = d[near, np.arange(live.size)]
        wall = box - np.maximum(np.abs(x), np.abs(y))
        hit = dmin < EPS_SHELL
        at_wall = ~hit & (wall < EPS_SHELL)
        out[live[hit]] = near[hit]
        if at_wall.any():
            out[live[at_wall]] = wall_index(x[at_wall], y[at_wall], near[at_wall])
        keep = ~(hit | at_wall)
        live, x, y = live[keep], x[keep], y[keep]
        r = np.minimum(dmin[keep], wall[keep])
        ang = rng.random(live.size) * (2.0 * math.pi)
        x = x + r * np.cos(ang)
        y = y + r * np.sin(ang)
    if live.size:
        # walks that exhausted the step budget go to the nearest piece
        d = np.stack([p.distance(x, y) for p in prims])
        out[live] = np.argmin(d, axis=0)
    return out


def wos_label_counts(primitives, z, paths, seed, box=None, workers=None):
    """Absorption counts per label for ``paths`` walks from ``z``."""
    prims = list(primitives)
    if not prims:
        raise ValueError("need at least one boundary primitive")
    z = as_point(z)
    paths = int(paths)
    if paths < 1:
        raise ValueError("paths must be positive")
    box = _default_box(z) if box is None else float(box)
    if max(abs(z.real), abs(z.imag)) >= box:
        raise DomainError("start point lies outside the truncation box")
    start_d = min(float(p.distance(np.array([z.real]), np.array([z.imag]))[0]) for p in prims)
    if start_d < EPS_SHELL:
        raise DomainError("start point lies within the absorption shell")

    lines = [i for i, p in enumerate(prims) if p.kind == "horizontal-line"]
    heights = np.array([prims[i].anchor.imag for i in lines])

    def wall_index(xw, yw, near):
        # far field: a wall hit belongs to the nearest full horizontal line
        if not lines:
            return near
        j = np.argmin(np.abs(yw[:, None] - heights[None, :]), axis=1)
        return np.asarray(lines)[j]

    nblocks = -(-paths // BLOCK)

    def run(b):
        n = min(BLOCK, paths - b * BLOCK)
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(b,))))
        idx = _walk_block(prims, box, z, n, rng, wall_index)
        return np.bincount(idx, minlength=len(prims))

    if workers is None or workers <= 1 or nblocks == 1:
        per_block = [run(b) for b in range(nblocks)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            per_block = list(ex.map(run, range(nblocks)))
    total = np.zeros(len(prims), dtype=np.int64)
    for c in per_block:  # fixed reduction order
        total += c
    counts = {}
    for p, c in zip(prims, total):
        counts[p.label] = counts.get(p.label, 0) + int(c)
    return counts


def wos_estimate(primitives, z, target_labels, paths=100_000, seed=42, box=None, workers=None):
    """WoS estimate of the harmonic measure at ``z`` of the pieces labelled ``target_labels``."""
    if isinstance(target_labels, str):
        target_labels = {target_labels}
    target_labels = set(target_labels)
    known = {p.label for p in primitives}
    if not target_labels <= known:
        raise ValueError(f"unknown target labels {sorted(target_labels - known)}")
    counts = wos_label_counts(primitives, z, paths, seed, box=box, workers=workers)
    k = sum(c for lab, c in counts.items() if lab in target_labels)
    v = k / paths
    return HarmonicEstimate(v, math.sqrt(v * (1.0 - v) / paths), "wos", int(paths), int(seed))


# ---------------------------------------------------------------------------
# Example domains


def example51_domain():
    """``{Im w > -1}`` minus ``{Im w = -1/2, Re w <= -1}`` with labels ``bottom`` / ``slit``."""
    return [
        BoundaryPrimitive("horizontal-line", complex(0.0, -1.0), 0.0, "bottom"),
        BoundaryPrimitive("horizontal-ray-left", complex(-1.0, -0.5), 0.0, "slit"),
    ]


def example51_bounds(t):
    """``(lower, upper)``: the half-plane comparison bound and the ``dist/(Theta t)`` envelope."""
    t = float(t)
    if not t > 0:
        raise ValueError("t must be positive")
    lower = math.atan(1.0 / (2.0 * (t + 1.0))) / math.pi
    upper = 1.0 / (math.pi * t)
    return lower, upper


def _check_n(n):
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 4:
        raise OverflowError("2^(2^(n+1)) is not exactly representable for n > 4")
    return n


def example52_rectangle(n):
    """Rectangle ``S_n = (2^{2^n}, 2^{2^{n+1}}) x (-1, 2^{n+1} log 2 - 1)`` with sides U, D, L, R."""
    n = _check_n(n)
    a = float(2 ** (2 ** n))
    b = float(2 ** (2 ** (n + 1)))
    top = 2.0 ** (n + 1) * math.log(2.0) - 1.0
    h = top + 1.0
    return [
        BoundaryPrimitive("segment", complex(a, top), b - a, "U"),
        BoundaryPrimitive("segment", complex(a, -1.0), b - a, "D"),
        BoundaryPrimitive("vertical-segment", complex(a, -1.0), h, "L"),
        BoundaryPrimitive("vertical-segment", complex(b, -1.0), h, "R"),
    ]


def example52_t(n):
    n = _check_n(n)
    e = 2 ** n
    return float(2 ** (e - 1) * (2 ** e + 1))


@dataclass(frozen=True)
class Example52Report:
    n: int
    t_n: float
    strip_exact: float
    upper_side: HarmonicEstimate
    right_side: HarmonicEstimate
    lower_bound: float
    chain_holds: bool
    lower_holds: bool

    def to_dict(self):
        d = asdict(self)
        d["upper_side"] = self.upper_side.to_dict()
        d["right_side"] = self.right_side.to_dict()
        return d


def example52_chain(n, paths=100_000, seed=42, workers=None):
    """Strip value vs WoS rectangle estimates at ``t_n`` for the dyadic comb."""
    n = _check_n(n)
    t_n = example52_t(n)
    strip = hm_strip_top(complex(t_n, 0.0), -1.0, 2.0 ** (n + 1) * math.log(2.0)).value
    rect = example52_rectangle(n)
    u = wos_estimate(rect, complex(t_n, 0.0), {"U"}, paths, seed, workers=workers)
    r = wos_estimate(rect, complex(t_n, 0.0), {"R"}, paths, seed, workers=workers)
    lower = 1.0 / (10.0 * math.log(t_n))
    return Example52Report(
        n, t_n, strip, u, r, lower,
        chain_holds=bool(strip <= 5.0 * u.value + 3.0 * u.stderr),
        lower_holds=bool(u.value >= lower - 3.0 * u.stderr),
    )
