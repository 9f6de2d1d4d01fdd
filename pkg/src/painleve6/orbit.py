"""Search the symmetry orbit of a solution for a representative of least degree.

Layers are counted in Okamoto steps.  A node of a layer stands for the whole
closure of a solution under the 24 homographies and 16 sign changes; its
members are all those images, and the next layer consists of the Okamoto
images of all members.  Curves inside the search are handled modulo one prime
(fingerprints and statistics); the returned winner is implicitized exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .implicit import curve_stats, implicitize
from .modular import ModularError, homography_image_mod, modular_image, primes_1mod4
from .pvi import ParamSolution, ThetaQuadruple, is_solution
from .symmetry import (
    HOMOGRAPHIES,
    SIGN_MASKS,
    TransformError,
    apply_homography,
    apply_sign,
    okamoto_apply,
    okamoto_theta,
    sign_change,
)

_P1, _P2 = primes_1mod4(2)
_PROBES = ((3, 5), (7, 11), (13, 17), (19, 23))


def canonical_theta(theta) -> ThetaQuadruple:
    """Minimum over sign changes and slot permutations: sorted absolute values."""
    vals = sorted(abs(Fraction(v)) for v in theta)
    return ThetaQuadruple(*vals)


def fingerprint(image) -> tuple:
    """Values of a mod-p curve image (leading term scaled to 1) at fixed points."""
    p = image.p
    out = []
    for u0, x0 in _PROBES:
        acc = 0
        for (i, j), c in image.terms.items():
            acc = (acc + c * pow(u0, i, p) * pow(x0, j, p)) % p
        out.append(acc)
    return (image.b, image.d, len(image.terms), tuple(out))


@dataclass
class OrbitState:
    sol: ParamSolution
    history: tuple
    stats: tuple  # (b, d, terms) from the prime image
    fingerprint: tuple
    curve: object = None  # exact PlaneCurve, filled for the winner

    @property
    def script(self) -> str:
        return ",".join(self.history)


@dataclass
class OrbitResult:
    best: OrbitState
    start: OrbitState
    layers: list = field(default_factory=list)  # per layer: nodes, members, best (d, terms)
    visited: int = 0
    truncated: bool = False
    failures: dict = field(default_factory=dict)

    def summary(self) -> dict:
        b, d, t = (int(v) for v in self.best.stats)
        return {
            "b": b, "d": d, "d_minus_b": d - b, "terms": t,
            "theta": str(self.best.sol.theta), "script": self.best.script,
            "curve": str(self.best.curve.poly) if self.best.curve is not None else None,
            "layers": self.layers, "visited": self.visited, "truncated": self.truncated,
            "failures": dict(self.failures),
        }


class _Node:
    __slots__ = ("sol", "history", "images", "key")

    def __init__(self, sol, history, images, key):
        self.sol, self.history, self.images, self.key = sol, history, images, key


def _image(sol):
    try:
        return modular_image(sol, _P1)
    except ModularError:
        return modular_image(sol, _P2)


def _class(sol, image):
    """Images under all 24 rows, their fingerprints, and the class key."""
    images = {k: (image if k == 1 else homography_image_mod(image, h)) for k, h in HOMOGRAPHIES.items()}
    fps = {fingerprint(im) for im in images.values()}
    ct = canonical_theta(sol.theta)
    return images, {(ct, fp) for fp in fps}, (ct, min(fps))


def _tie_key(state: OrbitState):
    b, d, t = state.stats
    height = max(max(abs(c.a), abs(c.b)) for c in state.curve.poly.terms.values())
    return (d, t, height, len(state.history))


def orbit_search(start: ParamSolution, max_okamoto_depth: int = 3, budget: int = 100_000,
                 residual_sample: float = 0.05, seed: int = 0) -> OrbitResult:
    """Breadth-first search minimizing ``(d, terms)`` and then the exact curve."""
    if not is_solution(start):
        raise ValueError("start does not solve the equation")
    rng = random.Random(seed)
    img0 = _image(start)
    b0 = img0.b
    images, raw, key = _class(start, img0)
    root = _Node(start, (), images, key)
    seen = {key}
    seen_raw = set(raw)  # (canonical theta, fingerprint) of every member curve
    layer = [root]
    visited = 0
    truncated = False
    failures = {}
    start_state = OrbitState(start, (), img0.signature, fingerprint(img0))
    candidates = {}  # fingerprint -> OrbitState (one per distinct minimal curve)
    best_sig = None
    layers = []
    for depth in range(max_okamoto_depth + 1):
        nxt = []
        members = 0
        for node in layer:
            for hidx, h in HOMOGRAPHIES.items():
                hist_h = node.history + ((f"h{hidx}",) if hidx != 1 else ())
                sol_h = apply_homography(h, node.sol) if hidx != 1 else node.sol
                img_h = node.images[hidx]
                if img_h.b != b0:
                    raise AssertionError(f"branch count changed along {hist_h}")
                sig = (img_h.d, len(img_h.terms))
                for mask in SIGN_MASKS:
                    visited += 1
                    members += 1
                    hist = hist_h + ((f"s{mask}",) if mask != "++++" else ())
                    member = apply_sign(mask, sol_h) if mask != "++++" else sol_h
                    if best_sig is None or sig < best_sig:
                        best_sig = sig
                        candidates = {}
                    if sig == best_sig:
                        fp = fingerprint(img_h)
                        if fp not in candidates:
                            candidates[fp] = OrbitState(member, hist, img_h.signature, fp)
                    if depth == max_okamoto_depth:
                        continue
                    if visited > budget:
                        truncated = True
                        continue
                    try:
                        new = okamoto_apply(member)
                    except TransformError as exc:
                        failures[type(exc).__name__] = failures.get(type(exc).__name__, 0) + 1
                        continue
                    img = _image(new)
                    if img.b != b0:
                        raise AssertionError(f"branch count changed along {hist + ('ok',)}")
                    if (canonical_theta(new.theta), fingerprint(img)) in seen_raw:
                        continue
                    images, raw, key = _class(new, img)
                    seen_raw |= raw
                    if key in seen:  # pragma: no cover - raw keys already cover this
                        continue
                    seen.add(key)
                    if rng.random() < residual_sample and not is_solution(new):
                        raise AssertionError(f"residual check failed along {hist + ('ok',)}")
                    nxt.append(_Node(new, hist + ("ok",), images, key))
        layers.append({"depth": depth, "nodes": len(layer), "members": members,
                       "best_d": int(best_sig[0]), "best_terms": int(best_sig[1])})
        if not nxt:
            break
        layer = nxt
    best = _pick(candidates)
    if not is_solution(best.sol):
        raise AssertionError("winner fails the residual check")
    return OrbitResult(best, start_state, layers, visited, truncated, failures)


def _pick(candidates: dict) -> OrbitState:
    """Exact curves for the minimal candidates; lexicographically smallest wins."""
    best = None
    for fp in sorted(candidates):
        st = candidates[fp]
        st.curve = implicitize(st.sol)
        cs = curve_stats(st.curve)
        st.stats = (cs.b, cs.d, cs.terms)
        key = (_tie_key(st), st.curve.sort_key())
        if best is None or key < best[0]:
            best = (key, st)
    return best[1]


def find_script(theta_from, theta_to, max_okamoto: int = 2):
    """Shortest transform script sending ``theta_from`` to ``theta_to`` exactly.

    Works on exponents only, so it is cheap; the script still has to be run on
    a solution.  Returns None when no script with at most ``max_okamoto``
    Okamoto steps exists.
    """
    start = ThetaQuadruple(*theta_from)
    goal = ThetaQuadruple(*theta_to)
    if start == goal:
        return ""
    seen = {start: 0}
    frontier = [(start, ())]
    while frontier:
        nxt = []
        for th, hist in frontier:
            oks = hist.count("ok")
            moves = [(f"h{k}", h.theta_image(th)) for k, h in HOMOGRAPHIES.items() if k != 1]
            moves += [(f"s{m}", sign_change(m, th)) for m in SIGN_MASKS if m != "++++"]
            if oks < max_okamoto and sum(th.as_tuple()) != 1:
                moves.append(("ok", okamoto_theta(th)))
            for tok, new in moves:
                n_ok = oks + (tok == "ok")
                if new in seen and seen[new] <= n_ok:
                    continue
                seen[new] = n_ok
                h2 = hist + (tok,)
                if new == goal:
                    return ",".join(h2)
                nxt.append((new, h2))
        frontier = nxt
    return None


__all__ = ["OrbitResult", "OrbitState", "canonical_theta", "find_script", "fingerprint", "orbit_search"]
