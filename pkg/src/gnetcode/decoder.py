"""Minimum weight decoding and code capability classification.

The minimum weight decoder collects every (codeword, error) solution of
F(x, z) = y; if all minimum-weight solutions share one codeword it decodes
to it, otherwise (including when no solution exists, possible for
non-surjective table channels) it declares a detection.  The bounded
variant MWD(c) decodes inside pairwise disjoint radius-c balls and is only
defined when those balls are disjoint.

An error z is correctable when the minimum weight decoder returns the
transmitted codeword for every transmission; it is detectable when the
received word never lands in a *different* codeword's zero-radius ball, so
the radius-0 decoder can never be fooled into miscorrecting (it either
flags the error or returns the transmitted codeword unchanged; nonlinear
node maps can swallow an error entirely).
"""

from __future__ import annotations

from dataclasses import dataclass

from .channel import Channel
from .distances import _ball, _d2_refined_by_index, minimum_distances, is_finite


class InvalidDecoderError(ValueError):
    """Bounded decoding requested at a radius where balls overlap."""


class InternalConsistencyError(AssertionError):
    """Two supposedly equivalent computations disagreed (a bug signal)."""


@dataclass(frozen=True)
class DecodeOutcome:
    """Either a decoded codeword or a detected-error verdict."""

    codeword: tuple | None = None

    @property
    def detected(self) -> bool:
        return self.codeword is None

    def __repr__(self) -> str:
        return "Detected" if self.detected else f"Decoded({self.codeword})"


DETECTED = DecodeOutcome(None)


def _solution_index(ch: Channel) -> dict:
    """y -> (minimum solution weight, codeword indices attaining it)."""
    index = ch._cache.get("solution_index")
    if index is None:
        index = {}
        errors = ch._errors_by_weight()
        for xi, x in enumerate(ch.codewords):
            row = ch._transfer_row(x)
            for (z, w), y in zip(errors, row):
                best = index.get(y)
                if best is None or w < best[0]:
                    index[y] = (w, {xi})
                elif w == best[0]:
                    best[1].add(xi)
        ch._cache["solution_index"] = index
    return index


def mwd(ch: Channel, y) -> DecodeOutcome:
    """Minimum weight decoding of a received word."""
    best = _solution_index(ch).get(y)
    if best is None or len(best[1]) != 1:
        return DETECTED
    return DecodeOutcome(ch.codewords[next(iter(best[1]))])


def _bounded_map(ch: Channel, c: int) -> dict:
    """y -> codeword index map of the radius-c balls; errors if they overlap."""
    maps = ch._cache.setdefault("bounded_maps", {})
    got = maps.get(c)
    if got is None:
        got = {}
        for xi in range(len(ch.codewords)):
            for y in _ball(ch, xi, c):
                other = got.get(y)
                if other is not None and other != xi:
                    raise InvalidDecoderError(
                        f"radius-{c} balls of {ch.codewords[other]!r} and "
                        f"{ch.codewords[xi]!r} intersect at {y!r}; bounded "
                        "decoding is undefined at this radius")
                got[y] = xi
        maps[c] = got
    return got


def mwd_bounded(ch: Channel, c: int, y) -> DecodeOutcome:
    """Bounded-distance decoding over disjoint radius-c balls."""
    if c < 0:
        raise ValueError("radius must be nonnegative")
    xi = _bounded_map(ch, c).get(y)
    return DETECTED if xi is None else DecodeOutcome(ch.codewords[xi])


def is_correctable(ch: Channel, z) -> bool:
    """Does minimum weight decoding recover every transmission under z?"""
    if not ch.errors.space.contains(z):
        raise ValueError(f"{z!r} is not in the error space")
    for x in ch.codewords:
        if mwd(ch, ch._transfer(x, z)).codeword != x:
            return False
    return True


def is_detectable(ch: Channel, z) -> bool:
    """Is z never mistaken for a different codeword's clean output?"""
    if not ch.errors.space.contains(z):
        raise ValueError(f"{z!r} is not in the error space")
    if z == ch.errors.space.zero():
        raise ValueError("detectability is defined for nonzero errors only")
    for x in ch.codewords:
        y = ch._transfer(x, z)
        owner = _bounded_map(ch, 0).get(y)
        if owner is not None and ch.codewords[owner] != x:
            return False
    return True


@dataclass(frozen=True)
class CapabilityReport:
    """How many errors the code corrects and detects, plus joint verdicts.

    ``max_correctable``/``max_detectable`` come from an increasing-weight
    scan of per-error classification.  ``all_correctable`` flags codes that
    correct the entire error space.  ``joint`` maps (c, c') to the joint
    error-correction verdict on a small grid.
    """

    max_correctable: int
    max_detectable: int
    all_correctable: bool
    all_detectable: bool
    joint: dict

    def to_dict(self) -> dict:
        return {
            "max_correctable": self.max_correctable,
            "max_detectable": self.max_detectable,
            "all_correctable": self.all_correctable,
            "all_detectable": self.all_detectable,
            "joint": {f"{c},{cp}": v for (c, cp), v in sorted(self.joint.items())},
        }


def capability(ch: Channel, joint_grid: tuple[int, int] | None = None) -> CapabilityReport:
    """Scan per-error classification into a capability report.

    Cross-checks the scan against the distance minima: the correction
    capability must equal floor((d0_min - 1)/2) and the detection
    capability d1_min - 1 whenever those minima are finite; disagreement
    raises :class:`InternalConsistencyError`.
    """
    by_weight = ch._errors_by_weight()
    t_c = ch.w_max
    all_corr = True
    for z, w in by_weight:
        if not is_correctable(ch, z):
            t_c = w - 1
            all_corr = False
            break
    t_d = ch.w_max
    all_det = True
    zero = ch.errors.space.zero()
    for z, w in by_weight:
        if z == zero:
            continue
        if not is_detectable(ch, z):
            t_d = w - 1
            all_det = False
            break

    report = minimum_distances(ch)
    if is_finite(report.d0_min) and t_c != (int(report.d0_min) - 1) // 2:
        raise InternalConsistencyError(
            f"correction capability {t_c} disagrees with "
            f"floor((d0_min-1)/2) = {(int(report.d0_min) - 1) // 2}")
    if is_finite(report.d1_min) and t_d != int(report.d1_min) - 1:
        raise InternalConsistencyError(
            f"detection capability {t_d} disagrees with d1_min-1 = "
            f"{int(report.d1_min) - 1}")

    if joint_grid is None:
        taus = [t for t in report.tau.values() if t is not None]
        hi = min(ch.w_max, max(taus + [t_c, t_d, 1]) + 1)
        joint_grid = (hi, hi)
    joint = {}
    for c in range(joint_grid[0] + 1):
        for cp in range(joint_grid[1] + 1):
            joint[(c, cp)] = is_joint_correcting(ch, c, cp)
    return CapabilityReport(t_c, t_d, all_corr, all_det, joint)


def is_joint_correcting(ch: Channel, c: int, cprime: int) -> bool:
    """(c, c') joint error-correction verdict, by two cross-checked routes.

    Route one tests, for every ordered pair of distinct codewords, that the
    radius-c ball of one misses the radius-(c+c') ball of the other; route
    two compares the refined minimum distance at c against c'+1.  They are
    equivalent by construction, so disagreement raises
    :class:`InternalConsistencyError`.
    """
    if c < 0 or cprime < 0:
        raise ValueError("radii must be nonnegative")
    n = len(ch.codewords)
    by_balls = True
    for i in range(n):
        for j in range(n):
            if i != j and _ball(ch, i, c) & _ball(ch, j, c + cprime):
                by_balls = False
                break
        if not by_balls:
            break

    d2c_min = min(_d2_refined_by_index(ch, i, j, c)
                  for i in range(n) for j in range(n) if i != j)
    by_refined = d2c_min >= cprime + 1
    if by_balls != by_refined:
        raise InternalConsistencyError(
            f"joint verdict mismatch at (c={c}, c'={cprime}): "
            f"balls say {by_balls}, refined minimum {d2c_min} says {by_refined}")
    return by_balls
