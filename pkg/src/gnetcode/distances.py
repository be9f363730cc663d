"""Decoding balls and the four code distances, by exact enumeration.

The decoding ball of radius c around a codeword x is the set of received
words reachable from x under errors of weight at most c.  Four distances
between codewords x1, x2 are derived from ball intersections:

* correction distance   d0: min c1+c2 over intersecting balls with the
  radii balanced (|c1-c2| <= 1);
* detection distance    d1: min c with the zero-radius ball of x1 meeting
  the radius-c ball of x2 (asymmetric in general);
* joint distance        d2: min c1+c2 over intersecting balls with
  unconstrained radii (symmetric);
* refined joint distance d2[c]: min c' with the radius-c ball of x1
  meeting the radius-(c+c') ball of x2, for a fixed correction radius c.

For channels whose codeword images are disjoint no radii ever intersect;
such distances are reported as the distinguished value :data:`INFINITE`
(the ordinary definitions silently assume intersections exist).  INFINITE
propagates through minima, and the thresholds tau = floor((d0+1)/2) and
cstar = floor(d0/2) are undefined for it.

Balls are built incrementally by weight shell and memoized per channel;
the test suite anchors this engine against a cache-free brute-force
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .channel import Channel

INFINITE = float("inf")


def is_finite(value) -> bool:
    return value != INFINITE


class ThresholdUndefinedError(ValueError):
    """tau/cstar requested for a codeword pair with no intersecting balls."""


@dataclass(frozen=True)
class DecodingBall:
    codeword: tuple
    radius: int
    members: frozenset


def _cw_index(ch: Channel, x) -> int:
    try:
        return ch.codewords.index(x)
    except ValueError:
        raise ValueError(f"{x!r} is not a codeword of this channel") from None


def _ball(ch: Channel, xi: int, c: int) -> frozenset:
    """Members of the radius-c ball around codeword index xi (memoized).

    Cumulative sets are grown one weight shell at a time, so asking for a
    larger radius only pays for the new shells.
    """
    c = min(c, ch.w_max)
    store = ch._cache.setdefault("balls", {})
    cum = store.get(xi)
    if cum is None:
        cum = []
        store[xi] = cum
    if len(cum) > c:
        return cum[c]
    errors = ch._errors_by_weight()
    row = ch._transfer_row(ch.codewords[xi])
    bounds = ch._cache.get("weight_bounds")
    if bounds is None:
        # first index whose weight exceeds w, for each w
        bounds = []
        pos = 0
        for w in range(ch.w_max + 1):
            while pos < len(errors) and errors[pos][1] <= w:
                pos += 1
            bounds.append(pos)
        ch._cache["weight_bounds"] = bounds
    members = set(cum[-1]) if cum else set()
    start = bounds[len(cum) - 1] if cum else 0
    for w in range(len(cum), c + 1):
        members.update(row[start:bounds[w]])
        start = bounds[w]
        cum.append(frozenset(members))
    return cum[c]


def decoding_ball(ch: Channel, x, c: int) -> DecodingBall:
    """The decoding ball of radius c around codeword x."""
    if c < 0:
        raise ValueError("radius must be nonnegative")
    xi = _cw_index(ch, x)
    return DecodingBall(x, c, _ball(ch, xi, c))


def dist_d0(ch: Channel, x1, x2):
    """Error correction distance: balanced-radii ball intersection."""
    return _d0_by_index(ch, _cw_index(ch, x1), _cw_index(ch, x2))


def _d0_by_index(ch: Channel, i1: int, i2: int):
    if i1 == i2:
        return 0
    wm = ch.w_max
    for s in range(2 * wm + 1):
        c1, c2 = (s + 1) // 2, s // 2
        if c1 > wm:
            break
        if _ball(ch, i1, c1) & _ball(ch, i2, c2):
            return s
        if c1 != c2 and _ball(ch, i1, c2) & _ball(ch, i2, c1):
            return s
    return INFINITE


def dist_d1(ch: Channel, x1, x2):
    """Error detection distance: first radius of x2's ball reaching F(x1, 0)."""
    return _d1_by_index(ch, _cw_index(ch, x1), _cw_index(ch, x2))


def _d1_by_index(ch: Channel, i1: int, i2: int):
    target = ch.zero_output(ch.codewords[i1])
    for c in range(ch.w_max + 1):
        if target in _ball(ch, i2, c):
            return c
    return INFINITE


def dist_d2(ch: Channel, x1, x2):
    """Joint distance: unconstrained-radii ball intersection."""
    return _d2_by_index(ch, _cw_index(ch, x1), _cw_index(ch, x2))


def _d2_by_index(ch: Channel, i1: int, i2: int):
    if i1 == i2:
        return 0
    wm = ch.w_max
    for s in range(2 * wm + 1):
        for c1 in range(max(0, s - wm), min(s, wm) + 1):
            if _ball(ch, i1, c1) & _ball(ch, i2, s - c1):
                return s
    return INFINITE


def dist_d2_refined(ch: Channel, x1, x2, c: int):
    """Refined joint distance for a fixed correction radius c."""
    if c < 0:
        raise ValueError("correction radius must be nonnegative")
    return _d2_refined_by_index(ch, _cw_index(ch, x1), _cw_index(ch, x2), c)


def _d2_refined_by_index(ch: Channel, i1: int, i2: int, c: int):
    left = _ball(ch, i1, c)
    for cp in range(ch.w_max - min(c, ch.w_max) + 1):
        if left & _ball(ch, i2, c + cp):
            return cp
    return INFINITE


def tau_and_cstar(ch: Channel, x1, x2) -> tuple[int, int]:
    """Radius thresholds floor((d0+1)/2) and floor(d0/2) for a pair."""
    d0 = dist_d0(ch, x1, x2)
    if not is_finite(d0):
        raise ThresholdUndefinedError(
            f"the balls of {x1!r} and {x2!r} never intersect, so the "
            "radius thresholds are undefined")
    return (d0 + 1) // 2, d0 // 2


@dataclass
class DistanceReport:
    """All distances of a channel, per ordered codeword pair plus minima.

    Pair tables are keyed by codeword index pairs (i, j), i != j.  Refined
    tables hold d2[c] for c = 0..tau(pair) (a single c=0 entry when the
    pair's distances are infinite).  The scalar ``d2_min_refined`` covers
    c = 0..max tau.  Infinite entries are reported as the float infinity.
    """

    codewords: tuple
    d0: dict
    d1: dict
    d2: dict
    d2_refined: dict
    tau: dict
    cstar: dict
    d0_min: float
    d1_min: float
    d2_min: float
    d2_min_refined: tuple

    def pairs(self):
        n = len(self.codewords)
        return [(i, j) for i in range(n) for j in range(n) if i != j]

    def to_dict(self) -> dict:
        def enc(v):
            if is_finite(v):
                return {"value": int(v), "infinite": False}
            return {"value": None, "infinite": True}

        def key(i, j):
            return f"{i},{j}"

        return {
            "codewords": [list(x) if not isinstance(x[0], tuple)
                          else [list(r) for r in x] for x in self.codewords],
            "pairs": {
                key(i, j): {
                    "d0": enc(self.d0[i, j]),
                    "d1": enc(self.d1[i, j]),
                    "d2": enc(self.d2[i, j]),
                    "d2_refined": [enc(v) for v in self.d2_refined[i, j]],
                    "tau": self.tau[i, j],
                    "cstar": self.cstar[i, j],
                } for (i, j) in self.pairs()
            },
            "d0_min": enc(self.d0_min),
            "d1_min": enc(self.d1_min),
            "d2_min": enc(self.d2_min),
            "d2_min_refined": [enc(v) for v in self.d2_min_refined],
        }

    def render_text(self) -> str:
        def fmt(v):
            return "inf" if not is_finite(v) else str(v)

        lines = ["pair distances (x1 -> x2):"]
        for (i, j) in self.pairs():
            refined = ", ".join(fmt(v) for v in self.d2_refined[i, j])
            tau = self.tau[i, j]
            lines.append(
                f"  {self.codewords[i]} -> {self.codewords[j]}: "
                f"d0={fmt(self.d0[i, j])} d1={fmt(self.d1[i, j])} "
                f"d2={fmt(self.d2[i, j])} tau={tau if tau is not None else '-'} "
                f"cstar={self.cstar[i, j] if self.cstar[i, j] is not None else '-'} "
                f"d2[c]=[{refined}]")
        lines.append(f"minima: d0_min={fmt(self.d0_min)} d1_min={fmt(self.d1_min)} "
                     f"d2_min={fmt(self.d2_min)}")
        lines.append("d2_min[c]: " + ", ".join(
            f"c={c}:{fmt(v)}" for c, v in enumerate(self.d2_min_refined)))
        return "\n".join(lines)


def minimum_distances(ch: Channel) -> DistanceReport:
    """Compute every distance table and the code minima (memoized).

    Minima scan ordered distinct pairs throughout; for the symmetric d0
    and d2 this coincides with the unordered scan.  A minimum is infinite
    only when every entry is.
    """
    cached = ch._cache.get("distance_report")
    if cached is not None:
        return cached
    n = len(ch.codewords)
    d0, d1, d2, refined, tau, cstar = {}, {}, {}, {}, {}, {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            v0 = _d0_by_index(ch, i, j)
            d0[i, j] = v0
            d1[i, j] = _d1_by_index(ch, i, j)
            d2[i, j] = _d2_by_index(ch, i, j)
            if is_finite(v0):
                t = (int(v0) + 1) // 2
                tau[i, j] = t
                cstar[i, j] = int(v0) // 2
                refined[i, j] = tuple(_d2_refined_by_index(ch, i, j, c)
                                      for c in range(t + 1))
            else:
                tau[i, j] = None
                cstar[i, j] = None
                refined[i, j] = (INFINITE,)
    taus = [t for t in tau.values() if t is not None]
    c_hi = max(taus) if taus else 0
    d2_min_refined = tuple(
        min(_d2_refined_by_index(ch, i, j, c) for (i, j) in d0)
        for c in range(c_hi + 1))
    report = DistanceReport(
        codewords=ch.codewords,
        d0=d0, d1=d1, d2=d2, d2_refined=refined, tau=tau, cstar=cstar,
        d0_min=min(d0.values()), d1_min=min(d1.values()), d2_min=min(d2.values()),
        d2_min_refined=d2_min_refined)
    ch._cache["distance_report"] = report
    return report
