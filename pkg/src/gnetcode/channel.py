"""Generalized network channels.

A channel ties together a finite ordered codeword set C, an enumerable
error set E carrying a weight measure, an output set Y, and a total
transfer function F(x, z).  Construction verifies the zero-error
injectivity requirement (distinct codewords must stay distinguishable when
no error occurs) and rejects spaces too large for exhaustive work.

Output and error sets are vector or matrix spaces over one field, with
componentwise addition as the group operation; channels over other groups
are out of scope and rejected by the constructors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .field import Field
from . import matrices as mx
from .weights import WeightMeasure, HAMMING, RANK

DEFAULT_PAIR_BUDGET = 10 ** 6


class ConstructionError(ValueError):
    """A channel or space cannot be built from the given pieces."""


class BudgetError(RuntimeError):
    """An exhaustive computation would exceed the enumeration budget."""


@dataclass(frozen=True)
class VectorSpace:
    """All length-n row vectors over a field, as tuples."""

    field: Field
    length: int

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.length,)

    @property
    def size(self) -> int:
        return self.field.q ** self.length

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.length

    def elements(self):
        return itertools.product(range(self.field.q), repeat=self.length)

    def contains(self, v) -> bool:
        return (isinstance(v, tuple) and len(v) == self.length
                and all(isinstance(x, int) and 0 <= x < self.field.q for x in v))

    def add(self, u, v):
        return mx.vec_add(self.field, u, v)

    def sub(self, u, v):
        return mx.vec_sub(self.field, u, v)

    def neg(self, u):
        return mx.vec_neg(self.field, u)

    def scale(self, s, u):
        return mx.vec_scale(self.field, s, u)


@dataclass(frozen=True)
class MatrixSpace:
    """All rows-by-cols matrices over a field, as tuples of row tuples."""

    field: Field
    rows: int
    cols: int

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.rows, self.cols)

    @property
    def size(self) -> int:
        return self.field.q ** (self.rows * self.cols)

    def zero(self) -> mx.Matrix:
        return mx.zeros(self.rows, self.cols)

    def elements(self):
        q = self.field.q
        for flat in itertools.product(range(q), repeat=self.rows * self.cols):
            yield tuple(flat[i * self.cols:(i + 1) * self.cols] for i in range(self.rows))

    def contains(self, a) -> bool:
        return (isinstance(a, tuple) and len(a) == self.rows
                and all(isinstance(r, tuple) and len(r) == self.cols for r in a)
                and all(isinstance(x, int) and 0 <= x < self.field.q for r in a for x in r))

    def add(self, a, b):
        return mx.mat_add(self.field, a, b)

    def sub(self, a, b):
        return mx.mat_sub(self.field, a, b)

    def neg(self, a):
        return mx.mat_neg(self.field, a)

    def scale(self, s, a):
        return mx.mat_scale(self.field, s, a)


@dataclass(frozen=True)
class ErrorModel:
    """An enumerable error space together with its weight measure."""

    space: VectorSpace | MatrixSpace
    measure: WeightMeasure

    def __post_init__(self):
        self.measure.check_shape(self.space.shape)

    def weight(self, z) -> int:
        return self.measure.weight(self.space.field, z)

    @property
    def max_weight(self) -> int:
        return self.measure.max_weight(self.space.shape)


@dataclass(frozen=True)
class ChannelClass:
    """Linearity verdicts for a channel, with a counterexample on failure.

    ``witness`` carries the first counterexample found, tagged by which
    requirement broke; ``linear`` implies ``error_linear``.
    """

    error_linear: bool
    linear: bool
    witness: tuple | None = None


class Channel:
    """A concrete channel with exhaustively enumerable pieces.

    Use the module-level constructors (:func:`classical_channel`,
    :func:`matrix_channel`, :func:`table_channel`) or
    :func:`gnetcode.network.compile_network` rather than instantiating
    directly, unless you bring your own transfer callable.
    """

    def __init__(self, field: Field, codewords, errors: ErrorModel, outputs,
                 transfer, kind: str = "custom",
                 pair_budget: int = DEFAULT_PAIR_BUDGET):
        codewords = tuple(codewords)
        if len(codewords) < 2:
            raise ConstructionError("a code needs at least two codewords")
        if len(set(codewords)) != len(codewords):
            raise ConstructionError("codewords must be distinct")
        if errors.space.field != field or outputs.field != field:
            raise ConstructionError("codeword, error and output spaces must share one field")
        if len(codewords) * errors.space.size > pair_budget:
            raise BudgetError(
                f"{len(codewords)} codewords x {errors.space.size} errors exceeds "
                f"the pair budget {pair_budget}")
        self.field = field
        self.codewords = codewords
        self.errors = errors
        self.outputs = outputs
        self.kind = kind
        self.pair_budget = pair_budget
        self._transfer = transfer
        self._cache: dict = {}
        zero = errors.space.zero()
        seen: dict = {}
        for x in codewords:
            y = transfer(x, zero)
            if not outputs.contains(y):
                raise ConstructionError(
                    f"transfer output {y!r} is outside the declared output space")
            if y in seen:
                raise ConstructionError(
                    f"codewords {seen[y]!r} and {x!r} collide at zero error (both map to {y!r})")
            seen[y] = x
        self._zero_outputs = {x: transfer(x, zero) for x in codewords}

    # -- public surface ------------------------------------------------------

    def evaluate(self, x, z):
        """F(x, z), with membership validation."""
        if x not in self.codewords:
            raise ValueError(f"{x!r} is not a codeword of this channel")
        if not self.errors.space.contains(z):
            raise ValueError(f"{z!r} is not in the error space {self.errors.space}")
        return self._transfer(x, z)

    def zero_output(self, x):
        return self._zero_outputs[x]

    @property
    def w_max(self) -> int:
        return self.errors.max_weight

    def __repr__(self) -> str:
        return (f"Channel(kind={self.kind!r}, field={self.field!r}, "
                f"|C|={len(self.codewords)}, |E|={self.errors.space.size})")

    # -- internal fast paths (no membership validation) ----------------------

    def _errors_by_weight(self):
        """All errors as (z, weight), nondecreasing weight, stable within a class."""
        cached = self._cache.get("errors_by_weight")
        if cached is None:
            weigh = self.errors.weight
            indexed = [(z, weigh(z)) for z in self.errors.space.elements()]
            cached = sorted(indexed, key=lambda zw: zw[1])  # stable: keeps enumeration order
            self._cache["errors_by_weight"] = cached
        return cached

    def _transfer_row(self, x):
        """Outputs of x against every error, aligned with _errors_by_weight."""
        rows = self._cache.setdefault("transfer_rows", {})
        row = rows.get(x)
        if row is None:
            transfer = self._transfer
            row = [transfer(x, z) for z, _ in self._errors_by_weight()]
            rows[x] = row
        return row


def enumerate_errors_up_to(ch: Channel, c: int) -> list[tuple]:
    """Every error of weight <= c exactly once, as (z, weight) pairs.

    Ordered by nondecreasing weight; within one weight class the error
    space's enumeration order is kept, so the output is deterministic and
    the weight-<= c prefix is shared with any larger radius.
    """
    if c < 0:
        raise ValueError("radius must be nonnegative")
    out = []
    for z, w in ch._errors_by_weight():
        if w > c:
            break
        out.append((z, w))
    return out


def classify(ch: Channel, pair_budget: int | None = None) -> ChannelClass:
    """Decide error-linearity and linearity of a channel, exhaustively.

    The only decomposition consistent with a homomorphic error map is
    f(x) = F(x, 0) and h(z) = F(x0, z) - F(x0, 0), so that candidate is
    checked against every (codeword, error) pair, and h against every
    error pair.  The linear verdict additionally requires the codeword set
    to form a subspace on which f is additive and scalar-homogeneous.

    This classifies the transfer function only; the weight measure's side
    of the error-linearity hypotheses (subadditivity, inverse invariance,
    decomposability) is checked separately by
    :func:`gnetcode.weights.verify_weight_axioms`, and holds for all three
    built-in measures.
    """
    budget = pair_budget if pair_budget is not None else ch.pair_budget
    out = ch.outputs
    errs = ch.errors.space
    x0 = ch.codewords[0]
    base = ch.zero_output(x0)
    errors = [z for z, _ in ch._errors_by_weight()]
    h = {}
    row0 = ch._transfer_row(x0)
    for z, y in zip(errors, row0):
        h[z] = out.sub(y, base)

    # F(x, z) must equal f(x) + h(z) everywhere.
    for x in ch.codewords:
        fx = ch.zero_output(x)
        row = ch._transfer_row(x)
        for z, y in zip(errors, row):
            if y != out.add(fx, h[z]):
                return ChannelClass(False, False, ("transfer-not-additive", x, z))

    # h must be a group homomorphism on the error space.
    if len(errors) * len(errors) > budget:
        raise BudgetError(
            f"homomorphism check needs {len(errors) ** 2} pairs, budget is {budget}")
    for za in errors:
        ha = h[za]
        for zb in errors:
            if h[errs.add(za, zb)] != out.add(ha, h[zb]):
                return ChannelClass(False, False, ("error-map-not-homomorphic", za, zb))

    linear, witness = _codeword_map_linear(ch)
    return ChannelClass(True, linear, witness)


def _codeword_map_linear(ch: Channel):
    """Is C a subspace with x -> F(x, 0) additive and scalar-homogeneous?"""
    first = ch.codewords[0]
    if isinstance(first[0], tuple):
        add, scale = mx.mat_add, mx.mat_scale
        zero = mx.zeros(len(first), len(first[0]))
    else:
        add, scale = mx.vec_add, mx.vec_scale
        zero = (0,) * len(first)
    f = ch.field
    cwset = set(ch.codewords)
    if zero not in cwset:
        return False, ("code-not-subspace", zero)
    out = ch.outputs
    for x1 in ch.codewords:
        y1 = ch.zero_output(x1)
        for s in range(f.q):
            sx = scale(f, s, x1)
            if sx not in cwset:
                return False, ("code-not-subspace", sx)
            if ch.zero_output(sx) != out.scale(s, y1):
                return False, ("codeword-map-not-homogeneous", s, x1)
        for x2 in ch.codewords:
            x12 = add(f, x1, x2)
            if x12 not in cwset:
                return False, ("code-not-subspace", x12)
            if ch.zero_output(x12) != out.add(y1, ch.zero_output(x2)):
                return False, ("codeword-map-not-additive", x1, x2)
    return True, None


# -- constructors ------------------------------------------------------------

def classical_channel(field: Field, codewords,
                      pair_budget: int = DEFAULT_PAIR_BUDGET) -> Channel:
    """Point-to-point channel F(x, z) = x + z under the Hamming weight."""
    codewords = tuple(tuple(x) for x in codewords)
    if not codewords:
        raise ConstructionError("empty codeword list")
    n = len(codewords[0])
    space = VectorSpace(field, n)
    for x in codewords:
        if not space.contains(x):
            raise ConstructionError(f"codeword {x!r} is not a length-{n} vector over {field}")
    errors = ErrorModel(space, WeightMeasure(HAMMING))
    return Channel(field, codewords, errors, space,
                   lambda x, z: mx.vec_add(field, x, z),
                   kind="classical", pair_budget=pair_budget)


def matrix_channel(field: Field, codewords, a: mx.Matrix, b: mx.Matrix,
                   measure: WeightMeasure | None = None,
                   pair_budget: int = DEFAULT_PAIR_BUDGET) -> Channel:
    """Linear channel F(x, z) = x*A + z*B.

    With vector codewords the errors are vectors under the Hamming weight;
    with matrix codewords they are matrices under the rank weight (or
    sum-rank, when the measure says so).  A and B act by right
    multiplication and must land in one output space.
    """
    codewords = tuple(tuple(tuple(r) for r in x) if isinstance(x[0], (tuple, list))
                      else tuple(x) for x in codewords)
    a = tuple(tuple(r) for r in a)
    b = tuple(tuple(r) for r in b)
    ka, n = mx.dims(a)
    u, nb = mx.dims(b)
    if n != nb:
        raise ConstructionError(
            f"A ({ka}x{n}) and B ({u}x{nb}) must have the same number of columns")
    matrix_code = isinstance(codewords[0][0], tuple)
    if matrix_code:
        m = len(codewords[0])
        if any(mx.dims(x) != (m, ka) for x in codewords):
            raise ConstructionError(f"matrix codewords must all be {m}x{ka}")
        err_space = MatrixSpace(field, m, u)
        out_space = MatrixSpace(field, m, n)
        measure = measure or WeightMeasure(RANK)
        if measure.kind == HAMMING:
            raise ConstructionError("matrix codewords need a rank or sum-rank weight")

        def transfer(x, z):
            return mx.mat_add(field, mx.mat_mul(field, x, a), mx.mat_mul(field, z, b))
    else:
        if any(len(x) != ka for x in codewords):
            raise ConstructionError(f"vector codewords must have length {ka}")
        err_space = VectorSpace(field, u)
        out_space = VectorSpace(field, n)
        measure = measure or WeightMeasure(HAMMING)
        if measure.kind != HAMMING:
            raise ConstructionError(f"vector errors only support the Hamming weight, "
                                    f"got {measure.kind}")

        def transfer(x, z):
            return mx.vec_add(field, mx.vec_mat_mul(field, x, a),
                              mx.vec_mat_mul(field, z, b))

    errors = ErrorModel(err_space, measure)
    return Channel(field, codewords, errors, out_space, transfer,
                   kind="matrix", pair_budget=pair_budget)


def table_channel(field: Field, codewords, error_length: int, output_length: int,
                  table: dict, pair_budget: int = DEFAULT_PAIR_BUDGET) -> Channel:
    """Channel given by an exhaustive table (x, z) -> y.

    The table must be total over the codeword list times the full error
    space F_q^error_length, with outputs in F_q^output_length; errors carry
    the Hamming weight.
    """
    codewords = tuple(tuple(x) for x in codewords)
    err_space = VectorSpace(field, error_length)
    out_space = VectorSpace(field, output_length)
    table = {(tuple(x), tuple(z)): tuple(y) for (x, z), y in table.items()}
    for x in codewords:
        for z in err_space.elements():
            y = table.get((x, z))
            if y is None:
                raise ConstructionError(f"table is missing the entry for ({x!r}, {z!r})")
            if not out_space.contains(y):
                raise ConstructionError(f"table output {y!r} for ({x!r}, {z!r}) is not a "
                                        f"length-{output_length} vector over {field}")
    return Channel(field, codewords, ErrorModel(err_space, WeightMeasure(HAMMING)),
                   out_space, lambda x, z: table[(x, z)],
                   kind="table", pair_budget=pair_budget)
