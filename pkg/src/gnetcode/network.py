"""Coherent single-source single-sink DAG networks.

A network carries one field symbol per edge.  Source out-edges emit the
codeword coordinates in declared edge order; every other edge's symbol is
produced by a total local table over the tail node's incoming symbols
(tables may be nonlinear).  The error vector adds one field symbol per
edge: z_e is added, in the field, to whatever the node put on edge e, and
downstream nodes read the corrupted symbol.  The received word is the
tuple of symbols on the sink's incoming edges, in declared order.

Compiling a network yields a :class:`~gnetcode.channel.Channel` whose
error space is F_q^|E| under the Hamming weight.

The built-in :func:`toy_example` is a 6-node, 9-edge network over GF(3)
with two nonlinear node tables and the two-word code {(0,0,0), (1,1,1)}.
Its interest is that the error-correction and error-detection distances
differ (3 versus 2), so it exercises every nonlinear code path.  Note the
edge list includes (a,b) and the edges into the sink are (a,t), (d,t),
(c,t); error vectors are indexed by this declared edge order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .field import Field
from .channel import (Channel, ConstructionError, ErrorModel, VectorSpace,
                      DEFAULT_PAIR_BUDGET, BudgetError)
from .weights import WeightMeasure, HAMMING
from . import matrices as mx

Edge = tuple[str, str]


class NonlinearNetworkError(ValueError):
    """A local table is not linear over the field."""


@dataclass(frozen=True)
class NetworkSpec:
    """Topology plus per-edge local encoding tables.

    ``local_functions`` maps each non-source edge (tail, head) to a total
    table from the tuple of the tail's incoming symbols (incoming edges in
    declared edge-list order) to one field symbol.  Source out-edges carry
    codeword coordinates directly and take no table.
    """

    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]
    source: str
    sink: str
    local_functions: dict = dc_field(default_factory=dict)

    def incoming(self, node: str) -> list[int]:
        return [i for i, (_, head) in enumerate(self.edges) if head == node]

    def outgoing(self, node: str) -> list[int]:
        return [i for i, (tail, _) in enumerate(self.edges) if tail == node]


def _validate_and_order(spec: NetworkSpec, q: int):
    """Spec checks plus a deterministic edge processing order.

    Returns (program, sink_inputs, source_out_count) where program is a
    list of (edge_index, coord_or_None, table_or_None, input_edge_indices).
    """
    names = set(spec.nodes)
    if len(names) != len(spec.nodes):
        raise ConstructionError("duplicate node names")
    for who, node in (("source", spec.source), ("sink", spec.sink)):
        if node not in names:
            raise ConstructionError(f"{who} {node!r} is not a declared node")
    for tail, head in spec.edges:
        if tail not in names or head not in names:
            raise ConstructionError(f"edge ({tail}, {head}) references an unknown node")
        if tail == head:
            raise ConstructionError(f"self-loop on node {tail!r}")
    if len(set(spec.edges)) != len(spec.edges):
        raise ConstructionError("duplicate edges (parallel edges are not supported)")

    # Kahn's algorithm over nodes; ties broken by declaration order.
    indeg = {n: 0 for n in spec.nodes}
    for _, head in spec.edges:
        indeg[head] += 1
    order: list[str] = []
    ready = [n for n in spec.nodes if indeg[n] == 0]
    while ready:
        node = ready.pop(0)
        order.append(node)
        for ei in spec.outgoing(node):
            head = spec.edges[ei][1]
            indeg[head] -= 1
            if indeg[head] == 0:
                ready.append(head)
    if len(order) != len(spec.nodes):
        cyclic = sorted(set(spec.nodes) - set(order))
        raise ConstructionError(f"network graph has a cycle through {cyclic}")

    for node in spec.nodes:
        if node in (spec.source, spec.sink):
            continue
        if not spec.incoming(node):
            raise ConstructionError(f"node {node!r} has no incoming edge")
    sink_inputs = spec.incoming(spec.sink)
    if not sink_inputs:
        raise ConstructionError(f"sink {spec.sink!r} has no incoming edge")

    source_out = spec.outgoing(spec.source)
    if not source_out:
        raise ConstructionError(f"source {spec.source!r} has no outgoing edge")

    program = []
    for node in order:
        ins = spec.incoming(node)
        for ei in spec.outgoing(node):
            edge = spec.edges[ei]
            if node == spec.source:
                program.append((ei, source_out.index(ei), None, ()))
                continue
            table = spec.local_functions.get(edge)
            if table is None:
                raise ConstructionError(f"no local function for edge {edge}")
            table = {tuple(k): v for k, v in table.items()}
            expected = q ** len(ins)
            if len(table) != expected:
                raise ConstructionError(
                    f"local table for edge {edge} must be total over "
                    f"{expected} input tuples, has {len(table)}")
            for key, value in table.items():
                if len(key) != len(ins) or any(not 0 <= s < q for s in key):
                    raise ConstructionError(f"bad input tuple {key} in table for {edge}")
                if not 0 <= value < q:
                    raise ConstructionError(f"bad output {value} in table for {edge}")
            program.append((ei, None, table, tuple(ins)))
    for edge in spec.local_functions:
        if tuple(edge) not in spec.edges:
            raise ConstructionError(f"local function for unknown edge {edge}")
        if tuple(edge) in {spec.edges[ei] for ei in source_out}:
            raise ConstructionError(f"source edge {edge} carries a codeword "
                                    "coordinate and takes no local function")
    return program, sink_inputs, len(source_out)


def compile_network(net_field: Field, spec: NetworkSpec, codewords,
                    pair_budget: int = DEFAULT_PAIR_BUDGET) -> Channel:
    """Compile a network into a channel over F_q^|E| with Hamming errors."""
    program, sink_inputs, m = _validate_and_order(spec, net_field.q)
    codewords = tuple(tuple(x) for x in codewords)
    for x in codewords:
        if len(x) != m or any(not 0 <= s < net_field.q for s in x):
            raise ConstructionError(
                f"codeword {x!r} must assign one symbol to each of the "
                f"{m} source out-edges")
    nedges = len(spec.edges)
    add = net_field.add_table

    def transfer(x, z):
        sym = [0] * nedges
        for ei, coord, table, ins in program:
            base = x[coord] if table is None else table[tuple(sym[i] for i in ins)]
            sym[ei] = add[base][z[ei]]
        return tuple(sym[i] for i in sink_inputs)

    errors = ErrorModel(VectorSpace(net_field, nedges), WeightMeasure(HAMMING))
    outputs = VectorSpace(net_field, len(sink_inputs))
    return Channel(net_field, codewords, errors, outputs, transfer,
                   kind="network", pair_budget=pair_budget)


def linear_transfer_matrices(net_field: Field, spec: NetworkSpec,
                             pair_budget: int = DEFAULT_PAIR_BUDGET):
    """Transfer matrices (F_st, H_t) of a linear network.

    Every local table must be a linear map over the field (checked
    exhaustively per node); otherwise a :class:`NonlinearNetworkError`
    names the offending node and edge.  The returned matrices satisfy
    F(x, z) = x*F_st + z*H_t, verified exhaustively against the
    network evaluation over the full message and error spaces.
    """
    program, sink_inputs, m = _validate_and_order(spec, net_field.q)
    q = net_field.q
    nedges = len(spec.edges)

    coeff_x: dict[int, tuple] = {}
    coeff_z: dict[int, tuple] = {}
    for ei, coord, table, ins in program:
        if table is None:
            ax = [0] * m
            ax[coord] = 1
            bz = [0] * nedges
            bz[ei] = 1
            coeff_x[ei], coeff_z[ei] = tuple(ax), tuple(bz)
            continue
        lam = _table_coefficients(net_field, spec.edges[ei], table, len(ins))
        ax = (0,) * m
        bz = (0,) * nedges
        for j, li in enumerate(lam):
            if li == 0:
                continue
            src = ins[j]
            ax = mx.vec_add(net_field, ax, mx.vec_scale(net_field, li, coeff_x[src]))
            bz = mx.vec_add(net_field, bz, mx.vec_scale(net_field, li, coeff_z[src]))
        unit = [0] * nedges
        unit[ei] = 1
        coeff_x[ei] = ax
        coeff_z[ei] = mx.vec_add(net_field, bz, tuple(unit))

    f_st = tuple(tuple(coeff_x[ei][i] for ei in sink_inputs) for i in range(m))
    h_t = tuple(tuple(coeff_z[ei][i] for ei in sink_inputs) for i in range(nedges))

    # Exhaustive agreement check against direct evaluation.
    if q ** m * q ** nedges > pair_budget:
        raise BudgetError("matrix agreement check exceeds the pair budget")
    msg_space = VectorSpace(net_field, m)
    err_space = VectorSpace(net_field, nedges)
    add = net_field.add_table
    for x in msg_space.elements():
        xf = mx.vec_mat_mul(net_field, x, f_st)
        for z in err_space.elements():
            sym = [0] * nedges
            for ei, coord, table, ins in program:
                base = x[coord] if table is None else table[tuple(sym[i] for i in ins)]
                sym[ei] = add[base][z[ei]]
            direct = tuple(sym[i] for i in sink_inputs)
            linear = mx.vec_add(net_field, xf, mx.vec_mat_mul(net_field, z, h_t))
            if direct != linear:
                raise AssertionError(  # pragma: no cover - internal consistency
                    f"matrix form disagrees with evaluation at x={x}, z={z}")
    return f_st, h_t


def _table_coefficients(net_field: Field, edge: Edge, table: dict, indeg: int):
    """Linear coefficients of a local table, or raise NonlinearNetworkError."""
    table = {tuple(k): v for k, v in table.items()}
    zero_in = (0,) * indeg
    if table[zero_in] != 0:
        raise NonlinearNetworkError(
            f"local function at node {edge[0]!r} for edge {edge} maps 0 to "
            f"{table[zero_in]}, so it is not linear")
    lam = []
    for j in range(indeg):
        unit = tuple(1 if i == j else 0 for i in range(indeg))
        lam.append(table[unit])
    for key in itertools.product(range(net_field.q), repeat=indeg):
        acc = 0
        for li, s in zip(lam, key):
            acc = net_field.add(acc, net_field.mul(li, s))
        if table[key] != acc:
            raise NonlinearNetworkError(
                f"local function at node {edge[0]!r} for edge {edge} is not "
                f"linear: fails at inputs {key}")
    return lam


def toy_example() -> tuple[Field, NetworkSpec, tuple]:
    """The built-in nonlinear fixture network over GF(3).

    Topology: source s feeds a, b, c; a copies its symbol to b and to the
    sink; c copies to d and to the sink; b combines (s->b, a->b) through a
    nonlinear table onto b->d; d combines (b->d, c->d) through a second
    nonlinear table onto d->t.  Edge order (and so error coordinate order):
    (s,a), (s,b), (s,c), (a,b), (b,d), (c,d), (a,t), (d,t), (c,t).
    The code is {(0,0,0), (1,1,1)}.
    """
    gf3 = Field(3)
    copy1 = {(v,): v for v in range(3)}
    b_table = {(0, 0): 0, (0, 1): 0, (0, 2): 0,
               (1, 0): 2, (1, 1): 1, (1, 2): 0,
               (2, 0): 0, (2, 1): 0, (2, 2): 0}
    d_table = {(0, 0): 0, (0, 1): 0, (0, 2): 0,
               (1, 0): 1, (1, 1): 1, (1, 2): 0,
               (2, 0): 0, (2, 1): 1, (2, 2): 0}
    spec = NetworkSpec(
        nodes=("s", "a", "b", "c", "d", "t"),
        edges=(("s", "a"), ("s", "b"), ("s", "c"), ("a", "b"), ("b", "d"),
               ("c", "d"), ("a", "t"), ("d", "t"), ("c", "t")),
        source="s",
        sink="t",
        local_functions={
            ("a", "b"): copy1, ("a", "t"): copy1,
            ("c", "d"): copy1, ("c", "t"): copy1,
            ("b", "d"): b_table,
            ("d", "t"): d_table,
        },
    )
    return gf3, spec, ((0, 0, 0), (1, 1, 1))


def toy_channel(pair_budget: int = DEFAULT_PAIR_BUDGET) -> Channel:
    """The toy network compiled into a channel."""
    gf3, spec, code = toy_example()
    return compile_network(gf3, spec, code, pair_budget=pair_budget)
