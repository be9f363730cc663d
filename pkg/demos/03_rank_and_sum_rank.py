"""Matrix channels under the rank and sum-rank weights.

Noncoherent linear network transmission is modeled as y = x*A + z*B on
matrix words, with errors weighed by column rank (one shot) or by the sum
of per-block ranks (several shots).  Both are linear channels, so the
distance collapse applies, and both weights admit the constructive
two-part decompositions the collapse proof needs.
"""

import itertools

from gnetcode import (Field, WeightMeasure, RANK, SUM_RANK, matrix_channel,
                      classify, minimum_distances, rank_weight, sum_rank_weight,
                      decompose_sum_rank, run_all)
from gnetcode import matrices as mx

gf2 = Field(2)

print("=== weights ===")
z = ((1, 0, 1, 0), (0, 1, 0, 0))
print("matrix:", z)
print("rank weight          :", rank_weight(gf2, z))
print("sum-rank, blocks (2,2):", sum_rank_weight(gf2, z, (2, 2)))

# Split z into two parts of prescribed rank weights.
z1, z2 = decompose_sum_rank(gf2, z, 2, 1, (2, 2))
print("split 2+1:", z1, "+", z2)
print("weights  :", sum_rank_weight(gf2, z1, (2, 2)), "+",
      sum_rank_weight(gf2, z2, (2, 2)))
assert mx.mat_add(gf2, z1, z2) == z

print("\n=== rank-metric channel ===")
# codewords: all 2x1 matrices; A injects them into 2 output columns, B mixes
# the 2x2 error matrices in.
codewords = [((a,), (b,)) for a in range(2) for b in range(2)]
a = ((1, 1),)
b = ((1, 0), (0, 1))
ch = matrix_channel(gf2, codewords, a, b, WeightMeasure(RANK))
verdict = classify(ch)
print("error_linear:", verdict.error_linear, " linear:", verdict.linear)
report = minimum_distances(ch)
print("minima: d0 =", report.d0_min, " d1 =", report.d1_min, " d2 =", report.d2_min)

print("\n=== sum-rank channel (two independent shots) ===")
a2 = mx.block_diag([((1,),), ((1,),)])
b2 = mx.block_diag([((1,),), ((1,),)])
codewords2 = [(row,) for row in itertools.product(range(2), repeat=2)]  # 1x2 matrices
ch2 = matrix_channel(gf2, codewords2, a2, b2, WeightMeasure(SUM_RANK, (1, 1)))
print("channel:", ch2)
print(minimum_distances(ch2).render_text())

print("\nledger (sum-rank channel):")
print(run_all(ch2).render_text())
