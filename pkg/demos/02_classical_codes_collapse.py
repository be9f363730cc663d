"""Classical block codes as channels: all the distances collapse.

A point-to-point channel y = x + z under the Hamming weight is linear, so
correction, detection and joint distances coincide pair by pair and all
three are metrics.  Shown on the length-3 repetition code and the [7,4]
binary Hamming code.
"""

from gnetcode import (Field, classical_channel, classify, minimum_distances,
                      capability, check_metric, mwd, run_all)

gf2 = Field(2)

print("=== repetition code {000, 111} ===")
rep = classical_channel(gf2, [(0, 0, 0), (1, 1, 1)])
print(minimum_distances(rep).render_text())
cap = capability(rep, joint_grid=(2, 2))
print(f"corrects {cap.max_correctable}, detects {cap.max_detectable}")
print("decode (1,0,0):", mwd(rep, (1, 0, 0)))

print("\n=== [7,4] Hamming code ===")
g = ((1, 0, 0, 0, 1, 1, 0),
     (0, 1, 0, 0, 1, 0, 1),
     (0, 0, 1, 0, 0, 1, 1),
     (0, 0, 0, 1, 1, 1, 1))
words = {(0,) * 7}
for mask in range(16):
    w = (0,) * 7
    for i in range(4):
        if (mask >> i) & 1:
            w = tuple(a ^ b for a, b in zip(w, g[i]))
    words.add(w)
hamming = classical_channel(gf2, sorted(words))

verdict = classify(hamming)
print("error_linear:", verdict.error_linear, " linear:", verdict.linear)

report = minimum_distances(hamming)
print("minima: d0 =", report.d0_min, " d1 =", report.d1_min, " d2 =", report.d2_min)
same = all(report.d0[p] == report.d1[p] == report.d2[p] for p in report.pairs())
print("d0 == d1 == d2 on all", len(report.pairs()), "ordered pairs:", same)

for which in ("d0", "d1", "d2"):
    print(f"{which} is a metric:", check_metric(hamming, which, report).all_pass)

cap = capability(hamming, joint_grid=(1, 2))
print(f"corrects {cap.max_correctable}, detects {cap.max_detectable}")

print("\nfull ledger on the Hamming code:")
print(run_all(hamming).render_text())
