"""Tour of the built-in nonlinear network fixture.

The fixture is a 6-node network over GF(3) whose relay nodes apply
nonlinear tables.  Its punchline: the code corrects 1 error AND detects
1 error, which no classical block code can do (there, detection capability
is always at least double the correction capability).  The script walks
through the raw evaluations, the decoding balls, the four distances, and
the theorem ledger.
"""

from gnetcode import (toy_example, toy_channel, decoding_ball, minimum_distances,
                      capability, is_joint_correcting, mwd, mwd_bounded,
                      classify, run_all)

gf3, spec, code = toy_example()
print("network nodes:", spec.nodes)
print("edge order   :", spec.edges)
print("code         :", code)

ch = toy_channel()
x0, x1 = ch.codewords

# Error-free transmission reproduces the codewords at the sink.
print("\nclean outputs:", ch.evaluate(x0, (0,) * 9), ch.evaluate(x1, (0,) * 9))

# A value-2 error on both the first and third source edges makes the
# all-ones codeword arrive as the all-zeros clean output -- the collision
# that caps this code's capabilities.
z = (2, 0, 2, 0, 0, 0, 0, 0, 0)
print("F(x1, double error) =", ch.evaluate(x1, z))

# Radius-1 decoding balls: 7 words around x0, 9 around x1, disjoint.
b0 = decoding_ball(ch, x0, 1)
b1 = decoding_ball(ch, x1, 1)
print("\n|ball(x0,1)| =", len(b0.members), " |ball(x1,1)| =", len(b1.members))
print("disjoint:", not (b0.members & b1.members))

# The four distances.  Note the asymmetry of the detection distance: the
# nonlinear relays make x1 reachable from x0 harder than the reverse.
report = minimum_distances(ch)
print("\n" + report.render_text())

# Correction vs detection capability, and the joint verdicts.
cap = capability(ch, joint_grid=(2, 2))
print(f"\ncorrects {cap.max_correctable}, detects {cap.max_detectable}")
print("joint (0,1):", is_joint_correcting(ch, 0, 1))
print("joint (1,0):", is_joint_correcting(ch, 1, 0))
print("joint (0,2):", is_joint_correcting(ch, 0, 2))

# Decoding a few received words.
print("\nmwd (1,0,0)          :", mwd(ch, (1, 0, 0)))
print("mwd bounded 1 (1,0,0):", mwd_bounded(ch, 1, (1, 0, 0)))
print("mwd bounded 1 (2,2,2):", mwd_bounded(ch, 1, (2, 2, 2)))

# The channel is not error-linear; classification returns a witness pair.
verdict = classify(ch)
print("\nerror_linear:", verdict.error_linear, " witness:", verdict.witness)

# Every applicable theorem holds on this channel.
ledger = run_all(ch)
print("\ntheorem ledger:")
print(ledger.render_text())
