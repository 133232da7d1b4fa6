"""
Synthesizing and auditing chains
================================

A chain is a run of sections r = 1..R.  Synthesis fills in the forced
parameters from a few seeds, and the audit re-derives every rule from the
subspaces themselves.
"""

from fractions import Fraction

from crosssections import audit, mutate, synth_general_chain, synth_shift_chain
from crosssections.general import GeneralSequence
from crosssections.shift import ShiftSequence

seq = GeneralSequence(0, [-k for k in range(1, 8)], list(range(1, 8)))
chain = synth_general_chain(seq, 3, q2=[1, 2, 3], p2=[1, -1, 2], p1_1=5, q3_R=7)
print(audit(chain, trials=50).text())

harmonic = ShiftSequence(0, [Fraction(1, k) for k in range(1, 12)])
chain = synth_shift_chain(harmonic, 8, x1=1, y=[3, 6, 1, 2, 5, 4, 7, 9])
print("x_r:", [str(p.x) for p in chain.params])
print("shift chain:", audit(chain, trials=50).status)

# nudge one seed and the audit names the junction that broke
bad = audit(mutate(chain, 4, y=3), trials=20)
for rec in bad.violations:
    print(rec.line())
