"""Validating strict border arrays online, recovering the border array.

Offline, pi' converts to pi with one right-to-left sweep.  Online that sweep
is unavailable, so the validator maintains the pointwise-largest border
array consistent with the strict values read so far: a frozen prefix plus a
final slope whose base value only ever steps down.
"""

from borderval import SlopeValidator, pi_to_pi_prime

STREAM = [-1, 1, -1, -1, 1, -1, -1, 5, 1, -1, -1, 5, 0]

v = SlopeValidator()
print("push  recovered border array (maximal consistent)")
for x in STREAM:
    verdict = v.push(x)
    assert verdict.valid
    print(f"{x:>4}  {v.recovered_pi()}")

rec = v.recovered_pi()
print("\nstrict values of the recovery:", pi_to_pi_prime(rec)[: len(STREAM)])
print("input stream                 :", STREAM)
print("minimal alphabet:", v.max_alphabet)

print("\nan impossible strict stream is rejected at the exact position:")
v = SlopeValidator()
for i, x in enumerate([-1, -1, 1], start=1):
    verdict = v.push(x)
    if not verdict.valid:
        print(f"  [-1, -1, 1] -> invalid at {verdict.position}")
        break
