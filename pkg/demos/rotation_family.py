"""Walk through the full rotation family of one arithmetic progression.

For n = 8 and ratio k = 5 there are eight progressed permutations, one per
first entry.  Each is the suffix array of exactly one string over at most
three characters; three of the permutations admit a binary string instead.
The script synthesizes every rotation, shows the forced split positions, and
checks the closed-form BWT prediction against the suffix-array route.
"""

from apsa import (
    APPerm,
    ap_materialize,
    ap_rotate,
    bwt_from_sa,
    bwt_predict_ternary,
    classify,
    compact_runs,
    suffix_array,
    synth,
    synth_ternary,
)

N, K = 8, 5

base = APPerm(N, K, K)
print(f"rotation family of {ap_materialize(base)} (n={N}, k={K})\n")
print(f"{'P':<28} {'text':<10} {'case':<8} {'splits':<8} bwt")

for m in range(N):
    perm = ap_rotate(base, m)
    p = ap_materialize(perm)
    result = synth_ternary(perm)
    case, sigma_min = classify(perm)
    predicted = bwt_predict_ternary(perm)
    computed = bwt_from_sa(result.text, p)
    assert predicted == computed
    assert suffix_array(result.text).sa == tuple(p)
    print(
        f"{str(p):<28} {result.text:<10} {case.value:<8}"
        f" {str(list(result.split.boundaries)):<8} {compact_runs(predicted.runs)}"
    )

print()
print("the three binary solutions for this ratio:")
for p1 in (N, K + 1, 1):
    perm = APPerm(N, K, p1)
    result = synth(perm)
    print(
        f"  p1={p1}: {result.text}  (case {result.case.value},"
        f" split index s={result.s}, largest a-suffix at {result.p_s},"
        f" period {result.predicted_period})"
    )
