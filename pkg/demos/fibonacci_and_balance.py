"""Fibonacci words and the balance property.

Even-index Fibonacci words have arithmetically progressed suffix arrays with
ratio f(m-2) and first entry f(m); odd-index words gain the property after
swapping the two letters.  The balance predicate (all same-length cyclic
windows carry nearly equal letter counts) can equivalently be read off the
rotation-matrix BWT: balanced means perfectly clustered.
"""

from apsa import (
    ap_detect,
    balanced_via_bwt,
    fibonacci_closed_form,
    fibonacci_lengths,
    fibonacci_swapped,
    fibonacci_word,
    is_balanced,
    suffix_array,
)

print("m  f(m)  word / swapped word        suffix-array shape")
lengths = fibonacci_lengths(12)
for m in range(3, 13):
    fw = fibonacci_word(m)
    if m % 2 == 0:
        word, tag = fw.word, "word"
    else:
        word, tag = fibonacci_swapped(m), "swapped"
    perm = ap_detect(list(suffix_array(word).sa))
    shown = word if len(word) <= 22 else word[:19] + "..."
    print(
        f"{m:<2} {lengths[m - 1]:<5} {shown:<26} {tag}: ratio {perm.k},"
        f" first entry {perm.p1} (f(m-2) = {lengths[m - 3]})"
    )

print("\neven words also come from a direct formula, no recursion:")
for m in (4, 6, 8):
    assert fibonacci_closed_form(m) == fibonacci_word(m).word
    print(f"  m={m}: {fibonacci_closed_form(m)}")

print("\nbalance, checked two ways (windows vs BWT clustering):")
for word in ("abaababa", "ababbabb", "bbabbabb", "abab", "aabb"):
    w, b = is_balanced(word), balanced_via_bwt(word)
    assert w == b
    print(f"  {word}: balanced={w}")
