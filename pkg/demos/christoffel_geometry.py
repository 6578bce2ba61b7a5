"""Christoffel words: lattice geometry meets suffix arrays.

The lower Christoffel word for coprime (p, q) walks from (0, 0) to (p, q)
just below the connecting segment.  Its suffix array is an arithmetic
progression, its BWT is b^q a^p, and its two-way Lyndon factorization splits
at the path vertex closest to the segment.
"""

from apsa import (
    ap_materialize,
    balanced2_factorization,
    christoffel_bwt,
    christoffel_path,
    christoffel_sa_params,
    christoffel_upper,
    christoffel_word,
    closest_path_point,
    compact_runs,
    factorization_index,
    is_balanced,
    is_lyndon,
)

P, Q = 7, 5

word = christoffel_word(P, Q)
perm = christoffel_sa_params(P, Q)
print(f"lower Christoffel word for (p={P}, q={Q}): {word}")
print(f"  lyndon={is_lyndon(word)} balanced={is_balanced(word)}")
print(f"  suffix array: {ap_materialize(perm)} (ratio {perm.k})")
print(f"  BWT: {compact_runs(christoffel_bwt(P, Q).runs)}")
print(f"  upper word (reversal): {christoffel_upper(P, Q)}")

idx = factorization_index(P, Q)
tree = balanced2_factorization(word)
print(f"\nfactorization index {idx} -> factors {tree.factors}")
print(f"closest interior path vertex to the segment: prefix length {closest_path_point(P, Q)}")

# Plain-text rendering of the path, marking the factorization vertex.
points = christoffel_path(P, Q).points
mark = points[idx]
grid = [["." for _ in range(P + 1)] for _ in range(Q + 1)]
for x, y in points:
    grid[y][x] = "o"
gx, gy = mark
grid[gy][gx] = "X"
print("\nlattice path (X = factorization vertex, origin bottom-left):")
for row in reversed(grid):
    print("  " + " ".join(row))

print("\nfirst recursion level of the factorization:")
for child in tree.children:
    print(f"  {child.word} -> {child.factors}")
