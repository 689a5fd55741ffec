"""The genus-2 Eisenstein cohomology formulas, cross-checked.

Evaluates the total Eisenstein Euler characteristic, its decomposition
into the rank-one and codimension-2 boundary parts, and the compactly
supported kernel for regular weights, then confirms anti-self-duality.
"""

from siegeleis import (
    check_duality,
    codim2_g2,
    consistency_g2,
    kernel_g2,
    rank1,
    total_g2,
)

print("The trivial local system (l, m) = (0, 0)")
print("=========================================")
print(f"  total   = {total_g2(0, 0)}")
print(f"  rank1   = {rank1(2, (0, 0), expand=True)}")
print(f"  codim2  = {codim2_g2(0, 0)}")
low, high = total_g2(0, 0).motivic_weight_split(3)
print(f"  weight split at 3: low = {low}, high = {high}")
print()

print("A regular local system (l, m) = (11, 5)")
print("========================================")
print(f"  total   = {total_g2(11, 5)}")
print(f"  kernel  = {kernel_g2(11, 5)}")
print(f"  anti-self-dual at weight 19: {check_duality(total_g2(11, 5), 19)}")
print()

print("A case with a surviving cusp-form motive (l, m) = (12, 10)")
print("==========================================================")
print(f"  total   = {total_g2(12, 10)}")
print()

print("Consistency report for (l, m) = (7, 3)")
print("=======================================")
print(consistency_g2(7, 3).render())
