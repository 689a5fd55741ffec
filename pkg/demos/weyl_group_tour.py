"""Tour of the signed-permutation Weyl group machinery.

Prints the final (Kostant) elements for small genus, their lengths, the
shifted dot action, and the restriction maps down to genus g-1.
"""

from siegeleis import enumerate_final, image_dichotomy, restrict_final

print("Final elements by genus")
print("=======================")
for g in (1, 2, 3):
    finals = enumerate_final(g)
    print(f"g={g}: {len(finals)} elements")
    for w in finals:
        print(f"  {w}  length={w.length()}")
    print()

print("Dot action for g=3 at lambda=(5,3,1)")
print("====================================")
lam = (5, 3, 1)
for w in enumerate_final(3):
    print(f"  {w} * {lam} = {w.dot_action(lam)}")
print()

print("Restriction to genus 2 (delete k, rename)")
print("=========================================")
for w in enumerate_final(3):
    parts = []
    for k in (1, 2, 3):
        side, pos = image_dichotomy(w, k)
        u = restrict_final(w, k, side)
        parts.append(f"k={k}:{side}@{pos} -> {u}")
    print(f"  {w}  " + "  ".join(parts))
