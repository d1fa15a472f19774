"""The exponent table a_{p,r,i} and its limits."""

from girthlab import a_exponent
from girthlab.bounds import a_exponent_limit

for p in range(2, 5):
    for r in (2, 3):
        row = [a_exponent(p, r, i) for i in range(p - 1, p + 5)]
        print(f"p={p} r={r}:", "  ".join(f"{float(a):.4f}" for a in row),
              f"-> {a_exponent_limit(p, r)}")

# On the diagonal with r = 2 the exponent is p - 2^(1-p).
print([str(a_exponent(p, 2, p)) for p in range(2, 7)])
