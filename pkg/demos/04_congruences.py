"""The mod-p^s congruence checks, with a corrupted-data counterexample.

For admissible L the truncations f_s(X) = sum_{n < p^s} b_n X^n satisfy

    f_{s+1}(X) f_{s-1}(X^p) = f_s(X) f_s(X^p)      (mod p^s)
    f(X)/f(X^p) = f_s(X)/f_{s-1}(X^p)              (mod p^s, as series)

plus the digit-product rule mod p and a two-parameter refinement.  Every
verifier returns a machine-readable report; a failure always carries the
smallest witness.
"""

from dworkcong import (
    apery_numbers,
    apery_polynomial,
    check_c1,
    check_c2,
    check_dig2,
    check_digit_product,
    run_lemma_suite,
)

lam = apery_polynomial()
b = apery_numbers(200)

for p, s in [(2, 3), (3, 2), (5, 2), (7, 1)]:
    r2 = check_c2(lam, p, s, b=b)
    r1 = check_c1(lam, p, s, N=200, b=b)
    print(f"p={p} s={s}:  c2 {r2.verdict}  c1 {r1.verdict}"
          f"  ({r2.wall_time + r1.wall_time:.2f}s)")
print()

print("digit product mod 5:", check_digit_product(lam, 5, 60, b=b).verdict)
print("dig2 p=3 s=2:       ", check_dig2(lam, 3, 2, 20, 4, b=b).verdict)
print("lemma suite p=2:    ", run_lemma_suite(lam, 2, 15).verdict)
print()

# Negative control: bump a single value and watch the witness point at it.
bad = list(b)
bad[7] += 1
r = check_c2(lam, 2, 2, b=bad)
print(f"after corrupting b_7: verdict {r.verdict}, witness {r.witness}")
