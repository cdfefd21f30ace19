"""The ghost-term decomposition of L**n and the sequence c_n.

R_s(L) = L(x)^(p^s) - L(x^p)^(p^(s-1)) is divisible by p^s, and L**n is a
sum of products of ghost terms indexed by tuples m with 0 <= m_i <= i.
Restricting the sum to indecomposable tuples gives polynomials I_n whose
constant terms c_n satisfy a clean block-multiplicative identity against
b_n -- checkable two independent ways.
"""

from dworkcong import (
    GhostCalculator,
    apery_polynomial,
    c_from_b_sequence,
    digit_partitions,
    enumerate_indecomposable,
    enumerate_tuples,
    length_p,
    parse_poly,
)

p = 2
lam = parse_poly("x1 + x1^-1", 1)
calc = GhostCalculator(lam, p=p, K=6)

print("ghost terms of L = x1 + x1^-1 at p = 2:")
for s in range(3):
    R = calc.ghost_term(s)
    print(f"  R_{s}(L) = {R}")
print()

# The telescoping identity: L^(p^s) is the sum of shifted ghost terms.
for s in (1, 2, 3):
    assert not calc.decomposition_residual(s)
print("telescoping residual vanishes for s = 1, 2, 3")
print()

# Tuples: S_k has k! members; the indecomposable ones refuse to split.
for k in (2, 3, 4):
    print(f"|S_{k}| = {len(enumerate_tuples(k))},  "
          f"indecomposable: {enumerate_indecomposable(k) if k < 4 else '...'}")
print()

# c_n two ways: constant terms of the indecomposable sums, and inversion of
# the digit-block identity  b_n = sum over partitions of prod c_block.
apery = GhostCalculator(apery_polynomial(), p=3, K=5)
n_max = 26
b = apery.constant_terms(n_max)
c_direct = [apery.c_direct(n) for n in range(n_max + 1)]
c_inverted = c_from_b_sequence(b, n_max, 3, 5)
assert c_direct == c_inverted
print("c_n (two agreeing constructions), Apery polynomial, p = 3, mod 3^5:")
for n in (1, 3, 9, 11, 26):
    v = 3 ** (length_p(n, 3) - 1)
    print(f"  c_{n} = {c_direct[n]:>5}   (divisible by {v}: {c_direct[n] % v == 0})")
print()
print("digit partitions of 11 base 3 (digit string 2,0,1):",
      digit_partitions(11, 3))
