"""Sparse multivariate Laurent polynomials over Z or Z/p**K.

A polynomial is a finite association from exponent vectors (tuples of signed
integers, one entry per variable) to nonzero coefficients.  The coefficient
ring is either the exact integers (p is None) or Z/p**K; operands of ring
operations must agree on both the arity and the ring.

The sparse map is the right shape here because the n-th power of a
d-variable polynomial has O(n^d) terms spread over a scaled Newton polytope;
dense arrays would waste space on skewed supports.  Multiplication is plain
term-by-term accumulation into a fresh map, with a single modular reduction
pass at the end.

Also provided: truncated power series with coefficients mod p**K, supporting
multiplication, substitution X -> X**p and inversion of unit-constant-term
series -- enough to form quotients like f(X)/f(X**p) to a cutoff.
"""

from __future__ import annotations

from .padic import _context_modulus


def _check_ring(p, K):
    if (p is None) != (K is None):
        raise ValueError("p and K must be given together (or both omitted)")
    if p is None:
        return None
    return _context_modulus(p, K)


class LaurentPoly:
    """Immutable sparse Laurent polynomial.

    Do not mutate the coefficient map after construction; all operations
    return fresh objects.  Iteration helpers (`terms`, `support`) are sorted
    lexicographically on the exponent vector so printed output and reports
    are reproducible.
    """

    __slots__ = ("arity", "p", "K", "modulus", "_coeffs")

    def __init__(self, arity, coeffs=None, p=None, K=None):
        if not isinstance(arity, int) or arity < 1:
            raise ValueError(f"arity must be a positive integer, got {arity}")
        modulus = _check_ring(p, K)
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                e = tuple(e)
                if len(e) != arity:
                    raise ValueError(f"exponent {e} does not have arity {arity}")
                if not all(isinstance(x, int) for x in e):
                    raise ValueError(f"exponents must be integers, got {e}")
                if not isinstance(c, int):
                    raise ValueError(f"coefficients must be integers, got {c!r}")
                if modulus is not None:
                    c = c % modulus
                if c:
                    clean[e] = c
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity, p=None, K=None):
        return cls(arity, {}, p=p, K=K)

    @classmethod
    def constant(cls, arity, c, p=None, K=None):
        return cls(arity, {(0,) * arity: c}, p=p, K=K)

    @classmethod
    def one(cls, arity, p=None, K=None):
        return cls.constant(arity, 1, p=p, K=K)

    @classmethod
    def monomial(cls, arity, exponents, coeff=1, p=None, K=None):
        return cls(arity, {tuple(exponents): coeff}, p=p, K=K)

    @classmethod
    def variable(cls, arity, index, p=None, K=None):
        """The variable x_index, 1-based."""
        if not 1 <= index <= arity:
            raise ValueError(f"variable index {index} out of range 1..{arity}")
        e = tuple(1 if i == index - 1 else 0 for i in range(arity))
        return cls(arity, {e: 1}, p=p, K=K)

    # -- ring plumbing -----------------------------------------------------

    def _same_ring(self, other):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        if self.p != other.p or self.K != other.K:
            raise ValueError(
                f"coefficient ring mismatch: {self._ring_name()} vs {other._ring_name()}"
            )

    def _ring_name(self):
        return "Z" if self.p is None else f"Z/{self.p}^{self.K}"

    def _make(self, coeffs):
        # internal fast path: coeffs already canonical (no zeros, right arity)
        out = object.__new__(LaurentPoly)
        object.__setattr__(out, "arity", self.arity)
        object.__setattr__(out, "p", self.p)
        object.__setattr__(out, "K", self.K)
        object.__setattr__(out, "modulus", self.modulus)
        object.__setattr__(out, "_coeffs", coeffs)
        return out

    def reduce_mod(self, p, K):
        """Image in Z/p**K.  From the exact ring, or from the same p with K' >= K."""
        if self.p is not None:
            if self.p != p:
                raise ValueError(f"cannot move coefficients from p={self.p} to p={p}")
            if self.K < K:
                raise ValueError(f"cannot raise precision {self.K} to {K}")
        return LaurentPoly(self.arity, self._coeffs, p=p, K=K)

    # -- inspection --------------------------------------------------------

    def coefficient(self, exponents):
        e = tuple(exponents)
        if len(e) != self.arity:
            raise ValueError(f"exponent {e} does not have arity {self.arity}")
        return self._coeffs.get(e, 0)

    def constant_term(self):
        return self._coeffs.get((0,) * self.arity, 0)

    def support(self):
        """Exponent vectors with nonzero coefficient, lexicographically sorted."""
        return sorted(self._coeffs)

    def terms(self):
        """(exponent, coefficient) pairs, lexicographically sorted."""
        return sorted(self._coeffs.items())

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.arity, other, p=self.p, K=self.K)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.p == other.p
            and self.K == other.K
            and self._coeffs == other._coeffs
        )

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.constant(self.arity, other, p=self.p, K=self.K)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        self._same_ring(other)
        out = dict(self._coeffs)
        m = self.modulus
        for e, c in other._coeffs.items():
            v = out.get(e, 0) + c
            if m is not None:
                v %= m
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return self._make(out)

    __radd__ = __add__

    def __neg__(self):
        m = self.modulus
        if m is None:
            return self._make({e: -c for e, c in self._coeffs.items()})
        return self._make({e: m - c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self._scalar_mul(other)
        self._same_ring(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        if self.arity == 2:
            for (e0, e1), c2 in b.items():
                for (f0, f1), c1 in a.items():
                    e = (e0 + f0, e1 + f1)
                    out[e] = get(e, 0) + c1 * c2
        elif self.arity == 1:
            for (e0,), c2 in b.items():
                for (f0,), c1 in a.items():
                    e = (e0 + f0,)
                    out[e] = get(e, 0) + c1 * c2
        else:
            for e2, c2 in b.items():
                for e1, c1 in a.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    out[e] = get(e, 0) + c1 * c2
        m = self.modulus
        if m is None:
            out = {e: c for e, c in out.items() if c}
        else:
            out = {e: cm for e, c in out.items() if (cm := c % m)}
        return self._make(out)

    def _scalar_mul(self, c):
        m = self.modulus
        if m is not None:
            c %= m
        if c == 0:
            return self._make({})
        if m is None:
            return self._make({e: c * v for e, v in self._coeffs.items()})
        return self._make(
            {e: cm for e, v in self._coeffs.items() if (cm := c * v % m)}
        )

    def __rmul__(self, other):
        if isinstance(other, int):
            return self._scalar_mul(other)
        return NotImplemented

    def __pow__(self, n):
        """n-th power by binary powering; A**0 == 1."""
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = LaurentPoly.one(self.arity, p=self.p, K=self.K)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def substitute_power(self, m):
        """A(x_1**m, ..., x_d**m): every exponent vector scaled by m."""
        if not isinstance(m, int) or m < 1:
            raise ValueError("substitution power must be an integer >= 1")
        if m == 1:
            return self
        return self._make(
            {tuple(m * x for x in e): c for e, c in self._coeffs.items()}
        )

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            mono = "*".join(
                f"x{i + 1}" if ei == 1 else f"x{i + 1}^{ei}"
                for i, ei in enumerate(e)
                if ei != 0
            )
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self}; ring={self._ring_name()}, arity={self.arity})"


def constant_term_sequence(lam: LaurentPoly, N: int, p=None, K=None) -> list:
    """Constant terms b_0..b_N of the powers lam**0, lam**1, ..., lam**N.

    Computed in lam's coefficient ring, or mod p**K when (p, K) is given.
    Uses iterated multiplication (not binary powering): every intermediate
    power is needed anyway, and multiplying the running power by the fixed
    small factor is cheaper than repeated squaring of large supports.
    """
    if not isinstance(N, int) or N < 0:
        raise ValueError("N must be a non-negative integer")
    if p is not None:
        lam = lam.reduce_mod(p, K)
    out = [1]
    cur = LaurentPoly.one(lam.arity, p=lam.p, K=lam.K)
    for _ in range(N):
        cur = cur * lam
        out.append(cur.constant_term())
    return out


def constant_term_of_product(factors) -> int:
    """Constant term of the product of several polynomials.

    Expands all factors but the largest, then takes the dot product
    sum_e A(e) * B(-e) against the largest factor.  This avoids
    materializing the full product when only its constant term is wanted.
    """
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    first = factors[0]
    for f in factors[1:]:
        first._same_ring(f)
    factors.sort(key=len)
    big = factors[-1]
    small = factors[:-1]
    if not small:
        return big.constant_term()
    acc = small[0]
    for f in small[1:]:
        acc = acc * f
    bigc = big._coeffs
    total = 0
    for e, c in acc._coeffs.items():
        ne = tuple(-x for x in e)
        v = bigc.get(ne)
        if v:
            total += c * v
    if big.modulus is not None:
        total %= big.modulus
    return total


class PowerCache:
    """Powers of a fixed polynomial, computed by ascending multiplication.

    A request for the n-th power walks up from the largest power already
    saved below n, multiplying by the base; only marked indices (plus the
    requested one) are retained, so memory stays proportional to the powers
    actually used.  Constant terms of every consecutive power are recorded
    separately by `constant_terms`, whose pass also saves any marked powers
    it walks through -- mark first, then ask for constant terms, and the
    whole cache fills in a single sweep.
    """

    def __init__(self, base: LaurentPoly):
        self.base = base
        one = LaurentPoly.one(base.arity, p=base.p, K=base.K)
        self._saved = {0: one, 1: base}
        self._marks = set()
        self._cts = [1, base.constant_term()]
        self._ct_power = base

    def mark(self, indices):
        """Register power indices worth retaining when a walk passes them."""
        self._marks.update(indices)

    def power(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("power index must be non-negative")
        got = self._saved.get(n)
        if got is not None:
            return got
        start = max(k for k in self._saved if k < n)
        cur = self._saved[start]
        for i in range(start + 1, n + 1):
            cur = cur * self.base
            if i == n or i in self._marks:
                self._saved[i] = cur
        return cur

    def constant_terms(self, N: int) -> list:
        """Constant terms of powers 0..N (iterated multiplication)."""
        cur = self._ct_power
        k = len(self._cts) - 1
        while k < N:
            k += 1
            cur = cur * self.base
            self._cts.append(cur.constant_term())
            if k in self._marks:
                self._saved.setdefault(k, cur)
        self._ct_power = cur
        return self._cts[: N + 1]


class TruncSeries:
    """Power series over Z/p**K truncated after X**N (N+1 coefficients)."""

    __slots__ = ("p", "K", "N", "modulus", "coeffs")

    def __init__(self, p, K, N, coeffs):
        modulus = _context_modulus(p, K)
        if not isinstance(N, int) or N < 0:
            raise ValueError("cutoff N must be a non-negative integer")
        coeffs = list(coeffs)
        if len(coeffs) > N + 1:
            raise ValueError(f"got {len(coeffs)} coefficients for cutoff N={N}")
        coeffs += [0] * (N + 1 - len(coeffs))
        self.p = p
        self.K = K
        self.N = N
        self.modulus = modulus
        self.coeffs = [c % modulus for c in coeffs]

    def _same_ring(self, other):
        if (self.p, self.K, self.N) != (other.p, other.K, other.N):
            raise ValueError(
                f"series context mismatch: (p,K,N)=({self.p},{self.K},{self.N}) vs "
                f"({other.p},{other.K},{other.N})"
            )

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            (self.p, self.K, self.N) == (other.p, other.K, other.N)
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __add__(self, other):
        self._same_ring(other)
        m = self.modulus
        return TruncSeries(
            self.p, self.K, self.N,
            [(a + b) % m for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __sub__(self, other):
        self._same_ring(other)
        m = self.modulus
        return TruncSeries(
            self.p, self.K, self.N,
            [(a - b) % m for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __mul__(self, other):
        self._same_ring(other)
        m = self.modulus
        N = self.N
        out = [0] * (N + 1)
        a, b = self.coeffs, other.coeffs
        for i, ai in enumerate(a):
            if ai:
                for j in range(N + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return TruncSeries(self.p, self.K, N, [v % m for v in out])

    def compose_xp(self) -> "TruncSeries":
        """Substitute X -> X**p, dropping terms beyond the cutoff."""
        out = [0] * (self.N + 1)
        for n, c in enumerate(self.coeffs):
            if c and n * self.p <= self.N:
                out[n * self.p] = c
        return TruncSeries(self.p, self.K, self.N, out)

    def invert(self) -> "TruncSeries":
        """Series G with self*G == 1 up to the cutoff; needs a unit c_0."""
        c0 = self.coeffs[0]
        if c0 % self.p == 0:
            raise ValueError(
                f"constant term {c0} is not a unit mod {self.p}; series not invertible"
            )
        m = self.modulus
        inv0 = pow(c0, -1, m)
        g = [inv0] + [0] * self.N
        f = self.coeffs
        for n in range(1, self.N + 1):
            acc = 0
            for i in range(1, n + 1):
                fi = f[i]
                if fi:
                    acc += fi * g[n - i]
            g[n] = (-inv0 * acc) % m
        return TruncSeries(self.p, self.K, self.N, g)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.N > 5 else ""
        return f"TruncSeries(p={self.p}, K={self.K}, N={self.N}; [{head}{tail}])"
