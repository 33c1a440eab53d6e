"""Exact arithmetic in GF(p^m) backed by log/antilog tables.

Elements are encoded as base-p packings of their polynomial coefficient
vectors, so GF(p^m) elements are the integers 0 .. p^m - 1 and tables index
directly.  The table for a field is built once from the lexicographically
least primitive polynomial of degree m, which makes every build (and every
artifact derived from one) deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_TABLE_LIMIT = 1 << 24


class FieldError(ValueError):
    """Invalid field construction or element operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, m) with q = p^m and p prime."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q  # q itself is prime
    m = 0
    r = q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not is_prime(p):
        raise FieldError(f"{q} is not a prime power")
    return p, m


@dataclass(frozen=True)
class FieldTable:
    """GF(p^m) with a distinguished primitive element beta = antilog[1].

    ``antilog[e]`` is the encoding of beta^e for e in [0, p^m - 2];
    ``log_table`` inverts it on nonzero encodings (entry -1 at index 0).
    """

    p: int
    m: int
    modulus: tuple[int, ...]  # coefficient of x^i at index i; monic, degree m
    antilog: tuple[int, ...]
    log_table: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p ** self.m

    def exp(self, e: int) -> int:
        """beta^e (exponent reduced modulo p^m - 1)."""
        return self.antilog[e % (self.order - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("discrete log of zero")
        return self.log_table[a]

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        while a:
            d = a % p
            if d:
                out += (p - d) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        n = self.order - 1
        return self.antilog[(self.log_table[a] + self.log_table[b]) % n]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        n = self.order - 1
        return self.antilog[(n - self.log_table[a]) % n]


def _candidate_moduli(p: int, m: int):
    """Monic degree-m polynomials with nonzero constant term, in lexicographic
    order of their coefficient vectors read high-to-low."""
    for c in range(p**m):
        if c % p == 0:  # constant term zero: divisible by x, never primitive
            continue
        coeffs = []
        r = c
        for _ in range(m):
            coeffs.append(r % p)
            r //= p
        yield tuple(coeffs) + (1,)


def _walk_tables(p: int, m: int, modulus: tuple[int, ...]):
    """Fill the antilog table by repeated multiplication by x modulo the
    candidate polynomial.  Returns None unless x has full multiplicative
    order p^m - 1, i.e. unless the candidate is primitive."""
    order = p**m
    antilog = [0] * (order - 1)

    if p == 2:
        mod_int = 0
        for i, co in enumerate(modulus):
            mod_int |= co << i
        x = 1
        for e in range(order - 1):
            if x == 1 and e > 0:
                return None
            antilog[e] = x
            x <<= 1
            if x & order:
                x ^= mod_int
        if x != 1:
            return None
    else:
        digits = [0] * m
        digits[0] = 1
        for e in range(order - 1):
            enc = 0
            mult = 1
            for d in digits:
                enc += d * mult
                mult *= p
            if enc == 1 and e > 0:
                return None
            antilog[e] = enc
            top = digits[m - 1]
            shifted = [0] + digits[: m - 1]
            if top:
                for i in range(m):
                    shifted[i] = (shifted[i] - top * modulus[i]) % p
            digits = shifted
        enc = 0
        mult = 1
        for d in digits:
            enc += d * mult
            mult *= p
        if enc != 1:
            return None

    log_table = [-1] * order
    for e, a in enumerate(antilog):
        log_table[a] = e
    return tuple(antilog), tuple(log_table)


def build_field(p: int, m: int, *, table_limit: int = DEFAULT_TABLE_LIMIT) -> FieldTable:
    """Build GF(p^m) over the lexicographically least primitive polynomial."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree {m} must be positive")
    order = p**m
    if order > table_limit:
        raise FieldError(f"field of order {order} exceeds the table limit {table_limit}")
    for modulus in _candidate_moduli(p, m):
        tables = _walk_tables(p, m, modulus)
        if tables is not None:
            antilog, log_table = tables
            return FieldTable(p, m, modulus, antilog, log_table)
    raise FieldError(f"no primitive polynomial of degree {m} over GF({p})")
