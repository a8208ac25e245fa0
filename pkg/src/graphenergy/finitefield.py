"""Prime-field arithmetic behind the Paley construction.

Primality is decided by a deterministic Miller-Rabin test using the
seven-witness set {2, 325, 9375, 28178, 450775, 9780504, 1795265022},
which gives exact answers for every input below 2**64 (no probabilistic
false positives anywhere in the supported range).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "FIELD_MODULUS_CAP",
    "PrimeModulus",
    "is_prime",
    "is_quadratic_residue",
    "mod_pow",
    "residue_set",
]

# Witnesses proven sufficient for all n < 2**64.
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MAX_TESTABLE = 2**63 - 1

# Keeps every product of two residues inside 64 bits on any backend; Paley
# experiments stay orders of magnitude below this anyway.
FIELD_MODULUS_CAP = 2**31


def is_prime(u: int) -> bool:
    """Exact primality test for integers in [0, 2**63 - 1]."""
    if u < 0 or u > _MAX_TESTABLE:
        raise ValueError(f"primality input must be in [0, 2**63 - 1], got {u}")
    if u < 2:
        return False
    for small in _SMALL_PRIMES:
        if u % small == 0:
            return u == small
    # u - 1 = d * 2**s with d odd
    d = u - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for witness in _MR_WITNESSES:
        a = witness % u
        if a == 0:
            continue
        x = pow(a, d, u)
        if x == 1 or x == u - 1:
            continue
        for _ in range(s - 1):
            x = x * x % u
            if x == u - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """A validated odd prime modulus p, 3 <= p < 2**31."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int):
            raise TypeError(f"modulus must be an int, got {type(self.p).__name__}")
        if self.p < 3:
            raise ValueError(f"modulus must be at least 3, got {self.p}")
        if self.p >= FIELD_MODULUS_CAP:
            raise ValueError(f"modulus must be below 2**31, got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"modulus must be prime, got {self.p}")


def _as_prime(m: PrimeModulus | int) -> int:
    if isinstance(m, PrimeModulus):
        return m.p
    return PrimeModulus(m).p


def mod_pow(base: int, exp: int, m: PrimeModulus | int) -> int:
    """base**exp mod p for a residue base in [0, p)."""
    p = _as_prime(m)
    if not 0 <= base < p:
        raise ValueError(f"base must be a residue in [0, {p}), got {base}")
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    return pow(base, exp, p)


def is_quadratic_residue(a: int, m: PrimeModulus | int) -> bool:
    """Euler's criterion: a^((p-1)/2) == 1 mod p, for nonzero a."""
    p = _as_prime(m)
    if a == 0 or a % p == 0:
        raise ValueError("zero is not a nonzero square; a must be a nonzero residue")
    if not 1 <= a < p:
        raise ValueError(f"a must be a residue in [1, {p}), got {a}")
    return mod_pow(a, (p - 1) // 2, p) == 1


def residue_set(m: PrimeModulus | int) -> frozenset[int]:
    """The nonzero squares mod p, by squaring every nonzero residue."""
    p = _as_prime(m)
    return frozenset(x * x % p for x in range(1, p))
