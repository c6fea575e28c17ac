"""Pairing groups, hash oracles, and canonical serialization.

Multiplicative notation throughout: ``a * b`` is the group operation,
``a ** s`` exponentiation, ``a / b`` shorthand for ``a * b.inverse()``.
Scalars live in Z_p where p is the (255-bit prime) order of the groups;
the 381-bit base field is an implementation detail of the backend.

Encodings are fixed-length and canonical: G1 48 bytes, G2 96 bytes
(compressed, ZCash flag convention), GT 576 bytes, scalars 32 bytes.
Decoding checks subgroup membership.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .backend import impl as _b
from .errors import DecodeError

ORDER = _b.ORDER
_P = _b.MODULUS
_HALF_P = (_P - 1) // 2

G1_ENC_LEN = 48
G2_ENC_LEN = 96
GT_ENC_LEN = 576
SCALAR_ENC_LEN = 32


class Scalar:
    """An element of Z_p, p the group order."""

    __slots__ = ("v",)

    def __init__(self, v: int):
        self.v = v % ORDER

    @classmethod
    def random(cls, rng) -> "Scalar":
        return cls(rng.randrange(ORDER))

    @classmethod
    def random_nonzero(cls, rng) -> "Scalar":
        return cls(rng.randrange(1, ORDER))

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.v + other.v)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.v - other.v)

    def __mul__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.v * other.v)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.v)

    def inverse(self) -> "Scalar":
        if self.v == 0:
            raise ZeroDivisionError("scalar 0 has no inverse")
        return Scalar(pow(self.v, ORDER - 2, ORDER))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, Scalar) and self.v == other.v

    def __hash__(self) -> int:
        return hash(("Zp", self.v))

    def __repr__(self) -> str:
        return f"Scalar({self.v:#x})"

    def is_zero(self) -> bool:
        return self.v == 0

    def to_bytes(self) -> bytes:
        return self.v.to_bytes(SCALAR_ENC_LEN, "big")

    @classmethod
    def from_bytes(cls, data: bytes) -> "Scalar":
        if len(data) != SCALAR_ENC_LEN:
            raise DecodeError(f"scalar encoding must be {SCALAR_ENC_LEN} bytes")
        v = int.from_bytes(data, "big")
        if v >= ORDER:
            raise DecodeError("scalar not reduced")
        return cls(v)


def _exp_int(s) -> int:
    if isinstance(s, Scalar):
        return s.v
    if isinstance(s, int):
        return s % ORDER
    raise TypeError(f"exponent must be Scalar or int, not {type(s).__name__}")


class G1Elem:
    __slots__ = ("h",)

    def __init__(self, h):
        self.h = h

    @classmethod
    def generator(cls) -> "G1Elem":
        return cls(_b.g1_generator())

    @classmethod
    def identity(cls) -> "G1Elem":
        return cls(_b.g1_infinity())

    def __mul__(self, other: "G1Elem") -> "G1Elem":
        return G1Elem(_b.g1_add(self.h, other.h))

    def __pow__(self, s) -> "G1Elem":
        return G1Elem(_b.g1_mul(self.h, _exp_int(s)))

    def inverse(self) -> "G1Elem":
        return G1Elem(_b.g1_neg(self.h))

    def __truediv__(self, other: "G1Elem") -> "G1Elem":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, G1Elem) and _b.g1_eq(self.h, other.h)

    def __hash__(self) -> int:
        return hash(("G1", self.to_bytes()))

    def __repr__(self) -> str:
        return f"G1Elem({self.to_bytes().hex()[:16]}…)"

    def is_identity(self) -> bool:
        return _b.g1_is_infinity(self.h)

    def to_bytes(self) -> bytes:
        aff = _b.g1_affine(self.h)
        if aff is None:
            return bytes([0xC0]) + bytes(G1_ENC_LEN - 1)
        x, y = aff
        out = bytearray(x.to_bytes(G1_ENC_LEN, "big"))
        out[0] |= 0x80
        if y > _HALF_P:
            out[0] |= 0x20
        return bytes(out)

    @classmethod
    def from_bytes(cls, data: bytes) -> "G1Elem":
        x, y_large, inf = _parse_compressed(data, G1_ENC_LEN)
        if inf:
            return cls.identity()
        try:
            y = _solve_y_g1(x)
        except ValueError as exc:
            raise DecodeError(str(exc)) from None
        if (y > _HALF_P) != y_large:
            y = _P - y
        h = _b.g1_from_affine(x, y)
        if not _b.g1_in_subgroup(h):
            raise DecodeError("G1 point not in the prime-order subgroup")
        return cls(h)


class G2Elem:
    __slots__ = ("h",)

    def __init__(self, h):
        self.h = h

    @classmethod
    def generator(cls) -> "G2Elem":
        return cls(_b.g2_generator())

    @classmethod
    def identity(cls) -> "G2Elem":
        return cls(_b.g2_infinity())

    def __mul__(self, other: "G2Elem") -> "G2Elem":
        return G2Elem(_b.g2_add(self.h, other.h))

    def __pow__(self, s) -> "G2Elem":
        return G2Elem(_b.g2_mul(self.h, _exp_int(s)))

    def inverse(self) -> "G2Elem":
        return G2Elem(_b.g2_neg(self.h))

    def __truediv__(self, other: "G2Elem") -> "G2Elem":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, G2Elem) and _b.g2_eq(self.h, other.h)

    def __hash__(self) -> int:
        return hash(("G2", self.to_bytes()))

    def __repr__(self) -> str:
        return f"G2Elem({self.to_bytes().hex()[:16]}…)"

    def is_identity(self) -> bool:
        return _b.g2_is_infinity(self.h)

    def to_bytes(self) -> bytes:
        aff = _b.g2_affine(self.h)
        if aff is None:
            return bytes([0xC0]) + bytes(G2_ENC_LEN - 1)
        (x0, x1), (y0, y1) = aff
        out = bytearray(x1.to_bytes(48, "big") + x0.to_bytes(48, "big"))
        out[0] |= 0x80
        if y1 > _HALF_P or (y1 == 0 and y0 > _HALF_P):
            out[0] |= 0x20
        return bytes(out)

    @classmethod
    def from_bytes(cls, data: bytes) -> "G2Elem":
        (x1, x0), y_large, inf = _parse_compressed_fp2(data)
        if inf:
            return cls.identity()
        try:
            y0, y1 = _solve_y_g2((x0, x1))
        except ValueError as exc:
            raise DecodeError(str(exc)) from None
        if (y1 > _HALF_P or (y1 == 0 and y0 > _HALF_P)) != y_large:
            y0, y1 = (-y0) % _P, (-y1) % _P
        h = _b.g2_from_affine((x0, x1), (y0, y1))
        if not _b.g2_in_subgroup(h):
            raise DecodeError("G2 point not in the prime-order subgroup")
        return cls(h)


class GTElem:
    __slots__ = ("h",)

    def __init__(self, h):
        self.h = h

    @classmethod
    def identity(cls) -> "GTElem":
        return cls(_b.gt_one())

    def __mul__(self, other: "GTElem") -> "GTElem":
        return GTElem(_b.gt_mul(self.h, other.h))

    def __pow__(self, s) -> "GTElem":
        return GTElem(_b.gt_pow(self.h, _exp_int(s)))

    def inverse(self) -> "GTElem":
        return GTElem(_b.gt_inv(self.h))

    def __truediv__(self, other: "GTElem") -> "GTElem":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, GTElem) and _b.gt_eq(self.h, other.h)

    def __hash__(self) -> int:
        return hash(("GT", self.to_bytes()))

    def __repr__(self) -> str:
        return f"GTElem({self.to_bytes().hex()[:16]}…)"

    def is_identity(self) -> bool:
        return _b.gt_is_one(self.h)

    def to_bytes(self) -> bytes:
        return b"".join(c.to_bytes(48, "big") for c in _b.gt_coeffs(self.h))

    @classmethod
    def from_bytes(cls, data: bytes) -> "GTElem":
        if len(data) != GT_ENC_LEN:
            raise DecodeError(f"GT encoding must be {GT_ENC_LEN} bytes")
        coeffs = [int.from_bytes(data[i * 48 : (i + 1) * 48], "big") for i in range(12)]
        try:
            h = _b.gt_from_coeffs(coeffs)
        except ValueError as exc:
            raise DecodeError(str(exc)) from None
        if not _b.gt_is_one(_b.gt_pow(h, ORDER)):
            raise DecodeError("GT element not in the order-p subgroup")
        return cls(h)


def _parse_compressed(data: bytes, length: int):
    if len(data) != length:
        raise DecodeError(f"encoding must be {length} bytes")
    flags = data[0]
    if not flags & 0x80:
        raise DecodeError("uncompressed encodings are not accepted")
    infinity = bool(flags & 0x40)
    y_large = bool(flags & 0x20)
    body = bytes([flags & 0x1F]) + data[1:]
    x = int.from_bytes(body, "big")
    if infinity:
        if x != 0 or y_large:
            raise DecodeError("non-canonical infinity encoding")
        return 0, False, True
    if x >= _P:
        raise DecodeError("x coordinate out of range")
    return x, y_large, False


def _parse_compressed_fp2(data: bytes):
    if len(data) != G2_ENC_LEN:
        raise DecodeError(f"encoding must be {G2_ENC_LEN} bytes")
    flags = data[0]
    if not flags & 0x80:
        raise DecodeError("uncompressed encodings are not accepted")
    infinity = bool(flags & 0x40)
    y_large = bool(flags & 0x20)
    x1 = int.from_bytes(bytes([flags & 0x1F]) + data[1:48], "big")
    x0 = int.from_bytes(data[48:], "big")
    if infinity:
        if x0 != 0 or x1 != 0 or y_large:
            raise DecodeError("non-canonical infinity encoding")
        return (0, 0), False, True
    if x0 >= _P or x1 >= _P:
        raise DecodeError("x coordinate out of range")
    return (x1, x0), y_large, False


def _solve_y_g1(x: int) -> int:
    rhs = (x * x % _P * x + 4) % _P
    y = pow(rhs, (_P + 1) // 4, _P)
    if y * y % _P != rhs:
        raise ValueError("x is not on the curve")
    return y


def _solve_y_g2(x):
    x0, x1 = x
    # rhs = x^3 + 4(1+u) over Fp2
    a0, a1 = x0, x1
    s0, s1 = (a0 * a0 - a1 * a1) % _P, 2 * a0 * a1 % _P
    r0, r1 = (s0 * a0 - s1 * a1) % _P, (s0 * a1 + s1 * a0) % _P
    r0, r1 = (r0 + 4) % _P, (r1 + 4) % _P
    y = _fp2_sqrt((r0, r1))
    if y is None:
        raise ValueError("x is not on the twist")
    return y


def _fp2_sqrt(a):
    # Solve y^2 = a over Fp2 via the norm trick (valid for p = 3 mod 4):
    # with n = sqrt(norm(a)), c0^2 = (a0 + n)/2 and c1 = a1 / 2c0.
    a0, a1 = a
    if a1 == 0:
        y = pow(a0, (_P + 1) // 4, _P)
        if y * y % _P == a0 % _P:
            return (y, 0)
        c1sq = (-a0) % _P
        c1 = pow(c1sq, (_P + 1) // 4, _P)
        if c1 * c1 % _P == c1sq:
            return (0, c1)
        return None
    norm = (a0 * a0 + a1 * a1) % _P
    n = pow(norm, (_P + 1) // 4, _P)
    if n * n % _P != norm:
        return None
    inv2 = (_P + 1) // 2
    for cand in (n, (-n) % _P):
        c0sq = (a0 + cand) * inv2 % _P
        c0 = pow(c0sq, (_P + 1) // 4, _P)
        if c0 * c0 % _P != c0sq or c0 == 0:
            continue
        c1 = a1 * pow(2 * c0 % _P, _P - 2, _P) % _P
        if (c0 * c0 - c1 * c1) % _P == a0 % _P and (2 * c0 * c1) % _P == a1 % _P:
            return (c0, c1)
    return None


def pair(a: G1Elem, b: G2Elem) -> GTElem:
    """Bilinear map e: G1 x G2 -> GT."""
    return GTElem(_b.pairing(a.h, b.h))


def msm(bases: list, exps: list) -> G1Elem:
    """Product of powers: prod bases[i] ** exps[i] over G1."""
    if len(bases) != len(exps):
        raise ValueError("msm: bases and exponents differ in length")
    if not bases:
        raise ValueError("msm: empty input")
    return G1Elem(_b.g1_msm([p.h for p in bases], [_exp_int(e) for e in exps]))


# ---------------------------------------------------------------------------
# Hash oracles (RFC 9380 style: expand_message_xmd over SHA-256, with the
# domain tag as DST; mapping to G1 via Shallue-van de Woestijne).


def _expand_xmd(msg: bytes, dst: bytes, n_bytes: int) -> bytes:
    if not dst or len(dst) > 255:
        raise ValueError("domain tag must be 1..255 bytes")
    ell = (n_bytes + 31) // 32
    if ell > 255:
        raise ValueError("requested too much output")
    dst_prime = dst + bytes([len(dst)])
    b0 = hashlib.sha256(
        bytes(64) + msg + n_bytes.to_bytes(2, "big") + b"\x00" + dst_prime
    ).digest()
    out = bytearray()
    prev = b0
    for i in range(1, ell + 1):
        block = b0 if i == 1 else bytes(x ^ y for x, y in zip(b0, prev))
        prev = hashlib.sha256(block + bytes([i]) + dst_prime).digest()
        out += prev
    return bytes(out[:n_bytes])


def hash_to_g1(domain_tag: bytes, msg: bytes) -> G1Elem:
    """Random oracle into G1, independent per domain tag."""
    raw = _expand_xmd(msg, domain_tag, 2 * 64)
    u0 = int.from_bytes(raw[:64], "big") % _P
    u1 = int.from_bytes(raw[64:], "big") % _P
    q = _b.g1_add(_b.g1_map_to_curve(u0), _b.g1_map_to_curve(u1))
    return G1Elem(_b.g1_mul(q, _b.G1_COFACTOR))


def hash_to_scalar(domain_tag: bytes, msg: bytes) -> Scalar:
    """Random oracle into Z_p, independent per domain tag."""
    raw = _expand_xmd(msg, domain_tag, 48)
    return Scalar(int.from_bytes(raw, "big"))


# Domain tags used by the audit protocols.
TAG_BLOCK_ORACLE = b"DIC/H"
TAG_SCALAR_ORACLE = b"DIC/h"
TAG_MHT_ROOT = b"DIC/MHT"
TAG_SSIG = b"DIC/SSig"


@dataclass(frozen=True)
class PairingContext:
    """Public group description: order, generators, curve family."""

    p: int
    g1: G1Elem
    g: G2Elem
    curve_id: str = "BLS12-381"
    security_level: int = 128

    @classmethod
    def default(cls) -> "PairingContext":
        return cls(p=ORDER, g1=G1Elem.generator(), g=G2Elem.generator())
