"""Pure-Python BLS12-381 group arithmetic.

Fallback backend: same API as the compiled extension ``zkaudit._fast``.
Field elements are plain ints / nested tuples, points are Jacobian triples.
Everything here is internal; protocol code goes through ``zkaudit.groups``.
"""

BACKEND_NAME = "pure"

# Curve parameter x (negative), base field modulus and subgroup order.
BLS_X = 0xD201000000010000  # |x|; the actual parameter is -BLS_X
MODULUS = 0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFAAAB
ORDER = 0x73EDA753299D7D483339D80809A1D80553BDA402FFFE5BFEFFFFFFFF00000001

P = MODULUS

# y^2 = x^3 + 4 over Fp; twist y^2 = x^3 + 4(u+1) over Fp2
B_COEFF = 4
B2_COEFF = (4, 4)

G1_X = 0x17F1D3A73197D7942695638C4FA9AC0FC3688C4F9774B905A14E3A3F171BAC586C55E83FF97A1AEFFB3AF00ADB22C6BB
G1_Y = 0x08B3F481E3AAA0F1A09E30ED741D8AE4FCF5E095D5D00AF600DB18CB2C04B3EDD03CC744A2888AE40CAA232946C5E7E1

G2_X = (
    0x024AA2B2F08F0A91260805272DC51051C6E47AD4FA403B02B4510B647AE3D1770BAC0326A805BBEFD48056C8C121BDB8,
    0x13E02B6052719F607DACD3A088274F65596BD0D09920B61AB5DA61BBDC7F5049334CF11213945D57E5AC7D055D042B7E,
)
G2_Y = (
    0x0CE5D527727D6E118CC9CDC6DA2E351AADFD9BAA8CBDD3A76D429A695160D12C923AC9CC3BACA289E193548608B82801,
    0x0606C4A02EA734CC32ACD2B02BC28B99CB3E287E85A763AF267492AB572E99AB3F370D275CEC1DA1AAA9075FF05F79BE,
)

G1_COFACTOR = 0x396C8C005555E1568C00AAAB0000AAAB

# ---------------------------------------------------------------------------
# Fp

def _inv(a, m):
    return pow(a, m - 2, m)


# ---------------------------------------------------------------------------
# Fp2 = Fp[u] / (u^2 + 1); elements are (c0, c1) = c0 + c1*u

FP2_ZERO = (0, 0)
FP2_ONE = (1, 0)


def fp2_add(a, b):
    return ((a[0] + b[0]) % P, (a[1] + b[1]) % P)


def fp2_sub(a, b):
    return ((a[0] - b[0]) % P, (a[1] - b[1]) % P)


def fp2_neg(a):
    return (-a[0] % P, -a[1] % P)


def fp2_conj(a):
    return (a[0], -a[1] % P)


def fp2_mul(a, b):
    v0 = a[0] * b[0]
    v1 = a[1] * b[1]
    c0 = (v0 - v1) % P
    c1 = ((a[0] + a[1]) * (b[0] + b[1]) - v0 - v1) % P
    return (c0, c1)


def fp2_sqr(a):
    c0 = ((a[0] + a[1]) * (a[0] - a[1])) % P
    c1 = (2 * a[0] * a[1]) % P
    return (c0, c1)


def fp2_scalar(a, k):
    return (a[0] * k % P, a[1] * k % P)


def fp2_mul_xi(a):
    # multiply by xi = 1 + u
    return ((a[0] - a[1]) % P, (a[0] + a[1]) % P)


def fp2_inv(a):
    d = _inv((a[0] * a[0] + a[1] * a[1]) % P, P)
    return (a[0] * d % P, -a[1] * d % P)


def fp2_pow(a, e):
    result = FP2_ONE
    base = a
    while e > 0:
        if e & 1:
            result = fp2_mul(result, base)
        base = fp2_sqr(base)
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# Fp6 = Fp2[v] / (v^3 - xi); elements are (c0, c1, c2)

FP6_ZERO = (FP2_ZERO, FP2_ZERO, FP2_ZERO)
FP6_ONE = (FP2_ONE, FP2_ZERO, FP2_ZERO)


def fp6_add(a, b):
    return (fp2_add(a[0], b[0]), fp2_add(a[1], b[1]), fp2_add(a[2], b[2]))


def fp6_sub(a, b):
    return (fp2_sub(a[0], b[0]), fp2_sub(a[1], b[1]), fp2_sub(a[2], b[2]))


def fp6_neg(a):
    return (fp2_neg(a[0]), fp2_neg(a[1]), fp2_neg(a[2]))


def fp6_mul(a, b):
    t0 = fp2_mul(a[0], b[0])
    t1 = fp2_mul(a[1], b[1])
    t2 = fp2_mul(a[2], b[2])
    c0 = fp2_add(
        t0,
        fp2_mul_xi(
            fp2_sub(
                fp2_sub(fp2_mul(fp2_add(a[1], a[2]), fp2_add(b[1], b[2])), t1), t2
            )
        ),
    )
    c1 = fp2_add(
        fp2_sub(fp2_sub(fp2_mul(fp2_add(a[0], a[1]), fp2_add(b[0], b[1])), t0), t1),
        fp2_mul_xi(t2),
    )
    c2 = fp2_add(
        fp2_sub(fp2_sub(fp2_mul(fp2_add(a[0], a[2]), fp2_add(b[0], b[2])), t0), t2), t1
    )
    return (c0, c1, c2)


def fp6_sqr(a):
    return fp6_mul(a, a)


def fp6_mul_by_v(a):
    # multiply by v: (c0, c1, c2) -> (xi*c2, c0, c1)
    return (fp2_mul_xi(a[2]), a[0], a[1])


def fp6_inv(a):
    t0 = fp2_sub(fp2_sqr(a[0]), fp2_mul_xi(fp2_mul(a[1], a[2])))
    t1 = fp2_sub(fp2_mul_xi(fp2_sqr(a[2])), fp2_mul(a[0], a[1]))
    t2 = fp2_sub(fp2_sqr(a[1]), fp2_mul(a[0], a[2]))
    f = fp2_add(
        fp2_mul(a[0], t0),
        fp2_mul_xi(fp2_add(fp2_mul(a[2], t1), fp2_mul(a[1], t2))),
    )
    f = fp2_inv(f)
    return (fp2_mul(t0, f), fp2_mul(t1, f), fp2_mul(t2, f))


# ---------------------------------------------------------------------------
# Fp12 = Fp6[w] / (w^2 - v); elements are (c0, c1)

FP12_ONE = (FP6_ONE, FP6_ZERO)


def fp12_mul(a, b):
    v0 = fp6_mul(a[0], b[0])
    v1 = fp6_mul(a[1], b[1])
    c0 = fp6_add(v0, fp6_mul_by_v(v1))
    c1 = fp6_sub(fp6_sub(fp6_mul(fp6_add(a[0], a[1]), fp6_add(b[0], b[1])), v0), v1)
    return (c0, c1)


def fp12_sqr(a):
    t = fp6_mul(a[0], a[1])
    c0 = fp6_sub(
        fp6_sub(
            fp6_mul(fp6_add(a[0], a[1]), fp6_add(a[0], fp6_mul_by_v(a[1]))), t
        ),
        fp6_mul_by_v(t),
    )
    c1 = fp6_add(t, t)
    return (c0, c1)


def fp12_conj(a):
    return (a[0], fp6_neg(a[1]))


def fp12_inv(a):
    d = fp6_inv(fp6_sub(fp6_sqr(a[0]), fp6_mul_by_v(fp6_sqr(a[1]))))
    return (fp6_mul(a[0], d), fp6_neg(fp6_mul(a[1], d)))


def fp12_pow(a, e):
    result = FP12_ONE
    base = a
    while e > 0:
        if e & 1:
            result = fp12_mul(result, base)
        base = fp12_sqr(base)
        e >>= 1
    return result


# Frobenius coefficients: gamma1[k] = xi^(k*(P-1)/6), gamma2[k] = xi^(k*(P^2-1)/6)
XI = (1, 1)
_G1E = (P - 1) // 6
_G2E = (P * P - 1) // 6
FROB1 = tuple(fp2_pow(XI, k * _G1E) for k in range(6))
FROB2 = tuple(fp2_pow(XI, k * _G2E) for k in range(6))


def fp12_frob(a):
    # x -> x^P; conjugate each Fp2 coefficient, scale by gamma1[w-power]
    c0, c1 = a
    return (
        (
            fp2_mul(fp2_conj(c0[0]), FROB1[0]),
            fp2_mul(fp2_conj(c0[1]), FROB1[2]),
            fp2_mul(fp2_conj(c0[2]), FROB1[4]),
        ),
        (
            fp2_mul(fp2_conj(c1[0]), FROB1[1]),
            fp2_mul(fp2_conj(c1[1]), FROB1[3]),
            fp2_mul(fp2_conj(c1[2]), FROB1[5]),
        ),
    )


def fp12_frob2(a):
    c0, c1 = a
    return (
        (
            fp2_mul(c0[0], FROB2[0]),
            fp2_mul(c0[1], FROB2[2]),
            fp2_mul(c0[2], FROB2[4]),
        ),
        (
            fp2_mul(c1[0], FROB2[1]),
            fp2_mul(c1[1], FROB2[3]),
            fp2_mul(c1[2], FROB2[5]),
        ),
    )


# ---------------------------------------------------------------------------
# Jacobian point arithmetic, generic over the coordinate field.
# G1 points: (int X, int Y, int Z); G2 points: (fp2 X, fp2 Y, fp2 Z).
# Z == zero means the point at infinity.

_FP1_OPS = (
    lambda a, b: (a + b) % P,      # add
    lambda a, b: (a - b) % P,      # sub
    lambda a, b: (a * b) % P,      # mul
    lambda a: a * a % P,           # sqr
    lambda a: -a % P,              # neg
    lambda a: a == 0,              # is_zero
    0,
    1,
)
_FP2_OPS = (fp2_add, fp2_sub, fp2_mul, fp2_sqr, fp2_neg, lambda a: a == FP2_ZERO, FP2_ZERO, FP2_ONE)


def _pt_is_inf(pt, ops):
    return ops[5](pt[2])


def _pt_double(pt, ops):
    add, sub, mul, sqr, neg, is_zero, zero, one = ops
    X, Y, Z = pt
    if is_zero(Z):
        return pt
    A = sqr(X)
    B = sqr(Y)
    C = sqr(B)
    D = sub(sub(sqr(add(X, B)), A), C)
    D = add(D, D)
    E = add(add(A, A), A)
    F = sqr(E)
    X3 = sub(F, add(D, D))
    C8 = add(C, C)
    C8 = add(C8, C8)
    C8 = add(C8, C8)
    Y3 = sub(mul(E, sub(D, X3)), C8)
    Z3 = mul(Y, Z)
    Z3 = add(Z3, Z3)
    return (X3, Y3, Z3)


def _pt_add(p1, p2, ops):
    add, sub, mul, sqr, neg, is_zero, zero, one = ops
    if is_zero(p1[2]):
        return p2
    if is_zero(p2[2]):
        return p1
    X1, Y1, Z1 = p1
    X2, Y2, Z2 = p2
    Z1Z1 = sqr(Z1)
    Z2Z2 = sqr(Z2)
    U1 = mul(X1, Z2Z2)
    U2 = mul(X2, Z1Z1)
    S1 = mul(mul(Y1, Z2), Z2Z2)
    S2 = mul(mul(Y2, Z1), Z1Z1)
    H = sub(U2, U1)
    R = sub(S2, S1)
    if is_zero(H):
        if is_zero(R):
            return _pt_double(p1, ops)
        return (one, one, zero)
    HH = sqr(H)
    HHH = mul(H, HH)
    V = mul(U1, HH)
    X3 = sub(sub(sqr(R), HHH), add(V, V))
    Y3 = sub(mul(R, sub(V, X3)), mul(S1, HHH))
    Z3 = mul(mul(Z1, Z2), H)
    return (X3, Y3, Z3)


def _pt_neg(pt, ops):
    return (pt[0], ops[4](pt[1]), pt[2])


def _pt_mul(pt, k, ops):
    if k < 0:
        raise ValueError("negative scalar")
    acc = (ops[7], ops[7], ops[6])
    if k == 0 or _pt_is_inf(pt, ops):
        return acc
    for bit in bin(k)[2:]:
        acc = _pt_double(acc, ops)
        if bit == "1":
            acc = _pt_add(acc, pt, ops)
    return acc


def _pt_eq(p1, p2, ops):
    add, sub, mul, sqr = ops[0], ops[1], ops[2], ops[3]
    inf1 = _pt_is_inf(p1, ops)
    inf2 = _pt_is_inf(p2, ops)
    if inf1 or inf2:
        return inf1 and inf2
    Z1Z1 = sqr(p1[2])
    Z2Z2 = sqr(p2[2])
    if mul(p1[0], Z2Z2) != mul(p2[0], Z1Z1):
        return False
    return mul(mul(p1[1], p2[2]), Z2Z2) == mul(mul(p2[1], p1[2]), Z1Z1)


def _pt_affine(pt, ops, inv):
    if _pt_is_inf(pt, ops):
        return None
    mul, sqr = ops[2], ops[3]
    zi = inv(pt[2])
    zi2 = sqr(zi)
    return (mul(pt[0], zi2), mul(mul(pt[1], zi), zi2))


# ---------------------------------------------------------------------------
# Backend API: G1

G1_INF = (1, 1, 0)


def g1_generator():
    return (G1_X, G1_Y, 1)


def g1_infinity():
    return G1_INF


def g1_is_infinity(a):
    return a[2] == 0


def g1_add(a, b):
    return _pt_add(a, b, _FP1_OPS)


def g1_neg(a):
    return _pt_neg(a, _FP1_OPS)


def g1_mul(a, k):
    return _pt_mul(a, k, _FP1_OPS)


def g1_eq(a, b):
    return _pt_eq(a, b, _FP1_OPS)


def g1_affine(a):
    return _pt_affine(a, _FP1_OPS, lambda z: _inv(z, P))


def g1_from_affine(x, y):
    if not (0 <= x < P and 0 <= y < P):
        raise ValueError("coordinate out of range")
    if (y * y - (x * x * x + B_COEFF)) % P != 0:
        raise ValueError("point not on curve")
    return (x, y, 1)


def g1_in_subgroup(a):
    if a[2] == 0:
        return True
    return g1_mul(a, ORDER)[2] == 0


def g1_msm(points, scalars):
    acc = G1_INF
    for pt, k in zip(points, scalars):
        acc = g1_add(acc, g1_mul(pt, k))
    return acc


# ---------------------------------------------------------------------------
# Backend API: G2

G2_INF = (FP2_ONE, FP2_ONE, FP2_ZERO)


def g2_generator():
    return (G2_X, G2_Y, FP2_ONE)


def g2_infinity():
    return G2_INF


def g2_is_infinity(a):
    return a[2] == FP2_ZERO


def g2_add(a, b):
    return _pt_add(a, b, _FP2_OPS)


def g2_neg(a):
    return _pt_neg(a, _FP2_OPS)


def g2_mul(a, k):
    return _pt_mul(a, k, _FP2_OPS)


def g2_eq(a, b):
    return _pt_eq(a, b, _FP2_OPS)


def g2_affine(a):
    return _pt_affine(a, _FP2_OPS, fp2_inv)


def g2_from_affine(x, y):
    for c in (x[0], x[1], y[0], y[1]):
        if not 0 <= c < P:
            raise ValueError("coordinate out of range")
    lhs = fp2_sqr(y)
    rhs = fp2_add(fp2_mul(fp2_sqr(x), x), B2_COEFF)
    if lhs != rhs:
        raise ValueError("point not on twist")
    return (x, y, FP2_ONE)


def g2_in_subgroup(a):
    if a[2] == FP2_ZERO:
        return True
    return g2_mul(a, ORDER)[2] == FP2_ZERO


# ---------------------------------------------------------------------------
# Backend API: GT (Fp12 values in the order-r subgroup)


def gt_one():
    return FP12_ONE


def gt_is_one(a):
    return a == FP12_ONE


def gt_mul(a, b):
    return fp12_mul(a, b)


def gt_inv(a):
    return fp12_inv(a)


def gt_pow(a, k):
    if k < 0:
        raise ValueError("negative exponent")
    return fp12_pow(a, k)


def gt_eq(a, b):
    return a == b


def gt_coeffs(a):
    c0, c1 = a
    out = []
    for c6 in (c0, c1):
        for c2 in c6:
            out.append(c2[0])
            out.append(c2[1])
    return tuple(out)


def gt_from_coeffs(coeffs):
    v = list(coeffs)
    if len(v) != 12:
        raise ValueError("need 12 coefficients")
    for c in v:
        if not 0 <= c < P:
            raise ValueError("coefficient out of range")
    return (
        ((v[0], v[1]), (v[2], v[3]), (v[4], v[5])),
        ((v[6], v[7]), (v[8], v[9]), (v[10], v[11])),
    )


# ---------------------------------------------------------------------------
# Optimal ate pairing.
#
# G2 points live on the twist y^2 = x^3 + 4(u+1); the untwisting map into
# Fp12 is (x, y) -> (x/w^2, y/w^3) with w^6 = xi.  A line evaluated at the
# G1 point (px, py) then takes the sparse form
#     A + B*w^3 + C*w^5,  A, B, C in Fp2
# after scaling by an Fp2 constant (absorbed by the final exponentiation).

_X_BITS = bin(BLS_X)[3:]  # MSB consumed by the initial value


def _line_sparse_mul(f, a, b, c):
    # multiply f by A + B*w^3 + C*w^5: tower slots c0.c0, c1.c1, c1.c2
    ell = ((a, FP2_ZERO, FP2_ZERO), (FP2_ZERO, b, c))
    return fp12_mul(f, ell)


def _dbl_step(T, px, py):
    X, Y, Z = T
    XX = fp2_sqr(X)
    YY = fp2_sqr(Y)
    ZZ = fp2_sqr(Z)
    # line: A = -py*xi*2YZ^3, B = 2Y^2 - 3X^3, C = px*3X^2*Z^2
    t = fp2_mul(fp2_mul(Y, Z), ZZ)
    A = fp2_scalar(fp2_mul_xi(fp2_add(t, t)), P - py)
    XXX = fp2_mul(XX, X)
    B = fp2_sub(fp2_add(YY, YY), fp2_add(fp2_add(XXX, XXX), XXX))
    tc = fp2_mul(XX, ZZ)
    C = fp2_scalar(fp2_add(fp2_add(tc, tc), tc), px)
    return (A, B, C), _pt_double(T, _FP2_OPS)


def _add_step(T, Q, px, py):
    X, Y, Z = T
    xq, yq = Q
    ZZ = fp2_sqr(Z)
    U2 = fp2_mul(xq, ZZ)
    S2 = fp2_mul(fp2_mul(yq, Z), ZZ)
    H = fp2_sub(U2, X)
    R = fp2_sub(S2, Y)
    ZH = fp2_mul(Z, H)
    # line: A = -py*xi*ZH, B = yq*ZH - R*xq, C = px*R
    A = fp2_scalar(fp2_mul_xi(ZH), P - py)
    B = fp2_sub(fp2_mul(yq, ZH), fp2_mul(R, xq))
    C = fp2_scalar(R, px)
    HH = fp2_sqr(H)
    HHH = fp2_mul(H, HH)
    V = fp2_mul(X, HH)
    X3 = fp2_sub(fp2_sub(fp2_sqr(R), HHH), fp2_add(V, V))
    Y3 = fp2_sub(fp2_mul(R, fp2_sub(V, X3)), fp2_mul(Y, HHH))
    Z3 = ZH
    return (A, B, C), (X3, Y3, Z3)


def _miller_loop(p_aff, q_aff):
    px, py = p_aff
    f = FP12_ONE
    T = (q_aff[0], q_aff[1], FP2_ONE)
    for bit in _X_BITS:
        f = fp12_sqr(f)
        line, T = _dbl_step(T, px, py)
        f = _line_sparse_mul(f, *line)
        if bit == "1":
            line, T = _add_step(T, q_aff, px, py)
            f = _line_sparse_mul(f, *line)
    # the curve parameter is negative
    return fp12_conj(f)


def _cyc_pow_x(a):
    # a^x for cyclotomic a, x = -BLS_X; inverse is conjugation there
    result = a
    for bit in _X_BITS:
        result = fp12_sqr(result)
        if bit == "1":
            result = fp12_mul(result, a)
    return fp12_conj(result)


def _final_exp(f):
    # easy part: f^((p^6-1)(p^2+1))
    t = fp12_mul(fp12_conj(f), fp12_inv(f))
    t = fp12_mul(fp12_frob2(t), t)
    # hard part, exponent 3(p^4-p^2+1)/r = (x-1)^2 (x+p) (x^2+p^2-1) + 3
    t0 = fp12_mul(_cyc_pow_x(t), fp12_conj(t))          # t^(x-1)
    t1 = fp12_mul(_cyc_pow_x(t0), fp12_conj(t0))        # t^((x-1)^2)
    t2 = fp12_mul(_cyc_pow_x(t1), fp12_frob(t1))        # t1^(x+p)
    t3 = fp12_mul(
        fp12_mul(_cyc_pow_x(_cyc_pow_x(t2)), fp12_frob2(t2)), fp12_conj(t2)
    )                                                   # t2^(x^2+p^2-1)
    return fp12_mul(t3, fp12_mul(fp12_sqr(t), t))


def pairing(a, b):
    if a[2] == 0 or b[2] == FP2_ZERO:
        return FP12_ONE
    p_aff = g1_affine(a)
    q_aff = g2_affine(b)
    return _final_exp(_miller_loop(p_aff, q_aff))


# ---------------------------------------------------------------------------
# Shallue-van de Woestijne map to the curve (not cofactor-cleared).

def _legendre(a):
    if a == 0:
        return 0
    return 1 if pow(a, (P - 1) // 2, P) == 1 else -1


def _sqrt(a):
    return pow(a, (P + 1) // 4, P)


def _svdw_constants():
    z = -3 % P
    gz = (z * z * z + B_COEFF) % P
    c1 = gz
    c2 = -z * _inv(2, P) % P
    c3 = _sqrt(-gz * (3 * z * z) % P)
    if c3 & 1:
        c3 = P - c3
    c4 = -4 * gz * _inv(3 * z * z % P, P) % P
    return z, c1, c2, c3, c4


_SVDW_Z, _SVDW_C1, _SVDW_C2, _SVDW_C3, _SVDW_C4 = _svdw_constants()


def g1_map_to_curve(u):
    u %= P
    tv1 = u * u % P * _SVDW_C1 % P
    tv2 = (1 + tv1) % P
    tv1 = (1 - tv1) % P
    tv3 = tv1 * tv2 % P
    tv3 = _inv(tv3, P) if tv3 else 0
    tv4 = u * tv1 % P * tv3 % P * _SVDW_C3 % P
    x1 = (_SVDW_C2 - tv4) % P
    gx1 = (x1 * x1 % P * x1 + B_COEFF) % P
    e1 = _legendre(gx1) >= 0
    x2 = (_SVDW_C2 + tv4) % P
    gx2 = (x2 * x2 % P * x2 + B_COEFF) % P
    e2 = _legendre(gx2) >= 0 and not e1
    x3 = tv2 * tv2 % P * tv3 % P
    x3 = x3 * x3 % P * _SVDW_C4 % P
    x3 = (x3 + _SVDW_Z) % P
    x = x1 if e1 else (x2 if e2 else x3)
    gx = (x * x % P * x + B_COEFF) % P
    y = _sqrt(gx)
    if y * y % P != gx:
        raise ArithmeticError("svdw: no square root")  # unreachable by construction
    if (u & 1) != (y & 1):
        y = P - y
    return (x, y, 1)
