// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
//
// AVX2+FMA kernels. Vector exp/log/sincos are Cephes-derived polynomial
// evaluations (double precision, ~1-2 ulp over the reduced ranges used here).
// This translation unit is compiled with -mavx2 -mfma; execution is guarded
// by the runtime CPU check in avx2_ops().
#include "mox/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstring>

namespace mox::simd {
namespace {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

// ---- exp ----------------------------------------------------------------
// e^x = 2^n * e^r, r = x - n ln2 (Cody-Waite), e^r by the Cephes rational
// 1 + 2 r P(r^2) / (Q(r^2) - r P(r^2)), |r| <= ln2/2.

inline __m256d exp_pd(__m256d x) {
    const __m256d log2e = splat(1.4426950408889634073599);
    const __m256d c1 = splat(6.93145751953125e-1);
    const __m256d c2 = splat(1.42860682030941723212e-6);

    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, c1, x);
    r = _mm256_fnmadd_pd(n, c2, r);
    __m256d rr = _mm256_mul_pd(r, r);

    __m256d p = splat(1.26177193074810590878e-4);
    p = _mm256_fmadd_pd(p, rr, splat(3.02994407707441961300e-2));
    p = _mm256_fmadd_pd(p, rr, splat(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, r);

    __m256d q = splat(3.00198505138664455042e-6);
    q = _mm256_fmadd_pd(q, rr, splat(2.52448340349684104192e-3));
    q = _mm256_fmadd_pd(q, rr, splat(2.27265548208155028766e-1));
    q = _mm256_fmadd_pd(q, rr, splat(2.00000000000000000005e0));

    __m256d er = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    er = _mm256_fmadd_pd(splat(2.0), er, splat(1.0));

    // scale by 2^n via exponent-field insertion; n stays well inside
    // [-1022, 1023] for every caller (arguments bounded by ~745)
    __m128i ni = _mm256_cvtpd_epi32(n);
    __m256i ni64 = _mm256_cvtepi32_epi64(ni);
    __m256i biased = _mm256_add_epi64(ni64, _mm256_set1_epi64x(1023));
    __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(biased, 52));
    return _mm256_mul_pd(er, scale);
}

// ---- log ----------------------------------------------------------------
// x = m 2^e with m in [sqrt(1/2), sqrt(2)); log x = log m + e ln2 with the
// Cephes P/Q rational for log(1+f), f = m - 1. Requires x > 0 finite.

inline __m256d log_pd(__m256d x) {
    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    const __m256i half_exp = _mm256_set1_epi64x(0x3FE0000000000000LL);

    __m256i xi = _mm256_castpd_si256(x);
    __m256i expo = _mm256_srli_epi64(xi, 52);
    // m in [0.5, 1)
    __m256d m = _mm256_castsi256_pd(
        _mm256_or_si256(_mm256_and_si256(xi, mant_mask), half_exp));

    // biased exponent (in [1, 2046]) to double via the 2^52 magic constant
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
    __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(expo, magic)),
                              _mm256_castsi256_pd(magic));
    e = _mm256_sub_pd(e, splat(1022.0));

    // if m < sqrt(1/2): m *= 2, e -= 1
    const __m256d sqrth = splat(0.70710678118654752440);
    __m256d lt = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
    m = _mm256_add_pd(m, _mm256_and_pd(lt, m));
    e = _mm256_sub_pd(e, _mm256_and_pd(lt, splat(1.0)));
    m = _mm256_sub_pd(m, splat(1.0));

    __m256d z = _mm256_mul_pd(m, m);

    __m256d p = splat(1.01875663804580931796e-4);
    p = _mm256_fmadd_pd(p, m, splat(4.97494994976747001425e-1));
    p = _mm256_fmadd_pd(p, m, splat(4.70579119878881725854e0));
    p = _mm256_fmadd_pd(p, m, splat(1.44989225341610930846e1));
    p = _mm256_fmadd_pd(p, m, splat(1.79368678507819816313e1));
    p = _mm256_fmadd_pd(p, m, splat(7.70838733755885391666e0));

    __m256d q = _mm256_add_pd(m, splat(1.12873587189167450590e1));
    q = _mm256_fmadd_pd(q, m, splat(4.52279145837532221105e1));
    q = _mm256_fmadd_pd(q, m, splat(8.29875266912776603211e1));
    q = _mm256_fmadd_pd(q, m, splat(7.11544750618563894466e1));
    q = _mm256_fmadd_pd(q, m, splat(2.31251620126765340583e1));

    __m256d y = _mm256_mul_pd(_mm256_mul_pd(m, z), _mm256_div_pd(p, q));
    y = _mm256_fnmadd_pd(e, splat(2.121944400546905827679e-4), y);
    y = _mm256_fnmadd_pd(splat(0.5), z, y);
    __m256d res = _mm256_add_pd(m, y);
    res = _mm256_fmadd_pd(e, splat(0.693359375), res);
    return res;
}

// ---- sincos -------------------------------------------------------------
// Quadrant reduction by pi/2 (three-part Cody-Waite, good for |x| into the
// 1e8 range; callers stay below ~1e6) and the Cephes sin/cos minimax
// polynomials on |r| <= pi/4.

inline void sincos_pd(__m256d x, __m256d* s_out, __m256d* c_out) {
    const __m256d two_over_pi = splat(0.63661977236758134308);
    const __m256d p1 = splat(1.570796251296997070312500e0);
    const __m256d p2 = splat(7.549789415861596045961087e-8);
    const __m256d p3 = splat(5.390302529957764765544945e-15);

    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, two_over_pi),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, p1, x);
    r = _mm256_fnmadd_pd(n, p2, r);
    r = _mm256_fnmadd_pd(n, p3, r);

    __m256d z = _mm256_mul_pd(r, r);

    __m256d sp = splat(1.58962301576546568060e-10);
    sp = _mm256_fmadd_pd(sp, z, splat(-2.50507477628578072866e-8));
    sp = _mm256_fmadd_pd(sp, z, splat(2.75573136213857245213e-6));
    sp = _mm256_fmadd_pd(sp, z, splat(-1.98412698295895385996e-4));
    sp = _mm256_fmadd_pd(sp, z, splat(8.33333333332211858878e-3));
    sp = _mm256_fmadd_pd(sp, z, splat(-1.66666666666666307295e-1));
    __m256d sr = _mm256_fmadd_pd(_mm256_mul_pd(r, z), sp, r);

    __m256d cp = splat(-1.13585365213876817300e-11);
    cp = _mm256_fmadd_pd(cp, z, splat(2.08757008419747316778e-9));
    cp = _mm256_fmadd_pd(cp, z, splat(-2.75573141792967388112e-7));
    cp = _mm256_fmadd_pd(cp, z, splat(2.48015872888517179954e-5));
    cp = _mm256_fmadd_pd(cp, z, splat(-1.38888888888730564116e-3));
    cp = _mm256_fmadd_pd(cp, z, splat(4.16666666666665929218e-2));
    __m256d cr = _mm256_fnmadd_pd(splat(0.5), z, splat(1.0));
    cr = _mm256_fmadd_pd(_mm256_mul_pd(z, z), cp, cr);

    // quadrant bits from n (exact in double for |n| < 2^52)
    __m256d nh = _mm256_floor_pd(_mm256_mul_pd(n, splat(0.5)));
    __m256d q0 = _mm256_sub_pd(n, _mm256_add_pd(nh, nh));           // n mod 2
    __m256d q1 = _mm256_sub_pd(nh, _mm256_mul_pd(
        _mm256_floor_pd(_mm256_mul_pd(nh, splat(0.5))), splat(2.0)));  // floor(n/2) mod 2
    // negative n: q0/q1 may come out as -1; normalize to {0,1}
    q0 = _mm256_andnot_pd(splat(-0.0), q0);
    q1 = _mm256_andnot_pd(splat(-0.0), q1);
    __m256d swap = _mm256_cmp_pd(q0, splat(0.5), _CMP_GT_OQ);
    __m256d flip1 = _mm256_cmp_pd(q1, splat(0.5), _CMP_GT_OQ);

    __m256d sv = _mm256_blendv_pd(sr, cr, swap);
    __m256d cv = _mm256_blendv_pd(cr, sr, swap);
    const __m256d signbit = splat(-0.0);
    // sin sign: q1; cos sign: q0 xor q1
    __m256d ssign = _mm256_and_pd(flip1, signbit);
    __m256d csign = _mm256_and_pd(_mm256_xor_pd(swap, flip1), signbit);
    *s_out = _mm256_xor_pd(sv, ssign);
    *c_out = _mm256_xor_pd(cv, csign);
}

// ---- kernels ------------------------------------------------------------

void exp_cis_sum_avx2(const double* logs, std::size_t count, double a, double b,
                      double* out_re, double* out_im) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const __m256d va = splat(a);
    const __m256d vb = splat(b);

    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256d L = _mm256_loadu_pd(logs + i);
        __m256d radius = exp_pd(_mm256_mul_pd(va, L));
        __m256d s, c;
        sincos_pd(_mm256_mul_pd(vb, L), &s, &c);
        acc_re = _mm256_fmadd_pd(radius, c, acc_re);
        acc_im = _mm256_fmadd_pd(radius, s, acc_im);
    }
    double re = hsum(acc_re), im = hsum(acc_im);
    for (; i < count; ++i) {
        const double L = logs[i];
        const double r = std::exp(a * L);
        re += r * std::cos(b * L);
        im += r * std::sin(b * L);
    }
    *out_re += re;
    *out_im += im;
}

double shifted_power_sum_avx2(double x, double y2, double p,
                              std::int64_t n0, std::int64_t n1) {
    const __m256d vx = splat(x);
    const __m256d vy2 = splat(y2);
    const __m256d vp = splat(p);
    __m256d acc = _mm256_setzero_pd();

    std::int64_t n = n0;
    for (; n + 3 <= n1; n += 4) {
        __m256d vn = _mm256_set_pd(static_cast<double>(n + 3), static_cast<double>(n + 2),
                                   static_cast<double>(n + 1), static_cast<double>(n));
        __m256d u = _mm256_add_pd(vx, vn);
        __m256d q = _mm256_fmadd_pd(u, u, vy2);
        acc = _mm256_add_pd(acc, exp_pd(_mm256_mul_pd(vp, log_pd(q))));
    }
    double total = hsum(acc);
    for (; n <= n1; ++n) {
        const double u = x + static_cast<double>(n);
        total += std::exp(p * std::log(u * u + y2));
    }
    return total;
}

const Ops avx2_ops_table{"avx2", exp_cis_sum_avx2, shifted_power_sum_avx2};

bool cpu_has_avx2_fma() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops* ops = cpu_has_avx2_fma() ? &avx2_ops_table : nullptr;
    return ops;
}

}  // namespace mox::simd

#else  // non-x86 builds fall back to the scalar reference kernels

namespace mox::simd {
const Ops* avx2_ops() { return nullptr; }
}  // namespace mox::simd

#endif
