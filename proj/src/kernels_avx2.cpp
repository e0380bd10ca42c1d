// AVX2 + FMA backend. This translation unit is compiled with -mavx2 -mfma;
// callers must check CPU support before routing work here (see kernels.cpp).
//
// Complex doubles are kept interleaved (re,im) as std::complex guarantees,
// so one 256-bit lane holds two complex values. A complex multiply is the
// usual permute/fmaddsub pair:
//   p = ar*b -/+ ai*swap(b)  ->  [ar*br - ai*bi, ar*bi + ai*br]

#include "wgmsim/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace wgmsim::kern {

namespace {

inline __m256d cmul(__m256d ar, __m256d ai, __m256d b) {
    const __m256d bswap = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

// Conjugate of the scalar times vector: conj(s) * b.
inline __m256d cmul_conj(__m256d sr, __m256d si, __m256d b) {
    const __m256d bswap = _mm256_permute_pd(b, 0x5);
    return _mm256_fmsubadd_pd(sr, b, _mm256_mul_pd(si, bswap));
}

void matmul_avx2(const cplx* a, const cplx* b, cplx* c, int n) {
    const double* bd = reinterpret_cast<const double*>(b);
    double* cd = reinterpret_cast<double*>(c);

    for (int i = 0; i < n; ++i) {
        const cplx* arow = a + static_cast<long>(i) * n;
        double* crow = cd + 2L * i * n;

        int jb = 0;
        // 8-complex tiles held in four accumulators across the k loop.
        for (; jb + 8 <= n; jb += 8) {
            __m256d acc0 = _mm256_setzero_pd();
            __m256d acc1 = _mm256_setzero_pd();
            __m256d acc2 = _mm256_setzero_pd();
            __m256d acc3 = _mm256_setzero_pd();
            for (int k = 0; k < n; ++k) {
                const __m256d ar = _mm256_set1_pd(arow[k].real());
                const __m256d ai = _mm256_set1_pd(arow[k].imag());
                const double* brow = bd + 2L * k * n + 2L * jb;
                acc0 = _mm256_add_pd(acc0, cmul(ar, ai, _mm256_loadu_pd(brow + 0)));
                acc1 = _mm256_add_pd(acc1, cmul(ar, ai, _mm256_loadu_pd(brow + 4)));
                acc2 = _mm256_add_pd(acc2, cmul(ar, ai, _mm256_loadu_pd(brow + 8)));
                acc3 = _mm256_add_pd(acc3, cmul(ar, ai, _mm256_loadu_pd(brow + 12)));
            }
            _mm256_storeu_pd(crow + 2L * jb + 0, acc0);
            _mm256_storeu_pd(crow + 2L * jb + 4, acc1);
            _mm256_storeu_pd(crow + 2L * jb + 8, acc2);
            _mm256_storeu_pd(crow + 2L * jb + 12, acc3);
        }
        for (; jb + 2 <= n; jb += 2) {
            __m256d acc = _mm256_setzero_pd();
            for (int k = 0; k < n; ++k) {
                const __m256d ar = _mm256_set1_pd(arow[k].real());
                const __m256d ai = _mm256_set1_pd(arow[k].imag());
                acc = _mm256_add_pd(acc, cmul(ar, ai, _mm256_loadu_pd(bd + 2L * k * n + 2L * jb)));
            }
            _mm256_storeu_pd(crow + 2L * jb, acc);
        }
        if (jb < n) {  // odd trailing column
            cplx acc(0.0, 0.0);
            for (int k = 0; k < n; ++k) acc += arow[k] * b[static_cast<long>(k) * n + jb];
            c[static_cast<long>(i) * n + jb] = acc;
        }
    }
}

void matvec_avx2(const cplx* a, const cplx* x, cplx* y, int n) {
    const double* xd = reinterpret_cast<const double*>(x);
    for (int i = 0; i < n; ++i) {
        const cplx* arow = a + static_cast<long>(i) * n;
        const double* ad = reinterpret_cast<const double*>(arow);
        __m256d acc = _mm256_setzero_pd();
        int j = 0;
        for (; j + 2 <= n; j += 2) {
            const __m256d av = _mm256_loadu_pd(ad + 2 * j);
            const __m256d xv = _mm256_loadu_pd(xd + 2 * j);
            const __m256d xswap = _mm256_permute_pd(xv, 0x5);
            // per-lane complex product a*x with the broadcast on the fly:
            // split av into (re,re) and (im,im) lane pairs
            const __m256d are = _mm256_movedup_pd(av);
            const __m256d aim = _mm256_permute_pd(av, 0xF);
            acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(are, xv, _mm256_mul_pd(aim, xswap)));
        }
        double buf[4];
        _mm256_storeu_pd(buf, acc);
        cplx sum(buf[0] + buf[2], buf[1] + buf[3]);
        for (; j < n; ++j) sum += arow[j] * x[j];
        y[i] = sum;
    }
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, int n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    int i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul(ar, ai, xv)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void rotate_pair_avx2(double c, cplx s, cplx* x, cplx* y, int n) {
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    double* xd = reinterpret_cast<double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    int i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        const __m256d xnew = _mm256_sub_pd(_mm256_mul_pd(cv, xv), cmul(sr, si, yv));
        const __m256d ynew = _mm256_add_pd(cmul_conj(sr, si, xv), _mm256_mul_pd(cv, yv));
        _mm256_storeu_pd(xd + 2 * i, xnew);
        _mm256_storeu_pd(yd + 2 * i, ynew);
    }
    const cplx sc = std::conj(s);
    for (; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = sc * xi + c * yi;
    }
}

}  // namespace

const Kernels* avx2_kernels() {
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (!supported) return nullptr;
    static const Kernels k{"avx2", matmul_avx2, matvec_avx2, axpy_avx2, rotate_pair_avx2};
    return &k;
}

}  // namespace wgmsim::kern

#else

namespace wgmsim::kern {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace wgmsim::kern

#endif
