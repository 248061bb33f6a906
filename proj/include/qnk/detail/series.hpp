#pragma once

// Theta series shared by the double and extended-precision paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "qnk/errors.hpp"

namespace qnk::detail {

using ext_real = boost::multiprecision::cpp_bin_float_50;
using ext_complex = boost::multiprecision::cpp_complex_50;

template <class C> struct scalar_traits;

template <> struct scalar_traits<std::complex<double>> {
    using real = double;
    static real pi() { return std::numbers::pi; }
};

template <> struct scalar_traits<ext_complex> {
    using real = ext_real;
    static real pi() { return boost::math::constants::pi<ext_real>(); }
};

template <class C> using real_t = typename scalar_traits<C>::real;

template <class C> C mk(real_t<C> re, real_t<C> im = 0) { return C(re, im); }

template <class C> C e_of(const C& z) {
    using std::exp;
    return exp(mk<C>(0, 2 * scalar_traits<C>::pi()) * z);
}

template <class C> struct SeriesValue {
    C value;
    real_t<C> scale; // largest term magnitude seen
};

// Sum f(m) over a symmetric window centred at m0, growing until two
// consecutive rounds are both below rel_tol * running max.
template <class C, class F>
SeriesValue<C> window_sum(F&& term, long m0, real_t<C> rel_tol, int max_index, const char* what) {
    using std::abs;
    C sum = term(m0);
    real_t<C> run = abs(sum);
    int quiet = 0;
    for (int M = 1;; ++M) {
        C tp = term(m0 + M), tm = term(m0 - M);
        sum += tp;
        sum += tm;
        real_t<C> ap = abs(tp), am = abs(tm);
        run = std::max(run, std::max(ap, am));
        if (ap <= rel_tol * run && am <= rel_tol * run) {
            if (++quiet >= 2) return {sum, run};
        } else {
            quiet = 0;
        }
        if (M >= max_index)
            throw Error(ErrorCode::TruncationNotConverged,
                        std::string(what) + " did not converge within max_index terms");
    }
}

template <class C>
SeriesValue<C> theta1_direct(const C& z, const C& eta, real_t<C> rel_tol, int max_index) {
    auto term = [&](long m) {
        real_t<C> rm = m;
        C t = e_of<C>(rm * z + (rm * (rm - 1) / 2) * eta);
        return (m % 2 == 0) ? t : C(-t);
    };
    return window_sum<C>(term, 0, rel_tol, max_index, "theta1");
}

template <class C> long floor_long(const real_t<C>& x) {
    using std::floor;
    return static_cast<long>(floor(x));
}

// theta(z0 + p*eta + q) = (-1)^p e(-p z0 - p(p-1)eta/2) theta(z0).
template <class C> C theta1_reduced(const C& z, const C& eta, real_t<C> rel_tol, int max_index) {
    long p = floor_long<C>(z.imag() / eta.imag());
    C z0 = z - real_t<C>(p) * eta;
    long q = floor_long<C>(z0.real());
    z0 -= mk<C>(real_t<C>(q));
    C v = theta1_direct<C>(z0, eta, rel_tol, max_index).value;
    if (p == 0) return v;
    real_t<C> rp = p;
    C f = e_of<C>(-rp * z0 - (rp * (rp - 1) / 2) * eta);
    return (p % 2 == 0) ? C(f * v) : C(-f * v);
}

inline int mod_n(long a, int n) {
    long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

template <class C>
C theta_alpha_t(int alpha, const C& z, const C& eta, int n, real_t<C> rel_tol, int max_index) {
    const int a = mod_n(alpha, n);
    const real_t<C> ra = a, rn = n;
    C pre = e_of<C>(ra * z + mk<C>(ra / (2 * rn)) + (ra * (ra - rn) / (2 * rn)) * eta);
    C prod = pre;
    for (int m = 0; m < n; ++m) {
        C arg = z + mk<C>(real_t<C>(m) / rn) + (ra / rn) * eta;
        prod *= theta1_reduced<C>(arg, eta, rel_tol, max_index);
    }
    return prod;
}

template <class C>
SeriesValue<C> theta_char_direct(real_t<C> a, real_t<C> b, const C& z, const C& eta,
                                 real_t<C> rel_tol, int max_index) {
    using std::round;
    auto term = [&](long m) {
        real_t<C> am = a + real_t<C>(m);
        return e_of<C>(am * (z + mk<C>(b)) + (am * am / 2) * eta);
    };
    long m0 = static_cast<long>(round(-a - z.imag() / eta.imag()));
    return window_sum<C>(term, m0, rel_tol, max_index, "theta_char");
}

// theta[a;b](z0 + s eta + t) = e(a t - s(z0 + b) - s^2 eta / 2) theta[a;b](z0).
template <class C>
C theta_char_reduced(real_t<C> a, real_t<C> b, const C& z, const C& eta, real_t<C> rel_tol,
                     int max_index) {
    long s = floor_long<C>(z.imag() / eta.imag());
    C z0 = z - real_t<C>(s) * eta;
    long t = floor_long<C>(z0.real());
    z0 -= mk<C>(real_t<C>(t));
    C v = theta_char_direct<C>(a, b, z0, eta, rel_tol, max_index).value;
    if (s == 0 && t == 0) return v;
    real_t<C> rs = s, rt = t;
    return e_of<C>(mk<C>(a * rt) - rs * (z0 + mk<C>(b)) - (rs * rs / 2) * eta) * v;
}

} // namespace qnk::detail
