#include "croftonlab/quadrature.hpp"

#include <cmath>
#include <vector>

#include "croftonlab/error.hpp"

namespace croftonlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr long kPeriodicNodeCap = 1 << 20;

// fixed-order pairwise summation for deterministic results
double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

} // namespace

QuadResult integrate_periodic(const std::function<double(double)>& f, double tol) {
    QuadResult res;
    long n = 16;
    std::vector<double> vals(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = f(kTwoPi * i / n);
    res.evaluations = n;
    double prev = kTwoPi * pairwise_sum(vals, 0, vals.size()) / n;

    while (n < kPeriodicNodeCap) {
        // midpoints of the current grid
        std::vector<double> mids(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i)
            mids[static_cast<std::size_t>(i)] = f(kTwoPi * (2 * i + 1) / (2 * n));
        res.evaluations += n;

        std::vector<double> merged(static_cast<std::size_t>(2 * n));
        for (long i = 0; i < n; ++i) {
            merged[static_cast<std::size_t>(2 * i)] = vals[static_cast<std::size_t>(i)];
            merged[static_cast<std::size_t>(2 * i + 1)] = mids[static_cast<std::size_t>(i)];
        }
        vals.swap(merged);
        n *= 2;

        const double cur = kTwoPi * pairwise_sum(vals, 0, vals.size()) / n;
        res.error_estimate = std::abs(cur - prev);
        prev = cur;
        if (res.error_estimate < tol && n >= 64) {
            res.value = cur;
            return res;
        }
    }
    res.value = prev;
    res.converged = false;
    return res;
}

namespace {

struct AdaptiveState {
    const std::function<double(double)>* f;
    long evaluations = 0;
    bool converged = true;
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(AdaptiveState& st, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth, double* err_accum) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = (*st.f)(lm);
    const double frm = (*st.f)(rm);
    st.evaluations += 2;
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth >= 50) {
        st.converged = false;
        *err_accum += std::abs(delta);
        return left + right + delta / 15.0;
    }
    if (std::abs(delta) <= 15.0 * tol) {
        *err_accum += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adaptive_step(st, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, err_accum) +
           adaptive_step(st, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, err_accum);
}

} // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol) {
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0, 0, true};
        fail(ErrorCode::domain, "integrate_adaptive: requires a <= b");
    }
    AdaptiveState st{&f};
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    st.evaluations = 3;
    const double whole = simpson(fa, fm, fb, b - a);
    double err = 0.0;
    const double value = adaptive_step(st, a, b, fa, fm, fb, whole, tol, 0, &err);
    return {value, err, st.evaluations, st.converged};
}

double central_diff(const std::function<double(double)>& f, double t, double h, int order) {
    if (order == 3) return (f(t + h) - f(t - h)) / (2.0 * h);
    return (-f(t + 2.0 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2.0 * h)) / (12.0 * h);
}

double find_root_monotone(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
    double fa = f(lo), fb = f(hi);
    if (fa == 0.0) return lo;
    if (fb == 0.0) return hi;
    if (fa * fb > 0.0) fail(ErrorCode::domain, "find_root_monotone: invalid bracket");

    // Brent's method
    double a = lo, b = hi, c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    return b;
}

} // namespace croftonlab
