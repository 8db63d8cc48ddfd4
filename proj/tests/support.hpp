#pragma once

// Small independent oracles shared by the test binaries. Nothing here calls
// into the library's numerical code.

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

namespace testsupport {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // row-major nested

inline Vec matvec(const Mat& a, const Vec& x) {
    Vec y(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

inline double norm(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Solves the SPD system G x = r by Cholesky.
inline Vec cholesky_solve(Mat g, Vec r) {
    const std::size_t n = g.size();
    for (std::size_t j = 0; j < n; ++j) {
        double d = g[j][j];
        for (std::size_t k = 0; k < j; ++k) d -= g[j][k] * g[j][k];
        if (d <= 0.0) throw std::runtime_error("cholesky: not positive definite");
        g[j][j] = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = g[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= g[i][k] * g[j][k];
            g[i][j] = s / g[j][j];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) r[i] -= g[i][k] * r[k];
        r[i] /= g[i][i];
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) r[i] -= g[k][i] * r[k];
        r[i] /= g[i][i];
    }
    return r;
}

// Least squares via the normal equations (A^T A) x = A^T b.
inline Vec normal_equations(const Mat& a, const Vec& b) {
    const std::size_t n = a.front().size();
    Mat g(n, Vec(n, 0.0));
    Vec r(n, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t p = 0; p < n; ++p) {
            r[p] += a[i][p] * b[i];
            for (std::size_t q = 0; q < n; ++q) g[p][q] += a[i][p] * a[i][q];
        }
    }
    return cholesky_solve(g, r);
}

// Newton form of the interpolating polynomial, evaluated by Horner.
class NewtonPoly {
public:
    NewtonPoly(Vec x, Vec y) : x_(std::move(x)), c_(std::move(y)) {
        const std::size_t n = x_.size();
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t i = n - 1; i >= k; --i) c_[i] = (c_[i] - c_[i - 1]) / (x_[i] - x_[i - k]);
    }
    double operator()(double t) const {
        double v = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) v = v * (t - x_[i]) + c_[i];
        return v;
    }

private:
    Vec x_;
    Vec c_;
};

inline Vec random_vec(std::mt19937_64& g, std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vec v(n);
    for (double& x : v) x = u(g);
    return v;
}

}  // namespace testsupport
