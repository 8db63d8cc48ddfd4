#include "elm/lsq.hpp"

// rows are solved concurrently by the experiment runner; keep each solve single-threaded
#define EIGEN_DONT_PARALLELIZE

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "elm/errors.hpp"

namespace elm {
namespace {

using RowMajorMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::MatrixXd to_eigen(const Matrix& a) {
    return Eigen::Map<const RowMajorMat>(a.data().data(), static_cast<Eigen::Index>(a.rows()),
                                         static_cast<Eigen::Index>(a.cols()));
}

double checked_tol(const Matrix& a, std::optional<double> rank_tol) {
    const double tol = rank_tol.value_or(default_rank_tol(a));
    if (!(tol > 0.0 && tol < 1.0)) throw ContractViolation("rank_tol must lie in (0, 1)");
    return tol;
}

std::size_t kept_rank(const Eigen::VectorXd& sigma, double tol) {
    if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
    const double cutoff = tol * sigma(0);
    std::size_t r = 0;
    while (r < static_cast<std::size_t>(sigma.size()) && sigma(static_cast<Eigen::Index>(r)) > cutoff) ++r;
    return r;
}

}  // namespace

double default_rank_tol(const Matrix& a) noexcept {
    return std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(a.rows(), a.cols()));
}

LsqSolution solve_min_norm_lsq(const Matrix& a, std::span<const double> b, std::optional<double> rank_tol) {
    if (a.rows() != b.size()) throw ContractViolation("solve_min_norm_lsq: rows(A) != length(b)");
    if (a.empty()) throw ContractViolation("solve_min_norm_lsq: empty system");
    for (double v : b) {
        if (!std::isfinite(v)) throw ValidationError("solve_min_norm_lsq: non-finite right-hand side");
    }
    const double tol = checked_tol(a, rank_tol);

    const Eigen::MatrixXd ea = to_eigen(a);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(ea, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const std::size_t r = kept_rank(sigma, tol);

    const Eigen::Map<const Eigen::VectorXd> eb(b.data(), static_cast<Eigen::Index>(b.size()));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(ea.cols());
    if (r > 0) {
        const auto k = static_cast<Eigen::Index>(r);
        Eigen::VectorXd coeff = svd.matrixU().leftCols(k).transpose() * eb;
        coeff.array() /= sigma.head(k).array();
        x = svd.matrixV().leftCols(k) * coeff;
    }

    LsqSolution out;
    out.coefficients.assign(x.data(), x.data() + x.size());
    const Eigen::VectorXd res = ea * x - eb;
    out.residual_norm = norm2(std::span<const double>(res.data(), static_cast<std::size_t>(res.size())));
    out.effective_rank = r;
    out.sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    out.sigma_min_kept = r > 0 ? sigma(static_cast<Eigen::Index>(r) - 1) : 0.0;
    out.sigma_min = sigma.size() > 0 ? sigma(sigma.size() - 1) : 0.0;
    return out;
}

std::vector<double> singular_values(const Matrix& a) {
    if (a.empty()) throw ValidationError("singular_values: empty matrix");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(to_eigen(a));
    const Eigen::VectorXd& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

double condition_from_extremes(double sigma_max, double sigma_min, const Matrix& a) noexcept {
    if (sigma_max == 0.0 || sigma_min <= default_rank_tol(a) * sigma_max) return kConditionOverflow;
    return sigma_max / sigma_min;
}

double condition_estimate(const Matrix& a) {
    if (a.empty()) throw ValidationError("condition_estimate: empty matrix");
    const auto s = singular_values(a);
    return condition_from_extremes(s.front(), s.back(), a);
}

Matrix null_space_basis(const Matrix& a, std::optional<double> rank_tol) {
    if (a.empty()) throw ValidationError("null_space_basis: empty matrix");
    const double tol = checked_tol(a, rank_tol);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(to_eigen(a), Eigen::ComputeFullV);
    const std::size_t r = kept_rank(svd.singularValues(), tol);
    const std::size_t n = a.cols();
    const std::size_t k = n - r;
    std::vector<double> e(n * k);
    const Eigen::MatrixXd& v = svd.matrixV();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            e[i * k + j] = v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(r + j));
    return {n, k, std::move(e)};
}

}  // namespace elm
