#include "elm/matrix.hpp"

#include <cmath>
#include <string>

#include "elm/errors.hpp"

namespace elm {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw ContractViolation("Matrix: entries length " + std::to_string(entries_.size()) +
                                " != rows*cols " + std::to_string(rows_ * cols_));
    }
    for (double v : entries_) {
        if (!std::isfinite(v)) throw ValidationError("Matrix: non-finite entry");
    }
}

Matrix Matrix::identity(std::size_t n) {
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return {n, n, std::move(e)};
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    const std::size_t n = diag.size();
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
    return {n, n, std::move(e)};
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<double> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw ContractViolation("Matrix::from_rows: ragged rows");
        e.insert(e.end(), row.begin(), row.end());
    }
    return {r, c, std::move(e)};
}

std::vector<double> Matrix::multiply(std::span<const double> x) const {
    if (x.size() != cols_) throw ContractViolation("Matrix::multiply: dimension mismatch");
    std::vector<double> y(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto rw = row(r);
        double s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += rw[c] * x[c];
        y[r] = s;
    }
    return y;
}

double norm2(std::span<const double> v) noexcept {
    // scaled accumulation avoids overflow for large entries
    double scale = 0.0;
    double ssq = 1.0;
    for (double x : v) {
        if (x == 0.0) continue;
        const double a = std::abs(x);
        if (scale < a) {
            ssq = 1.0 + ssq * (scale / a) * (scale / a);
            scale = a;
        } else {
            ssq += (a / scale) * (a / scale);
        }
    }
    return scale * std::sqrt(ssq);
}

}  // namespace elm
