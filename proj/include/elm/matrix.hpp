#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace elm {

/// Dense real matrix, row-major, immutable after construction.
///
/// Every entry is checked to be finite when the matrix is built; a
/// ValidationError is thrown otherwise.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> diag);
    /// Build from nested rows; all rows must have the same length.
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const noexcept {
        return entries_[r * cols_ + c];
    }
    [[nodiscard]] std::span<const double> row(std::size_t r) const noexcept {
        return {entries_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::span<const double> data() const noexcept { return entries_; }

    /// y = A x
    [[nodiscard]] std::vector<double> multiply(std::span<const double> x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

[[nodiscard]] double norm2(std::span<const double> v) noexcept;

}  // namespace elm
