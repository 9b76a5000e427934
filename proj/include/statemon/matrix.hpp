#pragma once

#include <span>
#include <vector>

namespace statemon {

/// Dense row-major matrix. State spaces in this project are small (K on the
/// order of tens), so everything is plain O(K^3) arithmetic.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, value) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    std::span<double> row(int r) { return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)}; }
    std::span<const double> row(int r) const {
        return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
    }

    double max_abs() const;

    bool operator==(const Matrix&) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

double frobenius_distance(const Matrix& a, const Matrix& b);

/// v^T * m for a length-rows(m) vector.
std::vector<double> row_times(std::span<const double> v, const Matrix& m);

double dot(std::span<const double> a, std::span<const double> b);

/// Solves the square system a*x = b by Gauss-Jordan elimination with partial
/// pivoting. Rank-deficient but consistent systems are solved by pinning the
/// free variables to zero; inconsistent systems throw SingularSystem.
std::vector<double> solve_linear_pinned(Matrix a, std::vector<double> b);

}  // namespace statemon
