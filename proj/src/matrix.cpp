#include "statemon/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "statemon/errors.hpp"

namespace statemon {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::max_abs() const {
    double best = 0.0;
    for (double v : data_) best = std::max(best, std::fabs(v));
    return best;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
    return out;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
    double sum = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const double d = a(i, j) - b(i, j);
            sum += d * d;
        }
    return std::sqrt(sum);
}

std::vector<double> row_times(std::span<const double> v, const Matrix& m) {
    std::vector<double> out(m.cols(), 0.0);
    for (int i = 0; i < m.rows(); ++i) {
        const double vi = v[i];
        if (vi == 0.0) continue;
        for (int j = 0; j < m.cols(); ++j) out[j] += vi * m(i, j);
    }
    return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<double> solve_linear_pinned(Matrix a, std::vector<double> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw DimensionError("solve_linear_pinned: system is not square");

    const double scale = std::max(1.0, a.max_abs());
    const double pivot_tol = 1e-12 * scale;

    std::vector<int> pivot_row_of_col(n, -1);
    int next_row = 0;
    for (int col = 0; col < n && next_row < n; ++col) {
        int p = next_row;
        for (int r = next_row + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(p, col))) p = r;
        if (std::fabs(a(p, col)) <= pivot_tol) continue;  // free column

        if (p != next_row) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(next_row, j));
            std::swap(b[p], b[next_row]);
        }
        const double piv = a(next_row, col);
        for (int j = 0; j < n; ++j) a(next_row, j) /= piv;
        b[next_row] /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == next_row) continue;
            const double f = a(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) a(r, j) -= f * a(next_row, j);
            b[r] -= f * b[next_row];
        }
        pivot_row_of_col[col] = next_row;
        ++next_row;
    }

    // Leftover all-zero rows must have zero right-hand side.
    for (int r = next_row; r < n; ++r)
        if (std::fabs(b[r]) > 1e-9 * scale)
            throw SingularSystem("linear system is inconsistent (rank-deficient with conflicting equations)");

    std::vector<double> x(n, 0.0);
    for (int col = 0; col < n; ++col)
        if (pivot_row_of_col[col] >= 0) x[col] = b[pivot_row_of_col[col]];
    return x;
}

}  // namespace statemon
