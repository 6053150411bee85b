#include "polyadika/matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "polyadika/error.hpp"

namespace polyadika {

Matrix::Matrix(int rows, int cols, Scalar fill) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

Matrix Matrix::identity(int d, int p) {
    const Scalar zero = p ? Scalar::mod(0, p) : Scalar(0);
    const Scalar one = p ? Scalar::mod(1, p) : Scalar(1);
    Matrix m(d, d, zero);
    for (int i = 0; i < d; ++i) m(i, i) = one;
    return m;
}

Matrix Matrix::permutation(const std::vector<Elem>& image) {
    const int d = static_cast<int>(image.size());
    Matrix m(d, d);
    for (int c = 0; c < d; ++c) {
        if (image[c] >= Elem(d)) throw DomainError("permutation image out of range");
        m(int(image[c]), c) = 1;
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw DomainError("trace of a non-square matrix");
    Scalar t = 0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

namespace {

// Row echelon form in place; returns pivot columns and the sign of the
// row permutation.
std::vector<int> eliminate(std::vector<std::vector<Scalar>>& m, int cols, int* swaps) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            if (swaps) ++*swaps;
        }
        const Scalar inv = m[r][c].inverse();
        for (auto& v : m[r]) v *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Scalar f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Scalar Matrix::determinant() const {
    if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
    std::vector<std::vector<Scalar>> m(rows_);
    for (int r = 0; r < rows_; ++r) m[r].assign(a_.begin() + std::size_t(r) * cols_, a_.begin() + std::size_t(r + 1) * cols_);
    // Track the scaling applied during normalization.
    Scalar det = 1;
    int sw = 0;
    for (int c = 0, r = 0; c < cols_; ++c, ++r) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return det * Scalar(0);
        if (piv != r) {
            std::swap(m[piv], m[r]);
            ++sw;
        }
        det *= m[r][c];
        const Scalar inv = m[r][c].inverse();
        for (int i = r + 1; i < rows_; ++i) {
            if (m[i][c].is_zero()) continue;
            const Scalar f = m[i][c] * inv;
            for (int j = c; j < cols_; ++j) m[i][j] -= f * m[r][j];
        }
    }
    return sw % 2 ? -det : det;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
    const int d = rows_;
    std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(2 * d));
    int p = 0;
    for (const auto& v : a_)
        if (v.prime()) p = v.prime();
    const Scalar one = p ? Scalar::mod(1, p) : Scalar(1);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) m[r][c] = (*this)(r, c);
        for (int c = 0; c < d; ++c) m[r][d + c] = c == r ? one : one - one;
    }
    auto piv = eliminate(m, d, nullptr);
    if (static_cast<int>(piv.size()) != d) throw DomainError("matrix is singular");
    Matrix inv(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) inv(r, c) = m[r][d + c];
    return inv;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if ((*this)(r, c) != Scalar(r == c ? 1 : 0)) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << '\n';
    }
    return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimensions do not match");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimensions do not match");
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimensions do not match");
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r = m;
    for (auto& v : r.a_) v *= s;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw DomainError("right-hand side has the wrong length");
    const int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols + 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m[r][c] = a(r, c);
        m[r][cols] = b[r];
    }
    auto piv = eliminate(m, cols + 1, nullptr);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    LinearSolution s;
    s.rank = static_cast<int>(piv.size());
    s.unique = s.rank == cols;
    Scalar zero = 0;
    for (const auto& v : b)
        if (v.prime()) zero = Scalar::mod(0, v.prime());
    s.x.assign(cols, zero);
    for (int r = 0; r < s.rank; ++r) s.x[piv[r]] = m[r][cols];
    return s;
}

std::vector<std::complex<double>> eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols()) throw DomainError("eigenvalues of a non-square matrix");
    const int d = m.rows();
    Eigen::MatrixXd e(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            if (m(r, c).prime()) throw DomainError("eigenvalues need rational entries");
            e(r, c) = m(r, c).to_double();
        }
    Eigen::EigenSolver<Eigen::MatrixXd> es(e, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()[i]);
    auto key = [](const std::complex<double>& z) {
        return std::make_pair(std::round(z.real() * 1e9), std::round(z.imag() * 1e9));
    };
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return out;
}

} // namespace polyadika
