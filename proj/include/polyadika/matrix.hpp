#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "polyadika/core.hpp"
#include "polyadika/scalar.hpp"

namespace polyadika {

// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, Scalar fill = Scalar(0));

    static Matrix identity(int d, int p = 0);
    // Column-action convention: entry (image[c], c) = 1, all others 0.
    static Matrix permutation(const std::vector<Elem>& image);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    Matrix transpose() const;
    Scalar trace() const;
    Scalar determinant() const;
    // Throws DomainError when singular or not square.
    Matrix inverse() const;
    bool is_identity() const;
    // Integer grid, one row per line, entries separated by single spaces.
    std::string str() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

struct LinearSolution {
    std::vector<Scalar> x; // one particular solution
    int rank = 0;
    bool unique = false;
};

// Solves a x = b exactly; nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const std::vector<Scalar>& b);

// Floating eigenvalues, sorted by (real, imag) after rounding to 1e-9.
std::vector<std::complex<double>> eigenvalues(const Matrix& m);

} // namespace polyadika
