#pragma once

#include "hopf/cyclo.hpp"

#include <string>
#include <vector>

namespace hopf {

// Dense exact matrix, row-major; acts on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, CycScalar(0)) {}

    static Matrix identity(int n);
    static Matrix scalar(int n, const CycScalar& s);
    static Matrix diagonal(const std::vector<CycScalar>& d);

    int rows() const { return r_; }
    int cols() const { return c_; }
    CycScalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const CycScalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
    const std::vector<CycScalar>& data() const { return a_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const CycScalar& s) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix pow(long long e) const;
    Matrix inverse() const;
    CycScalar trace() const;
    bool is_zero() const;
    bool is_diagonal() const;
    bool is_scalar() const;
    int rank() const;

    // columns spanning {v : A v = 0}
    Matrix nullspace() const;
    Matrix column(int j) const;
    Matrix columns(int from, int to) const;
    Matrix rows_range(int from, int to) const;

    std::vector<std::vector<std::string>> serialize() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<CycScalar> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hcat(const Matrix& a, const Matrix& b);

// reduced row echelon form in place, returns pivot columns
std::vector<int> rref(Matrix& m);

// solution x of A x = b, or false if inconsistent
bool solve_linear(const Matrix& A, const Matrix& b, Matrix& x);

// Incremental span tracker for flattened vectors.
class SpanBasis {
public:
    explicit SpanBasis(int length) : len_(length) {}
    // true if v was independent (and is now part of the span)
    bool insert(std::vector<CycScalar> v);
    bool contains(std::vector<CycScalar> v) const;
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(std::vector<CycScalar>& v) const;
    int len_;
    std::vector<std::vector<CycScalar>> rows_;
    std::vector<int> piv_;
};

}  // namespace hopf
