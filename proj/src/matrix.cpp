#include "hopf/matrix.hpp"

#include "hopf/error.hpp"

namespace hopf {

Matrix Matrix::identity(int n)
{
    return scalar(n, CycScalar(1));
}

Matrix Matrix::scalar(int n, const CycScalar& s)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = s;
    return m;
}

Matrix Matrix::diagonal(const std::vector<CycScalar>& d)
{
    int n = static_cast<int>(d.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = d[i];
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (r_ != o.r_ || c_ != o.c_)
        throw Error("ShapeMismatch", "matrix add");
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i)
        m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    if (r_ != o.r_ || c_ != o.c_)
        throw Error("ShapeMismatch", "matrix sub");
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i)
        m.a_[i] -= o.a_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (c_ != o.r_)
        throw Error("ShapeMismatch", "matrix mul");
    Matrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i) {
        for (int k = 0; k < c_; ++k) {
            const CycScalar& x = (*this)(i, k);
            if (x.is_zero())
                continue;
            for (int j = 0; j < o.c_; ++j) {
                const CycScalar& y = o(k, j);
                if (!y.is_zero())
                    m(i, j) += x * y;
            }
        }
    }
    return m;
}

Matrix Matrix::operator*(const CycScalar& s) const
{
    Matrix m = *this;
    for (auto& x : m.a_)
        if (!x.is_zero())
            x *= s;
    return m;
}

bool Matrix::operator==(const Matrix& o) const
{
    if (r_ != o.r_ || c_ != o.c_)
        return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i])
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::pow(long long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Matrix acc = identity(r_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

Matrix Matrix::inverse() const
{
    if (r_ != c_)
        throw Error("ShapeMismatch", "inverse of non-square matrix");
    if (is_diagonal()) {
        Matrix m(r_, r_);
        for (int i = 0; i < r_; ++i)
            m(i, i) = (*this)(i, i).inv();
        return m;
    }
    Matrix aug = hcat(*this, identity(r_));
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < r_ || piv[r_ - 1] != r_ - 1)
        throw Error("DivisionByZero", "singular matrix");
    return aug.columns(r_, 2 * r_);
}

CycScalar Matrix::trace() const
{
    CycScalar t(0);
    for (int i = 0; i < std::min(r_, c_); ++i)
        t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const
{
    for (auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Matrix::is_diagonal() const
{
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (i != j && !(*this)(i, j).is_zero())
                return false;
    return true;
}

bool Matrix::is_scalar() const
{
    if (r_ != c_ || !is_diagonal())
        return false;
    for (int i = 1; i < r_; ++i)
        if ((*this)(i, i) != (*this)(0, 0))
            return false;
    return true;
}

int Matrix::rank() const
{
    Matrix m = *this;
    return static_cast<int>(rref(m).size());
}

Matrix Matrix::nullspace() const
{
    Matrix m = *this;
    auto piv = rref(m);
    std::vector<bool> is_piv(c_, false);
    for (int p : piv)
        is_piv[p] = true;
    std::vector<int> free;
    for (int j = 0; j < c_; ++j)
        if (!is_piv[j])
            free.push_back(j);
    Matrix ns(c_, static_cast<int>(free.size()));
    for (size_t f = 0; f < free.size(); ++f) {
        int fj = free[f];
        ns(fj, static_cast<int>(f)) = CycScalar(1);
        for (size_t r = 0; r < piv.size(); ++r)
            ns(piv[r], static_cast<int>(f)) = -m(static_cast<int>(r), fj);
    }
    return ns;
}

Matrix Matrix::column(int j) const
{
    return columns(j, j + 1);
}

Matrix Matrix::columns(int from, int to) const
{
    Matrix m(r_, to - from);
    for (int i = 0; i < r_; ++i)
        for (int j = from; j < to; ++j)
            m(i, j - from) = (*this)(i, j);
    return m;
}

Matrix Matrix::rows_range(int from, int to) const
{
    Matrix m(to - from, c_);
    for (int i = from; i < to; ++i)
        for (int j = 0; j < c_; ++j)
            m(i - from, j) = (*this)(i, j);
    return m;
}

std::vector<std::vector<std::string>> Matrix::serialize() const
{
    std::vector<std::vector<std::string>> out(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            out[i].push_back((*this)(i, j).str());
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const CycScalar& x = a(i, j);
            if (x.is_zero())
                continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero())
                        m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return m;
}

Matrix hcat(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw Error("ShapeMismatch", "hcat");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

std::vector<int> rref(Matrix& m)
{
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(sel, j), m(row, j));
        CycScalar inv = m(row, col).inv();
        for (int j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero())
                m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero())
                continue;
            CycScalar f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero())
                    m(i, j) -= f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

bool solve_linear(const Matrix& A, const Matrix& b, Matrix& x)
{
    Matrix aug = hcat(A, b);
    auto piv = rref(aug);
    int n = A.cols();
    for (int p : piv)
        if (p >= n)
            return false;
    x = Matrix(n, b.cols());
    for (size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            x(piv[r], j) = aug(static_cast<int>(r), n + j);
    return true;
}

void SpanBasis::reduce(std::vector<CycScalar>& v) const
{
    for (size_t k = 0; k < rows_.size(); ++k) {
        const CycScalar f = v[piv_[k]];
        if (f.is_zero())
            continue;
        const auto& row = rows_[k];
        for (int j = 0; j < len_; ++j)
            if (!row[j].is_zero())
                v[j] -= f * row[j];
    }
}

bool SpanBasis::insert(std::vector<CycScalar> v)
{
    reduce(v);
    int p = -1;
    for (int j = 0; j < len_; ++j)
        if (!v[j].is_zero()) {
            p = j;
            break;
        }
    if (p < 0)
        return false;
    CycScalar inv = v[p].inv();
    for (auto& x : v)
        if (!x.is_zero())
            x *= inv;
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
}

bool SpanBasis::contains(std::vector<CycScalar> v) const
{
    reduce(v);
    for (auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

}  // namespace hopf
