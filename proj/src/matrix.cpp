#include "bezgw/matrix.hpp"

#include <sstream>

namespace bezgw {

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    data_.assign(rows_ * cols_, field_->zero());
}

Matrix Matrix::identity(FieldPtr field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
}

namespace {

// Gauss-Jordan on [A | B]; returns false when A is singular.
bool eliminate(Matrix& a, Matrix& b) {
    size_t n = a.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return false;
        if (piv != col) {
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(col, j));
            for (size_t j = 0; j < b.cols(); ++j) std::swap(b.at(piv, j), b.at(col, j));
        }
        FieldElement inv = a.at(col, col).inverse();
        for (size_t j = 0; j < a.cols(); ++j) a.at(col, j) *= inv;
        for (size_t j = 0; j < b.cols(); ++j) b.at(col, j) *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a.at(row, col).is_zero()) continue;
            FieldElement c = a.at(row, col);
            for (size_t j = 0; j < a.cols(); ++j) a.at(row, j) -= c * a.at(col, j);
            for (size_t j = 0; j < b.cols(); ++j) b.at(row, j) -= c * b.at(col, j);
        }
    }
    return true;
}

}  // namespace

FieldElement Matrix::det() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    Matrix a = *this;
    FieldElement d = field_->one();
    for (size_t col = 0; col < cols_; ++col) {
        size_t piv = col;
        while (piv < rows_ && a.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) return field_->zero();
        if (piv != col) {
            for (size_t j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        FieldElement inv = a.at(col, col).inverse();
        for (size_t row = col + 1; row < rows_; ++row) {
            if (a.at(row, col).is_zero()) continue;
            FieldElement c = a.at(row, col) * inv;
            for (size_t j = col; j < cols_; ++j) a.at(row, j) -= c * a.at(col, j);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of a non-square matrix");
    Matrix a = *this, b = identity(field_, rows_);
    if (!eliminate(a, b)) throw Error("singular matrix");
    return b;
}

std::vector<FieldElement> Matrix::solve(const std::vector<FieldElement>& rhs) const {
    if (rows_ != cols_ || rhs.size() != rows_) throw Error("solve: dimension mismatch");
    Matrix a = *this, b(field_, rows_, 1);
    for (size_t i = 0; i < rows_; ++i) b.at(i, 0) = rhs[i];
    if (!eliminate(a, b)) throw Error("singular matrix");
    std::vector<FieldElement> x;
    for (size_t i = 0; i < rows_; ++i) x.push_back(b.at(i, 0));
    return x;
}

std::string Matrix::str() const {
    std::ostringstream os;
    std::vector<std::string> cells(rows_ * cols_);
    size_t width = 0;
    for (size_t i = 0; i < rows_ * cols_; ++i) {
        cells[i] = data_[i].str();
        width = std::max(width, cells[i].size());
    }
    for (size_t i = 0; i < rows_; ++i) {
        os << "[ ";
        for (size_t j = 0; j < cols_; ++j) {
            const std::string& c = cells[i * cols_ + j];
            os << std::string(width - c.size(), ' ') << c << (j + 1 < cols_ ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace bezgw
