#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bezgw/field.hpp"

namespace bezgw {

/// Dense matrix over an exact field.
class Matrix {
  public:
    Matrix(FieldPtr field, size_t rows, size_t cols);
    static Matrix identity(FieldPtr field, size_t n);

    const FieldPtr& field_ptr() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElement& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    bool symmetric() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.data_ == b.data_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    FieldElement det() const;
    Matrix inverse() const;  // throws Error on a singular matrix

    /// Solves A x = rhs; throws Error when A is singular (square A only).
    std::vector<FieldElement> solve(const std::vector<FieldElement>& rhs) const;

    std::string str() const;

  private:
    FieldPtr field_;
    size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

}  // namespace bezgw
