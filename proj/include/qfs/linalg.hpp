#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qfs/ffield.hpp"

namespace qfs {

/// Dense vector over a finite field, stored as packed raw values.
class Vector {
public:
    Vector(FieldPtr field, std::size_t size) : field_(std::move(field)), data_(size, 0) {}
    Vector(FieldPtr field, std::vector<std::uint32_t> data) : field_(std::move(field)), data_(std::move(data)) {}

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t size() const { return data_.size(); }

    std::uint32_t raw(std::size_t i) const { return data_[i]; }
    void set_raw(std::size_t i, std::uint32_t v) { data_[i] = v; }
    FieldElement at(std::size_t i) const { return field_->wrap(data_[i]); }
    const std::vector<std::uint32_t>& data() const { return data_; }

    bool is_zero() const;
    /// Coordinate-wise Frobenius.
    Vector frobenius() const;

    bool operator==(const Vector& o) const { return field_->same_as(*o.field_) && data_ == o.data_; }

private:
    FieldPtr field_;
    std::vector<std::uint32_t> data_;
};

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t raw(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set_raw(std::size_t i, std::size_t j, std::uint32_t v) { data_[i * cols_ + j] = v; }
    FieldElement at(std::size_t i, std::size_t j) const { return field_->wrap(raw(i, j)); }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void set_row(std::size_t i, const Vector& v);

    bool operator==(const Matrix& o) const {
        return field_->same_as(*o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> data_;
};

/// row * M for a row vector of length M.rows().
Vector row_times(const Vector& row, const Matrix& m);
/// M * col for a column vector of length M.cols().
Vector times_column(const Matrix& m, const Vector& col);
std::uint32_t dot(const Vector& a, const Vector& b);
/// The m x m outer product col * row.
Matrix outer(const Vector& col, const Vector& row);
Matrix subtract(const Matrix& a, const Matrix& b);

/// Rank by Gaussian elimination.
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vector>& rows);

/// Row space maintained in reduced echelon form, for rank tests that grow
/// one row at a time.
class RowSpace {
public:
    RowSpace(FieldPtr field, std::size_t width) : field_(std::move(field)), width_(width) {}

    /// Adds `v`; returns true if it was independent of the rows already present.
    bool add(const Vector& v);
    std::size_t rank() const { return basis_.size(); }

private:
    FieldPtr field_;
    std::size_t width_;
    std::vector<std::vector<std::uint32_t>> basis_; // each normalised with pivot 1
    std::vector<std::size_t> pivots_;
};

} // namespace qfs
