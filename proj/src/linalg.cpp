#include "qfs/linalg.hpp"

#include <string>

namespace qfs {

bool Vector::is_zero() const {
    for (auto x : data_)
        if (x != 0) return false;
    return true;
}

Vector Vector::frobenius() const {
    Vector out = *this;
    for (auto& x : out.data_) x = field_->frob(x);
    return out;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(field_, std::vector<std::uint32_t>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

Vector Matrix::column(std::size_t j) const {
    Vector out(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.set_raw(i, raw(i, j));
    return out;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
    if (v.size() != cols_) throw UsageError("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) set_raw(i, j, v.raw(j));
}

Vector row_times(const Vector& row, const Matrix& m) {
    if (row.size() != m.rows()) throw UsageError("row_times: length " + std::to_string(row.size()) +
                                                 " does not match " + std::to_string(m.rows()) + " rows");
    const Field& k = m.field();
    Vector out(m.field_ptr(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::uint32_t r = row.raw(i);
        if (r == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::uint32_t a = m.raw(i, j);
            if (a != 0) out.set_raw(j, k.add(out.raw(j), k.mul(r, a)));
        }
    }
    return out;
}

Vector times_column(const Matrix& m, const Vector& col) {
    if (col.size() != m.cols()) throw UsageError("times_column: length mismatch");
    const Field& k = m.field();
    Vector out(m.field_ptr(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc = k.add(acc, k.mul(m.raw(i, j), col.raw(j)));
        out.set_raw(i, acc);
    }
    return out;
}

std::uint32_t dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw UsageError("dot: length mismatch");
    const Field& k = a.field();
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = k.add(acc, k.mul(a.raw(i), b.raw(i)));
    return acc;
}

Matrix outer(const Vector& col, const Vector& row) {
    const Field& k = col.field();
    Matrix out(col.field_ptr(), col.size(), row.size());
    for (std::size_t i = 0; i < col.size(); ++i)
        for (std::size_t j = 0; j < row.size(); ++j) out.set_raw(i, j, k.mul(col.raw(i), row.raw(j)));
    return out;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("subtract: shape mismatch");
    const Field& k = a.field();
    Matrix out(a.field_ptr(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set_raw(i, j, k.sub(a.raw(i, j), b.raw(i, j)));
    return out;
}

bool RowSpace::add(const Vector& v) {
    if (v.size() != width_) throw UsageError("RowSpace: row length mismatch");
    const Field& k = *field_;
    std::vector<std::uint32_t> w = v.data();
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const std::uint32_t c = w[pivots_[b]];
        if (c == 0) continue;
        const auto& row = basis_[b];
        for (std::size_t j = 0; j < width_; ++j)
            if (row[j] != 0) w[j] = k.sub(w[j], k.mul(c, row[j]));
    }
    std::size_t pivot = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (w[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == width_) return false;
    const std::uint32_t inv = k.inv(w[pivot]);
    for (auto& x : w) x = k.mul(x, inv);
    // keep the basis fully reduced so the single pass above suffices
    for (auto& row : basis_) {
        const std::uint32_t c = row[pivot];
        if (c == 0) continue;
        for (std::size_t j = 0; j < width_; ++j)
            if (w[j] != 0) row[j] = k.sub(row[j], k.mul(c, w[j]));
    }
    basis_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
}

std::size_t rank(const std::vector<Vector>& rows) {
    if (rows.empty()) return 0;
    RowSpace space(rows.front().field_ptr(), rows.front().size());
    for (const auto& r : rows) space.add(r);
    return space.rank();
}

std::size_t rank(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    if (rows.empty()) return 0;
    return rank(rows);
}

} // namespace qfs
