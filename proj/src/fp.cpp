#include "moebius/fp.hpp"

#include <sstream>
#include <utility>

namespace moebius {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Fp::Fp(std::uint64_t value, std::uint32_t modulus) {
    if (modulus >= (1u << 16) || !is_prime(modulus)) {
        throw std::invalid_argument("modulus must be a 16-bit prime, got " +
                                    std::to_string(modulus));
    }
    modulus_ = modulus;
    value_ = static_cast<std::uint32_t>(value % modulus);
}

void Fp::require_same_field(Fp other) const {
    if (modulus_ != other.modulus_) {
        throw FieldMismatchError("mixed moduli " + std::to_string(modulus_) + " and " +
                                 std::to_string(other.modulus_));
    }
}

Fp Fp::operator+(Fp other) const {
    require_same_field(other);
    std::uint32_t s = value_ + other.value_;
    if (s >= modulus_) s -= modulus_;
    return unchecked(s, modulus_);
}

Fp Fp::operator-(Fp other) const {
    require_same_field(other);
    std::uint32_t s = value_ + modulus_ - other.value_;
    if (s >= modulus_) s -= modulus_;
    return unchecked(s, modulus_);
}

Fp Fp::operator*(Fp other) const {
    require_same_field(other);
    std::uint64_t prod = static_cast<std::uint64_t>(value_) * other.value_;
    return unchecked(static_cast<std::uint32_t>(prod % modulus_), modulus_);
}

Fp Fp::operator-() const {
    return unchecked(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Fp Fp::inverse() const {
    if (value_ == 0) throw std::domain_error("inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = modulus_, new_r = value_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += modulus_;
    return unchecked(static_cast<std::uint32_t>(t), modulus_);
}

Fp parity_sign(std::size_t parity, std::uint32_t p) {
    return Fp(parity % 2 == 0 ? 1 : p - 1, p);
}

FpVector::FpVector(std::size_t len, std::uint32_t modulus) : modulus_(modulus), entries_(len, 0) {
    Fp(0, modulus);  // validate the modulus once
}

FpVector FpVector::from_values(const std::vector<std::uint32_t>& values, std::uint32_t modulus) {
    FpVector v(values.size(), modulus);
    for (std::size_t i = 0; i < values.size(); ++i) v.set(i, values[i]);
    return v;
}

FpVector FpVector::from_values(std::initializer_list<std::uint32_t> values,
                               std::uint32_t modulus) {
    return from_values(std::vector<std::uint32_t>(values), modulus);
}

Fp FpVector::at(std::size_t i) const { return Fp::unchecked(entries_.at(i), modulus_); }

void FpVector::set(std::size_t i, Fp value) {
    if (value.modulus() != modulus_) throw FieldMismatchError("vector entry modulus mismatch");
    entries_.at(i) = value.value();
}

void FpVector::set(std::size_t i, std::uint64_t value) {
    entries_.at(i) = static_cast<std::uint32_t>(value % modulus_);
}

bool FpVector::is_zero() const {
    for (auto e : entries_)
        if (e != 0) return false;
    return true;
}

std::size_t FpVector::weight() const {
    std::size_t w = 0;
    for (auto e : entries_)
        if (e != 0) ++w;
    return w;
}

std::size_t FpVector::first_nonzero() const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != 0) return i;
    return entries_.size();
}

void FpVector::require_compatible(const FpVector& other) const {
    if (modulus_ != other.modulus_) throw FieldMismatchError("mixed vector moduli");
    if (entries_.size() != other.entries_.size()) throw DimensionError("mixed vector lengths");
}

FpVector FpVector::operator+(const FpVector& other) const {
    require_compatible(other);
    FpVector out(size(), modulus_);
    for (std::size_t i = 0; i < size(); ++i) out.set(i, at(i) + other.at(i));
    return out;
}

FpVector FpVector::operator-(const FpVector& other) const {
    require_compatible(other);
    FpVector out(size(), modulus_);
    for (std::size_t i = 0; i < size(); ++i) out.set(i, at(i) - other.at(i));
    return out;
}

FpVector FpVector::scaled(Fp factor) const {
    FpVector out(size(), modulus_);
    for (std::size_t i = 0; i < size(); ++i) out.set(i, at(i) * factor);
    return out;
}

Fp FpVector::dot(const FpVector& other) const {
    require_compatible(other);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        acc = (acc + static_cast<std::uint64_t>(entries_[i]) * other.entries_[i]) % modulus_;
    }
    return Fp::unchecked(static_cast<std::uint32_t>(acc), modulus_);
}

std::string FpVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(rows * cols, 0) {
    Fp(0, modulus);
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t modulus) {
    FpMatrix m(n, n, modulus);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::uint32_t>>& rows,
                             std::uint32_t modulus) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    FpMatrix m(r, c, modulus);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

FpMatrix FpMatrix::from_row_vectors(const std::vector<FpVector>& rows, std::size_t cols,
                                    std::uint32_t modulus) {
    FpMatrix m(rows.size(), cols, modulus);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols || rows[i].modulus() != modulus)
            throw DimensionError("row vector shape mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i].at(j));
    }
    return m;
}

FpMatrix FpMatrix::from_columns(const std::vector<FpVector>& cols) {
    if (cols.empty()) throw DimensionError("from_columns needs at least one column");
    const std::size_t r = cols.front().size();
    FpMatrix m(r, cols.size(), cols.front().modulus());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != r || cols[j].modulus() != m.modulus())
            throw DimensionError("column vector shape mismatch");
        for (std::size_t i = 0; i < r; ++i) m.set(i, j, cols[j].at(i));
    }
    return m;
}

Fp FpMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    return Fp::unchecked(entries_[r * cols_ + c], modulus_);
}

void FpMatrix::set(std::size_t r, std::size_t c, Fp value) {
    if (value.modulus() != modulus_) throw FieldMismatchError("matrix entry modulus mismatch");
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    entries_[r * cols_ + c] = value.value();
}

void FpMatrix::set(std::size_t r, std::size_t c, std::uint64_t value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    entries_[r * cols_ + c] = static_cast<std::uint32_t>(value % modulus_);
}

FpVector FpMatrix::row(std::size_t r) const {
    FpVector v(cols_, modulus_);
    for (std::size_t j = 0; j < cols_; ++j) v.set(j, at(r, j));
    return v;
}

FpVector FpMatrix::column(std::size_t c) const {
    FpVector v(rows_, modulus_);
    for (std::size_t i = 0; i < rows_; ++i) v.set(i, at(i, c));
    return v;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix m(cols_, rows_, modulus_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

FpMatrix FpMatrix::negated() const {
    FpMatrix m(rows_, cols_, modulus_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, -at(i, j));
    return m;
}

bool FpMatrix::is_zero() const {
    for (auto e : entries_)
        if (e != 0) return false;
    return true;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << entries_[i * cols_ + j];
        }
        os << '\n';
    }
    return os.str();
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
    if (a.modulus() != b.modulus()) throw FieldMismatchError("matrix product moduli differ");
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    const std::uint64_t p = a.modulus();
    FpMatrix out(a.rows(), b.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc = (acc + static_cast<std::uint64_t>(a.at(i, k).value()) *
                                 b.at(k, j).value()) %
                      p;
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

FpVector mat_vec_mul(const FpMatrix& a, const FpVector& v) {
    if (a.modulus() != v.modulus()) throw FieldMismatchError("matrix-vector moduli differ");
    if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
    const std::uint64_t p = a.modulus();
    FpVector out(a.rows(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) {
            acc = (acc + static_cast<std::uint64_t>(a.at(i, k).value()) * v.at(k).value()) % p;
        }
        out.set(i, acc);
    }
    return out;
}

EchelonForm reduced_row_echelon(FpMatrix a) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < a.cols() && next_row < a.rows(); ++col) {
        // first-nonzero pivot: deterministic output over exact fields
        std::size_t pivot_row = a.rows();
        for (std::size_t r = next_row; r < a.rows(); ++r) {
            if (!a.at(r, col).is_zero()) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row == a.rows()) continue;
        if (pivot_row != next_row) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                Fp tmp = a.at(next_row, j);
                a.set(next_row, j, a.at(pivot_row, j));
                a.set(pivot_row, j, tmp);
            }
        }
        const Fp inv = a.at(next_row, col).inverse();
        for (std::size_t j = 0; j < a.cols(); ++j) a.set(next_row, j, a.at(next_row, j) * inv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == next_row || a.at(r, col).is_zero()) continue;
            const Fp factor = a.at(r, col);
            for (std::size_t j = 0; j < a.cols(); ++j) {
                a.set(r, j, a.at(r, j) - factor * a.at(next_row, j));
            }
        }
        pivots.push_back(col);
        ++next_row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t mat_rank(const FpMatrix& a) { return reduced_row_echelon(a).pivot_columns.size(); }

FpMatrix mat_inverse(const FpMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    FpMatrix aug(n, 2 * n, a.modulus());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, n + i, 1);
    }
    EchelonForm ef = reduced_row_echelon(std::move(aug));
    std::size_t rank = 0;
    for (std::size_t c : ef.pivot_columns) {
        if (c < n) ++rank;
    }
    if (rank < n) throw SingularMatrixError(rank, n);
    FpMatrix inv(n, n, a.modulus());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, ef.matrix.at(i, n + j));
    return inv;
}

std::vector<FpVector> mat_kernel(const FpMatrix& a) {
    EchelonForm ef = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : ef.pivot_columns) is_pivot[c] = true;

    std::vector<FpVector> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        FpVector v(a.cols(), a.modulus());
        v.set(free_col, 1);
        for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r) {
            v.set(ef.pivot_columns[r], -ef.matrix.at(r, free_col));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

FpMatrix congruence_transform(const FpMatrix& m, const FpMatrix& t) {
    if (m.rows() != m.cols()) throw DimensionError("congruence of a non-square matrix");
    if (t.rows() != m.rows()) throw DimensionError("congruence shape mismatch");
    return mat_mul(t.transposed(), mat_mul(m, t));
}

}  // namespace moebius
