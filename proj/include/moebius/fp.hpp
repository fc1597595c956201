#ifndef MOEBIUS_FP_HPP
#define MOEBIUS_FP_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "moebius/errors.hpp"

namespace moebius {

// Exact arithmetic over GF(p) for a 16-bit prime p.  Residues are kept as the
// least non-negative representative, so equality of values is equality of
// field elements.  All products go through 64-bit intermediates before
// reduction; there is no floating point anywhere in this library.

bool is_prime(std::uint32_t n);

class Fp {
  public:
    // Validates the modulus (prime, < 2^16) and reduces the value.
    Fp(std::uint64_t value, std::uint32_t modulus);

    // Trusted path for internal arithmetic: value must already be reduced and
    // the modulus already validated.
    static Fp unchecked(std::uint32_t value, std::uint32_t modulus) { return Fp(value, modulus, 0); }

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    Fp operator+(Fp other) const;
    Fp operator-(Fp other) const;
    Fp operator*(Fp other) const;
    Fp operator-() const;

    // Multiplicative inverse by the extended Euclidean algorithm.
    Fp inverse() const;

    friend bool operator==(Fp a, Fp b) { return a.value_ == b.value_ && a.modulus_ == b.modulus_; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  private:
    Fp(std::uint32_t value, std::uint32_t modulus, int) : value_(value), modulus_(modulus) {}

    void require_same_field(Fp other) const;

    std::uint32_t value_;
    std::uint32_t modulus_;
};

// (-1)^parity as a field element; over GF(2) the sign collapses to 1.
Fp parity_sign(std::size_t parity, std::uint32_t p);

class FpVector {
  public:
    FpVector(std::size_t len, std::uint32_t modulus);
    static FpVector from_values(const std::vector<std::uint32_t>& values, std::uint32_t modulus);
    static FpVector from_values(std::initializer_list<std::uint32_t> values, std::uint32_t modulus);

    std::size_t size() const { return entries_.size(); }
    std::uint32_t modulus() const { return modulus_; }

    Fp at(std::size_t i) const;
    void set(std::size_t i, Fp value);
    void set(std::size_t i, std::uint64_t value);

    bool is_zero() const;
    std::size_t weight() const;  // number of nonzero entries
    std::size_t first_nonzero() const;  // size() when the vector is zero

    FpVector operator+(const FpVector& other) const;
    FpVector operator-(const FpVector& other) const;
    FpVector scaled(Fp factor) const;
    Fp dot(const FpVector& other) const;

    const std::vector<std::uint32_t>& values() const { return entries_; }
    std::string to_string() const;

    friend bool operator==(const FpVector& a, const FpVector& b) {
        return a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const FpVector& a, const FpVector& b) { return !(a == b); }

  private:
    void require_compatible(const FpVector& other) const;

    std::uint32_t modulus_;
    std::vector<std::uint32_t> entries_;
};

class FpMatrix {
  public:
    // Zero matrix; zero rows are allowed (empty equation systems are
    // meaningful when intersecting subspaces).
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus);

    static FpMatrix identity(std::size_t n, std::uint32_t modulus);
    static FpMatrix from_rows(const std::vector<std::vector<std::uint32_t>>& rows,
                              std::uint32_t modulus);
    static FpMatrix from_row_vectors(const std::vector<FpVector>& rows, std::size_t cols,
                                     std::uint32_t modulus);
    static FpMatrix from_columns(const std::vector<FpVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return modulus_; }

    Fp at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Fp value);
    void set(std::size_t r, std::size_t c, std::uint64_t value);

    FpVector row(std::size_t r) const;
    FpVector column(std::size_t c) const;
    FpMatrix transposed() const;
    FpMatrix negated() const;
    bool is_zero() const;

    std::string to_string() const;

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.modulus_ == b.modulus_ &&
               a.entries_ == b.entries_;
    }
    friend bool operator!=(const FpMatrix& a, const FpMatrix& b) { return !(a == b); }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint32_t modulus_;
    std::vector<std::uint32_t> entries_;  // row-major
};

// Exact product; throws on shape or modulus mismatch.
FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
FpVector mat_vec_mul(const FpMatrix& a, const FpVector& v);

// Rank by Gaussian elimination with first-nonzero pivot selection.
std::size_t mat_rank(const FpMatrix& a);

// Exact inverse; throws SingularMatrixError carrying the computed rank.
FpMatrix mat_inverse(const FpMatrix& a);

// Basis of the right null space in reduced echelon form, free variables set
// to 1, ordered by free-column index.  Empty exactly when a has full column
// rank.
std::vector<FpVector> mat_kernel(const FpMatrix& a);

// t^T * m * t.  Requires t.rows == m.rows == m.cols.
FpMatrix congruence_transform(const FpMatrix& m, const FpMatrix& t);

// Reduced row echelon form together with the pivot column indices.
struct EchelonForm {
    FpMatrix matrix;
    std::vector<std::size_t> pivot_columns;
};
EchelonForm reduced_row_echelon(FpMatrix a);

}  // namespace moebius

#endif
