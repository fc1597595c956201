#ifndef MOEBIUS_PROJECTIVE_HPP
#define MOEBIUS_PROJECTIVE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "moebius/fp.hpp"

namespace moebius {

// Point of PG(n,p), stored as the canonical representative whose first
// nonzero coordinate is 1.  Equality of points is plain vector equality.
class ProjectivePoint {
  public:
    explicit ProjectivePoint(const FpVector& coords);

    const FpVector& coords() const { return coords_; }
    std::size_t ambient_dim() const { return coords_.size() - 1; }
    std::uint32_t modulus() const { return coords_.modulus(); }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) {
        return !(a == b);
    }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_.values() < b.coords_.values();
    }

  private:
    FpVector coords_;
};

// Subspace of PG(n,p) held as a reduced-row-echelon basis.  The empty
// subspace (projective dimension -1) is a first-class value with an empty
// basis.
class Subspace {
  public:
    // Span of the given vectors; zero vectors and dependencies are reduced
    // away.  `ambient` is the vector-space dimension n+1.
    Subspace(const std::vector<FpVector>& generators, std::size_t ambient,
             std::uint32_t modulus);

    static Subspace empty(std::size_t ambient, std::uint32_t modulus);
    static Subspace whole(std::size_t ambient, std::uint32_t modulus);

    std::size_t ambient_dim() const { return ambient_ - 1; }  // projective n
    std::uint32_t modulus() const { return modulus_; }
    const std::vector<FpVector>& basis() const { return basis_; }

    bool is_empty() const { return basis_.empty(); }
    // Projective dimension; -1 for the empty subspace.
    int dim() const { return static_cast<int>(basis_.size()) - 1; }

    bool contains(const ProjectivePoint& point) const;
    bool contains_vector(const FpVector& v) const;

    // The unique point of a zero-dimensional subspace.
    ProjectivePoint single_point() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.modulus_ == b.modulus_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    std::size_t ambient_;  // vector-space dimension n+1
    std::uint32_t modulus_;
    std::vector<FpVector> basis_;  // RREF rows, canonical
};

// Null polarity of PG(n,p): an invertible alternating form (skew-symmetric
// with zero diagonal).  Degenerate or non-alternating forms are rejected at
// construction.
class NullPolarity {
  public:
    explicit NullPolarity(FpMatrix form);

    const FpMatrix& form() const { return form_; }
    std::size_t ambient_dim() const { return form_.rows() - 1; }
    std::uint32_t modulus() const { return form_.modulus(); }

  private:
    FpMatrix form_;
};

Subspace span(const std::vector<ProjectivePoint>& points);
Subspace meet(const Subspace& s1, const Subspace& s2);

// All points conjugate to every point of s; dim = n - 1 - dim(s).
Subspace polar_image(const NullPolarity& pol, const Subspace& s);

// True iff x^T * form * y = 0.  Always true for x = y.
bool conjugate(const NullPolarity& pol, const ProjectivePoint& x, const ProjectivePoint& y);

// General position within the span of the family: with k the projective
// dimension of that span, every subfamily of k+1 points must be projectively
// independent.  Accepts at most ambient+2 points.
bool in_general_position(const std::vector<ProjectivePoint>& points);

// Canonical representatives of all points of PG(dim-1, p) (dim = vector-space
// dimension), in lexicographic order of coordinate vectors.
std::vector<ProjectivePoint> all_projective_points(std::size_t dim, std::uint32_t p);

}  // namespace moebius

#endif
