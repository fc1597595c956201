#ifndef MOEBIUS_PAIR_HPP
#define MOEBIUS_PAIR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moebius/projective.hpp"

namespace moebius {

// The 2x2 blocks the construction form and its inverse are assembled from:
//   skew     = (( 0,-1),( 1, 0))     checker = (( 1,-1),(-1, 1))
//   ones     = (( 1, 1),( 1, 1))     identity
// They satisfy -skew^2 = identity, ones*skew - skew*checker = 0, and
// ones*checker = 0.
struct FormBlocks {
    FpMatrix skew;
    FpMatrix ones;
    FpMatrix checker;
    FpMatrix identity;
};
FormBlocks form_blocks(std::uint32_t p);

// The construction's null polarity on PG(n,p): zero diagonal, -1 above it,
// +1 below it.  Requires odd n >= 1 and prime p.
NullPolarity standard_null_polarity(std::size_t n, std::uint32_t p);

// Inverse of the construction form, assembled blockwise (-skew diagonal,
// -checker above, checker below).  Always equals mat_inverse of the form.
FpMatrix standard_form_inverse(std::size_t n, std::uint32_t p);

// An n-simplex: n+1 points spanning PG(n,p), no vertex inside the span of
// the others.  Validated at construction.
class Simplex {
  public:
    explicit Simplex(std::vector<ProjectivePoint> vertices);

    const std::vector<ProjectivePoint>& vertices() const { return vertices_; }
    std::size_t ambient_dim() const { return vertices_.size() - 1; }
    std::uint32_t modulus() const { return vertices_.front().modulus(); }

  private:
    std::vector<ProjectivePoint> vertices_;
};

Simplex standard_simplex(std::size_t n, std::uint32_t p);

// Unique common point of the span of an even-dimensional face and its polar
// image: alternating +/-1 coordinates on the selected positions, zero
// elsewhere.
struct IntersectionPoint {
    std::vector<std::size_t> indices;  // strictly increasing, odd cardinality
    ProjectivePoint point;
};

// Requires an odd number (>= 3) of strictly increasing indices in [0, n].
IntersectionPoint intersection_point(const std::vector<std::size_t>& indices, std::size_t n,
                                     std::uint32_t p);

// Vertex m of the polar simplex: column m of the form inverse.  Entry m is
// always zero.
FpVector polar_simplex_vector(std::size_t m, std::size_t n, std::uint32_t p);

struct MoebiusPair {
    Simplex first;
    Simplex second;
    NullPolarity polarity;
};

// The standard simplex together with the polar simplex read off the columns
// of the form inverse.  Requires odd n >= 3 (n = 1 yields the degenerate
// two-point pair and is rejected with DegeneratePairError).
MoebiusPair build_moebius_pair(std::size_t n, std::uint32_t p);

// Mutual incidence bookkeeping.  Entry [i][j] of first_on_second is 1 when
// vertex j of the first simplex lies on the hyperplanar face of the second
// simplex opposite its vertex i (for the canonical pair that face is the
// polar hyperplane of first vertex i), and symmetrically for
// second_on_first.  The pair is a non-degenerate Moebius pair exactly when
// both matrices have a single 1 in every row and every column.
struct IncidenceReport {
    std::vector<std::vector<std::uint8_t>> first_on_second;
    std::vector<std::vector<std::uint8_t>> second_on_first;
    bool first_is_simplex = false;
    bool second_is_simplex = false;
    bool valid = false;
    std::vector<std::string> failures;
};

IncidenceReport verify_moebius_pair(const std::vector<ProjectivePoint>& first,
                                    const std::vector<ProjectivePoint>& second,
                                    const NullPolarity& polarity);
IncidenceReport verify_moebius_pair(const MoebiusPair& pair);

// Change of basis onto the second simplex: with columns (-1)^i * q_i (q_i the
// form-inverse columns), the congruence image of the form equals the form up
// to the scalar -1 (exactly, in characteristic two) and the inverse basis
// matrix reproduces the polar simplex columnwise.  True when the pair shows
// the full first/second symmetry.
bool dual_basis_check(const MoebiusPair& pair);

// All-ones perspectivity center for p = 2 (every line vertex_k--polar_k runs
// through it); in odd characteristic returns nullopt after verifying the
// standard non-concurrency witness.
std::optional<ProjectivePoint> perspectivity_center(const MoebiusPair& pair);

// Pair induced inside the span of the selected vertices by the restricted
// polarity, in restricted coordinates (positions outside `indices` dropped),
// plus the same vertices in ambient coordinates.
struct NestedPair {
    std::vector<std::size_t> indices;
    MoebiusPair restricted;
    std::vector<ProjectivePoint> ambient_first;
    std::vector<ProjectivePoint> ambient_second;
};

// Requires strictly increasing indices within [0, n] of even cardinality
// >= 4; cardinality 2 is the degenerate two-point pair (DegeneratePairError).
// The full index set returns the original pair.
NestedPair nested_pair(const MoebiusPair& pair, const std::vector<std::size_t>& indices);

// Enumerates the construction point of every odd-cardinality index set and
// checks they are pairwise distinct; the expected total is 2^n.
struct CensusReport {
    std::size_t expected = 0;
    std::size_t enumerated = 0;
    std::size_t distinct = 0;
    bool all_distinct = false;
    bool ok = false;
};
CensusReport point_census(std::size_t n, std::uint32_t p);

// Classification of a nonzero GF(2) vector relative to the construction:
// odd weight  -> the construction point on the support;
// weight 2    -> intersection of the matching simplex edge with the polar
//                hyperplane of the all-ones point;
// even weight >= 4 -> perspectivity center of the nested pair on the support.
struct Gf2Classification {
    enum class Kind { OddWeightPoint, EdgePoint, NestedPairCenter };
    Kind kind;
    std::size_t weight = 0;
    std::vector<std::size_t> support;
};
Gf2Classification classify_gf2_point(const FpVector& v, std::size_t n);

}  // namespace moebius

#endif
