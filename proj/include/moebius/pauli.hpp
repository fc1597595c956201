#ifndef MOEBIUS_PAULI_HPP
#define MOEBIUS_PAULI_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moebius/pair.hpp"
#include "moebius/projective.hpp"

namespace moebius {

// Phase group size: the qubit group carries the full fourth roots of unity,
// qudit groups for odd prime d only the d-th roots.
std::uint32_t phase_modulus(std::uint32_t d);

// Generalized Pauli operator on N qudits of prime dimension d, stored as a
// phase exponent plus a symplectic vector in GF(d)^(2N) laid out as N blocks
// (x_i, z_i).  Elements with zero symplectic vector are central.
class PauliElement {
  public:
    PauliElement(std::uint32_t phase, FpVector sympvec);

    std::uint32_t d() const { return sympvec_.modulus(); }
    std::size_t qudits() const { return sympvec_.size() / 2; }
    std::uint32_t phase() const { return phase_; }
    const FpVector& sympvec() const { return sympvec_; }
    bool is_central() const { return sympvec_.is_zero(); }

    friend bool operator==(const PauliElement& a, const PauliElement& b) {
        return a.phase_ == b.phase_ && a.sympvec_ == b.sympvec_;
    }
    friend bool operator!=(const PauliElement& a, const PauliElement& b) { return !(a == b); }

  private:
    std::uint32_t phase_;
    FpVector sympvec_;
};

// Group product.  Symplectic vectors add; the phase picks up the per-qudit
// reordering contributions, tracked mod 4 for d = 2 and mod d otherwise, in
// the convention fixed by the Kronecker-product oracle.
PauliElement multiply(const PauliElement& a, const PauliElement& b);

// Value of the symplectic commutation form on the two symplectic vectors
// (block-diagonal 2x2 skew blocks); zero exactly when the elements commute.
std::uint32_t commutator_exponent(const PauliElement& a, const PauliElement& b);

// 2N x 2N block-diagonal matrix of skew blocks over GF(d).
FpMatrix symplectic_form_matrix(std::size_t n_qudits, std::uint32_t d);

// Qubit label alphabet {0,x,y,z}, one symbol per qubit, mapped per symbol as
// 0->(0,0), x->(1,0), y->(0,1), z->(1,1).
FpVector label_to_vector(const std::string& label);
std::string vector_to_label(const FpVector& v);

// Point of PG(2N-1,d) determined by a non-central element.
ProjectivePoint to_point(const PauliElement& a);

// Every group element whose coset determines the given point:
// (d-1) scalar classes times the full phase group.
std::vector<PauliElement> representatives(const ProjectivePoint& point);

// The fixed 6x6 GF(2) basis change whose congruence image of the three-qubit
// symplectic form is the pair-construction form.
FpMatrix three_qubit_basis_change();

// Basis change T with T^T * (block-diagonal form) * T = construction form on
// PG(n,p), by symplectic Gram-Schmidt.  The result is verified before it is
// returned.
FpMatrix find_basis_change(std::size_t n, std::uint32_t p);

// Applies the basis change to both simplices and picks phase-0
// representatives; returns (first family, second family).
std::pair<std::vector<PauliElement>, std::vector<PauliElement>> lift_pair_to_operators(
    const MoebiusPair& pair, const FpMatrix& basis_change);

// Exhaustive search over the points of PG(2N-1,d) for one conjugate to every
// family member.
std::optional<ProjectivePoint> has_common_commuting_element(
    const std::vector<PauliElement>& family);

// True when no element outside the center commutes with the whole family but
// every proper subfamily admits one - the group-theoretic simplex criterion.
bool is_simplex_family(const std::vector<PauliElement>& family);

// Commutation pattern of the two operator families of a Moebius pair:
// no outside element commutes with a whole family, members of one family are
// mutually non-commuting, and each member commutes with precisely the
// other-family members of different index.  Both orientations are checked.
struct MoebiusCommutationReport {
    bool no_common_commuter_first = false;
    bool no_common_commuter_second = false;
    bool pairwise_noncommuting_first = false;
    bool pairwise_noncommuting_second = false;
    bool cross_pattern_first = false;
    bool cross_pattern_second = false;
    std::vector<std::vector<std::uint32_t>> cross_exponents;  // [i][j] on (first_i, second_j)

    bool all_hold() const {
        return no_common_commuter_first && no_common_commuter_second &&
               pairwise_noncommuting_first && pairwise_noncommuting_second &&
               cross_pattern_first && cross_pattern_second;
    }
};

MoebiusCommutationReport verify_moebius_commutation(const std::vector<PauliElement>& first,
                                                    const std::vector<PauliElement>& second);

// Exact Gaussian-integer matrices for the qubit case: ground truth for the
// phase and commutation conventions.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend GaussianInt operator+(GaussianInt a, GaussianInt b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(GaussianInt a, GaussianInt b) = default;
};

class GaussianMatrix {
  public:
    GaussianMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    std::size_t size() const { return n_; }
    GaussianInt at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
    void set(std::size_t r, std::size_t c, GaussianInt v) { entries_[r * n_ + c] = v; }

    friend GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);
    friend bool operator==(const GaussianMatrix& a, const GaussianMatrix& b) = default;

  private:
    std::size_t n_;
    std::vector<GaussianInt> entries_;
};

// i^phase times the Kronecker product of the per-qubit sigma matrices.
// Qubits only, N <= 4.
GaussianMatrix kron_oracle(const PauliElement& a);
bool oracle_commutes(const PauliElement& a, const PauliElement& b);

// The full three-qubit walkthrough: both operator families, the twenty
// triple points, the nested tetrahedra with their centers, the perspectivity
// center, the element count, the pairwise commutation matrix of all twelve
// points, and the commutation report.
struct ThreeQubitDemo {
    std::array<std::string, 6> first_labels;
    std::array<std::string, 6> second_labels;
    std::vector<std::array<std::size_t, 3>> triples;  // lexicographic
    std::vector<std::string> triple_labels;
    std::string center_label;
    std::size_t element_count = 0;
    std::vector<std::vector<std::uint8_t>> commute_matrix;  // 12x12, diagonal 0
    bool commute_pattern_ok = false;

    struct NestedEntry {
        std::array<std::size_t, 4> indices;
        std::array<std::string, 4> first_labels;
        std::array<std::string, 4> second_labels;
        std::string center_label;
        bool pairwise_noncommuting = false;
        bool cross_pattern = false;
    };
    std::vector<NestedEntry> nested;  // 15, lexicographic by index set
    bool nested_ok = false;

    MoebiusCommutationReport commutation;
    bool all_ok = false;
};

ThreeQubitDemo three_qubit_demo();

// Plain-text tables, one line per family / row of ten, space separated.
std::string demo_family_table(const ThreeQubitDemo& demo);
std::string demo_triple_table(const ThreeQubitDemo& demo);

}  // namespace moebius

#endif
