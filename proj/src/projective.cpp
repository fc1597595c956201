#include "moebius/projective.hpp"

#include <algorithm>
#include <stdexcept>

namespace moebius {

ProjectivePoint::ProjectivePoint(const FpVector& coords) : coords_(coords) {
    const std::size_t lead = coords.first_nonzero();
    if (lead == coords.size()) {
        throw std::invalid_argument("the zero vector does not represent a point");
    }
    const Fp inv = coords.at(lead).inverse();
    coords_ = coords.scaled(inv);
}

namespace {

std::vector<FpVector> echelon_basis(const std::vector<FpVector>& generators, std::size_t ambient,
                                    std::uint32_t modulus) {
    for (const auto& g : generators) {
        if (g.size() != ambient || g.modulus() != modulus) {
            throw DimensionError("generator outside the ambient space");
        }
    }
    if (generators.empty()) return {};
    EchelonForm ef =
        reduced_row_echelon(FpMatrix::from_row_vectors(generators, ambient, modulus));
    std::vector<FpVector> basis;
    for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r) basis.push_back(ef.matrix.row(r));
    return basis;
}

}  // namespace

Subspace::Subspace(const std::vector<FpVector>& generators, std::size_t ambient,
                   std::uint32_t modulus)
    : ambient_(ambient), modulus_(modulus), basis_(echelon_basis(generators, ambient, modulus)) {
    Fp(0, modulus);
    if (ambient == 0) throw DimensionError("ambient space must be nontrivial");
}

Subspace Subspace::empty(std::size_t ambient, std::uint32_t modulus) {
    return Subspace({}, ambient, modulus);
}

Subspace Subspace::whole(std::size_t ambient, std::uint32_t modulus) {
    std::vector<FpVector> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
        FpVector e(ambient, modulus);
        e.set(i, 1);
        rows.push_back(std::move(e));
    }
    return Subspace(rows, ambient, modulus);
}

bool Subspace::contains_vector(const FpVector& v) const {
    if (v.size() != ambient_ || v.modulus() != modulus_) {
        throw DimensionError("vector outside the ambient space");
    }
    if (v.is_zero()) return true;
    std::vector<FpVector> rows = basis_;
    rows.push_back(v);
    return echelon_basis(rows, ambient_, modulus_).size() == basis_.size();
}

bool Subspace::contains(const ProjectivePoint& point) const {
    return contains_vector(point.coords());
}

ProjectivePoint Subspace::single_point() const {
    if (basis_.size() != 1) throw std::logic_error("subspace is not a single point");
    return ProjectivePoint(basis_.front());
}

NullPolarity::NullPolarity(FpMatrix form) : form_(std::move(form)) {
    if (form_.rows() != form_.cols()) throw DimensionError("polarity form must be square");
    for (std::size_t i = 0; i < form_.rows(); ++i) {
        if (!form_.at(i, i).is_zero()) {
            throw std::invalid_argument("polarity form must have zero diagonal");
        }
        for (std::size_t j = 0; j < form_.cols(); ++j) {
            if (form_.at(i, j) != -form_.at(j, i)) {
                throw std::invalid_argument("polarity form must be alternating");
            }
        }
    }
    // An invertible alternating form only exists in even vector dimension,
    // so this also enforces odd projective dimension.
    const std::size_t rank = mat_rank(form_);
    if (rank != form_.rows()) {
        throw SingularMatrixError(rank, form_.rows());
    }
}

Subspace span(const std::vector<ProjectivePoint>& points) {
    if (points.empty()) throw std::invalid_argument("span of an empty point list");
    const std::size_t ambient = points.front().coords().size();
    const std::uint32_t p = points.front().modulus();
    std::vector<FpVector> rows;
    for (const auto& pt : points) {
        if (pt.coords().size() != ambient || pt.modulus() != p) {
            throw DimensionError("mixed ambient dimensions in span");
        }
        rows.push_back(pt.coords());
    }
    return Subspace(rows, ambient, p);
}

namespace {

// Annihilator basis: all vectors orthogonal (standard dot) to every basis row.
std::vector<FpVector> annihilator(const Subspace& s) {
    if (s.basis().empty()) {
        return Subspace::whole(s.ambient_dim() + 1, s.modulus()).basis();
    }
    return mat_kernel(
        FpMatrix::from_row_vectors(s.basis(), s.ambient_dim() + 1, s.modulus()));
}

}  // namespace

Subspace meet(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim() || s1.modulus() != s2.modulus()) {
        throw DimensionError("meet of subspaces in different spaces");
    }
    const std::size_t ambient = s1.ambient_dim() + 1;
    // Intersection = annihilator of the union of the two annihilators.
    std::vector<FpVector> stacked = annihilator(s1);
    for (auto& v : annihilator(s2)) stacked.push_back(std::move(v));
    if (stacked.empty()) return Subspace::whole(ambient, s1.modulus());
    std::vector<FpVector> result =
        mat_kernel(FpMatrix::from_row_vectors(stacked, ambient, s1.modulus()));
    return Subspace(result, ambient, s1.modulus());
}

Subspace polar_image(const NullPolarity& pol, const Subspace& s) {
    if (pol.ambient_dim() != s.ambient_dim() || pol.modulus() != s.modulus()) {
        throw DimensionError("subspace does not live in the polarity's space");
    }
    const std::size_t ambient = s.ambient_dim() + 1;
    if (s.basis().empty()) return Subspace::whole(ambient, s.modulus());
    const FpMatrix system = mat_mul(
        FpMatrix::from_row_vectors(s.basis(), ambient, s.modulus()), pol.form());
    return Subspace(mat_kernel(system), ambient, s.modulus());
}

bool conjugate(const NullPolarity& pol, const ProjectivePoint& x, const ProjectivePoint& y) {
    if (x.ambient_dim() != pol.ambient_dim() || y.ambient_dim() != pol.ambient_dim() ||
        x.modulus() != pol.modulus() || y.modulus() != pol.modulus()) {
        throw DimensionError("points do not live in the polarity's space");
    }
    return x.coords().dot(mat_vec_mul(pol.form(), y.coords())).is_zero();
}

bool in_general_position(const std::vector<ProjectivePoint>& points) {
    if (points.empty()) throw std::invalid_argument("empty point list");
    const std::size_t ambient = points.front().coords().size();
    if (points.size() > ambient + 1) {  // more than n+2 points of PG(n,p)
        throw std::invalid_argument("too many points for the test to be meaningful");
    }
    const std::uint32_t p = points.front().modulus();
    std::vector<FpVector> rows;
    for (const auto& pt : points) {
        if (pt.coords().size() != ambient || pt.modulus() != p) {
            throw DimensionError("mixed ambient dimensions");
        }
        rows.push_back(pt.coords());
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) return false;
        }
    }
    const std::size_t rank = mat_rank(FpMatrix::from_row_vectors(rows, ambient, p));
    // Independence of every rank-sized subfamily inside the span; smaller
    // subfamilies are contained in these, so they are covered as well.
    const std::size_t m = points.size();
    std::vector<std::size_t> subset(rank);
    for (std::size_t i = 0; i < rank; ++i) subset[i] = i;
    while (true) {
        std::vector<FpVector> sub;
        for (std::size_t idx : subset) sub.push_back(points[idx].coords());
        if (mat_rank(FpMatrix::from_row_vectors(sub, ambient, p)) != rank) return false;
        std::size_t i = rank;
        while (i > 0 && subset[i - 1] == m - rank + (i - 1)) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < rank; ++j) subset[j] = subset[j - 1] + 1;
    }
    return true;
}

std::vector<ProjectivePoint> all_projective_points(std::size_t dim, std::uint32_t p) {
    std::vector<ProjectivePoint> points;
    std::vector<std::uint32_t> digits(dim, 0);
    while (true) {
        // advance odometer
        std::size_t pos = dim;
        while (pos > 0) {
            --pos;
            if (digits[pos] + 1 < p) {
                ++digits[pos];
                for (std::size_t j = pos + 1; j < dim; ++j) digits[j] = 0;
                break;
            }
            if (pos == 0) return points;
        }
        FpVector v = FpVector::from_values(digits, p);
        const std::size_t lead = v.first_nonzero();
        if (lead < dim && v.at(lead).value() == 1) {
            points.emplace_back(v);
        }
    }
}

}  // namespace moebius
