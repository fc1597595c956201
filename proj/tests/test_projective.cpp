#include <doctest.h>

#include "moebius/pair.hpp"
#include "moebius/projective.hpp"

using namespace moebius;

namespace {

ProjectivePoint basis_point(std::size_t j, std::size_t ambient, std::uint32_t p) {
    FpVector e(ambient, p);
    e.set(j, 1);
    return ProjectivePoint(e);
}

}  // namespace

TEST_CASE("points are canonicalized at construction") {
    const ProjectivePoint pt(FpVector::from_values({0, 2, 4, 1}, 5));
    CHECK(pt.coords() == FpVector::from_values({0, 1, 2, 3}, 5));
    CHECK(pt == ProjectivePoint(FpVector::from_values({0, 4, 3, 2}, 5)));
    CHECK_THROWS_AS(ProjectivePoint(FpVector(3, 3)), std::invalid_argument);
}

TEST_CASE("span: single point, whole space, coordinate plane") {
    const auto p0 = basis_point(0, 6, 2);
    const Subspace single = span({p0});
    CHECK(single.dim() == 0);
    CHECK(single.single_point() == p0);

    std::vector<ProjectivePoint> all;
    for (std::size_t j = 0; j < 6; ++j) all.push_back(basis_point(j, 6, 2));
    CHECK(span(all).dim() == 5);

    const Subspace plane = span(
        {basis_point(0, 4, 3), basis_point(1, 4, 3), basis_point(2, 4, 3)});
    CHECK(plane.dim() == 2);
    CHECK(plane.contains(ProjectivePoint(FpVector::from_values({1, 2, 1, 0}, 3))));
    CHECK_FALSE(plane.contains(basis_point(3, 4, 3)));

    CHECK_THROWS_AS(span({basis_point(0, 4, 3), basis_point(0, 6, 3)}), DimensionError);
}

TEST_CASE("meet reproduces the parity dichotomy on small faces") {
    const NullPolarity pol = standard_null_polarity(3, 5);
    const Subspace whole = Subspace::whole(4, 5);

    const Subspace edge = span({basis_point(0, 4, 5), basis_point(1, 4, 5)});
    CHECK(meet(whole, edge) == edge);
    CHECK(meet(edge, polar_image(pol, edge)).is_empty());

    const Subspace plane =
        span({basis_point(0, 4, 5), basis_point(1, 4, 5), basis_point(2, 4, 5)});
    const Subspace common = meet(plane, polar_image(pol, plane));
    REQUIRE(common.dim() == 0);
    CHECK(common.single_point() ==
          ProjectivePoint(FpVector::from_values({4, 1, 4, 0}, 5)));
}

TEST_CASE("polar image: hyperplane of a vertex, whole space, all-ones point") {
    const NullPolarity pol3 = standard_null_polarity(3, 3);
    const Subspace hyperplane = polar_image(pol3, span({basis_point(0, 4, 3)}));
    CHECK(hyperplane.dim() == 2);
    // row 0 of the form annihilates exactly this hyperplane
    const FpVector row0 = pol3.form().row(0);
    for (const auto& b : hyperplane.basis()) CHECK(row0.dot(b).is_zero());

    CHECK(polar_image(pol3, Subspace::whole(4, 3)).is_empty());

    const NullPolarity pol5 = standard_null_polarity(5, 2);
    const Subspace center_hyperplane = polar_image(
        pol5, span({ProjectivePoint(FpVector::from_values({1, 1, 1, 1, 1, 1}, 2))}));
    CHECK(center_hyperplane.dim() == 4);
    for (const auto& b : center_hyperplane.basis()) {
        CHECK(b.weight() % 2 == 0);  // even-weight vectors solve sum x_i = 0
    }
}

TEST_CASE("conjugacy under the construction form") {
    const NullPolarity pol = standard_null_polarity(5, 2);
    const auto p0 = basis_point(0, 6, 2);
    const auto p1 = basis_point(1, 6, 2);
    CHECK(conjugate(pol, p0, p0));
    CHECK_FALSE(conjugate(pol, p0, p1));
    const ProjectivePoint q1(polar_simplex_vector(1, 5, 2));
    CHECK(conjugate(pol, p0, q1));

    // alternating symmetry on every pair of points of PG(3,3)
    const NullPolarity pol3 = standard_null_polarity(3, 3);
    const auto points = all_projective_points(4, 3);
    for (const auto& x : points) {
        CHECK(conjugate(pol3, x, x));
        for (const auto& y : points) {
            CHECK(conjugate(pol3, x, y) == conjugate(pol3, y, x));
        }
    }
}

TEST_CASE("general position is judged inside the span") {
    std::vector<ProjectivePoint> simplex;
    for (std::size_t j = 0; j < 4; ++j) simplex.push_back(basis_point(j, 4, 5));
    CHECK(in_general_position(simplex));

    // plane family containing a collinear triple
    CHECK_FALSE(in_general_position(
        {basis_point(0, 4, 5), basis_point(1, 4, 5),
         ProjectivePoint(FpVector::from_values({1, 1, 0, 0}, 5)), basis_point(2, 4, 5)}));

    // repeated point
    CHECK_FALSE(in_general_position({basis_point(0, 4, 5), basis_point(0, 4, 5)}));

    // the meet point of a plane face extends the face vertices in general position
    const IntersectionPoint meet_point = intersection_point({0, 1, 2}, 3, 5);
    CHECK(in_general_position({basis_point(0, 4, 5), basis_point(1, 4, 5),
                               basis_point(2, 4, 5), meet_point.point}));

    std::vector<ProjectivePoint> too_many(6, basis_point(0, 4, 5));
    CHECK_THROWS_AS(in_general_position(too_many), std::invalid_argument);
}

TEST_CASE("polar image inverts itself and complements dimension") {
    for (std::uint32_t p : {2u, 3u}) {
        const NullPolarity pol = standard_null_polarity(5, p);
        std::vector<ProjectivePoint> points;
        for (std::size_t j = 0; j < 6; ++j) points.push_back(basis_point(j, 6, p));
        for (std::size_t count = 1; count <= 6; ++count) {
            const Subspace s = span(std::vector<ProjectivePoint>(
                points.begin(), points.begin() + static_cast<std::ptrdiff_t>(count)));
            const Subspace image = polar_image(pol, s);
            CHECK(image.dim() == 5 - 1 - s.dim());
            CHECK(polar_image(pol, image) == s);
        }
    }
}

TEST_CASE("degenerate forms are rejected") {
    CHECK_THROWS_AS(NullPolarity(FpMatrix(4, 4, 3)), SingularMatrixError);
    CHECK_THROWS_AS(NullPolarity(FpMatrix::identity(4, 3)), std::invalid_argument);
    FpMatrix skew_odd(3, 3, 5);
    skew_odd.set(0, 1, 1);
    skew_odd.set(1, 0, 4);
    CHECK_THROWS_AS(NullPolarity(std::move(skew_odd)), SingularMatrixError);
}

TEST_CASE("projective point enumeration is canonical and complete") {
    CHECK(all_projective_points(4, 3).size() == 40);  // (3^4-1)/2
    CHECK(all_projective_points(6, 2).size() == 63);
    for (const auto& pt : all_projective_points(4, 3)) {
        CHECK(pt.coords().at(pt.coords().first_nonzero()).value() == 1);
    }
}
