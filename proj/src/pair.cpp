#include "moebius/pair.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace moebius {

namespace {

void require_prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

void require_odd(std::size_t n) {
    if (n % 2 == 0) throw std::invalid_argument("n must be odd");
}

void require_index_list(const std::vector<std::size_t>& indices, std::size_t n) {
    if (indices.empty()) throw std::invalid_argument("empty index list");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] > n) throw std::invalid_argument("index out of range");
        if (i > 0 && indices[i - 1] >= indices[i]) {
            throw std::invalid_argument("indices must be strictly increasing");
        }
    }
}

// Alternating-sign sum over the selected coordinate axes; the sign pattern
// depends on the position inside the (sorted) index list, not on the index
// value itself.
FpVector construction_point_vector(const std::vector<std::size_t>& indices, std::size_t n,
                                   std::uint32_t p) {
    FpVector v(n + 1, p);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        v.set(indices[i], parity_sign(i + 1, p));
    }
    return v;
}

}  // namespace

FormBlocks form_blocks(std::uint32_t p) {
    require_prime(p);
    const std::uint32_t one = 1 % p;
    const std::uint32_t minus_one = p - 1;
    return FormBlocks{
        FpMatrix::from_rows({{0, minus_one}, {one, 0}}, p),
        FpMatrix::from_rows({{one, one}, {one, one}}, p),
        FpMatrix::from_rows({{one, minus_one}, {minus_one, one}}, p),
        FpMatrix::identity(2, p),
    };
}

NullPolarity standard_null_polarity(std::size_t n, std::uint32_t p) {
    require_odd(n);
    require_prime(p);
    FpMatrix a(n + 1, n + 1, p);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            if (i < j) {
                a.set(i, j, p - 1);
            } else if (i > j) {
                a.set(i, j, 1);
            }
        }
    }
    return NullPolarity(std::move(a));
}

FpMatrix standard_form_inverse(std::size_t n, std::uint32_t p) {
    require_odd(n);
    require_prime(p);
    const FormBlocks blocks = form_blocks(p);
    const FpMatrix diag = blocks.skew.negated();
    const FpMatrix above = blocks.checker.negated();
    const FpMatrix below = blocks.checker;
    FpMatrix inv(n + 1, n + 1, p);
    for (std::size_t bi = 0; bi <= n / 2; ++bi) {
        for (std::size_t bj = 0; bj <= n / 2; ++bj) {
            const FpMatrix& block = bi == bj ? diag : (bi < bj ? above : below);
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    inv.set(2 * bi + r, 2 * bj + c, block.at(r, c));
        }
    }
    return inv;
}

Simplex::Simplex(std::vector<ProjectivePoint> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("simplex needs vertices");
    const std::size_t ambient = vertices_.front().coords().size();
    const std::uint32_t p = vertices_.front().modulus();
    if (vertices_.size() != ambient) {
        throw DimensionError("an n-simplex needs exactly n+1 vertices");
    }
    if ((ambient - 1) % 2 == 0) throw std::invalid_argument("n must be odd");
    std::vector<FpVector> rows;
    for (const auto& v : vertices_) {
        if (v.coords().size() != ambient || v.modulus() != p) {
            throw DimensionError("mixed ambient dimensions in simplex");
        }
        rows.push_back(v.coords());
    }
    if (mat_rank(FpMatrix::from_row_vectors(rows, ambient, p)) != ambient) {
        throw std::invalid_argument("simplex vertices must span the whole space");
    }
}

Simplex standard_simplex(std::size_t n, std::uint32_t p) {
    require_odd(n);
    require_prime(p);
    std::vector<ProjectivePoint> vertices;
    for (std::size_t j = 0; j <= n; ++j) {
        FpVector e(n + 1, p);
        e.set(j, 1);
        vertices.emplace_back(e);
    }
    return Simplex(std::move(vertices));
}

IntersectionPoint intersection_point(const std::vector<std::size_t>& indices, std::size_t n,
                                     std::uint32_t p) {
    require_odd(n);
    require_prime(p);
    require_index_list(indices, n);
    if (indices.size() % 2 == 0) {
        throw std::invalid_argument("index list must have odd cardinality");
    }
    if (indices.size() < 3) {
        throw std::invalid_argument("at least three indices are required");
    }
    return IntersectionPoint{indices,
                             ProjectivePoint(construction_point_vector(indices, n, p))};
}

FpVector polar_simplex_vector(std::size_t m, std::size_t n, std::uint32_t p) {
    require_odd(n);
    require_prime(p);
    if (m > n) throw std::invalid_argument("index out of range");
    FpVector q(n + 1, p);
    for (std::size_t i = 0; i <= n; ++i) {
        if (i < m) {
            q.set(i, parity_sign(i + m + 1, p));
        } else if (i > m) {
            q.set(i, parity_sign(i + m, p));
        }
    }
    return q;
}

MoebiusPair build_moebius_pair(std::size_t n, std::uint32_t p) {
    require_odd(n);
    require_prime(p);
    if (n == 1) {
        throw DegeneratePairError("n = 1 gives the degenerate two-point pair");
    }
    Simplex first = standard_simplex(n, p);
    std::vector<ProjectivePoint> polar_vertices;
    for (std::size_t m = 0; m <= n; ++m) {
        polar_vertices.emplace_back(polar_simplex_vector(m, n, p));
    }
    return MoebiusPair{std::move(first), Simplex(std::move(polar_vertices)),
                       standard_null_polarity(n, p)};
}

namespace {

bool rows_and_columns_single(const std::vector<std::vector<std::uint8_t>>& m,
                             const std::string& name, std::vector<std::string>& failures) {
    bool ok = true;
    const std::size_t size = m.size();
    for (std::size_t i = 0; i < size; ++i) {
        std::size_t row_sum = 0, col_sum = 0;
        for (std::size_t j = 0; j < size; ++j) {
            row_sum += m[i][j];
            col_sum += m[j][i];
        }
        if (row_sum != 1) {
            failures.push_back(name + ": row " + std::to_string(i) + " has " +
                               std::to_string(row_sum) + " incidences");
            ok = false;
        }
        if (col_sum != 1) {
            failures.push_back(name + ": column " + std::to_string(i) + " has " +
                               std::to_string(col_sum) + " incidences");
            ok = false;
        }
    }
    return ok;
}

// Incidence of every `points` member with every hyperplanar face of `simplex`
// (face i = span of all vertices but vertex i).
std::vector<std::vector<std::uint8_t>> face_incidence(
    const std::vector<ProjectivePoint>& simplex, const std::vector<ProjectivePoint>& points) {
    const std::size_t count = simplex.size();
    std::vector<std::vector<std::uint8_t>> incidence(count,
                                                     std::vector<std::uint8_t>(count, 0));
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<ProjectivePoint> face_vertices;
        for (std::size_t k = 0; k < count; ++k) {
            if (k != i) face_vertices.push_back(simplex[k]);
        }
        const Subspace face = span(face_vertices);
        for (std::size_t j = 0; j < count; ++j) {
            incidence[i][j] = face.contains(points[j]) ? 1 : 0;
        }
    }
    return incidence;
}

bool spans_whole_space(const std::vector<ProjectivePoint>& points) {
    std::vector<FpVector> rows;
    for (const auto& pt : points) rows.push_back(pt.coords());
    const std::size_t ambient = points.front().coords().size();
    return mat_rank(FpMatrix::from_row_vectors(rows, ambient, points.front().modulus())) ==
           ambient;
}

}  // namespace

IncidenceReport verify_moebius_pair(const std::vector<ProjectivePoint>& first,
                                    const std::vector<ProjectivePoint>& second,
                                    const NullPolarity& polarity) {
    const std::size_t count = polarity.ambient_dim() + 1;
    if (first.size() != count || second.size() != count) {
        throw DimensionError("vertex count does not match the polarity's space");
    }
    for (const auto& pt : first) {
        if (pt.coords().size() != count || pt.modulus() != polarity.modulus()) {
            throw DimensionError("first simplex outside the polarity's space");
        }
    }
    for (const auto& pt : second) {
        if (pt.coords().size() != count || pt.modulus() != polarity.modulus()) {
            throw DimensionError("second simplex outside the polarity's space");
        }
    }

    IncidenceReport report;
    report.first_is_simplex = spans_whole_space(first);
    report.second_is_simplex = spans_whole_space(second);
    if (!report.first_is_simplex) report.failures.push_back("first simplex: vertices dependent");
    if (!report.second_is_simplex)
        report.failures.push_back("second simplex: vertices dependent");

    report.first_on_second = face_incidence(second, first);
    report.second_on_first = face_incidence(first, second);

    const bool fs_ok =
        rows_and_columns_single(report.first_on_second, "first-on-second", report.failures);
    const bool sf_ok =
        rows_and_columns_single(report.second_on_first, "second-on-first", report.failures);
    report.valid =
        report.first_is_simplex && report.second_is_simplex && fs_ok && sf_ok;
    return report;
}

IncidenceReport verify_moebius_pair(const MoebiusPair& pair) {
    return verify_moebius_pair(pair.first.vertices(), pair.second.vertices(), pair.polarity);
}

bool dual_basis_check(const MoebiusPair& pair) {
    const FpMatrix& a = pair.polarity.form();
    const std::uint32_t p = a.modulus();
    const FpMatrix a_inv = mat_inverse(a);
    const std::size_t size = a.rows();

    std::vector<FpVector> columns;
    for (std::size_t i = 0; i < size; ++i) {
        columns.push_back(a_inv.column(i).scaled(parity_sign(i, p)));
    }
    const FpMatrix basis = FpMatrix::from_columns(columns);

    // The congruence image is a matrix for the same polarity: it equals the
    // form itself up to the scalar -1 (and exactly in characteristic two).
    const FpMatrix image = congruence_transform(a, basis);
    if (image != a && image != a.negated()) return false;
    if (p == 2 && image != a) return false;

    const FpMatrix basis_inv = mat_inverse(basis);
    for (std::size_t j = 0; j < size; ++j) {
        if (ProjectivePoint(basis_inv.column(j)) != pair.second.vertices()[j]) return false;
    }
    return true;
}

std::optional<ProjectivePoint> perspectivity_center(const MoebiusPair& pair) {
    const std::uint32_t p = pair.polarity.modulus();
    const std::size_t n = pair.polarity.ambient_dim();
    const auto& first = pair.first.vertices();
    const auto& second = pair.second.vertices();

    if (p == 2) {
        FpVector ones(n + 1, p);
        for (std::size_t i = 0; i <= n; ++i) ones.set(i, 1);
        const ProjectivePoint center(ones);
        for (std::size_t k = 0; k <= n; ++k) {
            if (!span({first[k], second[k]}).contains(center)) {
                throw std::logic_error("vertex line misses the common point");
            }
        }
        return center;
    }

    // Odd characteristic: the meets of consecutive vertex lines are already
    // distinct points, so the lines cannot concur.
    const FpMatrix a_inv = mat_inverse(pair.polarity.form());
    std::vector<FpVector> witnesses;
    for (std::size_t j : {std::size_t{0}, std::size_t{2}}) {
        FpVector e(n + 1, p);
        e.set(j, 1);
        const FpVector w = a_inv.column(j) - e;
        const ProjectivePoint meet_point{w};
        if (!span({first[j], second[j]}).contains(meet_point) ||
            !span({first[j + 1], second[j + 1]}).contains(meet_point)) {
            throw std::logic_error("line meet witness is off its lines");
        }
        witnesses.push_back(w);
    }
    if (mat_rank(FpMatrix::from_row_vectors(witnesses, n + 1, p)) != 2) {
        throw std::logic_error("line meet witnesses are dependent");
    }
    return std::nullopt;
}

NestedPair nested_pair(const MoebiusPair& pair, const std::vector<std::size_t>& indices) {
    const std::size_t n = pair.polarity.ambient_dim();
    const std::uint32_t p = pair.polarity.modulus();
    require_index_list(indices, n);
    if (indices.size() % 2 != 0) {
        throw std::invalid_argument("index list must have even cardinality");
    }
    if (indices.size() == 2) {
        throw DegeneratePairError("two indices give the degenerate nested pair");
    }
    if (pair.first.vertices() != standard_simplex(n, p).vertices()) {
        throw std::invalid_argument("nested pairs require the standard construction pair");
    }

    const std::size_t k = indices.size() - 1;  // odd, >= 3
    NestedPair nested{indices, build_moebius_pair(k, p), {}, {}};
    for (std::size_t j : indices) nested.ambient_first.push_back(pair.first.vertices()[j]);
    for (std::size_t m = 0; m < indices.size(); ++m) {
        std::vector<std::size_t> residual;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i != m) residual.push_back(indices[i]);
        }
        nested.ambient_second.emplace_back(construction_point_vector(residual, n, p));
    }
    return nested;
}

CensusReport point_census(std::size_t n, std::uint32_t p) {
    require_odd(n);
    require_prime(p);
    CensusReport report;
    report.expected = std::size_t{1} << n;

    std::set<std::vector<std::uint32_t>> seen;
    const std::size_t masks = std::size_t{1} << (n + 1);
    for (std::size_t mask = 1; mask < masks; ++mask) {
        if (__builtin_popcountll(mask) % 2 == 0) continue;
        std::vector<std::size_t> indices;
        for (std::size_t i = 0; i <= n; ++i) {
            if (mask & (std::size_t{1} << i)) indices.push_back(i);
        }
        const ProjectivePoint point(construction_point_vector(indices, n, p));
        seen.insert(point.coords().values());
        ++report.enumerated;
    }
    report.distinct = seen.size();
    report.all_distinct = report.distinct == report.enumerated;
    report.ok = report.all_distinct && report.distinct == report.expected;
    return report;
}

Gf2Classification classify_gf2_point(const FpVector& v, std::size_t n) {
    if (v.modulus() != 2) throw std::invalid_argument("classification requires GF(2)");
    if (v.size() != n + 1) throw DimensionError("vector length must be n+1");
    if (v.is_zero()) throw std::invalid_argument("the zero vector does not represent a point");

    Gf2Classification c;
    c.weight = v.weight();
    for (std::size_t i = 0; i <= n; ++i) {
        if (!v.at(i).is_zero()) c.support.push_back(i);
    }
    if (c.weight % 2 == 1) {
        c.kind = Gf2Classification::Kind::OddWeightPoint;
    } else if (c.weight == 2) {
        c.kind = Gf2Classification::Kind::EdgePoint;
    } else {
        c.kind = Gf2Classification::Kind::NestedPairCenter;
    }
    return c;
}

}  // namespace moebius
