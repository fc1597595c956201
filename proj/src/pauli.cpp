#include "moebius/pauli.hpp"

#include <algorithm>
#include <stdexcept>

namespace moebius {

std::uint32_t phase_modulus(std::uint32_t d) { return d == 2 ? 4 : d; }

PauliElement::PauliElement(std::uint32_t phase, FpVector sympvec)
    : phase_(0), sympvec_(std::move(sympvec)) {
    if (sympvec_.size() == 0 || sympvec_.size() % 2 != 0) {
        throw DimensionError("symplectic vector length must be even and positive");
    }
    phase_ = phase % phase_modulus(sympvec_.modulus());
}

namespace {

void require_same_group(const PauliElement& a, const PauliElement& b) {
    if (a.d() != b.d() || a.qudits() != b.qudits()) {
        throw DimensionError("elements of different Pauli groups");
    }
}

// Each qubit symbol is sigma(x,z) = i^(z*(1-x)) * X^(x+z) * Z^z, so that
// (1,0) is X, (0,1) is Y and (1,1) is Z.  The product of two symbols then
// re-normalizes with the phase below.
std::uint32_t qubit_block_phase(std::uint32_t x1, std::uint32_t z1, std::uint32_t x2,
                                std::uint32_t z2) {
    const auto c = [](std::uint32_t x, std::uint32_t z) -> std::int64_t {
        return static_cast<std::int64_t>(z) * (1 - static_cast<std::int64_t>(x));
    };
    const std::uint32_t x3 = (x1 + x2) % 2;
    const std::uint32_t z3 = (z1 + z2) % 2;
    const std::int64_t phase =
        c(x1, z1) + c(x2, z2) - c(x3, z3) + 2 * static_cast<std::int64_t>(z1) * ((x2 + z2) % 2);
    return static_cast<std::uint32_t>(((phase % 4) + 4) % 4);
}

}  // namespace

PauliElement multiply(const PauliElement& a, const PauliElement& b) {
    require_same_group(a, b);
    const std::uint32_t d = a.d();
    const std::uint32_t mod = phase_modulus(d);
    std::uint64_t phase = a.phase() + b.phase();
    for (std::size_t q = 0; q < a.qudits(); ++q) {
        const std::uint32_t x1 = a.sympvec().at(2 * q).value();
        const std::uint32_t z1 = a.sympvec().at(2 * q + 1).value();
        const std::uint32_t x2 = b.sympvec().at(2 * q).value();
        const std::uint32_t z2 = b.sympvec().at(2 * q + 1).value();
        if (d == 2) {
            phase += qubit_block_phase(x1, z1, x2, z2);
        } else {
            // X^x Z^z blocks: moving Z^z1 across X^x2 costs z1*x2.
            phase += static_cast<std::uint64_t>(z1) * x2;
        }
    }
    return PauliElement(static_cast<std::uint32_t>(phase % mod),
                        a.sympvec() + b.sympvec());
}

std::uint32_t commutator_exponent(const PauliElement& a, const PauliElement& b) {
    require_same_group(a, b);
    const std::uint32_t d = a.d();
    std::uint64_t acc = 0;
    for (std::size_t q = 0; q < a.qudits(); ++q) {
        const std::uint64_t x1 = a.sympvec().at(2 * q).value();
        const std::uint64_t z1 = a.sympvec().at(2 * q + 1).value();
        const std::uint64_t x2 = b.sympvec().at(2 * q).value();
        const std::uint64_t z2 = b.sympvec().at(2 * q + 1).value();
        acc = (acc + z1 * x2 + (d - 1) * ((x1 * z2) % d)) % d;
    }
    return static_cast<std::uint32_t>(acc);
}

FpMatrix symplectic_form_matrix(std::size_t n_qudits, std::uint32_t d) {
    if (n_qudits == 0) throw std::invalid_argument("at least one qudit");
    const FpMatrix skew = form_blocks(d).skew;
    FpMatrix s(2 * n_qudits, 2 * n_qudits, d);
    for (std::size_t q = 0; q < n_qudits; ++q) {
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) s.set(2 * q + r, 2 * q + c, skew.at(r, c));
    }
    return s;
}

FpVector label_to_vector(const std::string& label) {
    if (label.empty()) throw std::invalid_argument("empty label");
    FpVector v(2 * label.size(), 2);
    for (std::size_t q = 0; q < label.size(); ++q) {
        std::uint32_t x = 0, z = 0;
        switch (label[q]) {
            case '0': break;
            case 'x': x = 1; break;
            case 'y': z = 1; break;
            case 'z': x = 1; z = 1; break;
            default: throw std::invalid_argument("label symbols must be 0, x, y or z");
        }
        v.set(2 * q, x);
        v.set(2 * q + 1, z);
    }
    return v;
}

std::string vector_to_label(const FpVector& v) {
    if (v.modulus() != 2) throw std::invalid_argument("labels are defined over GF(2)");
    if (v.size() == 0 || v.size() % 2 != 0) throw DimensionError("vector length must be even");
    std::string label;
    for (std::size_t q = 0; q < v.size() / 2; ++q) {
        const std::uint32_t x = v.at(2 * q).value();
        const std::uint32_t z = v.at(2 * q + 1).value();
        label += x == 0 ? (z == 0 ? '0' : 'y') : (z == 0 ? 'x' : 'z');
    }
    return label;
}

ProjectivePoint to_point(const PauliElement& a) {
    if (a.is_central()) {
        throw std::invalid_argument("central elements do not represent a point");
    }
    return ProjectivePoint(a.sympvec());
}

std::vector<PauliElement> representatives(const ProjectivePoint& point) {
    const std::uint32_t d = point.modulus();
    std::vector<PauliElement> out;
    for (std::uint32_t k = 1; k < d; ++k) {
        const FpVector scaled = point.coords().scaled(Fp(k, d));
        for (std::uint32_t phase = 0; phase < phase_modulus(d); ++phase) {
            out.emplace_back(phase, scaled);
        }
    }
    return out;
}

FpMatrix three_qubit_basis_change() {
    const FormBlocks blocks = form_blocks(2);
    FpMatrix t(6, 6, 2);
    for (std::size_t bi = 0; bi < 3; ++bi) {
        for (std::size_t bj = 0; bj < 3; ++bj) {
            const FpMatrix* block = nullptr;
            if (bi == bj) {
                block = &blocks.identity;
            } else if (bi < bj) {
                block = &blocks.ones;
            } else {
                continue;
            }
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) t.set(2 * bi + r, 2 * bj + c, block->at(r, c));
        }
    }
    return t;
}

FpMatrix find_basis_change(std::size_t n, std::uint32_t p) {
    const NullPolarity polarity = standard_null_polarity(n, p);
    const FpMatrix& a = polarity.form();
    const std::size_t size = n + 1;
    const FpMatrix target = symplectic_form_matrix(size / 2, p);

    const auto pairing = [&](const FpVector& u, const FpVector& v) {
        return u.dot(mat_vec_mul(a, v));
    };

    std::vector<FpVector> complement;
    for (std::size_t i = 0; i < size; ++i) {
        FpVector e(size, p);
        e.set(i, 1);
        complement.push_back(std::move(e));
    }

    std::vector<FpVector> hyperbolic_columns;
    while (!complement.empty()) {
        const FpVector u = complement.front();
        std::size_t partner = complement.size();
        for (std::size_t i = 1; i < complement.size(); ++i) {
            if (!pairing(u, complement[i]).is_zero()) {
                partner = i;
                break;
            }
        }
        if (partner == complement.size()) {
            throw std::logic_error("restricted form became degenerate");
        }
        // Scale so the pair matches the skew block: u^T A v = -1.
        const FpVector v =
            complement[partner].scaled((-pairing(u, complement[partner]).inverse()));
        hyperbolic_columns.push_back(u);
        hyperbolic_columns.push_back(v);

        std::vector<FpVector> projected;
        for (std::size_t i = 1; i < complement.size(); ++i) {
            if (i == partner) continue;
            const FpVector& r = complement[i];
            // Remove the components pairing with u and v.
            const FpVector reduced =
                r - u.scaled(pairing(v, r)) + v.scaled(pairing(u, r));
            if (!reduced.is_zero()) projected.push_back(reduced);
        }
        EchelonForm ef = reduced_row_echelon(
            FpMatrix::from_row_vectors(projected, size, p));
        complement.clear();
        for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r) {
            complement.push_back(ef.matrix.row(r));
        }
    }

    const FpMatrix u_matrix = FpMatrix::from_columns(hyperbolic_columns);
    if (congruence_transform(a, u_matrix) != target) {
        throw std::logic_error("hyperbolic basis construction failed");
    }
    const FpMatrix t = mat_inverse(u_matrix);
    if (congruence_transform(target, t) != a) {
        throw std::logic_error("basis change verification failed");
    }
    return t;
}

std::pair<std::vector<PauliElement>, std::vector<PauliElement>> lift_pair_to_operators(
    const MoebiusPair& pair, const FpMatrix& basis_change) {
    const std::size_t size = pair.polarity.ambient_dim() + 1;
    if (size % 2 != 0) throw DimensionError("pair dimension is not of qudit shape");
    if (basis_change.rows() != size || basis_change.cols() != size ||
        basis_change.modulus() != pair.polarity.modulus()) {
        throw DimensionError("basis change does not match the pair");
    }
    const auto lift = [&](const Simplex& simplex) {
        std::vector<PauliElement> family;
        for (const auto& vertex : simplex.vertices()) {
            family.emplace_back(0, mat_vec_mul(basis_change, vertex.coords()));
        }
        return family;
    };
    return {lift(pair.first), lift(pair.second)};
}

namespace {

void require_family(const std::vector<PauliElement>& family) {
    if (family.empty()) throw std::invalid_argument("empty family");
    for (const auto& el : family) {
        if (el.is_central()) throw std::invalid_argument("central element in family");
        if (el.d() != family.front().d() || el.qudits() != family.front().qudits()) {
            throw DimensionError("family members from different Pauli groups");
        }
    }
}

}  // namespace

std::optional<ProjectivePoint> has_common_commuting_element(
    const std::vector<PauliElement>& family) {
    require_family(family);
    const std::uint32_t d = family.front().d();
    const std::size_t dim = 2 * family.front().qudits();
    for (const auto& candidate_point : all_projective_points(dim, d)) {
        const PauliElement candidate(0, candidate_point.coords());
        bool commutes_with_all = true;
        for (const auto& el : family) {
            if (commutator_exponent(candidate, el) != 0) {
                commutes_with_all = false;
                break;
            }
        }
        if (commutes_with_all) return candidate_point;
    }
    return std::nullopt;
}

bool is_simplex_family(const std::vector<PauliElement>& family) {
    require_family(family);
    if (has_common_commuting_element(family).has_value()) return false;
    // Leave-one-out families cover all proper subfamilies: a witness for a
    // larger family is a witness for any family it contains.
    for (std::size_t skip = 0; skip < family.size(); ++skip) {
        std::vector<PauliElement> sub;
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (i != skip) sub.push_back(family[i]);
        }
        if (sub.empty()) continue;  // the empty family always has a witness
        if (!has_common_commuting_element(sub).has_value()) return false;
    }
    return true;
}

MoebiusCommutationReport verify_moebius_commutation(const std::vector<PauliElement>& first,
                                                    const std::vector<PauliElement>& second) {
    require_family(first);
    require_family(second);
    if (first.size() != second.size()) throw DimensionError("families of different sizes");

    MoebiusCommutationReport report;
    report.no_common_commuter_first = !has_common_commuting_element(first).has_value();
    report.no_common_commuter_second = !has_common_commuting_element(second).has_value();

    const auto pairwise = [](const std::vector<PauliElement>& family) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                if (commutator_exponent(family[i], family[j]) == 0) return false;
            }
        }
        return true;
    };
    report.pairwise_noncommuting_first = pairwise(first);
    report.pairwise_noncommuting_second = pairwise(second);

    const std::size_t count = first.size();
    report.cross_exponents.assign(count, std::vector<std::uint32_t>(count, 0));
    report.cross_pattern_first = true;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            report.cross_exponents[i][j] = commutator_exponent(first[i], second[j]);
            const bool expect_commute = i != j;
            if ((report.cross_exponents[i][j] == 0) != expect_commute) {
                report.cross_pattern_first = false;
            }
        }
    }
    report.cross_pattern_second = true;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            const bool expect_commute = i != j;
            if ((commutator_exponent(second[i], first[j]) == 0) != expect_commute) {
                report.cross_pattern_second = false;
            }
        }
    }
    return report;
}

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
    if (a.size() != b.size()) throw DimensionError("Gaussian matrix product shape mismatch");
    GaussianMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            GaussianInt acc;
            for (std::size_t k = 0; k < a.size(); ++k) {
                acc = acc + a.at(i, k) * b.at(k, j);
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

GaussianMatrix kron_oracle(const PauliElement& a) {
    if (a.d() != 2) throw std::invalid_argument("the matrix oracle covers qubits only");
    if (a.qudits() > 4) throw std::invalid_argument("oracle limited to four qubits");

    const auto sigma = [](std::uint32_t x, std::uint32_t z) {
        GaussianMatrix m(2);
        if (x == 0 && z == 0) {
            m.set(0, 0, {1, 0});
            m.set(1, 1, {1, 0});
        } else if (x == 1 && z == 0) {
            m.set(0, 1, {1, 0});
            m.set(1, 0, {1, 0});
        } else if (x == 0 && z == 1) {
            m.set(0, 1, {0, -1});
            m.set(1, 0, {0, 1});
        } else {
            m.set(0, 0, {1, 0});
            m.set(1, 1, {-1, 0});
        }
        return m;
    };

    GaussianMatrix out = sigma(a.sympvec().at(0).value(), a.sympvec().at(1).value());
    for (std::size_t q = 1; q < a.qudits(); ++q) {
        const GaussianMatrix factor =
            sigma(a.sympvec().at(2 * q).value(), a.sympvec().at(2 * q + 1).value());
        GaussianMatrix next(out.size() * 2);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < out.size(); ++j)
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t c = 0; c < 2; ++c)
                        next.set(2 * i + r, 2 * j + c, out.at(i, j) * factor.at(r, c));
        out = std::move(next);
    }

    static constexpr GaussianInt kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const GaussianInt scale = kPowersOfI[a.phase() % 4];
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out.set(i, j, out.at(i, j) * scale);
    return out;
}

bool oracle_commutes(const PauliElement& a, const PauliElement& b) {
    require_same_group(a, b);
    const GaussianMatrix ma = kron_oracle(a);
    const GaussianMatrix mb = kron_oracle(b);
    return ma * mb == mb * ma;
}

std::string demo_family_table(const ThreeQubitDemo& demo) {
    std::string out;
    for (std::size_t i = 0; i < 6; ++i) {
        if (i) out += ' ';
        out += demo.first_labels[i];
    }
    out += '\n';
    for (std::size_t i = 0; i < 6; ++i) {
        if (i) out += ' ';
        out += demo.second_labels[i];
    }
    out += '\n';
    return out;
}

std::string demo_triple_table(const ThreeQubitDemo& demo) {
    std::string out;
    for (std::size_t i = 0; i < demo.triple_labels.size(); ++i) {
        out += demo.triple_labels[i];
        out += (i % 10 == 9) ? '\n' : ' ';
    }
    return out;
}

ThreeQubitDemo three_qubit_demo() {
    ThreeQubitDemo demo;
    const MoebiusPair pair = build_moebius_pair(5, 2);
    const FpMatrix t = three_qubit_basis_change();
    const auto [first_family, second_family] = lift_pair_to_operators(pair, t);

    for (std::size_t i = 0; i < 6; ++i) {
        demo.first_labels[i] = vector_to_label(first_family[i].sympvec());
        demo.second_labels[i] = vector_to_label(second_family[i].sympvec());
    }

    // Triple points, lexicographic index order.
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b)
            for (std::size_t c = b + 1; c < 6; ++c) {
                const IntersectionPoint ip = intersection_point({a, b, c}, 5, 2);
                demo.triples.push_back({a, b, c});
                demo.triple_labels.push_back(
                    vector_to_label(mat_vec_mul(t, ip.point.coords())));
            }

    const std::optional<ProjectivePoint> center = perspectivity_center(pair);
    if (!center) throw std::logic_error("characteristic-two pair lost its center");
    demo.center_label = vector_to_label(mat_vec_mul(t, center->coords()));

    // Four group elements per point of either simplex.
    demo.element_count = 0;
    std::vector<PauliElement> all_twelve = first_family;
    all_twelve.insert(all_twelve.end(), second_family.begin(), second_family.end());
    for (const auto& el : all_twelve) {
        demo.element_count += representatives(to_point(el)).size();
    }

    // Commutation of the twelve points: distinct points commute exactly when
    // they sit in a distinct family and a distinct column.
    demo.commute_matrix.assign(12, std::vector<std::uint8_t>(12, 0));
    demo.commute_pattern_ok = true;
    for (std::size_t i = 0; i < 12; ++i) {
        for (std::size_t j = 0; j < 12; ++j) {
            if (i == j) continue;
            const bool commute = commutator_exponent(all_twelve[i], all_twelve[j]) == 0;
            demo.commute_matrix[i][j] = commute ? 1 : 0;
            const bool expected = (i / 6 != j / 6) && (i % 6 != j % 6);
            if (commute != expected) demo.commute_pattern_ok = false;
        }
    }

    // Nested tetrahedra, lexicographic by index set.
    demo.nested_ok = true;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b)
            for (std::size_t c = b + 1; c < 6; ++c)
                for (std::size_t e = c + 1; e < 6; ++e) {
                    const NestedPair nested = nested_pair(pair, {a, b, c, e});
                    ThreeQubitDemo::NestedEntry entry;
                    entry.indices = {a, b, c, e};
                    std::vector<PauliElement> nested_first, nested_second;
                    for (std::size_t m = 0; m < 4; ++m) {
                        const FpVector fv =
                            mat_vec_mul(t, nested.ambient_first[m].coords());
                        const FpVector sv =
                            mat_vec_mul(t, nested.ambient_second[m].coords());
                        entry.first_labels[m] = vector_to_label(fv);
                        entry.second_labels[m] = vector_to_label(sv);
                        nested_first.emplace_back(0, fv);
                        nested_second.emplace_back(0, sv);
                    }
                    FpVector center_vector(6, 2);
                    for (std::size_t idx : entry.indices) center_vector.set(idx, 1);
                    entry.center_label = vector_to_label(mat_vec_mul(t, center_vector));

                    const MoebiusCommutationReport nested_report =
                        verify_moebius_commutation(nested_first, nested_second);
                    entry.pairwise_noncommuting = nested_report.pairwise_noncommuting_first &&
                                                  nested_report.pairwise_noncommuting_second;
                    entry.cross_pattern = nested_report.cross_pattern_first &&
                                          nested_report.cross_pattern_second;
                    if (!entry.pairwise_noncommuting || !entry.cross_pattern) {
                        demo.nested_ok = false;
                    }
                    demo.nested.push_back(std::move(entry));
                }

    demo.commutation = verify_moebius_commutation(first_family, second_family);
    demo.all_ok = demo.commute_pattern_ok && demo.nested_ok && demo.commutation.all_hold() &&
                  demo.element_count == 48;
    return demo;
}

}  // namespace moebius
