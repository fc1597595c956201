#include <doctest.h>

#include <random>

#include "moebius/pauli.hpp"

using namespace moebius;

namespace {

PauliElement from_label(const std::string& label, std::uint32_t phase = 0) {
    return PauliElement(phase, label_to_vector(label));
}

std::vector<PauliElement> family_from_labels(const std::vector<std::string>& labels) {
    std::vector<PauliElement> out;
    for (const auto& l : labels) out.push_back(from_label(l));
    return out;
}

PauliElement random_element(std::mt19937& rng, std::size_t n_qudits, std::uint32_t d) {
    std::uniform_int_distribution<std::uint32_t> dist(0, d - 1);
    FpVector v(2 * n_qudits, d);
    for (std::size_t i = 0; i < v.size(); ++i) v.set(i, dist(rng));
    return PauliElement(rng() % phase_modulus(d), std::move(v));
}

}  // namespace

TEST_CASE("product: identity, single-qubit phases, involution") {
    const PauliElement id(0, FpVector(6, 2));
    const PauliElement b = from_label("zx0");
    CHECK(multiply(id, b) == b);

    const PauliElement xy = multiply(from_label("x"), from_label("y"));
    CHECK(xy.phase() == 1);  // i * sigma_z
    CHECK(xy.sympvec() == FpVector::from_values({1, 1}, 2));

    const PauliElement xx = multiply(from_label("x"), from_label("x"));
    CHECK(xx.phase() == 0);
    CHECK(xx.is_central());
}

TEST_CASE("commutation exponent is the symplectic form") {
    CHECK(commutator_exponent(from_label("x00"), from_label("y00")) == 1);
    CHECK(commutator_exponent(from_label("x00"), from_label("xzz")) == 0);
    CHECK(oracle_commutes(from_label("x00"), from_label("xzz")));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const PauliElement a = random_element(rng, 2, 3);
        CHECK(commutator_exponent(a, a) == 0);
    }

    // matches the block-diagonal matrix route
    const FpMatrix s = symplectic_form_matrix(3, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const PauliElement a = random_element(rng, 3, 2);
        const PauliElement b = random_element(rng, 3, 2);
        const Fp via_matrix = a.sympvec().dot(mat_vec_mul(s, b.sympvec()));
        CHECK(commutator_exponent(a, b) == via_matrix.value());
    }
}

TEST_CASE("commutation form is alternating and bilinear") {
    std::mt19937 rng(13);
    for (std::uint32_t d : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            const PauliElement a = random_element(rng, 2, d);
            const PauliElement b = random_element(rng, 2, d);
            const PauliElement c = random_element(rng, 2, d);
            const std::uint32_t ab = commutator_exponent(a, b);
            const std::uint32_t ba = commutator_exponent(b, a);
            CHECK((ab + ba) % d == 0);
            const PauliElement ac(0, a.sympvec() + c.sympvec());
            CHECK(commutator_exponent(ac, b) ==
                  (commutator_exponent(a, b) + commutator_exponent(c, b)) % d);
        }
    }
}

TEST_CASE("product phases and the commutation exponent agree") {
    std::mt19937 rng(17);
    for (std::uint32_t d : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 60; ++trial) {
            const PauliElement a = random_element(rng, 2, d);
            const PauliElement b = random_element(rng, 2, d);
            const PauliElement ab = multiply(a, b);
            const PauliElement ba = multiply(b, a);
            CHECK(ab.sympvec() == ba.sympvec());
            const std::uint32_t mod = phase_modulus(d);
            const std::uint32_t diff = (ab.phase() + mod - ba.phase()) % mod;
            if (d == 2) {
                CHECK(diff == 2 * commutator_exponent(a, b) % 4);
            } else {
                CHECK(diff == commutator_exponent(a, b));
            }
        }
    }
}

TEST_CASE("symplectic form matrices") {
    CHECK(symplectic_form_matrix(1, 2) == FpMatrix::from_rows({{0, 1}, {1, 0}}, 2));
    const FpMatrix s32 = symplectic_form_matrix(3, 2);
    CHECK(s32.rows() == 6);
    const FpMatrix s23 = symplectic_form_matrix(2, 3);
    CHECK(s23 == FpMatrix::from_rows(
                     {{0, 2, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 0}}, 3));
}

TEST_CASE("labels and symplectic vectors are inverse maps") {
    CHECK(label_to_vector("x00") == FpVector::from_values({1, 0, 0, 0, 0, 0}, 2));
    CHECK(label_to_vector("zzz") == FpVector::from_values({1, 1, 1, 1, 1, 1}, 2));
    for (std::uint32_t code = 0; code < 64; ++code) {
        std::string label;
        for (std::size_t q = 0; q < 3; ++q) {
            label += "0xyz"[(code >> (2 * q)) & 3];
        }
        CHECK(vector_to_label(label_to_vector(label)) == label);
    }
    CHECK_THROWS_AS(label_to_vector("xqz"), std::invalid_argument);
    CHECK_THROWS_AS(vector_to_label(FpVector::from_values({1, 0, 1}, 2)), DimensionError);
}

TEST_CASE("points and representatives") {
    const PauliElement a = from_label("zx0", 3);
    const ProjectivePoint point = to_point(a);
    const auto reps = representatives(point);
    CHECK(reps.size() == 4);
    for (const auto& rep : reps) CHECK(to_point(rep) == point);

    CHECK_THROWS_AS(to_point(PauliElement(1, FpVector(6, 2))), std::invalid_argument);

    // odd d: (d-1) scalar classes times d phases
    FpVector v(4, 3);
    v.set(0, 1);
    CHECK(representatives(ProjectivePoint(v)).size() == 6);
}

TEST_CASE("basis changes onto the construction form") {
    // the fixed three-qubit matrix
    const FpMatrix t6 = three_qubit_basis_change();
    CHECK(congruence_transform(symplectic_form_matrix(3, 2), t6) ==
          standard_null_polarity(5, 2).form());

    // searched basis changes for other shapes
    for (auto [n, p] : std::vector<std::pair<std::size_t, std::uint32_t>>{
             {1, 2}, {3, 2}, {3, 3}, {5, 2}, {5, 3}, {3, 5}, {7, 2}}) {
        const FpMatrix t = find_basis_change(n, p);
        CHECK(congruence_transform(symplectic_form_matrix((n + 1) / 2, p), t) ==
              standard_null_polarity(n, p).form());
    }
}

TEST_CASE("lifted families carry the published labels") {
    const MoebiusPair pair = build_moebius_pair(5, 2);
    const auto [first_family, second_family] =
        lift_pair_to_operators(pair, three_qubit_basis_change());

    const std::vector<std::string> expected_first = {"x00", "y00", "zx0",
                                                     "zy0", "zzx", "zzy"};
    const std::vector<std::string> expected_second = {"yzz", "xzz", "0yz",
                                                      "0xz", "00y", "00x"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(vector_to_label(first_family[i].sympvec()) == expected_first[i]);
        CHECK(vector_to_label(second_family[i].sympvec()) == expected_second[i]);
        CHECK(first_family[i].phase() == 0);
        // the two rows differ by the center column by column
        CHECK(vector_to_label(first_family[i].sympvec() + label_to_vector("zzz")) ==
              expected_second[i]);
    }
}

TEST_CASE("common-commuter search over the whole space") {
    const auto [first_family, second_family] =
        lift_pair_to_operators(build_moebius_pair(5, 2), three_qubit_basis_change());

    CHECK_FALSE(has_common_commuting_element(first_family).has_value());
    for (std::size_t skip = 0; skip < 6; ++skip) {
        std::vector<PauliElement> sub;
        for (std::size_t i = 0; i < 6; ++i)
            if (i != skip) sub.push_back(first_family[i]);
        CHECK(has_common_commuting_element(sub).has_value());
    }
    const std::vector<PauliElement> single = {from_label("zx0")};
    const auto witness = has_common_commuting_element(single);
    REQUIRE(witness.has_value());
    CHECK(commutator_exponent(PauliElement(0, witness->coords()), single[0]) == 0);

    CHECK_THROWS_AS(has_common_commuting_element({PauliElement(0, FpVector(6, 2))}),
                    std::invalid_argument);
}

TEST_CASE("simplex families") {
    const auto [first_family, second_family] =
        lift_pair_to_operators(build_moebius_pair(5, 2), three_qubit_basis_change());
    CHECK(is_simplex_family(first_family));
    CHECK(is_simplex_family(second_family));

    std::vector<PauliElement> repeated = first_family;
    repeated[3] = repeated[2];
    CHECK_FALSE(is_simplex_family(repeated));

    CHECK(is_simplex_family(
        family_from_labels({"x00", "y00", "0x0", "0y0", "00x", "00y"})));
}

TEST_CASE("simplex families match the geometric test on random samples") {
    std::mt19937 rng(29);
    for (auto [n_qudits, d] :
         std::vector<std::pair<std::size_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 3}}) {
        const std::size_t dim = 2 * n_qudits;
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t size = 1 + rng() % (dim + 1);
            std::vector<PauliElement> family;
            std::vector<FpVector> rows;
            for (std::size_t i = 0; i < size; ++i) {
                PauliElement el = random_element(rng, n_qudits, d);
                while (el.is_central()) el = random_element(rng, n_qudits, d);
                rows.push_back(el.sympvec());
                family.push_back(std::move(el));
            }
            const bool geometric =
                size == dim &&
                mat_rank(FpMatrix::from_row_vectors(rows, dim, d)) == dim;
            CHECK(is_simplex_family(family) == geometric);
        }
    }
}

TEST_CASE("commutation pattern of the published families") {
    const auto [first_family, second_family] =
        lift_pair_to_operators(build_moebius_pair(5, 2), three_qubit_basis_change());
    const MoebiusCommutationReport report =
        verify_moebius_commutation(first_family, second_family);
    CHECK(report.all_hold());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK((report.cross_exponents[i][j] == 0) == (i != j));

    // a family against itself commutes on the diagonal, so the cross pattern
    // must fail
    const MoebiusCommutationReport degenerate =
        verify_moebius_commutation(first_family, first_family);
    CHECK_FALSE(degenerate.cross_pattern_first);
}

TEST_CASE("matrix oracle fixes the conventions") {
    const GaussianMatrix y = kron_oracle(from_label("y"));
    CHECK(y.at(0, 0) == GaussianInt{0, 0});
    CHECK(y.at(0, 1) == GaussianInt{0, -1});
    CHECK(y.at(1, 0) == GaussianInt{0, 1});
    CHECK(y.at(1, 1) == GaussianInt{0, 0});

    // single-qubit products against the oracle, all label pairs and phases
    for (char a : {'0', 'x', 'y', 'z'}) {
        for (char b : {'0', 'x', 'y', 'z'}) {
            for (std::uint32_t phase = 0; phase < 4; ++phase) {
                const PauliElement ea = from_label(std::string(1, a), phase);
                const PauliElement eb = from_label(std::string(1, b));
                CHECK(kron_oracle(multiply(ea, eb)) == kron_oracle(ea) * kron_oracle(eb));
            }
        }
    }

    CHECK_THROWS_AS(kron_oracle(PauliElement(0, FpVector(4, 3))), std::invalid_argument);
}

TEST_CASE("product is associative and oracle-exact on two qubits") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const PauliElement a = random_element(rng, 2, 2);
        const PauliElement b = random_element(rng, 2, 2);
        const PauliElement c = random_element(rng, 2, 2);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(kron_oracle(multiply(a, b)) == kron_oracle(a) * kron_oracle(b));
    }
    for (int trial = 0; trial < 20; ++trial) {
        const PauliElement a = random_element(rng, 3, 2);
        const PauliElement b = random_element(rng, 3, 2);
        CHECK(kron_oracle(multiply(a, b)) == kron_oracle(a) * kron_oracle(b));
        CHECK(oracle_commutes(a, b) == (commutator_exponent(a, b) == 0));
    }
    // odd-d associativity
    for (int trial = 0; trial < 40; ++trial) {
        const PauliElement a = random_element(rng, 2, 3);
        const PauliElement b = random_element(rng, 2, 3);
        const PauliElement c = random_element(rng, 2, 3);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("three-qubit walkthrough") {
    const ThreeQubitDemo demo = three_qubit_demo();
    CHECK(demo.all_ok);
    CHECK(demo.center_label == "zzz");
    CHECK(demo.element_count == 48);
    CHECK(demo.commute_pattern_ok);
    CHECK(demo.nested_ok);
    CHECK(demo.nested.size() == 15);
    CHECK(demo.triples.size() == 20);
    CHECK(demo.commutation.all_hold());

    // triple points add up inside the label arithmetic: the first one is the
    // sum of the first three vertices
    const FpVector sum = label_to_vector(demo.first_labels[0]) +
                         label_to_vector(demo.first_labels[1]) +
                         label_to_vector(demo.first_labels[2]);
    CHECK(vector_to_label(sum) == demo.triple_labels[0]);
    CHECK(demo.triple_labels[0] == "0x0");

    // nested centers are the weight-four vectors on their index sets
    for (const auto& entry : demo.nested) {
        FpVector v(6, 2);
        for (std::size_t idx : entry.indices) v.set(idx, 1);
        CHECK(vector_to_label(mat_vec_mul(three_qubit_basis_change(), v)) ==
              entry.center_label);
        CHECK(entry.pairwise_noncommuting);
        CHECK(entry.cross_pattern);
    }
}
