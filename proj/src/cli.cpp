#include "moebius/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "moebius/pair.hpp"
#include "moebius/pauli.hpp"

namespace moebius::cli {

namespace {

nlohmann::json matrix_json(const FpMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).value());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json vector_json(const FpVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v.at(i).value());
    return out;
}

nlohmann::json points_json(const std::vector<ProjectivePoint>& points) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& pt : points) out.push_back(vector_json(pt.coords()));
    return out;
}

template <typename Cell>
nlohmann::json grid_json(const std::vector<std::vector<Cell>>& grid) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : grid) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto cell : row) r.push_back(static_cast<std::uint64_t>(cell));
        out.push_back(std::move(r));
    }
    return out;
}

nlohmann::json commutation_json(const MoebiusCommutationReport& report) {
    return {
        {"all_hold", report.all_hold()},
        {"cross_exponents", grid_json(report.cross_exponents)},
        {"cross_pattern_first", report.cross_pattern_first},
        {"cross_pattern_second", report.cross_pattern_second},
        {"no_common_commuter_first", report.no_common_commuter_first},
        {"no_common_commuter_second", report.no_common_commuter_second},
        {"pairwise_noncommuting_first", report.pairwise_noncommuting_first},
        {"pairwise_noncommuting_second", report.pairwise_noncommuting_second},
    };
}

CommandResult bad_params(const std::string& message) {
    return CommandResult{kExitBadParams, nlohmann::json(), message};
}

bool check_pair_params(long long n, long long p, std::string& message) {
    if (n < 0 || n % 2 == 0) {
        message = "n must be odd";
        return false;
    }
    if (n < 3) {
        message = "n must be at least 3";
        return false;
    }
    if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) {
        message = "p must be prime";
        return false;
    }
    return true;
}

nlohmann::json pair_payload(const MoebiusPair& pair) {
    const IncidenceReport report = verify_moebius_pair(pair);
    const std::optional<ProjectivePoint> center = perspectivity_center(pair);
    nlohmann::json payload{
        {"a_matrix", matrix_json(pair.polarity.form())},
        {"first_simplex", points_json(pair.first.vertices())},
        {"second_simplex", points_json(pair.second.vertices())},
        {"incidence_first_on_second", grid_json(report.first_on_second)},
        {"incidence_second_on_first", grid_json(report.second_on_first)},
        {"dual_basis_check", dual_basis_check(pair)},
        {"valid", report.valid},
    };
    payload["center"] = center ? vector_json(center->coords()) : nlohmann::json();
    return payload;
}

}  // namespace

nlohmann::json make_document(const std::string& command, nlohmann::json parameters,
                             nlohmann::json payload) {
    return {
        {"schema_version", "1"},
        {"command", command},
        {"parameters", std::move(parameters)},
        {"payload", std::move(payload)},
    };
}

CommandResult cmd_pair(long long n, long long p) {
    std::string message;
    if (!check_pair_params(n, p, message)) return bad_params(message);
    if (p > 7) return bad_params("p must be at most 7");

    const MoebiusPair pair =
        build_moebius_pair(static_cast<std::size_t>(n), static_cast<std::uint32_t>(p));
    nlohmann::json payload = pair_payload(pair);
    const bool valid = payload["valid"].get<bool>();
    CommandResult result;
    result.exit_code = valid ? kExitOk : kExitInvalid;
    result.document = make_document("pair", {{"n", n}, {"p", p}}, std::move(payload));
    return result;
}

CommandResult cmd_verify(const nlohmann::json& pair_document) {
    long long n = 0, p = 0;
    nlohmann::json first_rows, second_rows, form_rows;
    try {
        n = pair_document.at("parameters").at("n").get<long long>();
        p = pair_document.at("parameters").at("p").get<long long>();
        const nlohmann::json& payload = pair_document.at("payload");
        first_rows = payload.at("first_simplex");
        second_rows = payload.at("second_simplex");
        form_rows = payload.at("a_matrix");
    } catch (const nlohmann::json::exception& e) {
        return CommandResult{kExitMalformed, nlohmann::json(),
                             std::string("not a pair document: ") + e.what()};
    }

    CommandResult result;
    try {
        if (n < 1 || p < 2) throw std::invalid_argument("parameters out of range");
        const std::uint32_t modulus = static_cast<std::uint32_t>(p);
        const std::size_t count = static_cast<std::size_t>(n) + 1;

        const auto parse_rows = [&](const nlohmann::json& rows) {
            std::vector<std::vector<std::uint32_t>> out;
            for (const auto& row : rows) {
                std::vector<std::uint32_t> r;
                for (const auto& cell : row) r.push_back(cell.get<std::uint32_t>());
                if (r.size() != count) throw DimensionError("row length mismatch");
                out.push_back(std::move(r));
            }
            return out;
        };
        const auto parse_points = [&](const nlohmann::json& rows) {
            std::vector<ProjectivePoint> points;
            for (const auto& row : parse_rows(rows)) {
                points.emplace_back(FpVector::from_values(row, modulus));
            }
            if (points.size() != count) throw DimensionError("vertex count mismatch");
            return points;
        };

        const std::vector<ProjectivePoint> first = parse_points(first_rows);
        const std::vector<ProjectivePoint> second = parse_points(second_rows);
        const auto form_values = parse_rows(form_rows);
        if (form_values.size() != count) throw DimensionError("form size mismatch");
        const NullPolarity polarity(FpMatrix::from_rows(form_values, modulus));

        const IncidenceReport report = verify_moebius_pair(first, second, polarity);
        bool dual_basis = false;
        if (report.first_is_simplex && report.second_is_simplex) {
            dual_basis = dual_basis_check(
                MoebiusPair{Simplex(first), Simplex(second), polarity});
        }

        nlohmann::json payload{
            {"dual_basis_check", dual_basis},
            {"failures", report.failures},
            {"first_is_simplex", report.first_is_simplex},
            {"second_is_simplex", report.second_is_simplex},
            {"incidence_first_on_second", grid_json(report.first_on_second)},
            {"incidence_second_on_first", grid_json(report.second_on_first)},
            {"valid", report.valid && dual_basis},
        };
        result.exit_code = (report.valid && dual_basis) ? kExitOk : kExitInvalid;
        if (result.exit_code != kExitOk) result.error = "pair is not a valid Moebius pair";
        result.document = make_document("verify", {{"n", n}, {"p", p}}, std::move(payload));
        return result;
    } catch (const nlohmann::json::exception& e) {
        return CommandResult{kExitMalformed, nlohmann::json(),
                             std::string("not a pair document: ") + e.what()};
    } catch (const std::exception& e) {
        // Structurally parseable but mathematically unusable coordinates.
        return CommandResult{kExitInvalid, nlohmann::json(),
                             std::string("invalid pair data: ") + e.what()};
    }
}

CommandResult cmd_verify_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        return CommandResult{kExitMalformed, nlohmann::json(), "cannot open " + path};
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        return CommandResult{kExitMalformed, nlohmann::json(),
                             std::string("cannot parse ") + path + ": " + e.what()};
    }
    CommandResult result = cmd_verify(doc);
    if (!result.document.is_null()) result.document["parameters"]["input"] = path;
    return result;
}

CommandResult cmd_nested(long long n, long long p, const std::vector<long long>& indices) {
    std::string message;
    if (!check_pair_params(n, p, message)) return bad_params(message);
    if (p > 7) return bad_params("p must be at most 7");

    std::vector<std::size_t> idx;
    for (long long i : indices) {
        if (i < 0 || i > n) return bad_params("index out of range");
        idx.push_back(static_cast<std::size_t>(i));
    }

    try {
        const MoebiusPair pair =
            build_moebius_pair(static_cast<std::size_t>(n), static_cast<std::uint32_t>(p));
        const NestedPair nested = nested_pair(pair, idx);
        const IncidenceReport restricted_report = verify_moebius_pair(nested.restricted);
        const std::optional<ProjectivePoint> center =
            perspectivity_center(nested.restricted);

        nlohmann::json restricted{
            {"a_matrix", matrix_json(nested.restricted.polarity.form())},
            {"first_simplex", points_json(nested.restricted.first.vertices())},
            {"second_simplex", points_json(nested.restricted.second.vertices())},
            {"valid", restricted_report.valid},
        };
        restricted["center"] = center ? vector_json(center->coords()) : nlohmann::json();

        nlohmann::json payload{
            {"indices", idx},
            {"ambient_first", points_json(nested.ambient_first)},
            {"ambient_second", points_json(nested.ambient_second)},
            {"restricted", std::move(restricted)},
        };
        CommandResult result;
        result.exit_code = restricted_report.valid ? kExitOk : kExitInvalid;
        nlohmann::json params{{"n", n}, {"p", p}, {"indices", idx}};
        result.document = make_document("nested", std::move(params), std::move(payload));
        return result;
    } catch (const std::invalid_argument& e) {
        return bad_params(e.what());
    }
}

CommandResult cmd_classify(const std::string& bits) {
    if (bits.empty()) return bad_params("empty vector");
    if (bits.size() % 2 != 0) return bad_params("vector length must be even");
    std::vector<std::uint32_t> values;
    for (char c : bits) {
        if (c != '0' && c != '1') return bad_params("vector must consist of 0s and 1s");
        values.push_back(c - '0');
    }
    const FpVector v = FpVector::from_values(values, 2);
    if (v.is_zero()) return bad_params("the zero vector does not represent a point");

    const Gf2Classification c = classify_gf2_point(v, v.size() - 1);
    const char* kind = nullptr;
    switch (c.kind) {
        case Gf2Classification::Kind::OddWeightPoint: kind = "odd_weight_point"; break;
        case Gf2Classification::Kind::EdgePoint: kind = "edge_point"; break;
        case Gf2Classification::Kind::NestedPairCenter: kind = "nested_pair_center"; break;
    }
    nlohmann::json payload{
        {"kind", kind},
        {"weight", c.weight},
        {"support", c.support},
        {"vector", values},
    };
    CommandResult result;
    result.document = make_document("classify", {{"vector", bits}}, std::move(payload));
    return result;
}

CommandResult cmd_pauli_demo() {
    const ThreeQubitDemo demo = three_qubit_demo();

    nlohmann::json nested = nlohmann::json::array();
    for (const auto& entry : demo.nested) {
        nested.push_back({
            {"indices", entry.indices},
            {"first_labels", entry.first_labels},
            {"second_labels", entry.second_labels},
            {"center", entry.center_label},
            {"pairwise_noncommuting", entry.pairwise_noncommuting},
            {"cross_pattern", entry.cross_pattern},
        });
    }

    nlohmann::json payload{
        {"first_labels", demo.first_labels},
        {"second_labels", demo.second_labels},
        {"triples", demo.triples},
        {"triple_labels", demo.triple_labels},
        {"center", demo.center_label},
        {"element_count", demo.element_count},
        {"commute_matrix", grid_json(demo.commute_matrix)},
        {"commute_pattern_ok", demo.commute_pattern_ok},
        {"nested", std::move(nested)},
        {"nested_ok", demo.nested_ok},
        {"commutation", commutation_json(demo.commutation)},
        {"all_ok", demo.all_ok},
    };
    CommandResult result;
    result.exit_code = demo.all_ok ? kExitOk : kExitInvalid;
    result.document =
        make_document("pauli-demo", nlohmann::json::object(), std::move(payload));
    return result;
}

CommandResult cmd_check_theorem2(long long n, long long p) {
    std::string message;
    if (!check_pair_params(n, p, message)) return bad_params(message);

    // Brute-force budget: both orientations of the common-commuter search
    // probe every point of the space against every family member.
    const std::uint64_t limit = std::uint64_t{1} << 20;
    std::uint64_t vectors = 1;
    for (long long i = 0; i <= n; ++i) {
        vectors *= static_cast<std::uint64_t>(p);
        if (vectors > limit) return bad_params("brute-force budget exceeded");
    }
    if (2 * static_cast<std::uint64_t>(n + 1) * vectors > limit) {
        return bad_params("brute-force budget exceeded");
    }

    const MoebiusPair pair =
        build_moebius_pair(static_cast<std::size_t>(n), static_cast<std::uint32_t>(p));
    const FpMatrix basis_change =
        find_basis_change(static_cast<std::size_t>(n), static_cast<std::uint32_t>(p));
    const auto [first_family, second_family] = lift_pair_to_operators(pair, basis_change);
    const MoebiusCommutationReport report =
        verify_moebius_commutation(first_family, second_family);

    nlohmann::json payload{
        {"basis_change", matrix_json(basis_change)},
        {"commutation", commutation_json(report)},
        {"all_hold", report.all_hold()},
    };
    if (p == 2) {
        nlohmann::json first_labels = nlohmann::json::array();
        nlohmann::json second_labels = nlohmann::json::array();
        for (const auto& el : first_family) first_labels.push_back(vector_to_label(el.sympvec()));
        for (const auto& el : second_family)
            second_labels.push_back(vector_to_label(el.sympvec()));
        payload["first_labels"] = std::move(first_labels);
        payload["second_labels"] = std::move(second_labels);
    }
    CommandResult result;
    result.exit_code = report.all_hold() ? kExitOk : kExitInvalid;
    result.document =
        make_document("check-theorem2", {{"n", n}, {"p", p}}, std::move(payload));
    return result;
}

namespace {

void render_csv_value(const nlohmann::json& value, const std::string& path,
                      std::string& out) {
    if (value.is_object()) {
        for (auto it = value.begin(); it != value.end(); ++it) {
            render_csv_value(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
        }
    } else if (value.is_array()) {
        std::size_t i = 0;
        for (const auto& item : value) {
            render_csv_value(item, path + "." + std::to_string(i), out);
            ++i;
        }
    } else {
        out += path;
        out += ',';
        out += value.is_string() ? value.get<std::string>() : value.dump();
        out += '\n';
    }
}

void render_text_value(const nlohmann::json& value, const std::string& key, int indent,
                       std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const auto is_scalar_array = [](const nlohmann::json& arr) {
        for (const auto& item : arr) {
            if (item.is_object() || item.is_array()) return false;
        }
        return true;
    };
    if (value.is_object()) {
        if (!key.empty()) out += pad + key + ":\n";
        for (auto it = value.begin(); it != value.end(); ++it) {
            render_text_value(it.value(), it.key(), indent + (key.empty() ? 0 : 1), out);
        }
    } else if (value.is_array() && is_scalar_array(value)) {
        out += pad + key + ":";
        for (const auto& item : value) {
            out += ' ';
            out += item.is_string() ? item.get<std::string>() : item.dump();
        }
        out += '\n';
    } else if (value.is_array()) {
        out += pad + key + ":\n";
        std::size_t i = 0;
        for (const auto& item : value) {
            render_text_value(item, "[" + std::to_string(i) + "]", indent + 1, out);
            ++i;
        }
    } else {
        out += pad + key + ": ";
        out += value.is_string() ? value.get<std::string>() : value.dump();
        out += '\n';
    }
}

}  // namespace

std::string render(const nlohmann::json& document, Format format) {
    switch (format) {
        case Format::Json:
            return document.dump(2) + "\n";
        case Format::Csv: {
            std::string out = "key,value\n";
            render_csv_value(document, "", out);
            return out;
        }
        case Format::Text: {
            std::string out;
            render_text_value(document, "", 0, out);
            return out;
        }
    }
    return {};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Moebius pairs of simplices over GF(p) and their Pauli operator families"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "json";
    std::string output_path;
    app.add_option("--format", format_name, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", output_path, "Write the document to this path");

    long long n = 0, p = 0;
    std::vector<long long> indices;
    std::string input_path, vector_bits;

    CLI::App* pair_cmd = app.add_subcommand("pair", "Construct and verify a Moebius pair");
    pair_cmd->add_option("--n", n, "Projective dimension (odd, >= 3)")->required();
    pair_cmd->add_option("--p", p, "Field order (prime, <= 7)")->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Re-verify a pair document produced by `pair`");
    verify_cmd->add_option("input", input_path, "Pair document (JSON)")->required();

    CLI::App* nested_cmd =
        app.add_subcommand("nested", "Extract the nested pair on a vertex subset");
    nested_cmd->add_option("--n", n, "Projective dimension (odd, >= 3)")->required();
    nested_cmd->add_option("--p", p, "Field order (prime, <= 7)")->required();
    nested_cmd->add_option("--indices", indices, "Comma-separated vertex indices")
        ->required()
        ->delimiter(',');

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Classify a GF(2) vector relative to the construction");
    classify_cmd->add_option("--vector", vector_bits, "Bit string, e.g. 110000")->required();

    CLI::App* demo_cmd =
        app.add_subcommand("pauli-demo", "Full three-qubit operator walkthrough");

    CLI::App* theorem_cmd = app.add_subcommand(
        "check-theorem2", "Exhaustively check the operator-family commutation pattern");
    theorem_cmd->add_option("--n", n, "Projective dimension (odd, >= 3)")->required();
    theorem_cmd->add_option("--p", p, "Field order (prime)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitBadParams;
    }

    CommandResult result;
    if (pair_cmd->parsed()) {
        result = cmd_pair(n, p);
    } else if (verify_cmd->parsed()) {
        result = cmd_verify_file(input_path);
    } else if (nested_cmd->parsed()) {
        result = cmd_nested(n, p, indices);
    } else if (classify_cmd->parsed()) {
        result = cmd_classify(vector_bits);
    } else if (demo_cmd->parsed()) {
        result = cmd_pauli_demo();
    } else if (theorem_cmd->parsed()) {
        result = cmd_check_theorem2(n, p);
    }

    if (!result.error.empty()) err << result.error << "\n";
    if (!result.document.is_null()) {
        Format format = Format::Json;
        if (format_name == "csv") format = Format::Csv;
        if (format_name == "text") format = Format::Text;
        const std::string rendered = render(result.document, format);
        if (output_path.empty()) {
            out << rendered;
        } else {
            std::ofstream file(output_path, std::ios::binary);
            if (!file) {
                err << "cannot write " << output_path << "\n";
                return kExitBadParams;
            }
            file << rendered;
        }
    }
    return result.exit_code;
}

}  // namespace moebius::cli
