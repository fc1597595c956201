#ifndef MOEBIUS_CLI_HPP
#define MOEBIUS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace moebius::cli {

// Exit-code contract shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;     // mathematically invalid input
inline constexpr int kExitBadParams = 2;   // violated precondition
inline constexpr int kExitMalformed = 3;   // unparseable input document

enum class Format { Json, Csv, Text };

struct CommandResult {
    int exit_code = kExitOk;
    nlohmann::json document;   // empty on parameter errors
    std::string error;         // diagnostic for nonzero exits
};

// Documents are {schema_version, command, parameters, payload} with keys in
// lexicographic order; identical inputs give byte-identical renderings.
nlohmann::json make_document(const std::string& command, nlohmann::json parameters,
                             nlohmann::json payload);

CommandResult cmd_pair(long long n, long long p);
CommandResult cmd_verify(const nlohmann::json& pair_document);
CommandResult cmd_verify_file(const std::string& path);
CommandResult cmd_nested(long long n, long long p, const std::vector<long long>& indices);
CommandResult cmd_classify(const std::string& bits);
CommandResult cmd_pauli_demo();
CommandResult cmd_check_theorem2(long long n, long long p);

std::string render(const nlohmann::json& document, Format format);

// Full argv interface (excluding argv[0]); writes the rendered document to
// `out` or to the --output path, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moebius::cli

#endif
