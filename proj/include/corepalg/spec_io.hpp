#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "corepalg/corep.hpp"
#include "corepalg/groups.hpp"

namespace corepalg {

using Json = nlohmann::ordered_json;

/// Invalid input file. `line` is 1-based, or 0 when no line could be attributed.
class SpecError : public std::runtime_error {
public:
    SpecError(std::string source, int line, const std::string& message);

    const std::string& source() const noexcept { return source_; }
    int line() const noexcept { return line_; }

private:
    std::string source_;
    int line_;
};

/// Requested coirrep type of an extension spec.
enum class TypeRequest { A, B, Auto };

std::string_view to_string(TypeRequest request);
TypeRequest parse_type_request(std::string_view text);

/// Parsed extension-spec file:
///   {"group": "<catalog name>" | {"name", "d", "n", "generators"},
///    "a0": {"kind": "K" | "Theta", "N": matrix?, "signature": +-1?, "action": matrix?},
///    "type": "a" | "b" | "auto"}
/// Matrices are arrays of rows; each entry is [re, im] or a plain real number.
struct ExtensionSpec {
    std::string source;
    /// Raw file text, kept for line-anchored diagnostics raised after parsing.
    std::string text;
    Json echo;
    GroupPresentation group;
    AntilinearKind kind = AntilinearKind::K;
    std::optional<CMatrix> N;
    std::optional<int> signature;
    std::optional<CMatrix> action;
    TypeRequest type = TypeRequest::Auto;
};

ExtensionSpec parse_extension_spec(std::string_view text, std::string_view source = "<spec>");

/// Reads and parses a spec file; I/O failures are reported as SpecError.
ExtensionSpec load_extension_spec(const std::string& path);

/// Group spec object {"name", "d", "n", "generators"} or a catalog name string.
GroupPresentation parse_group(const Json& node);

CMatrix parse_matrix(const Json& node, const std::string& where);

/// Matrix as rows of [re, im] pairs.
Json matrix_to_json(const CMatrix& m);

/// Line (1-based) of the first occurrence of the quoted key in `text`, or 0.
int line_of_key(std::string_view text, std::string_view key);

}  // namespace corepalg
