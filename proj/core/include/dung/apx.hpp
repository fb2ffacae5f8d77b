#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dung/framework.hpp"

namespace dung {

/// Parses fact-based instance text: `arg(x).` plus `defeat(x,y).` or `att(x,y).`
///
/// Whitespace is free-form and `%` starts a comment running to end of line.
/// Arguments get ids in order of their first `arg` fact; duplicate attack
/// facts collapse. Throws ParseError (with a 1-based line number) on malformed
/// tokens, duplicate `arg` facts, and attacks on undeclared arguments.
Framework parse_apx(std::string_view text);

/// Reads and parses a file; I/O failures surface as ParseError at line 0.
Framework read_apx_file(const std::filesystem::path& path);

/// `arg` facts in id order, then `defeat` facts in (attacker, target) id order,
/// one fact per line.
std::string serialize_apx(const Framework& af);

}  // namespace dung
