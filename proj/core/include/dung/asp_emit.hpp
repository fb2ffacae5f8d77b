#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "dung/framework.hpp"
#include "dung/semantics.hpp"

namespace dung {

enum class EncodingId {
  kCf,
  kAdm,
  kStgSaturation,
  kPrfMetasp,
  kSemMetasp,
  kStgMetasp,
  kRgroundMetasp,
  kRgroundMetaspPrime,
  kGrdStarHandcraft,
};

inline constexpr std::array<EncodingId, 9> kAllEncodings = {
    EncodingId::kCf,           EncodingId::kAdm,           EncodingId::kStgSaturation,
    EncodingId::kPrfMetasp,    EncodingId::kSemMetasp,     EncodingId::kStgMetasp,
    EncodingId::kRgroundMetasp, EncodingId::kRgroundMetaspPrime, EncodingId::kGrdStarHandcraft};

std::string_view to_string(EncodingId id) noexcept;
std::optional<EncodingId> parse_encoding(std::string_view tag) noexcept;

/// True for the subset-minimization (metasp) encodings.
bool is_optimization(EncodingId id) noexcept;

/// The semantics whose extensions the encoding's in/1 projection yields.
Semantics realized_semantics(EncodingId id) noexcept;

/// Input database: `arg/1` and `defeat/2` facts, same bytes as serialize_apx().
std::string emit_instance(const Framework& af);

/// Program text in gringo syntax. Optimization encodings include the
/// `optimize(1,1,incl).` fact and their `#minimize` statement.
std::string emit_encoding(EncodingId id);

struct AspJob {
  std::string instance_text;
  std::string program_text;
  bool is_optimization = false;
  Semantics semantics = Semantics::kCf;

  /// Instance followed by program.
  std::string text() const { return instance_text + program_text; }
};

AspJob emit_job(const Framework& af, EncodingId id);

}  // namespace dung
