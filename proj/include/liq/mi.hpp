#ifndef LIQ_MI_HPP
#define LIQ_MI_HPP

#include <cstdint>
#include <string>

#include "liq/errors.hpp"

namespace liq {

/// The three manifestation indices a response curve can target.
enum class MiKind : std::uint8_t { Lpi = 0, LpiIsh = 1, Lsn = 2 };

inline const char* to_string(MiKind kind) {
  switch (kind) {
    case MiKind::Lpi: return "lpi";
    case MiKind::LpiIsh: return "lpish";
    case MiKind::Lsn: return "lsn";
  }
  return "unknown";
}

inline MiKind mi_kind_from_string(const std::string& name) {
  if (name == "lpi" || name == "LPI") return MiKind::Lpi;
  if (name == "lpish" || name == "lpi_ish" || name == "LPI_ISH")
    return MiKind::LpiIsh;
  if (name == "lsn" || name == "LSN") return MiKind::Lsn;
  throw KindMismatch("unknown manifestation index kind: " + name);
}

struct ManifestationIndex {
  MiKind kind = MiKind::Lpi;
  double value = 0.0;
};

}  // namespace liq

#endif  // LIQ_MI_HPP
