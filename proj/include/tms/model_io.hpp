#ifndef TMS_MODEL_IO_HPP
#define TMS_MODEL_IO_HPP

#include <span>
#include <string>
#include <string_view>

#include "tms/space.hpp"

namespace tms {

/// Parses the line-oriented model format:
///
///     points a b c          # exactly once, first
///     open {c}              # empty set and X are implied
///     sigma powerset        # or: sigma atoms {a b} {c}
///     mass {a} inf          # one per sigma-atom: p, p/q or inf
///
/// Throws ParseError with E_GRAMMAR, E_TOP, E_SIGMA or E_MASS.
Space parse_model(std::string_view text);

/// Canonical source: opens other than the empty set and X sorted by bit
/// pattern, "sigma powerset" when every atom is a singleton, masses in atom
/// order. parse_model(serialize_model(s)) == s.
std::string serialize_model(const Space& space);

/// Single-line variant ("; "-separated) for tables.
std::string serialize_model_inline(const Space& space);

/// "{a c}" using the given point names.
std::string format_set(Subset s, std::span<const std::string> names);
/// "{a c}" using default names.
std::string format_bits(Subset s);

}  // namespace tms

#endif  // TMS_MODEL_IO_HPP
