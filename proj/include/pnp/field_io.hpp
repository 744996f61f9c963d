#ifndef PNP_FIELD_IO_HPP
#define PNP_FIELD_IO_HPP

#include <iosfwd>
#include <string>

#include "pnp/grid.hpp"

namespace pnp {

/// Scientific notation with 17 significant digits; the round-trip-exact
/// format used by every CSV this project writes.
std::string format_sci17(double v);

/// Snapshot format: plain-text CSV, N rows by N columns, row index = j (y),
/// column index = i (x), comma separated, trailing newline, no header.
void write_field_csv(std::ostream& os, const Field& f);
void write_field_csv(const std::string& path, const Field& f);

Field read_field_csv(std::istream& is, const GridSpec& spec);
Field read_field_csv(const std::string& path, const GridSpec& spec);

}  // namespace pnp

#endif
