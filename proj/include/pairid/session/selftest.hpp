#pragma once

#include <string>
#include <vector>

namespace pairid::session {

struct SelftestItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Exhaustive checks at small p: framing, DDH over Z_11^3, pairing order,
/// cross-backend decisions at p = 5 and 7, heavy rows up to 4x4, DDH from a
/// perfect inverter, OWFID witness counts at p = 13, loopback sessions.
std::vector<SelftestItem> run_selftest();

}  // namespace pairid::session
