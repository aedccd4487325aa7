#include "pairid/report.hpp"

#include <iomanip>
#include <sstream>

namespace pairid {

std::string GameReport::to_record() const {
  std::ostringstream out;
  out << std::setprecision(6);
  out << "game " << game << "\n";
  for (const auto& [k, v] : params) out << "param." << k << " " << v << "\n";
  out << "trials " << trials << "\n";
  out << "wins " << wins << "\n";
  out << "advantage " << advantage() << "\n";
  for (const auto& [k, v] : counts) out << "count." << k << " " << v << "\n";
  if (bound) out << "bound " << bound_label << " " << *bound << "\n";
  if (pass) out << "result " << (*pass ? "pass" : "fail") << "\n";
  out << "seconds " << seconds << "\n";
  return out.str();
}

}  // namespace pairid
