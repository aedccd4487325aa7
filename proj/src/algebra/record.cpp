#include "pairid/record.hpp"

#include <fstream>
#include <sstream>

#include "pairid/error.hpp"

namespace pairid {

void Record::set(const std::string& key, const std::string& value) {
  if (key.empty() || key.find_first_of(" \t\n") != std::string::npos) {
    fail(Errc::BadRecord, "record key '" + key + "' is empty or contains whitespace");
  }
  if (value.find('\n') != std::string::npos) fail(Errc::BadRecord, "record value for '" + key + "' spans lines");
  for (auto& [k, v] : lines_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  lines_.emplace_back(key, value);
}

void Record::merge(const Record& other, const std::string& prefix) {
  for (const auto& [k, v] : other.lines_) set(prefix + k, v);
}

bool Record::has(const std::string& key) const { return find(key).has_value(); }

std::optional<std::string> Record::find(const std::string& key) const {
  for (const auto& [k, v] : lines_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const std::string& Record::get(const std::string& key) const {
  for (const auto& [k, v] : lines_) {
    if (k == key) return v;
  }
  fail(Errc::BadRecord, "record is missing '" + key + "'");
}

std::uint64_t Record::get_u64(const std::string& key) const {
  const std::string& v = get(key);
  try {
    std::size_t used = 0;
    const std::uint64_t n = std::stoull(v, &used);
    if (used == v.size() && v[0] != '-') return n;
  } catch (const std::logic_error&) {
  }
  fail(Errc::BadRecord, "record field '" + key + "' is not an unsigned integer");
}

Record Record::subrecord(const std::string& prefix) const {
  Record out;
  for (const auto& [k, v] : lines_) {
    if (k.size() > prefix.size() && k.compare(0, prefix.size(), prefix) == 0) out.lines_.emplace_back(k.substr(prefix.size()), v);
  }
  return out;
}

std::map<std::string, std::string> Record::to_map() const { return {lines_.begin(), lines_.end()}; }

std::string Record::str() const {
  std::string out;
  for (const auto& [k, v] : lines_) out += k + " " + v + "\n";
  return out;
}

Record Record::parse(const std::string& text) {
  Record r;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto sp = line.find(' ');
    if (sp == std::string::npos || sp == 0) fail(Errc::BadRecord, "record line without a value: '" + line + "'");
    r.set(line.substr(0, sp), line.substr(sp + 1));
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadRecord, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::BadRecord, "cannot write " + path);
  out << text;
  if (!out) fail(Errc::BadRecord, "write to " + path + " failed");
}

}  // namespace pairid
