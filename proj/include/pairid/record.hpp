#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pairid {

/// Line-oriented text record: one "key value" pair per line, keys free of
/// whitespace, values running to end of line. Blank lines and lines starting
/// with '#' are ignored on parse. Order is preserved.
class Record {
 public:
  void set(const std::string& key, const std::string& value);
  /// Adds every line of `other` with `prefix` prepended to its key.
  void merge(const Record& other, const std::string& prefix = "");

  bool has(const std::string& key) const;
  /// Throws BadRecord when the key is missing.
  const std::string& get(const std::string& key) const;
  std::optional<std::string> find(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  /// Lines whose key starts with `prefix`, with the prefix stripped.
  Record subrecord(const std::string& prefix) const;
  std::map<std::string, std::string> to_map() const;
  const std::vector<std::pair<std::string, std::string>>& lines() const { return lines_; }

  std::string str() const;
  /// Throws BadRecord on a line without a key/value separator.
  static Record parse(const std::string& text);

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace pairid
