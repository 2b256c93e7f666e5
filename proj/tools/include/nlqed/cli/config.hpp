#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlqed::cli {

// Bad configuration: parse failures, unknown or missing keys, malformed
// values. Mapped to exit code 2 by the tool.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output problems (unwritable directory, failed stream). Exit code 4.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat "key = value" file with [section] headers, full-line # comments, no
// nesting. Sections and keys keep the line numbers they were declared on so
// every diagnostic can name its source line.
class ConfigFile {
 public:
  struct Entry {
    std::string value;
    int line = 0;
  };

  static ConfigFile parse_file(const std::filesystem::path& path);
  static ConfigFile parse_string(const std::string& text, const std::string& origin = "<string>");

  bool has_section(const std::string& section) const;
  bool has(const std::string& section, const std::string& key) const;

  const std::string& require_string(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;

  double require_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;

  long long require_int(const std::string& section, const std::string& key) const;
  long long get_int(const std::string& section, const std::string& key, long long fallback) const;

  // Comma-separated list of numbers.
  std::vector<double> require_double_list(const std::string& section,
                                          const std::string& key) const;

  int line_of(const std::string& section, const std::string& key) const;
  std::vector<std::string> keys(const std::string& section) const;

  const std::map<std::string, std::map<std::string, Entry>>& sections() const {
    return sections_;
  }
  const std::string& origin() const { return origin_; }

 private:
  std::map<std::string, std::map<std::string, Entry>> sections_;
  std::map<std::string, int> section_lines_;
  std::string origin_;
};

// Allowed sections and keys for one command. A key ending in '*' admits any
// key with that prefix (used for dipole_<k>_<j> entries).
struct Schema {
  std::map<std::string, std::vector<std::string>> sections;
};

// Rejects unknown sections and keys, naming the offender and its line.
void check_against_schema(const ConfigFile& config, const Schema& schema);

}  // namespace nlqed::cli
