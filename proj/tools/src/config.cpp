#include "nlqed/cli/config.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nlqed::cli {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0;
  size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
  throw config_error(origin + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const ConfigFile& c, const std::string& section, const std::string& key) {
  const std::string& raw = c.require_string(section, key);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(raw.c_str(), &end);
  if (end == raw.c_str() || *end != '\0' || errno == ERANGE) {
    throw config_error(c.origin() + ":" + std::to_string(c.line_of(section, key)) +
                       ": key '" + key + "' in [" + section + "] is not a number: '" + raw + "'");
  }
  return v;
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error("cannot open config file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path.string());
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
  ConfigFile out;
  out.origin_ = origin;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        fail(origin, line_no, "malformed section header '" + line + "'");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) fail(origin, line_no, "empty section name");
      if (out.sections_.count(section)) {
        fail(origin, line_no, "duplicate section [" + section + "]");
      }
      out.sections_[section] = {};
      out.section_lines_[section] = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(origin, line_no, "expected 'key = value' or '[section]', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(origin, line_no, "empty key");
    if (section.empty()) fail(origin, line_no, "key '" + key + "' appears before any [section]");
    auto& sec = out.sections_[section];
    if (sec.count(key)) fail(origin, line_no, "duplicate key '" + key + "' in [" + section + "]");
    sec[key] = Entry{value, line_no};
  }
  return out;
}

bool ConfigFile::has_section(const std::string& section) const {
  return sections_.count(section) != 0;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
  const auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) != 0;
}

const std::string& ConfigFile::require_string(const std::string& section,
                                              const std::string& key) const {
  const auto sec = sections_.find(section);
  if (sec == sections_.end()) {
    throw config_error(origin_ + ": missing required section [" + section + "]");
  }
  const auto it = sec->second.find(key);
  if (it == sec->second.end()) {
    throw config_error(origin_ + ": missing required key '" + key + "' in [" + section + "]");
  }
  return it->second.value;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
  return has(section, key) ? require_string(section, key) : fallback;
}

double ConfigFile::require_double(const std::string& section, const std::string& key) const {
  return parse_double(*this, section, key);
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
  return has(section, key) ? require_double(section, key) : fallback;
}

long long ConfigFile::require_int(const std::string& section, const std::string& key) const {
  const double v = require_double(section, key);
  const auto i = static_cast<long long>(v);
  if (static_cast<double>(i) != v) {
    throw config_error(origin_ + ":" + std::to_string(line_of(section, key)) + ": key '" + key +
                       "' in [" + section + "] must be an integer");
  }
  return i;
}

long long ConfigFile::get_int(const std::string& section, const std::string& key,
                              long long fallback) const {
  return has(section, key) ? require_int(section, key) : fallback;
}

std::vector<double> ConfigFile::require_double_list(const std::string& section,
                                                    const std::string& key) const {
  const std::string& raw = require_string(section, key);
  std::vector<double> out;
  std::string item;
  std::istringstream in(raw);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0' || errno == ERANGE) {
      throw config_error(origin_ + ":" + std::to_string(line_of(section, key)) + ": key '" + key +
                         "' in [" + section + "] has a malformed list entry: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw config_error(origin_ + ": key '" + key + "' in [" + section + "] is an empty list");
  }
  return out;
}

int ConfigFile::line_of(const std::string& section, const std::string& key) const {
  const auto sec = sections_.find(section);
  if (sec == sections_.end()) return 0;
  const auto it = sec->second.find(key);
  return it == sec->second.end() ? 0 : it->second.line;
}

std::vector<std::string> ConfigFile::keys(const std::string& section) const {
  std::vector<std::string> out;
  const auto sec = sections_.find(section);
  if (sec == sections_.end()) return out;
  out.reserve(sec->second.size());
  for (const auto& [k, v] : sec->second) out.push_back(k);
  return out;
}

void check_against_schema(const ConfigFile& config, const Schema& schema) {
  for (const auto& [section, entries] : config.sections()) {
    const auto allowed = schema.sections.find(section);
    if (allowed == schema.sections.end()) {
      throw config_error(config.origin() + ": unknown section [" + section + "]");
    }
    for (const auto& [key, entry] : entries) {
      bool ok = false;
      for (const auto& pattern : allowed->second) {
        if (!pattern.empty() && pattern.back() == '*') {
          if (key.rfind(pattern.substr(0, pattern.size() - 1), 0) == 0) {
            ok = true;
            break;
          }
        } else if (pattern == key) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        throw config_error(config.origin() + ":" + std::to_string(entry.line) +
                           ": unknown key '" + key + "' in [" + section + "]");
      }
    }
  }
}

}  // namespace nlqed::cli
