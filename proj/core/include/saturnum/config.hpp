#pragma once
// key=value configuration, loaded from the path in SATURNUM_CONFIG when set.

#include <cstdint>
#include <map>
#include <string>

namespace saturnum {

struct Config {
  std::map<std::string, std::string> values;

  static Config from_file(const std::string& path);
  static Config from_env();  // empty config when SATURNUM_CONFIG is unset

  std::string get(const std::string& key, const std::string& fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  int get_int(const std::string& key, int fallback) const;
};

}  // namespace saturnum
