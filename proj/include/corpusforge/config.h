#pragma once

#include <map>
#include <string>

#include "corpusforge/util.h"

namespace corpusforge {

// Sectioned key=value configuration:
//   [align]
//   alpha = 0.5    # comment
// Lookups are by section and key; a missing mandatory key is reported as
// "section.key" so the message points at the config line to add.
class Config {
public:
    static Config load(const std::string& path);
    static Config parse(const std::string& text, const std::string& origin);

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    long get_long_or(const std::string& section, const std::string& key, long fallback) const;
    bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const;

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;  // "section.key" -> value
    std::string origin_;
};

}  // namespace corpusforge
