#include "corpusforge/config.h"

#include <sstream>

namespace corpusforge {

Config Config::load(const std::string& path) {
    return parse(read_file(path), path);
}

Config Config::parse(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::string section;
    size_t lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(line);
        // Trailing comments; '#' inside a value is not supported.
        size_t hash = body.find('#');
        if (hash != std::string::npos) body = trim(body.substr(0, hash));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']' || body.size() < 3)
                throw DataError(origin + ":" + std::to_string(lineno) +
                                ": malformed section header '" + body + "'");
            section = trim(body.substr(1, body.size() - 2));
            continue;
        }
        size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw DataError(origin + ":" + std::to_string(lineno) +
                            ": expected key = value, got '" + body + "'");
        std::string key = trim(body.substr(0, eq));
        std::string value = trim(body.substr(eq + 1));
        if (section.empty() || key.empty())
            throw DataError(origin + ":" + std::to_string(lineno) +
                            ": key outside a section or empty key");
        cfg.values_[section + "." + key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
    return values_.count(section + "." + key) > 0;
}

std::string Config::get(const std::string& section, const std::string& key) const {
    auto it = values_.find(section + "." + key);
    if (it == values_.end())
        throw DataError(origin_ + ": missing required config entry " + section + "." + key);
    return it->second;
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
    auto it = values_.find(section + "." + key);
    return it != values_.end() ? it->second : fallback;
}

double Config::get_double_or(const std::string& section, const std::string& key,
                             double fallback) const {
    auto it = values_.find(section + "." + key);
    if (it == values_.end()) return fallback;
    try {
        size_t used = 0;
        double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw DataError(origin_ + ": config entry " + section + "." + key +
                        " is not a number: '" + it->second + "'");
    }
}

long Config::get_long_or(const std::string& section, const std::string& key,
                         long fallback) const {
    auto it = values_.find(section + "." + key);
    if (it == values_.end()) return fallback;
    try {
        size_t used = 0;
        long v = std::stol(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw DataError(origin_ + ": config entry " + section + "." + key +
                        " is not an integer: '" + it->second + "'");
    }
}

bool Config::get_bool_or(const std::string& section, const std::string& key,
                         bool fallback) const {
    auto it = values_.find(section + "." + key);
    if (it == values_.end()) return fallback;
    std::string v = lower(it->second);
    if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
    if (v == "false" || v == "no" || v == "0" || v == "off") return false;
    throw DataError(origin_ + ": config entry " + section + "." + key +
                    " is not a boolean: '" + it->second + "'");
}

}  // namespace corpusforge
