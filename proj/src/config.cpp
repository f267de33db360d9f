#include "losdof/config.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "losdof/errors.hpp"

namespace losdof {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream stream(s);
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

double parse_double(const std::string& value, const std::string& where, int line) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size())
            throw config_error("trailing characters after number in " + where, line, where);
        return v;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error("cannot parse '" + value + "' as a number in " + where, line, where);
    }
}

int parse_int(const std::string& value, const std::string& where, int line) {
    try {
        size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size())
            throw config_error("trailing characters after integer in " + where, line, where);
        return v;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error("cannot parse '" + value + "' as an integer in " + where, line, where);
    }
}

} // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw config_error("cannot open scenario file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str(), path);
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& name) {
    ConfigFile cfg;
    cfg.text_ = text;
    cfg.name_ = name;

    std::istringstream stream(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error("unterminated section header", line_no);
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw config_error("empty section name", line_no);
            cfg.sections_[section];
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("expected 'key = value'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error("empty key", line_no);
        if (section.empty())
            throw config_error("entry outside any [section]", line_no, key);
        auto& sec = cfg.sections_[section];
        if (sec.count(key))
            throw config_error("duplicate key '" + key + "' in [" + section + "]", line_no, key);
        sec[key] = Entry{value, line_no};
    }
    return cfg;
}

bool ConfigFile::has_section(const std::string& section) const {
    return sections_.count(section) > 0;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    const auto sec = sections_.find(section);
    return sec != sections_.end() && sec->second.count(key) > 0;
}

const ConfigFile::Entry& ConfigFile::entry(const std::string& section,
                                           const std::string& key) const {
    const auto sec = sections_.find(section);
    if (sec == sections_.end())
        throw config_error("missing section [" + section + "]", 0, section);
    const auto it = sec->second.find(key);
    if (it == sec->second.end())
        throw config_error("missing key '" + key + "' in [" + section + "]", 0, key);
    return it->second;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key) const {
    return entry(section, key).value;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
    return has(section, key) ? entry(section, key).value : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
    const Entry& e = entry(section, key);
    return parse_double(e.value, section + "." + key, e.line);
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

int ConfigFile::get_int(const std::string& section, const std::string& key) const {
    const Entry& e = entry(section, key);
    return parse_int(e.value, section + "." + key, e.line);
}

int ConfigFile::get_int(const std::string& section, const std::string& key, int fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

bool ConfigFile::get_bool(const std::string& section, const std::string& key,
                          bool fallback) const {
    if (!has(section, key)) return fallback;
    const Entry& e = entry(section, key);
    if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no") return false;
    throw config_error("expected boolean in " + section + "." + key, e.line, key);
}

std::vector<double> ConfigFile::get_double_list(const std::string& section,
                                                const std::string& key) const {
    const Entry& e = entry(section, key);
    std::vector<double> values;
    for (const auto& item : split_list(e.value))
        values.push_back(parse_double(item, section + "." + key, e.line));
    if (values.empty())
        throw config_error("empty list in " + section + "." + key, e.line, key);
    return values;
}

std::vector<int> ConfigFile::get_int_list(const std::string& section,
                                          const std::string& key) const {
    const Entry& e = entry(section, key);
    std::vector<int> values;
    for (const auto& item : split_list(e.value))
        values.push_back(parse_int(item, section + "." + key, e.line));
    if (values.empty())
        throw config_error("empty list in " + section + "." + key, e.line, key);
    return values;
}

int ConfigFile::line_of(const std::string& section, const std::string& key) const {
    return entry(section, key).line;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

} // namespace losdof
