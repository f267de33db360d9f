#ifndef LOSDOF_CONFIG_HPP
#define LOSDOF_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

namespace losdof {

/// Sectioned key-value scenario file:
///
///   # comment
///   [section]
///   key = value
///   list_key = 1, 2, 3
///
/// Parsing keeps line numbers so validation errors can point at the
/// offending entry.
class ConfigFile {
public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text, const std::string& name = "<string>");

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& section, const std::string& key) const;
    std::vector<int> get_int_list(const std::string& section, const std::string& key) const;

    int line_of(const std::string& section, const std::string& key) const;

    /// Raw file content; the deterministic input the report hash covers.
    const std::string& text() const { return text_; }
    const std::string& name() const { return name_; }

private:
    struct Entry {
        std::string value;
        int line = 0;
    };
    std::map<std::string, std::map<std::string, Entry>> sections_;
    std::string text_;
    std::string name_;

    const Entry& entry(const std::string& section, const std::string& key) const;
};

/// 64-bit FNV-1a over a byte string, rendered as fixed-width hex.
std::string fnv1a_hex(const std::string& bytes);

} // namespace losdof

#endif
