#include "permtab/caps.hpp"

#include <cstdlib>
#include <string>

#include "permtab/errors.hpp"

namespace permtab {
namespace {

int parse_cap_value(std::string_view text) {
    if (text.empty()) throw ParseError("PERMTAB_ENUM_CAPS: empty cap value");
    int value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9')
            throw ParseError(std::string("PERMTAB_ENUM_CAPS: invalid cap value '") +
                             std::string(text) + "'");
        value = value * 10 + (ch - '0');
        if (value > 1000) throw ParseError("PERMTAB_ENUM_CAPS: cap value out of range");
    }
    return value;
}

}  // namespace

EnumerationCaps parse_caps(std::string_view text) {
    EnumerationCaps caps;
    if (text.find('=') == std::string_view::npos) {
        int all = parse_cap_value(text);
        caps.permutations = caps.alternating = caps.tableaux = all;
        return caps;
    }
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("PERMTAB_ENUM_CAPS: expected key=value, got '" + std::string(item) + "'");
        std::string_view key = item.substr(0, eq);
        int value = parse_cap_value(item.substr(eq + 1));
        if (key == "perm")
            caps.permutations = value;
        else if (key == "alt")
            caps.alternating = value;
        else if (key == "tab")
            caps.tableaux = value;
        else
            throw ParseError("PERMTAB_ENUM_CAPS: unknown key '" + std::string(key) +
                             "' (expected perm, alt or tab)");
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return caps;
}

const EnumerationCaps& enumeration_caps() {
    static const EnumerationCaps caps = [] {
        const char* env = std::getenv("PERMTAB_ENUM_CAPS");
        return env ? parse_caps(env) : EnumerationCaps{};
    }();
    return caps;
}

}  // namespace permtab
