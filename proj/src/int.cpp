#include "zst/int.hpp"

#include "zst/errors.hpp"

namespace zst {

std::string to_decimal(const Int& v) { return v.get_str(); }

bool is_canonical_decimal(std::string_view s) {
    if (s.empty()) return false;
    std::string_view digits = s;
    if (digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) return false;
    for (char c : digits)
        if (c < '0' || c > '9') return false;
    if (digits.size() > 1 && digits.front() == '0') return false;
    if (digits == "0" && s.front() == '-') return false;  // "-0"
    return true;
}

Int parse_decimal(std::string_view s) {
    if (!is_canonical_decimal(s))
        throw ParseError("not a canonical decimal integer: '" + std::string(s) + "'");
    return Int(std::string(s), 10);
}

}  // namespace zst
