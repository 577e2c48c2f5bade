#include "zst/boundary.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "zst/errors.hpp"

namespace zst {

void BoundarySpec::validate() const {
    if (a.empty()) throw InputError("boundary spec needs at least one row");
    if (a.size() != b.size()) throw InputError("left and right edges differ in length");
    if (a[0] != b[0]) throw InputError("apex mismatch: a[0] must equal b[0]");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<Int> parse_value_list(std::string_view body, std::string_view pattern) {
    std::vector<Int> values;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view token =
            trim(body.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        try {
            values.push_back(parse_decimal(token));
        } catch (const ParseError&) {
            throw InputError("malformed pattern '" + std::string(pattern) + "': bad value '" +
                             std::string(token) + "'");
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return values;
}

std::vector<Int> read_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open boundary value file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    for (char& c : text)
        if (c == ',') c = ' ';
    std::istringstream tokens(text);
    std::vector<Int> values;
    std::string token;
    while (tokens >> token) {
        try {
            values.push_back(parse_decimal(token));
        } catch (const ParseError&) {
            throw InputError("bad value '" + token + "' in boundary file " + path);
        }
    }
    return values;
}

std::vector<Int> repeat_cycle(const std::vector<Int>& cycle, std::size_t n) {
    std::vector<Int> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(cycle[i % cycle.size()]);
    return out;
}

}  // namespace

namespace {

std::vector<Int> expand_impl(std::string_view pattern, std::size_t n, bool allow_short) {
    if (n < 1) throw InputError("row count must be at least 1");
    std::size_t colon = pattern.find(':');
    if (colon == std::string_view::npos)
        throw InputError("malformed pattern '" + std::string(pattern) +
                         "': expected <kind>:<values>");
    std::string_view kind = pattern.substr(0, colon);
    std::string_view body = pattern.substr(colon + 1);

    if (kind == "file" || kind == "list") {
        std::vector<Int> values = kind == "file" ? read_value_file(std::string(body))
                                                 : parse_value_list(body, pattern);
        if (values.size() < n && !allow_short)
            throw InputError(std::string(kind) + " pattern supplies " +
                             std::to_string(values.size()) + " values, need " +
                             std::to_string(n));
        if (values.size() > n) values.resize(n);
        return values;
    }

    std::vector<Int> values = parse_value_list(body, pattern);
    if (kind == "const") {
        if (values.size() != 1)
            throw InputError("const pattern takes exactly one value");
        return std::vector<Int>(n, values[0]);
    }
    if (kind == "alt") {
        if (values.size() != 2)
            throw InputError("alt pattern takes exactly two values");
        return repeat_cycle(values, n);
    }
    if (kind == "cycle") {
        return repeat_cycle(values, n);
    }
    throw InputError("malformed pattern '" + std::string(pattern) + "': unknown kind '" +
                     std::string(kind) + "'");
}

}  // namespace

std::vector<Int> expand_boundary(std::string_view pattern, std::size_t n) {
    return expand_impl(pattern, n, false);
}

std::vector<Int> expand_boundary_up_to(std::string_view pattern, std::size_t n) {
    return expand_impl(pattern, n, true);
}

BoundarySpec make_spec(std::string_view left, std::string_view right, std::size_t n) {
    BoundarySpec spec{expand_boundary(left, n), expand_boundary(right, n)};
    spec.validate();
    return spec;
}

}  // namespace zst
