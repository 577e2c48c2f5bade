#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "zst/int.hpp"

namespace zst {

// Edge sequences of a triangle: a_i = t(i,0) on the left, b_i = t(i,i) on
// the right. The apex cell is shared, so a[0] == b[0].
struct BoundarySpec {
    std::vector<Int> a;
    std::vector<Int> b;

    std::size_t n() const { return a.size(); }
    void validate() const;  // throws InputError on shape/apex violations
};

// Expands one boundary-pattern string into n values.
//
//   const:<v>          repeat v
//   alt:<v1>,<v2>      alternate v1, v2
//   cycle:<v1,...,vk>  repeat the k-tuple
//   list:<v1,...,vn>   explicit values, must supply at least n (extras ignored)
//   file:<path>        whitespace/comma separated values read from a file
std::vector<Int> expand_boundary(std::string_view pattern, std::size_t n);

// Same expansion, but list/file patterns may supply fewer than n values;
// whatever they hold is returned (AutoFix builds zero-fill the rest).
std::vector<Int> expand_boundary_up_to(std::string_view pattern, std::size_t n);

BoundarySpec make_spec(std::string_view left, std::string_view right, std::size_t n);

}  // namespace zst
