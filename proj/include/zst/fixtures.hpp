#pragma once

#include <string_view>
#include <vector>

#include "zst/serialize.hpp"

namespace zst {

// Embedded reference triangles, the golden source of truth for tests:
//   triangle3  idempotent, a0 = 1, odds -1,-1,-1,-1, 9 rows
//   triangle4  idempotent, a0 = 0, odds -1,1,-1,1, 9 rows
//   triangle7  plain, zero left edge, mixed -1/0/1 right edge, 9 rows
//   triangle8  plain, -1 left edge under apex 1, alternating right edge
const std::vector<std::string_view>& fixture_names();

bool is_fixture_name(std::string_view name);

TriangleDocument fixture_document(std::string_view name);  // throws InputError

}  // namespace zst
