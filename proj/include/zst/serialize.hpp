#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zst/boundary.hpp"
#include "zst/int.hpp"
#include "zst/matrix.hpp"
#include "zst/triangle.hpp"

namespace zst {

enum class Format { Pretty, Json, Csv, MatrixMarket };

std::optional<Format> format_from_string(std::string_view name);

// Build provenance carried alongside a triangle. Only fields that apply
// are serialized.
struct DocMeta {
    std::string kind = "plain";  // plain | idempotent | involutory
    std::optional<int> a0;
    std::optional<std::vector<Int>> odd;
    std::optional<std::string> parity_mode;  // strict | autofix
};

struct TriangleDocument {
    Triangle triangle;
    BoundarySpec spec;  // edges, kept explicit for the JSON schema
    DocMeta meta;

    std::size_t n() const { return triangle.n(); }
};

struct MatrixDocument {
    LowerTriangularMatrix matrix;
    std::string kind = "matrix";
};

using Document = std::variant<TriangleDocument, MatrixDocument>;

TriangleDocument make_document(Triangle t, DocMeta meta = {});

// All integers render as canonical decimal strings in every format; output
// is deterministic byte-for-byte.
//   json   {n, a[], b[], rows[][], meta{...}}
//   csv    one row per line, comma separated (ragged for triangles)
//   mm     MatrixMarket "array integer general", column-major, zeros
//          materialized
//   pretty cells centered in per-column widths, single-space separated
std::string serialize(const TriangleDocument& doc, Format format);
std::string serialize(const MatrixDocument& doc, Format format);
std::string serialize(const Document& doc, Format format);

// Accepts the JSON documents above as well as plain whitespace/comma text
// (ragged lines = triangle, square block = matrix). Triangles are validated
// against the zero-sum rule. Throws ParseError.
Document parse_document(std::string_view text);

}  // namespace zst
