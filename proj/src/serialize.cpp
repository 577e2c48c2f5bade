#include "zst/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "zst/errors.hpp"

namespace zst {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::vector<std::string> decimal_row(const std::vector<Int>& row) {
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const Int& v : row) out.push_back(to_decimal(v));
    return out;
}

// --- pretty -----------------------------------------------------------

// Cells centered in per-column widths, single space between columns,
// trailing blanks stripped.
std::string pretty_grid(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const std::vector<std::string>& row : cells) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t j = 0; j < row.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    }
    std::string out;
    for (const std::vector<std::string>& row : cells) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) line += ' ';
            const std::size_t pad = width[j] - row[j].size();
            line.append(pad / 2, ' ');
            line += row[j];
            line.append(pad - pad / 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::vector<std::vector<std::string>> triangle_cells(const Triangle& t) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(t.n());
    for (const std::vector<Int>& row : t.rows) cells.push_back(decimal_row(row));
    return cells;
}

std::vector<std::vector<std::string>> matrix_cells(const LowerTriangularMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        cells[i].reserve(m.size());
        for (std::size_t j = 0; j < m.size(); ++j) cells[i].push_back(to_decimal(m.at(i, j)));
    }
    return cells;
}

// --- csv ---------------------------------------------------------------

std::string csv_grid(const std::vector<std::vector<std::string>>& cells) {
    std::string out;
    for (const std::vector<std::string>& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out += ',';
            out += row[j];
        }
        out += '\n';
    }
    return out;
}

// --- matrix market -----------------------------------------------------

std::string matrix_market(const LowerTriangularMatrix& m) {
    std::string out = "%%MatrixMarket matrix array integer general\n";
    out += std::to_string(m.size()) + " " + std::to_string(m.size()) + "\n";
    for (std::size_t j = 0; j < m.size(); ++j)
        for (std::size_t i = 0; i < m.size(); ++i) {
            out += to_decimal(m.at(i, j));
            out += '\n';
        }
    return out;
}

// --- json --------------------------------------------------------------

OrderedJson meta_to_json(const DocMeta& meta) {
    OrderedJson j;
    j["kind"] = meta.kind;
    if (meta.a0) j["a0"] = *meta.a0;
    if (meta.odd) j["odd"] = decimal_row(*meta.odd);
    if (meta.parity_mode) j["parityMode"] = *meta.parity_mode;
    return j;
}

std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

std::vector<Int> parse_decimal_array(const OrderedJson& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<Int> out;
    out.reserve(arr.size());
    for (const OrderedJson& v : arr) {
        if (!v.is_string())
            throw ParseError(std::string(what) + " entries must be decimal strings");
        out.push_back(parse_decimal(v.get_ref<const std::string&>()));
    }
    return out;
}

Document parse_json(const std::string& text) {
    OrderedJson j = OrderedJson::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON document");
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw ParseError("document needs 'n' and 'rows'");
    if (!j["n"].is_number_unsigned()) throw ParseError("'n' must be a non-negative count");
    const std::size_t n = j["n"].get<std::size_t>();
    if (!j["rows"].is_array() || j["rows"].size() != n)
        throw ParseError("'rows' must hold exactly n rows");

    const bool is_triangle = j.contains("a") || j.contains("b");
    if (is_triangle) {
        if (!j.contains("a") || !j.contains("b"))
            throw ParseError("triangle documents need both 'a' and 'b'");
        TriangleDocument doc;
        doc.spec.a = parse_decimal_array(j["a"], "'a'");
        doc.spec.b = parse_decimal_array(j["b"], "'b'");
        if (doc.spec.a.size() != n || doc.spec.b.size() != n)
            throw ParseError("'a' and 'b' must have length n");
        doc.spec.validate();
        doc.triangle.rows.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Int> row = parse_decimal_array(j["rows"][i], "'rows'");
            if (row.size() != i + 1)
                throw ParseError("triangle row " + std::to_string(i) + " must have " +
                                 std::to_string(i + 1) + " cells");
            doc.triangle.rows.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < n; ++i)
            if (doc.triangle.rows[i].front() != doc.spec.a[i] ||
                doc.triangle.rows[i].back() != doc.spec.b[i])
                throw ParseError("row edges disagree with 'a'/'b' at row " + std::to_string(i));
        if (!zero_sum_holds(doc.triangle))
            throw ParseError("rows violate the zero-sum rule");
        if (j.contains("meta") && j["meta"].is_object()) {
            const OrderedJson& m = j["meta"];
            if (m.contains("kind")) doc.meta.kind = m["kind"].get<std::string>();
            if (m.contains("a0")) doc.meta.a0 = m["a0"].get<int>();
            if (m.contains("odd")) doc.meta.odd = parse_decimal_array(m["odd"], "'meta.odd'");
            if (m.contains("parityMode"))
                doc.meta.parity_mode = m["parityMode"].get<std::string>();
        }
        return doc;
    }

    MatrixDocument doc;
    doc.matrix = LowerTriangularMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> row = parse_decimal_array(j["rows"][i], "'rows'");
        if (row.size() != n)
            throw ParseError("matrix row " + std::to_string(i) + " must have " +
                             std::to_string(n) + " cells");
        for (std::size_t k = i + 1; k < n; ++k)
            if (row[k] != 0) throw ParseError("matrix must be lower triangular");
        for (std::size_t k = 0; k <= i; ++k) doc.matrix.ref(i, k) = std::move(row[k]);
    }
    if (j.contains("meta") && j["meta"].is_object() && j["meta"].contains("kind"))
        doc.kind = j["meta"]["kind"].get<std::string>();
    return doc;
}

// --- plain text --------------------------------------------------------

Document parse_text(std::string_view text) {
    std::vector<std::vector<Int>> grid;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        std::string cleaned(line);
        for (char& c : cleaned)
            if (c == ',' || c == '\t' || c == '\r') c = ' ';
        std::istringstream tokens(cleaned);
        std::vector<Int> row;
        std::string token;
        bool numeric = true;
        while (tokens >> token) {
            if (!is_canonical_decimal(token)) {
                numeric = false;
                break;
            }
            row.push_back(parse_decimal(token));
        }
        if (!numeric || row.empty()) {
            if (grid.empty() && numeric) {
                // skip leading blank lines
                if (eol == std::string_view::npos) break;
                pos = eol + 1;
                continue;
            }
            break;  // report block or blank line after the data
        }
        grid.push_back(std::move(row));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (grid.empty()) throw ParseError("no numeric rows found");

    const std::size_t n = grid.size();
    bool triangle_shape = true;
    bool square_shape = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (grid[i].size() != i + 1) triangle_shape = false;
        if (grid[i].size() != n) square_shape = false;
    }
    if (triangle_shape) {
        TriangleDocument doc;
        doc.triangle.rows = std::move(grid);
        if (!zero_sum_holds(doc.triangle))
            throw ParseError("rows violate the zero-sum rule");
        doc.spec = doc.triangle.boundary();
        return doc;
    }
    if (square_shape) {
        MatrixDocument doc;
        doc.matrix = LowerTriangularMatrix(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = i + 1; k < n; ++k)
                if (grid[i][k] != 0) throw ParseError("matrix must be lower triangular");
            for (std::size_t k = 0; k <= i; ++k) doc.matrix.ref(i, k) = std::move(grid[i][k]);
        }
        return doc;
    }
    throw ParseError("rows form neither a triangle (lengths 1,2,...) nor a square matrix");
}

}  // namespace

std::optional<Format> format_from_string(std::string_view name) {
    if (name == "pretty") return Format::Pretty;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "mm") return Format::MatrixMarket;
    return std::nullopt;
}

TriangleDocument make_document(Triangle t, DocMeta meta) {
    TriangleDocument doc;
    doc.spec = t.boundary();
    doc.triangle = std::move(t);
    doc.meta = std::move(meta);
    return doc;
}

std::string serialize(const TriangleDocument& doc, Format format) {
    switch (format) {
        case Format::Pretty: return pretty_grid(triangle_cells(doc.triangle));
        case Format::Csv: return csv_grid(triangle_cells(doc.triangle));
        case Format::MatrixMarket: return matrix_market(to_matrix(doc.triangle));
        case Format::Json: break;
    }
    OrderedJson j;
    j["n"] = doc.n();
    j["a"] = decimal_row(doc.spec.a);
    j["b"] = decimal_row(doc.spec.b);
    OrderedJson rows = OrderedJson::array();
    for (const std::vector<Int>& row : doc.triangle.rows) rows.push_back(decimal_row(row));
    j["rows"] = std::move(rows);
    j["meta"] = meta_to_json(doc.meta);
    return dump_json(j);
}

std::string serialize(const MatrixDocument& doc, Format format) {
    switch (format) {
        case Format::Pretty: return pretty_grid(matrix_cells(doc.matrix));
        case Format::Csv: return csv_grid(matrix_cells(doc.matrix));
        case Format::MatrixMarket: return matrix_market(doc.matrix);
        case Format::Json: break;
    }
    OrderedJson j;
    j["n"] = doc.matrix.size();
    OrderedJson rows = OrderedJson::array();
    for (const std::vector<std::string>& row : matrix_cells(doc.matrix)) rows.push_back(row);
    j["rows"] = std::move(rows);
    j["meta"] = OrderedJson{{"kind", doc.kind}};
    return dump_json(j);
}

std::string serialize(const Document& doc, Format format) {
    if (const TriangleDocument* t = std::get_if<TriangleDocument>(&doc))
        return serialize(*t, format);
    return serialize(std::get<MatrixDocument>(doc), format);
}

Document parse_document(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty document");
    if (text[first] == '{') return parse_json(std::string(text));
    return parse_text(text.substr(first));
}

}  // namespace zst
