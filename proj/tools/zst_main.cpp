// zst: generate zero-sum triangles, build the special (idempotent,
// involutory, nilpotent, unipotent) triangle matrices, and verify their
// properties with exact integer arithmetic.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "zst/boundary.hpp"
#include "zst/closed_forms.hpp"
#include "zst/errors.hpp"
#include "zst/fixtures.hpp"
#include "zst/serialize.hpp"
#include "zst/shift.hpp"
#include "zst/special.hpp"
#include "zst/triangle.hpp"
#include "zst/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitBadInput = 2;

zst::Format parse_format(const std::string& name) {
    if (auto f = zst::format_from_string(name)) return *f;
    throw zst::InputError("unknown format '" + name + "' (pretty|json|csv|mm)");
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw zst::InputError("cannot open input file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void print_report(std::ostream& out, const zst::VerificationReport& report) {
    out << "property: " << zst::to_string(report.property) << "\n";
    out << "result: " << (report.pass ? "pass" : "fail");
    if (report.degenerate) out << " (degenerate)";
    out << "\n";
    if (report.first_failure) {
        const zst::CellMismatch& m = *report.first_failure;
        out << "first failure: (" << m.row << "," << m.col << ") expected "
            << zst::to_decimal(m.expected) << ", got " << zst::to_decimal(m.actual) << "\n";
    }
    for (const zst::IdentityCheck& check : report.auxiliary)
        out << (check.pass ? "  ok   " : "  FAIL ") << check.name << "\n";
}

// Triangle plus report: pretty keeps everything on stdout (the report block
// follows a blank line); machine formats keep stdout clean and put the
// report on stderr.
int emit_with_report(const zst::TriangleDocument& doc, zst::Format format,
                     const zst::VerificationReport& report) {
    std::cout << zst::serialize(doc, format);
    if (format == zst::Format::Pretty) {
        std::cout << "\n";
        print_report(std::cout, report);
    } else {
        print_report(std::cerr, report);
    }
    return report.pass ? kExitOk : kExitPropertyFailed;
}

std::vector<zst::Int> expand_odds(const std::string& pattern, std::size_t rows,
                                  bool allow_short) {
    const std::size_t needed = rows / 2;
    if (needed == 0) return {};
    // AutoFix accepts short list/file patterns; the builder zero-fills.
    return allow_short ? zst::expand_boundary_up_to(pattern, needed)
                       : zst::expand_boundary(pattern, needed);
}

int run_gen(std::size_t rows, const std::string& left, const std::string& right,
            zst::Format format) {
    zst::BoundarySpec spec = zst::make_spec(left, right, rows);
    zst::TriangleDocument doc = zst::make_document(zst::generate_triangle(spec));
    std::cout << zst::serialize(doc, format);
    return kExitOk;
}

int run_idem(std::size_t rows, int a0, const std::string& odd_pattern, zst::Format format) {
    zst::SpecialBuildRequest req{zst::BuildKind::Idempotent, a0,
                                 expand_odds(odd_pattern, rows, false), rows};
    zst::Triangle t = zst::build_idempotent(req);
    zst::BoundarySpec spec = t.boundary();
    zst::VerificationReport report =
        zst::full_report(t, spec, zst::PropertyKind::Idempotent);
    zst::DocMeta meta;
    meta.kind = "idempotent";
    meta.a0 = a0;
    meta.odd = req.odd_entries;
    return emit_with_report(zst::make_document(std::move(t), std::move(meta)), format, report);
}

int run_invol(std::size_t rows, int a0, const std::string& odd_pattern, bool parity_fix,
              zst::Format format) {
    zst::SpecialBuildRequest req{zst::BuildKind::Involutory, a0,
                                 expand_odds(odd_pattern, rows, parity_fix), rows,
                                 parity_fix ? zst::ParityMode::AutoFix
                                            : zst::ParityMode::Strict};
    zst::InvolutoryBuild build = zst::build_involutory(req);
    for (std::size_t idx : build.adjusted)
        std::cerr << "parity fix: odd entry a_" << 2 * idx + 1 << " bumped to "
                  << zst::to_decimal(build.odds_used[idx]) << "\n";
    zst::BoundarySpec spec = build.triangle.boundary();
    zst::VerificationReport report =
        zst::full_report(build.triangle, spec, zst::PropertyKind::Involutory);
    zst::DocMeta meta;
    meta.kind = "involutory";
    meta.a0 = a0;
    meta.odd = build.odds_used;
    meta.parity_mode = parity_fix ? "autofix" : "strict";
    return emit_with_report(zst::make_document(std::move(build.triangle), std::move(meta)),
                            format, report);
}

int run_shift(const std::string& kind, const std::string& input, zst::Format format) {
    zst::Document doc = zst::parse_document(read_input(input));
    zst::LowerTriangularMatrix m;
    if (const zst::TriangleDocument* t = std::get_if<zst::TriangleDocument>(&doc))
        m = zst::to_matrix(t->triangle);
    else
        m = std::get<zst::MatrixDocument>(doc).matrix;
    zst::MatrixDocument out;
    if (kind == "down") {
        out.matrix = zst::shift_down(m);
        out.kind = "shift-down";
    } else if (kind == "left") {
        out.matrix = zst::shift_left(m);
        out.kind = "shift-left";
    } else {
        throw zst::InputError("shift kind must be down or left");
    }
    std::cout << zst::serialize(out, format);
    return kExitOk;
}

int run_jordan(std::size_t rows, int a0, const std::string& odd_pattern, zst::Format format) {
    zst::UnipotentPair pair =
        zst::jordan_factorization(a0, expand_odds(odd_pattern, rows, false), rows);
    zst::VerificationReport report = zst::check_jordan_product(pair.sd, pair.sl);
    zst::MatrixDocument sd{pair.sd, "unipotent-down"};
    zst::MatrixDocument sl{pair.sl, "unipotent-left"};
    zst::MatrixDocument product{zst::mat_mul(pair.sd, pair.sl), "jordan-product"};
    if (format == zst::Format::Pretty) {
        std::cout << "S_D:\n" << zst::serialize(sd, format);
        std::cout << "S_L:\n" << zst::serialize(sl, format);
        std::cout << "S_D*S_L:\n" << zst::serialize(product, format);
        std::cout << "S_D*S_L == I + B_L: " << (report.pass ? "pass" : "fail") << "\n";
    } else if (format == zst::Format::Json) {
        // one object per factor keeps each block a valid document
        std::cout << zst::serialize(sd, format) << zst::serialize(sl, format)
                  << zst::serialize(product, format);
        print_report(std::cerr, report);
    } else {
        throw zst::InputError("jordan supports pretty or json output");
    }
    return report.pass ? kExitOk : kExitPropertyFailed;
}

int run_verify(const std::string& property, const std::string& input) {
    std::optional<zst::PropertyKind> kind = zst::property_from_string(property);
    if (!kind || *kind == zst::PropertyKind::JordanProduct)
        throw zst::InputError("property must be idempotent|involutory|nilpotent2|unipotent2");
    zst::Document doc = zst::parse_document(read_input(input));
    zst::VerificationReport report;
    if (const zst::TriangleDocument* t = std::get_if<zst::TriangleDocument>(&doc)) {
        report = zst::full_report(t->triangle, t->spec, *kind);
    } else {
        const zst::LowerTriangularMatrix& m = std::get<zst::MatrixDocument>(doc).matrix;
        switch (*kind) {
            case zst::PropertyKind::Idempotent: report = zst::check_idempotent(m); break;
            case zst::PropertyKind::Involutory: report = zst::check_involutory(m); break;
            case zst::PropertyKind::NilpotentIndex2:
                report = zst::check_nilpotent_index2(m);
                break;
            default: report = zst::check_unipotent_index2(m); break;
        }
    }
    print_report(std::cout, report);
    return report.pass ? kExitOk : kExitPropertyFailed;
}

int run_sums(std::size_t rows, const std::string& left, const std::string& right) {
    zst::BoundarySpec spec = zst::make_spec(left, right, rows);
    zst::Triangle t = zst::generate_triangle(spec);
    zst::RowSums direct = zst::row_sums_direct(t);
    std::cout << "row closed direct\n";
    for (std::size_t i = 0; i < rows; ++i)
        std::cout << i << " " << zst::to_decimal(zst::row_sum_closed(spec, i)) << " "
                  << zst::to_decimal(direct.per_row[i]) << "\n";
    std::cout << "total " << zst::to_decimal(zst::total_sum_closed(spec)) << " "
              << zst::to_decimal(direct.total) << "\n";
    return kExitOk;
}

int run_fixtures(const std::string& name, zst::Format format) {
    std::cout << zst::serialize(zst::fixture_document(name), format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-sum triangle matrices: exact integer construction and verification"};
    app.require_subcommand(1);

    std::size_t rows = 0;
    int a0 = 0;
    std::string left, right, odd_pattern, input = "-", format_name = "pretty";
    std::string shift_kind, property, fixture_name;
    bool parity_fix = false;

    CLI::App* gen = app.add_subcommand("gen", "generate a triangle from boundary patterns");
    gen->add_option("--rows", rows, "row count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--left", left, "left edge pattern")->required();
    gen->add_option("--right", right, "right edge pattern")->required();
    gen->add_option("--format", format_name, "pretty|json|csv|mm");

    CLI::App* idem = app.add_subcommand("idem", "build an idempotent triangle (M*M == M)");
    idem->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
    idem->add_option("--a0", a0, "apex, 0 or 1")->required();
    idem->add_option("--odd", odd_pattern, "pattern for a_1, a_3, ...")->required();
    idem->add_option("--format", format_name);

    CLI::App* invol = app.add_subcommand("invol", "build an involutory triangle (M*M == I)");
    invol->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
    invol->add_option("--a0", a0, "apex, +1 or -1")->required();
    invol->add_option("--odd", odd_pattern)->required();
    invol->add_flag("--parity-fix", parity_fix, "bump odd entries instead of failing");
    invol->add_option("--format", format_name);

    CLI::App* shift = app.add_subcommand("shift", "shift a matrix into its nilpotent form");
    shift->add_option("--kind", shift_kind, "down|left")->required();
    shift->add_option("--input", input, "document file, or - for stdin");
    shift->add_option("--format", format_name);

    CLI::App* jordan =
        app.add_subcommand("jordan", "factor I + B_L into two index-2 unipotent matrices");
    jordan->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
    jordan->add_option("--a0", a0, "apex, 0 or 1")->required();
    jordan->add_option("--odd", odd_pattern)->required();
    jordan->add_option("--format", format_name);

    CLI::App* verify = app.add_subcommand("verify", "check a matrix property of a document");
    verify->add_option("--property", property, "idempotent|involutory|nilpotent2|unipotent2")
        ->required();
    verify->add_option("--input", input, "document file, or - for stdin");

    CLI::App* sums = app.add_subcommand("sums", "row and total sums, closed form vs direct");
    sums->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
    sums->add_option("--left", left)->required();
    sums->add_option("--right", right)->required();

    std::string fixtures_format_name = "json";  // fixture files are JSON
    CLI::App* fixtures = app.add_subcommand("fixtures", "emit an embedded reference triangle");
    fixtures->add_option("--name", fixture_name, "triangle3|triangle4|triangle7|triangle8")
        ->required();
    fixtures->add_option("--format", fixtures_format_name, "pretty|json|csv|mm");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitBadInput;
    }

    try {
        const zst::Format format =
            parse_format(fixtures->parsed() ? fixtures_format_name : format_name);
        if (gen->parsed()) return run_gen(rows, left, right, format);
        if (idem->parsed()) return run_idem(rows, a0, odd_pattern, format);
        if (invol->parsed()) return run_invol(rows, a0, odd_pattern, parity_fix, format);
        if (shift->parsed()) return run_shift(shift_kind, input, format);
        if (jordan->parsed()) return run_jordan(rows, a0, odd_pattern, format);
        if (verify->parsed()) return run_verify(property, input);
        if (sums->parsed()) return run_sums(rows, left, right);
        if (fixtures->parsed()) return run_fixtures(fixture_name, format);
    } catch (const zst::ParityError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const zst::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
