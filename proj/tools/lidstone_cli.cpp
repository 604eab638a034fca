// Command-line front end: basis elements, reconstruction from data files,
// verification of the example families and user expressions, growth
// diagnostics, series expansion, and the threshold order.  JSON in, JSON or
// tables out; every report echoes the knobs that produced it.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lidstone/examples_defaults.hpp"
#include "lidstone/lidstone.hpp"

namespace {

using lidstone::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct CheckFailed : std::runtime_error {
    explicit CheckFailed(const std::string& what) : std::runtime_error(what) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write '" + out_path + "'");
    out << text;
}

void write_json(const std::string& out_path, const Json& j) { write_output(out_path, j.dump(2) + "\n"); }

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("LIDSTONE_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw std::invalid_argument("LIDSTONE_SEED must be an unsigned integer");
        }
    }
    return flag_seed;
}

std::vector<lidstone::Rational> parse_rational_list(const std::string& text) {
    std::vector<lidstone::Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(lidstone::parse_rational(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

Json load_json(const std::string& path) {
    std::string text = read_file(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw lidstone::JsonFormatError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
}

// ---- shared option bundles -------------------------------------------------

struct CommonOpts {
    std::string output;
    std::uint64_t seed = 1;
};

struct SourceOpts {
    std::string expr_file;
    std::string expr_inline;
    std::string poly_file;
    int example_kind = 0;
    int n = 0;
    std::string a_list, b_list;
    std::string g_file;
    std::string frame_file;
};

void add_source_flags(CLI::App* cmd, SourceOpts& src, bool with_example) {
    cmd->add_option("--expr-file", src.expr_file, "text file with one expression");
    cmd->add_option("--expr", src.expr_inline, "inline expression text");
    cmd->add_option("--poly-file", src.poly_file, "polynomial JSON file");
    if (with_example) {
        cmd->add_option("--example", src.example_kind, "example family kind (1, 2 or 3)")
            ->check(CLI::Range(1, 3));
        cmd->add_option("--a", src.a_list, "comma-separated rational a coordinates");
        cmd->add_option("--b", src.b_list, "comma-separated rational b coordinates");
        cmd->add_option("--g-file", src.g_file, "JSON array of g polynomials");
    }
    cmd->add_option("-n,--dimension", src.n, "ambient dimension");
    cmd->add_option("--frame-file", src.frame_file, "frame JSON file (defaults to canonical points)");
}

struct LoadedSource {
    int n = 1;
    lidstone::AffineFrame frame = lidstone::AffineFrame::canonical(1);
    std::optional<lidstone::Expr> expr;
    std::optional<lidstone::MultiPoly> poly;
    Json config;  // provenance echoed in reports
};

lidstone::ExampleSpec example_spec_from(const SourceOpts& src) {
    lidstone::ExampleSpec spec;
    spec.kind = src.example_kind;
    spec.n = src.n > 0 ? src.n : 1;
    if (!src.a_list.empty())
        spec.a = parse_rational_list(src.a_list);
    else
        spec.a.assign(spec.n, lidstone::Rational(0));
    if (!src.b_list.empty())
        spec.b = parse_rational_list(src.b_list);
    else
        spec.b.assign(spec.n, lidstone::Rational(1));
    if (spec.kind >= 2) {
        if (!src.g_file.empty()) {
            Json j = load_json(src.g_file);
            if (!j.is_array()) throw lidstone::JsonFormatError("--g-file must hold a JSON array");
            for (const auto& item : j) spec.g.push_back(lidstone::poly_from_json(item));
        } else {
            spec.g = lidstone::default_example_polynomials(spec.n);
        }
    }
    spec.validate();
    return spec;
}

LoadedSource load_source(const SourceOpts& src) {
    LoadedSource out;
    int sources = (!src.expr_file.empty()) + (!src.expr_inline.empty()) + (!src.poly_file.empty()) +
                  (src.example_kind > 0);
    if (sources != 1)
        throw std::invalid_argument(
            "exactly one of --expr-file/--expr/--poly-file/--example must be given");

    if (src.example_kind > 0) {
        lidstone::ExampleSpec spec = example_spec_from(src);
        out.n = spec.n;
        out.expr = lidstone::build_example(spec);
        out.frame = lidstone::example_frame(spec);
        out.config["source"] = "example";
        out.config["kind"] = spec.kind;
        Json a = Json::array(), b = Json::array();
        for (const auto& q : spec.a) a.push_back(lidstone::to_string(q));
        for (const auto& q : spec.b) b.push_back(lidstone::to_string(q));
        out.config["a"] = std::move(a);
        out.config["b"] = std::move(b);
        Json gs = Json::array();
        for (const auto& g : spec.g) gs.push_back(lidstone::poly_to_json(g));
        out.config["g"] = std::move(gs);
    } else if (!src.poly_file.empty()) {
        out.poly = lidstone::poly_from_json(load_json(src.poly_file));
        out.n = out.poly->dim();
        out.frame = lidstone::AffineFrame::canonical(out.n);
        out.config["source"] = "polynomial";
        out.config["file"] = src.poly_file;
    } else {
        std::string text = src.expr_file.empty() ? src.expr_inline : read_file(src.expr_file);
        lidstone::Expr e = lidstone::parse_expression(text);
        out.n = std::max(1, lidstone::max_var_index(e));
        if (src.n > 0) out.n = std::max(out.n, src.n);
        out.expr = e;
        out.frame = lidstone::AffineFrame::canonical(out.n);
        out.config["source"] = "expression";
        out.config["expression"] = lidstone::to_string(e);
    }
    if (src.n > 0 && src.example_kind == 0 && out.n != src.n && out.poly)
        throw std::invalid_argument("--dimension disagrees with the polynomial dimension");
    if (!src.frame_file.empty()) {
        out.frame = lidstone::frame_from_json(load_json(src.frame_file));
        if (out.frame.dim() != out.n)
            throw std::invalid_argument("frame dimension disagrees with the source dimension");
        out.config["frame_file"] = src.frame_file;
    }
    out.config["n"] = out.n;
    return out;
}

lidstone::Fixture make_source_fixture(const LoadedSource& s) {
    if (s.poly) return lidstone::make_fixture(*s.poly, s.frame);
    return lidstone::make_fixture(*s.expr, s.frame);
}

// ---- human tables ------------------------------------------------------------

std::string verify_table(const lidstone::VerifyReport& report) {
    std::ostringstream os;
    os << std::left << std::setw(16) << "t" << std::setw(4) << "i" << std::setw(28) << "value"
       << std::setw(7) << "exact" << "pass\n";
    for (const auto& e : report.entries) {
        std::ostringstream t;
        t << '(';
        for (int j = 0; j < e.t.dim(); ++j) t << e.t[j] << (j + 1 < e.t.dim() ? "," : "");
        t << ')';
        std::ostringstream v;
        if (e.exact_value)
            v << e.exact_value->str();
        else
            v << std::setprecision(6) << e.numeric_value.real() << "+" << e.numeric_value.imag() << "i";
        os << std::left << std::setw(16) << t.str() << std::setw(4) << e.i << std::setw(28) << v.str()
           << std::setw(7) << (e.exact ? "yes" : "no") << (e.pass ? "pass" : "FAIL") << "\n";
    }
    os << report.passed << "/" << report.total << " checks passed ("
       << report.exact_count << " exact)\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multivariate Lidstone interpolation toolkit"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("-o,--output", common.output, "write JSON here instead of stdout");
    app.add_option("--seed", common.seed, "seed for randomized sampling (env LIDSTONE_SEED overrides)");

    // ---- basis ----
    auto* cmd_basis = app.add_subcommand("basis", "compute one dual basis polynomial");
    int basis_n = 1, basis_i = 0, basis_cap = -1;
    std::string basis_t = "0";
    cmd_basis->add_option("-n,--dimension", basis_n, "ambient dimension")->required();
    cmd_basis->add_option("-t,--order", basis_t, "comma-separated derivative order")->required();
    cmd_basis->add_option("-i,--point", basis_i, "point index in 0..n")->required();
    cmd_basis->add_option("--degree-cap", basis_cap, "degree search cap (default |t|+5)");

    // ---- reconstruct ----
    auto* cmd_rec = app.add_subcommand("reconstruct", "unique polynomial matching a data file");
    std::string rec_data;
    int rec_bound = -1;
    cmd_rec->add_option("--data", rec_data, "data set JSON file")->required();
    cmd_rec->add_option("--degree-bound", rec_bound, "total degree bound (default: max |t| in data)");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "check derivative data against a predicate");
    SourceOpts verify_src;
    add_source_flags(cmd_verify, verify_src, true);
    int verify_max_norm = 8;
    std::string verify_pred = "zero";
    double verify_tol = 1e-9;
    bool verify_all_even = false, verify_no_scale = false, verify_table_out = false;
    cmd_verify->add_option("--max-norm", verify_max_norm, "check |t| up to this");
    cmd_verify->add_option("--predicate", verify_pred, "zero or integer")
        ->check(CLI::IsMember({"zero", "integer"}));
    cmd_verify->add_option("--tol", verify_tol, "numeric tolerance");
    cmd_verify->add_flag("--all-even", verify_all_even,
                         "check every pair with |t| even, not only admissible ones");
    cmd_verify->add_flag("--no-factorial-scaling", verify_no_scale,
                         "keep the numeric tolerance flat in |t|");
    cmd_verify->add_flag("--table", verify_table_out, "human-readable table instead of JSON");

    // ---- growth ----
    auto* cmd_growth = app.add_subcommand("growth", "growth diagnostics and threshold analysis");
    SourceOpts growth_src;
    add_source_flags(cmd_growth, growth_src, true);
    double growth_rmin = 1.0, growth_rmax = 200.0, growth_eta = 0.1, growth_scan_tol = 1e-9;
    int growth_rpoints = 40, growth_grid = 128;
    cmd_growth->add_option("--r-min", growth_rmin, "smallest radius");
    cmd_growth->add_option("--r-max", growth_rmax, "largest radius");
    cmd_growth->add_option("--r-points", growth_rpoints, "radius count (geometric grid)");
    cmd_growth->add_option("--grid", growth_grid, "boundary samples per variable");
    cmd_growth->add_option("--eta", growth_eta, "threshold slack in (0,1)");
    cmd_growth->add_option("--scan-tol", growth_scan_tol, "exception scan tolerance");

    // ---- expand ----
    auto* cmd_expand = app.add_subcommand("expand", "truncated series expansion in the dual basis");
    SourceOpts expand_src;
    add_source_flags(cmd_expand, expand_src, false);
    int expand_t = 8, expand_grid = 0, expand_samples = 0;
    cmd_expand->add_option("-T,--truncation", expand_t, "include terms with |t| up to this")->required();
    cmd_expand->add_option("--residual-grid", expand_grid, "residual lattice points per axis");
    cmd_expand->add_option("--residual-samples", expand_samples,
                           "extra random polydisc samples for the residual");

    // ---- threshold ----
    auto* cmd_thr = app.add_subcommand("threshold", "threshold order for the derivative bound");
    double thr_a = 0.0, thr_eta = 0.1;
    cmd_thr->add_option("-A,--radius", thr_a, "polydisc radius")->required();
    cmd_thr->add_option("--eta", thr_eta, "slack in (0,1)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        std::uint64_t seed = effective_seed(common.seed);

        if (cmd_basis->parsed()) {
            auto order = parse_int_list(basis_t);
            lidstone::MultiIndex t(order);
            if (t.dim() != basis_n)
                throw std::invalid_argument("order length must equal the dimension");
            if (!lidstone::in_index_set(lidstone::IndexPair(t, basis_i)))
                throw std::invalid_argument("(t, i) is not an admissible pair");
            int cap = basis_cap > 0 ? basis_cap : t.norm() + 5;
            auto el = lidstone::lidstone_basis(basis_n, t, basis_i, cap);
            Json j = lidstone::basis_element_to_json(el);
            j["config"] = Json{{"degree_cap", cap}, {"seed", seed}};
            write_json(common.output, j);
            return kExitOk;
        }

        if (cmd_rec->parsed()) {
            lidstone::DataSet data = lidstone::dataset_from_json(load_json(rec_data));
            int bound = rec_bound;
            if (bound < 0) {
                bound = 0;
                for (const auto& [key, value] : data.entries) bound = std::max(bound, key.t.norm());
            }
            lidstone::MultiPoly p = lidstone::reconstruct(data, bound);
            Json j = lidstone::poly_to_json(p);
            j["config"] = Json{{"degree_bound", bound}, {"seed", seed}};
            write_json(common.output, j);
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            LoadedSource src = load_source(verify_src);
            if (!src.expr) {
                if (!src.poly) throw std::invalid_argument("verify needs an expression source");
                src.expr = lidstone::make_poly_of_vars(*src.poly);
            }
            lidstone::VerifyOptions opt;
            opt.max_norm = verify_max_norm;
            opt.predicate =
                verify_pred == "zero" ? lidstone::Predicate::Zero : lidstone::Predicate::Integer;
            opt.tol = verify_tol;
            opt.restrict_to_index_set = !verify_all_even;
            opt.scale_tol_by_factorial = !verify_no_scale;
            auto report = lidstone::verify_data_property(*src.expr, src.frame, opt);
            if (verify_table_out) {
                write_output(common.output, verify_table(report));
            } else {
                Json j = lidstone::verify_report_to_json(report);
                j["config"] = Json{{"max_norm", opt.max_norm},
                                   {"predicate", verify_pred},
                                   {"tol", opt.tol},
                                   {"restrict_to_index_set", opt.restrict_to_index_set},
                                   {"factorial_scaling", opt.scale_tol_by_factorial},
                                   {"seed", seed},
                                   {"input", src.config}};
                write_json(common.output, j);
            }
            if (!report.all_pass) throw CheckFailed("verification failed");
            return kExitOk;
        }

        if (cmd_growth->parsed()) {
            LoadedSource src = load_source(growth_src);
            lidstone::Fixture fixture = make_source_fixture(src);
            lidstone::DiagnosticsOptions opt;
            opt.r_grid = lidstone::geometric_grid(growth_rmin, growth_rmax, growth_rpoints);
            opt.sup_grid = growth_grid;
            opt.eta = growth_eta;
            opt.scan_tol = growth_scan_tol;
            auto diag = lidstone::run_growth_diagnostics(fixture, opt);
            Json j = lidstone::diagnostics_to_json(diag);
            j["config"] = Json{{"r_min", growth_rmin},
                               {"r_max", growth_rmax},
                               {"r_points", growth_rpoints},
                               {"grid", growth_grid},
                               {"eta", growth_eta},
                               {"scan_tol", growth_scan_tol},
                               {"seed", seed},
                               {"input", src.config}};
            write_json(common.output, j);
            return kExitOk;
        }

        if (cmd_expand->parsed()) {
            LoadedSource src = load_source(expand_src);
            if (!src.frame.is_canonical())
                throw std::invalid_argument("expand works at the canonical points");
            lidstone::Fixture fixture = make_source_fixture(src);
            lidstone::ExpandOptions opt;
            opt.residual_grid = expand_grid;
            opt.random_samples = expand_samples;
            opt.seed = seed;
            auto expansion = lidstone::expand(fixture, expand_t, opt);
            Json j = lidstone::expansion_to_json(expansion);
            Json warnings = Json::array();
            if (!expansion.residual_exact_zero && expansion.residual_max > 1e-6)
                warnings.push_back(
                    "residual did not vanish: the source may not have directional type below pi");
            j["warnings"] = std::move(warnings);
            j["config"] = Json{{"truncation", expand_t},
                               {"residual_grid", expand_grid},
                               {"residual_samples", expand_samples},
                               {"seed", seed},
                               {"input", src.config}};
            write_json(common.output, j);
            return kExitOk;
        }

        if (cmd_thr->parsed()) {
            lidstone::GrowthParams params{thr_a, thr_eta};
            int t0 = lidstone::polya_threshold(params);
            Json j;
            j["A"] = thr_a;
            j["eta"] = thr_eta;
            j["T0"] = t0;
            j["config"] = Json{{"seed", seed}};
            write_json(common.output, j);
            return kExitOk;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CheckFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const lidstone::InconsistentDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const lidstone::DegreeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const lidstone::SingularFrameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const lidstone::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lidstone::JsonFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return kExitOk;
}
