// Command-line surface: classification reports, solver-vs-oracle
// verification, reproduction of the summary tables against golden files, and
// form enumeration.
//
// Exit codes: 0 success, 1 a verification or golden diff failed, 2 bad input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "tybraid/tybraid.hpp"

namespace fs = std::filesystem;
using namespace tybraid;

namespace {

constexpr const char* kVersion = "tybraid 1.0.0";

int env_modulus() {
    if (const char* s = std::getenv("TYBRAID_MODULUS")) {
        int n = std::atoi(s);
        CycScalar::check_modulus(n);
        return n;
    }
    return kDefaultModulus;
}

std::string expand_case_alias(const std::string& s) {
    if (s == "sr") return "split-real";
    if (s == "rq") return "real-quaternionic";
    if (s == "rc-id") return "real-complex-id";
    if (s == "rc-conj") return "real-complex-conj";
    if (s == "sc") return "split-complex";
    if (s == "cc") return "complex-complex";
    return s;
}

TYData build_instance(const std::string& raw, int n, int ell, int tau_sign, int modulus) {
    const std::string cse = expand_case_alias(raw);
    switch (case_from_name(cse)) {
        case TYCase::SplitReal: return make_split_real(n, tau_sign, modulus);
        case TYCase::RealQuaternionic: return make_real_quaternionic(n, tau_sign, modulus);
        case TYCase::RealComplexId: return make_real_complex(false, n, tau_sign, modulus);
        case TYCase::RealComplexConj: return make_real_complex(true, n, tau_sign, modulus);
        case TYCase::ComplexComplex: return make_complex_complex(n, tau_sign, modulus);
        case TYCase::SplitComplex: return make_split_complex(n, ell, tau_sign, modulus);
    }
    throw std::invalid_argument("unknown case");
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string classification_markdown(const Classification& c) {
    std::ostringstream os;
    os << "# Braiding classes: " << case_name(c.data.cse) << ", dim " << c.data.dim()
       << ", tau " << (c.data.tau_sign > 0 ? "+" : "-") << "\n\n";
    os << "braidings: " << c.braidings.size() << ", classes: " << c.classes.size() << "\n\n";
    os << "| class | size | sgn(sigma) | epsilon | sigma(w) | sigma3(1) | pi0 |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        const auto& cls = c.classes[i];
        auto opt = [](const std::optional<int>& v) {
            return v ? std::to_string(*v) : std::string("-");
        };
        std::string s31;
        for (const auto& s : cls.invariants.sigma3_1) s31 += (s31.empty() ? "" : "; ") + s;
        os << "| " << i << " | " << cls.members.size() << " | "
           << opt(cls.invariants.sign_sigma) << " | " << opt(cls.invariants.epsilon) << " | "
           << opt(cls.invariants.sigma_w_sign) << " | " << s31 << " | "
           << pi0_aut_br(c.braidings[cls.representative]).order << " |\n";
    }
    return os.str();
}

std::string classification_csv(const Classification& c) {
    std::ostringstream os;
    os << "class,size,sgn_sigma,epsilon,sigma_w,sigma3_1,pi0\n";
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        const auto& cls = c.classes[i];
        auto opt = [](const std::optional<int>& v) {
            return v ? std::to_string(*v) : std::string("");
        };
        std::string s31;
        for (const auto& s : cls.invariants.sigma3_1) s31 += (s31.empty() ? "" : "; ") + s;
        os << i << "," << cls.members.size() << "," << opt(cls.invariants.sign_sigma) << ","
           << opt(cls.invariants.epsilon) << "," << opt(cls.invariants.sigma_w_sign) << ",\""
           << s31 << "\"," << pi0_aut_br(c.braidings[cls.representative]).order << "\n";
    }
    return os.str();
}

// crossed variant
std::string crossed_markdown(const CrossedClassification& c, const TYData& d) {
    std::ostringstream os;
    os << "# Crossed braiding classes: " << case_name(d.cse) << ", dim " << d.dim() << "\n\n";
    if (c.empty_reason) os << "no crossed braidings: " << *c.empty_reason << "\n";
    os << "braidings: " << c.braidings.size() << ", classes: " << c.classes.size()
       << ", strong equivalences: " << c.strong_pairs.size() << "\n\n";
    os << "| class | size | sgn(sigma) | pi0 |\n|---|---|---|---|\n";
    for (std::size_t i = 0; i < c.classes.size(); ++i)
        os << "| " << i << " | " << c.classes[i].members.size() << " | "
           << c.classes[i].sign_sigma << " | " << c.classes[i].pi0_order << " |\n";
    return os.str();
}

struct GoldenPaths {
    fs::path dir;
};

fs::path locate_golden_dir(const std::string& flag_value, const char* argv0) {
    if (!flag_value.empty()) return flag_value;
    if (const char* e = std::getenv("TYBRAID_GOLDEN_DIR")) return e;
    fs::path exe = fs::absolute(argv0).parent_path();
    if (fs::exists(exe / "goldens")) return exe / "goldens";
#ifdef TYBRAID_SOURCE_DIR
    return fs::path(TYBRAID_SOURCE_DIR) / "goldens";
#else
    return "goldens";
#endif
}

int diff_against_golden(const std::string& computed, const fs::path& golden_file) {
    std::ifstream f(golden_file, std::ios::binary);
    if (!f) {
        std::cout << "MISSING golden " << golden_file.string() << "\n";
        return 1;
    }
    std::stringstream ss;
    ss << f.rdbuf();
    if (ss.str() == computed) {
        std::cout << "PASS " << golden_file.filename().string() << "\n";
        return 0;
    }
    std::cout << "FAIL " << golden_file.filename().string() << " (content differs)\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification engine for braidings on Tambara-Yamagami categories"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    const int modulus = [&] {
        try {
            return env_modulus();
        } catch (const std::exception& e) {
            std::cerr << "TYBRAID_MODULUS: " << e.what() << "\n";
            std::exit(2);
        }
    }();

    std::string cse, tau = "+", format = "json", out_path, cache_dir, field_name = "complex";
    std::string tables_sel = "all", golden_dir_flag, emit_dir, chi_spec;
    int n = 1, ell = 0, n_max = 2, wall_count = 0;
    unsigned long long seed = 20260809ULL;

    std::string instance_path;
    auto* c_classify = app.add_subcommand("classify", "classify braidings on one instance");
    c_classify->add_option("--case", cse, "case tag");
    c_classify->add_option("--n", n, "number of hyperbolic blocks (split-complex: total rank)");
    c_classify->add_option("--ell", ell, "multiplicity of l (split-complex only)");
    c_classify->add_option("--tau", tau, "sign of tau: + or -");
    c_classify->add_option("--instance", instance_path, "instance JSON file instead of flags");
    c_classify->add_option("--format", format, "json | csv | markdown");
    c_classify->add_option("--out", out_path, "output file (default stdout)");
    c_classify->add_option("--cache", cache_dir, "classification cache directory");

    auto* c_verify = app.add_subcommand("verify", "solver vs oracle agreement checks");
    c_verify->add_option("--case", cse, "case tag");
    c_verify->add_option("--n", n, "number of hyperbolic blocks");
    c_verify->add_option("--ell", ell, "multiplicity of l (split-complex only)");
    c_verify->add_option("--tau", tau, "sign of tau: + | - | both");
    c_verify->add_option("--wall", wall_count, "fuzz wall_normalize with this many forms");
    c_verify->add_option("--seed", seed, "seed for randomized property checks");

    auto* c_repro = app.add_subcommand("reproduce", "regenerate summary tables and diff goldens");
    c_repro->add_option("--tables", tables_sel, "intro | gauss | all");
    c_repro->add_option("--n-max", n_max, "largest block count verified");
    c_repro->add_option("--golden-dir", golden_dir_flag, "golden file directory");
    c_repro->add_option("--emit", emit_dir, "write computed tables here instead of diffing");
    c_repro->add_option("--format", format, "markdown (golden layout)");

    auto* c_forms = app.add_subcommand("enumerate-forms", "admissible forms with Gauss data");
    c_forms->add_option("--chi", chi_spec, "h^K, h^K+l, or h^K+l^2");
    c_forms->add_option("--case", cse, "take chi from this instance instead");
    c_forms->add_option("--n", n, "block count for --case");
    c_forms->add_option("--ell", ell, "multiplicity of l (split-complex only)");
    c_forms->add_option("--field", field_name, "real | complex");
    c_forms->add_option("--format", format, "csv | json");
    c_forms->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) {
            int tau_sign = tau == "-" ? -1 : +1;
            TYData d;
            if (!instance_path.empty()) {
                std::ifstream in(instance_path);
                if (!in) {
                    std::cerr << "cannot read instance file " << instance_path << "\n";
                    return 2;
                }
                d = tydata_from_json(json::parse(in));
            } else if (!cse.empty()) {
                d = build_instance(cse, n, ell, tau_sign, modulus);
            } else {
                std::cerr << "classify: pass --case or --instance\n";
                return 2;
            }
            auto violations = validate(d);
            if (!violations.empty()) {
                for (const auto& v : violations)
                    std::cerr << "invalid instance: " << v.code << ": " << v.detail << "\n";
                return 2;
            }
            json payload;
            std::string key;
            if (d.cse == TYCase::ComplexComplex) {
                auto c = classify_crossed(d);
                payload = json{{"data", to_json(d)}, {"crossed", to_json(c)}};
                if (format == "markdown") {
                    write_output(crossed_markdown(c, d), out_path);
                    return 0;
                }
            } else {
                key = to_json(d).dump();
                if (!cache_dir.empty()) {
                    // newline-delimited: header, instance, classification
                    fs::create_directories(cache_dir);
                    std::ostringstream name;
                    name << std::hex << fnv1a(key) << ".ndjson";
                    fs::path cached = fs::path(cache_dir) / name.str();
                    if (fs::exists(cached)) {
                        std::ifstream in(cached);
                        std::string header_line, data_line, cls_line;
                        std::getline(in, header_line);
                        std::getline(in, data_line);
                        std::getline(in, cls_line);
                        json header = json::parse(header_line, nullptr, false);
                        if (!header.is_discarded() && header.value("N", 0) == modulus &&
                            data_line == key) {
                            write_output(cls_line + "\n", out_path);
                            return 0;
                        }
                        // stale or colliding cache entry: fall through and rebuild
                    }
                    auto c = classify(d);
                    {
                        std::ofstream outf(cached);
                        outf << json{{"version", kVersion}, {"N", d.modulus}}.dump() << "\n"
                             << key << "\n"
                             << to_json(c).dump() << "\n";
                    }
                    if (format == "markdown") {
                        write_output(classification_markdown(c), out_path);
                        return 0;
                    }
                    if (format == "csv") {
                        write_output(classification_csv(c), out_path);
                        return 0;
                    }
                    write_output(to_json(c).dump() + "\n", out_path);
                    return 0;
                }
                auto c = classify(d);
                if (format == "markdown") {
                    write_output(classification_markdown(c), out_path);
                    return 0;
                }
                if (format == "csv") {
                    write_output(classification_csv(c), out_path);
                    return 0;
                }
                payload = to_json(c);
            }
            write_output(payload.dump(2) + "\n", out_path);
            return 0;
        }

        if (c_verify->parsed()) {
            int failures = 0;
            if (wall_count > 0) {
                std::mt19937_64 rng(seed);
                int done = 0;
                while (done < wall_count) {
                    int dim = 1 + static_cast<int>(rng() % 6);
                    F2Matrix mtx(dim);
                    for (int i = 0; i < dim; ++i)
                        for (int j = i; j < dim; ++j) {
                            bool bit = rng() & 1;
                            mtx.set(i, j, bit);
                            mtx.set(j, i, bit);
                        }
                    Bicharacter chi{mtx};
                    if (!chi.nondegenerate()) continue;
                    ++done;
                    auto nf = wall_normalize(chi);
                    bool ok = wall_verify(chi, nf);
                    if (chi.diagonal_trivial()) ok = ok && nf.l_blocks == 0 && dim % 2 == 0;
                    if (!ok) {
                        std::cout << "FAIL wall_normalize on a dim-" << dim << " form\n";
                        ++failures;
                    }
                }
                std::cout << (failures ? "FAIL" : "PASS") << " wall fuzz (" << wall_count
                          << " forms, seed " << seed << ")\n";
            }
            if (!cse.empty()) {
                std::vector<int> taus = tau == "both" ? std::vector<int>{+1, -1}
                                        : tau == "-"  ? std::vector<int>{-1}
                                                      : std::vector<int>{+1};
                for (int ts : taus) {
                    TYData d = build_instance(cse, n, ell, ts, modulus);
                    if (d.cse == TYCase::ComplexComplex) {
                        auto sol = solve_crossed(d);
                        bool clean = true;
                        for (const auto& cb : sol.braidings)
                            for (const auto& v : check_heptagons(cb)) {
                                clean = false;
                                std::cout << "  violated " << to_json(v).dump() << "\n";
                            }
                        const bool oracle_runs = d.order() <= 16;
                        bool agree = !oracle_runs || brute_force_crossed(d) == sol.braidings;
                        bool no_plain = solve_braidings(d).empty();
                        std::cout << (clean && agree && no_plain ? "PASS" : "FAIL")
                                  << " complex-complex crossed checks (tau "
                                  << (ts > 0 ? "+" : "-") << ", " << sol.braidings.size()
                                  << " crossed braidings, oracle "
                                  << (oracle_runs ? (agree ? "ok" : "MISMATCH") : "n/a")
                                  << ", no plain braidings "
                                  << (no_plain ? "ok" : "VIOLATED") << ")\n";
                        if (!(clean && agree && no_plain)) ++failures;
                        continue;
                    }
                    auto sol = solve_braidings(d);
                    bool clean = true;
                    for (const auto& b : sol)
                        for (const auto& v : check_hexagons(b)) {
                            clean = false;
                            std::cout << "  violated " << to_json(v).dump() << "\n";
                        }
                    const bool staged_runs = d.order() <= 16;
                    const bool full_runs = d.order() <= 2;
                    bool staged_ok = !staged_runs ||
                                     brute_force_braidings(d, OracleMode::Staged) == sol;
                    bool full_ok = !full_runs ||
                                   (brute_force_braidings(d, OracleMode::Full) == sol &&
                                    full_oracle_sigma0_is_chi(d));
                    std::cout << (clean && staged_ok && full_ok ? "PASS" : "FAIL") << " "
                              << case_name(d.cse) << " n=" << n << " tau="
                              << (ts > 0 ? "+" : "-") << " (" << sol.size()
                              << " braidings, hexagons " << (clean ? "clean" : "violated")
                              << ", staged "
                              << (staged_runs ? (staged_ok ? "ok" : "MISMATCH") : "n/a")
                              << ", full "
                              << (full_runs ? (full_ok ? "ok" : "MISMATCH") : "n/a") << ")\n";
                    if (!(clean && staged_ok && full_ok)) ++failures;
                }
            }
            if (wall_count == 0 && cse.empty()) {
                std::cerr << "verify: nothing to do (pass --case or --wall)\n";
                return 2;
            }
            return failures ? 1 : 0;
        }

        if (c_repro->parsed()) {
            if (c_repro->count("--format") == 0) format = "markdown";
            if (format != "markdown") {
                std::cerr << "reproduce: golden layout is markdown only\n";
                return 2;
            }
            std::map<std::string, std::string> files;
            if (tables_sel == "intro" || tables_sel == "all") {
                std::vector<Table1Column> cols;
                for (TYCase c : {TYCase::SplitReal, TYCase::RealComplexId,
                                 TYCase::RealComplexConj, TYCase::RealQuaternionic,
                                 TYCase::ComplexComplex}) {
                    Table1Column col = compute_table1_column(c, 1, modulus);
                    for (int k = 2; k <= n_max; ++k) {
                        Table1Column again = compute_table1_column(c, k, modulus);
                        if (again.orbit_count != col.orbit_count ||
                            again.orbits_extending != col.orbits_extending ||
                            again.total_classes != col.total_classes)
                            throw std::logic_error("table 1 column not constant in n");
                    }
                    cols.push_back(col);
                }
                std::string t1 = render_table1_markdown(cols, 1, n_max);
                std::vector<SplitComplexColumn> sc;
                for (int l = 0; l <= 2; ++l) sc.push_back(compute_split_complex_column(l, modulus));
                t1 += "\n" + render_split_complex_markdown(sc);
                files["intro_table1.md"] = t1;
                files["intro_table2.md"] =
                    render_table2_markdown(compute_table2(n_max, modulus), published_table2(),
                                           n_max);
            }
            if (tables_sel == "gauss" || tables_sel == "all")
                files["gauss_table.md"] = render_gauss_markdown(compute_gauss_table(1, modulus));
            if (files.empty()) {
                std::cerr << "reproduce: unknown --tables selection\n";
                return 2;
            }
            if (!emit_dir.empty()) {
                fs::create_directories(emit_dir);
                for (const auto& [name, text] : files) {
                    std::ofstream f(fs::path(emit_dir) / name, std::ios::binary);
                    f << text;
                }
                std::cout << "wrote " << files.size() << " table files to " << emit_dir << "\n";
                return 0;
            }
            fs::path gd = locate_golden_dir(golden_dir_flag, argv[0]);
            gd /= "nmax" + std::to_string(n_max);
            int bad = 0;
            for (const auto& [name, text] : files) bad += diff_against_golden(text, gd / name);
            return bad ? 1 : 0;
        }

        if (c_forms->parsed()) {
            Bicharacter chi;
            if (!chi_spec.empty()) {
                int h = 0, l = 0;
                if (std::sscanf(chi_spec.c_str(), "h^%d+l^%d", &h, &l) == 2) {
                } else if (std::sscanf(chi_spec.c_str(), "h^%d+l", &h) == 1 &&
                           chi_spec.find("+l") != std::string::npos) {
                    l = 1;
                } else if (std::sscanf(chi_spec.c_str(), "h^%d", &h) == 1) {
                    l = 0;
                } else if (chi_spec == "l" || chi_spec == "l^1") {
                    h = 0;
                    l = 1;
                } else if (chi_spec == "l^2") {
                    h = 0;
                    l = 2;
                } else {
                    std::cerr << "enumerate-forms: cannot parse --chi " << chi_spec << "\n";
                    return 2;
                }
                chi = direct_sum(standard_hyperbolic(h), ell_power(l));
            } else if (!cse.empty()) {
                chi = build_instance(cse, n, ell, +1, modulus).chi;
            } else {
                std::cerr << "enumerate-forms: pass --chi or --case\n";
                return 2;
            }
            Field fld = field_name == "real" ? Field::Real : Field::Complex;
            if (format == "csv") {
                write_output(forms_csv(chi, fld, modulus), out_path);
                return 0;
            }
            json out = json::array();
            for (const auto& q : enumerate_qforms(chi, fld, modulus)) out.push_back(to_json(q));
            write_output(out.dump(2) + "\n", out_path);
            return 0;
        }
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 2;
    } catch (const modulus_error& e) {
        std::cerr << "modulus: " << e.what() << " (set TYBRAID_MODULUS higher)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
