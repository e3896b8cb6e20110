#pragma once

// Renderers for the computed tables: markdown (mirroring the published column
// order), csv, and json.  All output is deterministic.

#include <sstream>
#include <string>
#include <vector>

#include "tybraid/serialize.hpp"
#include "tybraid/tables.hpp"

namespace tybraid {

enum class ReportFormat { Json, Csv, Markdown };

inline ReportFormat format_from_name(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "markdown") return ReportFormat::Markdown;
    throw std::invalid_argument("unknown format: " + s);
}

inline std::string per_orbit_cell(const Table1Column& c) {
    if (!c.per_orbit_varies) return std::to_string(c.per_orbit_uniform);
    std::ostringstream os;
    os << "Varies";
    return os.str();
}

inline std::string yes_no(bool b) { return b ? "Yes" : "No"; }

// table 1 in the published layout: one column per case
inline std::string render_table1_markdown(const std::vector<Table1Column>& cols,
                                          int n_min, int n_max) {
    std::ostringstream os;
    os << "# Classification counts (verified for n = " << n_min << ".." << n_max << ")\n\n";
    os << "| Case:";
    for (const auto& c : cols) os << " | " << c.label;
    os << " |\n|---";
    for (std::size_t i = 0; i < cols.size(); ++i) os << "|---";
    os << "|\n";
    os << "| chi-admissible orbits";
    for (const auto& c : cols) os << " | " << c.orbit_count;
    os << " |\n| Orbits extending to braidings";
    for (const auto& c : cols) os << " | " << c.orbits_extending;
    os << " |\n| Braidings per orbit";
    for (const auto& c : cols) os << " | " << per_orbit_cell(c);
    os << " |\n| Total braidings";
    for (const auto& c : cols) os << " | " << c.total_classes;
    os << " |\n| Is tau an invariant?";
    for (const auto& c : cols) os << " | " << yes_no(c.tau_invariant);
    os << " |\n| Is sigma3(1) an invariant?";
    for (const auto& c : cols) os << " | " << yes_no(c.sigma31_invariant);
    os << " |\n\n";
    os << "Per-orbit class counts where the table says \"Varies\":\n\n";
    for (const auto& c : cols)
        if (c.per_orbit_varies)
            os << "- " << c.label << ": " << c.per_orbit_sign_matched
               << " classes on the orbit with sgn(sigma) = sgn(tau), "
               << c.per_orbit_sign_opposed << " on the orbit with sgn(sigma) = -sgn(tau)\n";
    os << "\nSmall-rank exceptions:\n\n";
    for (const auto& c : cols)
        for (const auto& e : c.exceptions) os << "- " << c.label << ": " << e << "\n";
    return os.str();
}

inline std::string render_split_complex_markdown(const std::vector<SplitComplexColumn>& cols) {
    std::ostringstream os;
    os << "# Split complex counts by multiplicity of l\n\n";
    os << "| |l|:";
    for (const auto& c : cols) os << " | " << c.ell;
    os << " |\n|---";
    for (std::size_t i = 0; i < cols.size(); ++i) os << "|---";
    os << "|\n| chi-admissible orbits";
    for (const auto& c : cols) os << " | " << c.orbit_count;
    os << " |\n| Braidings per orbit";
    for (const auto& c : cols) os << " | " << c.per_orbit;
    os << " |\n| Total braidings";
    for (const auto& c : cols) os << " | " << c.total_classes;
    os << " |\n\nSmall-rank exceptions:\n\n";
    for (const auto& c : cols)
        for (const auto& e : c.exceptions) os << "- |l| = " << c.ell << ": " << e << "\n";
    return os.str();
}

inline std::string render_table2_markdown(const std::vector<Table2Row>& rows,
                                          const std::vector<Table2Row>& published,
                                          int n_max) {
    std::ostringstream os;
    os << "# Symmetry and nondegeneracy (computed for n = 0.." << n_max << ")\n\n";
    os << "| Case | Symmetric? | Nondegenerate? |\n|---|---|---|\n";
    for (const auto& r : rows)
        os << "| " << r.label << " | " << r.symmetric << " | " << r.nondegenerate << " |\n";
    bool any_dev = false;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].symmetric != published[i].symmetric ||
            rows[i].nondegenerate != published[i].nondegenerate)
            any_dev = true;
    if (any_dev) {
        os << "\nDeviations from the commonly tabulated verdicts (the engine reports what\n"
              "the double-braiding scalars give; see README for the analysis):\n\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].symmetric != published[i].symmetric)
                os << "- " << rows[i].label << ": symmetric computed \"" << rows[i].symmetric
                   << "\", tabulated \"" << published[i].symmetric << "\"\n";
            if (rows[i].nondegenerate != published[i].nondegenerate)
                os << "- " << rows[i].label << ": nondegenerate computed \""
                   << rows[i].nondegenerate << "\", tabulated \"" << published[i].nondegenerate
                   << "\"\n";
        }
    }
    return os.str();
}

inline std::string render_gauss_markdown(const GaussTable& t) {
    std::ostringstream os;
    os << "# Gauss sums of sigma(kappa, e1, e2) at n = " << t.n << "\n\n";
    os << "| (kappa, e1, e2)";
    for (const auto& e : t.entries) os << " | " << e.label;
    os << " |\n|---";
    for (std::size_t i = 0; i < t.entries.size(); ++i) os << "|---";
    os << "|\n| Gauss sum";
    for (const auto& e : t.entries) os << " | " << e.rendered;
    os << " |\n\nExchange automorphism swaps (---) with (+++) and (+--) with (-++), fixing\n";
    os << "the classes of (+-+) and (--+): " << (t.exchange_verified ? "verified" : "FAILED")
       << "\n";
    return os.str();
}

// csv renderers for the count tables

inline std::string render_table1_csv(const std::vector<Table1Column>& cols) {
    std::ostringstream os;
    os << "row";
    for (const auto& c : cols) os << "," << c.label;
    os << "\norbits";
    for (const auto& c : cols) os << "," << c.orbit_count;
    os << "\norbits_extending";
    for (const auto& c : cols) os << "," << c.orbits_extending;
    os << "\nbraidings_per_orbit";
    for (const auto& c : cols) os << "," << per_orbit_cell(c);
    os << "\ntotal_braidings";
    for (const auto& c : cols) os << "," << c.total_classes;
    os << "\ntau_invariant";
    for (const auto& c : cols) os << "," << yes_no(c.tau_invariant);
    os << "\nsigma3_1_invariant";
    for (const auto& c : cols) os << "," << yes_no(c.sigma31_invariant);
    os << "\n";
    return os.str();
}

inline json table1_to_json(const std::vector<Table1Column>& cols) {
    json out = json::array();
    for (const auto& c : cols) {
        json j{{"case", c.label},
               {"orbits", c.orbit_count},
               {"orbits_extending", c.orbits_extending},
               {"total_braidings", c.total_classes},
               {"tau_invariant", c.tau_invariant},
               {"sigma3_1_invariant", c.sigma31_invariant}};
        if (c.per_orbit_varies)
            j["braidings_per_orbit"] =
                json{{"sign_matched", c.per_orbit_sign_matched},
                     {"sign_opposed", c.per_orbit_sign_opposed}};
        else
            j["braidings_per_orbit"] = c.per_orbit_uniform;
        j["exceptions"] = c.exceptions;
        out.push_back(j);
    }
    return out;
}

// csv for enumerate-forms
inline std::string forms_csv(const Bicharacter& chi, Field field, int modulus) {
    auto forms = enumerate_qforms(chi, field, modulus);
    std::vector<Orbit> orbits;
    if (!forms.empty()) orbits = orbits_and_stabilizers(chi, forms);
    std::ostringstream os;
    os << "index,basis_exponents,gauss_sum,sign,orbit,stabilizer_order\n";
    for (std::size_t i = 0; i < forms.size(); ++i) {
        os << i << ",\"";
        for (std::size_t k = 0; k < forms[i].basis_expo.size(); ++k)
            os << (k ? " " : "") << forms[i].basis_expo[k];
        os << "\"," << gauss_sum(forms[i]).str() << ",";
        try {
            os << sign(forms[i]);
        } catch (const std::domain_error&) {
            os << "n/a";
        }
        std::size_t oi = 0;
        unsigned long long stab = 0;
        for (std::size_t k = 0; k < orbits.size(); ++k)
            if (std::find(orbits[k].members.begin(), orbits[k].members.end(), i) !=
                orbits[k].members.end()) {
                oi = k;
                stab = orbits[k].stabilizer_order;
            }
        os << "," << oi << "," << stab << "\n";
    }
    return os.str();
}

}  // namespace tybraid
