#pragma once

// JSON encodings.  CycScalar round-trips bit-exactly; Braiding serializes the
// defining data (sigma1, epsilon, sigma3(1)) plus derived invariants and is
// reconstructed through the same assembly path used by the solver.

#include "json.hpp"  // vendored nlohmann/json

#include "tybraid/braiding.hpp"
#include "tybraid/classifier.hpp"
#include "tybraid/crossed.hpp"
#include "tybraid/qform.hpp"
#include "tybraid/tydata.hpp"

namespace tybraid {

using json = nlohmann::json;

inline json to_json(const CycScalar& x) {
    json coeffs = json::array();
    for (int j = 0; j < x.terms(); ++j)
        coeffs.push_back(json::array({x.coeff(j).num, x.coeff(j).exp}));
    return json{{"N", x.modulus()}, {"coeffs", coeffs}};
}

inline CycScalar cyc_from_json(const json& j) {
    int n = j.at("N").get<int>();
    CycScalar x(n);
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != n / 2)
        throw std::invalid_argument("CycScalar: expected N/2 coefficients");
    for (int k = 0; k < n / 2; ++k)
        x.set_coeff(k, Dyadic{coeffs[k][0].get<long long>(), coeffs[k][1].get<int>()});
    return x;
}

inline json to_json(const Bicharacter& chi) {
    json rows = json::array();
    for (int i = 0; i < chi.dim(); ++i)
        rows.push_back(bits_to_string(chi.gram.rows[i], chi.dim()));
    return json{{"dim", chi.dim()}, {"gram_rows", rows}};
}

inline Bicharacter bicharacter_from_json(const json& j) {
    int d = j.at("dim").get<int>();
    F2Matrix m(d);
    const auto& rows = j.at("gram_rows");
    for (int i = 0; i < d; ++i) m.rows[i] = bits_from_string(rows[i].get<std::string>());
    return Bicharacter{m};
}

inline json to_json(const GradedGroup& g) {
    json j{{"dim", g.dim()}};
    if (g.graded()) {
        j["grading"] = bits_to_string(g.grading, g.dim());
        j["w"] = bits_to_string(g.w, g.dim());
    }
    return j;
}

inline GradedGroup graded_group_from_json(const json& j) {
    GradedGroup g(j.at("dim").get<int>());
    if (j.contains("grading")) g.grading = bits_from_string(j["grading"].get<std::string>());
    if (j.contains("w")) g.w = bits_from_string(j["w"].get<std::string>());
    return g;
}

inline json to_json(const QForm& q) {
    return json{{"chi", to_json(q.chi)}, {"N", q.modulus}, {"exponents", q.expo}};
}

inline QForm qform_from_json(const json& j) {
    QForm q;
    q.chi = bicharacter_from_json(j.at("chi"));
    q.modulus = j.value("N", kDefaultModulus);
    q.expo = j.at("exponents").get<std::vector<std::uint16_t>>();
    if (q.expo.size() != (std::size_t(1) << q.chi.dim()))
        throw std::invalid_argument("QForm: exponent table size mismatch");
    return q;
}

inline json to_json(const TYData& d) {
    return json{{"case", case_name(d.cse)},
                {"group", to_json(d.group)},
                {"chi", to_json(d.chi)},
                {"tau_sign", d.tau_sign},
                {"N", d.modulus}};
}

inline TYData tydata_from_json(const json& j) {
    TYData d;
    d.cse = case_from_name(j.at("case").get<std::string>());
    d.group = graded_group_from_json(j.at("group"));
    d.chi = bicharacter_from_json(j.at("chi"));
    d.tau_sign = j.at("tau_sign").get<int>();
    d.modulus = j.value("N", kDefaultModulus);
    return d;
}

inline json invariants_to_json(const Braiding& b) {
    auto inv = double_braiding_invariants(b);
    json transparent = json::array();
    for (F2Elem a : inv.transparent_invertibles) transparent.push_back(a);
    if (inv.m_transparent) transparent.push_back("m");
    json out{{"symmetric", inv.symmetric},
             {"nondegenerate", inv.nondegenerate},
             {"transparent", transparent}};
    if (auto s = b.try_sign_sigma())
        out["sgn_sigma"] = *s;
    else
        out["sgn_sigma"] = nullptr;
    return out;
}

inline json to_json(const Braiding& b) {
    return json{{"data", to_json(b.data)},
                {"sigma1_exponents", b.s1},
                {"epsilon", b.epsilon},
                {"sigma3_1", to_json(b.sigma3(0))},
                {"invariants", invariants_to_json(b)}};
}

inline Braiding braiding_from_json(const json& j) {
    TYData d = tydata_from_json(j.at("data"));
    QForm sigma;
    sigma.chi = d.chi;
    sigma.modulus = d.modulus;
    sigma.expo = j.at("sigma1_exponents").get<std::vector<std::uint16_t>>();
    CycScalar s31 = cyc_from_json(j.at("sigma3_1"));
    return assemble_braiding(d, sigma, s31, j.at("epsilon").get<int>());
}

inline json to_json(const CrossedBraiding& cb) {
    json j{{"data", to_json(cb.data)},
           {"sigma1_exponents", cb.s1},
           {"epsilon", cb.epsilon},
           {"sigma3_1", to_json(CycScalar::root_of_unity(cb.modulus(), cb.s3[0]))},
           {"kappa", cb.kappa},
           {"gamma_m", cb.gamma_m_exp == 0 ? +1 : -1}};
    return j;
}

inline CrossedBraiding crossed_from_json(const json& j) {
    TYData d = tydata_from_json(j.at("data"));
    const int n = d.modulus;
    const std::size_t m = d.order();
    CrossedBraiding cb;
    cb.data = d;
    cb.s1 = j.at("sigma1_exponents").get<std::vector<std::uint16_t>>();
    cb.s2 = cb.s1;
    cb.kappa = j.at("kappa").get<int>();
    cb.gamma_m_exp = j.at("gamma_m").get<int>() > 0 ? 0 : n / 2;
    cb.epsilon = j.at("epsilon").get<int>();
    CycScalar s31 = cyc_from_json(j.at("sigma3_1"));
    auto e3 = s31.unit_exponent();
    if (!e3) throw std::invalid_argument("CrossedBraiding: sigma3(1) must be a unit");
    cb.s0.resize(m * m);
    cb.s3.resize(m);
    for (F2Elem a = 0; a < m; ++a)
        for (F2Elem c = 0; c < m; ++c)
            cb.s0[std::size_t(a) * m + c] = d.chi.pairing_bit(a, c) ? n / 2 : 0;
    for (F2Elem a = 0; a < m; ++a)
        cb.s3[a] = static_cast<std::uint16_t>((*e3 + cb.s1[a]) % n);
    return cb;
}

inline json to_json(const EqViolation& v) {
    return json{{"eq", v.eq}, {"at", v.at}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}};
}

inline json to_json(const Classification& c) {
    json classes = json::array();
    json pi0 = json::array();
    for (const auto& cls : c.classes) {
        json inv;
        inv["sgn_sigma"] =
            cls.invariants.sign_sigma ? json(*cls.invariants.sign_sigma) : json(nullptr);
        inv["epsilon"] = cls.invariants.epsilon ? json(*cls.invariants.epsilon) : json(nullptr);
        inv["sigma_w"] =
            cls.invariants.sigma_w_sign ? json(*cls.invariants.sigma_w_sign) : json(nullptr);
        inv["sigma3_1"] = cls.invariants.sigma3_1;
        classes.push_back(json{{"size", cls.members.size()},
                               {"invariants", inv},
                               {"representative", to_json(c.braidings[cls.representative])}});
        pi0.push_back(pi0_aut_br(c.braidings[cls.representative]).order);
    }
    return json{{"data", to_json(c.data)}, {"classes", classes}, {"pi0_aut_br_orders", pi0}};
}

inline json to_json(const CrossedClassification& c) {
    json classes = json::array();
    json pi0 = json::array();
    for (const auto& cls : c.classes) {
        classes.push_back(json{{"size", cls.members.size()},
                               {"invariants", json{{"sgn_sigma", cls.sign_sigma}}},
                               {"representative", to_json(c.braidings[cls.members.front()])}});
        pi0.push_back(cls.pi0_order);
    }
    json strong = json::array();
    for (auto [i, j] : c.strong_pairs) strong.push_back(json::array({i, j}));
    json out{{"classes", classes}, {"pi0_aut_br_orders", pi0}, {"strong_equivalences", strong}};
    if (c.empty_reason) out["empty_reason"] = *c.empty_reason;
    return out;
}

}  // namespace tybraid
