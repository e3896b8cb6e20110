#pragma once

// Braided-equivalence classification for the non-crossed cases, through the
// representative monoidal functors of each case:
//   split real       F(f)                f in Aut(A, chi)
//   quaternionic     F(f, kappa)         kappa in {+-1}
//   real/complex     F(f, xi, lambda)    xi Galois, lambda in {1, i} (g = id)
//                                        or {+-1} (g = conj)
//   split complex    F(f)
// The braided-equivalence criteria: f.sigma = sigma' and epsilon = epsilon'
// in the split and quaternionic cases; f.sigma|A0 = sigma'|A0,
// sigma'(w) = lambda^2 sigma(w), sigma3'(1) = xi(sigma3(1)) in real/complex.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tybraid/aut.hpp"
#include "tybraid/braiding.hpp"
#include "tybraid/qform.hpp"

namespace tybraid {

enum class Galois { Id, Conj };

struct EquivFunctor {
    TYCase cse = TYCase::SplitReal;
    F2Matrix f;
    Galois xi = Galois::Id;
    int lambda_exp = 0;  // lambda = zeta_N^{lambda_exp}, a 4th root of unity
    int kappa = +1;

    friend EquivFunctor compose(const EquivFunctor& a, const EquivFunctor& b) {
        // F(f, xi, lambda) o F(f', xi', lambda') = F(ff', xi xi', lambda xi(lambda'))
        EquivFunctor c;
        c.cse = a.cse;
        c.f = a.f * b.f;
        c.xi = (a.xi == b.xi) ? Galois::Id : Galois::Conj;
        int lb = (a.xi == Galois::Conj) ? -b.lambda_exp : b.lambda_exp;
        c.lambda_exp = a.lambda_exp + lb;
        c.kappa = a.kappa * b.kappa;
        return c;
    }
};

// functor validity for the instance: f preserves chi (and w in graded cases),
// lambda restricted to the case's representative set
inline bool functor_valid(const EquivFunctor& F, const TYData& d) {
    if (F.cse != d.cse) return false;
    if (!F.f.is_invertible()) return false;
    for (int i = 0; i < d.dim(); ++i)
        for (int j = 0; j < d.dim(); ++j) {
            F2Elem a = 1u << i, b = 1u << j;
            if (d.chi.pairing_bit(F.f.apply(a), F.f.apply(b)) != d.chi.pairing_bit(a, b))
                return false;
        }
    if (d.group.graded() && F.f.apply(d.group.w) != d.group.w) return false;
    const int n = d.modulus;
    int l = ((F.lambda_exp % n) + n) % n;
    switch (d.cse) {
        case TYCase::SplitReal:
        case TYCase::SplitComplex:
            return l == 0 && F.xi == Galois::Id && F.kappa == 1;
        case TYCase::RealQuaternionic:
            return l == 0 && F.xi == Galois::Id;
        case TYCase::RealComplexId:
            return l == 0 || l == n / 4;  // representatives lambda in {1, i}
        case TYCase::RealComplexConj:
            return l == 0 || l == n / 2;  // lambda real
        default:
            return false;
    }
}

// act on the full sigma table by an automorphism fixing w (graded case)
inline std::vector<std::uint16_t> act_on_table(const F2Matrix& f,
                                               const std::vector<std::uint16_t>& table) {
    auto finv = f.inverse();
    if (!finv) throw std::domain_error("act_on_table: not invertible");
    std::vector<std::uint16_t> out(table.size());
    for (F2Elem x = 0; x < table.size(); ++x) out[x] = table[finv->apply(x)];
    return out;
}

// transport of a braiding along a representative functor
inline Braiding apply_functor(const EquivFunctor& F, const Braiding& b) {
    if (!functor_valid(F, b.data)) throw std::domain_error("apply_functor: invalid functor");
    const TYData& d = b.data;
    const int n = d.modulus;
    QForm sigma = b.sigma_form();
    sigma.expo = act_on_table(F.f, sigma.expo);
    if (is_real_complex(d.cse)) {
        // sigma'(w) = lambda^2 sigma(w), propagated over the whole w-coset
        int shift = (2 * F.lambda_exp) % n;
        for (F2Elem x = 0; x < d.order(); ++x)
            if (d.group.degree(x) == 1)
                sigma.expo[x] = static_cast<std::uint16_t>((sigma.expo[x] + shift + n) % n);
    }
    int e3 = b.s3[0];
    if (F.xi == Galois::Conj) e3 = (n - e3 % n) % n;
    return assemble_braiding(d, sigma, CycScalar::root_of_unity(n, e3), 0);
}

inline bool is_braided_equivalence(const EquivFunctor& F, const Braiding& b,
                                   const Braiding& b2) {
    if (!(b.data == b2.data))
        throw std::invalid_argument("is_braided_equivalence: instances differ");
    if (!functor_valid(F, b.data)) return false;
    Braiding image = apply_functor(F, b);
    return image.s1 == b2.s1 && image.s2 == b2.s2 && image.s3 == b2.s3 && image.s0 == b2.s0;
}

// representative functors for an instance (complete by the pi0 lemmas);
// feasible for small dimensions only
inline std::vector<EquivFunctor> representative_functors(const TYData& d) {
    std::vector<EquivFunctor> out;
    std::vector<F2Matrix> auts = d.group.graded() ? enumerate_aut(d.chi, d.group)
                                                  : enumerate_aut(d.chi);
    const int n = d.modulus;
    auto push = [&](const F2Matrix& f, Galois xi, int le, int kappa) {
        EquivFunctor F;
        F.cse = d.cse;
        F.f = f;
        F.xi = xi;
        F.lambda_exp = le;
        F.kappa = kappa;
        out.push_back(F);
    };
    for (const auto& f : auts) {
        switch (d.cse) {
            case TYCase::SplitReal:
            case TYCase::SplitComplex:
                push(f, Galois::Id, 0, 1);
                break;
            case TYCase::RealQuaternionic:
                push(f, Galois::Id, 0, +1);
                push(f, Galois::Id, 0, -1);
                break;
            case TYCase::RealComplexId:
                for (Galois xi : {Galois::Id, Galois::Conj})
                    for (int le : {0, n / 4}) push(f, xi, le, 1);
                break;
            case TYCase::RealComplexConj:
                for (Galois xi : {Galois::Id, Galois::Conj})
                    for (int le : {0, n / 2}) push(f, xi, le, 1);
                break;
            default:
                throw std::invalid_argument("representative_functors: crossed case");
        }
    }
    return out;
}

// search for an explicit witness among representative functors
inline std::optional<EquivFunctor> find_equivalence(const Braiding& b, const Braiding& b2) {
    for (const EquivFunctor& F : representative_functors(b.data))
        if (is_braided_equivalence(F, b, b2)) return F;
    return std::nullopt;
}

// ---- classification -----------------------------------------------------

struct ClassInvariants {
    std::optional<int> sign_sigma;      // sign of sigma (restricted to A0 when graded)
    std::optional<int> epsilon;         // present iff constant on the class
    std::optional<int> sigma_w_sign;    // present iff defined and constant
    std::vector<std::string> sigma3_1;  // the sigma3(1) values occurring, sorted
};

struct BraidClass {
    std::size_t representative = 0;      // index into braidings
    std::vector<std::size_t> members;
    ClassInvariants invariants;
};

struct Classification {
    TYData data;
    std::vector<Braiding> braidings;
    std::vector<BraidClass> classes;
};

// generator moves for the orbit walk over braidings
inline std::vector<EquivFunctor> classification_generators(const TYData& d) {
    std::vector<EquivFunctor> gens;
    const int n = d.modulus;
    auto ident = [&] {
        EquivFunctor F;
        F.cse = d.cse;
        F.f = F2Matrix::identity(d.dim());
        return F;
    };
    std::vector<F2Matrix> fgens;
    if (d.group.graded()) {
        // generators of Aut(A0, chi0) extended by the identity on w
        Bicharacter chi0 = chi_degree0(d);
        for (const auto& g0 : aut_generating_set(chi0)) {
            F2Matrix g(d.dim());
            for (int i = 0; i < d.dim() - 1; ++i) g.rows[i] = g0.rows[i];
            g.rows[d.dim() - 1] = F2Elem(1) << (d.dim() - 1);
            fgens.push_back(g);
        }
    } else {
        fgens = aut_generating_set(d.chi);
    }
    for (const auto& f : fgens) {
        EquivFunctor F = ident();
        F.f = f;
        gens.push_back(F);
    }
    if (is_real_complex(d.cse)) {
        EquivFunctor conj = ident();
        conj.xi = Galois::Conj;
        gens.push_back(conj);
        if (d.cse == TYCase::RealComplexId) {
            EquivFunctor lam = ident();
            lam.lambda_exp = n / 4;
            gens.push_back(lam);
        }
    }
    return gens;
}

inline Classification classify(const TYData& d) {
    Classification out;
    out.data = d;
    out.braidings = solve_braidings(d);
    const std::size_t count = out.braidings.size();
    if (count == 0) return out;

    std::map<std::vector<std::uint16_t>, std::size_t> index;  // key: s1 then s3
    auto key = [&](const Braiding& b) {
        std::vector<std::uint16_t> k = b.s1;
        k.insert(k.end(), b.s3.begin(), b.s3.end());
        return k;
    };
    for (std::size_t i = 0; i < count; ++i) index[key(out.braidings[i])] = i;

    std::vector<EquivFunctor> gens = classification_generators(d);
    std::vector<std::size_t> cls(count, count);
    for (std::size_t seed = 0; seed < count; ++seed) {
        if (cls[seed] != count) continue;
        std::vector<std::size_t> queue{seed};
        cls[seed] = seed;
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            for (const EquivFunctor& F : gens) {
                Braiding img = apply_functor(F, out.braidings[cur]);
                auto it = index.find(key(img));
                if (it == index.end())
                    throw std::logic_error("classify: functor image is not a braiding");
                if (cls[it->second] == count) {
                    cls[it->second] = seed;
                    queue.push_back(it->second);
                }
            }
        }
    }

    for (std::size_t seed = 0; seed < count; ++seed) {
        if (cls[seed] != seed) continue;
        BraidClass c;
        c.representative = seed;
        for (std::size_t j = 0; j < count; ++j)
            if (cls[j] == seed) c.members.push_back(j);
        // invariants across the class
        std::set<int> signs, eps, wsigns;
        std::set<std::string> s31;
        for (std::size_t j : c.members) {
            const Braiding& b = out.braidings[j];
            if (auto s = b.try_sign_sigma()) signs.insert(*s);
            eps.insert(b.epsilon);
            if (auto we = b.sigma_w_exponent())
                wsigns.insert(*we == 0 ? +1 : -1);
            s31.insert(b.sigma3(0).str());
        }
        if (signs.size() == 1) c.invariants.sign_sigma = *signs.begin();
        if (eps.size() == 1) c.invariants.epsilon = *eps.begin();
        if (wsigns.size() == 1) c.invariants.sigma_w_sign = *wsigns.begin();
        c.invariants.sigma3_1.assign(s31.begin(), s31.end());
        out.classes.push_back(std::move(c));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const BraidClass& a, const BraidClass& b) {
                  return a.representative < b.representative;
              });
    return out;
}

// ---- pi0 of the braided autoequivalences --------------------------------

struct Pi0Result {
    unsigned long long order = 0;          // direct count over representatives
    unsigned long long formula_order = 0;  // stabilizer formula counterpart
};

inline Pi0Result pi0_aut_br(const Braiding& b) {
    const TYData& d = b.data;
    Pi0Result r;
    // direct count: representative functors fixing the braiding
    Bicharacter chi0 = chi_degree0(d);
    if (chi0.dim() > 8) throw capacity_error("pi0_aut_br: dimension above bound");
    QForm sigma = b.sigma_form();
    unsigned long long stab = 0;
    if (d.group.graded()) {
        for (const auto& f : enumerate_aut(d.chi, d.group))
            if (act(f, sigma) == sigma) ++stab;
    } else {
        for (const auto& f : enumerate_aut(d.chi))
            if (act(f, sigma) == sigma) ++stab;
    }
    const bool s31_real = b.sigma3(0).is_real();
    switch (d.cse) {
        case TYCase::SplitReal:
        case TYCase::SplitComplex:
            r.order = stab;
            break;
        case TYCase::RealQuaternionic:
            r.order = stab * 2;  // kappa
            break;
        case TYCase::RealComplexId:
            // lambda = i never fixes sigma(w); xi = conj fixes sigma3(1) iff real
            r.order = stab * (s31_real ? 2 : 1);
            break;
        case TYCase::RealComplexConj:
            r.order = stab * 4;  // xi and lambda = -1 both act trivially
            break;
        default:
            throw std::invalid_argument("pi0_aut_br: crossed case");
    }
    // formula side, defined when sigma has a sign on the degree-0 part and
    // chi0 is a hyperbolic power
    if (chi0.diagonal_trivial()) {
        int sgn = b.sign_sigma();
        unsigned long long h = stabilizer_order_formula(chi0.dim() / 2, sgn);
        switch (d.cse) {
            case TYCase::SplitReal:
            case TYCase::SplitComplex: r.formula_order = h; break;
            case TYCase::RealQuaternionic: r.formula_order = 2 * h; break;
            case TYCase::RealComplexId: r.formula_order = h * (s31_real ? 2 : 1); break;
            case TYCase::RealComplexConj: r.formula_order = 4 * h; break;
            default: break;
        }
    }
    return r;
}

}  // namespace tybraid
