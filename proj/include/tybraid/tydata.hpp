#pragma once

// Immutable description of a Tambara-Yamagami instance: case tag, group of
// invertibles (graded in the real/complex cases), bicharacter, sign of tau.
// The magnitude of tau is derived from the case and |A| and kept exact.

#include <string>
#include <vector>

#include "tybraid/bicharacter.hpp"
#include "tybraid/cyclotomic.hpp"
#include "tybraid/group.hpp"
#include "tybraid/wall.hpp"

namespace tybraid {

enum class TYCase {
    SplitReal,
    RealQuaternionic,
    RealComplexId,
    RealComplexConj,
    SplitComplex,
    ComplexComplex,
};

inline std::string case_name(TYCase c) {
    switch (c) {
        case TYCase::SplitReal: return "split-real";
        case TYCase::RealQuaternionic: return "real-quaternionic";
        case TYCase::RealComplexId: return "real-complex-id";
        case TYCase::RealComplexConj: return "real-complex-conj";
        case TYCase::SplitComplex: return "split-complex";
        case TYCase::ComplexComplex: return "complex-complex";
    }
    throw std::logic_error("unknown case");
}

inline TYCase case_from_name(const std::string& s) {
    for (TYCase c : {TYCase::SplitReal, TYCase::RealQuaternionic, TYCase::RealComplexId,
                     TYCase::RealComplexConj, TYCase::SplitComplex, TYCase::ComplexComplex})
        if (case_name(c) == s) return c;
    throw std::invalid_argument("unknown case name: " + s);
}

inline bool is_real_complex(TYCase c) {
    return c == TYCase::RealComplexId || c == TYCase::RealComplexConj;
}

// one of the simple objects: an invertible (element of A) or m
struct Simple {
    bool is_m = false;
    F2Elem a = 0;

    static Simple m() { return Simple{true, 0}; }
    static Simple inv(F2Elem a) { return Simple{false, a}; }
};

struct TYData {
    TYCase cse = TYCase::SplitReal;
    GradedGroup group;
    Bicharacter chi;
    int tau_sign = +1;
    int modulus = kDefaultModulus;

    int dim() const { return group.dim(); }
    std::size_t order() const { return group.order(); }

    // 2-adic valuation of the case factor c in tau = sign / sqrt(c * ... )
    int tau_log2_denominator_squared() const {
        int extra = 0;
        switch (cse) {
            case TYCase::RealQuaternionic: extra = 2; break;
            case TYCase::RealComplexId:
            case TYCase::RealComplexConj: extra = 1; break;
            default: extra = 0; break;
        }
        return dim() + extra;  // tau^2 = 1 / 2^{this}
    }

    // exact tau = tau_sign / sqrt(case factor * |A|)
    CycScalar tau() const {
        int k = tau_log2_denominator_squared();
        CycScalar mag = (k % 2 == 0)
                            ? CycScalar::dyadic(1, k / 2, modulus)
                            : CycScalar::sqrt2(modulus).scaled_pow2(-(k + 1) / 2);
        return tau_sign > 0 ? mag : -mag;
    }

    friend bool operator==(const TYData& a, const TYData& b) {
        return a.cse == b.cse && a.group == b.group && a.chi == b.chi &&
               a.tau_sign == b.tau_sign && a.modulus == b.modulus;
    }
};

struct DataViolation {
    std::string code;
    std::string detail;
};

inline std::vector<DataViolation> validate(const TYData& d) {
    std::vector<DataViolation> v;
    auto flag = [&](const std::string& code, const std::string& detail) {
        v.push_back({code, detail});
    };
    if (d.chi.dim() != d.dim()) {
        flag("dim-mismatch", "bicharacter and group dimensions differ");
        return v;
    }
    if (!d.chi.is_symmetric()) flag("chi-symmetry", "Gram matrix is not symmetric");
    if (d.tau_sign != 1 && d.tau_sign != -1) flag("tau-sign", "tau sign must be +1 or -1");
    CycScalar::check_modulus(d.modulus);

    if (is_real_complex(d.cse)) {
        if (!d.group.graded()) {
            flag("grading", "real/complex case needs a nontrivial grading");
            return v;
        }
        if (d.group.degree(d.group.w) != 1) flag("w-degree", "w must have degree 1");
        // canonical layout: A0 = first dim-1 coordinates, w the last one
        if (d.group.w != (F2Elem(1) << (d.dim() - 1)) ||
            d.group.grading != (F2Elem(1) << (d.dim() - 1)))
            flag("layout", "graded group not in canonical A0 x <w> layout");
        else {
            F2Matrix sub(d.dim() - 1);
            for (int i = 0; i < d.dim() - 1; ++i)
                sub.rows[i] = d.chi.gram.rows[i] & ((1u << (d.dim() - 1)) - 1u);
            if (!Bicharacter{sub}.nondegenerate())
                flag("chi-nondegenerate", "chi restricted to A0 is degenerate");
            bool w_orth = true;
            for (F2Elem a = 0; a < d.order(); ++a)
                if (d.group.degree(a) == 0 && d.chi.pairing_bit(d.group.w, a) != 0) w_orth = false;
            if (!w_orth) flag("w-orthogonal", "chi(w, -) must vanish on A0");
            if (d.chi.pairing_bit(d.group.w, d.group.w) != 0)
                flag("w-self-pairing", "chi(w, w) must be 1 after normalization");
        }
        // the equations force chi(x, x) = 1 everywhere in the real/complex case
        if (!d.chi.diagonal_trivial())
            flag("chi-diagonal", "chi(x, x) must be 1 on all of A");
    } else {
        if (d.group.graded()) flag("grading", "only real/complex instances carry a grading");
        if (!d.chi.nondegenerate()) flag("chi-nondegenerate", "chi must be nondegenerate on A");
    }
    return v;
}

// Constructors for the instances that occur in the classification.

inline TYData make_split_real(int n, int tau_sign, int modulus = kDefaultModulus) {
    TYData d;
    d.cse = TYCase::SplitReal;
    d.group = GradedGroup(2 * n);
    d.chi = standard_hyperbolic(n);
    d.tau_sign = tau_sign;
    d.modulus = modulus;
    return d;
}

inline TYData make_real_quaternionic(int n, int tau_sign, int modulus = kDefaultModulus) {
    TYData d = make_split_real(n, tau_sign, modulus);
    d.cse = TYCase::RealQuaternionic;
    return d;
}

inline TYData make_real_complex(bool conjugating, int n, int tau_sign,
                                int modulus = kDefaultModulus) {
    TYData d;
    d.cse = conjugating ? TYCase::RealComplexConj : TYCase::RealComplexId;
    int dim = 2 * n + 1;
    d.group = GradedGroup(dim, F2Elem(1) << (dim - 1), F2Elem(1) << (dim - 1));
    d.chi = direct_sum(standard_hyperbolic(n), Bicharacter{F2Matrix(1)});  // chi(w,w) = 1
    d.tau_sign = tau_sign;
    d.modulus = modulus;
    return d;
}

// split complex with chi = h^{(n - ell)/2} + ell^ell on (Z/2)^n
inline TYData make_split_complex(int n, int ell, int tau_sign, int modulus = kDefaultModulus) {
    if (ell < 0 || ell > 2 || (n - ell) % 2 != 0 || n < ell)
        throw std::invalid_argument("make_split_complex: need ell in {0,1,2}, n = ell mod 2");
    TYData d;
    d.cse = TYCase::SplitComplex;
    d.group = GradedGroup(n);
    d.chi = direct_sum(standard_hyperbolic((n - ell) / 2), ell_power(ell));
    d.tau_sign = tau_sign;
    d.modulus = modulus;
    return d;
}

inline TYData make_complex_complex(int n, int tau_sign, int modulus = kDefaultModulus) {
    TYData d = make_split_real(n, tau_sign, modulus);
    d.cse = TYCase::ComplexComplex;
    return d;
}

// chi restricted to A0 (identity on ungraded instances)
inline Bicharacter chi_degree0(const TYData& d) {
    if (!d.group.graded()) return d.chi;
    F2Matrix sub(d.dim() - 1);
    for (int i = 0; i < d.dim() - 1; ++i)
        sub.rows[i] = d.chi.gram.rows[i] & ((1u << (d.dim() - 1)) - 1u);
    return Bicharacter{sub};
}

// Scalar coefficient of an associator component.  Invertible-only triples and
// triples with one or two m's have the component structure of the underlying
// fusion rule; the all-m triple is indexed by a pair of invertibles.
inline CycScalar associator_scalar(const TYData& d, Simple x, Simple y, Simple z,
                                   F2Elem comp_a = 0, F2Elem comp_b = 0) {
    const int ms = (x.is_m ? 1 : 0) + (y.is_m ? 1 : 0) + (z.is_m ? 1 : 0);
    auto check_elem = [&](F2Elem e) {
        if (e >= d.order()) throw std::invalid_argument("associator_scalar: bad component index");
    };
    check_elem(comp_a);
    switch (ms) {
        case 0:
        case 1: {
            if (comp_a != 0 || comp_b != 0)
                throw std::invalid_argument("associator_scalar: scalar component has no index");
            if (!x.is_m && y.is_m && !z.is_m) return d.chi.value(x.a, z.a, d.modulus);
            return CycScalar::one(d.modulus);
        }
        case 2: {
            if (comp_b != 0)
                throw std::invalid_argument("associator_scalar: one component index expected");
            if (x.is_m && !y.is_m && z.is_m) return d.chi.value(y.a, comp_a, d.modulus);
            return CycScalar::one(d.modulus);
        }
        default: {
            check_elem(comp_b);
            return d.tau() * d.chi.value(comp_a, comp_b, d.modulus).unit_inverse();
        }
    }
}

}  // namespace tybraid
