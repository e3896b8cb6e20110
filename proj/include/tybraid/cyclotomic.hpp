#pragma once

// Exact arithmetic in Z[zeta_N, 1/2] for N a power of two (default N = 16).
//
// An element is stored as sum_{j < N/2} c_j * zeta_N^j with the reduction
// zeta_N^{N/2} = -1, each c_j a dyadic rational in lowest terms.  Equality is
// syntactic on the canonical coefficient vector; there is no floating point.

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tybraid/errors.hpp"

namespace tybraid {

inline constexpr int kDefaultModulus = 16;
inline constexpr int kMaxModulus = 64;

// num / 2^exp, canonical: num == 0 => exp == 0, otherwise num odd or exp == 0.
struct Dyadic {
    long long num = 0;
    int exp = 0;

    void canonicalize() {
        if (num == 0) {
            exp = 0;
            return;
        }
        while (exp > 0 && (num & 1LL) == 0) {
            num >>= 1;
            exp -= 1;
        }
        if (exp < 0) {  // shift negative exponents back into the numerator
            num <<= -exp;
            exp = 0;
        }
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.exp == b.exp;
    }

    friend Dyadic operator+(Dyadic a, Dyadic b) {
        int e = a.exp > b.exp ? a.exp : b.exp;
        Dyadic r{(a.num << (e - a.exp)) + (b.num << (e - b.exp)), e};
        r.canonicalize();
        return r;
    }

    friend Dyadic operator*(Dyadic a, Dyadic b) {
        Dyadic r{a.num * b.num, a.exp + b.exp};
        r.canonicalize();
        return r;
    }

    Dyadic operator-() const { return Dyadic{-num, exp}; }
    bool is_zero() const { return num == 0; }
};

class CycScalar {
  public:
    explicit CycScalar(int modulus = kDefaultModulus) : n_(modulus) {
        check_modulus(modulus);
    }

    static void check_modulus(int n) {
        if (n < 4 || n > kMaxModulus || (n & (n - 1)) != 0)
            throw std::invalid_argument("modulus must be a power of two in [4, 64]");
    }

    static CycScalar zero(int n = kDefaultModulus) { return CycScalar(n); }

    static CycScalar integer(long long v, int n = kDefaultModulus) {
        CycScalar r(n);
        r.c_[0] = Dyadic{v, 0};
        return r;
    }

    static CycScalar one(int n = kDefaultModulus) { return integer(1, n); }

    static CycScalar dyadic(long long num, int exp, int n = kDefaultModulus) {
        CycScalar r(n);
        r.c_[0] = Dyadic{num, exp};
        r.c_[0].canonicalize();
        return r;
    }

    // zeta_N^j
    static CycScalar root_of_unity(int n, long long j) {
        CycScalar r(n);
        j %= n;
        if (j < 0) j += n;
        if (j < n / 2)
            r.c_[j] = Dyadic{1, 0};
        else
            r.c_[j - n / 2] = Dyadic{-1, 0};
        return r;
    }

    static CycScalar imaginary_unit(int n = kDefaultModulus) {
        return root_of_unity(n, n / 4);
    }

    // sum of counts[e] * zeta_N^e over e in [0, N)
    static CycScalar from_exponent_counts(int n, const long long* counts) {
        CycScalar r(n);
        for (int e = 0; e < n / 2; ++e) r.c_[e].num = counts[e] - counts[e + n / 2];
        for (int e = 0; e < n / 2; ++e) r.c_[e].canonicalize();
        return r;
    }

    // sqrt(2) = zeta_N^{N/8} + zeta_N^{-N/8}; needs N >= 8
    static CycScalar sqrt2(int n = kDefaultModulus) {
        if (n < 8) throw std::domain_error("sqrt(2) needs modulus >= 8");
        return root_of_unity(n, n / 8) + root_of_unity(n, -n / 8);
    }

    int modulus() const { return n_; }
    int terms() const { return n_ / 2; }
    const Dyadic& coeff(int j) const { return c_[j]; }

    void set_coeff(int j, Dyadic d) {
        d.canonicalize();
        c_[j] = d;
    }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
        a.require_same_modulus(b);
        CycScalar r(a.n_);
        for (int j = 0; j < a.terms(); ++j) r.c_[j] = a.c_[j] + b.c_[j];
        return r;
    }

    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) {
        return a + (-b);
    }

    CycScalar operator-() const {
        CycScalar r(n_);
        for (int j = 0; j < terms(); ++j) r.c_[j] = -c_[j];
        return r;
    }

    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        a.require_same_modulus(b);
        const int h = a.terms();
        CycScalar r(a.n_);
        for (int j = 0; j < h; ++j) {
            if (a.c_[j].is_zero()) continue;
            for (int k = 0; k < h; ++k) {
                if (b.c_[k].is_zero()) continue;
                Dyadic p = a.c_[j] * b.c_[k];
                int e = j + k;
                if (e >= h) {  // zeta^{N/2} = -1
                    e -= h;
                    p = -p;
                }
                r.c_[e] = r.c_[e] + p;
            }
        }
        return r;
    }

    CycScalar& operator+=(const CycScalar& b) { return *this = *this + b; }
    CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }

    // zeta |-> zeta^{-1} coefficientwise
    CycScalar conjugate() const {
        const int h = terms();
        CycScalar r(n_);
        r.c_[0] = c_[0];
        for (int j = 1; j < h; ++j) r.c_[h - j] = r.c_[h - j] + (-c_[j]);
        return r;
    }

    CycScalar pow(long long e) const {
        CycScalar acc = one(n_);
        CycScalar base = *this;
        if (e < 0) {
            base = base.unit_inverse();
            e = -e;
        }
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // multiply by 2^k, k may be negative
    CycScalar scaled_pow2(int k) const {
        CycScalar r(n_);
        for (int j = 0; j < terms(); ++j) {
            Dyadic d = c_[j];
            if (k >= 0)
                d.num <<= k;
            else
                d.exp += -k;
            d.canonicalize();
            r.c_[j] = d;
        }
        return r;
    }

    bool is_zero() const {
        for (int j = 0; j < terms(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }

    bool is_real() const { return conjugate() == *this; }
    bool is_one() const { return *this == one(n_); }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        if (a.n_ != b.n_) return false;
        for (int j = 0; j < a.terms(); ++j)
            if (!(a.c_[j] == b.c_[j])) return false;
        return true;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    // j such that *this == zeta_N^j, if the value is a root of unity
    std::optional<int> unit_exponent() const {
        int found = -1;
        for (int j = 0; j < terms(); ++j) {
            if (c_[j].is_zero()) continue;
            if (found >= 0) return std::nullopt;
            found = j;
        }
        if (found < 0) return std::nullopt;
        const Dyadic& d = c_[found];
        if (d.exp != 0) return std::nullopt;
        if (d.num == 1) return found;
        if (d.num == -1) return found + terms();
        return std::nullopt;
    }

    CycScalar unit_inverse() const {
        auto e = unit_exponent();
        if (!e) throw std::domain_error("unit_inverse: value is not a root of unity");
        return root_of_unity(n_, -*e);
    }

    // decompose as zeta_N^j * sqrt(2)^alpha when of that shape
    struct UnitSqrt2 {
        int unit_exp;    // j
        int sqrt2_exp;   // alpha (may be negative)
    };
    std::optional<UnitSqrt2> unit_sqrt2_form() const;

    // total ordering for deterministic containers
    friend bool operator<(const CycScalar& a, const CycScalar& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (int j = 0; j < a.terms(); ++j) {
            if (a.c_[j].num != b.c_[j].num) return a.c_[j].num < b.c_[j].num;
            if (a.c_[j].exp != b.c_[j].exp) return a.c_[j].exp < b.c_[j].exp;
        }
        return false;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int j = 0; j < terms(); ++j) {
            if (c_[j].is_zero()) continue;
            if (!first) os << (c_[j].num > 0 ? " + " : " - ");
            else if (c_[j].num < 0) os << "-";
            long long an = c_[j].num < 0 ? -c_[j].num : c_[j].num;
            if (an != 1 || j == 0) os << an;
            if (c_[j].exp > 0) os << "/2^" << c_[j].exp;
            if (j > 0) {
                if (an != 1) os << "*";
                os << "z" << n_;
                if (j > 1) os << "^" << j;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

  private:
    void require_same_modulus(const CycScalar& o) const {
        if (n_ != o.n_) throw std::invalid_argument("cyclotomic modulus mismatch");
    }

    int n_;
    std::array<Dyadic, kMaxModulus / 2> c_{};
};

inline std::optional<CycScalar::UnitSqrt2> CycScalar::unit_sqrt2_form() const {
    if (is_zero()) return std::nullopt;
    // |x|^2 = x * conj(x) must be 2^alpha
    CycScalar norm = *this * conjugate();
    for (int j = 1; j < terms(); ++j)
        if (!norm.coeff(j).is_zero()) return std::nullopt;
    Dyadic d = norm.coeff(0);
    if (d.num <= 0) return std::nullopt;
    if ((d.num & (d.num - 1)) != 0) return std::nullopt;
    int log_num = 0;
    while ((d.num >> log_num) > 1) ++log_num;
    int alpha = log_num - d.exp;  // |x|^2 = 2^alpha
    // strip the magnitude, leaving a root of unity
    CycScalar u = *this;
    int q = alpha >= 0 ? alpha / 2 : -((-alpha + 1) / 2);
    int r = alpha - 2 * q;  // r in {0, 1}
    u = u.scaled_pow2(-q);
    if (r != 0) u = u * sqrt2(n_).scaled_pow2(-1);  // divide by sqrt(2)
    auto e = u.unit_exponent();
    if (!e) return std::nullopt;
    return UnitSqrt2{*e, alpha};
}

// Square roots of x representable with the same modulus.  x must be a unit
// times a power of sqrt(2); returns the two roots {r, -r} or an empty vector
// when the representation would need a finer modulus.
inline std::vector<CycScalar> sqrt_candidates(const CycScalar& x) {
    auto form = x.unit_sqrt2_form();
    if (!form) throw std::domain_error("sqrt_candidates: not of unit * sqrt(2)-power form");
    if (form->sqrt2_exp % 2 != 0) return {};   // would need 2^{1/4}
    if (form->unit_exp % 2 != 0) return {};    // would need modulus 2N
    int beta = form->sqrt2_exp / 2;
    CycScalar r = CycScalar::root_of_unity(x.modulus(), form->unit_exp / 2);
    int q = beta >= 0 ? beta / 2 : -((-beta + 1) / 2);
    int rem = beta - 2 * q;
    r = r.scaled_pow2(q);
    if (rem != 0) r = r * CycScalar::sqrt2(x.modulus());
    return {r, -r};
}

// Of the two roots returned by sqrt_candidates, the one whose unit part has
// exponent in [0, N/2); used to give the sign label epsilon a fixed meaning.
inline CycScalar principal_root(const std::vector<CycScalar>& roots) {
    if (roots.size() != 2) throw std::domain_error("principal_root: expected two roots");
    auto f0 = roots[0].unit_sqrt2_form();
    if (!f0) throw std::domain_error("principal_root: roots are not unit*sqrt2-power");
    return (f0->unit_exp % roots[0].modulus()) < roots[0].modulus() / 2 ? roots[0] : roots[1];
}

}  // namespace tybraid
