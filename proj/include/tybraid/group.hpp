#pragma once

// Elementary abelian 2-groups as bit-vector index sets, plus the graded
// variant A = A0 x <w> used when a Z/2-grading (Galois degree) is present.

#include <cstdint>
#include <stdexcept>

#include "tybraid/bicharacter.hpp"
#include "tybraid/f2.hpp"

namespace tybraid {

struct F2Group {
    int dim = 0;

    F2Group() = default;
    explicit F2Group(int d) : dim(d) { check_dim(d); }

    std::size_t order() const { return std::size_t(1) << dim; }

    friend bool operator==(const F2Group& a, const F2Group& b) { return a.dim == b.dim; }
};

struct GradedGroup {
    F2Group group;
    // degree functional: |x| = parity(x & grading); 0 means trivial grading
    std::uint32_t grading = 0;
    // distinguished element with |w| = 1 when the grading is nontrivial
    F2Elem w = 0;

    GradedGroup() = default;
    explicit GradedGroup(int dim) : group(dim) {}
    GradedGroup(int dim, std::uint32_t grading_functional, F2Elem w_elem)
        : group(dim), grading(grading_functional), w(w_elem) {}

    int dim() const { return group.dim; }
    std::size_t order() const { return group.order(); }
    bool graded() const { return grading != 0; }
    int degree(F2Elem x) const { return f2_parity(x & grading); }

    // |A0| when graded, |A| otherwise
    std::size_t degree0_order() const { return graded() ? order() / 2 : order(); }

    friend bool operator==(const GradedGroup& a, const GradedGroup& b) {
        return a.group == b.group && a.grading == b.grading && a.w == b.w;
    }
};

// The unique element of A \ A0 orthogonal to all of A0.  Preconditions: the
// grading is nontrivial and chi restricted to A0 x A0 is nondegenerate; a
// violation of existence/uniqueness indicates an internal bug.
inline F2Elem canonical_w(const GradedGroup& g, const Bicharacter& chi) {
    if (!g.graded()) throw std::invalid_argument("canonical_w: grading is trivial");
    F2Elem found = 0;
    bool have = false;
    for (F2Elem x = 0; x < g.order(); ++x) {
        if (g.degree(x) != 1) continue;
        bool orthogonal = true;
        for (F2Elem a = 0; a < g.order() && orthogonal; ++a) {
            if (g.degree(a) != 0) continue;
            if (chi.pairing_bit(x, a) != 0) orthogonal = false;
        }
        if (orthogonal) {
            if (have) throw std::logic_error("canonical_w: not unique");
            found = x;
            have = true;
        }
    }
    if (!have) throw std::logic_error("canonical_w: no orthogonal element found");
    return found;
}

}  // namespace tybraid
