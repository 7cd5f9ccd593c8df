#pragma once

// Finite-level verification of the K-type decomposition: the groups
// GL_2(Z/p^s), Frobenius-induced characters from the subgroups B(r)
// (lower-left entry divisible by p^r), the complements u_{P^s}, and
// restriction multiplicities to the unramified and ramified torus images.
//
// Character values live in Z[zeta_L] with L = p^s (p^2 - 1), which contains
// every value of the inducing characters and of the torus characters at
// this level. Inner products are computed exactly, with the 1/|G| division
// checked for integrality.

#include "cyclo.hpp"

#include <cstdint>
#include <vector>

namespace gl2 {
namespace kt {

struct Mat2s {
    int a = 1, b = 0, c = 0, d = 1; // entries mod p^s
};

class FiniteLevelGroup {
public:
    static FiniteLevelGroup make(int p, int s);

    int p() const { return p_; }
    int s() const { return s_; }
    int q() const { return q_; } // p^s
    std::int64_t order() const { return std::int64_t(elems_.size()); }
    int num_classes() const { return int(class_reps_.size()); }
    std::int64_t class_size(int c) const { return class_sizes_[c]; }
    Mat2s class_rep(int c) const { return unpack(elems_[class_reps_[c]]); }
    int identity_class() const { return class_of_[elem_id(Mat2s{})]; }

    std::uint32_t pack(const Mat2s& g) const;
    Mat2s unpack(std::uint32_t v) const;
    Mat2s mul(const Mat2s& g, const Mat2s& h) const;
    Mat2s inv(const Mat2s& g) const;
    bool in_group(const Mat2s& g) const;
    int elem_id(const Mat2s& g) const; // -1 if not in group
    int class_of_elem(const Mat2s& g) const { return class_of_[elem_id(g)]; }
    const std::vector<std::uint32_t>& elements() const { return elems_; }

    // primitive root mod p^s and unit dlog
    int unit_generator() const { return g0_; }
    int unit_order() const { return phi_q_; }
    int unit_dlog(int u) const; // u a unit mod q

    // value ring Z[zeta_L]
    int L() const { return L_; }
    int phiL() const { return axL_.degree; }
    const cyclo::CycloAxis& axis() const { return axL_; }

private:
    int p_ = 0, s_ = 0, q_ = 0, phi_q_ = 0, g0_ = 0, L_ = 0;
    cyclo::CycloAxis axL_;
    std::vector<std::uint32_t> elems_;
    std::vector<std::int32_t> elem_index_; // size q^4
    std::vector<std::int32_t> class_of_;
    std::vector<std::int32_t> class_reps_;
    std::vector<std::int64_t> class_sizes_;
    std::vector<int> unit_dlog_;
};

// a character of (Z/p^s)^*: u = g0^t -> zeta_{phi(q)}^{w t}
struct UnitChar {
    int w = 0; // weight mod phi(q)
};
// conductor exponent: smallest r >= 0 with nu trivial on 1 + p^r Z/q
int unit_char_conductor(const FiniteLevelGroup& G, UnitChar nu);

// class function with exact values in Z[zeta_L] (canonical coefficients)
struct ClassFn {
    std::vector<std::vector<std::int64_t>> vals; // per class, length phiL
};

// Ind_{B(r)}^{G}(nu), nu viewed on B(r) through the (1,1) entry.
// pre: conductor(nu) <= r <= s.
ClassFn induced_character(const FiniteLevelGroup& G, int r, UnitChar nu);

// u_{P^t}(nu) at this level: Ind_{B(t)} - Ind_{B(t-1)} for t > r, and
// Ind_{B(r)} at t = r. pre: r <= t <= s.
ClassFn u_character(const FiniteLevelGroup& G, int t, int r, UnitChar nu);

// exact <f, h> = (1/|G|) sum |c| f(c) conj(h(c)); throws if not a
// nonnegative rational integer
std::int64_t inner_product(const FiniteLevelGroup& G, const ClassFn& f, const ClassFn& h);
// degree = value at the identity
std::int64_t degree(const FiniteLevelGroup& G, const ClassFn& f);

// --- torus images ------------------------------------------------------

struct TorusImage {
    bool ramified = false;
    std::vector<std::uint32_t> elems; // packed, sorted
    // images of the unit filtration: entry k = image of 1 + pi^k O_K
    // (pi = p in the unramified case, so only even k appear there)
    std::vector<std::vector<std::uint32_t>> filtration;
};

TorusImage unramified_torus(const FiniteLevelGroup& G);
TorusImage ramified_torus(const FiniteLevelGroup& G);

// a character of the (abelian) torus image: exponent of zeta_L per element,
// aligned with TorusImage::elems
struct TorusChar {
    std::vector<int> e;
};

// all |T| characters, found by exact homomorphism enumeration
std::vector<TorusChar> torus_characters(const FiniteLevelGroup& G, const TorusImage& T);
// smallest k with chi trivial on filtration[k]
int torus_char_conductor(const FiniteLevelGroup& G, const TorusImage& T, const TorusChar& chi);
// chi agrees with nu on the scalar matrices
bool torus_char_compatible(const FiniteLevelGroup& G, const TorusImage& T, const TorusChar& chi,
                           UnitChar nu);

// exact multiplicity of chi in f|_T
std::int64_t torus_multiplicity(const FiniteLevelGroup& G, const TorusImage& T, const ClassFn& f,
                                const TorusChar& chi);

// exact multiplicity of the character (a b; c d) -> nu(a) of the B(t) image
// in f|_{B(t)}
std::int64_t borel_multiplicity(const FiniteLevelGroup& G, const ClassFn& f, int t, UnitChar nu);

// character counts over the ramified torus image, by pi-adic conductor;
// counts[k] = number of characters of conductor exactly k agreeing with nu
// on the scalars
std::vector<std::int64_t> ramified_census(const FiniteLevelGroup& G, UnitChar nu);

// dimension of the invariants of the principal congruence subgroup
// {g == 1 mod p^k} in f; u_{P^s} is trivial on G(s) but has none for G(s-1)
std::int64_t congruence_invariants(const FiniteLevelGroup& G, const ClassFn& f, int k);

} // namespace kt
} // namespace gl2
