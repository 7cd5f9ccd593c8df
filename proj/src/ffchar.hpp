#pragma once

// Arithmetic in F_p and F_{p^2}, and the weight labelling of multiplicative
// characters of F_{p^2}^*. All downstream numbers depend on the choices made
// here, so they are pinned: xi is the smallest non-square in F_p^*, theta is
// the formal square root of xi (F_{p^2} = F_p[theta]), and sigma is the
// lexicographically smallest generator a + b*theta of F_{p^2}^* (ordered by
// the pair (a, b)).

#include <stdexcept>
#include <vector>

namespace gl2 {
namespace ff {

// a + b*theta with theta^2 = xi
struct Fq2 {
    int a = 0, b = 0;
    friend bool operator==(Fq2 x, Fq2 y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(Fq2 x, Fq2 y) { return !(x == y); }
};

// Character of F_{p^2}^* of weight k: chi(sigma^e) = zeta_{p^2-1}^{k e}.
// Digits (a, b) with k = a + p*b; (p-1, p-1) is canonicalized to (0, 0).
struct MultChar {
    int k = 0;
    friend bool operator==(MultChar x, MultChar y) { return x.k == y.k; }
    friend bool operator!=(MultChar x, MultChar y) { return !(x == y); }
};

enum class Type { One, Two };

struct TypeTag {
    Type type;
    int t; // t_chi, reduced mod p+1
};

class FieldCtx {
public:
    // throws std::invalid_argument unless p is an odd prime
    explicit FieldCtx(int p);

    int p() const { return p_; }
    int m() const { return m_; } // p^2 - 1
    int xi() const { return xi_; }
    Fq2 sigma() const { return sigma_; }
    Fq2 theta() const { return theta_; } // sqrt(xi), trace zero
    int dlog_theta() const { return dlog_theta_; }

    Fq2 add(Fq2 x, Fq2 y) const { return {int((x.a + y.a) % p_), int((x.b + y.b) % p_)}; }
    Fq2 sub(Fq2 x, Fq2 y) const { return {(x.a - y.a + p_) % p_, (x.b - y.b + p_) % p_}; }
    Fq2 mul(Fq2 x, Fq2 y) const {
        return {int((x.a * y.a + x.b * y.b % p_ * xi_) % p_), int((x.a * y.b + x.b * y.a) % p_)};
    }
    Fq2 pow(Fq2 x, long long e) const;
    Fq2 inv(Fq2 x) const;            // x != 0
    Fq2 frobenius(Fq2 x) const;      // x -> x^p = a - b*theta
    int norm(Fq2 x) const { return (x.a * x.a % p_ - x.b * x.b % p_ * xi_ % p_ % p_ + p_ * p_) % p_; }
    int trace(Fq2 x) const { return 2 * x.a % p_; }
    bool is_zero(Fq2 x) const { return x.a == 0 && x.b == 0; }

    // discrete log base sigma; x != 0
    int dlog(Fq2 x) const;
    Fq2 sigma_pow(int e) const { return pow_[(e % m_ + m_) % m_]; }
    // discrete log of x in F_p^* w.r.t. the generator sigma^{p+1}
    int dlog_p(int x) const;

private:
    int p_, m_, xi_;
    Fq2 sigma_, theta_;
    int dlog_theta_;
    std::vector<int> dlog_; // index a*p + b
    std::vector<Fq2> pow_;
    std::vector<int> dlogp_; // index x in [1, p)
};

FieldCtx make_field(int p); // spec-name alias for the constructor

// Digits must satisfy 0 <= a, b <= p-1; (p-1, p-1) canonicalizes to weight 0.
MultChar char_from_digits(const FieldCtx& F, int a, int b);
inline int digit_a(const FieldCtx& F, MultChar c) { return c.k % F.p(); }
inline int digit_b(const FieldCtx& F, MultChar c) { return c.k / F.p(); }

// chi(x) as an exponent of zeta_{p^2-1}; x != 0
int eval_char(const FieldCtx& F, MultChar chi, Fq2 x);

// chi^p (digits swapped)
MultChar frob_char(const FieldCtx& F, MultChar chi);
// the one of {nu, nu^p} with digits a > b; requires a != b
MultChar normalize_char(const FieldCtx& F, MultChar nu);
// chi(-1) = +1/-1
int char_sign_at_minus_one(const FieldCtx& F, MultChar chi);
bool factors_through_norm(const FieldCtx& F, MultChar chi); // (p+1) | k
// restriction weight to F_p^* (mod p-1)
inline int central_weight(const FieldCtx& F, MultChar chi) { return chi.k % (F.p() - 1); }

// Type 1 iff k_nu < k_chi < k_{nu^p} after normalizing nu so a > b.
// pre: nu != nu^p, chi compatible with nu on F_p^*.
TypeTag classify(const FieldCtx& F, MultChar nu, MultChar chi);

// the p+1 characters agreeing with nu on F_p^*, ascending weight
std::vector<MultChar> compatible_chars(const FieldCtx& F, MultChar nu);

} // namespace ff
} // namespace gl2
