#include "ffchar.hpp"

#include "util.hpp"

#include <stdexcept>

namespace gl2 {
namespace ff {

FieldCtx::FieldCtx(int p) : p_(p), m_(p * p - 1) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (p > 97) throw std::invalid_argument("p out of the supported desk-scale range");

    xi_ = 0;
    for (int x = 2; x < p; ++x) {
        if (pow_mod(x, (p - 1) / 2, p) == p - 1) {
            xi_ = x;
            break;
        }
    }
    theta_ = {0, 1};

    // lexicographically smallest generator of F_{p^2}^*
    sigma_ = {0, 0};
    for (int a = 0; a < p && is_zero(sigma_); ++a) {
        for (int b = 0; b < p; ++b) {
            if (a == 0 && b == 0) continue;
            Fq2 g{a, b}, x = g;
            int ord = 1;
            while (x != Fq2{1, 0}) {
                x = mul(x, g);
                ++ord;
            }
            if (ord == m_) {
                sigma_ = g;
                break;
            }
        }
    }

    dlog_.assign(p * p, -1);
    pow_.resize(m_);
    Fq2 x{1, 0};
    for (int e = 0; e < m_; ++e) {
        pow_[e] = x;
        dlog_[x.a * p + x.b] = e;
        x = mul(x, sigma_);
    }
    dlog_theta_ = dlog_[theta_.b]; // index 0*p + 1

    dlogp_.assign(p, -1);
    for (int a = 1; a < p; ++a) dlogp_[a] = dlog_[a * p] / (p + 1);
}

Fq2 FieldCtx::pow(Fq2 x, long long e) const {
    if (is_zero(x)) return x;
    return sigma_pow(int((__int128(dlog(x)) * (e % m_ + m_)) % m_));
}

Fq2 FieldCtx::inv(Fq2 x) const {
    if (is_zero(x)) throw std::invalid_argument("inverse of zero");
    return sigma_pow(m_ - dlog(x));
}

Fq2 FieldCtx::frobenius(Fq2 x) const { return {x.a, (p_ - x.b) % p_}; }

int FieldCtx::dlog(Fq2 x) const {
    int d = dlog_[x.a * p_ + x.b];
    if (d < 0) throw std::invalid_argument("dlog of zero");
    return d;
}

int FieldCtx::dlog_p(int x) const {
    x %= p_;
    if (x < 0) x += p_;
    if (x == 0) throw std::invalid_argument("dlog of zero");
    return dlogp_[x];
}

FieldCtx make_field(int p) { return FieldCtx(p); }

MultChar char_from_digits(const FieldCtx& F, int a, int b) {
    int p = F.p();
    if (a < 0 || a > p - 1 || b < 0 || b > p - 1) throw std::invalid_argument("character digits out of range");
    if (a == p - 1 && b == p - 1) return MultChar{0}; // canonical choice
    return MultChar{a + p * b};
}

int eval_char(const FieldCtx& F, MultChar chi, Fq2 x) {
    if (F.is_zero(x)) throw std::invalid_argument("character evaluated at zero");
    return int((long long)chi.k * F.dlog(x) % F.m());
}

MultChar frob_char(const FieldCtx& F, MultChar chi) { return MultChar{int((long long)chi.k * F.p() % F.m())}; }

MultChar normalize_char(const FieldCtx& F, MultChar nu) {
    int a = digit_a(F, nu), b = digit_b(F, nu);
    if (a == b) throw std::invalid_argument("nu factors through the norm (a == b)");
    return a > b ? nu : frob_char(F, nu);
}

int char_sign_at_minus_one(const FieldCtx& F, MultChar chi) {
    return (digit_a(F, chi) + digit_b(F, chi)) % 2 == 0 ? 1 : -1;
}

bool factors_through_norm(const FieldCtx& F, MultChar chi) { return chi.k % (F.p() + 1) == 0; }

TypeTag classify(const FieldCtx& F, MultChar nu, MultChar chi) {
    int p = F.p();
    nu = normalize_char(F, nu);
    if (central_weight(F, chi) != central_weight(F, nu))
        throw std::invalid_argument("chi does not agree with nu on F_p^*");
    int knu = nu.k, kfr = frob_char(F, nu).k;
    Type ty = (knu < chi.k && chi.k < kfr) ? Type::One : Type::Two;
    int t = imod((chi.k - knu) / (p - 1), p + 1);
    return TypeTag{ty, t};
}

std::vector<MultChar> compatible_chars(const FieldCtx& F, MultChar nu) {
    std::vector<MultChar> out;
    int w = central_weight(F, nu);
    for (int k = w; k < F.m(); k += F.p() - 1) out.push_back(MultChar{k});
    return out;
}

} // namespace ff
} // namespace gl2
