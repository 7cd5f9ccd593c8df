#include "modp.hpp"

#include "util.hpp"

#include <sstream>

namespace gl2 {
namespace modp {

using ff::FieldCtx;
using ff::Fq2;
using ff::MultChar;
using kir::Mat2;

JHFactors jh_factors(const FieldCtx& F, MultChar nu) {
    nu = ff::normalize_char(F, nu);
    int a = ff::digit_a(F, nu), b = ff::digit_b(F, nu), p = F.p();
    JHFactors jh;
    jh.V2 = SymModel{p - 1 - (a - b), a};
    if (a - b >= 2) jh.V1 = SymModel{a - b - 2, b + 1};
    return jh;
}

// multiply a polynomial in (X, Y) by (u X + v Y)
static void mul_linear(const FieldCtx& F, std::vector<Fq2>& poly, Fq2 u, Fq2 v) {
    std::vector<Fq2> out(poly.size() + 1);
    for (size_t i = 0; i < poly.size(); ++i) {
        out[i + 1] = F.add(out[i + 1], F.mul(poly[i], u));
        out[i] = F.add(out[i], F.mul(poly[i], v));
    }
    poly = std::move(out);
}

// (uX + vY)^i (wX + zY)^{d-i} as coefficients over X-exponent
static std::vector<Fq2> binomial_image(const FieldCtx& F, int d, int i, Fq2 u, Fq2 v, Fq2 w, Fq2 z) {
    std::vector<Fq2> poly{Fq2{1, 0}};
    for (int t = 0; t < i; ++t) mul_linear(F, poly, u, v);
    for (int t = 0; t < d - i; ++t) mul_linear(F, poly, w, z);
    return poly;
}

std::vector<Fq2> sym_action(const FieldCtx& F, const SymModel& M, const Mat2& g) {
    int p = F.p(), n = M.dim();
    int det = kir::mat_det(g, p);
    if (det == 0) throw std::invalid_argument("singular g");
    Fq2 dete = F.pow(Fq2{det, 0}, M.e);
    std::vector<Fq2> mat(size_t(n) * n);
    // column i: image of X^i Y^{d-i} with X -> aX + cY, Y -> bX + dY
    for (int i = 0; i <= M.d; ++i) {
        auto col = binomial_image(F, M.d, i, Fq2{imod(g.a, p), 0}, Fq2{imod(g.c, p), 0},
                                  Fq2{imod(g.b, p), 0}, Fq2{imod(g.d, p), 0});
        for (int r = 0; r <= M.d; ++r) mat[size_t(r) * n + i] = F.mul(col[r], dete);
    }
    return mat;
}

Fq2 sym_trace(const FieldCtx& F, const SymModel& M, const Mat2& g) {
    auto mat = sym_action(F, M, g);
    Fq2 t{0, 0};
    for (int i = 0; i <= M.d; ++i) t = F.add(t, mat[size_t(i) * M.dim() + i]);
    return t;
}

// UV monomial U^i V^{d-i} expanded over the X-exponent basis
static std::vector<Fq2> uv_to_xy(const FieldCtx& F, int d, int i) {
    Fq2 th = F.theta();
    Fq2 nth{0, F.p() - 1};
    std::vector<Fq2> poly{Fq2{1, 0}};
    for (int t = 0; t < i; ++t) mul_linear(F, poly, Fq2{1, 0}, th);  // U = X + theta Y
    for (int t = 0; t < d - i; ++t) mul_linear(F, poly, Fq2{1, 0}, nth); // V = X - theta Y
    return poly;
}

// X^i Y^{d-i} over the UV basis: substitute X = (U+V)/2, Y = (U-V)/(2 theta)
static std::vector<Fq2> xy_to_uv(const FieldCtx& F, int d, int i) {
    int p = F.p();
    Fq2 half{inv_mod(2, p), 0};
    Fq2 inv2th = F.inv(F.mul(Fq2{2, 0}, F.theta()));
    std::vector<Fq2> poly{Fq2{1, 0}};
    for (int t = 0; t < i; ++t) mul_linear(F, poly, half, half);
    for (int t = 0; t < d - i; ++t) mul_linear(F, poly, inv2th, F.sub(Fq2{0, 0}, inv2th));
    return poly;
}

ff::MultChar torus_char_of_uv_monomial(const FieldCtx& F, const SymModel& M, int i) {
    if (i < 0 || i > M.d) throw std::invalid_argument("UV monomial index out of range");
    // act with emb(sigma) on the XY expansion of U^i V^{d-i}, re-expand the
    // image in UV and require it to be the same monomial
    int p = F.p(), n = M.dim();
    auto mono_xy = uv_to_xy(F, M.d, i);
    auto act = sym_action(F, M, kir::Mat2{F.sigma().a, F.sigma().b,
                                          int((long long)F.sigma().b * F.xi() % p), F.sigma().a});
    std::vector<Fq2> img(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) img[r] = F.add(img[r], F.mul(act[size_t(r) * n + c], mono_xy[c]));
    // coordinates of img in the UV basis
    std::vector<Fq2> uv(n);
    for (int r = 0; r < n; ++r) {
        auto row = xy_to_uv(F, M.d, r);
        for (int c = 0; c < n; ++c) uv[c] = F.add(uv[c], F.mul(row[c], img[r]));
    }
    Fq2 lam = uv[i];
    for (int c = 0; c < n; ++c)
        if (c != i && !F.is_zero(uv[c])) throw VerificationError("UV monomial is not a torus eigenvector");
    if (F.is_zero(lam)) throw VerificationError("vanishing torus eigenvalue");
    return ff::MultChar{F.dlog(lam)};
}

ff::Fq2 chi_component_of_split_monomial(const FieldCtx& F, const SymModel& M, int i, MultChar chi) {
    if (i < 0 || i > M.d) throw std::invalid_argument("monomial index out of range");
    auto uv = xy_to_uv(F, M.d, i);
    for (int al = 0; al <= M.d; ++al)
        if (torus_char_of_uv_monomial(F, M, al) == chi) return uv[al];
    return Fq2{0, 0};
}

SplitLocation locate_split_char(const FieldCtx& F, MultChar nu, int mu_weight) {
    nu = ff::normalize_char(F, nu);
    int p = F.p();
    auto jh = jh_factors(F, nu);
    mu_weight = imod(mu_weight, p - 1);
    if (jh.V1) {
        int i = imod(mu_weight - jh.V1->e, p - 1);
        if (i <= jh.V1->d) return SplitLocation{1, i};
    }
    int i = imod(mu_weight - jh.V2.e, p - 1);
    if (i > jh.V2.d) throw std::logic_error("split character not found in either factor");
    return SplitLocation{2, i};
}

std::optional<SplitLocation> locate_torus_char(const FieldCtx& F, MultChar nu, MultChar chi) {
    nu = ff::normalize_char(F, nu);
    auto jh = jh_factors(F, nu);
    if (jh.V1)
        for (int i = 0; i <= jh.V1->d; ++i)
            if (torus_char_of_uv_monomial(F, *jh.V1, i) == chi) return SplitLocation{1, i};
    for (int i = 0; i <= jh.V2.d; ++i)
        if (torus_char_of_uv_monomial(F, jh.V2, i) == chi) return SplitLocation{2, i};
    return std::nullopt;
}

bool modp_test_vector(const FieldCtx& F, MultChar nu, MultChar chi, int mu_weight) {
    nu = ff::normalize_char(F, nu);
    if (chi == nu || chi == ff::frob_char(F, nu))
        throw std::invalid_argument("chi in {nu, nu^p} is excluded");
    if (ff::central_weight(F, chi) != ff::central_weight(F, nu))
        throw std::invalid_argument("chi incompatible with nu on F_p^*");
    auto jh = jh_factors(F, nu);
    auto locc = locate_torus_char(F, nu, chi);
    if (!locc) throw VerificationError("compatible chi missing from both JH factors");
    auto locm = locate_split_char(F, nu, mu_weight);
    if (locc->factor != locm.factor) return false;
    const SymModel& M = (locc->factor == 1) ? *jh.V1 : jh.V2;
    return !F.is_zero(chi_component_of_split_monomial(F, M, locm.i, chi));
}

int predict(const FieldCtx& F, MultChar nu, MultChar chi, bool alternate) {
    nu = ff::normalize_char(F, nu);
    int p = F.p();
    int a = ff::digit_a(F, nu), b = ff::digit_b(F, nu);
    auto tag = ff::classify(F, nu, chi);
    bool type1 = tag.type == ff::Type::One;
    bool t_odd = tag.t % 2 == 1;
    int w;
    if ((a - b) % 2 == 0) {
        if (type1)
            w = t_odd ? (a + b) / 2 : (a + b) / 2 - 1;
        else
            w = t_odd ? (a + b + p - 1) / 2 : (a + b + p - 1) / 2 - 1;
    } else if (a - b > 1) {
        w = type1 ? (a + b - 1) / 2 : (a + b + p) / 2;
    } else {
        w = (a + b + p) / 2;
    }
    w = imod(w, p - 1);
    if (alternate) {
        auto loc = locate_split_char(F, nu, w);
        auto jh = jh_factors(F, nu);
        const SymModel& M = loc.factor == 1 ? *jh.V1 : jh.V2;
        w = imod(M.e + M.d - loc.i, p - 1);
    }
    return w;
}

BrauerReport brauer_check(const kir::KirillovRep& rep) {
    const FieldCtx& F = rep.field();
    int p = F.p(), m = F.m();
    MultChar nu = ff::normalize_char(F, rep.nu());
    auto jh = jh_factors(F, nu);
    BrauerReport rpt;

    auto check_class = [&](const Mat2& g, const std::string& name) {
        if (!rpt.ok) return;
        Fq2 lhs = rep.trace(g).reduce_mod_p(F);
        Fq2 rhs = sym_trace(F, jh.V2, g);
        if (jh.V1) rhs = F.add(rhs, sym_trace(F, *jh.V1, g));
        ++rpt.classes_checked;
        if (lhs != rhs) {
            rpt.ok = false;
            std::ostringstream os;
            os << "Brauer mismatch at class " << name << " (p=" << p << ", nu=(" << ff::digit_a(F, nu)
               << "," << ff::digit_b(F, nu) << "))";
            rpt.first_failure = os.str();
        }
    };

    for (int z = 1; z < p; ++z) check_class(Mat2{z, 0, 0, z}, "central");
    for (int a = 1; a < p; ++a)
        for (int d = a + 1; d < p; ++d) check_class(Mat2{a, 0, 0, d}, "split");
    for (int j = 1; j < m; ++j) {
        if (j % (p + 1) == 0) continue;              // central
        if ((long long)j * p % m < j) continue;      // {t, t^p} classes once
        ff::Fq2 t = F.sigma_pow(j);
        check_class(Mat2{t.a, t.b, int((long long)t.b * F.xi() % p), t.a}, "elliptic");
    }
    return rpt;
}

} // namespace modp
} // namespace gl2
