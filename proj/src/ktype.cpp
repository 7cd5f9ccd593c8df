#include "ktype.hpp"

#include "util.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace gl2 {
namespace kt {

using std::int64_t;
using std::size_t;
using std::uint32_t;

static int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

uint32_t FiniteLevelGroup::pack(const Mat2s& g) const {
    return uint32_t(((std::int64_t(g.d) * q_ + g.c) * q_ + g.b) * q_ + g.a);
}

Mat2s FiniteLevelGroup::unpack(uint32_t v) const {
    Mat2s g;
    g.a = v % q_;
    v /= q_;
    g.b = v % q_;
    v /= q_;
    g.c = v % q_;
    v /= q_;
    g.d = v % q_;
    return g;
}

Mat2s FiniteLevelGroup::mul(const Mat2s& g, const Mat2s& h) const {
    return Mat2s{int((std::int64_t(g.a) * h.a + std::int64_t(g.b) * h.c) % q_),
                 int((std::int64_t(g.a) * h.b + std::int64_t(g.b) * h.d) % q_),
                 int((std::int64_t(g.c) * h.a + std::int64_t(g.d) * h.c) % q_),
                 int((std::int64_t(g.c) * h.b + std::int64_t(g.d) * h.d) % q_)};
}

static int inv_unit_mod(int a, int q) {
    // extended Euclid; a must be a unit
    int t = 0, new_t = 1, r = q, new_r = a % q;
    while (new_r != 0) {
        int quo = r / new_r;
        t -= quo * new_t;
        std::swap(t, new_t);
        r -= quo * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::invalid_argument("not a unit");
    return (t % q + q) % q;
}

Mat2s FiniteLevelGroup::inv(const Mat2s& g) const {
    int det = int((std::int64_t(g.a) * g.d - std::int64_t(g.b) * g.c % q_ + (std::int64_t)q_ * q_) % q_);
    int di = inv_unit_mod(det, q_);
    return Mat2s{int(std::int64_t(g.d) * di % q_), int(std::int64_t(q_ - g.b % q_) % q_ * di % q_),
                 int(std::int64_t(q_ - g.c % q_) % q_ * di % q_), int(std::int64_t(g.a) * di % q_)};
}

bool FiniteLevelGroup::in_group(const Mat2s& g) const { return elem_index_[pack(g)] >= 0; }

int FiniteLevelGroup::elem_id(const Mat2s& g) const { return elem_index_[pack(g)]; }

int FiniteLevelGroup::unit_dlog(int u) const {
    u %= q_;
    if (u < 0) u += q_;
    int d = unit_dlog_[u];
    if (d < 0) throw std::invalid_argument("dlog of a non-unit");
    return d;
}

FiniteLevelGroup FiniteLevelGroup::make(int p, int s) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (s < 1 || s > 2 || (s == 2 && p > 5))
        throw std::invalid_argument("level outside the verified desk-scale range");
    FiniteLevelGroup G;
    G.p_ = p;
    G.s_ = s;
    G.q_ = ipow(p, s);
    G.phi_q_ = (p - 1) * ipow(p, s - 1);
    G.L_ = G.q_ * (p * p - 1);
    G.axL_ = cyclo::CycloAxis::make(G.L_);

    // primitive root mod p^s
    G.g0_ = 0;
    for (int g = 2; g < G.q_; ++g) {
        if (g % p == 0) continue;
        int x = 1, ord = 0;
        do {
            x = int(std::int64_t(x) * g % G.q_);
            ++ord;
        } while (x != 1);
        if (ord == G.phi_q_) {
            G.g0_ = g;
            break;
        }
    }
    G.unit_dlog_.assign(G.q_, -1);
    {
        int x = 1;
        for (int t = 0; t < G.phi_q_; ++t) {
            G.unit_dlog_[x] = t;
            x = int(std::int64_t(x) * G.g0_ % G.q_);
        }
    }

    // enumerate the group
    std::int64_t space = (std::int64_t)G.q_ * G.q_ * G.q_ * G.q_;
    G.elem_index_.assign(space, -1);
    for (int a = 0; a < G.q_; ++a)
        for (int b = 0; b < G.q_; ++b)
            for (int c = 0; c < G.q_; ++c)
                for (int d = 0; d < G.q_; ++d) {
                    int det = int(((std::int64_t)a * d - (std::int64_t)b * c % G.q_ + (std::int64_t)G.q_ * G.q_) % G.q_);
                    if (det % p == 0) continue;
                    Mat2s g{a, b, c, d};
                    G.elem_index_[G.pack(g)] = int(G.elems_.size());
                    G.elems_.push_back(G.pack(g));
                }

    // conjugacy classes by BFS over conjugation with a generating set
    std::vector<Mat2s> gens = {Mat2s{1, 1, 0, 1}, Mat2s{1, 0, 1, 1}, Mat2s{G.g0_, 0, 0, 1}};
    std::vector<Mat2s> gens_inv;
    for (const auto& g : gens) gens_inv.push_back(G.inv(g));
    G.class_of_.assign(G.elems_.size(), -1);
    for (size_t start = 0; start < G.elems_.size(); ++start) {
        if (G.class_of_[start] >= 0) continue;
        int cid = int(G.class_reps_.size());
        G.class_reps_.push_back(int(start));
        std::int64_t count = 0;
        std::deque<uint32_t> queue{G.elems_[start]};
        G.class_of_[start] = cid;
        while (!queue.empty()) {
            Mat2s x = G.unpack(queue.front());
            queue.pop_front();
            ++count;
            for (size_t i = 0; i < gens.size(); ++i) {
                Mat2s y = G.mul(gens[i], G.mul(x, gens_inv[i]));
                int id = G.elem_id(y);
                if (G.class_of_[id] < 0) {
                    G.class_of_[id] = cid;
                    queue.push_back(G.pack(y));
                }
            }
        }
        G.class_sizes_.push_back(count);
    }
    return G;
}

int unit_char_conductor(const FiniteLevelGroup& G, UnitChar nu) {
    int q = G.q(), p = G.p();
    for (int r = 0; r <= G.s(); ++r) {
        // trivial on 1 + p^r Z/q?
        bool trivial = true;
        int step = ipow(p, r);
        for (int x = 1; x * step < q + 1 && trivial; ++x) {
            int u = (1 + x * step) % q;
            if (u == 0 || u % p == 0) continue;
            if ((std::int64_t)nu.w * G.unit_dlog(u) % G.unit_order() != 0) trivial = false;
        }
        if (trivial) return r;
    }
    return G.s();
}

// transversal of G/B(r): column labels (1, c) and (d, 1) with d in pZ/p^r
static std::vector<Mat2s> borel_transversal(const FiniteLevelGroup& G, int r) {
    int pr = ipow(G.p(), r);
    std::vector<Mat2s> reps;
    for (int c = 0; c < pr; ++c) reps.push_back(Mat2s{1, 0, c, 1});
    for (int d = 0; d < pr; d += G.p()) reps.push_back(Mat2s{d, G.q() - 1, 1, 0});
    return reps;
}

static bool in_borel(const FiniteLevelGroup& G, const Mat2s& g, int r) {
    return g.c % ipow(G.p(), r) == 0;
}

ClassFn induced_character(const FiniteLevelGroup& G, int r, UnitChar nu) {
    if (r < unit_char_conductor(G, nu) || r < 1 || r > G.s())
        throw std::invalid_argument("conductor mismatch for the inducing character");
    auto reps = borel_transversal(G, r);
    std::vector<Mat2s> reps_inv;
    for (const auto& x : reps) reps_inv.push_back(G.inv(x));
    ClassFn f;
    f.vals.resize(G.num_classes());
    int L = G.L();
    int scale = L / G.unit_order();
    std::vector<int64_t> grid(L);
    for (int cid = 0; cid < G.num_classes(); ++cid) {
        std::fill(grid.begin(), grid.end(), 0);
        Mat2s g = G.class_rep(cid);
        for (size_t i = 0; i < reps.size(); ++i) {
            Mat2s h = G.mul(reps_inv[i], G.mul(g, reps[i]));
            if (!in_borel(G, h, r)) continue;
            int e = int((std::int64_t)nu.w * G.unit_dlog(h.a) % G.unit_order()) * scale % L;
            grid[e] += 1;
        }
        G.axis().reduce_row(grid.data());
        f.vals[cid].assign(grid.begin(), grid.begin() + G.phiL());
    }
    return f;
}

ClassFn u_character(const FiniteLevelGroup& G, int t, int r, UnitChar nu) {
    if (t < r || t > G.s()) throw std::invalid_argument("u_{P^t} needs r <= t <= level");
    ClassFn f = induced_character(G, t, nu);
    if (t > r) {
        ClassFn prev = induced_character(G, t - 1, nu);
        for (int c = 0; c < G.num_classes(); ++c)
            for (int i = 0; i < G.phiL(); ++i) f.vals[c][i] -= prev.vals[c][i];
    }
    if (degree(G, f) <= 0) throw VerificationError("u_{P^t} has nonpositive degree");
    return f;
}

// canonical product in Z[zeta_L]
static void lmul_into(const FiniteLevelGroup& G, const std::vector<int64_t>& a,
                      const std::vector<int64_t>& b, bool conj_b, std::vector<int64_t>& grid) {
    int L = G.L(), ph = G.phiL();
    for (int i = 0; i < ph; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < ph; ++j) {
            if (!b[j]) continue;
            int e = conj_b ? imod(i - j, L) : (i + j) % L;
            grid[e] = ck_add(grid[e], ck_mul(a[i], b[j]));
        }
    }
}

std::int64_t inner_product(const FiniteLevelGroup& G, const ClassFn& f, const ClassFn& h) {
    std::vector<int64_t> grid(G.L(), 0), scaled(G.L(), 0);
    for (int c = 0; c < G.num_classes(); ++c) {
        std::fill(grid.begin(), grid.end(), 0);
        lmul_into(G, f.vals[c], h.vals[c], true, grid);
        for (int e = 0; e < G.L(); ++e) scaled[e] = ck_add(scaled[e], ck_mul(grid[e], G.class_size(c)));
    }
    G.axis().reduce_row(scaled.data());
    for (int i = 1; i < G.phiL(); ++i)
        if (scaled[i] != 0) throw VerificationError("inner product is not rational");
    if (scaled[0] % G.order() != 0) throw VerificationError("inner product is not integral");
    return scaled[0] / G.order();
}

std::int64_t degree(const FiniteLevelGroup& G, const ClassFn& f) {
    const auto& v = f.vals[G.identity_class()];
    for (int i = 1; i < G.phiL(); ++i)
        if (v[i] != 0) throw VerificationError("degree is not rational");
    return v[0];
}

// --- torus images -------------------------------------------------------

TorusImage unramified_torus(const FiniteLevelGroup& G) {
    // F_{p^2} = F_p(theta), theta^2 = xi: lift (a b; b xi a) mod q
    int q = G.q(), p = G.p();
    int xi = 0;
    for (int x = 2; x < p; ++x)
        if (pow_mod(x, (p - 1) / 2, p) == p - 1) {
            xi = x;
            break;
        }
    TorusImage T;
    T.ramified = false;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            Mat2s g{a, b, int((std::int64_t)b * xi % q), a};
            if (G.in_group(g)) T.elems.push_back(G.pack(g));
        }
    std::sort(T.elems.begin(), T.elems.end());
    // filtration[k] = image of 1 + p^k O_K, k = 0..s (p is the uniformizer)
    T.filtration.resize(G.s() + 1);
    for (int k = 0; k <= G.s(); ++k) {
        std::vector<uint32_t> sub;
        int step = ipow(p, k);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                if ((a - 1) % step != 0 || b % step != 0) continue;
                Mat2s g{a, b, int((std::int64_t)b * xi % q), a};
                if (G.in_group(g)) sub.push_back(G.pack(g));
            }
        std::sort(sub.begin(), sub.end());
        T.filtration[k] = std::move(sub);
    }
    return T;
}

TorusImage ramified_torus(const FiniteLevelGroup& G) {
    int q = G.q(), p = G.p();
    TorusImage T;
    T.ramified = true;
    for (int a = 0; a < q; ++a) {
        if (a % p == 0) continue;
        for (int b = 0; b < q; ++b) {
            Mat2s g{a, b, int((std::int64_t)b * p % q), a};
            if (G.in_group(g)) T.elems.push_back(G.pack(g));
        }
    }
    std::sort(T.elems.begin(), T.elems.end());
    // filtration by 1 + pi^k O_K, pi = (0 1; p 0), pi^2 = p
    T.filtration.resize(2 * G.s() + 1);
    for (int k = 0; k <= 2 * G.s(); ++k) {
        std::vector<uint32_t> sub;
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y) {
                // 1 + pi^k (x + y pi)
                int t = k / 2;
                Mat2s g;
                if (k % 2 == 0) {
                    int pt = ipow(p, t);
                    g = Mat2s{int((1 + (std::int64_t)pt * x) % q), int((std::int64_t)pt * y % q),
                              int((std::int64_t)pt * p % q * y % q), int((1 + (std::int64_t)pt * x) % q)};
                } else {
                    int pt = ipow(p, t);
                    g = Mat2s{int((1 + (std::int64_t)pt * p % q * y) % q), int((std::int64_t)pt * x % q),
                              int((std::int64_t)pt * p % q * x % q), int((1 + (std::int64_t)pt * p % q * y) % q)};
                }
                if (G.in_group(g)) sub.push_back(G.pack(g));
            }
        std::sort(sub.begin(), sub.end());
        sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
        T.filtration[k] = std::move(sub);
    }
    return T;
}

// order of a torus element inside the image
static int elem_order(const FiniteLevelGroup& G, const Mat2s& g) {
    Mat2s x = g;
    int ord = 1;
    Mat2s id{};
    while (G.pack(x) != G.pack(id)) {
        x = G.mul(x, g);
        ++ord;
    }
    return ord;
}

std::vector<TorusChar> torus_characters(const FiniteLevelGroup& G, const TorusImage& T) {
    // index of each packed element in T.elems
    std::map<uint32_t, int> pos;
    for (size_t i = 0; i < T.elems.size(); ++i) pos[T.elems[i]] = int(i);
    int n = int(T.elems.size());
    int L = G.L();
    int id_pos = pos.at(G.pack(Mat2s{}));

    // greedy generating set, largest element order first
    std::vector<int> orders(n);
    for (int i = 0; i < n; ++i) orders[i] = elem_order(G, G.unpack(T.elems[i]));
    std::vector<int> gens;
    std::vector<std::vector<int>> mul_gen; // position tables i -> i * gen
    std::vector<char> closure(n, 0);
    closure[id_pos] = 1;
    int closed = 1;
    while (closed < n) {
        int best = -1;
        for (int i = 0; i < n; ++i)
            if (!closure[i] && (best < 0 || orders[i] > orders[best])) best = i;
        gens.push_back(best);
        std::vector<int> table(n);
        for (int i = 0; i < n; ++i)
            table[i] = pos.at(G.pack(G.mul(G.unpack(T.elems[i]), G.unpack(T.elems[best]))));
        mul_gen.push_back(std::move(table));
        // close
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < n; ++i) {
                if (!closure[i]) continue;
                for (const auto& tbl : mul_gen) {
                    int j = tbl[i];
                    if (!closure[j]) {
                        closure[j] = 1;
                        ++closed;
                        grew = true;
                    }
                }
            }
        }
    }
    std::vector<int> gen_orders;
    for (int gp : gens) gen_orders.push_back(orders[gp]);

    // enumerate candidate value tuples on the generators; keep tuples that
    // propagate to a consistent homomorphism on all of T
    std::vector<TorusChar> chars;
    std::vector<int> tuple(gens.size(), 0);
    std::vector<int> values(n);
    std::vector<char> known(n);
    std::vector<int> stack;
    while (true) {
        std::fill(known.begin(), known.end(), 0);
        values[id_pos] = 0;
        known[id_pos] = 1;
        stack.assign(1, id_pos);
        bool ok = true;
        int seen = 1;
        while (!stack.empty() && ok) {
            int i = stack.back();
            stack.pop_back();
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int j = mul_gen[gi][i];
                int val = int((values[i] + (std::int64_t)tuple[gi] * (L / gen_orders[gi])) % L);
                if (!known[j]) {
                    known[j] = 1;
                    values[j] = val;
                    stack.push_back(j);
                    ++seen;
                } else if (values[j] != val) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && seen == n) {
            TorusChar chi;
            chi.e = values;
            chars.push_back(std::move(chi));
        }
        size_t gi = 0;
        while (gi < gens.size()) {
            if (++tuple[gi] < gen_orders[gi]) break;
            tuple[gi] = 0;
            ++gi;
        }
        if (gi == gens.size()) break;
    }
    if (std::int64_t(chars.size()) != std::int64_t(n))
        throw VerificationError("character count differs from |T|");
    return chars;
}

int torus_char_conductor(const FiniteLevelGroup& G, const TorusImage& T, const TorusChar& chi) {
    (void)G;
    std::map<uint32_t, int> pos;
    for (size_t i = 0; i < T.elems.size(); ++i) pos[T.elems[i]] = int(i);
    for (int k = 0; k < int(T.filtration.size()); ++k) {
        bool trivial = true;
        for (uint32_t v : T.filtration[k])
            if (chi.e[pos.at(v)] != 0) {
                trivial = false;
                break;
            }
        if (trivial) return k;
    }
    return int(T.filtration.size());
}

bool torus_char_compatible(const FiniteLevelGroup& G, const TorusImage& T, const TorusChar& chi,
                           UnitChar nu) {
    std::map<uint32_t, int> pos;
    for (size_t i = 0; i < T.elems.size(); ++i) pos[T.elems[i]] = int(i);
    int L = G.L(), scale = L / G.unit_order();
    for (int z = 1; z < G.q(); ++z) {
        if (z % G.p() == 0) continue;
        Mat2s g{z, 0, 0, z};
        int expect = int((std::int64_t)nu.w * G.unit_dlog(z) % G.unit_order()) * scale % L;
        if (chi.e[pos.at(G.pack(g))] != expect) return false;
    }
    return true;
}

std::int64_t torus_multiplicity(const FiniteLevelGroup& G, const TorusImage& T, const ClassFn& f,
                                const TorusChar& chi) {
    int L = G.L();
    std::vector<int64_t> grid(L, 0);
    for (size_t i = 0; i < T.elems.size(); ++i) {
        int cid = G.class_of_elem(G.unpack(T.elems[i]));
        const auto& v = f.vals[cid];
        int shift = imod(-chi.e[i], L);
        for (int j = 0; j < G.phiL(); ++j)
            if (v[j]) grid[(j + shift) % L] = ck_add(grid[(j + shift) % L], v[j]);
    }
    G.axis().reduce_row(grid.data());
    for (int i = 1; i < G.phiL(); ++i)
        if (grid[i] != 0) throw VerificationError("torus multiplicity is not rational");
    std::int64_t n = std::int64_t(T.elems.size());
    if (grid[0] % n != 0) throw VerificationError("torus multiplicity is not integral");
    return grid[0] / n;
}

std::int64_t borel_multiplicity(const FiniteLevelGroup& G, const ClassFn& f, int t, UnitChar nu) {
    int pr = ipow(G.p(), t);
    int L = G.L(), scale = L / G.unit_order();
    std::vector<int64_t> grid(L, 0);
    for (uint32_t v : G.elements()) {
        Mat2s g = G.unpack(v);
        if (g.c % pr != 0) continue;
        int cid = G.class_of_elem(g);
        int shift = imod(-(std::int64_t)(nu.w) * G.unit_dlog(g.a) % G.unit_order() * scale, L);
        const auto& vals = f.vals[cid];
        for (int j = 0; j < G.phiL(); ++j)
            if (vals[j]) grid[(j + shift) % L] = ck_add(grid[(j + shift) % L], vals[j]);
    }
    G.axis().reduce_row(grid.data());
    for (int i = 1; i < G.phiL(); ++i)
        if (grid[i] != 0) throw VerificationError("Borel multiplicity is not rational");
    std::int64_t bsize = G.order() / ((std::int64_t)(G.p() + 1) * ipow(G.p(), t - 1));
    if (grid[0] % bsize != 0) throw VerificationError("Borel multiplicity is not integral");
    return grid[0] / bsize;
}

std::int64_t congruence_invariants(const FiniteLevelGroup& G, const ClassFn& f, int k) {
    int q = G.q(), pk = ipow(G.p(), k);
    std::vector<int64_t> grid(G.L(), 0);
    std::int64_t count = 0;
    for (int b = 0; b < q; b += pk)
        for (int c = 0; c < q; c += pk)
            for (int a = 1; a < q; a += pk)
                for (int d = 1; d < q; d += pk) {
                    Mat2s g{a, b, c, d};
                    if (!G.in_group(g)) continue;
                    ++count;
                    const auto& v = f.vals[G.class_of_elem(g)];
                    for (int j = 0; j < G.phiL(); ++j) grid[j] = ck_add(grid[j], v[j]);
                }
    G.axis().reduce_row(grid.data());
    for (int i = 1; i < G.phiL(); ++i)
        if (grid[i] != 0) throw VerificationError("invariant dimension is not rational");
    if (grid[0] % count != 0) throw VerificationError("invariant dimension is not integral");
    return grid[0] / count;
}

std::vector<std::int64_t> ramified_census(const FiniteLevelGroup& G, UnitChar nu) {
    TorusImage T = ramified_torus(G);
    auto chars = torus_characters(G, T);
    std::vector<std::int64_t> counts(T.filtration.size() + 1, 0);
    for (const auto& chi : chars) {
        if (!torus_char_compatible(G, T, chi, nu)) continue;
        ++counts[torus_char_conductor(G, T, chi)];
    }
    return counts;
}

} // namespace kt
} // namespace gl2
