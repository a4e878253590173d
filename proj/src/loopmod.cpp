#include "periodica/loopmod.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "periodica/fraction.hpp"

namespace periodica {

namespace {

int residue_of(int m, int p) {
    int r = m % p;
    return r <= 0 ? r + p : r;
}

/* (-q)^e */
Laurent neg_q_power(int e) {
    return Laurent::monomial((e % 2 == 0) ? 1 : -1, e);
}

TensorVec divided(const TensorVec& v, int n) {
    if (n <= 1) return v;
    Laurent fact = quantum_factorial(n);
    TensorVec out(v.rank());
    for (const auto& [g, f] : v.terms()) out.add(g, f.divided_by(fact));
    return out;
}

}  // namespace

TensorModule::TensorModule(int d_, int p_, Vec c_arg) : d(d_), p(p_), c(std::move(c_arg)) {
    require(d >= 1, "TensorModule: d must be positive");
    require(p >= 2, "TensorModule: needs at least two letters");
    require(is_composition_of(c, d), "TensorModule: c must be a composition of d");
}

int TensorModule::block_of(int j) const {
    int b = 0, start = 0;
    while (j >= start + c[b]) start += c[b++];
    return b;
}

TensorVec TensorModule::e_act(int a, const TensorVec& v) const {
    require(a >= 1 && a <= p, "e_act: generator out of range");
    int up = residue_of(a + 1, p);
    TensorVec out(d);
    for (const auto& [g, f] : v.terms()) {
        for (int j = 0; j < d; ++j) {
            if (residue_of(g[j], p) != up) continue;
            /* k-twist collects over the factors right of the move */
            int e = 0;
            for (int t = j + 1; t < d; ++t) {
                int r = residue_of(g[t], p);
                if (r == up) e += 1;
                else if (r == a) e -= 1;
            }
            Vec ng = g;
            ng[j] -= 1;
            out.add(ng, f * Laurent::q_power(e));
        }
    }
    return out;
}

TensorVec TensorModule::f_act(int a, const TensorVec& v) const {
    require(a >= 1 && a <= p, "f_act: generator out of range");
    int up = residue_of(a + 1, p);
    TensorVec out(d);
    for (const auto& [g, f] : v.terms()) {
        for (int j = 0; j < d; ++j) {
            if (residue_of(g[j], p) != a) continue;
            /* the twist of the lowering side sits on the earlier factors */
            int e = 0;
            for (int t = 0; t < j; ++t) {
                int r = residue_of(g[t], p);
                if (r == a) e += 1;
                else if (r == up) e -= 1;
            }
            Vec ng = g;
            ng[j] += 1;
            out.add(ng, f * Laurent::q_power(e));
        }
    }
    return out;
}

TensorVec TensorModule::e_div(int a, int n, const TensorVec& v) const {
    require(n >= 0, "e_div: negative power");
    TensorVec out = v;
    for (int k = 0; k < n; ++k) out = e_act(a, out);
    return divided(out, n);
}

TensorVec TensorModule::f_div(int a, int n, const TensorVec& v) const {
    require(n >= 0, "f_div: negative power");
    TensorVec out = v;
    for (int k = 0; k < n; ++k) out = f_act(a, out);
    return divided(out, n);
}

TensorVec TensorModule::l_act(int a, const TensorVec& v, bool inverse) const {
    require(a >= 1 && a <= p, "l_act: generator out of range");
    TensorVec out(d);
    for (const auto& [g, f] : v.terms()) {
        int e = 0;
        for (int j = 0; j < d; ++j)
            if (residue_of(g[j], p) == a) ++e;
        out.add(g, f * Laurent::q_power(inverse ? -e : e));
    }
    return out;
}

namespace {

/* x_i^{ka} x_{i+1}^{kb} t_i rewritten with the generator in front; keys are
   the exponent pairs of the trailing lattice monomials */
struct Rewrite {
    std::map<std::pair<int, int>, Laurent> with_t, without_t;
};

/* The window shift operators S_i: index minus p on coordinate i satisfy
   t S_{i+1} t = S_i, forced by commutation with the chain action.  Peeling
   one shift letter at a time gives the four cross rules used below. */
Rewrite rewrite_past(int ka, int kb) {
    Rewrite r;
    if (ka == 0 && kb == 0) {
        r.with_t[{0, 0}] = Laurent(1);
        return r;
    }
    Laurent zeta = q_zeta();
    if (ka > 0) {
        /* S_i t = t S_{i+1} + zeta S_i */
        Rewrite s = rewrite_past(ka - 1, kb);
        for (const auto& [e, a] : s.with_t) {
            r.with_t[{e.first, e.second + 1}] += a;
            r.without_t[{e.first + 1, e.second}] += zeta * a;
        }
        for (const auto& [e, a] : s.without_t) r.without_t[{e.first + 1, e.second}] += a;
    } else if (ka < 0) {
        /* S_i^{-1} t = t S_{i+1}^{-1} - zeta S_{i+1}^{-1} */
        Rewrite s = rewrite_past(ka + 1, kb);
        for (const auto& [e, a] : s.with_t) {
            r.with_t[{e.first, e.second - 1}] += a;
            r.without_t[{e.first, e.second - 1}] -= zeta * a;
        }
        for (const auto& [e, a] : s.without_t) r.without_t[{e.first - 1, e.second}] += a;
    } else if (kb > 0) {
        /* S_{i+1} t = t S_i - zeta S_i */
        Rewrite s = rewrite_past(0, kb - 1);
        for (const auto& [e, a] : s.with_t) {
            r.with_t[{e.first + 1, e.second}] += a;
            r.without_t[{e.first + 1, e.second}] -= zeta * a;
        }
        for (const auto& [e, a] : s.without_t) r.without_t[{e.first, e.second + 1}] += a;
    } else {
        /* S_{i+1}^{-1} t = t S_i^{-1} + zeta S_{i+1}^{-1} */
        Rewrite s = rewrite_past(0, kb + 1);
        for (const auto& [e, a] : s.with_t) {
            r.with_t[{e.first - 1, e.second}] += a;
            r.without_t[{e.first, e.second - 1}] += zeta * a;
        }
        for (const auto& [e, a] : s.without_t) r.without_t[{e.first, e.second - 1}] += a;
    }
    return r;
}

}  // namespace

TensorVec TensorModule::act_t(int i, const TensorVec& v) const {
    require(i >= 1 && i <= d - 1, "act_t: generator out of range");
    int ii = i - 1;
    TensorVec out(d);
    for (const auto& [g, f] : v.terms()) {
        int ra = residue_of(g[ii], p), rb = residue_of(g[ii + 1], p);
        int ka = (ra - g[ii]) / p, kb = (rb - g[ii + 1]) / p;
        Vec base = g;
        base[ii] = ra;
        base[ii + 1] = rb;
        /* the three-case rule on the in-range pair */
        TensorVec tb(d);
        if (ra == rb) {
            tb.add(base, Laurent::q_power(1));
        } else {
            Vec sw = base;
            std::swap(sw[ii], sw[ii + 1]);
            tb.add(sw, Laurent(1));
            if (ra < rb) tb.add(base, q_zeta());
        }
        Rewrite rw = rewrite_past(ka, kb);
        for (const auto& [e, coef] : rw.with_t)
            for (const auto& [h, ch] : tb.terms()) {
                Vec ng = h;
                ng[ii] -= p * e.first;
                ng[ii + 1] -= p * e.second;
                out.add(ng, f * coef * ch);
            }
        for (const auto& [e, coef] : rw.without_t) {
            Vec ng = base;
            ng[ii] -= p * e.first;
            ng[ii + 1] -= p * e.second;
            out.add(ng, f * coef);
        }
    }
    return out;
}

TensorVec TensorModule::act_t_inv(int i, const TensorVec& v) const {
    TensorVec out = act_t(i, v);
    out -= q_zeta() * v;
    return out;
}

TensorVec TensorModule::act_x(const Vec& kappa, const TensorVec& v) const {
    require(int(kappa.size()) == d, "act_x: rank mismatch");
    /* x_kappa raises coordinate j by p kappa_j; together with the cross
       rules above this realizes t_i x_i t_i = x_{i+1} on the nose, so the
       lattice part of a Hecke element acts by plain index shifts */
    TensorVec out(d);
    for (const auto& [g, f] : v.terms()) {
        Vec ng = g;
        for (int j = 0; j < d; ++j) ng[j] += p * kappa[j];
        out.add(ng, f);
    }
    return out;
}

TensorVec TensorModule::act_hecke(const HeckeElt& h, const TensorVec& v) const {
    require(h.rank() == d, "act_hecke: rank mismatch");
    Vec e1(d, 0), me1(d, 0);
    e1[0] = 1;
    me1[0] = -1;
    /* the rotation is the first lattice generator followed by the
       ascending braid word; its inverse reverses and inverts */
    auto rot = [&](TensorVec u) {
        u = act_x(e1, u);
        for (int i = 1; i <= d - 1; ++i) u = act_t(i, u);
        return u;
    };
    auto rot_inv = [&](TensorVec u) {
        for (int i = d - 1; i >= 1; --i) u = act_t_inv(i, u);
        return act_x(me1, u);
    };
    TensorVec out(d);
    for (const auto& [x, coef] : h.terms()) {
        PiWord pw = reduced_word(x);
        TensorVec cur = coef * v;
        for (int k = 0; k < pw.k; ++k) cur = rot(cur);
        for (int k = 0; k > pw.k; --k) cur = rot_inv(cur);
        for (int i : pw.word) {
            /* the wrap-around letter is the rotation conjugate of the
               last finite one */
            if (i < d) cur = act_t(i, cur);
            else cur = rot_inv(act_t(d - 1, rot(cur)));
        }
        out += cur;
    }
    return out;
}

GlpWeight TensorModule::index_weight(const Vec& gamma) const {
    require(int(gamma.size()) == d, "index_weight: rank mismatch");
    GlpWeight w;
    w.eps.assign(p, 0);
    for (int j = 0; j < d; ++j) {
        int r = residue_of(gamma[j], p);
        w.eps[r - 1] += 1;
        w.delta += (r - gamma[j]) / p;
    }
    return w;
}

GlpWeight TensorModule::affine_weight(const TensorVec& v) const {
    require(!v.is_zero(), "affine_weight of zero");
    GlpWeight w = index_weight(v.terms().begin()->first);
    for (const auto& [g, f] : v.terms())
        require(index_weight(g) == w, "affine_weight: mixed grades");
    return w;
}

Vec TensorModule::weight(const TensorVec& v) const { return affine_weight(v).eps; }

Laurent loop_frame_factor(const TensorModule& M, const Vec& gamma) {
    return neg_q_power(-dot(residue_translation(gamma, M.p), alpha_c(M.c)));
}

TensorVec to_loop_frame(const TensorModule& M, const TensorVec& v) {
    TensorVec out(M.d);
    for (const auto& [g, f] : v.terms()) out.add(g, f * loop_frame_factor(M, g));
    return out;
}

TensorVec from_loop_frame(const TensorModule& M, const TensorVec& v) {
    TensorVec out(M.d);
    for (const auto& [g, f] : v.terms())
        out.add(g, f * neg_q_power(dot(residue_translation(g, M.p), alpha_c(M.c))));
    return out;
}

Vec cyclic_index(const Vec& c) {
    Vec g;
    for (int m : c)
        for (int a = m; a >= 1; --a) g.push_back(a);
    return g;
}

TensorVec cyclic_vector(const TensorModule& M) {
    return TensorVec::unit(cyclic_index(M.c));
}

std::vector<std::pair<Vec, HeckeElt>> tensor_to_hecke(const TensorModule& M, const TensorVec& v) {
    std::map<Vec, HeckeElt> acc;
    for (const auto& [g, f] : v.terms()) {
        Vec g0 = canonical_residue(g, M.p);
        /* g sits p kappa below its window representative, so the lattice
           part of the image is the inverse monomial */
        Vec kappa = residue_translation(g, M.p);
        for (int& k : kappa) k = -k;
        HeckeElt h = HeckeElt::basis(sort_perm(g0), f) * x_monomial(kappa);
        auto [it, inserted] = acc.try_emplace(content(g0, M.p), HeckeElt(M.d));
        it->second += h;
    }
    return {acc.begin(), acc.end()};
}

namespace {

std::vector<GlpWeight> block_weights(const TensorModule& M, const Vec& g) {
    std::vector<GlpWeight> out;
    int j = 0;
    for (int m : M.c) {
        GlpWeight w;
        w.eps.assign(M.p, 0);
        for (int t = 0; t < m; ++t, ++j) {
            int r = residue_of(g[j], M.p);
            w.eps[r - 1] += 1;
            w.delta += (r - g[j]) / M.p;
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

bool tensor_lt_c(const TensorModule& M, const Vec& a, const Vec& b) {
    if (a == b) return false;
    auto wa = block_weights(M, a), wb = block_weights(M, b);
    size_t l = wa.size();
    GlpWeight total;
    total.eps.assign(M.p, 0);
    for (size_t m = 0; m < l; ++m) {
        GlpWeight diff = wa[m];
        diff.delta -= wb[m].delta;
        for (int x = 0; x < M.p; ++x) diff.eps[x] -= wb[m].eps[x];
        total += diff;
    }
    if (total.delta != 0) return false;
    for (int e : total.eps)
        if (e != 0) return false;
    GlpWeight run;
    run.eps.assign(M.p, 0);
    for (size_t m = 0; m + 1 < l; ++m) {
        run += wa[m];
        run.delta -= wb[m].delta;
        for (int x = 0; x < M.p; ++x) run.eps[x] -= wb[m].eps[x];
        /* each proper prefix must be a nonzero nonnegative root sum */
        int sum = 0;
        bool nonneg = true, zero = run.delta == 0;
        for (int x = 0; x < M.p; ++x) {
            sum += run.eps[x];
            if (run.delta + sum < 0) nonneg = false;
            if (run.eps[x] != 0) zero = false;
        }
        if (sum != 0 || !nonneg || zero) return false;
    }
    return true;
}

long tensor_grade(const TensorModule& M, const Vec& gamma) {
    auto w = block_weights(M, gamma);
    long grade = 0;
    GlpWeight run;
    run.eps.assign(M.p, 0);
    for (size_t m = 0; m + 1 < w.size(); ++m) {
        run += w[m];
        long n = 0, sum = 0;
        for (int x = 0; x < M.p; ++x) {
            sum += run.eps[x];
            n += run.delta + sum;
        }
        grade += n;
    }
    return grade;
}

bool tensor_process_before(const TensorModule& M, const Vec& a, const Vec& b) {
    long ga = tensor_grade(M, a), gb = tensor_grade(M, b);
    if (ga != gb) return ga > gb;
    return a < b;
}

TensorBasisIndex split_index(const TensorModule& M, const Vec& gamma) {
    Vec g0 = canonical_residue(gamma, M.p);
    TensorBasisIndex t;
    t.mu = sorted_desc(g0);
    t.w = sort_perm(g0);
    t.kappa = block_sums(residue_translation(gamma, M.p), M.c);
    return t;
}

Vec realize_index(const TensorModule& M, const TensorBasisIndex& t) {
    Vec g = permute(t.mu, t.w);
    auto starts = block_starts(M.c);
    for (size_t b = 0; b < starts.size(); ++b) g[starts[b]] -= M.p * t.kappa[b];
    return g;
}

/* ---- quotient ------------------------------------------------------- */

QuotientSpace::QuotientSpace(TensorModule M, Vec mu_tilde, int window)
    : M_(std::move(M)), mu_tilde_(std::move(mu_tilde)), win_(window) {
    require(int(mu_tilde_.size()) == M_.p, "QuotientSpace: content length mismatch");
    require(M_.p > M_.d, "QuotientSpace: needs p > d");
    require(win_ >= 0, "QuotientSpace: negative window");
    int total = 0;
    for (int e : mu_tilde_) {
        require(e >= 0, "QuotientSpace: negative content entry");
        total += e;
    }
    require(total == M_.d, "QuotientSpace: content must place d letters");
    margin_ = win_ + M_.d + 2;
    for (int a = M_.p; a >= 1; --a)
        for (int k = 0; k < mu_tilde_[a - 1]; ++k) mu_.push_back(a);

    /* arrangements with strictly decreasing residues inside every block */
    std::set<Vec> arr;
    Vec perm = mu_;
    std::sort(perm.begin(), perm.end());
    auto interior = interior_indices(M_.c);
    do {
        bool ok = true;
        for (int i : interior)
            if (perm[i - 1] <= perm[i]) ok = false;
        if (ok) arr.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto starts = block_starts(M_.c);
    int l = int(starts.size());
    Vec shift(l, -win_);
    for (const Vec& a : arr) {
        std::fill(shift.begin(), shift.end(), -win_);
        for (;;) {
            Vec g = a;
            for (int b = 0; b < l; ++b) g[starts[b]] -= M_.p * shift[b];
            basis_.push_back(g);
            int b = 0;
            while (b < l && shift[b] == win_) shift[b++] = -win_;
            if (b == l) break;
            ++shift[b];
        }
    }
    std::sort(basis_.begin(), basis_.end(),
              [this](const Vec& x, const Vec& y) { return tensor_process_before(M_, x, y); });
}

bool QuotientSpace::is_representative(const Vec& gamma) const {
    auto starts = block_starts(M_.c);
    size_t b = 0;
    int j = 0;
    for (int m : M_.c) {
        for (int t = 0; t < m; ++t, ++j) {
            bool start = j == starts[b];
            int v = gamma[j];
            if (!start && (v < 1 || v > M_.p)) return false;
            if (t > 0 && residue_of(gamma[j - 1], M_.p) <= residue_of(v, M_.p)) return false;
        }
        ++b;
    }
    return true;
}

bool QuotientSpace::in_box(const Vec& gamma, int bound) const {
    Vec kappa = residue_translation(gamma, M_.p);
    for (int k : kappa)
        if (k < -bound || k > bound) return false;
    return true;
}

namespace {

/* distance from representative shape: loop mass off the block starts plus
   residue inversions inside blocks; used to order class eliminations so
   the representative is the last variable standing */
std::pair<int, int> class_key(const TensorModule& M, const Vec& g) {
    Vec kappa = residue_translation(g, M.p);
    auto starts = block_starts(M.c);
    std::set<int> start_set(starts.begin(), starts.end());
    int dev = 0;
    for (int j = 0; j < M.d; ++j)
        if (!start_set.count(j)) dev += std::abs(kappa[j]);
    int inv = 0;
    int j = 0;
    for (int m : M.c) {
        for (int s = 0; s < m; ++s)
            for (int t = s + 1; t < m; ++t)
                if (residue_of(g[j + s], M.p) < residue_of(g[j + t], M.p)) ++inv;
        j += m;
    }
    return {dev, inv};
}

}  // namespace

void QuotientSpace::solve_class(const Vec& gamma) const {
    /* the representative of the class: residues sorted decreasing per
       block, whole loop shift on the block start; absent when a block
       repeats a residue, in which case the class must collapse to zero */
    auto starts = block_starts(M_.c);
    Vec res = canonical_residue(gamma, M_.p);
    Vec kappa = residue_translation(gamma, M_.p);
    Vec rep;
    bool has_rep = true;
    {
        int j = 0;
        for (size_t b = 0; b < M_.c.size(); ++b) {
            int m = M_.c[b];
            Vec blk(res.begin() + j, res.begin() + j + m);
            std::sort(blk.begin(), blk.end(), std::greater<int>());
            for (int s = 0; s + 1 < m; ++s)
                if (blk[s] == blk[s + 1]) has_rep = false;
            int total = 0;
            for (int t = 0; t < m; ++t) total += kappa[j + t];
            blk[0] -= M_.p * total;
            rep.insert(rep.end(), blk.begin(), blk.end());
            j += m;
        }
    }

    /* working box per block, the hull of the two endpoints padded by two */
    std::vector<std::pair<int, int>> box(M_.c.size());
    {
        Vec rk = has_rep ? residue_translation(rep, M_.p) : kappa;
        int j = 0;
        for (size_t b = 0; b < M_.c.size(); ++b) {
            int lo = 0, hi = 0;
            for (int t = 0; t < M_.c[b]; ++t, ++j) {
                lo = std::min({lo, kappa[j], rk[j]});
                hi = std::max({hi, kappa[j], rk[j]});
            }
            box[b] = {lo - 2, hi + 2};
        }
    }
    auto inside = [&](const Vec& g) {
        Vec k = residue_translation(g, M_.p);
        int j = 0;
        for (size_t b = 0; b < M_.c.size(); ++b)
            for (int t = 0; t < M_.c[b]; ++t, ++j)
                if (k[j] < box[b].first || k[j] > box[b].second) return false;
        return true;
    };

    auto interior = interior_indices(M_.c);
    std::set<Vec> cls;
    std::deque<Vec> queue;
    auto push = [&](const Vec& g) {
        if (inside(g) && cls.insert(g).second) queue.push_back(g);
    };
    push(gamma);
    if (has_rep) push(rep);
    while (!queue.empty()) {
        Vec g = queue.front();
        queue.pop_front();
        for (int i : interior) {
            Vec sw = g;
            std::swap(sw[i - 1], sw[i]);
            push(sw);
            Vec up = g, dn = g;
            up[i - 1] -= M_.p;
            up[i] += M_.p;
            dn[i - 1] += M_.p;
            dn[i] -= M_.p;
            push(up);
            push(dn);
        }
        require(cls.size() < 20000, "reduce: class too large");
    }

    std::vector<Vec> vars(cls.begin(), cls.end());
    std::sort(vars.begin(), vars.end(), [&](const Vec& x, const Vec& y) {
        auto kx = class_key(M_, x), ky = class_key(M_, y);
        return kx != ky ? kx > ky : x < y;
    });
    std::map<Vec, int> pos;
    for (size_t i = 0; i < vars.size(); ++i) pos[vars[i]] = int(i);

    /* relation rows; rows whose support leaves the box are dropped, which
       can only leave variables undetermined, never wrongly determined */
    std::vector<std::map<int, RatFun>> rows;
    RatFun q2 = RatFun::from_laurent(Laurent::q_power(2));
    for (const Vec& g : vars) {
        for (int i : interior) {
            TensorVec rel = M_.act_t(i, TensorVec::unit(g));
            rel.add(g, Laurent::q_power(-1));
            std::map<int, RatFun> row;
            bool ok = true;
            for (const auto& [h, f] : rel.terms()) {
                auto it = pos.find(h);
                if (it == pos.end()) {
                    ok = false;
                    break;
                }
                row[it->second] = row[it->second] + RatFun::from_laurent(f);
            }
            if (ok && !row.empty()) rows.push_back(std::move(row));

            /* the interior lattice monomial acts by the sign value q^2 */
            Vec sh = g;
            sh[i - 1] += M_.p;
            sh[i] -= M_.p;
            auto it = pos.find(sh);
            if (it != pos.end()) {
                std::map<int, RatFun> xrow;
                xrow[it->second] = RatFun(Rat(1));
                xrow[pos.at(g)] = xrow[pos.at(g)] - q2;
                rows.push_back(std::move(xrow));
            }
        }
    }

    /* exact elimination; the representative sits at the highest index and
       stays free when the class is consistent with dimension one */
    std::vector<std::map<int, RatFun>> echelon;
    for (auto& row : rows) {
        std::map<int, RatFun> r = std::move(row);
        for (const auto& e : echelon) {
            auto it = r.find(e.begin()->first);
            if (it == r.end()) continue;
            RatFun factor = it->second;
            for (const auto& [v, a] : e) {
                r[v] = r[v] - factor * a;
                if (r[v].is_zero()) r.erase(v);
            }
        }
        if (r.empty()) continue;
        RatFun lead = r.begin()->second;
        for (auto& [v, a] : r) a = a / lead;
        /* keep echelon rows mutually reduced */
        for (auto& e : echelon) {
            auto it = e.find(r.begin()->first);
            if (it == e.end()) continue;
            RatFun factor = it->second;
            for (const auto& [v, a] : r) {
                e[v] = e[v] - factor * a;
                if (e[v].is_zero()) e.erase(v);
            }
        }
        echelon.push_back(std::move(r));
    }

    std::set<int> led;
    for (const auto& e : echelon) led.insert(e.begin()->first);
    int rep_pos = has_rep ? pos.at(rep) : -1;
    bool determined = true;
    for (size_t i = 0; i < vars.size(); ++i)
        if (!led.count(int(i)) && int(i) != rep_pos) determined = false;

    if (!determined) {
        /* under-determined from dropped boundary rows: record nothing and
           let the caller's lookup fail loudly */
        return;
    }

    for (const auto& e : echelon) {
        int v = e.begin()->first;
        TensorVec red(M_.d);
        if (has_rep) {
            RatFun coef;
            auto it = e.find(rep_pos);
            if (it != e.end()) coef = -it->second;
            require(e.size() <= (it != e.end() ? 2u : 1u),
                    "reduce: echelon row not fully reduced");
            if (!coef.is_zero()) red.add(rep, coef.to_laurent());
        } else {
            require(e.size() == 1, "reduce: nonzero class without representative");
        }
        red_.insert_or_assign(vars[v], std::move(red));
    }
    if (has_rep) red_.insert_or_assign(rep, TensorVec::unit(rep));
}

const TensorVec& QuotientSpace::reduce_index(const Vec& gamma) const {
    auto it = red_.find(gamma);
    if (it != red_.end()) return it->second;
    require(periodica::content(canonical_residue(gamma, M_.p), M_.p) == mu_tilde_,
            "reduce: index outside the weight component");
    if (is_representative(gamma)) {
        auto [nit, inserted] = red_.emplace(gamma, TensorVec::unit(gamma));
        return nit->second;
    }
    solve_class(gamma);
    it = red_.find(gamma);
    require(it != red_.end(), "reduce: window too small, relation vectors escape");
    return it->second;
}

TensorVec QuotientSpace::reduce(const TensorVec& raw) const {
    TensorVec out(M_.d);
    for (const auto& [g, f] : raw.terms()) out += f * reduce_index(g);
    return out;
}

TensorVec QuotientSpace::coset_shift(const Vec& shifts, const TensorVec& v) const {
    require(shifts.size() == M_.c.size(), "coset_shift: one exponent per block");
    auto starts = block_starts(M_.c);
    Vec kappa(M_.d, 0);
    for (size_t b = 0; b < starts.size(); ++b) kappa[starts[b]] = shifts[b];
    return reduce(M_.act_x(kappa, v));
}

/* ---- involution-fixed family and canonical vectors ------------------- */

namespace {

const Vec* process_lead(const TensorModule& M, const TensorVec& v) {
    const Vec* best = nullptr;
    for (const auto& [g, f] : v.terms())
        if (!best || tensor_process_before(M, *best, g)) best = &g;
    return best;
}

}  // namespace

TensorFamily tensor_family(const QuotientSpace& Q, size_t budget) {
    const TensorModule& M = Q.module();
    TensorFamily fam;
    int l = int(M.c.size());
    std::deque<TensorVec> queue;
    std::set<Vec> seen;

    auto consider = [&](const TensorVec& raw) {
        if (raw.is_zero()) return false;
        for (const auto& [g, f] : raw.terms())
            if (!Q.in_box(g, Q.margin())) return false;
        const Vec* lead = process_lead(M, raw);
        if (!seen.insert(*lead).second) return false;
        queue.push_back(raw);
        return true;
    };
    auto record = [&](const TensorVec& raw) {
        if (content(canonical_residue(raw.terms().begin()->first, M.p), M.p) != Q.content())
            return;
        TensorVec red(M.d);
        try {
            red = to_loop_frame(M, Q.reduce(raw));
        } catch (const std::exception&) {
            return;  // class escaped the working box; other words may land
        }
        if (red.is_zero()) return;
        Vec lead = *process_lead(M, red);
        Laurent lc = red.coeff(lead);
        if (!lc.is_unit_monomial() || lc.min_deg() != 0) return;
        if (fam.by_leading.count(lead)) return;
        if (lc.coeff(0) < 0) red = Laurent(-1) * red;
        fam.orbit_lead.try_emplace(canonical_residue(lead, M.p), lead);
        fam.by_leading.emplace(std::move(lead), std::move(red));
    };

    /* seeds: loop translates of the cyclic vector across the window, scaled
       so each one is a plain unit in the loop frame */
    TensorVec cyc = cyclic_vector(M);
    Vec shift(l, -(Q.window() + 1));
    auto starts = block_starts(M.c);
    for (;;) {
        Vec kappa(M.d, 0);
        int e = 0;
        for (int b = 0; b < l; ++b) {
            kappa[starts[b]] = shift[b];
            e += shift[b] * (M.c[b] - 1);
        }
        TensorVec s = neg_q_power(-e) * M.act_x(kappa, cyc);
        if (consider(s)) record(s);
        int b = 0;
        while (b < l && shift[b] == Q.window() + 1) shift[b++] = -(Q.window() + 1);
        if (b == l) break;
        ++shift[b];
    }

    size_t visited = 0;
    while (!queue.empty() && visited < budget) {
        TensorVec cur = queue.front();
        queue.pop_front();
        ++visited;
        for (int a = 1; a <= M.p; ++a)
            for (int n = 1; n <= M.d; ++n) {
                TensorVec up = M.e_div(a, n, cur);
                if (consider(up)) record(up);
                TensorVec dn = M.f_div(a, n, cur);
                if (consider(dn)) record(dn);
            }
    }

    for (const Vec& A : Q.basis())
        if (!family_at(Q, fam, A)) fam.uncovered.push_back(A);
    return fam;
}

const TensorVec* family_at(const QuotientSpace& Q, TensorFamily& F, const Vec& rep) {
    auto it = F.by_leading.find(rep);
    if (it != F.by_leading.end()) return &it->second;
    const TensorModule& M = Q.module();
    auto kt = F.orbit_lead.find(canonical_residue(rep, M.p));
    if (kt == F.orbit_lead.end()) return nullptr;
    const Vec& L = kt->second;
    auto starts = block_starts(M.c);
    Vec g(starts.size(), 0);
    Vec check = L;
    for (size_t b = 0; b < starts.size(); ++b) {
        int diff = rep[starts[b]] - L[starts[b]];
        if (diff % M.p != 0) return nullptr;
        g[b] = diff / M.p;
        check[starts[b]] += diff;
    }
    if (check != rep) return nullptr;
    /* conjugate the coset translate into the loop frame; the leftover
       scalar is the frame cost of the shift itself */
    int e = 0;
    for (size_t b = 0; b < starts.size(); ++b) e += g[b] * (M.c[b] - 1);
    TensorVec t(M.d);
    try {
        t = Q.coset_shift(g, from_loop_frame(M, F.by_leading.at(L)));
    } catch (const std::exception&) {
        return nullptr;
    }
    t = neg_q_power(-e) * to_loop_frame(M, t);
    const Vec* lead = process_lead(M, t);
    if (!lead || *lead != rep || !t.coeff(rep).is_one()) return nullptr;
    auto [nit, inserted] = F.by_leading.emplace(rep, std::move(t));
    return &nit->second;
}

std::map<Vec, Laurent> express_in_tensor_family(const QuotientSpace& Q, TensorFamily& F,
                                                TensorVec v) {
    const TensorModule& M = Q.module();
    std::map<Vec, Laurent> coords;
    size_t guard = 0;
    while (!v.is_zero()) {
        require(++guard < 100000, "express: descent guard tripped");
        /* peel at the process-maximal support; family tails sit strictly
           earlier, so the maximum strictly descends */
        Vec lead = *process_lead(M, v);
        const TensorVec* f = family_at(Q, F, lead);
        require(f != nullptr, "express: vector leaves the family span");
        Laurent coef = v.coeff(lead);
        coords[lead] += coef;
        v -= coef * (*f);
        require(v.coeff(lead).is_zero(), "express: lead failed to cancel");
    }
    return coords;
}

TensorVec tensor_iota_on_span(const QuotientSpace& Q, TensorFamily& F, const TensorVec& v) {
    std::map<Vec, Laurent> coords = express_in_tensor_family(Q, F, v);
    TensorVec out(Q.module().d);
    for (const auto& [L, a] : coords) out += a.bar() * (*family_at(Q, F, L));
    return out;
}

TensorBasis tensor_canonical_basis(const QuotientSpace& Q) {
    const TensorModule& M = Q.module();
    TensorFamily F = tensor_family(Q);
    TensorBasis out;
    out.uncovered = F.uncovered;
    std::set<Vec> uncov(F.uncovered.begin(), F.uncovered.end());
    Tail above = Tail::high;
    for (const Vec& A : Q.basis()) {
        if (uncov.count(A)) continue;
        TensorBasisEntry entry;
        entry.index = A;
        TensorVec v = *family_at(Q, F, A);
        std::map<Vec, Laurent> coords{{A, Laurent(1)}};
        bool complete = true;
        size_t rounds = 0;
        for (;;) {
            require(++rounds < 20000, "canonical: elimination guard tripped");
            /* the largest support whose coefficient still sticks out of the
               positive tail is corrected first; corrections only touch
               strictly smaller indices, so the target moves down */
            const Vec* bad = nullptr;
            Laurent r;
            for (const auto& [g, f] : v.terms()) {
                if (g == A) continue;
                Laurent s = symmetric_completion(f, above);
                if (s.is_zero()) continue;
                if (!bad || tensor_process_before(M, *bad, g)) {
                    bad = &g;
                    r = s;
                }
            }
            if (!bad) break;
            Vec B = *bad;
            const TensorVec* fb = family_at(Q, F, B);
            if (!fb) {
                complete = false;
                entry.provenance = "incomplete: family gap at the working edge";
                break;
            }
            v -= r * (*fb);
            coords[B] -= r;
        }
        entry.vec = v;
        if (complete) {
            entry.provenance = "family elimination";
            entry.lattice = v.coeff(A).is_one();
            entry.support_below = true;
            entry.window_safe = true;
            for (const auto& [g, f] : v.terms()) {
                if (g == A) continue;
                if (!supported_in(f, above)) entry.lattice = false;
                if (!tensor_lt_c(M, g, A)) entry.support_below = false;
                if (!Q.in_box(g, Q.window())) entry.window_safe = false;
            }
            TensorVec img(M.d);
            bool expressible = true;
            for (const auto& [L, a] : coords) {
                if (a.is_zero()) continue;
                const TensorVec* fl = family_at(Q, F, L);
                if (!fl) {
                    expressible = false;
                    break;
                }
                img += a.bar() * (*fl);
            }
            entry.bar_fixed = expressible && img == v;
        }
        out.entries.push_back(std::move(entry));
    }
    return out;
}

}  // namespace periodica
