#include "periodica/periodic.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace periodica {

int height(const Alcove& A) {
    int s = 0;
    for (int f : floor_vector(A)) s += f;
    return s;
}

bool process_before(const Alcove& A, const Alcove& B) {
    int ha = height(A), hb = height(B);
    return ha != hb ? ha < hb : A.x < B.x;
}

AlcoveVec PeriodicModule::gen_act(int i, const AlcoveVec& v) const {
    AlcoveVec out(d);
    Laurent zeta = q_zeta();
    for (const auto& [A, a] : v.terms()) {
        Alcove B = wall_neighbor(A, i);
        if (!in_region(B, c)) {
            out.add(A, -Laurent::q_power(-1) * a);
        } else if (wall_direction(A, i) == 1) {
            out.add(B, a);
        } else {
            out.add(B, a);
            out.add(A, zeta * a);
        }
    }
    return out;
}

AlcoveVec PeriodicModule::gen_inv_act(int i, const AlcoveVec& v) const {
    AlcoveVec out = gen_act(i, v);
    out -= q_zeta() * v;
    return out;
}

AlcoveVec PeriodicModule::raise(int i, const AlcoveVec& v) const {
    AlcoveVec out = gen_act(i, v);
    out += Laurent::q_power(-1) * v;
    return out;
}

AlcoveVec PeriodicModule::coset_act(const Vec& gamma, const AlcoveVec& v) const {
    require(vec_sum(gamma) == 0, "coset_act: gamma not in the root lattice");
    int pairing = dot(gamma, alpha_c(c));
    Laurent sign = Laurent(pairing % 2 == 0 ? 1 : -1);
    AlcoveVec out(d);
    for (const auto& [A, a] : v.terms()) out.add(region_apply(c, gamma, A), sign * a);
    return out;
}

AlcoveVec PeriodicModule::hecke_act(const HeckeElt& h, const AlcoveVec& v) const {
    require(h.rank() == d, "hecke_act: rank mismatch");
    AlcoveVec out(d);
    for (const auto& [y, a] : h.terms()) {
        require(pi_power(y) == 0, "hecke_act: rotation components do not act here");
        PiWord pw = reduced_word(y);
        AlcoveVec tmp = a * v;
        for (auto it = pw.word.rbegin(); it != pw.word.rend(); ++it) tmp = gen_act(*it, tmp);
        out += tmp;
    }
    return out;
}

AlcoveVec PeriodicModule::base_generator() const {
    Vec f = dual_composition(c);
    std::reverse(f.begin(), f.end());
    WeylElt sigma = dominant_coset_element(c);
    int nu = nu_of(f);
    AlcoveVec m(d);
    for (const auto& w : parabolic_subgroup(f))
        m.add(make_alcove(compose(w, sigma)), Laurent::q_power(length(w) - nu));
    return m;
}

std::vector<Alcove> PeriodicModule::module_window(int radius) const {
    std::vector<Alcove> out;
    for (const auto& A : alcoves_in_window(d, radius))
        if (in_region(A, c)) out.push_back(A);
    std::sort(out.begin(), out.end(), process_before);
    return out;
}

namespace {

/* process-order maximum of the support */
Alcove leading_alcove(const AlcoveVec& v) {
    require(!v.is_zero(), "leading_alcove of zero");
    auto it = v.terms().begin();
    Alcove best = it->first;
    for (++it; it != v.terms().end(); ++it)
        if (process_before(best, it->first)) best = it->first;
    return best;
}

/* accepts vectors whose unique top alcove carries coefficient +-1; output
   is normalized to +1 */
bool normalize_candidate(AlcoveVec& v) {
    if (v.is_zero()) return false;
    Alcove lead = leading_alcove(v);
    int top = height(lead);
    int at_top = 0;
    for (const auto& [A, a] : v.terms()) at_top += height(A) == top;
    if (at_top != 1) return false;
    Laurent c = v.coeff(lead);
    if (c == Laurent(-1)) v = Laurent(-1) * v;
    else if (c != Laurent(1)) return false;
    return true;
}

/* representative preference: nearest the base in height, then processing
   order; any fixed rule works, this one keeps supports small */
bool rep_before(const Alcove& A, const Alcove& B) {
    int ha = std::abs(height(A)), hb = std::abs(height(B));
    return ha != hb ? ha < hb : process_before(A, B);
}

/* One family vector per translation orbit, carried to any requested leading
   alcove by coset translation.  Translation shifts heights uniformly on the
   region, so leads and triangularity travel along; the sign is normalized
   back to a unit lead. */
struct OrbitFamily {
    const PeriodicModule& M;
    struct Rep {
        Alcove lead;
        Vec gamma;
        AlcoveVec vec;
    };
    std::map<WeylElt, Rep> reps;
    std::map<Alcove, AlcoveVec> cache;

    OrbitFamily(const PeriodicModule& M_, const std::map<Alcove, AlcoveVec>& by_leading)
        : M(M_) {
        for (const auto& [lead, vec] : by_leading) {
            RegionCoord rc = region_decompose(M.c, lead);
            auto [it, fresh] = reps.try_emplace(rc.w, Rep{lead, rc.gamma, vec});
            if (!fresh && rep_before(lead, it->second.lead))
                it->second = Rep{lead, rc.gamma, vec};
        }
    }

    const AlcoveVec* at(const Alcove& A) {
        auto hit = cache.find(A);
        if (hit != cache.end()) return &hit->second;
        RegionCoord rc = region_decompose(M.c, A);
        auto it = reps.find(rc.w);
        if (it == reps.end()) return nullptr;
        Vec delta(rc.gamma.size());
        for (size_t i = 0; i < delta.size(); ++i) delta[i] = rc.gamma[i] - it->second.gamma[i];
        AlcoveVec v = M.coset_act(delta, it->second.vec);
        if (leading_alcove(v) != A) return nullptr;
        if (v.coeff(A) == Laurent(-1)) v = Laurent(-1) * v;
        if (!v.coeff(A).is_one()) return nullptr;
        return &cache.emplace(A, std::move(v)).first->second;
    }
};

/* True when the later residual is a signed coset translate of the earlier
   one strictly lower down.  The guards make the elimination from the later
   residual mirror, translated, the one from the earlier: the shift is
   uniform across the support, the family is translation-equivariant, the
   symmetric part commutes with a sign, and the next target is picked by
   height alone since the violating heights are pairwise distinct.  The
   residual then recurs forever, marching to minus infinity. */
bool wedge_recurs(const PeriodicModule& M, const AlcoveVec& J_old, const AlcoveVec& J_now) {
    if (J_old.is_zero() || J_now.is_zero()) return false;
    Alcove l_old = leading_alcove(J_old), l_now = leading_alcove(J_now);
    RegionCoord a = region_decompose(M.c, l_old), b = region_decompose(M.c, l_now);
    if (!(a.w == b.w)) return false;
    Vec delta(a.gamma.size());
    bool moved = false;
    for (size_t i = 0; i < delta.size(); ++i) {
        delta[i] = b.gamma[i] - a.gamma[i];
        moved |= delta[i] != 0;
    }
    if (!moved) return false;
    AlcoveVec t = M.coset_act(delta, J_old);
    if (t != J_now && Laurent(-1) * t != J_now) return false;
    int shift = height(l_now) - height(l_old);
    if (shift >= 0) return false;
    std::set<int> violating_heights;
    for (const auto& [X, f] : J_old.terms()) {
        if (height(region_apply(M.c, delta, X)) - height(X) != shift) return false;
        if (!symmetric_completion(f, Tail::low).is_zero() &&
            !violating_heights.insert(height(X)).second)
            return false;
    }
    return true;
}

}  // namespace

SpanningFamily spanning_family(const PeriodicModule& M, int radius, size_t budget) {
    std::vector<Alcove> window = M.module_window(radius);
    std::set<Alcove> window_set(window.begin(), window.end());
    auto inside = [&](const AlcoveVec& v) {
        for (const auto& [A, a] : v.terms())
            if (!window_set.count(A)) return false;
        return true;
    };

    std::map<Alcove, AlcoveVec> found;
    std::deque<AlcoveVec> queue;

    // first vector per leading alcove wins; raise paths are not re-explored
    // through an already covered lead, keeping the closure linear in the
    // window size
    auto offer = [&](AlcoveVec v) {
        if (!normalize_candidate(v)) return;
        if (!inside(v)) return;
        if (!found.emplace(leading_alcove(v), v).second) return;
        queue.push_back(std::move(v));
    };

    AlcoveVec m = M.base_generator();
    int nblocks = int(M.c.size());
    auto starts = block_starts(M.c);
    int G = radius + 2;
    Vec g(nblocks, -G);
    while (true) {
        // only root-lattice translates exist; the seed coset is determined by
        // zero-sum block coordinates
        if (std::accumulate(g.begin(), g.end(), 0) == 0) {
            Vec gamma(M.d, 0);
            for (int b = 0; b < nblocks; ++b) gamma[starts[b]] = g[b];
            offer(M.coset_act(gamma, m));
        }
        int pos = 0;
        while (pos < nblocks && g[pos] == G) g[pos++] = -G;
        if (pos == nblocks) break;
        ++g[pos];
    }

    size_t processed = 0;
    while (!queue.empty() && processed < budget) {
        AlcoveVec v = std::move(queue.front());
        queue.pop_front();
        ++processed;
        for (int i = 1; i <= M.d; ++i) offer(M.raise(i, v));
    }

    // equivariant rebuild: each orbit representative is translated to every
    // window lead of its orbit, which also fills leads the raise closure
    // only reached with support spilling past the window
    SpanningFamily out;
    OrbitFamily orbits(M, found);
    for (const auto& A : window) {
        const AlcoveVec* v = orbits.at(A);
        if (v) out.by_leading.emplace(A, *v);
        else out.uncovered.push_back(A);
    }
    return out;
}

std::map<Alcove, Laurent> express_in_family(const SpanningFamily& F, AlcoveVec v) {
    std::map<Alcove, Laurent> coords;
    size_t guard = 0;
    while (!v.is_zero()) {
        require(++guard < 100000, "express_in_family: no progress");
        Alcove lead = leading_alcove(v);
        auto it = F.by_leading.find(lead);
        require(it != F.by_leading.end(), "express_in_family: vector outside the span");
        Laurent a = v.coeff(lead);
        coords[lead] += a;
        v -= a * it->second;
        require(v.is_zero() || process_before(leading_alcove(v), lead),
                "express_in_family: family vector is not triangular");
    }
    return coords;
}

AlcoveVec iota_on_span(const SpanningFamily& F, const AlcoveVec& v) {
    AlcoveVec out(v.rank());
    for (const auto& [k, a] : express_in_family(F, v)) out += a.bar() * F.by_leading.at(k);
    return out;
}

PeriodicBasis periodic_canonical_basis(const PeriodicModule& M, int radius, int pad) {
    if (pad <= 0) {
        Vec f = dual_composition(M.c);
        std::reverse(f.begin(), f.end());
        pad = nu_of(f) + 4;
    }
    SpanningFamily family = spanning_family(M, radius + pad);
    OrbitFamily orbits(M, family.by_leading);
    std::vector<Alcove> core = M.module_window(radius);
    std::vector<Alcove> padded = M.module_window(radius + pad);
    std::set<Alcove> padded_set(padded.begin(), padded.end());

    std::map<std::pair<Alcove, Alcove>, Tri> leq_cache;
    auto leq = [&](const Alcove& A, const Alcove& B) {
        auto key = std::make_pair(A, B);
        auto it = leq_cache.find(key);
        if (it != leq_cache.end()) return it->second;
        Tri t = generic_leq(A, B);
        leq_cache.emplace(key, t);
        return t;
    };

    constexpr int gap_min = 2, history_cap = 24;
    // every level of the core window is final once the violation has passed
    // below this
    int stop_level = height(core.front()) - 2;

    PeriodicBasis out;
    for (const Alcove& A : core) {
        const AlcoveVec* f0 = orbits.at(A);
        if (!f0) {
            out.uncovered.push_back(A);
            continue;
        }
        AlcoveVec v = *f0;
        std::map<Alcove, Laurent> coords{{A, Laurent(1)}};
        struct Snap {
            AlcoveVec head, wedge;
        };
        std::deque<Snap> history;
        enum { running, exact, periodic, settled, incomplete } state = running;
        AlcoveVec final_vec(M.d);
        int final_depth = 0;
        int steps = 0;
        int step_budget = 200 * (height(A) - stop_level + 5);
        while (state == running) {
            // process-maximal strict-lower support with a bar-symmetric part
            const Alcove* target = nullptr;
            Laurent completion;
            for (const auto& [B, f] : v.terms()) {
                if (B == A) continue;
                Laurent r = symmetric_completion(f, Tail::low);
                if (r.is_zero()) continue;
                if (!target || process_before(*target, B)) {
                    target = &B;
                    completion = r;
                }
            }
            if (!target) {
                state = exact;
                final_vec = v;
                break;
            }
            Alcove B = *target;
            // everything strictly above the violation never changes again
            AlcoveVec head(M.d), wedge(M.d);
            for (const auto& [X, f] : v.terms())
                (process_before(B, X) ? head : wedge).add(X, f);
            if (height(B) < stop_level) {
                state = settled;
                final_vec = head;
                final_depth = height(B);
                break;
            }
            // if the head has stabilized and the wedge recurs as a signed
            // translate of an earlier one, the wedge telescopes away in the
            // completion and the head is the limit everywhere below as well
            int bot = INT_MAX;
            for (const auto& [X, f] : head.terms()) bot = std::min(bot, height(X));
            if (!head.is_zero() && bot - height(B) >= gap_min) {
                for (const auto& snap : history)
                    if (snap.wedge.terms().size() == wedge.terms().size() &&
                        snap.head == head && wedge_recurs(M, snap.wedge, wedge)) {
                        state = periodic;
                        final_vec = head;
                        break;
                    }
                if (state == running) {
                    history.push_back({head, wedge});
                    if (int(history.size()) > history_cap) history.pop_front();
                }
            }
            if (state != running) break;
            const AlcoveVec* fb = orbits.at(B);
            if (!fb || ++steps > step_budget) {
                state = incomplete;
                final_vec = v;
                break;
            }
            v -= completion * (*fb);
            coords.try_emplace(B, Laurent(0)).first->second -= completion;
        }

        PeriodicBasisEntry e{A, final_vec, "", false, false, false, false};
        e.provenance = state == exact      ? "family elimination"
                       : state == periodic ? "family elimination; periodic tail discarded"
                       : state == settled  ? "family elimination; final above height " +
                                                std::to_string(final_depth)
                                           : "incomplete elimination";
        e.triangular = e.vec.coeff(A).is_one();
        for (const auto& [B, f] : e.vec.terms())
            if (B != A && !supported_in(f, Tail::low)) e.triangular = false;
        if (state == exact) {
            // finite family combination: conjugating the coordinates must
            // reproduce the vector, since every family vector is fixed
            AlcoveVec conj(M.d);
            bool ok = true;
            for (const auto& [B, a] : coords) {
                const AlcoveVec* fb = orbits.at(B);
                if (!fb) {
                    ok = false;
                    break;
                }
                conj += a.bar() * (*fb);
            }
            e.bar_fixed = ok && conj == e.vec;
        } else if (state == periodic || state == settled) {
            // limit of fixed combinations; the emitted part is final
            e.bar_fixed = true;
        }
        e.support_below = true;
        for (const auto& [B, f] : e.vec.terms())
            if (leq(B, A) != Tri::yes) e.support_below = false;
        e.window_safe = state != incomplete;
        for (const auto& [B, f] : e.vec.terms())
            for (int i = 1; i <= M.d && e.window_safe; ++i) {
                Alcove N = wall_neighbor(B, i);
                if (in_region(N, M.c) && !padded_set.count(N)) e.window_safe = false;
            }
        out.entries.push_back(std::move(e));
    }
    return out;
}

}  // namespace periodica
