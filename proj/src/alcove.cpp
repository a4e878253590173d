#include "periodica/alcove.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace periodica {

Alcove base_alcove(int d) { return Alcove{identity(d)}; }

Alcove make_alcove(const WeylElt& x) {
    int k = pi_power(x);
    if (k == 0) return Alcove{x};
    return Alcove{compose(power(rotation(x.d()), -k), x)};
}

Alcove act_alcove(const Alcove& A, const WeylElt& y) { return make_alcove(compose(A.x, y)); }

Alcove wall_neighbor(const Alcove& A, int i) {
    return make_alcove(compose(simple(A.d(), i), A.x));
}

static Vec scaled_point(const Alcove& A) {
    int d = A.d();
    Vec P0(d);
    for (int i = 0; i < d; ++i) P0[i] = d - 1 - 2 * i;
    return act_point(P0, A.x, 2 * d);
}

std::vector<int> floor_vector(const Alcove& A) {
    int d = A.d(), S = 2 * d;
    Vec P = scaled_point(A);
    std::vector<int> out;
    out.reserve(d * (d - 1) / 2);
    for (int k = 0; k < d; ++k)
        for (int l = k + 1; l < d; ++l) out.push_back(floor_div(P[k] - P[l], S));
    return out;
}

int floor_at(const Alcove& A, int k, int l) {
    require(0 <= k && k < l && l < A.d(), "floor_at: bad pair");
    Vec P = scaled_point(A);
    return floor_div(P[k] - P[l], 2 * A.d());
}

int wall_direction(const Alcove& A, int i) {
    auto fa = floor_vector(A), fb = floor_vector(wall_neighbor(A, i));
    int found = 0, dir = 0;
    for (size_t j = 0; j < fa.size(); ++j) {
        if (fa[j] != fb[j]) {
            ++found;
            dir = fb[j] - fa[j];
        }
    }
    require(found == 1 && (dir == 1 || dir == -1), "wall_direction: not adjacent");
    return dir;
}

/* the image of A under reflection across the level-n hyperplane of the
   coordinate pair (k,l); an element of the non-extended group, so this is
   plain right composition */
static Alcove reflect_across(const Alcove& A, int k, int l, int n) {
    WeylElt r = identity(A.d());
    r.perm[k] = l;
    r.perm[l] = k;
    r.tau[k] = -n;
    r.tau[l] = n;
    return act_alcove(A, r);
}

static int floor_sum(const std::vector<int>& f) {
    int s = 0;
    for (int v : f) s += v;
    return s;
}

Tri generic_leq(const Alcove& A, const Alcove& B, size_t budget) {
    require(A.d() == B.d(), "generic_leq: rank mismatch");
    if (A == B) return Tri::yes;
    int d = A.d();
    int hb = floor_sum(floor_vector(B));
    if (floor_sum(floor_vector(A)) >= hb) return Tri::no;
    std::deque<Alcove> queue{A};
    std::set<Alcove> seen{A};
    while (!queue.empty()) {
        Alcove C = queue.front();
        queue.pop_front();
        auto fc = floor_vector(C);
        int gap = hb - floor_sum(fc);
        size_t idx = 0;
        for (int k = 0; k < d; ++k)
            for (int l = k + 1; l < d; ++l, ++idx) {
                int f = fc[idx];
                /* crossing the level-n hyperplane from below sends the pair's
                   floor to 2n-1-f and raises the floor sum by at least
                   2(n-f)-1, so higher levels overshoot B */
                for (int n = f + 1; 2 * (n - f) - 1 <= gap; ++n) {
                    Alcove N = reflect_across(C, k, l, n);
                    int hn = floor_sum(floor_vector(N));
                    require(hn - (hb - gap) >= 2 * (n - f) - 1,
                            "generic_leq: crossing failed to rise");
                    if (hn > hb) continue;
                    if (N == B) return Tri::yes;
                    if (seen.insert(N).second) {
                        if (seen.size() > budget) return Tri::unknown;
                        queue.push_back(N);
                    }
                }
            }
    }
    return Tri::no;
}

Tri generic_lt(const Alcove& A, const Alcove& B, size_t budget) {
    if (A == B) return Tri::no;
    return generic_leq(A, B, budget);
}

static std::vector<std::pair<int, int>> block_pairs(const Vec& c) {
    std::vector<std::pair<int, int>> out;
    int pos = 0;
    for (int part : c) {
        for (int k = 0; k < part; ++k)
            for (int l = k + 1; l < part; ++l) out.emplace_back(pos + k, pos + l);
        pos += part;
    }
    return out;
}

bool in_region(const Alcove& A, const Vec& c) {
    require(is_composition_of(c, A.d()), "in_region: bad composition");
    for (auto [k, l] : block_pairs(c))
        if (floor_at(A, k, l) != 0) return false;
    return true;
}

/* Search one block for the affine adjustment: a block permutation and a
   zero-sum block translation whose inverse clears every block floor of the
   translated base alcove.  Simple transitivity of the block affine group on
   block alcoves makes the solution unique; the uniqueness check is kept. */
static void block_adjust(const Vec& gamma, int start, int m, WeylElt& y_out) {
    int d = int(gamma.size());
    int bound = 2;
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            bound = std::max(bound, std::abs(gamma[start + k] - gamma[start + l]) + 2);

    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Vec> translations;
    Vec t(m, 0);
    auto rec = [&](auto&& self, int pos, int sum) -> void {
        if (pos == m - 1) {
            if (std::abs(sum) <= bound) {
                t[pos] = -sum;
                translations.push_back(t);
            }
            return;
        }
        for (int v = -bound; v <= bound; ++v) {
            t[pos] = v;
            self(self, pos + 1, sum + v);
        }
    };
    rec(rec, 0, 0);

    bool found = false;
    do {
        for (const Vec& tr : translations) {
            WeylElt y = identity(d);
            for (int k = 0; k < m; ++k) {
                y.perm[start + k] = start + idx[k];
                y.tau[start + k] = tr[k];
            }
            Alcove moved = make_alcove(compose(translation(gamma), invert(y)));
            bool ok = true;
            for (int k = 0; k < m && ok; ++k)
                for (int l = k + 1; l < m && ok; ++l)
                    ok = floor_at(moved, start + k, start + l) == 0;
            if (ok) {
                require(!found, "region_adjust: block solution not unique");
                found = true;
                for (int k = 0; k < m; ++k) {
                    y_out.perm[start + k] = y.perm[start + k];
                    y_out.tau[start + k] = y.tau[start + k];
                }
            }
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    require(found, "region_adjust: no block solution");
}

WeylElt region_adjust(const Vec& c, const Vec& gamma) {
    static std::map<std::pair<Vec, Vec>, WeylElt> cache;
    auto key = std::make_pair(c, gamma);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int d = int(gamma.size());
    require(vec_sum(gamma) == 0, "region_adjust: gamma not in the root lattice");
    require(is_composition_of(c, d), "region_adjust: bad composition");
    WeylElt y = identity(d);
    int pos = 0;
    for (int part : c) {
        if (part > 1) block_adjust(gamma, pos, part, y);
        pos += part;
    }
    cache.emplace(key, y);
    return y;
}

WeylElt region_translation(const Vec& c, const Vec& gamma) {
    return compose(translation(gamma), invert(region_adjust(c, gamma)));
}

Alcove region_apply(const Vec& c, const Vec& gamma, const Alcove& A) {
    require(in_region(A, c), "region_apply: alcove outside the region");
    return act_alcove(A, region_translation(c, gamma));
}

RegionCoord region_decompose(const Vec& c, const Alcove& A) {
    require(in_region(A, c), "region_decompose: alcove outside the region");
    int d = A.d();
    /* The translation part of a root-lattice coset move is gamma permuted
       within blocks plus a zero-sum block vector, so the block sums of tau
       recover gamma mod ZI_c.  The block-start embedding is the canonical
       representative; the finite part is then forced. */
    Vec g = block_sums(A.x.tau, c);
    auto starts = block_starts(c);
    Vec gamma(d, 0);
    for (size_t b = 0; b < c.size(); ++b) gamma[starts[b]] = g[b];
    WeylElt w = compose(A.x, invert(region_translation(c, gamma)));
    require(is_finite(w), "region_decompose: translation residue");
    auto reps = distinguished_reps(c);
    require(std::find(reps.begin(), reps.end(), w) != reps.end(),
            "region_decompose: finite part not distinguished");
    return RegionCoord{w, gamma};
}

std::vector<Alcove> alcoves_in_window(int d, int radius) {
    std::set<Alcove> seen;
    Vec lambda(d, -radius);
    for (const auto& u : finite_group(d)) {
        std::fill(lambda.begin(), lambda.end(), -radius);
        while (true) {
            WeylElt x = u;
            x.tau = lambda;
            seen.insert(make_alcove(x));
            int pos = 0;
            while (pos < d && lambda[pos] == radius) lambda[pos++] = -radius;
            if (pos == d) break;
            ++lambda[pos];
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace periodica
