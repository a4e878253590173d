#include "periodica/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace periodica {

WeylElt identity(int d) {
    WeylElt x;
    x.perm.resize(d);
    std::iota(x.perm.begin(), x.perm.end(), 0);
    x.tau.assign(d, 0);
    return x;
}

WeylElt simple(int d, int i) {
    require(i >= 1 && i <= d, "simple reflection index out of range");
    WeylElt x = identity(d);
    if (i < d) {
        std::swap(x.perm[i - 1], x.perm[i]);
    } else {
        std::swap(x.perm[0], x.perm[d - 1]);
        x.tau[0] = -1;
        x.tau[d - 1] = 1;
    }
    return x;
}

WeylElt translation(const Vec& lambda) {
    WeylElt x = identity(int(lambda.size()));
    x.tau = lambda;
    return x;
}

WeylElt rotation(int d) {
    Vec omega(d, 0);
    omega[0] = 1;
    WeylElt x = translation(omega);
    for (int i = 1; i < d; ++i) x = compose(x, simple(d, i));
    return x;
}

WeylElt compose(const WeylElt& a, const WeylElt& b) {
    require(a.d() == b.d(), "compose: rank mismatch");
    int d = a.d();
    WeylElt x;
    x.perm.resize(d);
    x.tau.resize(d);
    for (int j = 0; j < d; ++j) {
        x.perm[j] = a.perm[b.perm[j]];
        x.tau[j] = a.tau[b.perm[j]] + b.tau[j];
    }
    return x;
}

WeylElt invert(const WeylElt& a) {
    int d = a.d();
    WeylElt x;
    x.perm.resize(d);
    x.tau.resize(d);
    for (int j = 0; j < d; ++j) x.perm[a.perm[j]] = j;
    for (int j = 0; j < d; ++j) x.tau[j] = -a.tau[x.perm[j]];
    return x;
}

WeylElt power(const WeylElt& x, int k) {
    WeylElt base = k >= 0 ? x : invert(x);
    WeylElt out = identity(x.d());
    for (int i = 0; i < std::abs(k); ++i) out = compose(out, base);
    return out;
}

Vec act_point(const Vec& P, const WeylElt& x, int level) {
    require(int(P.size()) == x.d(), "act_point: size mismatch");
    Vec out(P.size());
    for (int j = 0; j < x.d(); ++j) out[j] = P[x.perm[j]] - level * x.tau[j];
    return out;
}

Vec act_weight(const Vec& gamma, const WeylElt& x, int p) { return act_point(gamma, x, p); }

Vec permute(const Vec& v, const WeylElt& w) {
    require(is_finite(w), "permute needs a finite element");
    Vec out(v.size());
    for (int j = 0; j < w.d(); ++j) out[j] = v[w.perm[j]];
    return out;
}

bool is_finite(const WeylElt& x) {
    return std::all_of(x.tau.begin(), x.tau.end(), [](int t) { return t == 0; });
}

int pi_power(const WeylElt& x) { return vec_sum(x.tau); }

/* Length as the number of arrangement walls separating the base alcove from
   its image.  An interior point of the base alcove, scaled by 2d so that
   everything stays integral, is (d-1, d-3, ..., 1-d); for the base alcove
   every pairwise floor is zero, so only the image's floors are summed. */
int length(const WeylElt& x) {
    int d = x.d(), S = 2 * d;
    Vec P0(d);
    for (int i = 0; i < d; ++i) P0[i] = d - 1 - 2 * i;
    Vec P = act_point(P0, x, S);
    int len = 0;
    for (int k = 0; k < d; ++k)
        for (int l = k + 1; l < d; ++l) len += std::abs(floor_div(P[k] - P[l], S));
    return len;
}

bool left_descent(const WeylElt& x, int i) {
    return length(compose(simple(x.d(), i), x)) < length(x);
}

PiWord reduced_word(const WeylElt& x) {
    int d = x.d();
    PiWord pw;
    pw.k = pi_power(x);
    WeylElt y = compose(power(rotation(d), -pw.k), x);
    require(pi_power(y) == 0, "reduced_word: rotation part did not cancel");
    int len = length(y);
    while (len > 0) {
        int pick = 0;
        for (int i = 1; i <= d; ++i) {
            if (left_descent(y, i)) {
                pick = i;
                break;
            }
        }
        require(pick != 0, "reduced_word: no descent found");
        pw.word.push_back(pick);
        y = compose(simple(d, pick), y);
        --len;
        require(length(y) == len, "reduced_word: length did not drop by one");
    }
    require(y == identity(d), "reduced_word: residue is not the identity");
    return pw;
}

WeylElt from_pi_word(int d, const PiWord& pw) {
    WeylElt x = power(rotation(d), pw.k);
    for (int i : pw.word) x = compose(x, simple(d, i));
    return x;
}

std::vector<WeylElt> finite_group(int d) {
    std::vector<WeylElt> out;
    WeylElt x = identity(d);
    do {
        out.push_back(x);
    } while (std::next_permutation(x.perm.begin(), x.perm.end()));
    return out;
}

static std::vector<int> block_of(const Vec& f) {
    std::vector<int> b;
    for (size_t i = 0; i < f.size(); ++i)
        for (int k = 0; k < f[i]; ++k) b.push_back(int(i));
    return b;
}

std::vector<WeylElt> parabolic_subgroup(const Vec& f) {
    auto blk = block_of(f);
    std::vector<WeylElt> out;
    for (const auto& w : finite_group(int(blk.size()))) {
        bool ok = true;
        for (size_t j = 0; j < blk.size() && ok; ++j) ok = blk[w.perm[j]] == blk[j];
        if (ok) out.push_back(w);
    }
    return out;
}

WeylElt longest_parabolic(const Vec& f) {
    int d = vec_sum(f);
    WeylElt x = identity(d);
    int pos = 0;
    for (int part : f) {
        for (int k = 0; k < part; ++k) x.perm[pos + k] = pos + part - 1 - k;
        pos += part;
    }
    return x;
}

int nu_of(const Vec& f) {
    int s = 0;
    for (int part : f) s += part * (part - 1) / 2;
    return s;
}

std::vector<WeylElt> distinguished_reps(const Vec& f) {
    int d = vec_sum(f);
    auto interior = interior_indices(f);
    std::vector<WeylElt> out;
    for (const auto& w : finite_group(d)) {
        bool ok = true;
        for (int i : interior)
            if (w.perm[i - 1] > w.perm[i]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

std::vector<WeylElt> distinguished_reps_inv(const Vec& f) {
    int d = vec_sum(f);
    auto interior = interior_indices(f);
    std::vector<WeylElt> out;
    for (const auto& w : finite_group(d)) {
        WeylElt wi = invert(w);
        bool ok = true;
        for (int i : interior)
            if (wi.perm[i - 1] > wi.perm[i]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

WeylElt dominant_coset_element(const Vec& c) {
    Vec f = dual_composition(c);
    std::reverse(f.begin(), f.end());
    auto Wd = parabolic_subgroup(f);
    std::vector<WeylElt> found;
    for (const auto& w : distinguished_reps(c)) {
        int lw = length(w);
        bool top = true;
        for (const auto& u : Wd)
            if (length(compose(u, w)) > lw) {
                top = false;
                break;
            }
        if (top) found.push_back(w);
    }
    require(found.size() == 1, "dominant_coset_element: candidate not unique");
    return found[0];
}

Vec sorted_desc(Vec v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

WeylElt sort_perm(const Vec& v) {
    Vec mu = sorted_desc(v);
    int d = int(v.size());
    WeylElt w = identity(d);
    std::vector<bool> used(d, false);
    for (int k = 0; k < d; ++k) {
        int pick = -1;
        for (int j = 0; j < d; ++j) {
            if (!used[j] && mu[j] == v[k]) {
                pick = j;
                break;
            }
        }
        require(pick >= 0, "sort_perm: entry mismatch");
        used[pick] = true;
        w.perm[k] = pick;
    }
    return w;
}

}  // namespace periodica
