#include "periodica/rootdata.hpp"

#include <algorithm>
#include <numeric>

namespace periodica {

int vec_sum(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0); }

int dot(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "dot: size mismatch");
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec simple_root(int d, int i) {
    require(i >= 1 && i < d, "simple_root index out of range");
    Vec v(d, 0);
    v[i - 1] = 1;
    v[i] = -1;
    return v;
}

Vec highest_root(int d) {
    require(d >= 2, "highest_root needs d >= 2");
    Vec v(d, 0);
    v[0] = 1;
    v[d - 1] = -1;
    return v;
}

Vec fundamental_weight(int d, int i) {
    require(i >= 1 && i < d, "fundamental_weight index out of range");
    Vec v(d, 0);
    std::fill(v.begin(), v.begin() + i, 1);
    return v;
}

int simple_pairing(const Vec& gamma, int i) {
    require(i >= 1 && i < int(gamma.size()), "simple_pairing index out of range");
    return gamma[i - 1] - gamma[i];
}

bool is_dominant(const Vec& gamma) {
    for (size_t i = 0; i + 1 < gamma.size(); ++i)
        if (gamma[i] < gamma[i + 1]) return false;
    return true;
}

bool dominance_leq(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "dominance_leq: size mismatch");
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        s += b[i] - a[i];
        if (s < 0) return false;
    }
    return s == 0;
}

bool is_composition_of(const Vec& c, int d) {
    int s = 0;
    for (int part : c) {
        if (part <= 0) return false;
        s += part;
    }
    return s == d;
}

std::vector<int> interior_indices(const Vec& c) {
    std::vector<int> out;
    int pos = 0, d = vec_sum(c);
    std::vector<bool> is_sum(d + 1, false);
    for (int part : c) {
        pos += part;
        is_sum[pos] = true;
    }
    for (int i = 1; i < d; ++i)
        if (!is_sum[i]) out.push_back(i);
    return out;
}

Vec dual_composition(const Vec& c) {
    int m = *std::max_element(c.begin(), c.end());
    Vec out(m, 0);
    for (int part : c)
        for (int j = 0; j < part; ++j) ++out[j];
    return out;
}

std::vector<Vec> compositions(int d) {
    std::vector<Vec> out;
    Vec cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            self(self, rest - part);
            cur.pop_back();
        }
    };
    rec(rec, d);
    return out;
}

std::vector<Vec> partitions(int d) {
    std::vector<Vec> out;
    Vec cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

Vec block_sums(const Vec& gamma, const Vec& c) {
    require(is_composition_of(c, int(gamma.size())), "block_sums: bad composition");
    Vec out;
    int pos = 0;
    for (int part : c) {
        int s = 0;
        for (int k = 0; k < part; ++k) s += gamma[pos + k];
        out.push_back(s);
        pos += part;
    }
    return out;
}

std::vector<int> block_starts(const Vec& c) {
    std::vector<int> out;
    int pos = 0;
    for (int part : c) {
        out.push_back(pos);
        pos += part;
    }
    return out;
}

Vec alpha_c(const Vec& c) {
    Vec out;
    for (int part : c)
        for (int k = 1; k <= part; ++k) out.push_back(part + 1 - 2 * k);
    return out;
}

static int mod_interval(int x, int p) {  // representative of x in (0, p]
    int r = x % p;
    if (r <= 0) r += p;
    return r;
}

Vec canonical_residue(const Vec& gamma, int p) {
    Vec out(gamma.size());
    for (size_t i = 0; i < gamma.size(); ++i) out[i] = mod_interval(gamma[i], p);
    return out;
}

Vec residue_translation(const Vec& gamma, int p) {
    Vec out(gamma.size());
    for (size_t i = 0; i < gamma.size(); ++i) out[i] = (mod_interval(gamma[i], p) - gamma[i]) / p;
    return out;
}

bool is_residue_balanced(const Vec& gamma, int p) {
    return vec_sum(residue_translation(gamma, p)) == 0;
}

Vec content(const Vec& mu, int p) {
    Vec out(p, 0);
    for (int a : mu) {
        require(a >= 1 && a <= p, "content: entry outside 1..p");
        ++out[a - 1];
    }
    return out;
}

std::vector<Vec> small_weights(int d, int p) {
    require(d <= p, "small_weights needs d <= p");
    std::vector<Vec> out;
    Vec cur;
    auto rec = [&](auto&& self, int next_max) -> void {
        if (int(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (int a = next_max; a >= 1; --a) {
            cur.push_back(a);
            self(self, a - 1);
            cur.pop_back();
        }
    };
    rec(rec, p);
    return out;
}

}  // namespace periodica
