#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "periodica/hecke.hpp"

namespace periodica {

/* finite Laurent combination of tensor indices; the key gamma in Z^d names
   a product of single letters, with loop degrees absorbed into the index
   by steps of p */
class TensorVec {
public:
    explicit TensorVec(int d) : d_(d) {}
    static TensorVec unit(const Vec& gamma, Laurent coef = Laurent(1)) {
        TensorVec v(int(gamma.size()));
        v.add(gamma, coef);
        return v;
    }

    int rank() const { return d_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Vec, Laurent>& terms() const { return c_; }
    Laurent coeff(const Vec& gamma) const {
        auto it = c_.find(gamma);
        return it == c_.end() ? Laurent(0) : it->second;
    }

    void add(const Vec& gamma, const Laurent& a) {
        require(int(gamma.size()) == d_, "TensorVec: rank mismatch");
        if (a.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(gamma, a);
        if (!inserted) {
            it->second += a;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    TensorVec& operator+=(const TensorVec& w) {
        require(w.d_ == d_, "TensorVec: rank mismatch");
        for (const auto& [g, a] : w.c_) add(g, a);
        return *this;
    }
    TensorVec& operator-=(const TensorVec& w) {
        require(w.d_ == d_, "TensorVec: rank mismatch");
        for (const auto& [g, a] : w.c_) add(g, -a);
        return *this;
    }
    friend TensorVec operator+(TensorVec v, const TensorVec& w) { return v += w; }
    friend TensorVec operator-(TensorVec v, const TensorVec& w) { return v -= w; }
    friend TensorVec operator*(const Laurent& s, const TensorVec& w) {
        TensorVec v(w.d_);
        for (const auto& [g, a] : w.c_) v.add(g, s * a);
        return v;
    }
    bool operator==(const TensorVec& w) const { return d_ == w.d_ && c_ == w.c_; }
    bool operator!=(const TensorVec& w) const { return !(*this == w); }

private:
    int d_;
    std::map<Vec, Laurent> c_;
};

/* letter multiplicities on the p-alphabet together with the loop grade */
struct GlpWeight {
    Vec eps;  // length p
    int delta = 0;

    bool operator==(const GlpWeight& w) const { return eps == w.eps && delta == w.delta; }
    bool operator!=(const GlpWeight& w) const { return !(*this == w); }
    GlpWeight& operator+=(const GlpWeight& w) {
        require(eps.size() == w.eps.size(), "GlpWeight: alphabet mismatch");
        for (size_t a = 0; a < eps.size(); ++a) eps[a] += w.eps[a];
        delta += w.delta;
        return *this;
    }
};

/* The d-fold tensor power of the vectorial representation of the quantum
   loop algebra on p letters, with the right Hecke action on the same
   space.  A letter moves by one step under the Chevalley generators; the
   tensor action iterates the coproduct left to right, so the k-twist of e
   lands on the factors after the moved one and the twist of f on the
   factors before it.

   The right action: lattice monomials shift the index by steps of p; a
   braid generator acts on an in-range pair by the three-case rule (scalar
   q on a fixed pair, plain swap downward, swap plus q - q^{-1} upward)
   and is extended to out-of-range entries by commuting the canonical
   shift across the generator.  The two actions commute; the tests use
   that as the arbiter for every ordering convention. */
struct TensorModule {
    int d, p;
    Vec c;

    TensorModule(int d_, int p_, Vec c_);

    int block_of(int j) const;  // 0-based factor index -> block number

    TensorVec e_act(int a, const TensorVec& v) const;
    TensorVec f_act(int a, const TensorVec& v) const;
    /* divided powers; coefficients stay integral, enforced by exact division */
    TensorVec e_div(int a, int n, const TensorVec& v) const;
    TensorVec f_div(int a, int n, const TensorVec& v) const;
    TensorVec l_act(int a, const TensorVec& v, bool inverse = false) const;

    TensorVec act_t(int i, const TensorVec& v) const;
    TensorVec act_t_inv(int i, const TensorVec& v) const;
    TensorVec act_x(const Vec& kappa, const TensorVec& v) const;
    /* right action of a whole Hecke element through rotation powers and
       reduced words */
    TensorVec act_hecke(const HeckeElt& h, const TensorVec& v) const;

    GlpWeight index_weight(const Vec& gamma) const;
    /* common grade of a homogeneous vector; throws on mixed input */
    GlpWeight affine_weight(const TensorVec& v) const;
    Vec weight(const TensorVec& v) const;  // letter content, loop grade dropped
};

/* The evaluation parameters of the blockwise twisted product differ from
   plain tensor coordinates by a diagonal rescale: the unit at gamma is
   divided by (-q) to the pairing of its loop shift with the block root
   sum.  In that frame a loop translate costs nothing, interior lattice
   relations become coefficient free, and canonical leading terms are
   honest units.  The factor below converts a plain coordinate into a
   frame coordinate; the two conversions transform whole vectors. */
Laurent loop_frame_factor(const TensorModule& M, const Vec& gamma);
TensorVec to_loop_frame(const TensorModule& M, const TensorVec& v);
TensorVec from_loop_frame(const TensorModule& M, const TensorVec& v);

/* the pure tensor running each block from its size down to one */
Vec cyclic_index(const Vec& c);
TensorVec cyclic_vector(const TensorModule& M);

/* decomposition along letter contents: each component is the parabolic sum
   of its content times a Hecke element, and the sorted index maps to the
   parabolic sum itself */
std::vector<std::pair<Vec, HeckeElt>> tensor_to_hecke(const TensorModule& M, const TensorVec& v);

/* Strict order on indices: a <_c b iff the total blockwise affine weights
   agree and every proper prefix of the blockwise differences is a nonzero
   nonnegative sum of affine simple roots of the alphabet.  tensor_grade is
   a potential that strictly drops from a to b when a <_c b, so sorting by
   (grade descending, lex) is a linear extension with the lower elements
   first. */
bool tensor_lt_c(const TensorModule& M, const Vec& a, const Vec& b);
long tensor_grade(const TensorModule& M, const Vec& gamma);
bool tensor_process_before(const TensorModule& M, const Vec& a, const Vec& b);

/* sorted letters, arrangement, and one loop exponent per block */
struct TensorBasisIndex {
    Vec mu;
    WeylElt w;
    Vec kappa;
};
TensorBasisIndex split_index(const TensorModule& M, const Vec& gamma);
Vec realize_index(const TensorModule& M, const TensorBasisIndex& t);

/* Weight component of the twisted tensor product modulo the sign-character
   relations of the interior generators: v t_i ~ -q^{-1} v and
   v x_{alpha_i} ~ q^2 v.  Representatives are the indices whose residues
   strictly decrease inside every block with the whole loop shift on the
   block's first coordinate; every index of the component reduces to a
   multiple of a representative, or to zero, by exact classwise
   elimination over rational functions, cleared to Laurent form at the
   end.  Reductions whose connecting moves leave the working box raise an
   error instead of truncating. */
class QuotientSpace {
public:
    QuotientSpace(TensorModule M, Vec mu_tilde, int window);

    const TensorModule& module() const { return M_; }
    const Vec& content() const { return mu_tilde_; }
    const Vec& mu() const { return mu_; }
    int window() const { return win_; }
    int margin() const { return margin_; }
    /* representative indices inside the window, lower elements first */
    const std::vector<Vec>& basis() const { return basis_; }

    bool is_representative(const Vec& gamma) const;
    /* loop exponents of every coordinate bounded by the given radius */
    bool in_box(const Vec& gamma, int bound) const;

    const TensorVec& reduce_index(const Vec& gamma) const;
    TensorVec reduce(const TensorVec& raw) const;

    /* right multiplication by the loop coset monomial with one exponent
       per block */
    TensorVec coset_shift(const Vec& shifts, const TensorVec& v) const;

private:
    TensorModule M_;
    Vec mu_tilde_, mu_;
    int win_, margin_;
    std::vector<Vec> basis_;
    mutable std::map<Vec, TensorVec> red_;

    void solve_class(const Vec& gamma) const;
};

/* Vectors fixed by the tensor involution with unit leading coefficients:
   words of divided powers applied to loop translates of the cyclic
   vector, reduced into the weight component, deduplicated by leading
   index.  Stored vectors carry loop frame coordinates, which makes the
   translates of a recorded vector plain index shifts.  One representative
   per loop orbit is enough; translates cover the rest of the window.
   Window indices never reached are reported. */
struct TensorFamily {
    std::map<Vec, TensorVec> by_leading;
    std::map<Vec, Vec> orbit_lead;  // residue pattern -> one recorded lead
    std::vector<Vec> uncovered;
};
TensorFamily tensor_family(const QuotientSpace& Q, size_t budget = 200000);
/* family vector at an arbitrary representative, synthesized on demand by
   translating the recorded vector with the same residue pattern; null when
   the orbit was never reached */
const TensorVec* family_at(const QuotientSpace& Q, TensorFamily& F, const Vec& rep);

/* coordinates of a reduced vector against the family; input and output
   both live in the loop frame */
std::map<Vec, Laurent> express_in_tensor_family(const QuotientSpace& Q, TensorFamily& F,
                                                TensorVec v);
/* the semilinear involution determined by fixing every family vector */
TensorVec tensor_iota_on_span(const QuotientSpace& Q, TensorFamily& F, const TensorVec& v);

struct TensorBasisEntry {
    Vec index;
    TensorVec vec{0};
    std::string provenance;
    bool bar_fixed = false;
    bool lattice = false;
    bool support_below = false;
    bool window_safe = false;
};
struct TensorBasis {
    std::vector<TensorBasisEntry> entries;
    std::vector<Vec> uncovered;
};

/* Canonical vectors of the weight component: for each covered index the
   vector fixed by the involution equal to the index plus strictly lower
   terms with coefficients in exponents >= +1, computed by eliminating
   bar-symmetric parts top down against the family.  Every support stays
   inside the working box and the elimination target only moves down, so
   the loop terminates; indices whose elimination needs a family vector
   outside the covered set are emitted as they stand and left unverified. */
TensorBasis tensor_canonical_basis(const QuotientSpace& Q);

}  // namespace periodica
