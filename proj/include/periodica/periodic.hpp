#pragma once

#include <map>
#include <string>

#include "periodica/alcove.hpp"
#include "periodica/hecke.hpp"

namespace periodica {

/* finite Laurent combination of alcoves */
class AlcoveVec {
public:
    explicit AlcoveVec(int d) : d_(d) {}
    static AlcoveVec unit(const Alcove& A, Laurent coef = Laurent(1)) {
        AlcoveVec v(A.d());
        v.add(A, coef);
        return v;
    }

    int rank() const { return d_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Alcove, Laurent>& terms() const { return c_; }
    Laurent coeff(const Alcove& A) const {
        auto it = c_.find(A);
        return it == c_.end() ? Laurent(0) : it->second;
    }

    void add(const Alcove& A, const Laurent& a) {
        require(A.d() == d_, "AlcoveVec: rank mismatch");
        if (a.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(A, a);
        if (!inserted) {
            it->second += a;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    AlcoveVec& operator+=(const AlcoveVec& w) {
        require(w.d_ == d_, "AlcoveVec: rank mismatch");
        for (const auto& [A, a] : w.c_) add(A, a);
        return *this;
    }
    AlcoveVec& operator-=(const AlcoveVec& w) {
        require(w.d_ == d_, "AlcoveVec: rank mismatch");
        for (const auto& [A, a] : w.c_) add(A, -a);
        return *this;
    }
    friend AlcoveVec operator+(AlcoveVec v, const AlcoveVec& w) { return v += w; }
    friend AlcoveVec operator-(AlcoveVec v, const AlcoveVec& w) { return v -= w; }
    friend AlcoveVec operator*(const Laurent& s, const AlcoveVec& w) {
        AlcoveVec v(w.d_);
        for (const auto& [A, a] : w.c_) v.add(A, s * a);
        return v;
    }
    bool operator==(const AlcoveVec& w) const { return d_ == w.d_ && c_ == w.c_; }
    bool operator!=(const AlcoveVec& w) const { return !(*this == w); }

private:
    int d_;
    std::map<Alcove, Laurent> c_;
};

/* Sum of all floors.  Each upward wall crossing raises exactly one floor by
   one, so this is strictly monotone along the generic order: sorting by
   (height, lex) is a linear extension and fixes the processing order for
   the basis elimination. */
int height(const Alcove& A);
bool process_before(const Alcove& A, const Alcove& B);

/* Module of alcoves locked to the region of c.  Hecke generators act on
   the left through the adjacent alcove; translation cosets act on the
   right through the region translations; the two visibly commute. */
struct PeriodicModule {
    int d;
    Vec c;

    PeriodicModule(int d_, Vec c_) : d(d_), c(std::move(c_)) {
        require(is_composition_of(c, d), "PeriodicModule: bad composition");
    }

    AlcoveVec gen_act(int i, const AlcoveVec& v) const;
    AlcoveVec gen_inv_act(int i, const AlcoveVec& v) const;
    /* t_i + q^{-1}; kills wall-locked alcoves, bar-fixed as an operator */
    AlcoveVec raise(int i, const AlcoveVec& v) const;
    /* translation-coset action; the sign makes the pairing with the block
       regular vector disappear from the leading behavior */
    AlcoveVec coset_act(const Vec& gamma, const AlcoveVec& v) const;
    /* left action of an element with no rotation component */
    AlcoveVec hecke_act(const HeckeElt& h, const AlcoveVec& v) const;

    /* the standard generator: parabolic sum over the reversed dual
       composition pushed onto the dominant coset element */
    AlcoveVec base_generator() const;

    /* region alcoves within the translation window, in processing order */
    std::vector<Alcove> module_window(int radius) const;
};

/* Spanning vectors with unit leading coefficients, one per covered index.
   A breadth-first raise closure over translated generators finds vectors
   per leading alcove; one representative per translation orbit is then
   carried across the whole window by coset translation, so the family
   commutes with the translation action.  Orbits never reached inside the
   search window are reported uncovered. */
struct SpanningFamily {
    std::map<Alcove, AlcoveVec> by_leading;
    std::vector<Alcove> uncovered;  // window indices with no family vector
};
SpanningFamily spanning_family(const PeriodicModule& M, int radius, size_t budget = 400000);

/* coordinates of v over the family by triangular peeling; throws if v is
   not in the span */
std::map<Alcove, Laurent> express_in_family(const SpanningFamily& F, AlcoveVec v);
/* the semilinear involution determined by fixing every family vector */
AlcoveVec iota_on_span(const SpanningFamily& F, const AlcoveVec& v);

struct PeriodicBasisEntry {
    Alcove index;
    AlcoveVec vec;
    std::string provenance;  // how the elimination terminated
    bool bar_fixed = false;
    bool triangular = false;
    bool support_below = false;
    bool window_safe = false;
};
struct PeriodicBasis {
    std::vector<PeriodicBasisEntry> entries;  // processing order, core indices only
    std::vector<Alcove> uncovered;            // core indices with no basis vector
};

/* Canonical basis on the window: for each covered index, the unique vector
   fixed by the involution that equals the index plus strictly lower terms
   with coefficients in exponents <= -1.  Computed by eliminating the
   bar-symmetric parts of a family vector top-down.  Everything strictly
   above the current elimination target never changes again, so the entry
   is read off once the elimination stops (a finite family combination),
   or once the residual wedge recurs as a signed translate of an earlier
   one strictly lower down (it then telescopes away in the completion and
   the head is the limit everywhere), or once the target has passed below
   the core window (the head is final on every core level; the provenance
   records the depth).  Eliminations that exhaust the step budget are
   emitted as they stand and left unverified. */
/* pad <= 0 selects a pad from the generator depth; the padded window is the
   search range for family representatives */
PeriodicBasis periodic_canonical_basis(const PeriodicModule& M, int radius, int pad = 0);

}  // namespace periodica
