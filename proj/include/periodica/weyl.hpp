#pragma once

#include <vector>

#include "periodica/rootdata.hpp"

namespace periodica {

/* Element u . t_lambda of the extended affine symmetric group on d strands:
   a finite permutation u (0-based image array) followed on the right by a
   translation t_lambda.  Composition and the level-p right action on weight
   vectors are the only places the semantics live; everything else is
   derived from them.

     (gamma . x)_j = gamma[x.perm[j]] - p * x.tau[j]

   Finite simple reflections are s_1 .. s_{d-1}; s_d is the affine one,
   reflecting across the wall where the pairing with the highest coroot
   equals p.  pi is the length-zero rotation generating the quotient by the
   translation subgroup; conjugation by pi cycles s_i to s_{i+1} mod d. */
struct WeylElt {
    std::vector<int> perm;
    Vec tau;

    int d() const { return int(perm.size()); }
    bool operator==(const WeylElt& y) const { return perm == y.perm && tau == y.tau; }
    bool operator!=(const WeylElt& y) const { return !(*this == y); }
    bool operator<(const WeylElt& y) const {
        return perm != y.perm ? perm < y.perm : tau < y.tau;
    }
};

WeylElt identity(int d);
/* 1 <= i <= d; i == d is the affine reflection */
WeylElt simple(int d, int i);
WeylElt translation(const Vec& lambda);
/* the length-zero rotation */
WeylElt rotation(int d);

WeylElt compose(const WeylElt& a, const WeylElt& b);
WeylElt invert(const WeylElt& a);
inline WeylElt operator*(const WeylElt& a, const WeylElt& b) { return compose(a, b); }
WeylElt power(const WeylElt& x, int k);

/* right action at level p */
Vec act_weight(const Vec& gamma, const WeylElt& x, int p);
/* same action formula at an explicit integer level (used by alcove code on
   rescaled interior points) */
Vec act_point(const Vec& P, const WeylElt& x, int level);
/* (v . w)_k = v[w(k)] for finite w */
Vec permute(const Vec& v, const WeylElt& w);

bool is_finite(const WeylElt& x);
/* exponent of the rotation part; the translation coordinates of the
   non-rotation part sum to zero, so this is just the tau total */
int pi_power(const WeylElt& x);

int length(const WeylElt& x);
bool left_descent(const WeylElt& x, int i);

struct PiWord {
    int k = 0;                  // rotation exponent
    std::vector<int> word;      // reduced word in 1..d, applied left to right after pi^k
};
PiWord reduced_word(const WeylElt& x);
WeylElt from_pi_word(int d, const PiWord& pw);

/* ---- finite subgroup ------------------------------------------------- */

std::vector<WeylElt> finite_group(int d);
/* the subgroup permuting within the blocks of composition f */
std::vector<WeylElt> parabolic_subgroup(const Vec& f);
/* block-reversing permutation, the longest element of the parabolic */
WeylElt longest_parabolic(const Vec& f);
/* its length, sum of f_i choose 2 */
int nu_of(const Vec& f);

/* w(alpha_i) > 0 for all interior indices i of f: the minimal-length
   elements of the cosets w . W_f */
std::vector<WeylElt> distinguished_reps(const Vec& f);
/* w^{-1}(alpha_i) > 0 instead: minimal length in W_f . w */
std::vector<WeylElt> distinguished_reps_inv(const Vec& f);

/* Among distinguished_reps(c), the unique element that is longest inside
   its own left coset under the parabolic of the reversed dual composition
   of c.  Throws if not unique (it always is; the check is kept). */
WeylElt dominant_coset_element(const Vec& c);

/* entries sorted weakly decreasing */
Vec sorted_desc(Vec v);
/* the stable sorting permutation: minimal w with permute(sorted_desc(v), w) == v */
WeylElt sort_perm(const Vec& v);

}  // namespace periodica
