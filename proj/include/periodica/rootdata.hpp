#pragma once

#include <vector>

#include "periodica/error.hpp"

namespace periodica {

/* Integer vectors in the standard coordinates of the GL_d weight lattice.
   Roots are self-dual in these coordinates, so every pairing below is a
   plain dot product. */
using Vec = std::vector<int>;

int vec_sum(const Vec& v);
int dot(const Vec& a, const Vec& b);

inline int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

/* alpha_i = e_i - e_{i+1}, 1 <= i <= d-1 */
Vec simple_root(int d, int i);
/* e_1 - e_d */
Vec highest_root(int d);
/* omega_i = e_1 + ... + e_i */
Vec fundamental_weight(int d, int i);

/* (gamma : alpha_i^vee) = gamma_i - gamma_{i+1} */
int simple_pairing(const Vec& gamma, int i);

bool is_dominant(const Vec& gamma);
/* b - a a nonnegative sum of simple roots: prefix sums of b - a all >= 0, total 0 */
bool dominance_leq(const Vec& a, const Vec& b);

/* ---- compositions ---------------------------------------------------- */

/* parts positive, summing to d */
bool is_composition_of(const Vec& c, int d);
/* indices i in 1..d-1 that are not partial sums of c; these are the simple
   reflections preserved by the block structure of c */
std::vector<int> interior_indices(const Vec& c);
/* dual composition: part j counts how many c_i are >= j */
Vec dual_composition(const Vec& c);
/* all compositions of d with positive parts */
std::vector<Vec> compositions(int d);
/* weakly decreasing compositions of d */
std::vector<Vec> partitions(int d);
/* sum over each block of c */
Vec block_sums(const Vec& gamma, const Vec& c);
/* first index (0-based) of each block of c */
std::vector<int> block_starts(const Vec& c);

/* The distinguished regular vector of a composition: on a block of size m
   the entries are m-1, m-3, ..., 1-m.  Pairing any gamma against it is the
   pairing against the block sum of positive roots. */
Vec alpha_c(const Vec& c);

/* ---- level-p residue structure --------------------------------------- */

/* entrywise representative in (0, p] */
Vec canonical_residue(const Vec& gamma, int p);
/* nu with gamma = canonical_residue(gamma, p) - p * nu */
Vec residue_translation(const Vec& gamma, int p);
/* total of gamma equals total of its canonical residue, i.e. the
   translation part lies in the root lattice */
bool is_residue_balanced(const Vec& gamma, int p);

/* content of mu with entries in 1..p: out[a-1] = #{i : mu_i = a} */
Vec content(const Vec& mu, int p);
/* strictly decreasing vectors in {1..p}^d, i.e. the d-element subsets of
   {1..p} read in decreasing order; their contents are the multiplicity-free
   weights of the level-p alphabet */
std::vector<Vec> small_weights(int d, int p);

}  // namespace periodica
