#pragma once

#include <vector>

#include "periodica/rootdata.hpp"
#include "periodica/weyl.hpp"

namespace periodica {

/* An alcove of the affine arrangement, encoded by the unique element of the
   non-extended affine group carrying the base alcove onto it (acting on the
   right).  Extended elements are accepted everywhere and normalized by
   stripping their rotation part, which stabilizes the base alcove.

   Floors: for each coordinate pair k < l the alcove sits between two
   consecutive walls of that root direction; floor_at reports the lower wall
   index.  The base alcove has all floors zero.  Adjacent alcoves differ in
   exactly one floor by one; the floor sum is the height that grades the
   order relation below. */
struct Alcove {
    WeylElt x;

    int d() const { return x.d(); }
    bool operator==(const Alcove& B) const { return x == B.x; }
    bool operator!=(const Alcove& B) const { return x != B.x; }
    bool operator<(const Alcove& B) const { return x < B.x; }
};

Alcove base_alcove(int d);
Alcove make_alcove(const WeylElt& x);
Alcove act_alcove(const Alcove& A, const WeylElt& y);
/* the reflected alcove across the shared wall with generator i on the left */
Alcove wall_neighbor(const Alcove& A, int i);

/* floors in lex order of pairs (k,l), k < l, 0-based coordinates */
std::vector<int> floor_vector(const Alcove& A);
int floor_at(const Alcove& A, int k, int l);

/* +1 if the neighbor across wall i lies above A, -1 if below */
int wall_direction(const Alcove& A, int i);

/* Order generated by upward reflections: A < s_H A whenever the reflecting
   hyperplane H, taken from the whole arrangement and not only among the
   walls of A, has A on its lower side.  Crossing the level-n hyperplane of
   a pair direction from floor f raises the floor sum by at least 2(n-f)-1
   and never lowers it, which bounds the levels worth trying at each node
   and makes exhaustion (a definite no) sound.  unknown is only returned
   when the node budget runs out. */
enum class Tri { yes, no, unknown };
Tri generic_leq(const Alcove& A, const Alcove& B, size_t budget = 4000000);
/* strict version */
Tri generic_lt(const Alcove& A, const Alcove& B, size_t budget = 4000000);

/* alcove lies in the locked region of composition c: all floors of
   block-internal coordinate pairs vanish */
bool in_region(const Alcove& A, const Vec& c);

/* The unique block-affine element correcting the translation by gamma back
   into the region: tau_gamma followed by its inverse block adjustment.
   Applying it on the right maps the region bijectively onto itself and
   preserves the order above. */
WeylElt region_adjust(const Vec& c, const Vec& gamma);      // the block part w
WeylElt region_translation(const Vec& c, const Vec& gamma); // tau_gamma * w^{-1}
Alcove region_apply(const Vec& c, const Vec& gamma, const Alcove& A);

/* A = region_apply(c, gamma, base . w) with w a distinguished representative
   of c and gamma supported on leading block coordinates; throws if A is not
   in the region */
struct RegionCoord {
    WeylElt w;
    Vec gamma;
};
RegionCoord region_decompose(const Vec& c, const Alcove& A);

/* all alcoves base . (u tau_lambda) with |lambda_i| <= radius */
std::vector<Alcove> alcoves_in_window(int d, int radius);

}  // namespace periodica
