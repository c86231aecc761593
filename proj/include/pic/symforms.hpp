#pragma once

#include "pic/rootdata.hpp"

namespace pic {

/// Sym^2 of a rank-r character lattice: coefficient vectors on the basis
/// chi_i * chi_j, pairs (i <= j) in lexicographic order.
int sym2_dim(int r);
std::vector<std::pair<int, int>> sym2_pairs(int r);
int sym2_index(int r, int i, int j);

/// Polarization: Q -> B_Q(x,y) = Q(x+y) - Q(x) - Q(y), as a symmetric matrix.
IntMatrix b_map(int r, const Vec& q);
/// B -> Q(x) = B(x,x), as Sym^2 coefficients.
Vec q_map(const IntMatrix& g);
/// The same two maps as matrices on pair-indexed coordinates (BilForm
/// coordinates = entries G_ij for i <= j, same ordering).
IntMatrix b_map_matrix(int r);
IntMatrix q_map_matrix(int r);

/// Functorial map Sym^2(source) -> Sym^2(target) induced by chi -> w * chi;
/// w may be rectangular.
IntMatrix sym2_action(const IntMatrix& w);

struct Sym2Invariants {
    IntMatrix on_char;     // HNF basis of Sym^2(char lattice)^W, columns
    IntMatrix on_sc_char;  // same on the fundamental-weight lattice of G^sc
};

Sym2Invariants sym2_invariants(const RootDatum& rd);

/// Generator of the rank-1 invariant lattice of one simple factor, embedded in
/// Sym^2 of the full fundamental-weight lattice of rd^sc and normalized so the
/// polarization takes value 2 on short coroots. Positive definiteness checked.
Vec basic_inner_product(const RootDatum& rd, const SimpleFactor& factor);

/// B'(d, -) restricted to the coroot lattice, in fundamental-weight
/// coordinates. d is given in ad_cochar (fundamental coweight) coordinates,
/// b_sc is a Sym^2 element on the fundamental-weight lattice. Throws when the
/// result is not integral.
Vec contraction(const RootDatum& rd, const Vec& d_ad, const Vec& b_sc);

/// Condition (*): the projection of d onto each simple factor's coroot span is
/// nonzero. d lives in the cocharacter lattice of rd.
bool check_star(const RootDatum& rd, const Vec& d);

/// Lift of the pi1-class of delta satisfying (*), minimal sup-norm, entrywise
/// tie-break 0 < 1 < -1 < 2 < -2 < ...
Vec find_lift(const RootDatum& rd, const Vec& delta);

}  // namespace pic
