#pragma once

#include "pic/symforms.hpp"

namespace pic {

/// Formal atom: Det(chi, zeta) = L(chi, zeta) or the Deligne pairing
/// Pair((chi, zeta), (chi2, zeta2)); chi in Z^r, zeta in Z^n.
struct TautAtom {
    bool is_pair = false;
    Vec chi, zeta;
    Vec chi2, zeta2;  // pair slot 2, empty for Det
};

/// Z-linear combination of atoms, kept unevaluated until normalization.
struct TautClass {
    int r = 0, n = 0;
    std::vector<std::pair<Int, TautAtom>> terms;

    static TautClass det(const Vec& chi, const Vec& zeta);
    static TautClass pair(const Vec& chi, const Vec& zeta, const Vec& chi2, const Vec& zeta2);

    TautClass& operator+=(const TautClass& rhs);
    TautClass operator+(const TautClass& rhs) const;
    TautClass operator-() const;
    TautClass operator-(const TautClass& rhs) const;
    TautClass scaled(const Int& c) const;
};

enum class Regime { HighGenus, GenusOne, GenusZeroMarked, GenusZeroClosed };

Regime regime_of(int g, int n);

/// Free basis of RPic(Bun_T^d) in the given regime. Symbol layout for g >= 1:
/// M(i,j) for i < r, j < n; then S(i,k) for i <= k (i < k when g = 1); then
/// D(i). For g = 0 there are r generators; when n = 0 they are indexed by an
/// HNF basis eps of {chi : (d, chi) even}.
struct RPicBasis {
    Regime regime;
    int r = 0, n = 0, g = 0;
    Vec d;
    IntMatrix eps;  // columns: the basis characters, GenusZeroClosed only

    int size() const;
    int m_index(int i, int j) const;
    int s_index(int i, int k) const;
    int d_index(int i) const;
    std::vector<std::string> labels() const;
};

RPicBasis make_basis(int r, int g, int n, const Vec& d);

/// Coordinates of c in the basis, g >= 1 regimes only. Pullback atoms (both
/// chi slots zero) map to 0.
Vec normalize(const TautClass& c, const RPicBasis& basis);

/// The class of one basis symbol, as an unevaluated atom combination (g >= 1).
TautClass basis_class(const RPicBasis& basis, int index);

/// w_T^d: Det(chi,zeta) -> [(d,chi)+|zeta|+1-g] chi,
/// Pair -> [(d,chi')+|zeta'|] chi + [(d,chi)+|zeta|] chi'.
Vec weight(const TautClass& c, const Vec& d, int g);

/// gamma_T^d: Det -> chi (x) chi, Pair -> chi (x) chi' + chi' (x) chi.
IntMatrix gamma_form(const TautClass& c);

/// Genus-zero weight (the g = 0 instance of the same formula).
Vec weight_g0(const TautClass& c, const Vec& d);

/// Coordinates of c in the g = 0 basis: the weight expressed in the image
/// lattice (throws when the weight is not in the image, n = 0 only).
Vec normalize_g0(const TautClass& c, const RPicBasis& basis);

/// Matrix of the algebraic Weyl action on the basis: w applied to chi-slots,
/// then normalized (g >= 1).
IntMatrix weyl_algebraic_action(const IntMatrix& w, const RPicBasis& basis);

/// chi-slots replaced by f * chi (f: chars of T -> chars of T'); zeta kept.
TautClass pullback_torus(const IntMatrix& f, const TautClass& c);

/// The change-of-degree isomorphism (n >= 1, g >= 1): the basis
/// matrix of the twist by O(d . sigma_1).
IntMatrix change_of_degree(const RPicBasis& basis);

struct FiberRestrictionData {
    IntMatrix j_image;   // kernel of (weight + gamma), columns in basis coords
    IntMatrix h_basis;   // basis of H_{g,n} (columns in Z^{n+1} for g >= 2, Z^n for g = 1)
    std::vector<Int> image_invariants;  // n = 0 only
};

FiberRestrictionData fiber_restriction_data(int r, int g, int n, const Vec& d);

}  // namespace pic
