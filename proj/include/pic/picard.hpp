#pragma once

#include "pic/taut.hpp"

namespace pic {

/// Presentation of RPic(Bun_G) for one (g, n, degree) regime. For g >= 1 the
/// group is the saturated W-invariant sublattice of the free torus RPic
/// lattice; generators are columns in the torus basis. For g = 0 the group is
/// the weight-image lattice inside the character lattice.
struct PicardPresentation {
    int g = 0, n = 0;
    Vec d;               // the degree lift actually used
    bool star_ok = true;  // g = 0: condition (*) held for d

    RPicBasis torus_basis;     // ambient basis (g >= 1)
    IntMatrix generators;      // g >= 1: columns in torus-basis coordinates
    int free_rank = 0;
    std::vector<Int> torsion;  // always empty for these groups

    IntMatrix sym2_inv_basis;  // columns: basis of Sym^2(char lattice)^W
    IntMatrix transgression;   // tau_G in generator coordinates, one column per
                               // sym2_inv_basis column
    IntMatrix ab_char_basis;   // columns: HNF basis of the W-fixed characters
    RPicBasis ab_basis;        // torus RPic basis of G^ab (g >= 1)
    IntMatrix ab_pullback;     // ab basis classes in generator coordinates

    IntMatrix weight_image;    // g = 0: columns = HNF basis of Im(w_G^d)
};

/// RPic(Bun_T) for a torus, any genus regime.
PicardPresentation rpic_torus(const RootDatum& rd, int g, int n, const Vec& d);

/// RPic(Bun_G) for reductive G, g >= 1. The degree enters only through the
/// metadata (the invariant lattice is degree-independent).
PicardPresentation rpic_reductive(const RootDatum& rd, int g, int n, const Vec& d);

/// Im(w_G^d) for g = 0. When `is_class` the degree is a pi1 coset
/// representative and a lift satisfying (*) is chosen by find_lift; otherwise
/// the supplied lift is used as-is and star_ok records whether (*) holds.
PicardPresentation rpic_reductive_g0(const RootDatum& rd, int n, const Vec& degree,
                                     bool is_class);

/// Dispatch on genus; for g >= 1 a class degree is used directly as its own
/// lift (d-independence).
PicardPresentation rpic(const RootDatum& rd, int g, int n, const Vec& degree, bool is_class);

struct PushoutReport {
    bool ok = false;
    std::vector<std::string> failures;
};

/// Certify that RPic(Bun_G) is the push-out of
/// Sym^2(ab chars) -> RPic(Bun_{G^ab}) and Sym^2(ab chars) -> Sym^2-invariants
/// (all four arrows injective, induced map an isomorphism).
PushoutReport verify_pushout(const RootDatum& rd, const PicardPresentation& pres);

}  // namespace pic
