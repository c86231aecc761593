#pragma once

#include "pic/abgroup.hpp"
#include "pic/intmat.hpp"

namespace pic {

enum class Series { A, B, C, D, E, F, G };

struct SimpleFactor {
    Series series;
    int rank;                 // Dynkin rank of the factor
    std::vector<int> nodes;   // indices into the simple roots, in Bourbaki order
};

/// Root datum of a connected reductive group: a lattice Z^r (cocharacters of a
/// maximal torus), simple roots as rows of an l x r matrix over the character
/// lattice, and simple coroots as rows of an l x r matrix over Z^r.
class RootDatum {
public:
    RootDatum(IntMatrix simple_roots, IntMatrix simple_coroots);

    int rank() const { return rank_; }             // dim of the torus
    int semisimple_rank() const { return l_; }     // number of simple roots

    const IntMatrix& simple_roots() const { return roots_; }      // l x r, rows in char lattice
    const IntMatrix& simple_coroots() const { return coroots_; }  // l x r, rows in cochar lattice
    const IntMatrix& cartan() const { return cartan_; }           // C_ij = <coroot_i, root_j>

    /// Symmetrizer: primitive positive d with diag(d) * C symmetric.
    const std::vector<Int>& symmetrizer() const { return sym_; }

    /// Decomposition of the Dynkin diagram into connected components.
    const std::vector<SimpleFactor>& factors() const { return factors_; }

    bool is_semisimple() const { return l_ == rank_; }
    bool is_torus() const { return l_ == 0; }

    /// Indices of short simple roots (argmin of d over each component).
    std::vector<int> short_root_indices() const;
    /// Indices i whose coroot is short, i.e. whose root is long (argmax of d).
    std::vector<int> short_coroot_indices() const;

private:
    int rank_, l_;
    IntMatrix roots_, coroots_, cartan_;
    std::vector<Int> sym_;
    std::vector<SimpleFactor> factors_;
};

enum class Isogeny { SimplyConnected, Adjoint };

/// Root datum of the simply connected or adjoint group with the given Cartan
/// matrix (square, finite type).
RootDatum build_classical(const IntMatrix& cartan, Isogeny isogeny);
RootDatum build_classical(Series series, int rank, Isogeny isogeny);
RootDatum build_torus(int rank);
RootDatum build_gl(int n);
/// Direct product: block sums of lattices, roots, coroots.
RootDatum product(const RootDatum& a, const RootDatum& b);

/// Cartan matrix of a single simple series in Bourbaki numbering.
IntMatrix cartan_matrix(Series series, int rank);

struct DerivedLattices {
    IntMatrix coroot_lattice;    // HNF basis of the coroot span in the cochar lattice
    IntMatrix derived_cochar;    // saturation of the coroot lattice (cochars of the derived group)
    Int connection_index;        // [derived_cochar : coroot_lattice]
    IntMatrix radical_cochar;    // kernel of the roots pairing (cochars of the radical)
    IntMatrix ab_char;           // kernel of the coroots pairing (chars of the torus quotient G^ab)
    IntMatrix ad_cochar_num;     // basis of the adjoint cochar lattice, times ad_cochar_den
    Int ad_cochar_den;
    IntMatrix sc_restriction;    // Lambda*(T_G) -> Lambda*(T_sc) = Z^l in fundamental weights
};

DerivedLattices derived_lattices(const RootDatum& rd);

struct Pi1Result {
    FgAbGroup pi1;            // Lambda(T) / coroot lattice
    FgAbGroup torsion_part;   // derived_cochar / coroot lattice
    FgAbGroup free_quotient;  // Lambda(T) / derived_cochar
};

/// pi1(G) = Lambda(T) / coroot lattice, with the torsion/free pieces of the
/// short exact sequence; consistency of the three is verified.
Pi1Result fundamental_group(const RootDatum& rd);

/// Reflection s_i on the cocharacter lattice, as a matrix acting on column
/// vectors: x -> x - <x, alpha_i> alpha_i^vee.
IntMatrix reflection_cochar(const RootDatum& rd, int i);
/// Reflection s_i on the character lattice: chi -> chi - <alpha_i^vee, chi> alpha_i.
IntMatrix reflection_char(const RootDatum& rd, int i);

/// Closure of the given generators under multiplication, BFS; throws when the
/// group exceeds cap.
std::vector<IntMatrix> weyl_enumerate(const std::vector<IntMatrix>& gens, long cap);
/// Full Weyl group acting on the character lattice ({identity} for a torus).
std::vector<IntMatrix> weyl_enumerate(const RootDatum& rd, long cap);

}  // namespace pic
