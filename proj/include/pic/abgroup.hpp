#pragma once

#include "pic/intmat.hpp"

namespace pic {

/// Finitely generated abelian group presented as coker of a relation matrix
/// (one relation per column, expressed in the generators).
class FgAbGroup {
public:
    FgAbGroup() : n_gens_(0), relations_(0, 0) {}
    FgAbGroup(int n_generators, IntMatrix relations);

    static FgAbGroup free_group(int rank) { return FgAbGroup(rank, IntMatrix(rank, 0)); }
    static FgAbGroup trivial() { return free_group(0); }

    int n_generators() const { return n_gens_; }
    const IntMatrix& relations() const { return relations_; }

    /// Invariant factors d1 | d2 | ... with di > 1, followed by one 0 per
    /// free factor.
    const std::vector<Int>& invariant_factors() const { return invariants_; }
    std::vector<Int> torsion_invariants() const;
    int free_rank() const;
    bool is_trivial() const { return invariants_.empty(); }

    /// Same isomorphism class (equality of invariant factors).
    bool isomorphic(const FgAbGroup& other) const { return invariants_ == other.invariants_; }

    std::string to_string() const;

private:
    int n_gens_;
    IntMatrix relations_;
    std::vector<Int> invariants_;
};

/// Homomorphism between presented groups, given by a matrix on generators.
/// Well-definedness (relations map into relations) is checked at construction.
class FgAbHom {
public:
    FgAbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

private:
    FgAbGroup source_, target_;
    IntMatrix matrix_;
};

struct SubquotientPresentation {
    FgAbGroup group;
    IntMatrix structure_map;  // generators expressed in the ambient group's generators
};

/// ker(h) as a subgroup of the source (structure_map = inclusion of generators).
SubquotientPresentation hom_kernel(const FgAbHom& h);
/// im(h) as a subgroup of the target.
SubquotientPresentation hom_image(const FgAbHom& h);
/// coker(h); structure_map is the identity projection on target generators.
SubquotientPresentation hom_cokernel(const FgAbHom& h);

struct PushoutResult {
    FgAbGroup group;  // (B + C) / <(f(a), -g(a))>
    FgAbHom in_b;
    FgAbHom in_c;
};

/// Push-out of B <-f- A -g-> C.
PushoutResult pushout(const FgAbHom& f, const FgAbHom& g);

}  // namespace pic
