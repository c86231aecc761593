#include "pic/abgroup.hpp"

#include <sstream>
#include <stdexcept>

namespace pic {

FgAbGroup::FgAbGroup(int n_generators, IntMatrix relations)
    : n_gens_(n_generators), relations_(std::move(relations)) {
    if (relations_.rows() != n_gens_)
        throw std::invalid_argument("FgAbGroup: relation matrix must have one row per generator");
    invariants_ = cokernel_invariants(relations_);
}

std::vector<Int> FgAbGroup::torsion_invariants() const {
    std::vector<Int> out;
    for (const Int& d : invariants_)
        if (d != 0) out.push_back(d);
    return out;
}

int FgAbGroup::free_rank() const {
    int r = 0;
    for (const Int& d : invariants_)
        if (d == 0) ++r;
    return r;
}

std::string FgAbGroup::to_string() const {
    if (invariants_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    int free = free_rank();
    if (free > 0) {
        os << "Z";
        if (free > 1) os << "^" << free;
        first = false;
    }
    for (const Int& d : invariants_)
        if (d != 0) {
            if (!first) os << " + ";
            os << "Z/" << d.get_str();
            first = false;
        }
    return os.str();
}

FgAbHom::FgAbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.n_generators() || matrix_.cols() != source_.n_generators())
        throw std::invalid_argument("FgAbHom: matrix shape mismatch");
    const IntMatrix& rel = source_.relations();
    for (int j = 0; j < rel.cols(); ++j)
        if (!in_lattice(target_.relations(), matrix_.apply(rel.col(j))))
            throw std::invalid_argument("FgAbHom: not well-defined on relations");
}

SubquotientPresentation hom_kernel(const FgAbHom& h) {
    // lifts of kernel elements: x with h(x) in the target relation lattice
    IntMatrix lifts = lattice_preimage(h.matrix(), h.target().relations());
    // relations among those lifts: combinations landing in the source relations
    IntMatrix rel = lattice_preimage(lifts, h.source().relations());
    return {FgAbGroup(lifts.cols(), rel), lifts};
}

SubquotientPresentation hom_image(const FgAbHom& h) {
    const IntMatrix& a = h.matrix();
    IntMatrix rel = lattice_preimage(a, h.target().relations());
    return {FgAbGroup(a.cols(), rel), a};
}

SubquotientPresentation hom_cokernel(const FgAbHom& h) {
    IntMatrix rel = IntMatrix::hstack(h.matrix(), h.target().relations());
    return {FgAbGroup(h.target().n_generators(), rel),
            IntMatrix::identity(h.target().n_generators())};
}

PushoutResult pushout(const FgAbHom& f, const FgAbHom& g) {
    if (f.source().n_generators() != g.source().n_generators() ||
        !(f.source().relations() == g.source().relations()))
        throw std::invalid_argument("pushout: maps must share the same source presentation");
    const FgAbGroup& b = f.target();
    const FgAbGroup& c = g.target();
    int nb = b.n_generators(), nc = c.n_generators();
    int na = f.source().n_generators();
    // relations: those of B, those of C, and (f(a), -g(a)) per generator of A
    IntMatrix glue(nb + nc, na);
    for (int j = 0; j < na; ++j) {
        for (int i = 0; i < nb; ++i) glue(i, j) = f.matrix()(i, j);
        for (int i = 0; i < nc; ++i) glue(nb + i, j) = -g.matrix()(i, j);
    }
    IntMatrix rel = IntMatrix::hstack(
        IntMatrix::block_diag(b.relations(), c.relations()), glue);
    FgAbGroup p(nb + nc, rel);

    IntMatrix ib(nb + nc, nb), ic(nb + nc, nc);
    for (int j = 0; j < nb; ++j) ib(j, j) = 1;
    for (int j = 0; j < nc; ++j) ic(nb + j, j) = 1;
    return {p, FgAbHom(b, p, ib), FgAbHom(c, p, ic)};
}

}  // namespace pic
