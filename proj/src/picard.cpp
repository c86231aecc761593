#include "pic/picard.hpp"

#include <stdexcept>

namespace pic {

namespace {

Vec solve_or_throw(const IntMatrix& lattice, const Vec& v, const char* what) {
    auto x = solve_in_lattice(lattice, v);
    if (!x) throw std::logic_error(std::string(what) + ": value outside the lattice");
    return *x;
}

// tau_T of a Sym^2 coefficient vector, as torus-basis coordinates
Vec torus_transgression(const RPicBasis& basis, const Vec& q) {
    int r = basis.r;
    TautClass c;
    Vec zero_n(basis.n);
    auto e = [&](int i) {
        Vec v(r);
        v[i] = 1;
        return v;
    };
    for (auto [i, j] : sym2_pairs(r)) {
        const Int& coeff = q[sym2_index(r, i, j)];
        if (coeff != 0) c += TautClass::pair(e(i), zero_n, e(j), zero_n).scaled(coeff);
    }
    if (c.terms.empty()) return Vec(basis.size());
    return normalize(c, basis);
}

Vec ab_degree(const IntMatrix& ab_char_basis, const Vec& d) {
    int m = ab_char_basis.cols();
    Vec out(m);
    for (int k = 0; k < m; ++k) {
        Int s = 0;
        for (int i = 0; i < ab_char_basis.rows(); ++i) s += ab_char_basis(i, k) * d[i];
        out[k] = s;
    }
    return out;
}

}  // namespace

PicardPresentation rpic_reductive(const RootDatum& rd, int g, int n, const Vec& d) {
    if (g < 1) throw std::invalid_argument("rpic_reductive: genus >= 1 required");
    int r = rd.rank(), l = rd.semisimple_rank();
    PicardPresentation out;
    out.g = g;
    out.n = n;
    out.d = d;
    out.torus_basis = make_basis(r, g, n, d);
    int sz = out.torus_basis.size();

    IntMatrix stacked(0, sz);
    for (int i = 0; i < l; ++i) {
        IntMatrix act = weyl_algebraic_action(reflection_char(rd, i), out.torus_basis);
        stacked = IntMatrix::vstack(stacked, act - IntMatrix::identity(sz));
    }
    out.generators = l == 0 ? IntMatrix::identity(sz) : kernel_basis(stacked);
    out.free_rank = out.generators.cols();

    out.sym2_inv_basis = sym2_invariants(rd).on_char;
    out.transgression = IntMatrix(out.free_rank, out.sym2_inv_basis.cols());
    for (int j = 0; j < out.sym2_inv_basis.cols(); ++j) {
        Vec img = torus_transgression(out.torus_basis, out.sym2_inv_basis.col(j));
        Vec coords = solve_or_throw(out.generators, img, "transgression");
        for (int i = 0; i < out.free_rank; ++i) out.transgression(i, j) = coords[i];
    }
    if (kernel_basis(out.transgression).cols() != 0)
        throw std::logic_error("rpic_reductive: transgression not injective");

    out.ab_char_basis = derived_lattices(rd).ab_char;
    int m = out.ab_char_basis.cols();
    out.ab_basis = make_basis(m, g, n, ab_degree(out.ab_char_basis, d));
    out.ab_pullback = IntMatrix(out.free_rank, out.ab_basis.size());
    for (int j = 0; j < out.ab_basis.size(); ++j) {
        TautClass c = pullback_torus(out.ab_char_basis, basis_class(out.ab_basis, j));
        Vec img = normalize(c, out.torus_basis);
        Vec coords = solve_or_throw(out.generators, img, "ab_pullback");
        for (int i = 0; i < out.free_rank; ++i) out.ab_pullback(i, j) = coords[i];
    }
    return out;
}

PicardPresentation rpic_torus(const RootDatum& rd, int g, int n, const Vec& d) {
    if (!rd.is_torus()) throw std::invalid_argument("rpic_torus: torus required");
    if (g >= 1) return rpic_reductive(rd, g, n, d);
    return rpic_reductive_g0(rd, n, d, false);
}

PicardPresentation rpic_reductive_g0(const RootDatum& rd, int n, const Vec& degree,
                                     bool is_class) {
    int r = rd.rank(), l = rd.semisimple_rank();
    PicardPresentation out;
    out.g = 0;
    out.n = n;
    out.d = is_class ? find_lift(rd, degree) : degree;
    out.star_ok = check_star(rd, out.d);

    IntMatrix omega;
    if (l == 0) {
        omega = IntMatrix::identity(r);
    } else {
        Vec d_ad = rd.simple_roots().apply(out.d);  // fundamental-coweight coords of d^ss
        IntMatrix inv_sc = sym2_invariants(rd).on_sc_char;
        IntMatrix contraction_image(l, inv_sc.cols());
        for (int j = 0; j < inv_sc.cols(); ++j) {
            Vec v = contraction(rd, d_ad, inv_sc.col(j));
            for (int i = 0; i < l; ++i) contraction_image(i, j) = v[i];
        }
        omega = lattice_preimage(rd.simple_coroots(), contraction_image);
    }
    if (n == 0) {
        IntMatrix drow(1, r);
        for (int i = 0; i < r; ++i) drow(0, i) = out.d[i];
        IntMatrix parity = lattice_preimage(drow, IntMatrix::from_rows({{2}}));
        omega = lattice_intersection(omega, parity);
    }
    out.weight_image = hnf(omega).H.drop_zero_cols();
    out.free_rank = out.weight_image.cols();
    out.sym2_inv_basis = sym2_invariants(rd).on_char;
    out.ab_char_basis = derived_lattices(rd).ab_char;
    return out;
}

PicardPresentation rpic(const RootDatum& rd, int g, int n, const Vec& degree,
                        bool is_class) {
    if (g >= 1) return rpic_reductive(rd, g, n, degree);
    return rpic_reductive_g0(rd, n, degree, is_class);
}

PushoutReport verify_pushout(const RootDatum& rd, const PicardPresentation& pres) {
    PushoutReport report;
    if (pres.g < 1) {
        report.failures.push_back("push-out certification applies to genus >= 1 only");
        return report;
    }
    int m = pres.ab_char_basis.cols();
    int na = sym2_dim(m);
    FgAbGroup a = FgAbGroup::free_group(na);
    FgAbGroup b = FgAbGroup::free_group(pres.ab_basis.size());
    FgAbGroup c = FgAbGroup::free_group(pres.sym2_inv_basis.cols());

    // f: Sym^2(ab chars) -> RPic(Bun_{G^ab}), the ab-torus transgression
    IntMatrix f(b.n_generators(), na);
    for (auto [i, j] : sym2_pairs(m)) {
        Vec q(na);
        q[sym2_index(m, i, j)] = 1;
        Vec col = torus_transgression(pres.ab_basis, q);
        for (int k = 0; k < b.n_generators(); ++k) f(k, sym2_index(m, i, j)) = col[k];
    }
    // h: Sym^2(ab chars) -> Sym^2(T_G chars)^W via Sym^2 of the inclusion
    IntMatrix incl_sym2 = sym2_action(pres.ab_char_basis);
    IntMatrix h(c.n_generators(), na);
    for (int j = 0; j < na; ++j) {
        Vec coords = solve_or_throw(pres.sym2_inv_basis, incl_sym2.col(j), "verify_pushout");
        for (int k = 0; k < c.n_generators(); ++k) h(k, j) = coords[k];
    }

    FgAbHom fh(a, b, f), hh(a, c, h);
    if (!hom_kernel(fh).group.is_trivial())
        report.failures.push_back("arrow Sym2(ab) -> RPic(Bun_ab) not injective");
    if (!hom_kernel(hh).group.is_trivial())
        report.failures.push_back("arrow Sym2(ab) -> Sym2-invariants not injective");

    PushoutResult po = pushout(fh, hh);

    // induced map to the invariant lattice: B generators via ab_pullback,
    // C generators via transgression
    FgAbGroup target = FgAbGroup::free_group(pres.free_rank);
    IntMatrix induced = IntMatrix::hstack(pres.ab_pullback, pres.transgression);
    FgAbHom to_target(po.group, target, induced);
    if (!hom_kernel(to_target).group.is_trivial())
        report.failures.push_back("induced map to the invariant lattice not injective");
    if (!hom_cokernel(to_target).group.is_trivial())
        report.failures.push_back("induced map to the invariant lattice not surjective");
    if (!po.group.isomorphic(target))
        report.failures.push_back("push-out invariant factors differ from the invariant lattice");
    if (!hom_kernel(po.in_b).group.is_trivial())
        report.failures.push_back("arrow RPic(Bun_ab) -> push-out not injective");
    if (!hom_kernel(po.in_c).group.is_trivial())
        report.failures.push_back("arrow Sym2-invariants -> push-out not injective");

    report.ok = report.failures.empty();
    return report;
}

}  // namespace pic
