#include "doctest.h"
#include "pic/rootdata.hpp"

using namespace pic;

namespace {

IntMatrix mat(std::vector<Vec> rows) { return IntMatrix::from_rows(rows); }

}  // namespace

TEST_CASE("build_classical rank 1") {
    RootDatum sl2 = build_classical(Series::A, 1, Isogeny::SimplyConnected);
    CHECK(sl2.simple_roots() == mat({{2}}));
    CHECK(sl2.simple_coroots() == mat({{1}}));
    CHECK(sl2.cartan() == mat({{2}}));

    RootDatum pgl2 = build_classical(Series::A, 1, Isogeny::Adjoint);
    CHECK(pgl2.simple_roots() == mat({{1}}));
    CHECK(pgl2.simple_coroots() == mat({{2}}));
}

TEST_CASE("cartan matrices and classification round-trip") {
    struct Case {
        Series s;
        int n;
    };
    for (Case c : {Case{Series::A, 1}, {Series::A, 4}, {Series::B, 2}, {Series::B, 3},
                   {Series::C, 3}, {Series::C, 4}, {Series::D, 4}, {Series::D, 5},
                   {Series::E, 6}, {Series::E, 7}, {Series::E, 8}, {Series::F, 4},
                   {Series::G, 2}}) {
        RootDatum rd = build_classical(c.s, c.n, Isogeny::SimplyConnected);
        REQUIRE(rd.factors().size() == 1);
        Series expect = (c.s == Series::C && c.n == 2) ? Series::B : c.s;
        CHECK(rd.factors()[0].series == expect);
        CHECK(rd.factors()[0].rank == c.n);
    }
    CHECK(build_classical(Series::A, 2, Isogeny::SimplyConnected).cartan() ==
          mat({{2, -1}, {-1, 2}}));
}

TEST_CASE("classification is ordering-invariant") {
    RootDatum b3 = build_classical(Series::B, 3, Isogeny::SimplyConnected);
    std::vector<int> perm{2, 0, 1};
    RootDatum shuffled(b3.simple_roots().submatrix_rows(perm),
                       b3.simple_coroots().submatrix_rows(perm));
    REQUIRE(shuffled.factors().size() == 1);
    CHECK(shuffled.factors()[0].series == Series::B);
    CHECK(shuffled.factors()[0].rank == 3);
}

TEST_CASE("invalid data rejected") {
    CHECK_THROWS(RootDatum(mat({{1}}), mat({{1}})));  // C_11 = 1
    // rank-2 affine A1~ (det 0) is not finite type
    CHECK_THROWS(build_classical(mat({{2, -2}, {-2, 2}}), Isogeny::SimplyConnected));
    // positive off-diagonal entry
    CHECK_THROWS(build_classical(mat({{2, 1}, {1, 2}}), Isogeny::SimplyConnected));
    // dependent roots
    CHECK_THROWS(RootDatum(mat({{2, 0}, {2, 0}}), mat({{1, 0}, {1, 0}})));
}

TEST_CASE("gl, torus, product constructors") {
    RootDatum t3 = build_torus(3);
    CHECK(t3.rank() == 3);
    CHECK(t3.semisimple_rank() == 0);
    CHECK(t3.is_torus());

    RootDatum gl2 = build_gl(2);
    CHECK(gl2.simple_roots() == mat({{1, -1}}));
    CHECK(gl2.simple_coroots() == mat({{1, -1}}));

    RootDatum p = product(build_classical(Series::A, 1, Isogeny::SimplyConnected),
                          build_torus(1));
    CHECK(p.rank() == 2);
    CHECK(p.semisimple_rank() == 1);

    RootDatum gl5 = build_gl(5);
    REQUIRE(gl5.factors().size() == 1);
    CHECK(gl5.factors()[0].series == Series::A);
    CHECK(gl5.factors()[0].rank == 4);
}

TEST_CASE("short roots via symmetrizer") {
    RootDatum b3 = build_classical(Series::B, 3, Isogeny::SimplyConnected);
    CHECK(b3.short_root_indices() == std::vector<int>{2});
    CHECK(b3.short_coroot_indices() == std::vector<int>{0, 1});

    RootDatum c3 = build_classical(Series::C, 3, Isogeny::SimplyConnected);
    CHECK(c3.short_root_indices() == std::vector<int>{0, 1});
    CHECK(c3.short_coroot_indices() == std::vector<int>{2});

    RootDatum g2 = build_classical(Series::G, 2, Isogeny::SimplyConnected);
    CHECK(g2.short_root_indices() == std::vector<int>{0});

    // simply laced: every root short (and every coroot)
    RootDatum a3 = build_classical(Series::A, 3, Isogeny::SimplyConnected);
    CHECK(a3.short_root_indices() == std::vector<int>{0, 1, 2});
    CHECK(a3.short_coroot_indices() == std::vector<int>{0, 1, 2});
}

TEST_CASE("derived lattices") {
    RootDatum gl2 = build_gl(2);
    DerivedLattices d = derived_lattices(gl2);
    CHECK(lattice_equal(d.coroot_lattice, IntMatrix::from_cols({{1, -1}})));
    CHECK(lattice_equal(d.ab_char, IntMatrix::from_cols({{1, 1}})));
    CHECK(lattice_equal(d.radical_cochar, IntMatrix::from_cols({{1, 1}})));
    CHECK(d.connection_index == 1);

    RootDatum t2 = build_torus(2);
    DerivedLattices dt = derived_lattices(t2);
    CHECK(dt.coroot_lattice.cols() == 0);
    CHECK(lattice_equal(dt.ab_char, IntMatrix::identity(2)));

    RootDatum pgl2 = build_classical(Series::A, 1, Isogeny::Adjoint);
    DerivedLattices dp = derived_lattices(pgl2);
    CHECK(dp.coroot_lattice == mat({{2}}));
    CHECK(dp.connection_index == 2);
    // ad cochar lattice of the adjoint group is the full lattice
    CHECK(dp.ad_cochar_den == 1);
    CHECK(lattice_equal(dp.ad_cochar_num, IntMatrix::identity(1)));

    RootDatum sl2 = build_classical(Series::A, 1, Isogeny::SimplyConnected);
    DerivedLattices ds = derived_lattices(sl2);
    // fundamental coweight is alpha_vee / 2
    CHECK(ds.ad_cochar_den == 2);
    CHECK(ds.ad_cochar_num == mat({{1}}));
    CHECK(ds.sc_restriction == mat({{1}}));
}

TEST_CASE("derived lattice inclusions and rank additivity") {
    std::vector<RootDatum> rds;
    rds.push_back(build_gl(3));
    rds.push_back(build_classical(Series::B, 2, Isogeny::Adjoint));
    rds.push_back(product(build_classical(Series::A, 2, Isogeny::SimplyConnected),
                          build_torus(2)));
    rds.push_back(build_classical(Series::G, 2, Isogeny::SimplyConnected));
    for (const RootDatum& rd : rds) {
        DerivedLattices d = derived_lattices(rd);
        CHECK(lattice_contains(d.derived_cochar, d.coroot_lattice));
        CHECK(rd.rank() == rd.semisimple_rank() + d.radical_cochar.cols());
        IntMatrix meet = lattice_intersection(d.derived_cochar, d.radical_cochar);
        CHECK(meet.cols() == 0);
        // ad cochar pairs integrally with all roots
        IntMatrix pairings = rd.simple_roots() * d.ad_cochar_num;
        for (int i = 0; i < pairings.rows(); ++i)
            for (int j = 0; j < pairings.cols(); ++j)
                CHECK(pairings(i, j) % d.ad_cochar_den == 0);
    }
}

TEST_CASE("pi1") {
    CHECK(fundamental_group(build_classical(Series::A, 1, Isogeny::SimplyConnected))
              .pi1.is_trivial());
    auto pgl2 = fundamental_group(build_classical(Series::A, 1, Isogeny::Adjoint));
    CHECK(pgl2.pi1.torsion_invariants() == std::vector<Int>{2});
    CHECK(pgl2.pi1.free_rank() == 0);

    for (int n : {2, 3, 4}) {
        auto gl = fundamental_group(build_gl(n));
        CHECK(gl.pi1.free_rank() == 1);
        CHECK(gl.pi1.torsion_invariants().empty());
    }

    // standard centers of simply connected groups
    auto check_center = [](Series s, int n, std::vector<Int> want) {
        auto p = fundamental_group(build_classical(s, n, Isogeny::Adjoint));
        CHECK(p.pi1.torsion_invariants() == want);
    };
    check_center(Series::A, 3, {4});
    check_center(Series::B, 3, {2});
    check_center(Series::C, 3, {2});
    check_center(Series::D, 4, {2, 2});
    check_center(Series::D, 5, {4});
    check_center(Series::E, 6, {3});
    check_center(Series::E, 7, {2});
    check_center(Series::E, 8, {});
    check_center(Series::F, 4, {});
    check_center(Series::G, 2, {});
}

TEST_CASE("reflections") {
    RootDatum sl2 = build_classical(Series::A, 1, Isogeny::SimplyConnected);
    CHECK(reflection_char(sl2, 0) == mat({{-1}}));

    RootDatum gl2 = build_gl(2);
    CHECK(reflection_char(gl2, 0) == mat({{0, 1}, {1, 0}}));
    CHECK(reflection_cochar(gl2, 0) == mat({{0, 1}, {1, 0}}));

    for (Series s : {Series::A, Series::B, Series::G}) {
        int n = s == Series::A ? 3 : 2;
        RootDatum rd = build_classical(s, n, Isogeny::SimplyConnected);
        for (int i = 0; i < rd.semisimple_rank(); ++i) {
            IntMatrix sc = reflection_cochar(rd, i);
            IntMatrix sx = reflection_char(rd, i);
            CHECK(sc * sc == IntMatrix::identity(rd.rank()));
            CHECK(sx * sx == IntMatrix::identity(rd.rank()));
            // contragredient pair
            CHECK(sx.transpose() * sc == IntMatrix::identity(rd.rank()));
        }
    }
}

TEST_CASE("weyl group orders") {
    auto order = [](const RootDatum& rd) {
        return weyl_enumerate(rd, 2000).size();
    };
    CHECK(order(build_classical(Series::A, 1, Isogeny::SimplyConnected)) == 2);
    CHECK(order(build_classical(Series::A, 2, Isogeny::SimplyConnected)) == 6);
    CHECK(order(build_classical(Series::B, 2, Isogeny::SimplyConnected)) == 8);
    CHECK(order(build_classical(Series::C, 2, Isogeny::Adjoint)) == 8);
    CHECK(order(build_classical(Series::G, 2, Isogeny::SimplyConnected)) == 12);
    CHECK(order(build_classical(Series::A, 3, Isogeny::SimplyConnected)) == 24);
    CHECK(order(build_classical(Series::B, 3, Isogeny::SimplyConnected)) == 48);
    CHECK(order(build_classical(Series::C, 3, Isogeny::SimplyConnected)) == 48);
    CHECK(order(build_torus(2)) == 1);
    CHECK_THROWS(weyl_enumerate(build_classical(Series::A, 3, Isogeny::SimplyConnected), 5));
}

TEST_CASE("ab_char equals the fixed lattice of the Weyl generators") {
    for (const RootDatum& rd : {build_gl(3),
                                product(build_classical(Series::A, 1, Isogeny::Adjoint),
                                        build_torus(2)),
                                build_classical(Series::B, 2, Isogeny::SimplyConnected)}) {
        int r = rd.rank();
        IntMatrix stacked(0, r);
        for (int i = 0; i < rd.semisimple_rank(); ++i)
            stacked = IntMatrix::vstack(stacked,
                                        reflection_char(rd, i) - IntMatrix::identity(r));
        IntMatrix fixed = kernel_basis(stacked);
        DerivedLattices d = derived_lattices(rd);
        CHECK(hnf(fixed).H.drop_zero_cols() == hnf(d.ab_char).H.drop_zero_cols());
    }
}

TEST_CASE("reflections permute the closed root set (rank <= 3)") {
    for (const RootDatum& rd : {build_classical(Series::A, 2, Isogeny::SimplyConnected),
                                build_classical(Series::B, 2, Isogeny::Adjoint),
                                build_classical(Series::C, 3, Isogeny::SimplyConnected),
                                build_classical(Series::G, 2, Isogeny::SimplyConnected)}) {
        // close the simple roots under all reflections
        std::vector<Vec> roots;
        for (int i = 0; i < rd.semisimple_rank(); ++i) roots.push_back(rd.simple_roots().row(i));
        std::vector<IntMatrix> refl;
        for (int i = 0; i < rd.semisimple_rank(); ++i) refl.push_back(reflection_char(rd, i));
        bool grew = true;
        while (grew) {
            grew = false;
            for (const IntMatrix& s : refl)
                for (size_t k = 0; k < roots.size(); ++k) {
                    Vec img = s.apply(roots[k]);
                    if (std::find(roots.begin(), roots.end(), img) == roots.end()) {
                        roots.push_back(img);
                        grew = true;
                    }
                }
        }
        for (const IntMatrix& s : refl)
            for (const Vec& v : roots)
                CHECK(std::find(roots.begin(), roots.end(), s.apply(v)) != roots.end());
    }
}
