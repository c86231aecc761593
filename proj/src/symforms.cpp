#include "pic/symforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace pic {

int sym2_dim(int r) { return r * (r + 1) / 2; }

std::vector<std::pair<int, int>> sym2_pairs(int r) {
    std::vector<std::pair<int, int>> out;
    out.reserve(sym2_dim(r));
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) out.emplace_back(i, j);
    return out;
}

int sym2_index(int r, int i, int j) {
    if (i > j) std::swap(i, j);
    // pairs (i, i..r-1) blocks
    return i * r - i * (i - 1) / 2 + (j - i);
}

IntMatrix b_map(int r, const Vec& q) {
    if (static_cast<int>(q.size()) != sym2_dim(r))
        throw std::invalid_argument("b_map: coefficient length mismatch");
    IntMatrix g(r, r);
    for (auto [i, j] : sym2_pairs(r)) {
        const Int& c = q[sym2_index(r, i, j)];
        if (i == j)
            g(i, i) = 2 * c;
        else
            g(i, j) = g(j, i) = c;
    }
    return g;
}

Vec q_map(const IntMatrix& g) {
    int r = g.rows();
    if (g.cols() != r || !(g == g.transpose()))
        throw std::invalid_argument("q_map: matrix not symmetric");
    Vec q(sym2_dim(r));
    for (auto [i, j] : sym2_pairs(r))
        q[sym2_index(r, i, j)] = (i == j) ? g(i, i) : 2 * g(i, j);
    return q;
}

IntMatrix b_map_matrix(int r) {
    int n = sym2_dim(r);
    IntMatrix m(n, n);
    for (auto [i, j] : sym2_pairs(r)) {
        int k = sym2_index(r, i, j);
        m(k, k) = (i == j) ? 2 : 1;
    }
    return m;
}

IntMatrix q_map_matrix(int r) {
    int n = sym2_dim(r);
    IntMatrix m(n, n);
    for (auto [i, j] : sym2_pairs(r)) {
        int k = sym2_index(r, i, j);
        m(k, k) = (i == j) ? 1 : 2;
    }
    return m;
}

IntMatrix sym2_action(const IntMatrix& w) {
    int rs = w.cols(), rt = w.rows();
    IntMatrix m(sym2_dim(rt), sym2_dim(rs));
    for (auto [i, j] : sym2_pairs(rs)) {
        int src = sym2_index(rs, i, j);
        for (auto [a, b] : sym2_pairs(rt)) {
            int dst = sym2_index(rt, a, b);
            if (i == j)
                m(dst, src) = (a == b) ? Int(w(a, i) * w(a, i)) : Int(2 * w(a, i) * w(b, i));
            else
                m(dst, src) = (a == b) ? Int(w(a, i) * w(a, j))
                                       : Int(w(a, i) * w(b, j) + w(b, i) * w(a, j));
        }
    }
    return m;
}

namespace {

IntMatrix invariant_lattice(const std::vector<IntMatrix>& actions, int dim) {
    IntMatrix stacked(0, dim);
    for (const IntMatrix& a : actions)
        stacked = IntMatrix::vstack(stacked, a - IntMatrix::identity(dim));
    if (stacked.rows() == 0) return IntMatrix::identity(dim);
    return kernel_basis(stacked);
}

Int det_small(const IntMatrix& m) {
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int acc = 0;
    std::vector<int> cols;
    for (int j = 1; j < n; ++j) cols.push_back(j);
    for (int i = 0; i < n; ++i) {
        if (m(i, 0) == 0) continue;
        std::vector<int> rows;
        for (int k = 0; k < n; ++k)
            if (k != i) rows.push_back(k);
        Int minor = det_small(m.submatrix_rows(rows).submatrix_cols(cols));
        acc += ((i % 2) ? -m(i, 0) : m(i, 0)) * minor;
    }
    return acc;
}

}  // namespace

Sym2Invariants sym2_invariants(const RootDatum& rd) {
    Sym2Invariants out;
    std::vector<IntMatrix> on_char;
    for (int i = 0; i < rd.semisimple_rank(); ++i)
        on_char.push_back(sym2_action(reflection_char(rd, i)));
    out.on_char = invariant_lattice(on_char, sym2_dim(rd.rank()));

    int l = rd.semisimple_rank();
    if (l == 0) {
        out.on_sc_char = IntMatrix(0, 0);
        return out;
    }
    RootDatum sc = build_classical(rd.cartan(), Isogeny::SimplyConnected);
    std::vector<IntMatrix> on_sc;
    for (int i = 0; i < l; ++i) on_sc.push_back(sym2_action(reflection_char(sc, i)));
    out.on_sc_char = invariant_lattice(on_sc, sym2_dim(l));
    return out;
}

Vec basic_inner_product(const RootDatum& rd, const SimpleFactor& factor) {
    int l = rd.semisimple_rank();
    const std::vector<int>& nodes = factor.nodes;
    int m = static_cast<int>(nodes.size());
    IntMatrix sub_cartan = rd.cartan().submatrix_rows(nodes).submatrix_cols(nodes);
    RootDatum sub = build_classical(sub_cartan, Isogeny::SimplyConnected);
    std::vector<IntMatrix> acts;
    for (int i = 0; i < m; ++i) acts.push_back(sym2_action(reflection_char(sub, i)));
    IntMatrix inv = invariant_lattice(acts, sym2_dim(m));
    if (inv.cols() != 1)
        throw std::logic_error("basic_inner_product: invariant lattice rank != 1");
    Vec gen = inv.col(0);

    std::vector<int> short_pos;  // positions within the factor
    Int hi = sub.symmetrizer()[0];
    for (const Int& d : sub.symmetrizer()) hi = std::max(hi, d);
    for (int i = 0; i < m; ++i)
        if (sub.symmetrizer()[i] == hi) short_pos.push_back(i);

    Int lead = gen[sym2_index(m, short_pos[0], short_pos[0])];
    if (lead != 1 && lead != -1)
        throw std::logic_error("basic_inner_product: generator not unimodular on short coroots");
    if (lead < 0)
        for (Int& c : gen) c = -c;
    for (int k : short_pos)
        if (gen[sym2_index(m, k, k)] != 1)
            throw std::logic_error("basic_inner_product: short coroots not normalized");

    IntMatrix g = b_map(m, gen);
    std::vector<int> head;
    for (int k = 0; k < m; ++k) {
        head.push_back(k);
        if (det_small(g.submatrix_rows(head).submatrix_cols(head)) <= 0)
            throw std::logic_error("basic_inner_product: form not positive definite");
    }

    Vec out(sym2_dim(l));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            out[sym2_index(l, nodes[i], nodes[j])] = gen[sym2_index(m, i, j)];
    return out;
}

Vec contraction(const RootDatum& rd, const Vec& d_ad, const Vec& b_sc) {
    int l = rd.semisimple_rank();
    if (static_cast<int>(d_ad.size()) != l || static_cast<int>(b_sc.size()) != sym2_dim(l))
        throw std::invalid_argument("contraction: size mismatch");
    IntMatrix g = b_map(l, b_sc);
    // coroot-basis coordinates y of d: C^T y = d_ad, solved over Q
    std::vector<Rat> y(l);
    {
        std::vector<std::vector<Rat>> aug(l, std::vector<Rat>(l + 1));
        const IntMatrix& c = rd.cartan();
        for (int i = 0; i < l; ++i) {
            for (int j = 0; j < l; ++j) aug[i][j] = Rat(c(j, i));
            aug[i][l] = Rat(d_ad[i]);
        }
        for (int col = 0; col < l; ++col) {
            int piv = col;
            while (piv < l && aug[piv][col] == 0) ++piv;
            if (piv == l) throw std::logic_error("contraction: singular Cartan matrix");
            std::swap(aug[col], aug[piv]);
            Rat p = aug[col][col];
            for (int j = col; j <= l; ++j) aug[col][j] /= p;
            for (int i = 0; i < l; ++i) {
                if (i == col || aug[i][col] == 0) continue;
                Rat f = aug[i][col];
                for (int j = col; j <= l; ++j) aug[i][j] -= f * aug[col][j];
            }
        }
        for (int i = 0; i < l; ++i) y[i] = aug[i][l];
    }
    Vec out(l);
    for (int j = 0; j < l; ++j) {
        Rat acc = 0;
        for (int m = 0; m < l; ++m) acc += Rat(g(m, j)) * y[m];
        acc.canonicalize();
        if (acc.get_den() != 1)
            throw std::invalid_argument("contraction: non-integral value");
        out[j] = acc.get_num();
    }
    return out;
}

bool check_star(const RootDatum& rd, const Vec& d) {
    Vec p = rd.simple_roots().apply(d);
    for (const SimpleFactor& f : rd.factors()) {
        bool nonzero = false;
        for (int i : f.nodes)
            if (p[i] != 0) nonzero = true;
        if (!nonzero) return false;
    }
    return true;
}

namespace {

// 0 < 1 < -1 < 2 < -2 < ... entrywise, then lexicographic
bool spiral_less(const Vec& a, const Vec& b) {
    auto key = [](const Int& v) { return std::make_pair(abs(v), Int(v < 0 ? 1 : 0)); };
    for (size_t i = 0; i < a.size(); ++i) {
        auto ka = key(a[i]), kb = key(b[i]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

}  // namespace

Vec find_lift(const RootDatum& rd, const Vec& delta) {
    if (static_cast<int>(delta.size()) != rd.rank())
        throw std::invalid_argument("find_lift: size mismatch");
    if (rd.is_torus()) return delta;
    IntMatrix coroot_cols = rd.simple_coroots().transpose();
    int r = rd.rank();
    for (long radius = 0;; ++radius) {
        std::optional<Vec> best;
        Vec cur(r);
        std::vector<long> idx(r, -radius);
        while (true) {
            bool on_shell = false;
            for (int i = 0; i < r; ++i)
                if (idx[i] == radius || idx[i] == -radius) on_shell = true;
            if (on_shell || radius == 0) {
                for (int i = 0; i < r; ++i) cur[i] = idx[i];
                Vec diff(r);
                for (int i = 0; i < r; ++i) diff[i] = cur[i] - delta[i];
                if (in_lattice(coroot_cols, diff) && check_star(rd, cur) &&
                    (!best || spiral_less(cur, *best)))
                    best = cur;
            }
            int k = r - 1;
            while (k >= 0 && idx[k] == radius) {
                idx[k] = -radius;
                --k;
            }
            if (k < 0) break;
            ++idx[k];
        }
        if (best) return *best;
        if (radius > 64)
            throw std::logic_error("find_lift: no lift found in a huge box");
    }
}

}  // namespace pic
