#include "pic/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pic {

namespace {

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

// Positive primitive d with diag(d) * C symmetric; throws when impossible.
std::vector<Int> compute_symmetrizer(const IntMatrix& c) {
    int l = c.rows();
    std::vector<Rat> d(l);
    std::vector<bool> seen(l, false);
    for (int start = 0; start < l; ++start) {
        if (seen[start]) continue;
        d[start] = 1;
        seen[start] = true;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            for (int j = 0; j < l; ++j) {
                if (i == j || c(i, j) == 0) continue;
                // d_i C_ij = d_j C_ji
                Rat want = d[i] * Rat(c(i, j)) / Rat(c(j, i));
                if (seen[j]) {
                    if (d[j] != want)
                        throw std::invalid_argument("RootDatum: Cartan matrix not symmetrizable");
                } else {
                    d[j] = want;
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    Int lcm_den = 1;
    for (const Rat& q : d) lcm_den = lcm(lcm_den, Int(q.get_den()));
    std::vector<Int> out(l);
    Int g = 0;
    for (int i = 0; i < l; ++i) {
        out[i] = Int(d[i].get_num()) * (lcm_den / Int(d[i].get_den()));
        if (out[i] <= 0)
            throw std::invalid_argument("RootDatum: symmetrizer not positive");
        g = gcd(g, out[i]);
    }
    for (Int& v : out) v /= g;
    return out;
}

struct Component {
    std::vector<int> nodes;
};

std::vector<Component> connected_components(const IntMatrix& c) {
    int l = c.rows();
    std::vector<bool> seen(l, false);
    std::vector<Component> comps;
    for (int start = 0; start < l; ++start) {
        if (seen[start]) continue;
        Component comp;
        std::vector<int> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            comp.nodes.push_back(i);
            for (int j = 0; j < l; ++j)
                if (j != i && !seen[j] && c(i, j) != 0) {
                    seen[j] = true;
                    queue.push_back(j);
                }
        }
        std::sort(comp.nodes.begin(), comp.nodes.end());
        comps.push_back(comp);
    }
    return comps;
}

// Path through all nodes of a tree with max degree 2, starting at `from`.
std::vector<int> walk_path(const std::vector<int>& nodes, const IntMatrix& c, int from) {
    std::vector<int> path{from};
    int prev = -1, cur = from;
    while (true) {
        int next = -1;
        for (int j : nodes)
            if (j != cur && j != prev && c(cur, j) != 0) next = j;
        if (next < 0) break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

SimpleFactor classify_component(const Component& comp, const IntMatrix& c,
                                const std::vector<Int>& d) {
    const auto& nodes = comp.nodes;
    int n = static_cast<int>(nodes.size());
    auto invalid = [] { throw std::invalid_argument("RootDatum: not a finite-type diagram"); };

    if (n == 1) return {Series::A, 1, nodes};

    std::map<int, std::vector<int>> adj;
    int max_mult = 1;
    for (int i : nodes)
        for (int j : nodes)
            if (i != j && c(i, j) != 0) {
                adj[i].push_back(j);
                max_mult = std::max(max_mult, static_cast<int>(Int(c(i, j) * c(j, i)).get_si()));
            }

    if (max_mult >= 4) invalid();
    if (max_mult == 3) {
        if (n != 2) invalid();
        int a = nodes[0], b = nodes[1];
        if (d[a] > d[b]) std::swap(a, b);  // short root first
        return {Series::G, 2, {a, b}};
    }

    std::vector<int> branch;
    for (int i : nodes)
        if (adj[i].size() >= 3) branch.push_back(i);
    if (!branch.empty() && branch.size() > 1) invalid();
    if (!branch.empty() && adj[branch[0]].size() > 3) invalid();

    if (max_mult == 2) {
        if (!branch.empty()) invalid();
        int end = -1;
        for (int i : nodes)
            if (adj[i].size() == 1) end = i;
        if (end < 0) invalid();
        std::vector<int> path = walk_path(nodes, c, end);
        if (static_cast<int>(path.size()) != n) invalid();
        int dbl = -1, ndbl = 0;
        for (int p = 0; p + 1 < n; ++p)
            if (c(path[p], path[p + 1]) * c(path[p + 1], path[p]) == 2) {
                dbl = p;
                ++ndbl;
            }
        if (ndbl != 1) invalid();
        if (dbl != 0 && dbl != n - 2) {
            // interior double edge: only F4
            if (n != 4 || dbl != 1) invalid();
            if (d[path[0]] < d[path[3]]) std::reverse(path.begin(), path.end());
            return {Series::F, 4, path};
        }
        if (dbl == 0) std::reverse(path.begin(), path.end());
        // short last -> B, long last -> C; rank 2 reported as B
        if (n == 2) {
            if (d[path[0]] < d[path[1]]) std::reverse(path.begin(), path.end());
            return {Series::B, 2, path};
        }
        return {d[path[n - 1]] < d[path[0]] ? Series::B : Series::C, n, path};
    }

    // simply laced
    if (branch.empty()) {
        int end = -1;
        for (int i : nodes)
            if (adj[i].size() == 1 && (end < 0 || i < end)) end = i;
        std::vector<int> path = walk_path(nodes, c, end);
        if (static_cast<int>(path.size()) != n) invalid();
        return {Series::A, n, path};
    }

    int hub = branch[0];
    std::vector<std::vector<int>> arms;  // from hub outward, hub excluded
    for (int first : adj[hub]) {
        std::vector<int> arm{first};
        int prev = hub, cur = first;
        while (true) {
            int next = -1;
            for (int j : adj[cur])
                if (j != prev) next = j;
            if (next < 0) break;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        arms.push_back(arm);
    }
    std::sort(arms.begin(), arms.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a[0] < b[0];
              });
    size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
    if (a0 + a1 + a2 + 1 != static_cast<size_t>(n)) invalid();
    if (a0 == 1 && a1 == 1) {
        // D_n: long arm tip to hub, then the two short tips
        std::vector<int> order(arms[2].rbegin(), arms[2].rend());
        order.push_back(hub);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        return {Series::D, n, order};
    }
    if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
        // E_n in Bourbaki numbering: 1-3-4-5-... path, node 2 on node 4
        std::vector<int> order;
        order.push_back(arms[1][1]);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        order.push_back(hub);
        for (int v : arms[2]) order.push_back(v);
        return {Series::E, n, order};
    }
    invalid();
    return {};
}

}  // namespace

RootDatum::RootDatum(IntMatrix simple_roots, IntMatrix simple_coroots)
    : rank_(simple_roots.cols()),
      l_(simple_roots.rows()),
      roots_(std::move(simple_roots)),
      coroots_(std::move(simple_coroots)) {
    if (coroots_.rows() != l_ || coroots_.cols() != rank_)
        throw std::invalid_argument("RootDatum: roots and coroots must share shape");
    if (l_ > rank_)
        throw std::invalid_argument("RootDatum: more simple roots than the rank");
    if (pic::rank(roots_.transpose()) != l_)
        throw std::invalid_argument("RootDatum: simple roots not independent");
    if (pic::rank(coroots_.transpose()) != l_)
        throw std::invalid_argument("RootDatum: simple coroots not independent");

    cartan_ = coroots_ * roots_.transpose();
    for (int i = 0; i < l_; ++i) {
        if (cartan_(i, i) != 2)
            throw std::invalid_argument("RootDatum: Cartan diagonal must be 2");
        for (int j = 0; j < l_; ++j) {
            if (i == j) continue;
            if (cartan_(i, j) > 0)
                throw std::invalid_argument("RootDatum: positive off-diagonal Cartan entry");
            if ((cartan_(i, j) == 0) != (cartan_(j, i) == 0))
                throw std::invalid_argument("RootDatum: asymmetric Cartan zero pattern");
        }
    }
    sym_ = compute_symmetrizer(cartan_);
    // positive definiteness of diag(d) * C via leading principal minors
    IntMatrix dc = cartan_;
    for (int i = 0; i < l_; ++i)
        for (int j = 0; j < l_; ++j) dc(i, j) *= sym_[i];
    std::vector<int> head;
    for (int k = 0; k < l_; ++k) {
        head.push_back(k);
        if (det_small(dc.submatrix_rows(head).submatrix_cols(head)) <= 0)
            throw std::invalid_argument("RootDatum: Cartan matrix not of finite type");
    }
    for (const Component& comp : connected_components(cartan_))
        factors_.push_back(classify_component(comp, cartan_, sym_));
}

std::vector<int> RootDatum::short_root_indices() const {
    std::vector<int> out;
    for (const SimpleFactor& f : factors_) {
        Int lo = sym_[f.nodes[0]];
        for (int i : f.nodes) lo = std::min(lo, sym_[i]);
        for (int i : f.nodes)
            if (sym_[i] == lo) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> RootDatum::short_coroot_indices() const {
    std::vector<int> out;
    for (const SimpleFactor& f : factors_) {
        Int hi = sym_[f.nodes[0]];
        for (int i : f.nodes) hi = std::max(hi, sym_[i]);
        for (int i : f.nodes)
            if (sym_[i] == hi) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix cartan_matrix(Series series, int n) {
    auto path = [](int n) {
        IntMatrix c(n, n);
        for (int i = 0; i < n; ++i) {
            c(i, i) = 2;
            if (i + 1 < n) c(i, i + 1) = c(i + 1, i) = -1;
        }
        return c;
    };
    switch (series) {
        case Series::A:
            if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
            return path(n);
        case Series::B: {
            if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
            IntMatrix c = path(n);
            c(n - 1, n - 2) = -2;
            return c;
        }
        case Series::C: {
            if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
            IntMatrix c = path(n);
            c(n - 2, n - 1) = -2;
            return c;
        }
        case Series::D: {
            if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
            IntMatrix c = path(n - 1);
            IntMatrix full(n, n);
            for (int i = 0; i < n - 1; ++i)
                for (int j = 0; j < n - 1; ++j) full(i, j) = c(i, j);
            full(n - 1, n - 1) = 2;
            full(n - 1, n - 3) = full(n - 3, n - 1) = -1;
            return full;
        }
        case Series::E: {
            if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
            IntMatrix c(n, n);
            for (int i = 0; i < n; ++i) c(i, i) = 2;
            auto link = [&](int a, int b) { c(a - 1, b - 1) = c(b - 1, a - 1) = -1; };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int k = 4; k < n; ++k) link(k, k + 1);
            return c;
        }
        case Series::F: {
            if (n != 4) throw std::invalid_argument("F_n needs n = 4");
            IntMatrix c = path(4);
            c(2, 1) = -2;
            return c;
        }
        case Series::G: {
            if (n != 2) throw std::invalid_argument("G_n needs n = 2");
            return IntMatrix::from_rows({{2, -3}, {-1, 2}});
        }
    }
    throw std::invalid_argument("unknown series");
}

RootDatum build_classical(const IntMatrix& cartan, Isogeny isogeny) {
    int l = cartan.rows();
    if (isogeny == Isogeny::SimplyConnected)
        return RootDatum(cartan.transpose(), IntMatrix::identity(l));
    return RootDatum(IntMatrix::identity(l), cartan);
}

RootDatum build_classical(Series series, int rank, Isogeny isogeny) {
    return build_classical(cartan_matrix(series, rank), isogeny);
}

RootDatum build_torus(int rank) {
    return RootDatum(IntMatrix(0, rank), IntMatrix(0, rank));
}

RootDatum build_gl(int n) {
    if (n < 1) throw std::invalid_argument("build_gl: n >= 1");
    IntMatrix m(n - 1, n);
    for (int i = 0; i + 1 < n; ++i) {
        m(i, i) = 1;
        m(i, i + 1) = -1;
    }
    return RootDatum(m, m);
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
    return RootDatum(IntMatrix::block_diag(a.simple_roots(), b.simple_roots()),
                     IntMatrix::block_diag(a.simple_coroots(), b.simple_coroots()));
}

DerivedLattices derived_lattices(const RootDatum& rd) {
    DerivedLattices out;
    int r = rd.rank(), l = rd.semisimple_rank();
    IntMatrix coroot_cols = rd.simple_coroots().transpose();  // r x l, coroots as columns
    out.coroot_lattice = hnf(coroot_cols).H.drop_zero_cols();
    if (l > 0) {
        SaturationResult sat = saturation(out.coroot_lattice);
        out.derived_cochar = sat.basis;
        out.connection_index = sat.index;
    } else {
        out.derived_cochar = IntMatrix(r, 0);
        out.connection_index = 1;
    }
    out.radical_cochar = kernel_basis(rd.simple_roots());
    out.ab_char = kernel_basis(rd.simple_coroots());

    // fundamental coweights: columns of CR^T (C^T)^{-1}, denominator det(C)
    if (l > 0) {
        const IntMatrix& c = rd.cartan();
        Int det = det_small(c);
        IntMatrix adj(l, l);  // adjugate of C^T
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                std::vector<int> ri, ci;
                for (int k = 0; k < l; ++k) {
                    if (k != j) ri.push_back(k);
                    if (k != i) ci.push_back(k);
                }
                Int cof = det_small(
                    c.transpose().submatrix_rows(ri).submatrix_cols(ci));
                adj(i, j) = ((i + j) % 2) ? -cof : cof;
            }
        IntMatrix num = coroot_cols * adj;
        Int g = abs(det);
        for (int i = 0; i < num.rows(); ++i)
            for (int j = 0; j < num.cols(); ++j) g = gcd(g, num(i, j));
        if (det < 0) g = -g;
        for (int i = 0; i < num.rows(); ++i)
            for (int j = 0; j < num.cols(); ++j) num(i, j) /= g;
        out.ad_cochar_num = num;
        out.ad_cochar_den = det / g;
    } else {
        out.ad_cochar_num = IntMatrix(r, 0);
        out.ad_cochar_den = 1;
    }
    out.sc_restriction = rd.simple_coroots();
    return out;
}

Pi1Result fundamental_group(const RootDatum& rd) {
    DerivedLattices dl = derived_lattices(rd);
    Pi1Result out;
    out.pi1 = FgAbGroup(rd.rank(), dl.coroot_lattice);
    // coroot columns in coordinates of the derived-cochar basis
    int k = dl.derived_cochar.cols();
    IntMatrix rel(k, dl.coroot_lattice.cols());
    for (int j = 0; j < rel.cols(); ++j) {
        auto x = solve_in_lattice(dl.derived_cochar, dl.coroot_lattice.col(j));
        if (!x) throw std::logic_error("pi1: coroot outside its saturation");
        for (int i = 0; i < k; ++i) rel(i, j) = (*x)[i];
    }
    out.torsion_part = FgAbGroup(k, rel);
    out.free_quotient = FgAbGroup(rd.rank(), dl.derived_cochar);
    if (out.pi1.torsion_invariants() != out.torsion_part.torsion_invariants() ||
        out.torsion_part.free_rank() != 0 ||
        out.free_quotient.free_rank() != out.pi1.free_rank() ||
        !out.free_quotient.torsion_invariants().empty())
        throw std::logic_error("pi1: torsion/free decomposition mismatch");
    return out;
}

IntMatrix reflection_cochar(const RootDatum& rd, int i) {
    int r = rd.rank();
    IntMatrix m = IntMatrix::identity(r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            m(a, b) -= rd.simple_coroots()(i, a) * rd.simple_roots()(i, b);
    return m;
}

IntMatrix reflection_char(const RootDatum& rd, int i) {
    int r = rd.rank();
    IntMatrix m = IntMatrix::identity(r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            m(a, b) -= rd.simple_roots()(i, a) * rd.simple_coroots()(i, b);
    return m;
}

std::vector<IntMatrix> weyl_enumerate(const std::vector<IntMatrix>& gens, long cap) {
    if (gens.empty()) return {};
    int r = gens[0].rows();
    std::set<std::string> seen;
    std::vector<IntMatrix> elems{IntMatrix::identity(r)};
    seen.insert(elems[0].to_string());
    for (size_t head = 0; head < elems.size(); ++head) {
        IntMatrix cur = elems[head];
        for (const IntMatrix& g : gens) {
            IntMatrix next = cur * g;
            if (seen.insert(next.to_string()).second) {
                elems.push_back(next);
                if (static_cast<long>(elems.size()) > cap)
                    throw std::runtime_error("weyl_enumerate: cap exceeded");
            }
        }
    }
    return elems;
}

std::vector<IntMatrix> weyl_enumerate(const RootDatum& rd, long cap) {
    if (rd.is_torus()) return {IntMatrix::identity(rd.rank())};
    std::vector<IntMatrix> gens;
    for (int i = 0; i < rd.semisimple_rank(); ++i) gens.push_back(reflection_char(rd, i));
    return weyl_enumerate(gens, cap);
}

}  // namespace pic
