#include "pic/taut.hpp"

#include <sstream>
#include <stdexcept>

namespace pic {

namespace {

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int vec_sum(const Vec& v) {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
}

Int binom2(const Int& a) { return a * (a - 1) / 2; }

}  // namespace

TautClass TautClass::det(const Vec& chi, const Vec& zeta) {
    TautClass c;
    c.r = static_cast<int>(chi.size());
    c.n = static_cast<int>(zeta.size());
    TautAtom a;
    a.chi = chi;
    a.zeta = zeta;
    c.terms.emplace_back(1, a);
    return c;
}

TautClass TautClass::pair(const Vec& chi, const Vec& zeta, const Vec& chi2, const Vec& zeta2) {
    if (chi.size() != chi2.size() || zeta.size() != zeta2.size())
        throw std::invalid_argument("TautClass::pair: slot size mismatch");
    TautClass c;
    c.r = static_cast<int>(chi.size());
    c.n = static_cast<int>(zeta.size());
    TautAtom a;
    a.is_pair = true;
    a.chi = chi;
    a.zeta = zeta;
    a.chi2 = chi2;
    a.zeta2 = zeta2;
    c.terms.emplace_back(1, a);
    return c;
}

TautClass& TautClass::operator+=(const TautClass& rhs) {
    if (terms.empty()) {
        r = rhs.r;
        n = rhs.n;
    }
    if (!rhs.terms.empty() && (r != rhs.r || n != rhs.n))
        throw std::invalid_argument("TautClass: mixing ambient sizes");
    for (const auto& t : rhs.terms) terms.push_back(t);
    return *this;
}

TautClass TautClass::operator+(const TautClass& rhs) const {
    TautClass out = *this;
    out += rhs;
    return out;
}

TautClass TautClass::operator-() const { return scaled(-1); }

TautClass TautClass::operator-(const TautClass& rhs) const { return *this + rhs.scaled(-1); }

TautClass TautClass::scaled(const Int& c) const {
    TautClass out = *this;
    for (auto& t : out.terms) t.first *= c;
    return out;
}

Regime regime_of(int g, int n) {
    if (g >= 2) return Regime::HighGenus;
    if (g == 1) return Regime::GenusOne;
    if (g == 0) return n >= 1 ? Regime::GenusZeroMarked : Regime::GenusZeroClosed;
    throw std::invalid_argument("regime_of: negative genus");
}

int RPicBasis::size() const {
    switch (regime) {
        case Regime::HighGenus: return r * n + r * (r + 1) / 2 + r;
        case Regime::GenusOne: return r * n + r * (r - 1) / 2 + r;
        default: return r;
    }
}

int RPicBasis::m_index(int i, int j) const { return i * n + j; }

int RPicBasis::s_index(int i, int k) const {
    if (i > k) std::swap(i, k);
    if (regime == Regime::GenusOne) {
        if (i == k) throw std::invalid_argument("no S(i,i) symbol at genus 1");
        // pairs (i, k) with i < k, lexicographic
        return r * n + i * r - i * (i + 1) / 2 + (k - i - 1);
    }
    return r * n + sym2_index(r, i, k);
}

int RPicBasis::d_index(int i) const {
    int s_count = regime == Regime::GenusOne ? r * (r - 1) / 2 : r * (r + 1) / 2;
    return r * n + s_count + i;
}

std::vector<std::string> RPicBasis::labels() const {
    std::vector<std::string> out(size());
    auto name = [](const char* sym, int a, int b) {
        std::ostringstream os;
        os << sym << "(" << a + 1;
        if (b >= 0) os << "," << b + 1;
        os << ")";
        return os.str();
    };
    if (regime == Regime::HighGenus || regime == Regime::GenusOne) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) out[m_index(i, j)] = name("M", i, j);
        for (int i = 0; i < r; ++i)
            for (int k = i; k < r; ++k) {
                if (regime == Regime::GenusOne && i == k) continue;
                out[s_index(i, k)] = name("S", i, k);
            }
        for (int i = 0; i < r; ++i) out[d_index(i)] = name("D", i, -1);
    } else {
        for (int i = 0; i < r; ++i) out[i] = name("E", i, -1);
    }
    return out;
}

RPicBasis make_basis(int r, int g, int n, const Vec& d) {
    if (static_cast<int>(d.size()) != r)
        throw std::invalid_argument("make_basis: degree size mismatch");
    RPicBasis b;
    b.regime = regime_of(g, n);
    b.r = r;
    b.n = n;
    b.g = g;
    b.d = d;
    if (b.regime == Regime::GenusZeroClosed) {
        // HNF basis of {chi : (d, chi) even}
        IntMatrix drow(1, r);
        for (int i = 0; i < r; ++i) drow(0, i) = d[i];
        b.eps = lattice_preimage(drow, IntMatrix::from_rows({{2}}));
        if (b.eps.cols() != r) throw std::logic_error("make_basis: parity lattice rank drop");
    }
    return b;
}

Vec normalize(const TautClass& c, const RPicBasis& basis) {
    if (basis.regime != Regime::HighGenus && basis.regime != Regime::GenusOne)
        throw std::invalid_argument("normalize: genus >= 1 required");
    if (!c.terms.empty() && (c.r != basis.r || c.n != basis.n))
        throw std::invalid_argument("normalize: ambient size mismatch");
    int r = basis.r, n = basis.n;
    bool g1 = basis.regime == Regime::GenusOne;
    Vec out(basis.size());

    auto add_pair = [&](const Int& c0, const Vec& a, const Vec& za, const Vec& b,
                        const Vec& zb) {
        for (int i = 0; i < r; ++i)
            for (int k = i; k < r; ++k) {
                if (i == k) {
                    if (g1)
                        out[basis.d_index(i)] += 2 * c0 * a[i] * b[i];
                    else
                        out[basis.s_index(i, i)] += c0 * a[i] * b[i];
                } else {
                    out[basis.s_index(i, k)] += c0 * (a[i] * b[k] + a[k] * b[i]);
                }
            }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j)
                out[basis.m_index(i, j)] += c0 * (a[i] * zb[j] + b[i] * za[j]);
    };

    auto add_det = [&](const Int& c0, const Vec& a, const Vec& z) {
        for (int i = 0; i < r; ++i) {
            if (g1) {
                out[basis.d_index(i)] += c0 * a[i] * a[i];
            } else {
                out[basis.d_index(i)] += c0 * a[i];
                out[basis.s_index(i, i)] += c0 * binom2(a[i]);
            }
            for (int k = i + 1; k < r; ++k)
                out[basis.s_index(i, k)] += c0 * a[i] * a[k];
            for (int j = 0; j < n; ++j) out[basis.m_index(i, j)] += c0 * a[i] * z[j];
        }
    };

    for (const auto& [coeff, atom] : c.terms) {
        if (atom.is_pair)
            add_pair(coeff, atom.chi, atom.zeta, atom.chi2, atom.zeta2);
        else
            add_det(coeff, atom.chi, atom.zeta);
    }
    return out;
}

TautClass basis_class(const RPicBasis& basis, int index) {
    int r = basis.r, n = basis.n;
    auto e = [&](int i) {
        Vec v(r);
        v[i] = 1;
        return v;
    };
    auto f = [&](int j) {
        Vec v(n);
        v[j] = 1;
        return v;
    };
    Vec zero_r(r), zero_n(n);
    switch (basis.regime) {
        case Regime::HighGenus:
        case Regime::GenusOne: {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < n; ++j)
                    if (basis.m_index(i, j) == index)
                        return TautClass::pair(e(i), zero_n, zero_r, f(j));
            for (int i = 0; i < r; ++i)
                for (int k = i; k < r; ++k) {
                    if (basis.regime == Regime::GenusOne && i == k) continue;
                    if (basis.s_index(i, k) == index)
                        return TautClass::pair(e(i), zero_n, e(k), zero_n);
                }
            for (int i = 0; i < r; ++i)
                if (basis.d_index(i) == index) return TautClass::det(e(i), zero_n);
            break;
        }
        case Regime::GenusZeroMarked:
            return TautClass::pair(e(index), zero_n, zero_r, f(0));
        case Regime::GenusZeroClosed: {
            Vec eps = basis.eps.col(index);
            Int pairing = dot(basis.d, eps);
            TautClass out = TautClass::det(eps, zero_n).scaled(1 - pairing);
            out += TautClass::pair(eps, zero_n, eps, zero_n).scaled(pairing / 2);
            return out;
        }
    }
    throw std::out_of_range("basis_class: bad index");
}

Vec weight(const TautClass& c, const Vec& d, int g) {
    int r = static_cast<int>(d.size());
    Vec out(r);
    for (const auto& [coeff, atom] : c.terms) {
        if (atom.is_pair) {
            Int w1 = dot(d, atom.chi2) + vec_sum(atom.zeta2);
            Int w2 = dot(d, atom.chi) + vec_sum(atom.zeta);
            for (int i = 0; i < r; ++i)
                out[i] += coeff * (w1 * atom.chi[i] + w2 * atom.chi2[i]);
        } else {
            Int w = dot(d, atom.chi) + vec_sum(atom.zeta) + 1 - g;
            for (int i = 0; i < r; ++i) out[i] += coeff * w * atom.chi[i];
        }
    }
    return out;
}

IntMatrix gamma_form(const TautClass& c) {
    int r = c.r;
    IntMatrix out(r, r);
    for (const auto& [coeff, atom] : c.terms) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (atom.is_pair)
                    out(i, j) += coeff * (atom.chi[i] * atom.chi2[j] + atom.chi2[i] * atom.chi[j]);
                else
                    out(i, j) += coeff * atom.chi[i] * atom.chi[j];
            }
    }
    return out;
}

Vec weight_g0(const TautClass& c, const Vec& d) { return weight(c, d, 0); }

Vec normalize_g0(const TautClass& c, const RPicBasis& basis) {
    if (basis.regime != Regime::GenusZeroMarked && basis.regime != Regime::GenusZeroClosed)
        throw std::invalid_argument("normalize_g0: genus 0 required");
    Vec w = weight_g0(c, basis.d);
    if (basis.regime == Regime::GenusZeroMarked) return w;
    auto x = solve_in_lattice(basis.eps, w);
    if (!x) throw std::invalid_argument("normalize_g0: weight outside the image lattice");
    return *x;
}

IntMatrix weyl_algebraic_action(const IntMatrix& w, const RPicBasis& basis) {
    int sz = basis.size();
    IntMatrix out(sz, sz);
    for (int j = 0; j < sz; ++j) {
        Vec col = normalize(pullback_torus(w, basis_class(basis, j)), basis);
        for (int i = 0; i < sz; ++i) out(i, j) = col[i];
    }
    return out;
}

TautClass pullback_torus(const IntMatrix& f, const TautClass& c) {
    TautClass out;
    out.r = f.rows();
    out.n = c.n;
    for (const auto& [coeff, atom] : c.terms) {
        TautAtom img = atom;
        img.chi = f.apply(atom.chi);
        if (atom.is_pair) img.chi2 = f.apply(atom.chi2);
        out.terms.emplace_back(coeff, img);
    }
    return out;
}

IntMatrix change_of_degree(const RPicBasis& basis) {
    if (basis.n < 1) throw std::invalid_argument("change_of_degree: needs n >= 1");
    if (basis.regime != Regime::HighGenus && basis.regime != Regime::GenusOne)
        throw std::invalid_argument("change_of_degree: genus >= 1 required");
    int sz = basis.size(), r = basis.r;
    IntMatrix t = IntMatrix::identity(sz);
    for (int i = 0; i < r; ++i)
        for (int k = i; k < r; ++k) {
            if (basis.regime == Regime::GenusOne && i == k) continue;
            int col = basis.s_index(i, k);
            t(basis.m_index(k, 0), col) -= basis.d[i];
            t(basis.m_index(i, 0), col) -= basis.d[k];
        }
    for (int i = 0; i < r; ++i)
        t(basis.m_index(i, 0), basis.d_index(i)) -= basis.d[i];
    return t;
}

FiberRestrictionData fiber_restriction_data(int r, int g, int n, const Vec& d) {
    if (g < 1) throw std::invalid_argument("fiber_restriction_data: genus >= 1 required");
    RPicBasis basis = make_basis(r, g, n, d);
    int sz = basis.size();
    int nsym = sym2_dim(r);
    IntMatrix full(r + nsym, sz);
    for (int j = 0; j < sz; ++j) {
        TautClass c = basis_class(basis, j);
        Vec w = weight(c, d, g);
        IntMatrix gm = gamma_form(c);
        for (int i = 0; i < r; ++i) full(i, j) = w[i];
        for (auto [a, b] : sym2_pairs(r)) full(r + sym2_index(r, a, b), j) = gm(a, b);
    }
    FiberRestrictionData out;
    out.j_image = kernel_basis(full);

    if (g >= 2) {
        IntMatrix row(1, n + 1);
        row(0, 0) = 2 * g - 2;
        for (int j = 0; j < n; ++j) row(0, j + 1) = 1;
        out.h_basis = kernel_basis(row);
    } else {
        IntMatrix row(1, n);
        for (int j = 0; j < n; ++j) row(0, j) = 1;
        out.h_basis = kernel_basis(row);
    }

    // explicit j_T^d image: chi (x) (m, zeta) -> m(S_ii - 2D_i) + sum zeta_j M_ij
    IntMatrix span(sz, r * out.h_basis.cols());
    int col = 0;
    for (int i = 0; i < r; ++i)
        for (int hc = 0; hc < out.h_basis.cols(); ++hc, ++col) {
            Vec h = out.h_basis.col(hc);
            Vec v(sz);
            if (g >= 2) {
                const Int& m = h[0];
                v[basis.s_index(i, i)] += m;
                v[basis.d_index(i)] -= 2 * m;
                for (int j = 0; j < n; ++j) v[basis.m_index(i, j)] += h[j + 1];
            } else {
                for (int j = 0; j < n; ++j) v[basis.m_index(i, j)] += h[j];
            }
            for (int k = 0; k < sz; ++k) span(k, col) = v[k];
        }
    if (!lattice_equal(out.j_image, span))
        throw std::logic_error("fiber_restriction_data: kernel differs from the explicit image");

    if (n == 0) {
        SnfResult s = snf(full);
        for (int t = 0; t < std::min(full.rows(), full.cols()); ++t)
            if (s.S(t, t) != 0) out.image_invariants.push_back(s.S(t, t));
    }
    return out;
}

}  // namespace pic
