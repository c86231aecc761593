#include "pic/json_io.hpp"

#include <cctype>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace pic {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

Int int_from_json(const Json& j, const char* where) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            fail(std::string(where) + ": not a decimal integer: " + j.get<std::string>());
        }
    }
    fail(std::string(where) + ": expected an integer or a decimal string");
}

int small_int(const Json& j, const char* field, int lo = INT_MIN) {
    if (!j.is_number_integer()) fail(std::string(field) + ": expected an integer");
    long long v = j.get<long long>();
    if (v < lo || v > 1'000'000) fail(std::string(field) + ": out of range");
    return static_cast<int>(v);
}

Series series_from_string(const std::string& s) {
    if (s.size() == 1) switch (s[0]) {
            case 'A': return Series::A;
            case 'B': return Series::B;
            case 'C': return Series::C;
            case 'D': return Series::D;
            case 'E': return Series::E;
            case 'F': return Series::F;
            case 'G': return Series::G;
        }
    fail("series: expected one of A..G, got " + s);
}

// SO_2n as a raw root datum: D_n roots e_i - e_{i+1}, e_{n-1} + e_n on the
// standard lattice, coroots identical.
RootDatum build_so_even(int n) {
    IntMatrix roots(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        roots(i, i) = 1;
        roots(i, i + 1) = -1;
    }
    roots(n - 1, n - 2) = 1;
    roots(n - 1, n - 1) = 1;
    return RootDatum(roots, roots);
}

RootDatum build_so(int m) {
    if (m < 3) fail("so: rank must be >= 3");
    if (m % 2 == 1) return build_classical(Series::B, (m - 1) / 2, Isogeny::Adjoint);
    return build_so_even(m / 2);
}

}  // namespace

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) fail("matrix: expected an array of rows");
    std::vector<Vec> rows;
    size_t width = 0;
    for (const Json& row : j) {
        if (!row.is_array()) fail("matrix: each row must be an array");
        if (!rows.empty() && row.size() != width) fail("matrix: ragged rows");
        width = row.size();
        Vec r;
        for (const Json& e : row) r.push_back(int_from_json(e, "matrix entry"));
        rows.push_back(std::move(r));
    }
    if (rows.empty()) return IntMatrix(0, 0);
    return IntMatrix::from_rows(rows);
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Int& e : v) out.push_back(e.get_str());
    return out;
}

Vec vec_from_json(const Json& j, int expected_len) {
    if (!j.is_array()) fail("vector: expected an array");
    Vec out;
    for (const Json& e : j) out.push_back(int_from_json(e, "vector entry"));
    if (expected_len >= 0 && static_cast<int>(out.size()) != expected_len) {
        std::ostringstream os;
        os << "vector: expected length " << expected_len << ", got " << out.size();
        fail(os.str());
    }
    return out;
}

RootDatum group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) fail("group: expected an object with \"kind\"");
    std::string kind = j.at("kind").get<std::string>();

    if (kind == "torus") return build_torus(small_int(j.at("rank"), "rank", 0));
    if (kind == "gl") return build_gl(small_int(j.at("rank"), "rank", 1));
    if (kind == "sl") {
        int n = small_int(j.at("rank"), "rank", 2);
        return build_classical(Series::A, n - 1, Isogeny::SimplyConnected);
    }
    if (kind == "pgl") {
        int n = small_int(j.at("rank"), "rank", 2);
        return build_classical(Series::A, n - 1, Isogeny::Adjoint);
    }
    if (kind == "sp") {
        int m = small_int(j.at("rank"), "rank", 2);
        if (m % 2 != 0) fail("sp: rank must be even (Sp_2n)");
        return build_classical(Series::C, m / 2, Isogeny::SimplyConnected);
    }
    if (kind == "so") return build_so(small_int(j.at("rank"), "rank", 3));
    if (kind == "classical") {
        Series s = series_from_string(j.at("series").get<std::string>());
        int rank = small_int(j.at("rank"), "rank", 1);
        std::string iso = j.at("isogeny").get<std::string>();
        if (iso != "sc" && iso != "ad") fail("isogeny: expected \"sc\" or \"ad\"");
        return build_classical(s, rank,
                               iso == "sc" ? Isogeny::SimplyConnected : Isogeny::Adjoint);
    }
    if (kind == "product") {
        const Json& factors = j.at("factors");
        if (!factors.is_array() || factors.empty()) fail("product: non-empty \"factors\" array required");
        std::optional<RootDatum> acc;
        for (const Json& f : factors) {
            RootDatum rd = group_from_json(f);
            acc = acc ? product(*acc, rd) : std::move(rd);
        }
        return *acc;
    }
    if (kind == "raw")
        return RootDatum(matrix_from_json(j.at("simple_roots")),
                         matrix_from_json(j.at("simple_coroots")));
    if (kind == "reductive_quotient_of") return group_from_json(j.at("group"));
    fail("group: unknown kind \"" + kind + "\"");
}

JobSpec job_from_json(const Json& j) {
    if (!j.is_object()) fail("job: expected an object");
    if (!j.contains("group")) fail("job: missing \"group\"");
    RootDatum rd = group_from_json(j.at("group"));
    JobSpec spec{std::move(rd), j.at("group").dump(), 0, 0, Vec(), true, "", ""};
    spec.g = j.contains("g") ? small_int(j.at("g"), "g", 0) : 0;
    spec.n = j.contains("n") ? small_int(j.at("n"), "n", 0) : 0;
    spec.degree = Vec(spec.rd.rank());
    if (j.contains("degree")) {
        const Json& d = j.at("degree");
        if (!d.is_object() || (d.contains("class") == d.contains("lift")))
            fail("degree: expected exactly one of {\"class\": [...]} or {\"lift\": [...]}");
        bool is_class = d.contains("class");
        spec.degree = vec_from_json(d.at(is_class ? "class" : "lift"), spec.rd.rank());
        spec.degree_is_class = is_class;
    }
    if (j.contains("command")) spec.command = j.at("command").get<std::string>();
    if (j.contains("class")) spec.taut_class_text = j.at("class").get<std::string>();
    return spec;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("class: expected '") + c + "' at position " +
                          std::to_string(pos));
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !isdigit(static_cast<unsigned char>(s[start]))))
            fail("class: expected an integer at position " + std::to_string(start));
        return Int(s.substr(start, pos - start));
    }
    // flat list of exactly count integers, ',' or ';' separated
    Vec flat_list(int count) {
        Vec out;
        for (int i = 0; i < count; ++i) {
            if (i > 0 && !eat(',') && !eat(';'))
                fail("class: expected ',' or ';' at position " + std::to_string(pos));
            out.push_back(integer());
        }
        return out;
    }
};

}  // namespace

TautClass parse_taut_class(const std::string& text, int r, int n) {
    Parser p{text};
    TautClass out;
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= text.size()) break;
        Int sign = 1;
        if (p.eat('+')) {
        } else if (p.eat('-')) {
            sign = -1;
        } else if (!first) {
            fail("class: expected '+' or '-' at position " + std::to_string(p.pos));
        }
        first = false;
        p.skip_ws();
        Int coeff = 1;
        if (p.pos < text.size() &&
            (isdigit(static_cast<unsigned char>(text[p.pos])))) {
            coeff = p.integer();
            p.expect('*');
        }
        coeff *= sign;
        p.skip_ws();
        if (p.pos >= text.size()) fail("class: dangling term");
        char atom = text[p.pos];
        ++p.pos;
        p.expect('(');
        auto split = [&](const Vec& flat) {
            Vec chi(flat.begin(), flat.begin() + r), zeta(flat.begin() + r, flat.end());
            return std::make_pair(chi, zeta);
        };
        if (atom == 'L') {
            auto [chi, zeta] = split(p.flat_list(r + n));
            p.expect(')');
            out += TautClass::det(chi, zeta).scaled(coeff);
        } else if (atom == 'P') {
            auto [chi, zeta] = split(p.flat_list(r + n));
            p.expect('|');
            auto [chi2, zeta2] = split(p.flat_list(r + n));
            p.expect(')');
            out += TautClass::pair(chi, zeta, chi2, zeta2).scaled(coeff);
        } else {
            fail(std::string("class: unknown atom '") + atom + "', expected L or P");
        }
    }
    if (out.terms.empty() && first) fail("class: empty expression");
    out.r = r;
    out.n = n;
    return out;
}

Vec reduce_mod_lattice(const Vec& v, const IntMatrix& lattice) {
    IntMatrix h = hnf(lattice).H.drop_zero_cols();
    Vec out = v;
    int dim = static_cast<int>(v.size());
    for (int j = 0; j < h.cols(); ++j) {
        int piv = 0;
        while (piv < dim && h(piv, j) == 0) ++piv;
        if (piv == dim) continue;
        // floor division keeps the representative entry in [0, pivot)
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), out[piv].get_mpz_t(), h(piv, j).get_mpz_t());
        for (int i = 0; i < dim; ++i) out[i] -= q * h(i, j);
    }
    return out;
}

Json sym2_to_json(int r, const Vec& q) {
    Json out = Json::object();
    for (auto [i, j] : sym2_pairs(r)) {
        const Int& c = q[sym2_index(r, i, j)];
        if (c == 0) continue;
        std::ostringstream key;
        key << (i + 1) << "," << (j + 1);
        out[key.str()] = c.get_str();
    }
    return out;
}

}  // namespace pic
