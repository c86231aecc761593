#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pic/json_io.hpp"

using namespace pic;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;

std::string lincomb(const Vec& coeffs, const std::vector<std::string>& labels) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const Int& c = coeffs[i];
        if (c == 0) continue;
        if (first) {
            if (c == -1)
                os << "-";
            else if (c != 1)
                os << c.get_str() << "*";
        } else {
            os << (c > 0 ? " + " : " - ");
            Int a = abs(c);
            if (a != 1) os << a.get_str() << "*";
        }
        os << labels[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string sym2_text(int r, const Vec& q) {
    std::vector<std::string> labels;
    for (auto [i, j] : sym2_pairs(r)) {
        std::ostringstream os;
        if (i == j)
            os << "x" << i + 1 << "^2";
        else
            os << "x" << i + 1 << "*x" << j + 1;
        labels.push_back(os.str());
    }
    return lincomb(q, labels);
}

std::string char_text(const Vec& chi) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < chi.size(); ++i) labels.push_back("e" + std::to_string(i + 1));
    return lincomb(chi, labels);
}

const char* series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::E: return "E";
        case Series::F: return "F";
        case Series::G: return "G";
    }
    return "?";
}

Json vec_labels_json(const Vec& coeffs, const std::vector<std::string>& labels) {
    Json out = Json::object();
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) out[labels[i]] = coeffs[i].get_str();
    return out;
}

struct Report {
    Json json;
    std::ostringstream text;
    int exit_code = 0;
};

void emit_header(Report& rep, const JobSpec& job) {
    rep.json["schema_version"] = kSchemaVersion;
    rep.json["group"] = Json::parse(job.group_description);
    rep.json["g"] = job.g;
    rep.json["n"] = job.n;
    rep.json["command"] = job.command;
}

Vec ab_degree_of(const IntMatrix& ab_char_basis, const Vec& d) {
    Vec out(ab_char_basis.cols());
    for (int k = 0; k < ab_char_basis.cols(); ++k)
        for (int i = 0; i < ab_char_basis.rows(); ++i)
            out[k] += ab_char_basis(i, k) * d[i];
    return out;
}

void cmd_pi1(Report& rep, const JobSpec& job) {
    Pi1Result res = fundamental_group(job.rd);
    rep.json["pi1"] = res.pi1.to_string();
    rep.json["torsion_part"] = res.torsion_part.to_string();
    rep.json["free_quotient"] = res.free_quotient.to_string();
    Json inv = Json::array();
    for (const Int& d : res.pi1.invariant_factors()) inv.push_back(d.get_str());
    rep.json["invariant_factors"] = inv;
    rep.text << "pi1(G) = " << res.pi1.to_string() << "\n"
             << "torsion part = " << res.torsion_part.to_string() << "\n"
             << "free quotient = " << res.free_quotient.to_string() << "\n";
}

void cmd_sym2_invariants(Report& rep, const JobSpec& job) {
    Sym2Invariants inv = sym2_invariants(job.rd);
    int r = job.rd.rank();
    Json forms = Json::array();
    rep.text << "Sym^2(char lattice)^W: rank " << inv.on_char.cols() << "\n";
    for (int j = 0; j < inv.on_char.cols(); ++j) {
        Vec q = inv.on_char.col(j);
        forms.push_back(sym2_to_json(r, q));
        rep.text << "  q" << j + 1 << " = " << sym2_text(r, q) << "\n";
    }
    rep.json["invariant_forms"] = forms;
    rep.json["rank"] = inv.on_char.cols();
}

void cmd_basic_form(Report& rep, const JobSpec& job) {
    int l = job.rd.semisimple_rank();
    Json forms = Json::array();
    if (job.rd.factors().empty()) rep.text << "torus: no simple factors, no basic forms\n";
    for (const SimpleFactor& f : job.rd.factors()) {
        Vec q = basic_inner_product(job.rd, f);
        Json entry;
        entry["type"] = std::string(series_name(f.series)) + std::to_string(f.rank);
        entry["coefficients"] = sym2_to_json(l, q);
        forms.push_back(entry);
        rep.text << series_name(f.series) << f.rank << ": " << sym2_text(l, q)
                 << "  (fundamental-weight basis of the semisimple part)\n";
    }
    rep.json["basic_forms"] = forms;
}

void verify_picard(Report& rep, const JobSpec& job, const PicardPresentation& pres,
                   long weyl_cap) {
    Json ver;
    std::vector<std::string> problems;

    if (pres.g >= 1) {
        PushoutReport push = verify_pushout(job.rd, pres);
        ver["pushout_ok"] = push.ok;
        if (!push.ok) {
            Json fails = Json::array();
            for (const std::string& f : push.failures) {
                fails.push_back(f);
                problems.push_back("push-out: " + f);
            }
            ver["pushout_failures"] = fails;
        }

        int m = pres.ab_char_basis.cols();
        int s = static_cast<int>(job.rd.factors().size());
        PicardPresentation ab = rpic_torus(build_torus(m), pres.g, pres.n,
                                           ab_degree_of(pres.ab_char_basis, pres.d));
        bool rank_ok = pres.free_rank == ab.free_rank + s;
        ver["rank_law_ok"] = rank_ok;
        if (!rank_ok) problems.push_back("rank law: free rank does not match ab-torus rank + s");

        bool sat_ok = pres.generators.cols() == 0 || saturation(pres.generators).index == 1;
        ver["saturation_index_1"] = sat_ok;
        if (!sat_ok) problems.push_back("invariant sublattice not saturated");

        // full Weyl cross-check when enumeration fits under the cap
        try {
            std::vector<IntMatrix> w = weyl_enumerate(job.rd, weyl_cap);
            bool inv_ok = true;
            for (const IntMatrix& wm : w) {
                IntMatrix act = weyl_algebraic_action(wm, pres.torus_basis);
                if (!lattice_contains(pres.generators, act * pres.generators)) inv_ok = false;
            }
            ver["weyl_cross_check"] = inv_ok ? "ok" : "failed";
            if (!inv_ok) problems.push_back("full Weyl group does not preserve the invariant lattice");
        } catch (const std::exception&) {
            ver["weyl_cross_check"] = "skipped (cap exceeded)";
        }
    } else {
        ver["note"] = "push-out certification applies to genus >= 1";
    }

    rep.json["verification"] = ver;
    if (problems.empty()) {
        rep.text << "verification: ok\n";
    } else {
        for (const std::string& p : problems) rep.text << "verification FAILED: " << p << "\n";
        rep.exit_code = kExitVerification;
    }
}

void cmd_picard(Report& rep, const JobSpec& job, bool verify, long weyl_cap) {
    PicardPresentation pres = rpic(job.rd, job.g, job.n, job.degree, job.degree_is_class);
    IntMatrix coroot_cols = job.rd.simple_coroots().transpose();
    Vec delta = reduce_mod_lattice(pres.d.empty() ? job.degree : pres.d, coroot_cols);
    rep.json["degree_lift"] = vec_to_json(pres.d.empty() ? job.degree : pres.d);
    rep.json["degree_class"] = vec_to_json(delta);
    rep.text << "degree class (canonical representative mod coroots): "
             << vec_to_json(delta).dump() << "\n";

    if (job.g >= 1) {
        std::vector<std::string> labels = pres.torus_basis.labels();
        rep.json["free_rank"] = pres.free_rank;
        rep.json["torsion"] = Json::array();
        rep.json["torus_basis_labels"] = labels;
        rep.text << "RPic(Bun_G): free of rank " << pres.free_rank << ", no torsion\n";

        Json gens = Json::array();
        std::vector<std::string> gen_labels;
        rep.text << "generators (in the torus RPic basis):\n";
        for (int j = 0; j < pres.generators.cols(); ++j) {
            Vec col = pres.generators.col(j);
            std::string gname = "g" + std::to_string(j + 1);
            gen_labels.push_back(gname);
            gens.push_back(vec_labels_json(col, labels));
            rep.text << "  " << gname << " = " << lincomb(col, labels) << "\n";
        }
        rep.json["generators"] = gens;

        int r = job.rd.rank();
        Json tau = Json::array();
        rep.text << "transgression tau_G on the Sym^2-invariant basis:\n";
        for (int j = 0; j < pres.transgression.cols(); ++j) {
            Json entry;
            entry["form"] = sym2_to_json(r, pres.sym2_inv_basis.col(j));
            entry["image"] = vec_labels_json(pres.transgression.col(j), gen_labels);
            tau.push_back(entry);
            rep.text << "  tau(" << sym2_text(r, pres.sym2_inv_basis.col(j)) << ") = "
                     << lincomb(pres.transgression.col(j), gen_labels) << "\n";
        }
        rep.json["transgression"] = tau;

        rep.json["ab_char_basis"] = matrix_to_json(pres.ab_char_basis);
        Json ab = Json::array();
        std::vector<std::string> ab_labels = pres.ab_basis.labels();
        rep.text << "pullback of RPic(Bun_{G^ab}) generators:\n";
        for (int j = 0; j < pres.ab_pullback.cols(); ++j) {
            ab.push_back(vec_labels_json(pres.ab_pullback.col(j), gen_labels));
            rep.text << "  ab*(" << ab_labels[j] << ") = "
                     << lincomb(pres.ab_pullback.col(j), gen_labels) << "\n";
        }
        rep.json["ab_pullback"] = ab;
    } else {
        rep.json["free_rank"] = pres.free_rank;
        rep.json["star_ok"] = pres.star_ok;
        rep.json["weight_image"] = matrix_to_json(pres.weight_image);
        rep.text << "Im(w_G^d) in the character lattice: rank " << pres.free_rank << "\n";
        for (int j = 0; j < pres.weight_image.cols(); ++j)
            rep.text << "  " << char_text(pres.weight_image.col(j)) << "\n";
        if (!pres.star_ok)
            rep.text << "warning: condition (*) fails for this degree; "
                        "injectivity of w_G^d is not guaranteed\n";
    }

    if (verify) verify_picard(rep, job, pres, weyl_cap);
}

void cmd_weight_image(Report& rep, const JobSpec& job) {
    if (job.g != 0) throw std::invalid_argument("weight-image: requires g = 0");
    PicardPresentation pres =
        rpic_reductive_g0(job.rd, job.n, job.degree, job.degree_is_class);
    rep.json["degree_lift"] = vec_to_json(pres.d);
    rep.json["star_ok"] = pres.star_ok;
    rep.json["free_rank"] = pres.free_rank;
    rep.json["weight_image"] = matrix_to_json(pres.weight_image);
    rep.text << "Omega*_d basis (columns in the character lattice):\n";
    for (int j = 0; j < pres.weight_image.cols(); ++j)
        rep.text << "  " << char_text(pres.weight_image.col(j)) << "\n";
    if (!pres.star_ok)
        rep.text << "warning: condition (*) fails for this degree; "
                    "injectivity of w_G^d is not guaranteed\n";
}

void cmd_taut_normalize(Report& rep, const JobSpec& job) {
    if (job.taut_class_text.empty())
        throw std::invalid_argument("taut-normalize: missing \"class\" field");
    int r = job.rd.rank();
    TautClass c = parse_taut_class(job.taut_class_text, r, job.n);
    Vec d = job.degree;
    RPicBasis basis = make_basis(r, job.g, job.n, d);
    Vec coords = job.g >= 1 ? normalize(c, basis) : normalize_g0(c, basis);
    std::vector<std::string> labels = basis.labels();
    rep.json["coordinates"] = vec_labels_json(coords, labels);
    rep.json["basis_labels"] = labels;
    rep.text << "normal form: " << lincomb(coords, labels) << "\n";
    if (job.g >= 1) {
        Vec w = weight(c, d, job.g);
        rep.json["weight"] = vec_to_json(w);
        rep.json["gamma"] = matrix_to_json(gamma_form(c));
        rep.text << "weight: " << char_text(w) << "\n";
    }
}

void cmd_fiber_data(Report& rep, const JobSpec& job) {
    FiberRestrictionData data =
        fiber_restriction_data(job.rd.rank(), job.g, job.n, job.degree);
    RPicBasis basis = make_basis(job.rd.rank(), job.g, job.n, job.degree);
    std::vector<std::string> labels = basis.labels();
    rep.json["j_image"] = matrix_to_json(data.j_image);
    rep.json["h_basis"] = matrix_to_json(data.h_basis);
    rep.text << "ker(weight + gamma) = j(Lambda* (x) H_{g,n}), rank "
             << data.j_image.cols() << "\n";
    for (int j = 0; j < data.j_image.cols(); ++j)
        rep.text << "  " << lincomb(data.j_image.col(j), labels) << "\n";
    if (job.n == 0) {
        Json inv = Json::array();
        rep.text << "image invariant factors:";
        for (const Int& x : data.image_invariants) {
            inv.push_back(x.get_str());
            rep.text << " " << x.get_str();
        }
        rep.text << "\n";
        rep.json["image_invariants"] = inv;
    }
}

int run_job(JobSpec job, const std::string& format, bool verify, long weyl_cap) {
    static const std::vector<std::string> commands = {
        "pi1",          "sym2-invariants", "basic-form", "picard",
        "weight-image", "taut-normalize",  "fiber-data"};
    if (std::find(commands.begin(), commands.end(), job.command) == commands.end())
        throw std::invalid_argument("unknown command \"" + job.command + "\"");

    Report rep;
    emit_header(rep, job);
    if (job.command == "pi1")
        cmd_pi1(rep, job);
    else if (job.command == "sym2-invariants")
        cmd_sym2_invariants(rep, job);
    else if (job.command == "basic-form")
        cmd_basic_form(rep, job);
    else if (job.command == "picard")
        cmd_picard(rep, job, verify, weyl_cap);
    else if (job.command == "weight-image")
        cmd_weight_image(rep, job);
    else if (job.command == "taut-normalize")
        cmd_taut_normalize(rep, job);
    else if (job.command == "fiber-data")
        cmd_fiber_data(rep, job);

    if (format == "json")
        std::cout << rep.json.dump(2) << "\n";
    else
        std::cout << rep.text.str();
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative Picard groups of universal moduli stacks of G-bundles"};
    std::string spec_path, command_override, format = "text";
    bool verify = false;
    long weyl_cap = 1'000'000;
    app.add_option("--spec", spec_path, "job spec JSON file")->required();
    app.add_option("--command", command_override, "override the command in the spec");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--verify", verify, "force push-out and rank-law checks");
    app.add_option("--weyl-cap", weyl_cap, "oracle Weyl enumeration cap");
    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream in(spec_path);
        if (!in) throw std::invalid_argument("cannot open spec file: " + spec_path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
        }
        JobSpec job = job_from_json(j);
        if (!command_override.empty()) job.command = command_override;
        if (job.command.empty())
            throw std::invalid_argument("no command given (spec \"command\" or --command)");
        return run_job(std::move(job), format, verify, weyl_cap);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kExitVerification;
    }
}
