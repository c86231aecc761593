#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "pic/picard.hpp"

namespace pic {

using Json = nlohmann::json;

/// Matrices and vectors travel as JSON arrays(-of-arrays) of decimal strings;
/// plain JSON integers are accepted on input.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, int expected_len = -1);

/// Group spec: { "kind": ... } with kinds classical | torus | gl | product |
/// raw plus the presets sl | pgl | sp | so | reductive_quotient_of.
/// Throws std::invalid_argument with a field diagnostic on bad input.
RootDatum group_from_json(const Json& j);

struct JobSpec {
    RootDatum rd;
    std::string group_description;
    int g = 0, n = 0;
    Vec degree;                  // length = rank, zero when absent
    bool degree_is_class = true;
    std::string command;
    std::string taut_class_text;  // taut-normalize input, may be empty
};

/// Full job: { "group": ..., "g": ..., "n": ..., "degree": {"class"|"lift":
/// [...]}, "command": ..., "class": "..." }.
JobSpec job_from_json(const Json& j);

/// Textual tautological classes: integer combinations of the atoms
/// L(chi; zeta) and P(chi, zeta | chi', zeta'), each slot a flat list of
/// r + n integers (separators ',' or ';').
TautClass parse_taut_class(const std::string& text, int r, int n);

/// Canonical coset representative of v modulo the column span of lattice
/// (entries of pivot rows reduced into [0, pivot)).
Vec reduce_mod_lattice(const Vec& v, const IntMatrix& lattice);

/// Sym^2 coefficient vector as the map {"i,j": "c"} with 1-based i <= j,
/// zero entries omitted.
Json sym2_to_json(int r, const Vec& q);

}  // namespace pic
