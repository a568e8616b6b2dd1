#pragma once

#include <nlohmann/json.hpp>

#include "wmn/gl.hpp"
#include "wmn/jets.hpp"
#include "wmn/operator_rep.hpp"
#include "wmn/superpoly.hpp"
#include "wmn/tensor_module.hpp"
#include "wmn/vector_field.hpp"

namespace wmn {

using nlohmann::json;

/// Monomials are written as {"t": [...], "xi": [0/1 ...]}; "t" lists t_1..t_m,
/// preceded by t_0 when the algebra has it. Coefficients are strings "a/b".
json to_json(const SuperPoly& f, const Algebra& alg);
SuperPoly poly_from_json(const json& j, const Algebra& alg);

/// Terms carry an extra "gen": "d1", "d0", "p2".
json to_json(const VectorField& x);
VectorField field_from_json(const json& j, const Algebra& alg);

/// Terms carry an extra "v": V-basis index.
json to_json(const TensorVector& w, const Algebra& alg);
TensorVector tensor_from_json(const json& j, const TensorModuleSpec& spec);

/// List of {"gen", "f", "k", "prefix", "c"} with k the unshifted degree.
json to_json(const JetElement& x);
JetElement jets_from_json(const json& j, int m, int n);

/// {"M", "N", "dim", "parity", "rho": [[[c..]..] per e_ab, row-major a*(M+N)+b]}.
json to_json(const GlRep& r);
GlRep rep_from_json(const json& j);

json to_json(const RelationReport& r);

std::string generator_name(const Generator& g);
Generator parse_generator(const std::string& s);

}  // namespace wmn
