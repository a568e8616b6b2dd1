#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wmn/jets.hpp"
#include "wmn/operator_rep.hpp"
#include "wmn/tensor_module.hpp"
#include "wmn/vector_field.hpp"

namespace wmn {

/// Coefficient-wise comparison of the two bracket tables: for generator pairs
/// X(f, r), Y(g, s) the truncated expansion of smash_bracket is fitted as a
/// polynomial in (r, s) and its coefficients of total degree <= `truncation`
/// are compared with jet_bracket of the corresponding jets. With `prefixes`,
/// every Λ-prefix pair is included as well.
RelationReport jets_vs_smash(int m, int n, bool has_d0, int truncation = 3, bool prefixes = false);

/// Every jet X with |k| <= degree acts like its normal form.
RelationReport j_annihilation_check(const JetRep& rep, int degree = 2);

/// jet_nf [e(x), e(y)] == e([x, y]) for all pairs of matrix units.
RelationReport gl_embed_check(int m, int n);

/// The subalgebras spanned by {d_i(1,-e_i), d_0(1,0)}, {p_a(1,0)} and the image
/// of gl(m,n) supercommute pairwise.
RelationReport subalgebra_check(int m, int n, bool has_d0);

/// Elements of R_m ⊗ U: (t-exponents with m+1 slots, U-basis index) -> coefficient.
using InducedVector = std::map<std::pair<std::vector<int>, int>, Scalar>;

/// (t^s f d_j) t^r u = r_j t^{r+s} f u + t^{r+s} D_j(f, s) u, and likewise for
/// d/dxi_b and d_0 without the first term; D(f, s) is expanded from the jets.
InducedVector induce_from_fiber(const JetRep& rep, const VectorField& x, const InducedVector& w);

/// Λ ⊗ V coordinates: t^r xi^p ⊗ v_j <-> (r, p * dim V + j).
InducedVector to_induced(const TensorVector& w, int dimV);
TensorVector from_induced(int m, int n, int dimV, const InducedVector& w);

}  // namespace wmn
