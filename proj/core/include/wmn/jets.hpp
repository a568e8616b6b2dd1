#pragma once

#include "wmn/gl.hpp"
#include "wmn/smash.hpp"

namespace wmn {

/// Jet generators. `l` is the stored (shifted) index: for d_i it is k - eps_i,
/// for d/dxi_alpha and d_0 it is k itself. Vectors carry m+1 slots, slot 0 unused.
GenKey jet_d(int i, grassmann::Bits f, std::vector<int> l);
GenKey jet_p(int alpha, grassmann::Bits f, std::vector<int> l);
GenKey jet_d0(grassmann::Bits f, std::vector<int> l);

/// k with the eps_i shift undone (k = l + eps_i for d_i).
std::vector<int> jet_degree(const GenKey& g);
/// |k|, the total degree of the jet.
int jet_total_degree(const GenKey& g);
bool jet_valid(const GenKey& g);

/// Unit index vector eps_i (m+1 slots); i = 0 gives the zero vector.
std::vector<int> eps(int m, int i);

/// Jet bracket: the relations of the jet superalgebra on prefix-free generators
/// with the Λ-prefix rule; only d/dxi_alpha(h, 0) acts on Λ (by h d/dxi_alpha).
JetElement jet_bracket(const JetElement& a, const JetElement& b);

/// Rewrites into Λ-coordinates over the free generators of L/J:
/// d_i(1,-e_i), d_i(x_b,-e_i), d_i(1,e_j-e_i), p_a(1,0), p_a(x_b,0), p_a(1,e_j), d0(1,0).
JetElement jet_nf(const JetElement& x);
bool is_normal_generator(const GenKey& g);

/// Image of a gl(m,n) element under the embedding into L/J.
JetElement gl_embed(const GlElement& x);
JetElement gl_embed_unit(int m, int n, int a, int b);

std::string to_string(const JetElement& x);

}  // namespace wmn
