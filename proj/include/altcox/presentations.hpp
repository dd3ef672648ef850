#pragma once

// Builders for every presentation family handled by the library, and the
// explicit homomorphisms between them.

#include <string>
#include <utility>
#include <vector>

#include "altcox/coxeter.hpp"
#include "altcox/words.hpp"

namespace altcox {

enum class Variant { Coxeter, Carmichael, Bourbaki, Edge };
enum class SpinorVariant { Tilde, TildePrime };
enum class SpinorStyle { Bourbaki, Edge };
enum class UniversalCover { A5, A6 };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

/// Minimum rank for which `chain_presentation(family, variant, rank)` exists.
int minimum_rank(Family family, Variant variant);

/// Generator i of the presentation corresponds to edges[i] (tail < head).
/// The reversed orientation is the formal inverse letter.
struct EdgeGeneratorMap {
  std::vector<OrientedEdge> edges;

  GeneratorId generator(int i, int j) const;
  /// r_pq for p < q, r_qp^-1 otherwise.
  Letter letter(int p, int q) const;
  /// Product of oriented letters along a vertex path.
  Word path_word(const std::vector<int>& path) const;
};

struct EdgeNaming {
  std::string prefix = "r";
  /// Added to vertex indices in generator names (1 gives r1_2 for edge (0,1)).
  int vertex_base = 0;
};

/// Homomorphism given by images of the source generators in the target alphabet.
struct GroupHom {
  Presentation source;
  Presentation target;
  std::vector<Word> images;
  /// Set by verify_hom() once every source relator maps to the identity.
  bool verified = false;

  Word apply(const Word& w) const;
};

/// Generator i maps to generator i of the target (ranks must agree).
GroupHom identity_hom(const Presentation& source, const Presentation& target);

/// s_0..s_{n-1} with (s_i s_j)^{m_ij} for i <= j; infinite labels omitted.
Presentation coxeter_presentation(const CoxeterMatrix& m);

/// R_i = s_base s_i for i != base, with R_i^{m_base,i} and
/// (R_i^-1 R_j)^{m_ij} for i < j.
Presentation bourbaki_presentation(const CoxeterMatrix& m, int base = 0);

/// One generator per oriented edge of the extension. Relator order: powers of
/// real edges then virtual edges, cycle relators, squared length-2 paths,
/// squared length-3 paths, commutators of not-connected pairs.
std::pair<Presentation, EdgeGeneratorMap> edge_presentation(const ConnectedExtension& e,
                                                            const EdgeNaming& naming = {});

/// The chains A_n+, B_n+, D_n+ (and the Coxeter chains for Variant::Coxeter)
/// with generator names a_i, R_i, r_i (s_i) numbered as in the chain.
Presentation chain_presentation(Family family, Variant variant, int rank);

/// Carmichael-style generators a_1..a_{n-1} as words in s_0..s_{n-1}.
/// The distinguished edge must be (0,1) for A and B, (0,2) for D.
/// A, B: a_1 = s_0 s_1, a_i = s_i a_{i-1} s_i.
/// D: a_1 = s_0 s_2, a_2 = s_1 a_1 s_1, a_3 = s_3 a_1 s_3, a_i = s_i a_{i-1} s_i.
std::vector<Word> carmichael_generators(Family family, int rank, const OrientedEdge& edge);

/// Edge presentation of A_n+ with the length-3 family replaced by
/// rho_i rho_{i+1}^2 rho_{i+2} = rho_{i+2} rho_i.
Presentation vv_presentation(int n);

/// Central extension by alpha (order 2): (s_i s_j)^{m_ij} = 1 or alpha by
/// parity of m_ij (Tilde), or = alpha' throughout (TildePrime).
Presentation spinor_presentation(const CoxeterMatrix& m, SpinorVariant variant);

/// Preimage of the alternating subgroup in the spinor extension, in
/// Bourbaki or edge style, with central z (Tilde) or z' (TildePrime).
Presentation spinor_plus_presentation(const CoxeterMatrix& m, SpinorStyle style,
                                      SpinorVariant variant);

/// r~_ij -> z' r~'_ij, z -> z' between the two edge-style spinor covers.
GroupHom spinor_iso(const CoxeterMatrix& m);
/// r~'_ij -> z r~_ij, z' -> z.
GroupHom spinor_iso_inverse(const CoxeterMatrix& m);

/// Central extensions of A5+ and A6+ by C2 x C3 (generators tr_i, z, zeta).
Presentation universal_extension(UniversalCover which);

/// phi: edge -> Bourbaki (r_0j -> R_j, r_ij -> R_i^-1 R_j) and
/// psi: Bourbaki -> edge (R_i -> product along the BFS shortest path 0 -> i).
std::pair<GroupHom, GroupHom> bourbaki_edge_homs(const CoxeterMatrix& m);

/// BFS shortest path in the extension, ties broken towards smaller vertices.
std::vector<int> shortest_path(const ConnectedExtension& e, int from, int to);

}  // namespace altcox
