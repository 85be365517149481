#pragma once
/// @file graphalg.hpp
/// @brief The graph algebra L_{0,n}(sl2) through its embedding Phi_n into U_q^{(x)n}.
///
/// Elements of L_{0,n} are represented by their images; the generator
/// matrix M^{(a)} is (id (x) Phi_1) at slot a conjugated by R_{0,j} for
/// j = a+1..n using the closed 2x2 formula, so q^{H/2} never appears.

#include <stdexcept>
#include <vector>

#include "qgraph/repv.hpp"
#include "qgraph/report.hpp"

namespace qgraph {

template <class C>
struct GenQuad {
  Elem<C> a, b, c, d;
};

/// Images of a, b, c, d under Phi_1.
template <class C>
GenQuad<C> phi1_generators(const UAlg<C>& A);

/// R_{0,s} X R_{0,s}^{-1} for a 2x2 X whose entries have no leg at slot s.
template <class C>
AMat<C> conjugate_R(const AMat<C>& X, int slot);
/// Same, acting on tensor factor `factor` of a matrix over V_2^{(x)k}.
template <class C>
AMat<C> conjugate_R_factor(const AMat<C>& X, int factor, int k, int slot);

/// Image of M^{(a)} on V_2 (site a is 1-based). Cached per algebra.
template <class C>
const AMat<C>& gen_matrix(const UAlg<C>& A, int n, int a);
/// Image of M^{(a)} on V_2 (x) V_2, built from RR' on the tensor module.
template <class C>
AMat<C> fused_matrix(const UAlg<C>& A, int n, int a);
/// M^{(i)} ... M^{(j)}.
template <class C>
AMat<C> product_matrix(const UAlg<C>& A, int n, int i, int j);

template <class C>
GenQuad<C> site_generators(const UAlg<C>& A, int n, int a) {
  const AMat<C>& M = gen_matrix(A, n, a);
  return {M(0, 0), M(0, 1), M(1, 0), M(1, 1)};
}

/// omega^{(i)} = qTr(M^{(i)}).
template <class C>
Elem<C> omega(const UAlg<C>& A, int n, int i);
/// eta = qTr(M^{(1)} ... M^{(n)}).
template <class C>
Elem<C> eta(const UAlg<C>& A, int n);
/// xi^{(i)} = (M^{(i)} ... M^{(n)})_{22}.
template <class C>
Elem<C> xi(const UAlg<C>& A, int n, int i);

/// Image of delta^{(i)} = xi^{(i)} xi^{(i+1)}^{-1} and of its inverse, read off from
/// the images of xi (the localization is represented by images only).
template <class C>
Elem<C> delta(const UAlg<C>& A, int n, int i, int power = 1);

class NotAnIntertwiner : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The intertwiner of V_2 (x) V_2 factoring through the trivial module.
template <class C>
Matrix<C> tl_element(const UAlg<C>& A);

/// qTr_{V_[lambda]}(a * M^{[lambda]}) for colors lambda_k in {1, 2}; a == nullptr means identity.
template <class C>
Elem<C> invariant_element(const UAlg<C>& A, int n, const std::vector<int>& lambda, const Matrix<C>* a = nullptr);
/// The matrix M^{[lambda]} itself.
template <class C>
AMat<C> lambda_matrix(const UAlg<C>& A, int n, const std::vector<int>& lambda);

/// Rank of the Phi_1 images of the PBW-type monomials a^x b^y c^z (x >= 1), d^w b^y c^z
/// of degree <= max_degree, computed from their Verma actions with symbolic weight.
struct RankResult {
  int monomials = 0;
  int rank = 0;
};
RankResult phi1_monomial_rank(int max_degree, int truncation);

// ---------------------------------------------------------------- suites

/// Relations of the presentation under Phi_n.
std::vector<Task> presentation_suite(int n);
/// Embedding properties: product formula, xi, centrality, injectivity rank,
/// surjectivity after localization, invariant elements.
std::vector<Task> alekseev_suite(int n, int max_degree);

}  // namespace qgraph
