#pragma once

#include <cstdint>
#include <string>

#include "statesurf/diagram.hpp"
#include "statesurf/laurent.hpp"

namespace statesurf {

struct BracketOptions {
  int max_crossings = 24;  // both expansions cost 2^c
  unsigned threads = 1;
};

// Kauffman bracket in A as the sum over all 2^c Kauffman states of
// A^(#A - #B) * d^(circles - 1), d = -A^2 - A^-2.
LaurentPoly bracket_statesum(const LinkDiagram& d, const BracketOptions& options = {});

// Kauffman bracket as the sum over spanning subgraphs G of the all-A ribbon
// graph of A^(e(G_A) - 2e(G)) * d^(f(G) - 1), with f(G) from ribbon boundary
// tracing.
LaurentPoly bracket_subgraph(const LinkDiagram& d, const BracketOptions& options = {});

enum class BracketMethod { StateSum, Subgraph };

// Jones polynomial as a Laurent polynomial in q = t^(1/4): the bracket times
// (-A)^(-3w) with A = t^(-1/4). Every exponent is congruent to 2(k-1) mod 4
// for a k-component link.
LaurentPoly jones(const LinkDiagram& d, BracketMethod method = BracketMethod::StateSum,
                  const BracketOptions& options = {});

// Bracket -> Jones normalization for the given diagram's writhe and
// component count.
LaurentPoly normalize_bracket(const LinkDiagram& d, const LaurentPoly& bracket);

// Jones polynomial (in q) written in t, e.g. "t^-2 - t^-1 + 1 - t + t^2".
std::string format_jones(const LaurentPoly& jones_in_q);

// J(t) -> J(1/t), the Jones polynomial of the mirror image.
LaurentPoly mirror_jones(const LaurentPoly& jones_in_q);

struct JonesStats {
  long beta = 0;        // coefficient one t-step above the minimal degree
  long beta_prime = 0;  // coefficient one t-step below the maximal degree
  long t_sum = 0;       // |beta| + |beta_prime|
  int span = 0;         // max t-degree - min t-degree (always integral)
};

JonesStats jones_stats(const LaurentPoly& jones_in_q);

struct CoeffIdentityReport {
  long abs_beta = 0;
  long abs_beta_prime = 0;
  int one_minus_chi_ga = 0;  // 1 - chi(G'_A)
  int one_minus_chi_gb = 0;  // 1 - chi(G'_B)
  // |beta| = 1 - chi(G'_B) and |beta'| = 1 - chi(G'_A).
  bool beta_matches_gb = false;
  // |beta| = 1 - chi(G'_A) and |beta'| = 1 - chi(G'_B).
  bool beta_matches_ga = false;

  bool holds() const { return beta_matches_gb || beta_matches_ga; }
};

// Compares Jones coefficients with simplified state graph Euler
// characteristics; requires a reduced alternating diagram.
CoeffIdentityReport coeff_identity_check(const LinkDiagram& d, const BracketOptions& options = {});
// Same, reusing already computed Jones statistics of `d`.
CoeffIdentityReport coeff_identity_check(const LinkDiagram& d, const JonesStats& stats);

}  // namespace statesurf
