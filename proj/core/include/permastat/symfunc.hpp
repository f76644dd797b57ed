#pragma once

#include <map>
#include <utility>
#include <vector>

#include "permastat/partition.hpp"
#include "permastat/rational.hpp"

namespace permastat {

enum class Basis { Monomial, Schur, JackP, JackJ, PowerSum };

/// A finite linear combination of one family of symmetric functions, indexed
/// by partitions of a common degree.  Zero coefficients are never stored.
/// `xi` is the Jack parameter and is meaningful only for the Jack bases.
struct SymExpansion {
  Basis basis = Basis::Monomial;
  ExactRational xi = 1;
  std::map<Partition, ExactRational> terms;

  void add(const Partition& p, const ExactRational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
      terms.emplace(p, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  ExactRational coeff(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? ExactRational(0) : it->second;
  }
};

/// Result of straightening a determinant-indexing word: sign 0 means the
/// word annihilates (two indices collide), otherwise +/-1 with the sorted
/// shape.
struct Straightened {
  int sign = 0;
  Partition shape;
};

/// Repeatedly applies the adjacent exchange rule
///   (..., a, b, ...) -> -( ..., b-1, a+1, ...)   when a < b,
/// annihilating when b = a + 1, until the word is weakly decreasing.
Straightened straighten(const Composition& word);

/// Expansion of the monomial symmetric function m_lambda in Schur functions
/// (inverse Kostka coefficients), obtained by straightening one determinant
/// word per distinct rearrangement of lambda in |lambda| slots.  Cached;
/// no degree cap applies (no dense table is built).
SymExpansion monomial_to_schur(const Partition& lambda);

/// <p_a, p_b> in the xi-deformed power-sum inner product:
/// delta_{ab} * xi^{length(a)} * z_a.
ExactRational power_sum_scalar(const Partition& a, const Partition& b, const ExactRational& xi);

/// Dense change-of-basis table for one degree.  Row r holds the expansion of
/// the `from`-basis element indexed by index[r] in the `to` basis.
struct TransitionTable {
  Basis from = Basis::Monomial;
  Basis to = Basis::Monomial;
  int degree = 0;
  std::vector<Partition> index; // descending lexicographic
  std::vector<std::vector<ExactRational>> matrix;
};

/// Supported pairs: PowerSum<->Monomial and Monomial<->Schur.  Throws
/// DegreeTooLarge above config::max_degree() and std::invalid_argument for
/// an unsupported pair.  Tables are cached per degree, thread-safely.
TransitionTable basis_transition(Basis from, Basis to, int degree);

/// Which linear extension of dominance order Gram-Schmidt walks.  The result
/// is provably independent of the choice; exposing it lets tests confirm so.
enum class GSOrder { Lex, ConjugateLex };

/// Monomial expansion of the Jack polynomial P_lambda^(xi), built by
/// Gram-Schmidt orthogonalization of the monomial basis in the deformed
/// power-sum inner product, walking a linear extension of dominance order.
SymExpansion jack_P_monomials(const Partition& lambda, const ExactRational& xi,
                              GSOrder order = GSOrder::Lex);

/// <P_lambda, P_lambda> in the xi-deformed inner product.
ExactRational jack_norm(const Partition& lambda, const ExactRational& xi);

/// m_lambda expanded in the P (monic) Jack basis.
SymExpansion monomial_to_jackP(const Partition& lambda, const ExactRational& xi,
                               GSOrder order = GSOrder::Lex);

/// m_lambda expanded in the integral-form J Jack basis,
/// J_mu = arm_leg_product(mu, xi) * P_mu.
SymExpansion monomial_to_jackJ(const Partition& lambda, const ExactRational& xi,
                               GSOrder order = GSOrder::Lex);

/// Value of an expansion at x_1 = ... = x_N = 1 (remaining variables 0).
/// Monomial terms count distinct rearrangements, Schur terms use the
/// hook-content product, power sums give N^length, and Jack terms are
/// expanded to monomials first.
ExactRational evaluate_at_ones(const SymExpansion& e, long n);

/// Hook-content evaluation s_lambda(1^N); zero when length exceeds N.
ExactRational schur_at_ones(const Partition& lambda, long n);

/// Principal specialization of the integral-form Jack polynomial by the
/// classical cell product prod_{(i,j)} (N + xi*(j-1) - (i-1)).  Serves as an
/// independent cross-check of the expansion route.
ExactRational jack_J_at_ones_closed(const Partition& lambda, const ExactRational& xi, long n);

} // namespace permastat
