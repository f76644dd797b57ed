#include "permastat/moments.hpp"

#include <stdexcept>
#include <thread>

#include "permastat/errors.hpp"
#include "permastat/gamma.hpp"
#include "permastat/hyperdet.hpp"
#include "permastat/integrals.hpp"
#include "permastat/symfunc.hpp"

namespace permastat {

namespace {

thread_local long g_dropped_terms = 0;

ExactRational moment_schur(const Partition& lambda, const ExactRational& alpha, long n) {
  const SymExpansion schur = monomial_to_schur(lambda);
  ExactRational sum = 0;
  for (const auto& [mu, c] : schur.terms) {
    if (mu.length() > n) {
      ++g_dropped_terms;
      continue;
    }
    sum += c * schur_average(mu, alpha, n);
  }
  return ExactRational(lambda_factorial_padded(lambda, n)) / ExactRational(factorial(n)) * sum;
}

ExactRational moment_jack(const Partition& lambda, const ExactRational& alpha, int beta, long n) {
  const ExactRational xi(Int(2), Int(beta));
  const SymExpansion jack = monomial_to_jackJ(lambda, xi);
  ExactRational sum = 0;
  for (const auto& [mu, c] : jack.terms) {
    if (mu.length() > n) {
      ++g_dropped_terms;
      continue;
    }
    sum += c * kadell_moment_ratio(mu, alpha, beta, n);
  }
  return ExactRational(lambda_factorial_padded(lambda, n)) / ExactRational(factorial(n)) * sum;
}

} // namespace

Route resolve_route(const MomentQuery& q) {
  if (q.route != Route::Auto) return q.route;
  return q.beta == 2 ? Route::SchurKadell : Route::JackKadell;
}

ExactRational moment(const MomentQuery& q) {
  if (q.beta != 1 && q.beta != 2 && q.beta != 4)
    throw std::invalid_argument("beta must be 1, 2 or 4");
  if (q.alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive");
  if (q.n < 1) throw std::invalid_argument("N must be positive");
  if (q.lambda.length() > q.n)
    throw LengthExceedsAlphabet("partition length " + std::to_string(q.lambda.length()) +
                                " exceeds N = " + std::to_string(q.n));
  g_dropped_terms = 0;
  switch (resolve_route(q)) {
    case Route::SchurKadell:
      if (q.beta != 2)
        throw std::invalid_argument("the Schur route is specific to beta = 2");
      return moment_schur(q.lambda, q.alpha, q.n);
    case Route::JackKadell:
      return moment_jack(q.lambda, q.alpha, q.beta, q.n);
    case Route::HyperdetCauchy:
      if (q.beta != 2)
        throw std::invalid_argument("the hyperdeterminant route is specific to beta = 2");
      return jacobi_moment_average_cauchy(q.lambda, q.alpha, q.n);
    case Route::Auto:
      break;
  }
  throw std::logic_error("unreachable");
}

long moment_dropped_terms() { return g_dropped_terms; }

ExactRational average_determinant(const ExactRational& alpha, long n) {
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive");
  if (n < 1) throw std::invalid_argument("N must be positive");
  ExactRational r = 1;
  for (long j = 0; j < n; ++j)
    r *= (alpha + ExactRational(j)) / (alpha + ExactRational(n + j));
  return r;
}

std::vector<std::pair<ExactRational, ExactRational>> moment_sweep(
    const Partition& lambda, int beta, long n, const std::vector<ExactRational>& alphas) {
  std::vector<std::pair<ExactRational, ExactRational>> out(alphas.size());
  if (alphas.empty()) return out;

  // warm the shared expansion caches once before fanning out
  {
    MomentQuery q{lambda, alphas.front(), beta, n, Route::Auto};
    out.front() = {alphas.front(), moment(q)};
  }
  const size_t rest = alphas.size() - 1;
  const size_t workers =
      std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(), rest == 0 ? 1 : rest));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (size_t i = 1 + w; i < alphas.size(); i += workers) {
          MomentQuery q{lambda, alphas[i], beta, n, Route::Auto};
          out[i] = {alphas[i], moment(q)};
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

} // namespace permastat
