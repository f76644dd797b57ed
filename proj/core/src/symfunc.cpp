#include "permastat/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "permastat/config.hpp"
#include "permastat/errors.hpp"

namespace permastat {

namespace {

/// Thread-safe memo; values are computed outside the lock, first writer wins.
template <class K, class V>
class Memo {
public:
  template <class F>
  V get(const K& key, F&& compute) {
    {
      std::shared_lock lk(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lk(mu_);
    auto [it, inserted] = map_.try_emplace(key, std::move(value));
    (void)inserted;
    return it->second;
  }

private:
  std::shared_mutex mu_;
  std::map<K, V> map_;
};

void check_degree_cap(int degree) {
  if (degree > config::max_degree())
    throw DegreeTooLarge("degree " + std::to_string(degree) + " exceeds cap " +
                         std::to_string(config::max_degree()) +
                         " (set PERMASTAT_MAX_DEGREE to raise)");
}

} // namespace

// ---------------------------------------------------------------------------
// straightening
// ---------------------------------------------------------------------------

Straightened straighten(const Composition& word) {
  std::vector<int> w(word.begin(), word.end());
  const size_t n = w.size();
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t t = 0; t + 1 < n; ++t) {
      if (w[t] >= w[t + 1]) continue;
      if (w[t] == w[t + 1] - 1) return {};
      int a = w[t], b = w[t + 1];
      w[t] = b - 1;
      w[t + 1] = a + 1;
      sign = -sign;
      changed = true;
    }
  }
  return {sign, Partition(std::move(w))};
}

SymExpansion monomial_to_schur(const Partition& lambda) {
  static Memo<Partition, SymExpansion> memo;
  return memo.get(lambda, [&] {
    SymExpansion out;
    out.basis = Basis::Schur;
    // one determinant word per distinct rearrangement padded to |lambda| slots
    const long slots = lambda.weight();
    for (const Composition& word : distinct_permutations(lambda, slots)) {
      Straightened s = straighten(word);
      if (s.sign != 0) out.add(s.shape, s.sign);
    }
    return out;
  });
}

ExactRational power_sum_scalar(const Partition& a, const Partition& b, const ExactRational& xi) {
  if (a != b) return 0;
  return pow(xi, a.length()) * ExactRational(z_lambda(a));
}

// ---------------------------------------------------------------------------
// dense per-degree tables
// ---------------------------------------------------------------------------

namespace {

using Dense = std::vector<ExactRational>;
using Sparse = std::map<Partition, ExactRational>;

struct DegreeIndex {
  std::vector<Partition> parts; // descending lex
  std::map<Partition, int> pos;
};

std::shared_ptr<const DegreeIndex> degree_index(int d) {
  static Memo<int, std::shared_ptr<const DegreeIndex>> memo;
  return memo.get(d, [&] {
    auto idx = std::make_shared<DegreeIndex>();
    idx->parts = partitions_of(d);
    for (size_t i = 0; i < idx->parts.size(); ++i)
      idx->pos.emplace(idx->parts[i], static_cast<int>(i));
    return std::shared_ptr<const DegreeIndex>(idx);
  });
}

/// coefficient-of-m expansion of (m-expansion) * p_r
Sparse multiply_by_power_sum(const Sparse& mexp, int r) {
  Sparse out;
  for (const auto& [mu, c] : mexp) {
    std::vector<int> values{0};
    for (int p : mu.parts())
      if (values.back() != p) values.push_back(p); // parts are sorted; dedupe
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int u : values) {
      std::vector<int> parts = mu.parts();
      if (u > 0) parts.erase(std::find(parts.begin(), parts.end(), u));
      parts.push_back(u + r);
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      Partition nu(std::move(parts));
      int mult = static_cast<int>(std::count(nu.parts().begin(), nu.parts().end(), u + r));
      auto it = out.find(nu);
      ExactRational add = c * ExactRational(mult);
      if (it == out.end())
        out.emplace(std::move(nu), std::move(add));
      else {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

std::vector<Dense> invert_matrix(std::vector<Dense> a) {
  const size_t n = a.size();
  std::vector<Dense> inv(n, Dense(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("transition matrix is singular");
    std::swap(a[k], a[piv]);
    std::swap(inv[k], inv[piv]);
    ExactRational d = a[k][k];
    for (size_t j = 0; j < n; ++j) {
      a[k][j] /= d;
      inv[k][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      ExactRational f = a[i][k];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

struct PowerTable {
  std::shared_ptr<const DegreeIndex> idx;
  std::vector<Dense> p_to_m; // row r: p_{idx[r]} in monomials
  std::vector<Dense> m_to_p; // row r: m_{idx[r]} in power sums
};

std::shared_ptr<const PowerTable> power_table(int d) {
  static Memo<int, std::shared_ptr<const PowerTable>> memo;
  return memo.get(d, [&] {
    auto t = std::make_shared<PowerTable>();
    t->idx = degree_index(d);
    const size_t n = t->idx->parts.size();
    t->p_to_m.assign(n, Dense(n, 0));
    for (size_t r = 0; r < n; ++r) {
      Sparse exp{{Partition{}, 1}};
      for (int part : t->idx->parts[r].parts()) exp = multiply_by_power_sum(exp, part);
      for (const auto& [mu, c] : exp) t->p_to_m[r][static_cast<size_t>(t->idx->pos.at(mu))] = c;
    }
    t->m_to_p = invert_matrix(t->p_to_m);
    return std::shared_ptr<const PowerTable>(t);
  });
}

struct SchurTable {
  std::shared_ptr<const DegreeIndex> idx;
  std::vector<Dense> m_to_s;
  std::vector<Dense> s_to_m;
};

std::shared_ptr<const SchurTable> schur_table(int d) {
  static Memo<int, std::shared_ptr<const SchurTable>> memo;
  return memo.get(d, [&] {
    auto t = std::make_shared<SchurTable>();
    t->idx = degree_index(d);
    const size_t n = t->idx->parts.size();
    t->m_to_s.assign(n, Dense(n, 0));
    for (size_t r = 0; r < n; ++r) {
      SymExpansion e = monomial_to_schur(t->idx->parts[r]);
      for (const auto& [mu, c] : e.terms) t->m_to_s[r][static_cast<size_t>(t->idx->pos.at(mu))] = c;
    }
    t->s_to_m = invert_matrix(t->m_to_s);
    return std::shared_ptr<const SchurTable>(t);
  });
}

// ---------------------------------------------------------------------------
// Jack polynomials by Gram-Schmidt in the deformed power-sum inner product
// ---------------------------------------------------------------------------

std::vector<Partition> gs_order(int d, GSOrder order) {
  std::vector<Partition> parts = partitions_of(d);
  if (order == GSOrder::Lex) {
    // ascending lex refines dominance upward: [1^d] first, [d] last
    std::reverse(parts.begin(), parts.end());
  } else {
    // descending lex on conjugates: a different refinement of the same order
    std::sort(parts.begin(), parts.end(),
              [](const Partition& a, const Partition& b) { return b.conjugate() < a.conjugate(); });
  }
  return parts;
}

struct JackTable {
  std::shared_ptr<const DegreeIndex> idx;
  std::vector<Partition> order;
  std::map<Partition, int> order_pos;
  std::vector<Sparse> p_monomials;  // P in the monomial basis
  std::vector<Dense> p_powers;      // P in the power-sum basis (idx order)
  std::vector<ExactRational> norms; // <P, P>
  std::vector<Sparse> m_in_p;       // m_lambda in the P basis (includes lambda itself)
};

using JackKey = std::tuple<int, ExactRational, int>;

std::shared_ptr<const JackTable> jack_table(int d, const ExactRational& xi, GSOrder order) {
  static Memo<JackKey, std::shared_ptr<const JackTable>> memo;
  return memo.get(JackKey(d, xi, static_cast<int>(order)), [&] {
    auto t = std::make_shared<JackTable>();
    t->idx = degree_index(d);
    t->order = gs_order(d, order);
    const size_t n = t->order.size();
    for (size_t i = 0; i < n; ++i) t->order_pos.emplace(t->order[i], static_cast<int>(i));
    auto pt = power_table(d);

    Dense weight(n);
    for (size_t k = 0; k < n; ++k)
      weight[k] = power_sum_scalar(t->idx->parts[k], t->idx->parts[k], xi);

    auto dot = [&](const Dense& u, const Dense& v) {
      ExactRational s = 0;
      for (size_t k = 0; k < n; ++k)
        if (!u[k].is_zero() && !v[k].is_zero()) s += u[k] * v[k] * weight[k];
      return s;
    };

    for (size_t step = 0; step < n; ++step) {
      const Partition& lam = t->order[step];
      const size_t mi = static_cast<size_t>(t->idx->pos.at(lam));
      Sparse xm{{lam, 1}};
      Dense xp = pt->m_to_p[mi];
      Sparse coeffs{{lam, 1}};
      for (size_t s = 0; s < step; ++s) {
        ExactRational num = dot(xp, t->p_powers[s]);
        if (num.is_zero()) continue;
        ExactRational c = num / t->norms[s];
        coeffs.emplace(t->order[s], c);
        for (const auto& [mu, pc] : t->p_monomials[s]) {
          auto it = xm.find(mu);
          if (it == xm.end())
            xm.emplace(mu, -c * pc);
          else {
            it->second -= c * pc;
            if (it->second.is_zero()) xm.erase(it);
          }
        }
        for (size_t k = 0; k < n; ++k) xp[k] -= c * t->p_powers[s][k];
      }
      t->norms.push_back(dot(xp, xp));
      t->p_monomials.push_back(std::move(xm));
      t->p_powers.push_back(std::move(xp));
      t->m_in_p.push_back(std::move(coeffs));
    }
    return std::shared_ptr<const JackTable>(t);
  });
}

} // namespace

// ---------------------------------------------------------------------------
// public transitions
// ---------------------------------------------------------------------------

TransitionTable basis_transition(Basis from, Basis to, int degree) {
  check_degree_cap(degree);
  TransitionTable out;
  out.from = from;
  out.to = to;
  out.degree = degree;
  if (from == Basis::PowerSum && to == Basis::Monomial) {
    auto t = power_table(degree);
    out.index = t->idx->parts;
    out.matrix = t->p_to_m;
  } else if (from == Basis::Monomial && to == Basis::PowerSum) {
    auto t = power_table(degree);
    out.index = t->idx->parts;
    out.matrix = t->m_to_p;
  } else if (from == Basis::Monomial && to == Basis::Schur) {
    auto t = schur_table(degree);
    out.index = t->idx->parts;
    out.matrix = t->m_to_s;
  } else if (from == Basis::Schur && to == Basis::Monomial) {
    auto t = schur_table(degree);
    out.index = t->idx->parts;
    out.matrix = t->s_to_m;
  } else {
    throw std::invalid_argument("unsupported basis transition pair");
  }
  return out;
}

SymExpansion jack_P_monomials(const Partition& lambda, const ExactRational& xi, GSOrder order) {
  const int d = lambda.weight();
  check_degree_cap(d);
  auto t = jack_table(d, xi, order);
  SymExpansion out;
  out.basis = Basis::Monomial;
  for (const auto& [mu, c] : t->p_monomials[static_cast<size_t>(t->order_pos.at(lambda))])
    out.add(mu, c);
  return out;
}

ExactRational jack_norm(const Partition& lambda, const ExactRational& xi) {
  const int d = lambda.weight();
  check_degree_cap(d);
  auto t = jack_table(d, xi, GSOrder::Lex);
  return t->norms[static_cast<size_t>(t->order_pos.at(lambda))];
}

SymExpansion monomial_to_jackP(const Partition& lambda, const ExactRational& xi, GSOrder order) {
  const int d = lambda.weight();
  check_degree_cap(d);
  auto t = jack_table(d, xi, order);
  SymExpansion out;
  out.basis = Basis::JackP;
  out.xi = xi;
  for (const auto& [mu, c] : t->m_in_p[static_cast<size_t>(t->order_pos.at(lambda))])
    out.add(mu, c);
  return out;
}

SymExpansion monomial_to_jackJ(const Partition& lambda, const ExactRational& xi, GSOrder order) {
  SymExpansion p = monomial_to_jackP(lambda, xi, order);
  SymExpansion out;
  out.basis = Basis::JackJ;
  out.xi = xi;
  for (const auto& [mu, c] : p.terms) out.add(mu, c / arm_leg_product(mu, xi));
  return out;
}

// ---------------------------------------------------------------------------
// principal specializations
// ---------------------------------------------------------------------------

ExactRational schur_at_ones(const Partition& lambda, long n) {
  if (lambda.length() > n) return 0;
  const Partition conj = lambda.conjugate();
  ExactRational r = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      const int hook = (lambda.part(i) - 1 - j) + (conj.part(j) - 1 - i) + 1;
      r *= ExactRational(Int(n + j - i), Int(hook));
    }
  }
  return r;
}

ExactRational jack_J_at_ones_closed(const Partition& lambda, const ExactRational& xi, long n) {
  if (lambda.length() > n) return 0;
  ExactRational r = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) r *= ExactRational(Int(n - i)) + xi * ExactRational(j);
  return r;
}

ExactRational evaluate_at_ones(const SymExpansion& e, long n) {
  ExactRational total = 0;
  switch (e.basis) {
    case Basis::Monomial:
      for (const auto& [mu, c] : e.terms) {
        if (mu.length() > n) continue;
        total += c * ExactRational(count_distinct_permutations(mu, n));
      }
      break;
    case Basis::PowerSum:
      for (const auto& [mu, c] : e.terms) total += c * pow(ExactRational(Int(n)), mu.length());
      break;
    case Basis::Schur:
      for (const auto& [mu, c] : e.terms) total += c * schur_at_ones(mu, n);
      break;
    case Basis::JackP:
      for (const auto& [mu, c] : e.terms)
        total += c * evaluate_at_ones(jack_P_monomials(mu, e.xi), n);
      break;
    case Basis::JackJ:
      for (const auto& [mu, c] : e.terms)
        total += c * arm_leg_product(mu, e.xi) *
                 evaluate_at_ones(jack_P_monomials(mu, e.xi), n);
      break;
  }
  return total;
}

} // namespace permastat
