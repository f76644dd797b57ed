#include "permastat/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace permastat {

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

long parse_long(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) throw std::invalid_argument("expected an integer in '" + s + "'");
  return std::stol(s.substr(start, pos - start));
}

} // namespace

Partition parse_partition(const std::string& text) {
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '[')
    throw std::invalid_argument("partition must look like [4,3,2]: got '" + text + "'");
  ++pos;
  std::vector<int> parts;
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      long v = parse_long(text, pos);
      parts.push_back(static_cast<int>(v));
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw std::invalid_argument("partition must look like [4,3,2]: got '" + text + "'");
    }
  }
  skip_ws(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("trailing characters after partition in '" + text + "'");
  return Partition(parts);
}

std::string format_partition(const Partition& lambda) {
  std::string out = "[";
  for (size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda.parts()[i]);
  }
  out += ']';
  return out;
}

ExactRational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  auto parse_int = [](const std::string& s) -> Int {
    size_t pos = 0;
    skip_ws(s, pos);
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument("expected an integer in '" + s + "'");
    size_t end = pos;
    skip_ws(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in number '" + s + "'");
    return Int(s.substr(start, end - start));
  };
  if (slash == std::string::npos) return ExactRational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  return ExactRational(num, den);
}

std::string route_name(Route route) {
  switch (route) {
    case Route::Auto: return "auto";
    case Route::SchurKadell: return "schur-kadell";
    case Route::JackKadell: return "jack-kadell";
    case Route::HyperdetCauchy: return "hyperdet-cauchy";
  }
  throw std::logic_error("unreachable");
}

nlohmann::ordered_json expansion_json(const SymExpansion& e) {
  nlohmann::ordered_json doc;
  switch (e.basis) {
    case Basis::Monomial: doc["basis"] = "monomial"; break;
    case Basis::PowerSum: doc["basis"] = "power-sum"; break;
    case Basis::Schur: doc["basis"] = "schur"; break;
    case Basis::JackP: doc["basis"] = "jack-P"; break;
    case Basis::JackJ: doc["basis"] = "jack-J"; break;
  }
  if (e.basis == Basis::JackP || e.basis == Basis::JackJ) doc["xi"] = e.xi.str();
  std::vector<const Partition*> order;
  order.reserve(e.terms.size());
  for (const auto& [mu, c] : e.terms) {
    (void)c;
    order.push_back(&mu);
  }
  std::sort(order.begin(), order.end(),
            [](const Partition* a, const Partition* b) { return b->parts() < a->parts(); });
  doc["terms"] = nlohmann::ordered_json::array();
  for (const Partition* mu : order) {
    nlohmann::ordered_json term;
    term["partition"] = mu->parts();
    term["coeff"] = e.terms.at(*mu).str();
    doc["terms"].push_back(std::move(term));
  }
  return doc;
}

nlohmann::ordered_json moment_json(const MomentQuery& q, const ExactRational& value,
                                   Route resolved) {
  nlohmann::ordered_json doc;
  doc["lambda"] = q.lambda.parts();
  doc["alpha"] = q.alpha.str();
  doc["beta"] = q.beta;
  doc["N"] = q.n;
  doc["value"] = value.str();
  doc["value_float"] = decimal_string(value);
  doc["route"] = route_name(resolved);
  return doc;
}

} // namespace permastat
