#include "svdt/polynomial.hpp"

#include <sstream>

#include "json.hpp"

namespace svdt {

TruncPoly::TruncPoly(int n, int max_degree) : n_(n), max_degree_(max_degree) {
  if (n < 0 || max_degree < 0) throw contract_error("TruncPoly: bad dimensions");
}

void TruncPoly::add_term(const Expo& e, Int c) {
  if (static_cast<int>(e.size()) != n_) throw contract_error("TruncPoly: wrong exponent length");
  for (int x : e)
    if (x < 0) throw contract_error("TruncPoly: negative exponent");
  if (c == 0 || expo_degree(e) > max_degree_) return;
  auto [it, inserted] = terms_.emplace(e, std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int TruncPoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

int TruncPoly::min_degree() const {
  if (terms_.empty()) return -1;
  return expo_degree(terms_.begin()->first);
}

TruncPoly TruncPoly::homogeneous_part(int d) const {
  TruncPoly out(n_, max_degree_);
  for (const auto& [e, c] : terms_)
    if (expo_degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
  if (o.n_ != n_) throw contract_error("TruncPoly: mismatched variable count");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
  if (o.n_ != n_) throw contract_error("TruncPoly: mismatched variable count");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
  if (o.n_ != n_) throw contract_error("TruncPoly: mismatched variable count");
  TruncPoly out(n_, std::min(max_degree_, o.max_degree_));
  Expo e(static_cast<std::size_t>(n_));
  for (const auto& [ea, ca] : terms_) {
    const int da = expo_degree(ea);
    for (const auto& [eb, cb] : o.terms_) {
      if (da + expo_degree(eb) > out.max_degree_) continue;
      for (int k = 0; k < n_; ++k)
        e[static_cast<std::size_t>(k)] =
            ea[static_cast<std::size_t>(k)] + eb[static_cast<std::size_t>(k)];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

TruncPoly TruncPoly::scaled(const Int& c) const {
  TruncPoly out(n_, max_degree_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

bool TruncPoly::is_symmetric() const {
  for (int k = 0; k + 1 < n_; ++k) {
    for (const auto& [e, c] : terms_) {
      Expo s = e;
      std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(k + 1)]);
      if (coeff(s) != c) return false;
    }
  }
  return true;
}

std::string TruncPoly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : " ") << (c < 0 ? "-" : "+") << ' ' << boost::multiprecision::abs(c);
    for (int k = 0; k < n_; ++k)
      if (e[static_cast<std::size_t>(k)] > 0)
        os << " x" << (k + 1) << '^' << e[static_cast<std::size_t>(k)];
    first = false;
  }
  return os.str();
}

std::string TruncPoly::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["max_degree"] = max_degree_;
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (const auto& [e, c] : terms_) {
    std::string key;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) key += ',';
      key += std::to_string(e[k]);
    }
    terms[key] = c.str();
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

TruncPoly TruncPoly::from_json_string(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  TruncPoly out(j.at("n").get<int>(), j.at("max_degree").get<int>());
  for (const auto& [key, val] : j.at("terms").items()) {
    Expo e;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) e.push_back(std::stoi(item));
    Int c;
    if (val.is_string())
      c = Int(val.get<std::string>());
    else
      c = Int(val.get<long long>());
    out.add_term(e, c);
  }
  return out;
}

}  // namespace svdt
