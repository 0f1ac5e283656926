#include "cokasch/zmodule.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cokasch {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

i64 parse_number(const std::string& token, const std::string& what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw std::invalid_argument(what + " is not a number: '" + token + "'");
  if (token.size() > 18) throw std::invalid_argument(what + " is out of range: '" + token + "'");
  return std::stoll(token);
}

ZAtom parse_atom(const std::string& raw) {
  const std::string token = trim(raw);
  if (token == "Z") return FreeZ{};
  if (token == "Q") return Rationals{};
  if (token.starts_with("Z/")) {
    i64 n = parse_number(token.substr(2), "cyclic order");
    if (n < 2) throw std::invalid_argument("cyclic order must be at least 2: '" + token + "'");
    return Cyclic{n};
  }
  if (token.starts_with("Prufer(") && token.ends_with(")")) {
    i64 p = parse_number(token.substr(7, token.size() - 8), "Prufer parameter");
    if (!is_prime(p))
      throw std::invalid_argument("Prufer parameter must be prime: '" + token + "'");
    return Prufer{p};
  }
  throw std::invalid_argument("unknown atom: '" + token + "'");
}

std::set<i64> prime_divisors(i64 n) {
  std::set<i64> out;
  for (i64 p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.insert(p);
      n /= p;
    }
  if (n > 1) out.insert(n);
  return out;
}

}  // namespace

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void validate_zmodule(const ZModuleExpr& m) {
  for (const ZAtom& atom : m.atoms) {
    if (const Cyclic* c = std::get_if<Cyclic>(&atom); c && c->n < 2)
      throw std::invalid_argument("cyclic order must be at least 2");
    if (const Prufer* p = std::get_if<Prufer>(&atom); p && !is_prime(p->p))
      throw std::invalid_argument("Prufer parameter must be prime");
  }
}

ZModuleExpr parse_zmodule(const std::string& text) {
  const std::string body = trim(text);
  if (body == "0") return {};
  if (!body.empty() && body.back() == '+')
    throw std::invalid_argument("dangling '+' in module expression");
  ZModuleExpr m;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, '+')) m.atoms.push_back(parse_atom(piece));
  if (m.atoms.empty()) throw std::invalid_argument("empty module expression");
  return m;
}

std::string format_zmodule(const ZModuleExpr& m) {
  if (m.atoms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (i) os << " + ";
    if (std::holds_alternative<FreeZ>(m.atoms[i])) {
      os << "Z";
    } else if (std::holds_alternative<Rationals>(m.atoms[i])) {
      os << "Q";
    } else if (const Cyclic* c = std::get_if<Cyclic>(&m.atoms[i])) {
      os << "Z/" << c->n;
    } else {
      os << "Prufer(" << std::get<Prufer>(m.atoms[i]).p << ")";
    }
  }
  return os.str();
}

bool is_torsion(const ZModuleExpr& m) {
  validate_zmodule(m);
  for (const ZAtom& atom : m.atoms)
    if (std::holds_alternative<FreeZ>(atom) || std::holds_alternative<Rationals>(atom))
      return false;
  return true;
}

std::set<i64> primary_support(const ZModuleExpr& m) {
  validate_zmodule(m);
  std::set<i64> support;
  for (const ZAtom& atom : m.atoms) {
    if (const Cyclic* c = std::get_if<Cyclic>(&atom)) support.merge(prime_divisors(c->n));
    if (const Prufer* p = std::get_if<Prufer>(&atom)) support.insert(p->p);
  }
  return support;
}

bool is_p_divisible(const ZModuleExpr& m, i64 p) {
  validate_zmodule(m);
  if (!is_prime(p)) throw std::invalid_argument("divisibility is decided at primes only");
  for (const ZAtom& atom : m.atoms) {
    if (std::holds_alternative<FreeZ>(atom)) return false;
    if (const Cyclic* c = std::get_if<Cyclic>(&atom); c && c->n % p == 0) return false;
  }
  return true;
}

PropertyReport is_co_kasch_z(const ZModuleExpr& m) {
  validate_zmodule(m);
  PropertyReport report;
  report.property = "co-kasch";
  if (is_torsion(m)) {
    for (i64 p : primary_support(m))
      if (is_p_divisible(m, p)) {
        report.verdict = false;
        report.witness_prime = p;
        return report;
      }
    return report;
  }
  for (const ZAtom& atom : m.atoms)
    if (std::holds_alternative<FreeZ>(atom)) return report;
  report.verdict = false;
  for (i64 p = 2;; ++p) {
    if (!is_prime(p)) continue;
    if (is_p_divisible(m, p)) {
      report.witness_prime = p;
      return report;
    }
  }
}

}  // namespace cokasch
