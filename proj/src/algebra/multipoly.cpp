#include "ptchain/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "ptchain/errors.hpp"

namespace ptchain {

namespace {

constexpr std::string_view kVarNames = "tuvwyzmn";

bool key_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.key > b.key; }

// rem - coef * x^key * divisor, all operands sorted descending.
std::vector<MultiPoly::Term> subtract_shifted(const std::vector<MultiPoly::Term>& rem,
                                              const std::vector<MultiPoly::Term>& divisor,
                                              Monomial::Key key, const BigRational& coef) {
  std::vector<MultiPoly::Term> out;
  out.reserve(rem.size() + divisor.size());
  std::size_t i = 0, j = 0;
  while (i < rem.size() || j < divisor.size()) {
    if (j == divisor.size() || (i < rem.size() && rem[i].key > Monomial::multiply(divisor[j].key, key))) {
      out.push_back(rem[i++]);
      continue;
    }
    Monomial::Key k = Monomial::multiply(divisor[j].key, key);
    BigRational c = -coef * divisor[j].coef;
    if (i < rem.size() && rem[i].key == k) {
      c += rem[i].coef;
      ++i;
    }
    ++j;
    if (c != 0) out.push_back({k, std::move(c)});
  }
  return out;
}

}  // namespace

char var_name(Var var) { return kVarNames[static_cast<std::size_t>(var)]; }

std::optional<Var> var_from_name(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  auto pos = kVarNames.find(name[0]);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Var>(pos);
}

Var coupling_var(int k) {
  if (k < 0 || k >= kNumVars - 1) {
    throw Error(ErrorCode::InvalidArgument, "coupling index out of range: " + std::to_string(k));
  }
  return static_cast<Var>(k + 1);
}

// ---------------------------------------------------------------- Monomial

Monomial::Key Monomial::make(const std::array<int, kNumVars>& exponents) {
  Key key = 0;
  int total = 0;
  for (int i = 0; i < kNumVars; ++i) {
    int e = exponents[static_cast<std::size_t>(i)];
    if (e < 0 || e > kMaxTotalDegree) throw Error(ErrorCode::ResourceLimit, "exponent out of range");
    total += e;
    key |= static_cast<Key>(e) << shift(static_cast<Var>(i));
  }
  if (total > kMaxTotalDegree) throw Error(ErrorCode::ResourceLimit, "total degree exceeds 63");
  return key | (static_cast<Key>(total) << 48);
}

Monomial::Key Monomial::of(Var var, int power) {
  std::array<int, kNumVars> e{};
  e[static_cast<std::size_t>(var)] = power;
  return make(e);
}

Monomial::Key Monomial::multiply(Key a, Key b) {
  if (total_degree(a) + total_degree(b) > kMaxTotalDegree) {
    throw Error(ErrorCode::ResourceLimit, "total degree exceeds 63");
  }
  return a + b;
}

bool Monomial::divides(Key divisor, Key dividend) {
  if (total_degree(divisor) > total_degree(dividend)) return false;
  for (int i = 0; i < kNumVars; ++i) {
    auto var = static_cast<Var>(i);
    if (exponent(divisor, var) > exponent(dividend, var)) return false;
  }
  return true;
}

Monomial::Key Monomial::without(Key key, Var var) {
  Key e = static_cast<Key>(exponent(key, var));
  return key - (e << shift(var)) - (e << 48);
}

std::string Monomial::to_string(Key key) {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    auto var = static_cast<Var>(i);
    int e = exponent(key, var);
    if (e == 0) continue;
    if (!out.empty()) out.push_back('*');
    out.push_back(var_name(var));
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const BigRational& constant) {
  if (constant != 0) terms_.push_back({Monomial::one(), constant});
}

MultiPoly MultiPoly::variable(Var var) { return monomial(Monomial::of(var), BigRational(1)); }

MultiPoly MultiPoly::monomial(Monomial::Key key, const BigRational& coef) {
  MultiPoly p;
  if (coef != 0) p.terms_.push_back({key, coef});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), key_greater);
  MultiPoly p;
  p.terms_.reserve(terms.size());
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().key == term.key) {
      p.terms_.back().coef += term.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].key == Monomial::one());
}

BigRational MultiPoly::constant_value() const {
  if (!terms_.empty() && terms_.back().key == Monomial::one()) return terms_.back().coef;
  return BigRational(0);
}

int MultiPoly::degree(Var var) const {
  int d = 0;
  for (const auto& term : terms_) d = std::max(d, Monomial::exponent(term.key, var));
  return d;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : Monomial::total_degree(terms_.front().key);
}

std::uint32_t MultiPoly::variable_mask() const {
  std::uint32_t mask = 0;
  for (const auto& term : terms_) {
    for (int i = 0; i < kNumVars; ++i) {
      if (Monomial::exponent(term.key, static_cast<Var>(i)) > 0) mask |= 1u << i;
    }
  }
  return mask;
}

std::vector<Var> MultiPoly::variables() const {
  std::vector<Var> out;
  auto mask = variable_mask();
  for (int i = 0; i < kNumVars; ++i) {
    if (mask & (1u << i)) out.push_back(static_cast<Var>(i));
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& term : p.terms_) term.coef = -term.coef;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].key > other.terms_[j].key)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || other.terms_[j].key > terms_[i].key) {
      out.push_back(other.terms_[j++]);
    } else {
      BigRational c = terms_[i].coef + other.terms_[j].coef;
      if (c != 0) out.push_back({terms_[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else if (scalar != 1) {
    for (auto& term : terms_) term.coef *= scalar;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.terms_[0].coef;
  if (b.is_constant()) return a * b.terms_[0].coef;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a single term preserves the order.
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    MultiPoly p;
    p.terms_.reserve(other.terms_.size());
    for (const auto& term : other.terms_) {
      p.terms_.push_back({Monomial::multiply(term.key, single.key), term.coef * single.coef});
    }
    return p;
  }
  std::vector<MultiPoly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      products.push_back({Monomial::multiply(ta.key, tb.key), ta.coef * tb.coef});
    }
  }
  return MultiPoly::from_terms(std::move(products));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "multivariate division by zero");
  if (is_zero()) return MultiPoly{};
  if (divisor.is_constant()) return *this * BigRational(1 / divisor.terms_[0].coef);
  // The extreme terms of a product are products of extreme terms.
  if (!Monomial::divides(divisor.terms_.front().key, terms_.front().key)) return std::nullopt;
  if (!Monomial::divides(divisor.terms_.back().key, terms_.back().key)) return std::nullopt;
  for (int i = 0; i < kNumVars; ++i) {
    auto var = static_cast<Var>(i);
    if (divisor.degree(var) > degree(var)) return std::nullopt;
  }
  const Term& lead = divisor.terms_.front();
  BigRational inv_lead = 1 / lead.coef;
  std::vector<Term> rem = terms_;
  MultiPoly quotient;
  while (!rem.empty()) {
    if (!Monomial::divides(lead.key, rem.front().key)) return std::nullopt;
    Monomial::Key key = Monomial::divide(rem.front().key, lead.key);
    BigRational coef = rem.front().coef * inv_lead;
    rem = subtract_shifted(rem, divisor.terms_, key, coef);
    quotient.terms_.push_back({key, std::move(coef)});
  }
  return quotient;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  auto q = try_divide(divisor);
  if (!q) {
    throw Error(ErrorCode::NotExactDivision,
                "(" + to_string() + ") is not divisible by (" + divisor.to_string() + ")");
  }
  return *std::move(q);
}

MultiPoly MultiPoly::substitute(Var var, const BigRational& value) const {
  if (!contains(var)) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    int e = Monomial::exponent(term.key, var);
    if (e == 0) {
      out.push_back(term);
      continue;
    }
    BigRational c;
    mpz_pow_ui(c.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(c.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(e));
    c *= term.coef;
    if (c != 0) out.push_back({Monomial::without(term.key, var), std::move(c)});
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::substitute(Var var, const MultiPoly& value) const {
  if (!contains(var)) return *this;
  auto coeffs = coefficients_in(var);
  MultiPoly result;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    result = result * value + coeffs[k];
  }
  return result;
}

BigRational MultiPoly::evaluate(const std::map<Var, BigRational>& point) const {
  BigRational sum = 0;
  for (const auto& term : terms_) {
    BigRational value = term.coef;
    for (int i = 0; i < kNumVars; ++i) {
      auto var = static_cast<Var>(i);
      int e = Monomial::exponent(term.key, var);
      if (e == 0) continue;
      auto it = point.find(var);
      if (it == point.end()) {
        throw Error(ErrorCode::InvalidArgument, std::string("no value for variable ") + var_name(var));
      }
      for (int k = 0; k < e; ++k) value *= it->second;
    }
    sum += value;
  }
  return sum;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var var) const {
  std::vector<std::vector<Term>> groups(static_cast<std::size_t>(degree(var)) + 1);
  for (const auto& term : terms_) {
    auto e = static_cast<std::size_t>(Monomial::exponent(term.key, var));
    groups[e].push_back({Monomial::without(term.key, var), term.coef});
  }
  std::vector<MultiPoly> out;
  out.reserve(groups.size());
  for (auto& group : groups) out.push_back(from_terms(std::move(group)));
  return out;
}

MultiPoly MultiPoly::from_coefficients_in(Var var, const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial::Key shift = Monomial::of(var, static_cast<int>(k));
    for (const auto& term : coeffs[k].terms_) {
      all.push_back({Monomial::multiply(term.key, shift), term.coef});
    }
  }
  return from_terms(std::move(all));
}

BigRational MultiPoly::content() const {
  if (terms_.empty()) return BigRational(1);
  BigInteger num_gcd = 0, den_lcm = 1;
  for (const auto& term : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), term.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), term.coef.get_den_mpz_t());
  }
  BigRational c(num_gcd, den_lcm);
  c.canonicalize();
  if (terms_.front().coef < 0) c = -c;
  return c;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return {};
  BigRational c = content();
  if (c == 1) return *this;
  return *this * BigRational(1 / c);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& term : terms_) order.push_back(&term);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    int da = Monomial::total_degree(a->key), db = Monomial::total_degree(b->key);
    if (da != db) return da < db;
    return a->key > b->key;
  });
  std::string out;
  bool first = true;
  for (const Term* term : order) {
    bool negative = term->coef < 0;
    BigRational magnitude = abs(term->coef);
    std::string mono = Monomial::to_string(term->key);
    if (negative) {
      out.push_back('-');
    } else if (!first) {
      out.push_back('+');
    }
    if (mono.empty()) {
      out += ptchain::to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += ptchain::to_string(magnitude) + "*" + mono;
    }
    first = false;
  }
  return out;
}

// ------------------------------------------------------------------- gcd

namespace {

using Coeffs = std::vector<MultiPoly>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

MultiPoly content_of(const Coeffs& coeffs) {
  MultiPoly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

Coeffs divide_all(const Coeffs& coeffs, const MultiPoly& d) {
  Coeffs out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.divide_exact(d));
  return out;
}

Coeffs primitive_part(const Coeffs& coeffs) {
  MultiPoly c = content_of(coeffs);
  if (c.is_constant()) {
    // Still strip the rational content so the sequence stays small.
    Coeffs out = coeffs;
    BigInteger num_gcd = 0, den_lcm = 1;
    for (const auto& p : out) {
      for (const auto& t : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
      }
    }
    if (num_gcd == 0) return out;
    BigRational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& p : out) p *= scale;
    return out;
  }
  return divide_all(coeffs, c);
}

Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const std::size_t db = b.size() - 1;
  const MultiPoly& lc = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    MultiPoly lead = a.back();
    std::size_t k = a.size() - 1 - db;
    for (auto& c : a) c = c * lc;
    for (std::size_t i = 0; i <= db; ++i) a[i + k] -= lead * b[i];
    trim(a);
  }
  return a;
}

Coeffs prs_gcd(Coeffs a, Coeffs b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    if (b.size() == 1) return {MultiPoly(1)};
    Coeffs r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    a = std::move(b);
    b = primitive_part(r);
  }
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);

  const auto mask_a = a.variable_mask(), mask_b = b.variable_mask();
  for (int i = 0; i < kNumVars; ++i) {
    const std::uint32_t bit = 1u << i;
    auto var = static_cast<Var>(i);
    if ((mask_a & bit) && !(mask_b & bit)) return gcd(content_of(a.coefficients_in(var)), b);
    if ((mask_b & bit) && !(mask_a & bit)) return gcd(a, content_of(b.coefficients_in(var)));
  }

  if (a.total_degree() >= b.total_degree()) {
    if (a.try_divide(b)) return b.primitive();
  } else if (b.try_divide(a)) {
    return a.primitive();
  }

  Var main = Var::t;
  int best = -1;
  for (int i = 0; i < kNumVars; ++i) {
    if (!(mask_a & (1u << i))) continue;
    auto var = static_cast<Var>(i);
    int cost = a.degree(var) + b.degree(var);
    if (best < 0 || cost < best) {
      best = cost;
      main = var;
    }
  }

  Coeffs ca = a.coefficients_in(main), cb = b.coefficients_in(main);
  MultiPoly cont_a = content_of(ca), cont_b = content_of(cb);
  MultiPoly cont = gcd(cont_a, cont_b);
  Coeffs g = prs_gcd(primitive_part(divide_all(ca, cont_a)), primitive_part(divide_all(cb, cont_b)));
  g = primitive_part(g);
  return (cont * MultiPoly::from_coefficients_in(main, g)).primitive();
}

}  // namespace ptchain
