#include "ptchain/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "ptchain/errors.hpp"

namespace ptchain {

RawParams::RawParams(std::vector<std::pair<BigRational, BigRational>> p)
    : J(static_cast<int>(p.size())), pairs(std::move(p)) {
  if (J < 1) throw Error(ErrorCode::InvalidArgument, "at least one coupling pair is required");
}

std::vector<int> RawParams::singular_pairs() const {
  std::vector<int> out;
  for (int k = 0; k < J; ++k) {
    const auto& [p, pp] = pairs[static_cast<std::size_t>(k)];
    if (p == 1 || pp == -1) out.push_back(k);
  }
  return out;
}

ReducedParams::ReducedParams(std::vector<Coef> v) : J(static_cast<int>(v.size())), values(std::move(v)) {
  if (J < 1) throw Error(ErrorCode::InvalidArgument, "J must be at least 1");
}

ReducedParams ReducedParams::symbolic(int J) {
  if (J < 1 || J > kMaxCouplings) {
    throw Error(ErrorCode::InvalidArgument, "symbolic couplings exist for 1 <= J <= 7");
  }
  std::vector<Coef> v;
  for (int k = 0; k < J; ++k) v.push_back(Coef::variable(coupling_var(k)));
  return ReducedParams(std::move(v));
}

ReducedParams ReducedParams::numeric(const std::vector<BigRational>& values) {
  std::vector<Coef> v(values.begin(), values.end());
  return ReducedParams(std::move(v));
}

ReducedParams ReducedParams::with_symbolic_u() const {
  ReducedParams out = *this;
  out.values[0] = Coef::variable(Var::u);
  return out;
}

bool ReducedParams::is_numeric() const {
  return std::all_of(values.begin(), values.end(), [](const Coef& v) { return v.is_constant(); });
}

std::vector<BigRational> ReducedParams::numeric_values() const {
  std::vector<BigRational> out;
  for (const auto& v : values) out.push_back(v.constant_value());
  return out;
}

std::string ReducedParams::to_string() const {
  std::string out;
  for (int k = 0; k < J; ++k) {
    if (k) out += ",";
    out += values[static_cast<std::size_t>(k)].to_string();
  }
  return out;
}

ReducedParams reduce(const RawParams& raw) {
  std::vector<Coef> v;
  for (const auto& [p, pp] : raw.pairs) v.emplace_back(BigRational((1 - p) * (1 + pp) - 1));
  return ReducedParams(std::move(v));
}

ReducedParams reduce_regular(const RawParams& raw) {
  auto bad = raw.singular_pairs();
  if (!bad.empty()) {
    throw Error(ErrorCode::SingularParameters,
                "coupling pair " + std::to_string(bad.front() + 1) + " lies on a singular line (p = 1 or p' = -1)");
  }
  return reduce(raw);
}

RawParams embed(const ReducedParams& reduced) {
  std::vector<std::pair<BigRational, BigRational>> pairs;
  for (const auto& v : reduced.values) pairs.emplace_back(BigRational(-v.constant_value()), BigRational(0));
  return RawParams(std::move(pairs));
}

BigRational TruncatedHamiltonian::entry(int i, int j) const {
  if (i == j) return diag[static_cast<std::size_t>(i)];
  if (j == i + 1) return super[static_cast<std::size_t>(i)];
  if (i == j + 1) return sub[static_cast<std::size_t>(j)];
  return 0;
}

int bond_pair_index(int n, int J) {
  int k = n <= -1 ? -n : n + 2;
  return k <= J ? k : 0;
}

TruncatedHamiltonian build_truncated(const RawParams& raw, int N) {
  if (N <= raw.J) {
    throw Error(ErrorCode::InvalidArgument,
                "truncation half-width N=" + std::to_string(N) + " must exceed J=" + std::to_string(raw.J));
  }
  TruncatedHamiltonian h;
  h.N = N;
  h.diag.assign(static_cast<std::size_t>(2 * N), BigRational(2));
  h.super.resize(static_cast<std::size_t>(2 * N - 1));
  h.sub.resize(static_cast<std::size_t>(2 * N - 1));
  for (int i = 0; i + 1 < 2 * N; ++i) {
    int k = bond_pair_index(i - N, raw.J);
    BigRational p = 0, pp = 0;
    if (k > 0) std::tie(p, pp) = raw.pairs[static_cast<std::size_t>(k - 1)];
    h.super[static_cast<std::size_t>(i)] = -1 + p;
    h.sub[static_cast<std::size_t>(i)] = -1 - pp;
  }
  return h;
}

bool pt_check(const TruncatedHamiltonian& h) {
  const int dim = h.dimension();
  if (static_cast<int>(h.diag.size()) != dim) return false;
  for (int i = 0; i < dim; ++i) {
    for (int j = std::max(0, i - 1); j <= std::min(dim - 1, i + 1); ++j) {
      if (h.entry(i, j) != h.entry(dim - 1 - j, dim - 1 - i)) return false;
    }
  }
  return true;
}

long double energy_of_t(long double t) {
  long double x = std::sqrt(t);
  long double xm1 = (t - 1) / (x + 1);
  return -(xm1 * xm1) / x;
}

long double t_of_energy(long double energy) {
  if (!(energy < 0)) throw Error(ErrorCode::InvalidArgument, "energy must lie below the continuum (E < 0)");
  // x + 1/x = 2 - E with (2 - E)^2 - 4 = (-E)(4 - E).
  long double x = ((2 - energy) + std::sqrt(-energy * (4 - energy))) / 2;
  return x * x;
}

long double phi_of_t(long double t) { return std::log(t) / 2; }

namespace {

BigRational json_number(const nlohmann::json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number()) return parse_rational(value.dump());
  throw Error(ErrorCode::ParseError, "expected a number or decimal string, got " + value.dump());
}

}  // namespace

ParamSet parse_param_document(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("parameter document: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "parameter document must be an object");
  std::string mode = doc.value("mode", std::string(doc.contains("pairs") ? "raw" : "reduced"));
  int J = doc.contains("J") ? doc["J"].get<int>() : -1;
  if (mode == "raw") {
    if (!doc.contains("pairs") || !doc["pairs"].is_array()) throw Error(ErrorCode::ParseError, "raw mode requires pairs");
    std::vector<std::pair<BigRational, BigRational>> pairs;
    for (const auto& item : doc["pairs"]) {
      if (!item.is_array() || item.size() != 2) throw Error(ErrorCode::ParseError, "each pair must have two entries");
      pairs.emplace_back(json_number(item[0]), json_number(item[1]));
    }
    if (J >= 0 && J != static_cast<int>(pairs.size())) throw Error(ErrorCode::ParseError, "J does not match pair count");
    if (pairs.empty()) throw Error(ErrorCode::ParseError, "at least one pair is required");
    return RawParams(std::move(pairs));
  }
  if (mode == "reduced") {
    if (!doc.contains("values") || !doc["values"].is_array()) throw Error(ErrorCode::ParseError, "reduced mode requires values");
    std::vector<BigRational> values;
    for (const auto& item : doc["values"]) values.push_back(json_number(item));
    if (J >= 0 && J != static_cast<int>(values.size())) throw Error(ErrorCode::ParseError, "J does not match value count");
    if (values.empty()) throw Error(ErrorCode::ParseError, "at least one reduced value is required");
    return ReducedParams::numeric(values);
  }
  throw Error(ErrorCode::ParseError, "mode must be raw or reduced, got " + mode);
}

std::vector<BigRational> parse_value_list(std::string_view csv) {
  std::vector<BigRational> out;
  std::string item;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty value list");
  return out;
}

// "a:a',b:b'" or "a,a',b,b'".
std::vector<std::pair<BigRational, BigRational>> parse_pair_list(std::string_view text) {
  std::string flat(text);
  std::replace_if(flat.begin(), flat.end(), [](char c) { return c == ':' || c == ';'; }, ',');
  auto numbers = parse_value_list(flat);
  if (numbers.size() % 2 != 0) throw Error(ErrorCode::ParseError, "pairs need an even number of entries");
  std::vector<std::pair<BigRational, BigRational>> out;
  for (std::size_t i = 0; i < numbers.size(); i += 2) out.emplace_back(numbers[i], numbers[i + 1]);
  return out;
}

}  // namespace ptchain
