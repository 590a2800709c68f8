#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ptchain/coef.hpp"
#include "ptchain/rational.hpp"

namespace ptchain {

inline constexpr int kMaxCouplings = 7;  // u, v, w, y, z, m, n

// Raw coupling pairs (p_k, p_k'), innermost first.
struct RawParams {
  int J = 0;
  std::vector<std::pair<BigRational, BigRational>> pairs;

  RawParams() = default;
  explicit RawParams(std::vector<std::pair<BigRational, BigRational>> p);

  // Pair indices (0-based) with 1 - p = 0 or 1 + p' = 0.
  std::vector<int> singular_pairs() const;
  bool is_singular() const { return !singular_pairs().empty(); }
};

// Reduced couplings (u, v, w, ...) innermost first; each value is either a
// rational or a symbol.
struct ReducedParams {
  int J = 0;
  std::vector<Coef> values;

  ReducedParams() = default;
  explicit ReducedParams(std::vector<Coef> v);

  // Every coupling symbolic: u, v, w, ... up to J.
  static ReducedParams symbolic(int J);
  static ReducedParams numeric(const std::vector<BigRational>& values);

  // Same couplings with u replaced by the free symbol.
  ReducedParams with_symbolic_u() const;
  bool is_numeric() const;
  std::vector<BigRational> numeric_values() const;
  std::string to_string() const;
};

ReducedParams reduce(const RawParams& raw);
// Throws SingularParameters when any pair lies on a singular line.
ReducedParams reduce_regular(const RawParams& raw);
// Canonical gauge: p_k' = 0, p_k = -value_k.
RawParams embed(const ReducedParams& reduced);

// Real tridiagonal truncation on sites -N .. N-1 (index i = n + N).
// super[i] = H[i][i+1], sub[i] = H[i+1][i].
struct TruncatedHamiltonian {
  int N = 0;
  std::vector<BigRational> diag;
  std::vector<BigRational> super;
  std::vector<BigRational> sub;

  int dimension() const { return 2 * N; }
  int index_of_site(int n) const { return n + N; }
  BigRational entry(int i, int j) const;
};

// Coupling pair index k (1-based) carried by the bond between sites n and
// n+1; 0 for a free bond.
int bond_pair_index(int n, int J);

TruncatedHamiltonian build_truncated(const RawParams& raw, int N);
// Antidiagonal reflection symmetry H[i][j] == H[s(j)][s(i)], s(i) = 2N-1-i.
bool pt_check(const TruncatedHamiltonian& h);

// t = e^{2 phi}, x = e^{phi} = sqrt(t), E = 2 - (x + 1/x).
long double energy_of_t(long double t);
long double t_of_energy(long double energy);  // requires E < 0
long double phi_of_t(long double t);

// Parameter document: {"J": 2, "mode": "reduced", "values": ["3", "1"]} or
// {"J": 1, "mode": "raw", "pairs": [["-3", "0"]]}.
using ParamSet = std::variant<RawParams, ReducedParams>;
ParamSet parse_param_document(std::string_view json_text);
std::vector<BigRational> parse_value_list(std::string_view csv);
std::vector<std::pair<BigRational, BigRational>> parse_pair_list(std::string_view text);

}  // namespace ptchain
