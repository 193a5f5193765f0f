#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degfusion/polynomial.hpp"
#include "degfusion/superalgebra.hpp"

namespace degfusion {

enum class ChannelParity { None, Even, Odd };

std::string to_string(ChannelParity p);

struct Channel {
  int label = 0;
  ChannelParity parity = ChannelParity::None;  // always None for Virasoro
  friend auto operator<=>(const Channel&, const Channel&) = default;
};

struct NSCoefficient {
  int coeff = 0;
  ChannelParity parity = ChannelParity::None;
  friend bool operator==(const NSCoefficient&, const NSCoefficient&) = default;
};

/// 1 iff r^2/4 is a root of fusion_poly_vir(m, n) and fusion_poly_vir(n, m).
int fusion_coeff_vir(int m, int n, int r);
/// Odd channel iff h_{1,s} is a root of Q1 in both orders, even iff of Q2.
NSCoefficient fusion_coeff_ns(int q, int r, int s);

/// Every channel of a x b, read off the common roots of both argument orders.
std::vector<Channel> fusion_channels(Flavor flavor, int a, int b);

/// Labels in table order: 0..bound (Virasoro) or odd 1..bound (NS).
std::vector<int> table_labels(Flavor flavor, int bound);

/// Structure constants for all pairs of labels up to the bound. Channels are
/// stored in full, so a product may name labels above the bound.
struct FusionTable {
  Flavor flavor = Flavor::Virasoro;
  int bound = 0;
  std::map<std::pair<int, int>, std::vector<Channel>> products;

  /// 0 or 1; throws std::out_of_range for a pair not in the table.
  int constant(int a, int b, int s) const;
  const std::vector<Channel>& product(int a, int b) const;
};

/// Pairs are computed concurrently and merged in label order.
FusionTable fusion_ring(Flavor flavor, int bound);

struct RingReport {
  bool commutative = true;
  bool associative = true;
  bool unital = true;
  std::size_t triples_checked = 0;
  std::vector<std::string> witnesses;  // first violations, readable

  bool passed() const { return commutative && associative && unital; }
};

/// Commutativity on all pairs, associativity on every triple whose
/// intermediate labels stay within the bound, and the unit a(0) / b(1).
RingReport ring_report(const FusionTable& t);

}  // namespace degfusion
