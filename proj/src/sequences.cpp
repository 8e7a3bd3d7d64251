#include "jetsections/sequences.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "jetsections/error.hpp"

namespace jetsections {

namespace {

std::string seq_string(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

void require_dimension(int n) {
  if (n < 1) throw InvalidArgument("dimension N must be >= 1");
}

}  // namespace

SeqA::SeqA(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || (i > 0 && entries_[i] < entries_[i - 1])) {
      throw InvalidArgument("SeqA: not a weakly increasing natural sequence " +
                            seq_string(entries_));
    }
  }
}

SeqB::SeqB(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || (i > 0 && entries_[i] <= entries_[i - 1])) {
      throw InvalidArgument("SeqB: not a strictly increasing natural sequence " +
                            seq_string(entries_));
    }
  }
}

TupleAN::TupleAN(std::vector<SeqA> blocks) : blocks_(std::move(blocks)) {
  require_dimension(dimension());
}

TupleBNPlus::TupleBNPlus(std::vector<SeqB> blocks) : blocks_(std::move(blocks)) {
  require_dimension(dimension());
  for (int j = 1; j <= dimension(); ++j) {
    const SeqB& b = block(j);
    if (!b.empty() && b[0] < partial_sum(j + 1)) {
      throw InvalidArgument("TupleBNPlus: staircase violated in block " + std::to_string(j) +
                            ": first entry " + std::to_string(b[0]) + " < " +
                            std::to_string(partial_sum(j + 1)) + " in " + to_string());
    }
  }
}

TupleBNPlus TupleBNPlus::empty(int n) {
  require_dimension(n);
  return TupleBNPlus(std::vector<SeqB>(static_cast<std::size_t>(n)));
}

int TupleBNPlus::partial_sum(int j) const {
  if (j < 1 || j > dimension() + 1) throw InvalidArgument("partial_sum: index out of range");
  int s = 0;
  for (int i = j; i <= dimension(); ++i) s += length(i);
  return s;
}

int TupleBNPlus::max_entry() const {
  int m = -1;
  for (const SeqB& b : blocks_) {
    if (!b.empty()) m = std::max(m, b.entries().back());
  }
  return m;
}

std::string TupleBNPlus::to_string() const {
  std::string out = "[";
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (j) out += ",";
    out += seq_string(blocks_[j].entries());
  }
  return out + "]";
}

SeqA tau(const SeqB& b) {
  std::vector<int> a(b.entries());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= static_cast<int>(i);
  return SeqA(std::move(a));
}

SeqB tau_inv(const SeqA& a) {
  std::vector<int> b(a.entries());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] += static_cast<int>(i);
  return SeqB(std::move(b));
}

TupleAN tau_plus(const TupleBNPlus& t) {
  std::vector<SeqA> out;
  for (int j = 1; j <= t.dimension(); ++j) {
    std::vector<int> a(t.block(j).entries());
    const int shift = t.partial_sum(j + 1);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= shift + static_cast<int>(i);
    out.emplace_back(std::move(a));
  }
  return TupleAN(std::move(out));
}

TupleBNPlus tau_plus_inv(const TupleAN& a) {
  const int n = a.dimension();
  std::vector<SeqB> out(static_cast<std::size_t>(n));
  int shift = 0;
  for (int j = n; j >= 1; --j) {
    std::vector<int> b(a.block(j).entries());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += shift + static_cast<int>(i);
    shift += static_cast<int>(b.size());
    out[static_cast<std::size_t>(j - 1)] = SeqB(std::move(b));
  }
  return TupleBNPlus(std::move(out));
}

int weight(const SeqA& a) {
  int w = 0;
  for (int v : a.entries()) w += v + 1;
  return w;
}

int weight(const SeqB& b) { return weight(tau(b)); }

int weight(const TupleAN& a) {
  int w = 0;
  for (const SeqA& s : a.blocks()) w += weight(s);
  return w;
}

int weight(const TupleBNPlus& t) { return weight(tau_plus(t)); }

namespace {

/// Depth-first walk over the staircase tuples, filling blocks N, N-1, ..., 1.
/// `accept_entry(block_shift, index, value)` bounds the entries of a block;
/// `leaf` sees every completed tuple.
class StaircaseWalker {
 public:
  using Bound = std::function<bool(int shift, int index, int value, int budget)>;

  StaircaseWalker(int n, int budget, Bound fits, std::function<int(int, int, int)> cost)
      : n_(n), budget_(budget), fits_(std::move(fits)), cost_(std::move(cost)),
        blocks_(static_cast<std::size_t>(n)) {}

  std::vector<TupleBNPlus> run(bool require_exact_budget) {
    exact_ = require_exact_budget;
    out_.clear();
    walk_block(n_, 0, budget_);
    return std::move(out_);
  }

 private:
  void walk_block(int j, int shift, int budget) {
    if (j == 0) {
      if (!exact_ || budget == 0) out_.emplace_back(blocks_);
      return;
    }
    std::vector<int> current;
    grow(j, shift, budget, current);
  }

  void grow(int j, int shift, int budget, std::vector<int>& current) {
    blocks_[static_cast<std::size_t>(j - 1)] = SeqB(current);
    walk_block(j - 1, shift + static_cast<int>(current.size()), budget);
    const int index = static_cast<int>(current.size());
    int value = current.empty() ? shift : current.back() + 1;
    for (;; ++value) {
      if (!fits_(shift, index, value, budget)) break;
      current.push_back(value);
      grow(j, shift, budget - cost_(shift, index, value), current);
      current.pop_back();
    }
  }

  int n_;
  int budget_;
  bool exact_ = false;
  Bound fits_;
  std::function<int(int, int, int)> cost_;
  std::vector<SeqB> blocks_;
  std::vector<TupleBNPlus> out_;
};

std::vector<int> column_order_entries(const TupleBNPlus& t) {
  std::vector<int> flat;
  for (int j = t.dimension(); j >= 1; --j) {
    const auto& e = t.block(j).entries();
    flat.insert(flat.end(), e.begin(), e.end());
  }
  return flat;
}

std::vector<int> lengths_desc(const TupleBNPlus& t) {
  std::vector<int> out;
  for (int j = t.dimension(); j >= 1; --j) out.push_back(t.length(j));
  return out;
}

}  // namespace

std::vector<TupleBNPlus> enumerate_weight(int n, int p) {
  require_dimension(n);
  if (p < 0) return {};
  // Entry i (0-based) of a block with shift s costs value - s - i + 1 >= 1.
  auto cost = [](int shift, int index, int value) { return value - shift - index + 1; };
  StaircaseWalker walker(
      n, p,
      [cost](int shift, int index, int value, int budget) {
        return cost(shift, index, value) <= budget;
      },
      cost);
  std::vector<TupleBNPlus> out = walker.run(true);
  std::sort(out.begin(), out.end(), [](const TupleBNPlus& a, const TupleBNPlus& b) {
    return std::make_tuple(a.total_length(), column_order_entries(a), lengths_desc(a)) <
           std::make_tuple(b.total_length(), column_order_entries(b), lengths_desc(b));
  });
  return out;
}

std::vector<TupleBNPlus> enumerate_degree(int n, int d) {
  require_dimension(n);
  if (d < 0) throw InvalidArgument("enumerate_degree: d must be >= 0");
  StaircaseWalker walker(
      n, 0, [d](int, int, int value, int) { return value <= d - 1; },
      [](int, int, int) { return 0; });
  std::vector<TupleBNPlus> out = walker.run(false);
  std::vector<std::pair<std::vector<int>, TupleBNPlus>> keyed;
  keyed.reserve(out.size());
  for (auto& t : out) keyed.emplace_back(decode(t, d), std::move(t));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [w, t] : keyed) out.push_back(std::move(t));
  return out;
}

TupleBNPlus encode(const std::vector<int>& word, int n) {
  require_dimension(n);
  for (int u : word) {
    if (u < 0 || u > n) {
      throw InvalidArgument("encode: symbol " + std::to_string(u) + " outside [0, " +
                            std::to_string(n) + "]");
    }
  }
  std::vector<SeqB> blocks(static_cast<std::size_t>(n));
  std::vector<int> remaining = word;
  int removed = 0;
  for (int j = n; j >= 1; --j) {
    std::vector<int> positions;
    std::vector<int> survivors;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (remaining[i] == j) {
        positions.push_back(removed + static_cast<int>(i));
      } else {
        survivors.push_back(remaining[i]);
      }
    }
    removed += static_cast<int>(positions.size());
    blocks[static_cast<std::size_t>(j - 1)] = SeqB(std::move(positions));
    remaining = std::move(survivors);
  }
  return TupleBNPlus(std::move(blocks));
}

std::vector<int> decode(const TupleBNPlus& t, int d) {
  if (d < 0) throw InvalidArgument("decode: d must be >= 0");
  if (t.max_entry() > d - 1) {
    throw InvalidArgument("decode: tuple " + t.to_string() + " has an entry >= d = " +
                          std::to_string(d));
  }
  const int n = t.dimension();
  std::vector<int> word(static_cast<std::size_t>(d), -1);
  // free_slots[k] is the position in `word` carrying label removed + k.
  std::vector<int> free_slots(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) free_slots[static_cast<std::size_t>(i)] = i;
  int removed = 0;
  for (int j = n; j >= 1; --j) {
    std::vector<bool> taken(free_slots.size(), false);
    for (int label : t.block(j).entries()) {
      const int k = label - removed;
      if (k < 0 || k >= static_cast<int>(free_slots.size())) {
        throw InvalidArgument("decode: inconsistent tuple " + t.to_string());
      }
      word[static_cast<std::size_t>(free_slots[static_cast<std::size_t>(k)])] = j;
      taken[static_cast<std::size_t>(k)] = true;
    }
    std::vector<int> next;
    for (std::size_t k = 0; k < free_slots.size(); ++k) {
      if (!taken[k]) next.push_back(free_slots[k]);
    }
    removed += t.length(j);
    free_slots = std::move(next);
  }
  for (int& u : word) {
    if (u < 0) u = 0;
  }
  return word;
}

Monomial monomial_of(const TupleAN& a) {
  std::vector<Factor> factors;
  for (int j = 1; j <= a.dimension(); ++j) {
    for (int order : a.block(j).entries()) factors.push_back({{j, order}, 1});
  }
  return Monomial(std::move(factors));
}

TupleAN tuple_of(const Monomial& m, int n) {
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(n));
  for (const Factor& f : m.factors()) {
    if (f.var.coord < 1 || f.var.coord > n) {
      throw InvalidArgument("tuple_of: coordinate " + std::to_string(f.var.coord) +
                            " outside [1, " + std::to_string(n) + "]");
    }
    auto& b = blocks[static_cast<std::size_t>(f.var.coord - 1)];
    b.insert(b.end(), static_cast<std::size_t>(f.exponent), f.var.order);
  }
  std::vector<SeqA> seqs;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    seqs.emplace_back(std::move(b));
  }
  return TupleAN(std::move(seqs));
}

}  // namespace jetsections
