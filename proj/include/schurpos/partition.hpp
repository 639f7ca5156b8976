#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schurpos {

// Integer partition: weakly decreasing positive parts. Trailing zeros in the
// input are accepted but never stored; part(i) pads with zeros past the end.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition with negative part");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
      }
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  size_t length() const { return parts_.size(); }

  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  // 0-based; 0 beyond the stored length.
  int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> cols(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++cols[static_cast<size_t>(j)];
    }
    return Partition(std::move(cols));
  }

  bool contains(const Partition& inner) const {
    const size_t n = std::max(length(), inner.length());
    for (size_t i = 0; i < n; ++i) {
      if (inner.part(i) > part(i)) return false;
    }
    return true;
  }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Pair of partitions with the inner contained in the outer componentwise.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) {
      throw std::invalid_argument("skew shape " + outer_.str() + "/" + inner_.str() +
                                  ": inner partition not contained in outer");
    }
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  std::string str() const {
    if (inner_.length() == 0) return outer_.str();
    return outer_.str() + "/" + inner_.str();
  }

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

// Strictly increasing positive integers; minor row/column indices.
class IndexList {
 public:
  IndexList() = default;
  IndexList(std::initializer_list<int> indices) : IndexList(std::vector<int>(indices)) {}

  explicit IndexList(std::vector<int> indices) : indices_(std::move(indices)) {
    for (size_t k = 0; k < indices_.size(); ++k) {
      if (indices_[k] < 1) throw std::invalid_argument("index list entries must be >= 1");
      if (k > 0 && indices_[k] <= indices_[k - 1]) {
        throw std::invalid_argument("index list must be strictly increasing");
      }
    }
  }

  size_t size() const { return indices_.size(); }
  int operator[](size_t k) const { return indices_[k]; }
  const std::vector<int>& values() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  std::string str() const {
    std::string s = "[";
    for (size_t k = 0; k < indices_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(indices_[k]);
    }
    s += ']';
    return s;
  }

  friend auto operator<=>(const IndexList&, const IndexList&) = default;

 private:
  std::vector<int> indices_;
};

// Row and column index sets of the Toeplitz minor carrying a skew shape:
// I_k = mu_{l+1-k} + k and J_k = lambda_{l+1-k} + k with l = length(outer),
// the inner partition padded with zeros to length l.
inline std::pair<IndexList, IndexList> shape_to_index_sets(const SkewShape& shape) {
  const size_t l = shape.outer().length();
  std::vector<int> rows(l), cols(l);
  for (size_t k = 1; k <= l; ++k) {
    rows[k - 1] = shape.inner().part(l - k) + static_cast<int>(k);
    cols[k - 1] = shape.outer().part(l - k) + static_cast<int>(k);
  }
  return {IndexList(std::move(rows)), IndexList(std::move(cols))};
}

// Inverse of shape_to_index_sets. Returns nullopt when some i_k > j_k, in
// which case no skew shape exists and the corresponding minor vanishes.
inline std::optional<SkewShape> index_sets_to_shape(const IndexList& rows, const IndexList& cols) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("index lists of different lengths");
  }
  const size_t r = rows.size();
  for (size_t k = 0; k < r; ++k) {
    if (rows[k] > cols[k]) return std::nullopt;
  }
  std::vector<int> outer(r), inner(r);
  for (size_t m = 1; m <= r; ++m) {
    outer[m - 1] = cols[r - m] - static_cast<int>(r - m + 1);
    inner[m - 1] = rows[r - m] - static_cast<int>(r - m + 1);
  }
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

// All partitions of exactly n, in descending lexicographic order:
// (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions of negative weight");
  std::vector<Partition> out;
  std::vector<int> acc;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(acc);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      acc.push_back(p);
      rec(remaining - p, p);
      acc.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

// Every partition of every weight <= max_weight, exactly once, ordered by
// weight and then descending-lexicographically within a weight.
inline std::vector<Partition> enumerate_partitions(int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("enumerate_partitions with negative bound");
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto block = partitions_of(w);
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

// All partitions mu contained in outer, each exactly once. Deterministic:
// parts chosen largest-first position by position.
inline std::vector<Partition> sub_partitions(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> acc;
  std::function<void(size_t, int)> rec = [&](size_t pos, int cap) {
    out.emplace_back(acc);
    if (pos >= outer.length()) return;
    const int bound = std::min(outer.part(pos), cap);
    for (int p = bound; p >= 1; --p) {
      acc.push_back(p);
      rec(pos + 1, p);
      acc.pop_back();
    }
  };
  // every subpartition is emitted exactly once, as the prefix of the node
  // that fixes its nonzero parts
  rec(0, outer.part(0));
  return out;
}

// Calls fn with every strictly increasing r-subset of {1..window}, in
// lexicographic order.
inline void for_each_index_list(int window, int r,
                                const std::function<void(const IndexList&)>& fn) {
  if (r < 0 || window < 0) throw std::invalid_argument("negative combination bounds");
  if (r > window) return;
  std::vector<int> cur(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) cur[static_cast<size_t>(k)] = k + 1;
  while (true) {
    fn(IndexList(cur));
    int pos = r - 1;
    while (pos >= 0 && cur[static_cast<size_t>(pos)] == window - (r - 1 - pos)) --pos;
    if (pos < 0) return;
    ++cur[static_cast<size_t>(pos)];
    for (int k = pos + 1; k < r; ++k) {
      cur[static_cast<size_t>(k)] = cur[static_cast<size_t>(k - 1)] + 1;
    }
  }
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  auto fail = [&]() -> std::vector<int> {
    throw std::invalid_argument("bad " + std::string(what) + " literal: \"" + std::string(text) +
                                "\"");
  };
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return fail();
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> values;
  if (body.empty()) return values;
  size_t start = 0;
  while (true) {
    size_t comma = body.find(',', start);
    std::string_view tok =
        comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
    if (tok.empty()) return fail();
    int value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') return fail();
      value = value * 10 + (c - '0');
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace detail

// "[4,2,1]" or "[]".
inline Partition parse_partition(std::string_view text) {
  return Partition(detail::parse_int_list(text, "partition"));
}

// "[4,2,1]" or "[4,2,1]/[2,1]".
inline SkewShape parse_skew_shape(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text), Partition());
  return SkewShape(parse_partition(text.substr(0, slash)),
                   parse_partition(text.substr(slash + 1)));
}

// "1,2,4" (no brackets) -> IndexList, as accepted on the command line.
inline IndexList parse_index_list(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty index list");
  std::string bracketed = "[" + std::string(text) + "]";
  return IndexList(detail::parse_int_list(bracketed, "index list"));
}

}  // namespace schurpos
