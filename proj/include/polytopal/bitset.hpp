#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace polytopal {

/// Fixed-universe bitset used for vertex-index sets. The universe size is set
/// at construction; all binary operations require equal universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  VertexSet operator&(const VertexSet& rhs) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & rhs.w_[i];
    return r;
  }
  VertexSet operator|(const VertexSet& rhs) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | rhs.w_[i];
    return r;
  }
  bool is_subset_of(const VertexSet& rhs) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~rhs.w_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& rhs) const = default;
  // Any strict total order will do; used only for canonical sorting.
  bool operator<(const VertexSet& rhs) const { return w_ < rhs.w_; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(static_cast<int>(i));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : w_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace polytopal
