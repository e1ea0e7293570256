#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pomsetcodes {

// Multiset over the base points 1..s, stored as per-point occurrence counts.
// Submset and union are the pointwise <= and max of the count functions.
class Mset {
 public:
  explicit Mset(int base_size) : counts_(checked_size(base_size), 0) {}

  static Mset uniform(int base_size, int count) {
    Mset m(base_size);
    if (count < 0) throw std::invalid_argument("Mset: negative count");
    for (auto& c : m.counts_) c = count;
    return m;
  }

  int base_size() const { return static_cast<int>(counts_.size()); }

  long long cardinality() const {
    long long total = 0;
    for (int c : counts_) total += c;
    return total;
  }

  bool empty() const { return cardinality() == 0; }

  // Points are 1-indexed.
  int count(int point) const {
    check_point(point);
    return counts_[point - 1];
  }

  void set_count(int point, int value) {
    check_point(point);
    if (value < 0) throw std::invalid_argument("Mset: negative count");
    counts_[point - 1] = value;
  }

  void raise_count(int point, int value) {
    check_point(point);
    if (value > counts_[point - 1]) counts_[point - 1] = value;
  }

  std::vector<int> root_set() const {
    std::vector<int> points;
    for (int a = 1; a <= base_size(); ++a)
      if (counts_[a - 1] > 0) points.push_back(a);
    return points;
  }

  bool submset_of(const Mset& other) const {
    if (base_size() != other.base_size())
      throw std::invalid_argument("Mset: base size mismatch");
    for (int a = 0; a < base_size(); ++a)
      if (counts_[a] > other.counts_[a]) return false;
    return true;
  }

  friend Mset mset_union(const Mset& a, const Mset& b) {
    if (a.base_size() != b.base_size())
      throw std::invalid_argument("Mset: base size mismatch");
    Mset out(a.base_size());
    for (int i = 0; i < a.base_size(); ++i)
      out.counts_[i] = a.counts_[i] > b.counts_[i] ? a.counts_[i] : b.counts_[i];
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int a = 1; a <= base_size(); ++a) {
      if (counts_[a - 1] == 0) continue;
      if (!first) out += ", ";
      out += std::to_string(counts_[a - 1]) + "/" + std::to_string(a);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const Mset&, const Mset&) = default;

 private:
  static int checked_size(int base_size) {
    if (base_size < 1) throw std::invalid_argument("Mset: base size must be positive");
    return base_size;
  }
  void check_point(int point) const {
    if (point < 1 || point > base_size())
      throw std::invalid_argument("Mset: point " + std::to_string(point) + " out of range");
  }

  std::vector<int> counts_;
};

}  // namespace pomsetcodes
