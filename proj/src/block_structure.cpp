#include "pomsetcodes/block_structure.hpp"

#include <stdexcept>

namespace pomsetcodes {

BlockStructure::BlockStructure(int m, std::vector<int> dims)
    : m_(m), dims_(std::move(dims)) {
  if (m_ < 2) throw std::invalid_argument("BlockStructure: modulus must be at least 2");
  if (dims_.empty()) throw std::invalid_argument("BlockStructure: no blocks");
  n_ = 0;
  offsets_.reserve(dims_.size());
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("BlockStructure: block width must be positive");
    offsets_.push_back(n_);
    n_ += d;
  }
}

int BlockStructure::dim(int i) const {
  if (i < 1 || i > block_count())
    throw std::invalid_argument("BlockStructure: block index out of range");
  return dims_[i - 1];
}

int BlockStructure::offset(int i) const {
  if (i < 1 || i > block_count())
    throw std::invalid_argument("BlockStructure: block index out of range");
  return offsets_[i - 1];
}

std::span<const int> BlockStructure::block(const CodeVector& u, int i) const {
  if (static_cast<int>(u.size()) != n_)
    throw std::invalid_argument("BlockStructure: vector length mismatch");
  return {u.data() + offset(i), static_cast<std::size_t>(dim(i))};
}

int lee_weight(int a, int m) {
  if (m < 2) throw std::invalid_argument("lee_weight: modulus must be at least 2");
  if (a < 0 || a >= m) throw std::invalid_argument("lee_weight: residue out of range");
  return a < m - a ? a : m - a;
}

CodeVector canonical_vector(std::vector<int> entries, int m) {
  if (m < 2) throw std::invalid_argument("canonical_vector: modulus must be at least 2");
  for (int& e : entries) {
    e %= m;
    if (e < 0) e += m;
  }
  return entries;
}

int lee_block_weight(std::span<const int> block, int m) {
  int w = 0;
  for (int a : block) w = std::max(w, lee_weight(a, m));
  return w;
}

Mset lee_block_support(const CodeVector& u, const BlockStructure& b) {
  Mset support(b.block_count());
  for (int i = 1; i <= b.block_count(); ++i)
    support.set_count(i, lee_block_weight(b.block(u, i), b.modulus()));
  return support;
}

namespace {

void check_structures(const Pomset& p, const BlockStructure& b) {
  if (p.point_count() != b.block_count() || p.modulus() != b.modulus())
    throw std::invalid_argument("pomset/block structure mismatch");
}

}  // namespace

int pomset_block_weight(const CodeVector& u, const Pomset& p, const BlockStructure& b) {
  check_structures(p, b);
  return static_cast<int>(p.ideal(lee_block_support(u, b)).cardinality());
}

int pomset_block_distance(const CodeVector& u, const CodeVector& v, const Pomset& p,
                          const BlockStructure& b) {
  if (u.size() != v.size())
    throw std::invalid_argument("pomset_block_distance: length mismatch");
  CodeVector diff(u.size());
  const int m = b.modulus();
  for (std::size_t k = 0; k < u.size(); ++k) diff[k] = ((u[k] - v[k]) % m + m) % m;
  return pomset_block_weight(diff, p, b);
}

std::string format_vector(const CodeVector& u) {
  bool digits = true;
  for (int e : u)
    if (e < 0 || e > 9) digits = false;
  std::string out;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!digits && k > 0) out += ",";
    out += std::to_string(u[k]);
  }
  return out;
}

}  // namespace pomsetcodes
