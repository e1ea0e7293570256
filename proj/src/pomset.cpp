#include "pomsetcodes/pomset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pomsetcodes {

namespace {

void check_args(int s, int m) {
  if (s < 1) throw std::invalid_argument("Pomset: point count must be positive");
  if (m < 2) throw std::invalid_argument("Pomset: modulus must be at least 2");
}

}  // namespace

Pomset::Pomset(int m, int s) : m_(m), carrier_(Mset::uniform(s, m / 2)) {}

Pomset Pomset::chain(int s, int m) {
  check_args(s, m);
  Pomset p(m, s);
  const int full = p.uniform_count();
  for (int i = 1; i <= s; ++i)
    for (int j = i; j <= s; ++j) p.insert_pair(i, full, j, full);
  p.validate();
  return p;
}

Pomset Pomset::antichain(int s, int m) {
  check_args(s, m);
  Pomset p(m, s);
  p.insert_reflexive_pairs();
  p.validate();
  return p;
}

Pomset Pomset::from_strict_pairs(int s, int m,
                                 const std::vector<std::pair<int, int>>& below_pairs) {
  check_args(s, m);
  Pomset p(m, s);
  const int full = p.uniform_count();
  for (auto [a, b] : below_pairs) {
    if (a < 1 || a > s || b < 1 || b > s)
      throw std::invalid_argument("Pomset: relation pair point out of range");
    p.insert_pair(a, full, b, full);
  }
  p.insert_reflexive_pairs();
  p.validate();
  return p;
}

void Pomset::insert_pair(int a, int p, int b, int q) {
  relation_[{a, b}] = {p, q};
}

void Pomset::insert_reflexive_pairs() {
  const int full = uniform_count();
  for (int a = 1; a <= point_count(); ++a) insert_pair(a, full, a, full);
}

void Pomset::validate() const {
  const int s = point_count();
  const int full = uniform_count();
  for (const auto& [points, counts] : relation_) {
    auto [a, b] = points;
    auto [p, q] = counts;
    if (p < 1 || p > carrier_.count(a) || q < 1 || q > carrier_.count(b))
      throw std::invalid_argument("Pomset: relation pair count exceeds carrier count");
  }
  // Reflexive: full/a R full/a for every carrier point.
  for (int a = 1; a <= s; ++a) {
    auto it = relation_.find({a, a});
    if (it == relation_.end() || it->second != std::make_pair(full, full))
      throw std::invalid_argument("Pomset: relation is not reflexive");
  }
  // Antisymmetric: p/a R q/b and q/b R p/a force a == b.
  for (const auto& [points, counts] : relation_) {
    auto [a, b] = points;
    if (a == b) continue;
    auto rev = relation_.find({b, a});
    if (rev != relation_.end() && rev->second.first == counts.second &&
        rev->second.second == counts.first)
      throw std::invalid_argument("Pomset: relation is not antisymmetric");
  }
  // Transitive: p/a R q/b and q/b R k/c force p/a R k/c.
  for (const auto& [ab, pq] : relation_) {
    auto [a, b] = ab;
    for (const auto& [bc, qk] : relation_) {
      if (bc.first != b || qk.first != pq.second) continue;
      const int c = bc.second;
      auto ac = relation_.find({a, c});
      if (ac == relation_.end() || ac->second != std::make_pair(pq.first, qk.second))
        throw std::invalid_argument("Pomset: relation is not transitive");
    }
  }
}

bool Pomset::related(int a, int b) const {
  return relation_.find({a, b}) != relation_.end();
}

std::pair<int, int> Pomset::relation_counts(int a, int b) const {
  auto it = relation_.find({a, b});
  if (it == relation_.end())
    throw std::invalid_argument("Pomset: points are not related");
  return it->second;
}

std::vector<RelationPair> Pomset::relation_pairs() const {
  std::vector<RelationPair> pairs;
  pairs.reserve(relation_.size());
  for (const auto& [points, counts] : relation_)
    pairs.push_back({points.first, counts.first, points.second, counts.second});
  return pairs;
}

bool Pomset::is_chain() const {
  for (int a = 1; a <= point_count(); ++a)
    for (int b = a + 1; b <= point_count(); ++b)
      if (!related(a, b) && !related(b, a)) return false;
  return true;
}

bool Pomset::is_antichain() const {
  for (const auto& [points, counts] : relation_)
    if (points.first != points.second) return false;
  return true;
}

Pomset Pomset::dual() const {
  Pomset out(m_, point_count());
  for (const auto& [points, counts] : relation_)
    out.insert_pair(points.second, counts.second, points.first, counts.first);
  out.validate();
  return out;
}

Mset Pomset::ideal(const Mset& generators) const {
  if (!generators.submset_of(carrier_))
    throw std::invalid_argument("Pomset: generators are not a submset of the carrier");
  Mset out = generators;
  for (int a = 1; a <= point_count(); ++a) {
    if (generators.count(a) == 0) continue;
    for (const auto& [points, counts] : relation_) {
      if (points.second != a || points.first == a) continue;
      out.raise_count(points.first, counts.first);
    }
  }
  return out;
}

Pomset Pomset::relabeled(const std::vector<int>& new_point) const {
  const int s = point_count();
  if (static_cast<int>(new_point.size()) != s)
    throw std::invalid_argument("Pomset: relabeling size mismatch");
  std::vector<bool> seen(s, false);
  for (int v : new_point) {
    if (v < 1 || v > s || seen[v - 1])
      throw std::invalid_argument("Pomset: relabeling is not a permutation");
    seen[v - 1] = true;
  }
  Pomset out(m_, s);
  for (const auto& [points, counts] : relation_)
    out.insert_pair(new_point[points.first - 1], counts.first,
                    new_point[points.second - 1], counts.second);
  out.validate();
  return out;
}

Pomset direct_sum(const Pomset& p1, const Pomset& p2) {
  if (p1.modulus() != p2.modulus())
    throw std::invalid_argument("Pomset: modulus mismatch in sum");
  const int s1 = p1.point_count();
  Pomset out(p1.modulus(), s1 + p2.point_count());
  for (const auto& [points, counts] : p1.relation_)
    out.insert_pair(points.first, counts.first, points.second, counts.second);
  for (const auto& [points, counts] : p2.relation_)
    out.insert_pair(points.first + s1, counts.first, points.second + s1, counts.second);
  out.validate();
  return out;
}

Pomset ordinal_sum(const Pomset& p1, const Pomset& p2) {
  Pomset out = direct_sum(p1, p2);
  const int s1 = p1.point_count();
  const int full = out.uniform_count();
  for (int i = 1; i <= s1; ++i)
    for (int j = s1 + 1; j <= out.point_count(); ++j) out.insert_pair(i, full, j, full);
  out.validate();
  return out;
}

Pomset make_pomset(int s, int m, PomsetKind kind) {
  return kind == PomsetKind::chain ? Pomset::chain(s, m) : Pomset::antichain(s, m);
}

Pomset combine_pomsets(const Pomset& p1, const Pomset& p2, SumMode mode) {
  return mode == SumMode::direct ? direct_sum(p1, p2) : ordinal_sum(p1, p2);
}

}  // namespace pomsetcodes
