#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pomsetcodes/mset.hpp"

namespace pomsetcodes {

enum class PomsetKind { chain, antichain };
enum class SumMode { direct, ordinal };

// One stored member of an mset relation: from_count/from_point R to_count/to_point.
struct RelationPair {
  int from_point;
  int from_count;
  int to_point;
  int to_count;
  friend bool operator==(const RelationPair&, const RelationPair&) = default;
};

// Partially ordered multiset on the carrier {floor(m/2)/1, ..., floor(m/2)/s}.
//
// The relation is an explicit pair set with reflexive pairs stored, so the
// order axioms (reflexive, antisymmetric, transitive) are validated by plain
// pair scans at construction. No transitive reduction is kept.
class Pomset {
 public:
  static Pomset chain(int s, int m);
  static Pomset antichain(int s, int m);

  // Pomset whose strict pairs are exactly below_pairs (a below b), each with
  // full counts; reflexive pairs are inserted automatically and the order
  // axioms are validated.
  static Pomset from_strict_pairs(int s, int m,
                                  const std::vector<std::pair<int, int>>& below_pairs);

  int modulus() const { return m_; }
  int point_count() const { return carrier_.base_size(); }
  // The uniform per-point count floor(m/2).
  int uniform_count() const { return m_ / 2; }
  const Mset& carrier() const { return carrier_; }

  bool related(int a, int b) const;
  // Counts (p, q) of the stored pair p/a R q/b; throws if not related.
  std::pair<int, int> relation_counts(int a, int b) const;
  std::vector<RelationPair> relation_pairs() const;

  bool is_chain() const;
  bool is_antichain() const;

  // Same carrier, every relation pair reversed.
  Pomset dual() const;

  // Order ideal generated by a submset of the carrier: each generator point
  // pulls in, for every distinct point strictly below it, the full count
  // carried by the stored relation pair.
  Mset ideal(const Mset& generators) const;

  // Carrier point a becomes new_point[a-1]; new_point must be a permutation
  // of 1..s.
  Pomset relabeled(const std::vector<int>& new_point) const;

  friend Pomset direct_sum(const Pomset& p1, const Pomset& p2);
  friend Pomset ordinal_sum(const Pomset& p1, const Pomset& p2);

  friend bool operator==(const Pomset&, const Pomset&) = default;

 private:
  Pomset(int m, int s);
  void insert_pair(int a, int p, int b, int q);
  void insert_reflexive_pairs();
  void validate() const;

  int m_;
  Mset carrier_;
  // (a, b) -> (p, q) meaning p/a R q/b.
  std::map<std::pair<int, int>, std::pair<int, int>> relation_;
};

Pomset make_pomset(int s, int m, PomsetKind kind);
Pomset combine_pomsets(const Pomset& p1, const Pomset& p2, SumMode mode);

inline Pomset dual_pomset(const Pomset& p) { return p.dual(); }
inline Mset ideal_of(const Pomset& p, const Mset& generators) { return p.ideal(generators); }

}  // namespace pomsetcodes
