// Copyright 2026 The symrig Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite plane point groups C_s, C_k and C_kv with exact element arithmetic.
//
// Every element is kept in the normal form s^b * r^j, where r is the rotation
// by 2*pi/k and s is the reflection in the x-axis. The reflection group C_s is
// handled as the dihedral group with k = 1 but keeps its own kind.

#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "symrig/error.hpp"

namespace symrig {

enum class GroupKind { reflection, cyclic, dihedral };

/// Normal form s^reflection * r^rotation.
struct GroupElement {
  int rotation = 0;
  bool reflection = false;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline constexpr GroupElement kIdentity{};

enum class SubgroupClass { trivial, cyclic_nontrivial, dihedral };

inline std::string_view to_string(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::trivial: return "trivial";
    case SubgroupClass::cyclic_nontrivial: return "cyclic_nontrivial";
    case SubgroupClass::dihedral: return "dihedral";
  }
  return "?";
}

class Subgroup;

class GroupSpec {
 public:
  static GroupSpec reflection() { return GroupSpec(GroupKind::reflection, 1); }
  static GroupSpec cyclic(int k) {
    if (k < 1) throw InvalidInput("cyclic group requires k >= 1");
    return GroupSpec(GroupKind::cyclic, k);
  }
  static GroupSpec dihedral(int k) {
    if (k < 1) throw InvalidInput("dihedral group requires k >= 1");
    return GroupSpec(GroupKind::dihedral, k);
  }

  GroupKind kind() const { return kind_; }
  /// Number of rotation steps; 1 for C_s.
  int k() const { return k_; }
  bool has_reflections() const { return kind_ != GroupKind::cyclic; }
  std::size_t order() const {
    return static_cast<std::size_t>(has_reflections() ? 2 * k_ : k_);
  }
  /// C_k, C_s and C_1v are cyclic as abstract groups.
  bool is_abstractly_cyclic() const { return kind_ != GroupKind::dihedral || k_ == 1; }

  bool contains(const GroupElement& g) const {
    return g.rotation >= 0 && g.rotation < k_ && (!g.reflection || has_reflections());
  }

  std::size_t index(const GroupElement& g) const {
    require(g);
    return static_cast<std::size_t>((g.reflection ? k_ : 0) + g.rotation);
  }

  GroupElement element(std::size_t i) const {
    if (i >= order()) throw InvalidInput("group element index out of range");
    const int ii = static_cast<int>(i);
    return GroupElement{ii % k_, ii >= k_};
  }

  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    out.reserve(order());
    for (std::size_t i = 0; i < order(); ++i) out.push_back(element(i));
    return out;
  }

  GroupElement identity() const { return kIdentity; }

  GroupElement rotation(int steps) const { return GroupElement{mod(steps), false}; }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    require(a);
    require(b);
    // s^a r^i s^b r^j = s^(a+b) r^(+-i + j); conjugating by s inverts the rotation.
    const int ra = b.reflection ? -a.rotation : a.rotation;
    return GroupElement{mod(ra + b.rotation), a.reflection != b.reflection};
  }

  GroupElement inverse(const GroupElement& g) const {
    require(g);
    if (g.reflection) return g;
    return GroupElement{mod(-g.rotation), false};
  }

  GroupElement power(const GroupElement& g, long long e) const {
    require(g);
    if (e < 0) return power(inverse(g), -e);
    if (g.reflection) return (e % 2 == 0) ? kIdentity : g;
    return GroupElement{mod(static_cast<long long>(g.rotation) * (e % k_)), false};
  }

  std::size_t order_of(const GroupElement& g) const {
    require(g);
    if (g.reflection) return 2;
    if (g.rotation == 0) return 1;
    return static_cast<std::size_t>(k_ / std::gcd(k_, g.rotation));
  }

  /// Orthogonal image of g: reflection in the x-axis composed after the rotation.
  Eigen::Matrix2d tau(const GroupElement& g) const {
    require(g);
    const double angle = 2.0 * std::numbers::pi * g.rotation / k_;
    double c = std::cos(angle), s = std::sin(angle);
    // Quarter turns are exact.
    if ((4 * g.rotation) % k_ == 0) {
      const int quarter = (4 * g.rotation / k_) % 4;
      c = quarter == 0 ? 1.0 : quarter == 2 ? -1.0 : 0.0;
      s = quarter == 1 ? 1.0 : quarter == 3 ? -1.0 : 0.0;
    }
    Eigen::Matrix2d rot;
    rot << c, -s, s, c;
    if (!g.reflection) return rot;
    Eigen::Matrix2d mirror;
    mirror << 1.0, 0.0, 0.0, -1.0;
    return mirror * rot;
  }

  /// Index of g in the cyclic numbering used by characters: the rotation step
  /// for C_k and 0/1 for C_s.
  int character_exponent(const GroupElement& g) const {
    require(g);
    if (kind_ == GroupKind::cyclic) return g.rotation;
    if (order() == 2) return g.reflection ? 1 : 0;
    throw Unsupported("characters are only defined here for C_s and C_k");
  }

  /// Size of the abstract cyclic group that characters are taken over.
  int character_modulus() const { return kind_ == GroupKind::cyclic ? k_ : 2; }

  std::string format(const GroupElement& g) const {
    require(g);
    if (!g.reflection) return g.rotation == 0 ? "id" : "r^" + std::to_string(g.rotation);
    return g.rotation == 0 ? "s" : "s*r^" + std::to_string(g.rotation);
  }

  /// Parses "id", "r", "r^j", "s", "s*r^j" (also "sr^j").
  GroupElement parse(std::string_view text) const {
    std::string t;
    for (char c : text)
      if (c != ' ') t.push_back(c);
    GroupElement g;
    std::string_view rest = t;
    if (rest == "id" || rest == "e" || rest == "1") return require(kIdentity);
    if (!rest.empty() && rest.front() == 's') {
      g.reflection = true;
      rest.remove_prefix(1);
      if (!rest.empty() && rest.front() == '*') rest.remove_prefix(1);
      if (rest.empty()) return require(g);
    }
    if (rest.empty() || rest.front() != 'r')
      throw InvalidInput("cannot parse group element '" + std::string(text) + "'");
    rest.remove_prefix(1);
    long long steps = 1;
    if (!rest.empty()) {
      if (rest.front() != '^')
        throw InvalidInput("cannot parse group element '" + std::string(text) + "'");
      rest.remove_prefix(1);
      try {
        std::size_t used = 0;
        steps = std::stoll(std::string(rest), &used);
        if (used != rest.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InvalidInput("cannot parse group element '" + std::string(text) + "'");
      }
    }
    g.rotation = mod(steps);
    return require(g);
  }

  std::string name() const {
    switch (kind_) {
      case GroupKind::reflection: return "C_s";
      case GroupKind::cyclic: return "C_" + std::to_string(k_);
      case GroupKind::dihedral: return "C_" + std::to_string(k_) + "v";
    }
    return "?";
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(GroupKind kind, int k) : kind_(kind), k_(k) {}

  int mod(long long x) const {
    const long long m = x % k_;
    return static_cast<int>(m < 0 ? m + k_ : m);
  }

  const GroupElement& require(const GroupElement& g) const {
    if (!contains(g))
      throw InvalidInput("element (r^" + std::to_string(g.rotation) +
                         (g.reflection ? ", s" : "") + ") does not belong to " + name());
    return g;
  }

  GroupKind kind_;
  int k_;
};

/// A subgroup stored as a membership table over the element indices of its group.
class Subgroup {
 public:
  explicit Subgroup(const GroupSpec& group) : group_(group), member_(group.order(), 0) {
    member_[group.index(kIdentity)] = 1;
    size_ = 1;
  }

  const GroupSpec& group() const { return group_; }
  std::size_t order() const { return size_; }
  bool contains(const GroupElement& g) const { return member_[group_.index(g)] != 0; }
  const std::vector<GroupElement>& generated_by() const { return generators_; }

  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < member_.size(); ++i)
      if (member_[i]) out.push_back(group_.element(i));
    return out;
  }

  /// Adds g and closes under multiplication. Returns true if the subgroup grew.
  bool adjoin(const GroupElement& g) {
    if (contains(g)) return false;
    generators_.push_back(g);
    std::vector<GroupElement> frontier = elements();
    std::vector<GroupElement> gens = generators_;
    // Closure by breadth-first products with the generators (finite group, so
    // closure under multiplication already gives inverses).
    std::size_t head = 0;
    while (head < frontier.size()) {
      const GroupElement x = frontier[head++];
      for (const auto& s : gens) {
        for (const GroupElement y : {group_.multiply(x, s), group_.multiply(s, x)}) {
          auto& slot = member_[group_.index(y)];
          if (!slot) {
            slot = 1;
            ++size_;
            frontier.push_back(y);
          }
        }
      }
    }
    return true;
  }

  Subgroup conjugated(const GroupElement& by) const {
    Subgroup out(group_);
    const GroupElement inv = group_.inverse(by);
    for (const auto& g : generators_) out.adjoin(group_.multiply(group_.multiply(by, g), inv));
    return out;
  }

  bool is_cyclic() const {
    for (std::size_t i = 0; i < member_.size(); ++i)
      if (member_[i] && group_.order_of(group_.element(i)) == size_) return true;
    return false;
  }

  SubgroupClass classify() const {
    if (size_ == 1) return SubgroupClass::trivial;
    return is_cyclic() ? SubgroupClass::cyclic_nontrivial : SubgroupClass::dihedral;
  }

  bool is_proper() const { return size_ < group_.order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.member_ == b.member_;
  }

 private:
  GroupSpec group_;
  std::vector<char> member_;
  std::vector<GroupElement> generators_;
  std::size_t size_ = 0;
};

inline Subgroup subgroup_generated(const GroupSpec& group, const std::vector<GroupElement>& gens) {
  Subgroup h(group);
  for (const auto& g : gens) h.adjoin(g);
  return h;
}

inline SubgroupClass classify_subgroup(const Subgroup& h) { return h.classify(); }

}  // namespace symrig
