#include "hss/group.hpp"

#include <string>

namespace hss {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> orders)
    : orders_(std::move(orders)) {
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 1) {
      fail(Err::NonPositiveOrder, "factor " + std::to_string(i) + " has order " +
                                      std::to_string(orders_[i]));
    }
  }
}

long FiniteAbelianGroup::order() const {
  long n = 1;
  for (long o : orders_) n *= o;
  return n;
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement{std::vector<long>(orders_.size(), 0)};
}

void FiniteAbelianGroup::check_member(const GroupElement& g, const char* who) const {
  if (g.residues.size() != orders_.size()) {
    fail(Err::GroupMismatch, std::string(who) + ": element has " +
                                 std::to_string(g.residues.size()) +
                                 " residues, group has rank " +
                                 std::to_string(orders_.size()));
  }
}

GroupElement FiniteAbelianGroup::op(const GroupElement& g, const GroupElement& h) const {
  check_member(g, "op");
  check_member(h, "op");
  GroupElement r;
  r.residues.resize(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    r.residues[i] = (g.residues[i] + h.residues[i]) % orders_[i];
  }
  return r;
}

GroupElement FiniteAbelianGroup::inv(const GroupElement& g) const {
  check_member(g, "inv");
  GroupElement r;
  r.residues.resize(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    r.residues[i] = (orders_[i] - g.residues[i]) % orders_[i];
  }
  return r;
}

GroupElement FiniteAbelianGroup::reduce(std::vector<long> residues) const {
  GroupElement g{std::move(residues)};
  check_member(g, "reduce");
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    long r = g.residues[i] % orders_[i];
    if (r < 0) r += orders_[i];
    g.residues[i] = r;
  }
  return g;
}

std::vector<GroupElement> FiniteAbelianGroup::enumerate() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  GroupElement cur = identity();
  while (true) {
    out.push_back(cur);
    // odometer increment, most significant residue first
    std::size_t i = orders_.size();
    while (i > 0) {
      --i;
      if (++cur.residues[i] < orders_[i]) break;
      cur.residues[i] = 0;
      if (i == 0) return out;
    }
    if (orders_.empty()) return out;
  }
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const {
  if (g.residues.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (g.residues[i] < 0 || g.residues[i] >= orders_[i]) return false;
  }
  return true;
}

FiniteAbelianGroup trivial_group() {
  return FiniteAbelianGroup(std::vector<long>{});
}

}  // namespace hss
