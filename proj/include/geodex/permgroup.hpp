#ifndef GEODEX_PERMGROUP_HPP
#define GEODEX_PERMGROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "geodex/perm.hpp"

namespace geodex {

using BigInt = boost::multiprecision::cpp_int;

// One level of a stabilizer chain: base point, the strong generators fixing
// all earlier base points, and the fundamental orbit with explicit witness
// permutations (transversal[i] maps base -> orbit[i]).
struct ChainLevel {
  int base = -1;
  std::vector<Perm> gens;
  std::vector<int> orbit;          // insertion order, orbit[0] == base
  std::vector<int> orbit_pos;      // point -> index into orbit, or -1
  std::vector<Perm> transversal;   // witness base -> orbit[i]
  std::vector<Perm> itransversal;  // inverse witness orbit[i] -> base
};

// Permutation group with a base and strong generating set built by a
// deterministic Schreier-Sims. Immutable once constructed; identical
// generator lists produce identical chains.
class PermGroup {
 public:
  // base_prefix points are installed as the leading base points in order
  // (they must be distinct); further base points are chosen greedily as the
  // smallest point moved by the violating strong generator.
  static PermGroup from_generators(std::vector<Perm> gens, int degree,
                                   std::vector<int> base_prefix = {});
  static PermGroup trivial(int degree) { return from_generators({}, degree); }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<ChainLevel>& chain() const { return chain_; }
  std::vector<int> base() const;

  BigInt order() const;
  bool is_trivial() const;
  bool contains(const Perm& p) const;

  // orbit of x under the generators, sorted ascending
  std::vector<int> orbit(int x) const;
  // true iff S is a union-free single orbit: orbit(min S) == S
  bool is_transitive_on(const std::vector<int>& S) const;

  // subgroup fixing each of pts individually, realized by a base change so
  // the result carries a valid chain of its own
  PermGroup pointwise_stabilizer(const std::vector<int>& pts) const;

  // group regenerated with the given leading base points; stabilizer_at(k)
  // then reads off the subgroup fixing the first k of them
  PermGroup rebased(const std::vector<int>& base_prefix) const;
  std::size_t prescribed_len() const { return prescribed_len_; }
  PermGroup stabilizer_at(std::size_t k) const;  // requires k <= prescribed_len()

 private:
  PermGroup() = default;
  int degree_ = 0;
  std::vector<Perm> gens_;          // generators as given (identities dropped)
  std::vector<ChainLevel> chain_;
  std::size_t prescribed_len_ = 0;  // leading base points that were prescribed
};

}  // namespace geodex

#endif
