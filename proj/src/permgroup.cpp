#include "geodex/permgroup.hpp"

#include <algorithm>
#include <stdexcept>

// Deterministic Schreier-Sims. The chain is grown incrementally: when a
// Schreier generator of level i fails to sift at level j, the residue is
// appended to the strong sets of levels i+1..j and processing restarts at j.
// Orbits are extended, never rebuilt, so witness transversals stay stable and
// (orbit point, generator) pairs can be marked done once processed.

namespace geodex {

namespace {

class Builder {
 public:
  Builder(std::vector<Perm> gens, int degree, std::vector<int> prescribed)
      : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("PermGroup: negative degree");
    for (const Perm& g : gens) {
      if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
      if (!g.is_identity()) gens_.push_back(g);
    }
    for (int p : prescribed) {
      if (p < 0 || p >= degree) throw std::invalid_argument("PermGroup: base point out of range");
      for (const ChainLevel& l : levels_)
        if (l.base == p) throw std::invalid_argument("PermGroup: duplicate base point");
      append_level(p);
    }
    prescribed_len_ = levels_.size();
    for (const Perm& g : gens_) insert_generator(g);
    close();
  }

  std::vector<Perm> take_gens() { return std::move(gens_); }
  std::vector<ChainLevel> take_levels() {
    for (ChainLevel& l : levels_) l.orbit_pos.shrink_to_fit();
    return std::move(levels_);
  }
  std::size_t prescribed_len() const { return prescribed_len_; }

 private:
  struct LevelState {
    // pairs_done[i] = generators already paired with orbit[i]; generator
    // lists only grow and orbit entries are stable, so a counter suffices
    std::vector<std::size_t> pairs_done;
  };

  int degree_;
  std::vector<Perm> gens_;
  std::vector<ChainLevel> levels_;
  std::vector<LevelState> state_;
  std::size_t prescribed_len_ = 0;

  void append_level(int base) {
    ChainLevel l;
    l.base = base;
    l.orbit_pos.assign(static_cast<std::size_t>(degree_), -1);
    l.orbit.push_back(base);
    l.orbit_pos[static_cast<std::size_t>(base)] = 0;
    l.transversal.push_back(Perm::identity(degree_));
    l.itransversal.push_back(Perm::identity(degree_));
    levels_.push_back(std::move(l));
    state_.emplace_back();
    state_.back().pairs_done.push_back(0);
  }

  // BFS closure pass; existing orbit entries and witnesses are untouched
  void extend_orbit(std::size_t li) {
    ChainLevel& l = levels_[li];
    for (std::size_t i = 0; i < l.orbit.size(); ++i) {
      for (const Perm& s : l.gens) {
        int w = s[l.orbit[i]];
        if (l.orbit_pos[static_cast<std::size_t>(w)] < 0) {
          l.orbit_pos[static_cast<std::size_t>(w)] = static_cast<int>(l.orbit.size());
          l.orbit.push_back(w);
          Perm t = compose(l.transversal[i], s);
          l.itransversal.push_back(t.inverse());
          l.transversal.push_back(std::move(t));
          state_[li].pairs_done.push_back(0);
        }
      }
    }
  }

  // sift g through levels [from..); returns residue and the level index
  // where sifting stopped (levels_.size() on a full sift)
  std::pair<std::vector<int>, std::size_t> strip(std::vector<int> img, std::size_t from) const {
    for (std::size_t li = from; li < levels_.size(); ++li) {
      const ChainLevel& l = levels_[li];
      int v = img[static_cast<std::size_t>(l.base)];
      int pos = l.orbit_pos[static_cast<std::size_t>(v)];
      if (pos < 0) return {std::move(img), li};
      const std::vector<int>& it = l.itransversal[static_cast<std::size_t>(pos)].images();
      for (std::size_t x = 0; x < img.size(); ++x) img[x] = it[static_cast<std::size_t>(img[x])];
    }
    return {std::move(img), levels_.size()};
  }

  static bool is_identity(const std::vector<int>& img) {
    for (std::size_t x = 0; x < img.size(); ++x)
      if (img[x] != static_cast<int>(x)) return false;
    return true;
  }

  static int smallest_moved(const std::vector<int>& img) {
    for (std::size_t x = 0; x < img.size(); ++x)
      if (img[x] != static_cast<int>(x)) return static_cast<int>(x);
    return -1;
  }

  // record the residue h (fixing bases < at) as a strong generator of levels
  // [lo..at], creating a new deepest level if it sifted off the end
  std::size_t add_strong(std::vector<int> img, std::size_t lo, std::size_t at) {
    if (at == levels_.size()) append_level(smallest_moved(img));
    Perm h{std::move(img)};
    for (std::size_t l = lo; l <= at; ++l) {
      levels_[l].gens.push_back(h);
      extend_orbit(l);
    }
    return at;
  }

  void insert_generator(const Perm& g) {
    auto [img, at] = strip(g.images(), 0);
    if (is_identity(img)) return;
    add_strong(std::move(img), 0, at);
  }

  // process Schreier generators of one level; returns the level where a new
  // strong generator landed, if any
  std::optional<std::size_t> process_level(std::size_t li) {
    extend_orbit(li);
    ChainLevel& l = levels_[li];
    LevelState& st = state_[li];
    std::vector<int> scratch(static_cast<std::size_t>(degree_));
    for (std::size_t i = 0; i < l.orbit.size(); ++i) {
      while (st.pairs_done[i] < l.gens.size()) {
        const Perm& s = l.gens[st.pairs_done[i]++];
        int w = s[l.orbit[i]];
        const std::vector<int>& tv = l.transversal[i].images();
        const std::vector<int>& sv = s.images();
        const std::vector<int>& itw =
            l.itransversal[static_cast<std::size_t>(l.orbit_pos[static_cast<std::size_t>(w)])].images();
        for (std::size_t x = 0; x < scratch.size(); ++x)
          scratch[x] = itw[static_cast<std::size_t>(sv[static_cast<std::size_t>(tv[x])])];
        if (is_identity(scratch)) continue;
        auto [img, at] = strip(scratch, li + 1);
        if (is_identity(img)) continue;
        return add_strong(std::move(img), li + 1, at);
      }
    }
    return std::nullopt;
  }

  void close() {
    if (levels_.empty()) return;
    std::size_t i = levels_.size();
    while (i > 0) {
      if (auto j = process_level(i - 1)) {
        i = *j + 1;
      } else {
        --i;
      }
    }
  }
};

}  // namespace

PermGroup PermGroup::from_generators(std::vector<Perm> gens, int degree,
                                     std::vector<int> base_prefix) {
  Builder b(std::move(gens), degree, std::move(base_prefix));
  PermGroup g;
  g.degree_ = degree;
  g.gens_ = b.take_gens();
  g.prescribed_len_ = b.prescribed_len();
  g.chain_ = b.take_levels();
  return g;
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  b.reserve(chain_.size());
  for (const ChainLevel& l : chain_) b.push_back(l.base);
  return b;
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (const ChainLevel& l : chain_) o *= static_cast<unsigned long>(l.orbit.size());
  return o;
}

bool PermGroup::is_trivial() const {
  for (const ChainLevel& l : chain_)
    if (l.orbit.size() > 1) return false;
  return true;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  std::vector<int> img = p.images();
  for (const ChainLevel& l : chain_) {
    int v = img[static_cast<std::size_t>(l.base)];
    int pos = l.orbit_pos[static_cast<std::size_t>(v)];
    if (pos < 0) return false;
    const std::vector<int>& it = l.itransversal[static_cast<std::size_t>(pos)].images();
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = it[static_cast<std::size_t>(img[x])];
  }
  for (std::size_t x = 0; x < img.size(); ++x)
    if (img[x] != static_cast<int>(x)) return false;
  return true;
}

std::vector<int> PermGroup::orbit(int x) const {
  if (x < 0 || x >= degree_) throw std::invalid_argument("orbit: point out of range");
  std::vector<int> orb{x};
  std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
  seen[static_cast<std::size_t>(x)] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (const Perm& g : gens_) {
      int w = g[orb[i]];
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        orb.push_back(w);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

bool PermGroup::is_transitive_on(const std::vector<int>& S) const {
  if (S.empty()) return true;
  std::vector<int> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  return orbit(sorted.front()) == sorted;
}

PermGroup PermGroup::rebased(const std::vector<int>& base_prefix) const {
  return from_generators(gens_, degree_, base_prefix);
}

PermGroup PermGroup::stabilizer_at(std::size_t k) const {
  if (k > prescribed_len_) throw std::invalid_argument("stabilizer_at: beyond prescribed base");
  PermGroup g;
  g.degree_ = degree_;
  g.chain_.assign(chain_.begin() + static_cast<std::ptrdiff_t>(k), chain_.end());
  g.gens_ = g.chain_.empty() ? std::vector<Perm>{} : g.chain_.front().gens;
  g.prescribed_len_ = prescribed_len_ - k;
  return g;
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& pts) const {
  return rebased(pts).stabilizer_at(pts.size());
}

}  // namespace geodex
