#include "subcode/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "subcode/error.hpp"

namespace subcode {

FiniteLattice FiniteLattice::from_order(int size, std::vector<char> leq) {
  if (size < 1) throw Error(ErrorKind::NotALattice, "empty lattice");
  if (leq.size() != static_cast<std::size_t>(size) * size) throw Error(ErrorKind::NotALattice, "order matrix shape");
  FiniteLattice lat;
  lat.size_ = size;
  lat.leq_ = std::move(leq);
  lat.validate_order();
  lat.meet_.assign(lat.leq_.size(), -1);
  lat.join_.assign(lat.leq_.size(), -1);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      int glb = -1;
      int lub = -1;
      for (int c = 0; c < size; ++c) {
        if (lat.leq(c, a) && lat.leq(c, b) && (glb < 0 || lat.leq(glb, c))) glb = c;
        if (lat.leq(a, c) && lat.leq(b, c) && (lub < 0 || lat.leq(c, lub))) lub = c;
      }
      lat.meet_[lat.idx(a, b)] = glb;
      lat.join_[lat.idx(a, b)] = lub;
    }
  }
  lat.validate_bounds();
  return lat;
}

FiniteLattice FiniteLattice::from_tables(int size, std::vector<char> leq, std::vector<int> meet,
                                         std::vector<int> join) {
  if (size < 1) throw Error(ErrorKind::NotALattice, "empty lattice");
  const std::size_t cells = static_cast<std::size_t>(size) * size;
  if (leq.size() != cells || meet.size() != cells || join.size() != cells)
    throw Error(ErrorKind::NotALattice, "table shape");
  FiniteLattice lat;
  lat.size_ = size;
  lat.leq_ = std::move(leq);
  lat.meet_ = std::move(meet);
  lat.join_ = std::move(join);
  lat.validate_order();
  lat.validate_bounds();
  return lat;
}

void FiniteLattice::validate_order() const {
  for (int a = 0; a < size_; ++a) {
    if (!leq(a, a)) throw Error(ErrorKind::NotALattice, "order is not reflexive");
    for (int b = 0; b < size_; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) throw Error(ErrorKind::NotALattice, "order is not antisymmetric");
      if (!leq(a, b)) continue;
      for (int c = 0; c < size_; ++c)
        if (leq(b, c) && !leq(a, c)) throw Error(ErrorKind::NotALattice, "order is not transitive");
    }
  }
}

void FiniteLattice::validate_bounds() {
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      const int m = meet_[idx(a, b)];
      const int j = join_[idx(a, b)];
      if (m < 0 || m >= size_ || j < 0 || j >= size_)
        throw Error(ErrorKind::NotALattice, "pair without meet or join");
      if (!leq(m, a) || !leq(m, b) || !leq(a, j) || !leq(b, j))
        throw Error(ErrorKind::NotALattice, "meet/join is not a bound");
      for (int c = 0; c < size_; ++c) {
        if (leq(c, a) && leq(c, b) && !leq(c, m)) throw Error(ErrorKind::NotALattice, "meet is not greatest");
        if (leq(a, c) && leq(b, c) && !leq(j, c)) throw Error(ErrorKind::NotALattice, "join is not least");
      }
    }
  }
  bottom_ = -1;
  top_ = -1;
  for (int a = 0; a < size_; ++a) {
    bool is_bottom = true;
    bool is_top = true;
    for (int b = 0; b < size_; ++b) {
      is_bottom = is_bottom && leq(a, b);
      is_top = is_top && leq(b, a);
    }
    if (is_bottom) bottom_ = a;
    if (is_top) top_ = a;
  }
  if (bottom_ < 0 || top_ < 0) throw Error(ErrorKind::NotALattice, "missing bottom or top");
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool between = false;
      for (int c = 0; c < size_ && !between; ++c)
        between = c != a && c != b && leq(a, c) && leq(c, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

SubspaceLattice lattice_over(std::vector<Subspace> elements, const std::vector<int>& meet,
                             const std::vector<int>& join) {
  const int size = static_cast<int>(elements.size());
  std::vector<char> leq(static_cast<std::size_t>(size) * size, 0);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) leq[static_cast<std::size_t>(a) * size + b] = elements[b].contains(elements[a]);
  FiniteLattice lat = FiniteLattice::from_tables(size, std::move(leq), meet, join);
  return {std::move(elements), std::move(lat)};
}

}  // namespace

SubspaceLattice build_projective_lattice(const Field& field, int n) {
  std::vector<Subspace> elements = enumerate_projective_space(field, n);
  const int size = static_cast<int>(elements.size());
  if (size > 512) throw Error(ErrorKind::ScaleCap, "projective lattice too large");
  std::unordered_map<Subspace, int, SubspaceHash> index;
  for (int i = 0; i < size; ++i) index.emplace(elements[i], i);
  std::vector<int> meet(static_cast<std::size_t>(size) * size), join(meet.size());
  for (int a = 0; a < size; ++a) {
    for (int b = a; b < size; ++b) {
      const int m = index.at(intersect(elements[a], elements[b]));
      const int j = index.at(sum(elements[a], elements[b]));
      meet[static_cast<std::size_t>(a) * size + b] = meet[static_cast<std::size_t>(b) * size + a] = m;
      join[static_cast<std::size_t>(a) * size + b] = join[static_cast<std::size_t>(b) * size + a] = j;
    }
  }
  return lattice_over(std::move(elements), meet, join);
}

SubspaceLattice build_lattice_from_code(const SubspaceCode& code) {
  const int size = code.size();
  std::vector<int> meet(static_cast<std::size_t>(size) * size), join(meet.size());
  for (int a = 0; a < size; ++a) {
    for (int b = a; b < size; ++b) {
      const auto m = code.index_of(intersect(code.word(a), code.word(b)));
      if (!m) {
        throw Error(ErrorKind::NotMeetClosed,
                    "words " + std::to_string(a) + " and " + std::to_string(b) + " meet outside the code");
      }
      const auto j = code.index_of(sum(code.word(a), code.word(b)));
      if (!j) {
        throw Error(ErrorKind::NotJoinClosed,
                    "words " + std::to_string(a) + " and " + std::to_string(b) + " join outside the code");
      }
      meet[static_cast<std::size_t>(a) * size + b] = meet[static_cast<std::size_t>(b) * size + a] = *m;
      join[static_cast<std::size_t>(a) * size + b] = join[static_cast<std::size_t>(b) * size + a] = *j;
    }
  }
  return lattice_over(code.words(), meet, join);
}

bool is_sublattice(std::span<const int> subset, const FiniteLattice& host) {
  std::vector<char> member(host.size(), 0);
  for (int i : subset) {
    if (i < 0 || i >= host.size()) throw Error(ErrorKind::UnknownElement, "index " + std::to_string(i));
    member[i] = 1;
  }
  for (int a : subset)
    for (int b : subset)
      if (!member[host.meet(a, b)] || !member[host.join(a, b)]) return false;
  return true;
}

LawResult check_modular(const FiniteLattice& lat) {
  const int n = lat.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (lat.leq(a, c) && lat.join(a, lat.meet(b, c)) != lat.meet(lat.join(a, b), c))
          return {false, std::array{a, b, c}};
  return {};
}

LawResult check_distributive(const FiniteLattice& lat) {
  const int n = lat.size();
  LawResult meet_law;
  bool join_law = true;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (meet_law.holds && lat.meet(lat.join(a, b), c) != lat.join(lat.meet(a, c), lat.meet(b, c)))
          meet_law = {false, std::array{a, b, c}};
        if (join_law && lat.join(a, lat.meet(b, c)) != lat.meet(lat.join(a, b), lat.join(a, c)))
          join_law = false;
      }
    }
  }
  if (meet_law.holds != join_law)
    throw Error(ErrorKind::InternalInconsistency, "the two distributive laws disagree");
  return meet_law;
}

std::vector<int> atoms(const FiniteLattice& lat) {
  std::vector<int> out;
  for (auto [a, b] : lat.covers())
    if (a == lat.bottom()) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

LawResult check_geometric(const FiniteLattice& lat) {
  LawResult modular = check_modular(lat);
  if (!modular.holds) return modular;
  const std::vector<int> at = atoms(lat);
  for (int x = 0; x < lat.size(); ++x) {
    int acc = lat.bottom();
    for (int a : at)
      if (lat.leq(a, x)) acc = lat.join(acc, a);
    if (acc != x) return {false, std::array{x, x, x}};
  }
  return {};
}

int height(const FiniteLattice& lat) {
  const int n = lat.size();
  // Longest path over covers; a topological order is any linear extension,
  // obtained by sorting on the number of elements below.
  std::vector<int> below(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) below[b] += lat.leq(a, b) ? 1 : 0;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  std::vector<std::vector<int>> up(n);
  for (auto [a, b] : lat.covers()) up[a].push_back(b);
  std::vector<int> longest(n, -1);
  longest[lat.bottom()] = 0;
  for (int a : order) {
    if (longest[a] < 0) continue;
    for (int b : up[a]) longest[b] = std::max(longest[b], longest[a] + 1);
  }
  return longest[lat.top()];
}

CheckReport check_birkhoff_bound(const FiniteLattice& lat) {
  if (!check_distributive(lat).holds) throw Error(ErrorKind::NotDistributive, "bound applies to distributive lattices");
  CheckReport r;
  r.ran("Birkhoff.size_bound");
  const int h = height(lat);
  const long long bound = h >= 62 ? -1 : (1LL << h);
  if (bound >= 0 && lat.size() > bound) r.fail("Birkhoff.size_bound", {lat.size(), h});
  r.note("size " + std::to_string(lat.size()) + " <= 2^" + std::to_string(h));
  return r;
}

LatticeProfile profile(const FiniteLattice& lat) {
  LatticeProfile p;
  p.size = lat.size();
  p.height = height(lat);
  p.atoms = atoms(lat);
  p.modular = check_modular(lat);
  p.distributive = check_distributive(lat);
  p.geometric = check_geometric(lat);
  if (p.distributive.holds && !p.modular.holds)
    throw Error(ErrorKind::InternalInconsistency, "distributive lattice failed modularity");
  return p;
}

std::string hasse_dot(const FiniteLattice& lat, std::span<const std::string> labels) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < lat.size(); ++i) {
    const std::string label = i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i);
    out << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (auto [a, b] : lat.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace subcode
