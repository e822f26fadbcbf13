#include "subcode/code.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "subcode/error.hpp"

namespace subcode {

AdditionTable::AdditionTable(const std::vector<std::vector<int>>& rows)
    : size_(static_cast<int>(rows.size())) {
  data_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorKind::MalformedCode, "addition table is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

std::vector<std::vector<int>> AdditionTable::rows() const {
  std::vector<std::vector<int>> out(size_);
  for (int i = 0; i < size_; ++i) out[i].assign(data_.begin() + i * size_, data_.begin() + (i + 1) * size_);
  return out;
}

SubspaceCode::SubspaceCode(Field field, int n, std::vector<Subspace> words,
                           std::optional<AdditionTable> table)
    : field_(std::move(field)), n_(n), words_(std::move(words)), table_(std::move(table)) {
  if (!field_) throw Error(ErrorKind::BadParameters, "code requires a field");
  if (n_ < 0 || n_ > kMaxAmbientDim) throw Error(ErrorKind::ScaleCap, "ambient dimension out of range");
  if (words_.empty() || !words_.front().is_zero())
    throw Error(ErrorKind::MalformedCode, "{0} must be the first word");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Subspace& w = words_[i];
    if (w.ambient_dim() != n_ || !same_field(w.field(), field_))
      throw Error(ErrorKind::DimensionMismatch, "word " + std::to_string(i) + " lives in another space");
    if (!index_.emplace(w, static_cast<int>(i)).second)
      throw Error(ErrorKind::MalformedCode, "duplicate word " + w.to_string());
  }
  if (table_) {
    const int m = size();
    if (table_->size() != m) throw Error(ErrorKind::MalformedCode, "table size differs from word count");
    for (int v : table_->flat())
      if (v < 0 || v >= m) throw Error(ErrorKind::MalformedCode, "table entry out of range");
  }
}

SubspaceCode SubspaceCode::canonical(Field field, int n, std::vector<Subspace> words,
                                     std::optional<AdditionTable> table) {
  const int m = static_cast<int>(words.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return words[a] < words[b]; });
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;
  std::vector<Subspace> sorted;
  sorted.reserve(m);
  for (int i : order) sorted.push_back(words[i]);
  std::optional<AdditionTable> permuted;
  if (table) {
    if (table->size() != m) throw Error(ErrorKind::MalformedCode, "table size differs from word count");
    permuted.emplace(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const int v = table->at(i, j);
        if (v < 0 || v >= m) throw Error(ErrorKind::MalformedCode, "table entry out of range");
        permuted->set(pos[i], pos[j], pos[v]);
      }
  }
  return SubspaceCode(std::move(field), n, std::move(sorted), std::move(permuted));
}

const AdditionTable& SubspaceCode::table() const {
  if (!table_) throw Error(ErrorKind::MissingTable, "code has no addition table");
  return *table_;
}

SubspaceCode SubspaceCode::with_table(AdditionTable table) const {
  return SubspaceCode(field_, n_, words_, std::move(table));
}

SubspaceCode SubspaceCode::without_table() const { return SubspaceCode(field_, n_, words_); }

std::optional<int> SubspaceCode::index_of(const Subspace& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CodeGeometry geometry(const SubspaceCode& code) {
  CodeGeometry g;
  g.size = code.size();
  g.dims.reserve(g.size);
  for (const Subspace& w : code.words()) g.dims.push_back(w.dim());
  g.meet_dims.assign(static_cast<std::size_t>(g.size) * g.size, 0);
  for (int i = 0; i < g.size; ++i) {
    for (int j = i; j < g.size; ++j) {
      const int met = i == j ? g.dims[i] : g.dims[i] + g.dims[j] - sum_dim(code.word(i), code.word(j));
      g.meet_dims[static_cast<std::size_t>(i) * g.size + j] = met;
      g.meet_dims[static_cast<std::size_t>(j) * g.size + i] = met;
    }
  }
  return g;
}

void CheckReport::ran(std::string_view check) {
  if (std::find(checks_.begin(), checks_.end(), check) == checks_.end()) checks_.emplace_back(check);
}

void CheckReport::fail(std::string_view check, std::vector<int> witness, std::string detail) {
  ran(check);
  for (Violation& v : violations_) {
    if (v.check == check) {
      ++v.count;
      return;
    }
  }
  violations_.push_back({std::string(check), std::move(witness), std::move(detail), 1});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& c : other.checks_) ran(c);
  for (const Violation& v : other.violations_) {
    auto it = std::find_if(violations_.begin(), violations_.end(),
                           [&](const Violation& mine) { return mine.check == v.check; });
    if (it == violations_.end())
      violations_.push_back(v);
    else
      it->count += v.count;
  }
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

const Violation* CheckReport::find(std::string_view check) const {
  for (const Violation& v : violations_)
    if (v.check == check) return &v;
  return nullptr;
}

bool is_power_of_two(std::size_t m) noexcept { return m != 0 && (m & (m - 1)) == 0; }

int exact_log2(std::size_t m) {
  if (!is_power_of_two(m)) throw Error(ErrorKind::BadParameters, std::to_string(m) + " is not a power of two");
  int k = 0;
  while ((std::size_t{1} << k) < m) ++k;
  return k;
}

CheckReport is_quasi_linear(const SubspaceCode& code) {
  const AdditionTable& t = code.table();
  const int m = code.size();
  CheckReport r;
  for (auto name : {"Prop2.power_of_two", "Def1.ii.identity", "Def1.iii.self_inverse", "Def1.i.commutative",
                    "Def1.i.row_permutation", "Def1.i.associativity"})
    r.ran(name);

  if (!is_power_of_two(static_cast<std::size_t>(m)))
    r.fail("Prop2.power_of_two", {m}, "a quasi-linear code has power-of-two size");
  for (int i = 0; i < m; ++i) {
    if (t.at(i, 0) != i || t.at(0, i) != i) r.fail("Def1.ii.identity", {i});
    if (t.at(i, i) != 0) r.fail("Def1.iii.self_inverse", {i});
    for (int j = i + 1; j < m; ++j)
      if (t.at(i, j) != t.at(j, i)) r.fail("Def1.i.commutative", {i, j});
    std::vector<char> seen(m, 0);
    for (int j = 0; j < m; ++j) {
      const int v = t.at(i, j);
      if (seen[v]) {
        r.fail("Def1.i.row_permutation", {i, j});
        break;
      }
      seen[v] = 1;
    }
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int ab = t.at(a, b);
      for (int c = 0; c < m; ++c)
        if (t.at(ab, c) != t.at(a, t.at(b, c))) r.fail("Def1.i.associativity", {a, b, c});
    }
  if (r.passed()) r.note("group conditions hold; size " + std::to_string(m) + " is a power of two");
  return r;
}

namespace {

CheckReport isometry_scan(const SubspaceCode& code, const CodeGeometry& g) {
  const AdditionTable& t = code.table();
  const int m = code.size();
  CheckReport r;
  r.ran("Def1.iv.isometry");
  for (int x = 0; x < m; ++x)
    for (int y1 = 0; y1 < m; ++y1)
      for (int y2 = y1 + 1; y2 < m; ++y2)
        if (g.distance(t.at(x, y1), t.at(x, y2)) != g.distance(y1, y2))
          r.fail("Def1.iv.isometry", {x, y1, y2},
                 "d(X⊞Y1, X⊞Y2) = " + std::to_string(g.distance(t.at(x, y1), t.at(x, y2))) +
                     " but d(Y1, Y2) = " + std::to_string(g.distance(y1, y2)));
  return r;
}

bool require_linear(const SubspaceCode& code, Precondition pre, CheckReport& r) {
  CheckReport lin = is_linear(code);
  if (lin.passed()) return true;
  if (pre == Precondition::Enforce) throw Error(ErrorKind::NotLinear, "code fails the linearity checks");
  r.fail("Precondition.linear", lin.violations().front().witness, "checks run on a non-linear code");
  return false;
}

}  // namespace

CheckReport is_linear(const SubspaceCode& code) {
  CheckReport r = is_quasi_linear(code);
  r.merge(isometry_scan(code, geometry(code)));
  return r;
}

CheckReport verify_lemma_suite(const SubspaceCode& code, Precondition pre) {
  CheckReport r;
  (void)code.table();
  require_linear(code, pre, r);
  const AdditionTable& t = code.table();
  const CodeGeometry g = geometry(code);
  const int m = code.size();
  for (auto name : {"Lemma2.dim", "Lemma3.cancellation", "Lemma4.direct_sum", "Lemma5.i", "Lemma5.ii",
                    "Lemma6.bound", "Lemma6.equality", "Lemma7.a", "Lemma7.b"})
    r.ran(name);

  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int z = t.at(x, y);
      if (g.dims[z] != g.distance(x, y)) r.fail("Lemma2.dim", {x, y});
      if (t.at(x, z) != y) r.fail("Lemma3.cancellation", {x, y});
      if (g.meet_dim(x, y) == 0) {
        if (g.dims[z] != g.dims[x] + g.dims[y] || code.word(z) != sum(code.word(x), code.word(y)))
          r.fail("Lemma4.direct_sum", {x, y});
      }
      if (g.dims[x] != g.meet_dim(x, y) + g.meet_dim(x, z)) r.fail("Lemma5.i", {x, y});
      if (g.dims[z] != g.meet_dim(x, z) + g.meet_dim(y, z)) r.fail("Lemma5.ii", {x, y});
      if (g.dims[z] < g.dims[x] - g.dims[y]) r.fail("Lemma6.bound", {x, y});
      if ((g.dims[z] == g.dims[x] - g.dims[y]) != g.contained(y, x)) r.fail("Lemma6.equality", {x, y});
      if (x != y && x != 0 && y != 0) {
        const bool y_in_x = g.contained(y, x);  // proper, since the words differ
        const bool z_in_x = g.contained(z, x) && z != x;
        if (y_in_x != z_in_x) r.fail("Lemma7.a", {x, y});
        if (y_in_x != (g.meet_dim(y, z) == 0)) r.fail("Lemma7.b", {x, y});
      }
    }
  }
  return r;
}

CheckReport verify_union_intersection(const SubspaceCode& code, Precondition pre) {
  CheckReport r;
  (void)code.table();
  require_linear(code, pre, r);
  const AdditionTable& t = code.table();
  const int m = code.size();
  for (auto name : {"UIT.iff", "UIT.trivial_meet", "UIT.direct_sum", "UIT.boxplus_form"}) r.ran(name);

  std::size_t caveats = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = x; y < m; ++y) {
      const Subspace& wx = code.word(x);
      const Subspace& wy = code.word(y);
      const Subspace meet = intersect(wx, wy);
      const Subspace join = sum(wx, wy);
      const auto mi = code.index_of(meet);
      const auto ji = code.index_of(join);
      const int z = t.at(x, y);
      if (mi.has_value() != ji.has_value()) {
        r.fail("UIT.iff", {x, y});
        continue;
      }
      if (!mi) {
        if (!intersect(meet, code.word(z)).is_zero()) ++caveats;
        continue;
      }
      if (!intersect(meet, code.word(z)).is_zero()) r.fail("UIT.trivial_meet", {x, y});
      const Subspace rebuilt = sum(code.word(z), meet);
      if (rebuilt != join || join.dim() != code.word(z).dim() + meet.dim()) r.fail("UIT.direct_sum", {x, y});
      if (t.at(z, *mi) != *ji) r.fail("UIT.boxplus_form", {x, y});
    }
  }
  if (caveats) {
    r.note(std::to_string(caveats) +
           " pair(s) with X∩Y and X+Y outside the code have (X∩Y)∩(X⊞Y) ≠ {0}");
  }
  return r;
}

std::optional<std::pair<int, int>> first_unclosed_pair(const SubspaceCode& code) {
  const int m = code.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!code.index_of(intersect(code.word(i), code.word(j)))) return std::pair{i, j};
  return std::nullopt;
}

bool is_closed_under_intersection(const SubspaceCode& code) { return !first_unclosed_pair(code); }

bool is_closed_under_sum(const SubspaceCode& code) {
  const int m = code.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!code.index_of(sum(code.word(i), code.word(j)))) return false;
  return true;
}

CheckReport closure_report(const SubspaceCode& code) {
  CheckReport r;
  r.ran("Closure.intersection");
  r.ran("Closure.sum");
  const int m = code.size();
  bool meet_closed = true;
  bool join_closed = true;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!code.index_of(intersect(code.word(i), code.word(j)))) {
        meet_closed = false;
        r.fail("Closure.intersection", {i, j});
      }
      if (!code.index_of(sum(code.word(i), code.word(j)))) {
        join_closed = false;
        r.fail("Closure.sum", {i, j});
      }
    }
  }
  if (code.has_table() && is_linear(code).passed()) {
    r.ran("UIT.closure_agreement");
    if (meet_closed != join_closed) r.fail("UIT.closure_agreement", {}, "linear code closed under only one operation");
  }
  return r;
}

int minimum_distance(const SubspaceCode& code) {
  const int m = code.size();
  if (m < 2) throw Error(ErrorKind::TooFewWords, "minimum distance needs two words");
  int best = -1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int d = subspace_distance(code.word(i), code.word(j));
      if (best < 0 || d < best) best = d;
    }
  return best;
}

bool is_constant_dimension(const SubspaceCode& code, bool ignore_zero) {
  std::optional<int> dim;
  for (const Subspace& w : code.words()) {
    if (ignore_zero && w.is_zero()) continue;
    if (!dim) dim = w.dim();
    if (w.dim() != *dim) return false;
  }
  return true;
}

BitWord parse_bits(std::string_view text) {
  BitWord out;
  for (char c : text) {
    if (c == '0' || c == '1')
      out.push_back(c == '1');
    else
      throw Error(ErrorKind::ParseError, "bit words use only 0 and 1");
  }
  return out;
}

CheckReport binary_word_identity_check(const BitWord& x, const BitWord& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "binary words differ in length");
  using Support = std::set<int>;
  auto supp = [](const BitWord& w) {
    Support s;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i]) s.insert(static_cast<int>(i));
    return s;
  };
  auto sym_diff = [](const Support& a, const Support& b) {
    Support s;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(s, s.end()));
    return s;
  };
  auto meet = [](const Support& a, const Support& b) {
    Support s;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(s, s.end()));
    return s;
  };
  auto join = [](const Support& a, const Support& b) {
    Support s;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(s, s.end()));
    return s;
  };
  const Support sx = supp(x), sy = supp(y);
  Support xor_bits;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) xor_bits.insert(static_cast<int>(i));

  CheckReport r;
  r.ran("Analogy.sum_identity");
  r.ran("Analogy.meet_orthogonal");
  const Support plus = sym_diff(sx, sy);
  if (plus != xor_bits || sym_diff(meet(sx, sy), join(sx, sy)) != plus)
    r.fail("Analogy.sum_identity", {}, "x + y differs from (x ∗ y) + (x ∘ y)");
  if (!meet(meet(sx, sy), plus).empty()) r.fail("Analogy.meet_orthogonal", {}, "(x ∗ y) ∗ (x + y) is nonzero");
  return r;
}

}  // namespace subcode
