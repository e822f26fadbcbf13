#include "subcode/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "subcode/decomposition.hpp"
#include "subcode/error.hpp"

namespace subcode {

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  Budget(std::uint64_t node_budget, std::optional<Clock::time_point> deadline)
      : node_budget_(node_budget), deadline_(deadline) {}

  // Counts one node; false once the node or time budget is spent.
  bool charge() {
    if (stop_.load(std::memory_order_relaxed)) return false;
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (node_budget_ && n > node_budget_) stop_ = true;
    if (deadline_ && (n & 63u) == 0 && Clock::now() > *deadline_) stop_ = true;
    return !stop_.load(std::memory_order_relaxed);
  }
  bool stopped() const { return stop_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  std::uint64_t node_budget_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

// Backtracking over the open pairs {a, b} of nonzero words. Fixing a ⊞ b = c
// fixes the whole triple {a, b, c} because every element is its own inverse.
class TableSolver {
 public:
  TableSolver(std::span<const Subspace> words, BranchOrder order, Budget& budget, std::size_t max_tables)
      : m_(static_cast<int>(words.size())), order_(order), budget_(budget), max_tables_(max_tables) {
    zero_ = -1;
    for (int i = 0; i < m_; ++i)
      if (words[i].is_zero()) zero_ = i;
    dims_.resize(m_);
    for (int i = 0; i < m_; ++i) dims_[i] = words[i].dim();
    dist_.assign(static_cast<std::size_t>(m_) * m_, 0);
    for (int i = 0; i < m_; ++i)
      for (int j = i + 1; j < m_; ++j)
        dist_[i * m_ + j] = dist_[j * m_ + i] = subspace_distance(words[i], words[j]);

    t_.assign(static_cast<std::size_t>(m_) * m_, -1);
    for (int i = 0; i < m_; ++i) {
      set(zero_, i, i);
      set(i, i, zero_);
    }
    cand_.resize(static_cast<std::size_t>(m_) * m_);
    for (int a = 0; a < m_; ++a) {
      if (a == zero_) continue;
      for (int b = a + 1; b < m_; ++b) {
        if (b == zero_) continue;
        pairs_.emplace_back(a, b);
        auto& list = cand_[a * m_ + b];
        for (int c = 0; c < m_; ++c) {
          if (c == zero_ || c == a || c == b) continue;
          if (dims_[c] == dist(a, b) && dist(a, c) == dims_[b] && dist(b, c) == dims_[a]) list.push_back(c);
        }
        if (order_ == BranchOrder::Descending) std::reverse(list.begin(), list.end());
      }
    }
  }

  void run(int worker = 0, int width = 1) {
    worker_ = worker;
    width_ = width;
    dfs(0);
  }

  std::vector<AdditionTable> tables;
  std::uint64_t prunes = 0;
  bool truncated = false;

 private:
  int dist(int a, int b) const { return dist_[a * m_ + b]; }
  int at(int a, int b) const { return t_[a * m_ + b]; }
  void set(int a, int b, int v) {
    t_[a * m_ + b] = v;
    t_[b * m_ + a] = v;
  }

  // Translation by `row` must keep distances: the new images (x1 -> y1) are
  // compared against every fixed entry of that row.
  bool row_consistent(int row, int x1, int y1, int x2, int y2) const {
    for (int x = 0; x < m_; ++x) {
      const int y = at(row, x);
      if (y < 0) continue;
      if (dist(y1, y) != dist(x1, x) || dist(y2, y) != dist(x2, x)) return false;
    }
    return true;
  }

  bool valid(int a, int b, int c) const {
    if (at(a, c) >= 0 || at(b, c) >= 0) return false;
    return row_consistent(a, b, c, c, b) && row_consistent(b, a, c, c, a) && row_consistent(c, a, b, b, a);
  }

  bool assoc_entry(int u, int v, int w) const {
    for (int x = 0; x < m_; ++x) {
      // (u ⊞ v) ⊞ x = u ⊞ (v ⊞ x)
      if (const int s = at(v, x); s >= 0) {
        const int l = at(w, x), r = at(u, s);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
      // (x ⊞ u) ⊞ v = x ⊞ (u ⊞ v)
      if (const int s = at(x, u); s >= 0) {
        const int l = at(s, v), r = at(x, w);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
    return true;
  }

  bool assoc_consistent(int a, int b, int c) const {
    return assoc_entry(a, b, c) && assoc_entry(b, a, c) && assoc_entry(a, c, b) && assoc_entry(c, a, b) &&
           assoc_entry(b, c, a) && assoc_entry(c, b, a);
  }

  bool complete_table_ok() const {
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b) {
        const int ab = at(a, b);
        for (int c = 0; c < m_; ++c) {
          if (at(ab, c) != at(a, at(b, c))) return false;
          if (dist(at(a, b), at(a, c)) != dist(b, c)) return false;
        }
      }
    return true;
  }

  int count_valid(int a, int b, int limit) const {
    int count = 0;
    for (int c : cand_[a * m_ + b])
      if (valid(a, b, c) && ++count >= limit) break;
    return count;
  }

  // Returns false when the search must stop (budget or table limit).
  bool dfs(int depth) {
    if (!budget_.charge()) {
      truncated = true;
      return false;
    }
    int best_a = -1, best_b = -1;
    int best_count = m_ + 1;
    for (auto [a, b] : pairs_) {
      if (at(a, b) >= 0) continue;
      if (order_ != BranchOrder::MinRemaining) {
        best_a = a;
        best_b = b;
        break;
      }
      const int count = count_valid(a, b, best_count);
      if (count < best_count) {
        best_count = count;
        best_a = a;
        best_b = b;
        if (count == 0) break;
      }
    }
    if (best_a < 0) {
      if (!complete_table_ok()) {
        ++prunes;
        return true;
      }
      AdditionTable table(m_);
      for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b) table.set(a, b, at(a, b));
      tables.push_back(std::move(table));
      return max_tables_ == 0 || tables.size() < max_tables_;
    }
    if (best_count == 0) {
      ++prunes;
      return true;
    }
    const auto& list = cand_[best_a * m_ + best_b];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (depth == 0 && static_cast<int>(i % width_) != worker_) continue;
      const int a = best_a, b = best_b, c = list[i];
      if (!valid(a, b, c)) continue;
      set(a, b, c);
      set(a, c, b);
      set(b, c, a);
      bool keep_going = true;
      if (assoc_consistent(a, b, c))
        keep_going = dfs(depth + 1);
      else
        ++prunes;
      set(a, b, -1);
      set(a, c, -1);
      set(b, c, -1);
      if (!keep_going) return false;
    }
    return true;
  }

  int m_;
  int zero_;
  BranchOrder order_;
  Budget& budget_;
  std::size_t max_tables_;
  int worker_ = 0;
  int width_ = 1;
  std::vector<int> dims_, dist_, t_;
  std::vector<std::vector<int>> cand_;
  std::vector<std::pair<int, int>> pairs_;
};

void check_word_set(std::span<const Subspace> words) {
  if (words.size() > 64) throw Error(ErrorKind::ScaleCap, "more than 64 words");
  if (std::none_of(words.begin(), words.end(), [](const Subspace& s) { return s.is_zero(); }))
    throw Error(ErrorKind::BadParameters, "word set must contain {0}");
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (words[i] == words[j]) throw Error(ErrorKind::BadParameters, "duplicate word");
}

TableSearchResult run_table_search(std::span<const Subspace> words, const TableSearchOptions& options,
                                   Budget& budget) {
  TableSearchResult result;
  if (!is_power_of_two(words.size())) return result;
  const int width = options.max_tables == 0 ? std::max(1, options.parallel_width) : 1;
  std::vector<TableSolver> solvers;
  solvers.reserve(width);
  for (int w = 0; w < width; ++w) solvers.emplace_back(words, options.order, budget, options.max_tables);
  if (width == 1) {
    solvers[0].run();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < width; ++w) threads.emplace_back([&, w] { solvers[w].run(w, width); });
    for (auto& t : threads) t.join();
  }
  for (auto& s : solvers) {
    result.prunes += s.prunes;
    result.exhausted = result.exhausted && !s.truncated;
    std::move(s.tables.begin(), s.tables.end(), std::back_inserter(result.tables));
  }
  std::sort(result.tables.begin(), result.tables.end());
  result.tables.erase(std::unique(result.tables.begin(), result.tables.end()), result.tables.end());
  if (options.max_tables && result.tables.size() > options.max_tables) result.tables.resize(options.max_tables);
  return result;
}

}  // namespace

TableSearchResult search_addition_tables(std::span<const Subspace> words, const TableSearchOptions& options) {
  check_word_set(words);
  Budget budget(options.node_budget, options.deadline);
  TableSearchResult result = run_table_search(words, options, budget);
  result.nodes = budget.nodes();
  return result;
}

std::vector<AdditionTable> complete_addition_table(std::span<const Subspace> words) {
  return search_addition_tables(words).tables;
}

SubspaceCode build_direct_sum_code(const Field& field, int n, std::span<const Subspace> blocks) {
  if (blocks.size() > 6) throw Error(ErrorKind::ScaleCap, "more than 6 blocks");
  Subspace total = Subspace::zero(field, n);
  int dims = 0;
  for (const Subspace& b : blocks) {
    if (b.ambient_dim() != n || !same_field(b.field(), field))
      throw Error(ErrorKind::DimensionMismatch, "block lives in another space");
    if (b.is_zero()) throw Error(ErrorKind::BadParameters, "blocks must be nonzero");
    total = sum(total, b);
    dims += b.dim();
  }
  if (total.dim() != dims) throw Error(ErrorKind::BlocksNotDisjoint, "blocks are not independent");

  const unsigned count = 1u << blocks.size();
  std::vector<Subspace> words;
  words.reserve(count);
  for (unsigned mask = 0; mask < count; ++mask) {
    Subspace w = Subspace::zero(field, n);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (mask & (1u << i)) w = sum(w, blocks[i]);
    words.push_back(std::move(w));
  }
  AdditionTable table(static_cast<int>(count));
  for (unsigned a = 0; a < count; ++a)
    for (unsigned b = 0; b < count; ++b) table.set(static_cast<int>(a), static_cast<int>(b), static_cast<int>(a ^ b));
  return SubspaceCode::canonical(field, n, std::move(words), std::move(table));
}

SubspaceCode coordinate_code(const Field& field, int n, int lines) {
  if (lines < 0) lines = n;
  if (lines > n) throw Error(ErrorKind::BadParameters, "more coordinate lines than dimensions");
  std::vector<Subspace> blocks;
  for (int i = 0; i < lines; ++i) {
    const int axis[] = {i};
    blocks.push_back(Subspace::coordinate(field, n, axis));
  }
  return build_direct_sum_code(field, n, blocks);
}

void for_each_independent_family(const Field& field, int n,
                                 const std::function<void(std::span<const Subspace>)>& visit) {
  const std::vector<Subspace> space = enumerate_projective_space(field, n);
  std::vector<Subspace> family;
  // Families grow in increasing canonical index, so each set is met once.
  std::function<void(std::size_t, const Subspace&)> grow = [&](std::size_t next, const Subspace& total) {
    visit(family);
    for (std::size_t i = next; i < space.size(); ++i) {
      const Subspace& s = space[i];
      if (s.is_zero() || s.dim() + total.dim() > n) continue;
      if (sum_dim(total, s) != total.dim() + s.dim()) continue;
      family.push_back(s);
      grow(i + 1, sum(total, s));
      family.pop_back();
    }
  };
  grow(0, Subspace::zero(field, n));
}

SubspaceCode remark_counterexample(const Field& field, int n) {
  if (!field || field->q() != 2) throw Error(ErrorKind::BadParameters, "the construction is over GF(2)");
  if (n < 3) throw Error(ErrorKind::BadParameters, "the construction needs n >= 3");
  auto unit = [n](std::initializer_list<int> axes) {
    Vector v(n, 0);
    for (int a : axes) v[a] = 1;
    return v;
  };
  const std::vector<Vector> g1 = {unit({0}), unit({1})};
  const std::vector<Vector> g2 = {unit({0}), unit({2})};
  const std::vector<Vector> g3 = {unit({0}), unit({1, 2})};
  std::vector<Subspace> words = {Subspace::zero(field, n), Subspace::span(field, n, g1),
                                 Subspace::span(field, n, g2), Subspace::span(field, n, g3)};
  const Subspace z = intersect(words[1], words[2]);
  if (z.dim() != 1 || intersect(words[1], words[3]) != z || intersect(words[2], words[3]) != z)
    throw Error(ErrorKind::InternalInconsistency, "planes do not share a common line");
  // Klein four-group: i ⊞ j = i xor j on indices 0..3.
  AdditionTable table(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table.set(i, j, i ^ j);
  return SubspaceCode(field, n, std::move(words), std::move(table));
}

Field SearchConfig::make_field() const {
  return subcode::make_field(p, m, modulus.empty() ? std::nullopt : std::optional(modulus), 81);
}

namespace {

struct Found {
  std::vector<int> key;  // indices into the projective space
  SubspaceCode code;
};

bool found_less(const Found& a, const Found& b) {
  if (a.code.size() != b.code.size()) return a.code.size() > b.code.size();
  if (a.code.words() != b.code.words())
    return std::lexicographical_compare(a.code.words().begin(), a.code.words().end(), b.code.words().begin(),
                                        b.code.words().end());
  return a.code.table() < b.code.table();
}

}  // namespace

SearchOutcome search_max_linear_code(const SearchConfig& cfg) {
  const auto start = Clock::now();
  const Field field = cfg.make_field();
  const int n = cfg.n;
  if (n < 1 || n > kMaxAmbientDim) throw Error(ErrorKind::ScaleCap, "n out of range");
  long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= field->q();
  if (qn > 81) throw Error(ErrorKind::ScaleCap, "q^n exceeds 81");
  if (cfg.max_words < 1 || cfg.max_words > 64) throw Error(ErrorKind::ScaleCap, "max_words must lie in 1..64");

  const std::vector<Subspace> space = enumerate_projective_space(field, n);
  const int points = static_cast<int>(space.size());
  std::optional<Clock::time_point> deadline;
  if (cfg.time_budget_s > 0)
    deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_budget_s));
  Budget budget(cfg.node_budget, deadline);

  const int width = std::max(1, cfg.parallel_width);
  std::vector<std::vector<Found>> per_worker(width);
  std::vector<std::uint64_t> word_sets(width, 0), prunes(width, 0);

  auto record = [&](int worker, const std::vector<int>& key, const AdditionTable& table) {
    std::vector<Subspace> words;
    for (int i : key) words.push_back(space[i]);
    SubspaceCode code(field, n, std::move(words), table);
    if (!is_linear(code).passed() || !verify_lemma_suite(code, Precondition::Report).passed())
      throw Error(ErrorKind::InternalInconsistency, "search produced a table that fails re-verification");
    per_worker[worker].push_back({key, std::move(code)});
  };

  auto work = [&](int worker) {
    for (int size = 1; size <= std::min(cfg.max_words, points); size *= 2) {
      const int r = size - 1;
      std::vector<int> pick(r);
      for (int i = 0; i < r; ++i) pick[i] = i + 1;
      while (true) {
        const bool mine = r == 0 ? worker == 0 : (pick[0] - 1) % width == worker;
        if (mine) {
          if (!budget.charge()) return;
          ++word_sets[worker];
          std::vector<int> key{0};
          key.insert(key.end(), pick.begin(), pick.end());
          std::vector<Subspace> words;
          for (int i : key) words.push_back(space[i]);
          TableSolver solver(words, cfg.order, budget, 0);
          solver.run();
          prunes[worker] += solver.prunes;
          if (solver.truncated) return;
          std::sort(solver.tables.begin(), solver.tables.end());
          for (const AdditionTable& t : solver.tables) record(worker, key, t);
        }
        int i = r - 1;
        while (i >= 0 && pick[i] == points - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  };

  if (width == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < width; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  std::vector<Found> all;
  for (auto& list : per_worker) std::move(list.begin(), list.end(), std::back_inserter(all));

  if (cfg.seed_direct_sums) {
    int lines = 0;
    while (lines < n && (2 << lines) <= cfg.max_words) ++lines;
    SubspaceCode seed = coordinate_code(field, n, lines);
    std::vector<int> key;
    for (const Subspace& w : seed.words())
      key.push_back(static_cast<int>(std::lower_bound(space.begin(), space.end(), w) - space.begin()));
    all.push_back({key, seed});
  }

  std::sort(all.begin(), all.end(), found_less);
  all.erase(std::unique(all.begin(), all.end(),
                        [](const Found& a, const Found& b) {
                          return a.key == b.key && a.code.table() == b.code.table();
                        }),
            all.end());

  SearchOutcome out;
  for (auto& f : all) {
    out.max_size = std::max(out.max_size, f.code.size());
    out.codes.push_back(std::move(f.code));
  }
  out.exhausted = !budget.stopped();
  out.stats.nodes = budget.nodes();
  for (int w = 0; w < width; ++w) {
    out.stats.word_sets += word_sets[w];
    out.stats.prunes += prunes[w];
  }
  out.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

CodeAssessment assess_code(const SubspaceCode& code) {
  CodeAssessment a;
  a.size = code.size();
  a.ambient_dim = code.ambient_dim();
  a.within_power_bound = a.size <= (1 << code.ambient_dim());
  a.closed = is_closed_under_intersection(code);
  const BasisReport bases = indecomposable_bases(code);
  a.unique_basis = bases.unique;
  a.basis_count = bases.bases.size();
  a.indecomposables = indecomposable_codewords(code).size();
  return a;
}

ConjectureReport conjecture_harness(const SearchConfig& config) {
  ConjectureReport report;
  report.search = search_max_linear_code(config);
  for (const SubspaceCode& code : report.search.codes) {
    const CodeAssessment a = assess_code(code);
    if (!a.within_power_bound) ++report.size_bound_violations;
    if (a.closed && !a.unique_basis) ++report.closed_without_unique;
    if (a.unique_basis && !a.closed) ++report.unique_without_closed;
    report.assessments.push_back(a);
  }
  const Field field = config.make_field();
  const std::string space = "P_" + std::to_string(field->q()) + "(" + std::to_string(config.n) + ")";
  if (report.search.exhausted) {
    report.coverage = "exhaustive: every power-of-two word set of " + space + " with at most " +
                      std::to_string(config.max_words) + " words";
  } else {
    report.coverage = "truncated by budget: " + std::to_string(report.search.stats.word_sets) + " word sets of " +
                      space + " examined; no claim about the remainder";
  }
  return report;
}

}  // namespace subcode
