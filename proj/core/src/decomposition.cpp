#include "subcode/decomposition.hpp"

#include <algorithm>
#include <string>

#include "subcode/error.hpp"

namespace subcode {

namespace {

void require_linear(const SubspaceCode& code) {
  if (!is_linear(code).passed()) throw Error(ErrorKind::NotLinear, "code fails the linearity checks");
}

int boxplus_fold(const SubspaceCode& code, std::span<const int> words, unsigned mask) {
  int acc = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (mask & (1u << i)) acc = code.add(acc, words[i]);
  return acc;
}

Subspace vector_sum(const SubspaceCode& code, std::span<const int> words, unsigned mask) {
  Subspace acc = Subspace::zero(code.field(), code.ambient_dim());
  for (std::size_t i = 0; i < words.size(); ++i)
    if (mask & (1u << i)) acc = sum(acc, code.word(words[i]));
  return acc;
}

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<int> indecomposable_codewords(const SubspaceCode& code, Precondition pre) {
  if (pre == Precondition::Enforce) require_linear(code);
  const int m = code.size();
  std::vector<int> out;
  for (int y = 1; y < m; ++y) {
    const int dy = code.word(y).dim();
    bool split = false;
    for (int a = 0; a < m && !split; ++a) {
      if (code.word(a).dim() >= dy) continue;
      for (int b = 0; b < m && !split; ++b)
        split = code.word(b).dim() < dy && code.add(a, b) == y;
    }
    if (!split) out.push_back(y);
  }
  return out;
}

bool check_pairwise_disjoint(std::span<const int> family, const SubspaceCode& code) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!intersect(code.word(family[i]), code.word(family[j])).is_zero()) return false;
  return true;
}

CheckReport verify_disjoint_family(std::span<const int> family, const SubspaceCode& code) {
  if (family.size() > 20) throw Error(ErrorKind::ScaleCap, "family too large for subfamily exhaustion");
  for (int w : family) {
    if (w < 0 || w >= code.size()) throw Error(ErrorKind::UnknownElement, "word index " + std::to_string(w));
    if (code.word(w).is_zero()) throw Error(ErrorKind::BadParameters, "family members must be nonzero");
  }
  if (!check_pairwise_disjoint(family, code)) throw Error(ErrorKind::NotDisjoint, "family is not pairwise disjoint");
  require_linear(code);

  CheckReport r;
  for (auto name : {"Disjoint.a.trivial_meet", "Disjoint.b.boxplus_is_sum", "Disjoint.c.dim_additive",
                    "Disjoint.d.independent"})
    r.ran(name);
  const int m = static_cast<int>(family.size());
  const unsigned all = (1u << m) - 1u;

  for (int j = 0; j < m; ++j) {
    const Subspace others = vector_sum(code, family, all & ~(1u << j));
    if (!intersect(code.word(family[j]), others).is_zero()) r.fail("Disjoint.a.trivial_meet", {family[j]});
  }
  const int boxsum = boxplus_fold(code, family, all);
  const Subspace vsum = vector_sum(code, family, all);
  if (code.word(boxsum) != vsum) r.fail("Disjoint.b.boxplus_is_sum", {boxsum});
  int dims = 0;
  for (int w : family) dims += code.word(w).dim();
  if (code.word(boxsum).dim() != dims) r.fail("Disjoint.c.dim_additive", {boxsum, dims});
  for (unsigned mask = 1; mask <= all; ++mask) {
    if (boxplus_fold(code, family, mask) == 0) {
      std::vector<int> witness;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) witness.push_back(family[i]);
      r.fail("Disjoint.d.independent", std::move(witness));
    }
  }
  return r;
}

Decomposer::Decomposer(const SubspaceCode& code) : code_(code) {
  require_linear(code);
  if (!is_closed_under_intersection(code))
    throw Error(ErrorKind::NotClosedUnderIntersection, "unique decomposition needs intersection closure");
  indecomposables_ = indecomposable_codewords(code, Precondition::Report);
  if (indecomposables_.size() > 20) throw Error(ErrorKind::ScaleCap, "too many indecomposables");
  const unsigned subsets = 1u << indecomposables_.size();
  subset_sums_.resize(subsets);
  for (unsigned mask = 0; mask < subsets; ++mask) subset_sums_[mask] = boxplus_fold(code, indecomposables_, mask);
}

Decomposition Decomposer::decompose(int word) const {
  const SubspaceCode& code = code_;
  if (word < 0 || word >= code.size()) throw Error(ErrorKind::UnknownElement, "word index " + std::to_string(word));
  std::vector<unsigned> hits;
  for (unsigned mask = 0; mask < subset_sums_.size(); ++mask)
    if (subset_sums_[mask] == word) hits.push_back(mask);
  if (hits.empty()) throw Error(ErrorKind::NoDecomposition, "no subset of indecomposables sums to word " + std::to_string(word));
  if (hits.size() > 1)
    throw Error(ErrorKind::NoDecomposition, "word " + std::to_string(word) + " has several decompositions");

  Decomposition d;
  d.target = word;
  for (std::size_t i = 0; i < indecomposables_.size(); ++i) {
    if (hits.front() & (1u << i)) {
      d.parts.push_back(static_cast<int>(i));
      d.part_words.push_back(indecomposables_[i]);
    }
  }
  if (vector_sum(code, indecomposables_, hits.front()) != code.word(word))
    throw Error(ErrorKind::InternalInconsistency, "⊞-decomposition differs from the vector-space sum");
  return d;
}

Decomposition decompose(const SubspaceCode& code, int word) { return Decomposer(code).decompose(word); }

BasisReport indecomposable_bases(const SubspaceCode& code) {
  require_linear(code);
  const std::vector<int> ind = indecomposable_codewords(code, Precondition::Report);
  const int m = code.size();
  const int rank = exact_log2(static_cast<std::size_t>(m));
  const int count = static_cast<int>(ind.size());
  if (choose(count, rank) > 5'000'000) throw Error(ErrorKind::ScaleCap, "too many candidate bases");

  BasisReport report;
  if (rank > count) return report;
  std::vector<int> pick(rank);
  for (int i = 0; i < rank; ++i) pick[i] = i;
  std::vector<char> seen(m);
  while (true) {
    std::vector<int> words;
    for (int i : pick) words.push_back(ind[i]);
    std::fill(seen.begin(), seen.end(), 0);
    int distinct = 0;
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      const int s = boxplus_fold(code, words, mask);
      if (!seen[s]) {
        seen[s] = 1;
        ++distinct;
      }
    }
    if (distinct == m) report.bases.push_back(words);
    int i = rank - 1;
    while (i >= 0 && pick[i] == count - rank + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < rank; ++j) pick[j] = pick[j - 1] + 1;
  }
  report.unique = report.bases.size() == 1;
  return report;
}

}  // namespace subcode
