#include "subcode/subspace.hpp"

#include <algorithm>
#include <string>

#include "subcode/error.hpp"

namespace subcode {

namespace {

void check_ambient(const Field& field, int n) {
  if (!field) throw Error(ErrorKind::BadParameters, "subspace requires a field");
  if (n < 0) throw Error(ErrorKind::BadParameters, "negative ambient dimension");
  if (n > kMaxAmbientDim) {
    throw Error(ErrorKind::ScaleCap, "ambient dimension " + std::to_string(n) + " exceeds cap " +
                                         std::to_string(kMaxAmbientDim));
  }
}

void check_compatible(const Subspace& x, const Subspace& y) {
  if (x.ambient_dim() != y.ambient_dim() || !same_field(x.field(), y.field()))
    throw Error(ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces");
}

}  // namespace

int row_reduce(const FieldSpec& f, std::vector<Elem>& a, int rows, int cols) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                       a.begin() + rank * cols);
    }
    Elem* prow = a.data() + rank * cols;
    const Elem scale = f.inv(prow[col]);
    if (scale != 1)
      for (int c = col; c < cols; ++c) prow[c] = f.mul(prow[c], scale);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Elem* row = a.data() + r * cols;
      const Elem factor = row[col];
      if (factor == 0) continue;
      for (int c = col; c < cols; ++c) row[c] = f.sub(row[c], f.mul(factor, prow[c]));
    }
    ++rank;
  }
  return rank;
}

bool is_rref(const FieldSpec& f, std::span<const Vector> rows, int n) {
  int last_pivot = -1;
  std::vector<int> pivots;
  for (const Vector& row : rows) {
    if (static_cast<int>(row.size()) != n) return false;
    int pivot = -1;
    for (int c = 0; c < n; ++c) {
      if (!f.valid(row[c])) return false;
      if (pivot < 0 && row[c] != 0) pivot = c;
    }
    if (pivot < 0 || pivot <= last_pivot || row[pivot] != 1) return false;
    last_pivot = pivot;
    pivots.push_back(pivot);
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (i != j && rows[j][pivots[i]] != 0) return false;
  return true;
}

Subspace Subspace::zero(Field field, int n) {
  check_ambient(field, n);
  return Subspace(std::move(field), n, 0, {});
}

Subspace Subspace::full(Field field, int n) {
  check_ambient(field, n);
  std::vector<Elem> data(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) data[i * n + i] = 1;
  return Subspace(std::move(field), n, n, std::move(data));
}

Subspace Subspace::span(Field field, int n, std::span<const Vector> generators) {
  check_ambient(field, n);
  const int rows = static_cast<int>(generators.size());
  std::vector<Elem> a;
  a.reserve(static_cast<std::size_t>(rows) * n);
  for (const Vector& g : generators) {
    if (static_cast<int>(g.size()) != n)
      throw Error(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
    for (Elem e : g) {
      if (!field->valid(e)) throw Error(ErrorKind::InvalidElement, "generator entry out of range");
    }
    a.insert(a.end(), g.begin(), g.end());
  }
  const int rank = row_reduce(*field, a, rows, n);
  a.resize(static_cast<std::size_t>(rank) * n);
  return Subspace(std::move(field), n, rank, std::move(a));
}

Subspace Subspace::span_rows(Field field, int n, std::vector<Elem> flat) {
  check_ambient(field, n);
  if (n == 0 || flat.size() % n != 0)
    throw Error(ErrorKind::DimensionMismatch, "row data is not a whole number of rows");
  for (Elem e : flat)
    if (!field->valid(e)) throw Error(ErrorKind::InvalidElement, "entry out of range");
  const int rank = row_reduce(*field, flat, static_cast<int>(flat.size()) / n, n);
  flat.resize(static_cast<std::size_t>(rank) * n);
  return Subspace(std::move(field), n, rank, std::move(flat));
}

Subspace Subspace::from_rref(Field field, int n, std::span<const Vector> rows) {
  check_ambient(field, n);
  if (!is_rref(*field, rows, n)) throw Error(ErrorKind::NotRref, "basis is not in reduced row echelon form");
  std::vector<Elem> data;
  for (const Vector& r : rows) data.insert(data.end(), r.begin(), r.end());
  return Subspace(std::move(field), n, static_cast<int>(rows.size()), std::move(data));
}

Subspace Subspace::coordinate(Field field, int n, std::span<const int> axes) {
  check_ambient(field, n);
  std::vector<Vector> gens;
  for (int axis : axes) {
    if (axis < 0 || axis >= n) throw Error(ErrorKind::DimensionMismatch, "axis out of range");
    Vector v(n, 0);
    v[axis] = 1;
    gens.push_back(std::move(v));
  }
  return span(std::move(field), n, gens);
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  for (int i = 0; i < k_; ++i) out.emplace_back(row(i).begin(), row(i).end());
  return out;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  for (int i = 0; i < k_; ++i) {
    auto r = row(i);
    out.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; }) -
                                   r.begin()));
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != n_)
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  const FieldSpec& f = *field_;
  Vector residue(v.begin(), v.end());
  const std::vector<int> piv = pivots();
  for (int i = 0; i < k_; ++i) {
    const Elem factor = residue[piv[i]];
    if (factor == 0) continue;
    auto r = row(i);
    for (int c = 0; c < n_; ++c) residue[c] = f.sub(residue[c], f.mul(factor, r[c]));
  }
  return std::all_of(residue.begin(), residue.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(*this, other);
  if (other.k_ > k_) return false;
  for (int i = 0; i < other.k_; ++i)
    if (!contains(other.row(i))) return false;
  return true;
}

std::vector<Vector> Subspace::members() const {
  const FieldSpec& f = *field_;
  std::uint64_t count = 1;
  for (int i = 0; i < k_; ++i) count *= f.q();
  if (count > kMaxEnumeration) throw Error(ErrorKind::ScaleCap, "too many member vectors");
  std::vector<Vector> out;
  out.reserve(count);
  std::vector<int> coeff(k_, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int i = k_ - 1; i >= 0; --i) {
      coeff[i] = static_cast<int>(rest % f.q());
      rest /= f.q();
    }
    Vector v(n_, 0);
    for (int i = 0; i < k_; ++i) {
      if (coeff[i] == 0) continue;
      auto r = row(i);
      for (int c = 0; c < n_; ++c) v[c] = f.add(v[c], f.mul(static_cast<Elem>(coeff[i]), r[c]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string Subspace::to_string() const {
  if (k_ == 0) return "<0>";
  std::string s = "<";
  for (int i = 0; i < k_; ++i) {
    if (i) s += ',';
    for (Elem e : row(i)) s += std::to_string(e);
  }
  return s + ">";
}

std::size_t Subspace::hash() const noexcept {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_ * 31 + k_);
  for (Elem e : data_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                                b.data_.end());
}

Subspace sum(const Subspace& x, const Subspace& y) {
  check_compatible(x, y);
  if (x.is_zero() || x == y) return y;
  if (y.is_zero()) return x;
  std::vector<Elem> a(x.flat().begin(), x.flat().end());
  a.insert(a.end(), y.flat().begin(), y.flat().end());
  return Subspace::span_rows(x.field(), x.ambient_dim(), std::move(a));
}

int sum_dim(const Subspace& x, const Subspace& y) {
  check_compatible(x, y);
  const int n = x.ambient_dim();
  std::vector<Elem> a(x.flat().begin(), x.flat().end());
  a.insert(a.end(), y.flat().begin(), y.flat().end());
  return row_reduce(*x.field(), a, x.dim() + y.dim(), n);
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  check_compatible(x, y);
  if (x.is_zero()) return x;
  if (y.is_zero()) return y;
  if (x == y) return x;
  const int n = x.ambient_dim();
  const int cols = 2 * n;
  const int rows = x.dim() + y.dim();
  // Zassenhaus: rows [x | x] and [y | 0]; after reduction, the rows with a
  // zero left half carry a basis of the intersection in their right half.
  std::vector<Elem> a(static_cast<std::size_t>(rows) * cols, 0);
  for (int i = 0; i < x.dim(); ++i) {
    auto r = x.row(i);
    std::copy(r.begin(), r.end(), a.begin() + i * cols);
    std::copy(r.begin(), r.end(), a.begin() + i * cols + n);
  }
  for (int i = 0; i < y.dim(); ++i) {
    auto r = y.row(i);
    std::copy(r.begin(), r.end(), a.begin() + (x.dim() + i) * cols);
  }
  const int rank = row_reduce(*x.field(), a, rows, cols);
  std::vector<Elem> meet;
  for (int r = 0; r < rank; ++r) {
    const auto begin = a.begin() + r * cols;
    if (std::all_of(begin, begin + n, [](Elem e) { return e == 0; })) meet.insert(meet.end(), begin + n, begin + cols);
  }
  return Subspace::span_rows(x.field(), n, std::move(meet));
}

int subspace_distance(const Subspace& x, const Subspace& y) {
  const int joined = sum_dim(x, y);
  // dim(X cap Y) = dim X + dim Y - dim(X + Y)
  const int met = x.dim() + y.dim() - joined;
  return x.dim() + y.dim() - 2 * met;
}

__extension__ typedef unsigned __int128 Wide;

std::uint64_t gaussian_binomial(int q, int n, int k) {
  if (k < 0 || k > n) return 0;
  Wide result = 1;
  auto qpow = [q](int e) {
    Wide v = 1;
    for (int i = 0; i < e; ++i) v *= static_cast<unsigned>(q);
    return v;
  };
  // After step i the running product equals the count for dimension i + 1.
  for (int i = 0; i < k; ++i) {
    result = result * (qpow(n - i) - 1) / (qpow(i + 1) - 1);
  }
  return static_cast<std::uint64_t>(result);
}

GrassmannianIndex enumerate_grassmannian(const Field& field, int n, int k) {
  check_ambient(field, n);
  if (k < 0 || k > n) throw Error(ErrorKind::BadParameters, "dimension k out of range");
  const int q = field->q();
  const std::uint64_t expected = gaussian_binomial(q, n, k);
  if (expected > kMaxEnumeration) throw Error(ErrorKind::ScaleCap, "Grassmannian too large to enumerate");

  GrassmannianIndex index{n, k, field, {}};
  index.elements.reserve(expected);

  // Pivot column sets in lexicographic order, then every assignment of the
  // free entries (right of the pivot, outside pivot columns).
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<std::size_t> free_slots;
    std::vector<Elem> base(static_cast<std::size_t>(k) * n, 0);
    for (int r = 0; r < k; ++r) {
      base[r * n + piv[r]] = 1;
      for (int c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_slots.push_back(r * n + c);
    }
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < free_slots.size(); ++i) combos *= q;
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      std::vector<Elem> data = base;
      std::uint64_t rest = idx;
      for (std::size_t s = free_slots.size(); s-- > 0;) {
        data[free_slots[s]] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      index.elements.push_back(Subspace::from_rref(field, n, [&] {
        std::vector<Vector> rows;
        for (int r = 0; r < k; ++r) rows.emplace_back(data.begin() + r * n, data.begin() + (r + 1) * n);
        return rows;
      }()));
    }
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(index.elements.begin(), index.elements.end());
  if (index.elements.size() != expected)
    throw Error(ErrorKind::InternalInconsistency, "Grassmannian count disagrees with Gaussian binomial");
  return index;
}

std::vector<Subspace> enumerate_projective_space(const Field& field, int n) {
  check_ambient(field, n);
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) total += gaussian_binomial(field->q(), n, k);
  if (total > kMaxEnumeration) throw Error(ErrorKind::ScaleCap, "projective space too large to enumerate");
  std::vector<Subspace> out;
  out.reserve(total);
  for (int k = 0; k <= n; ++k) {
    auto g = enumerate_grassmannian(field, n, k);
    std::move(g.elements.begin(), g.elements.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace subcode
