#include "ybx/linmap.hpp"

#include <algorithm>
#include <map>

namespace ybx {

namespace {

void check_same_field(const Field& a, const Field& b) {
  if (a != b) throw FieldMismatch("maps over " + a.str() + " and " + b.str());
}

void check_dims_positive(long dom, long cod) {
  if (dom < 1 || cod < 1)
    throw DimensionMismatch("map dimensions must be positive");
}

}  // namespace

LinMap::LinMap(const Field& f, long dom, long cod)
    : field_(f), dom_(dom), cod_(cod), cols_(static_cast<size_t>(dom)) {
  check_dims_positive(dom, cod);
}

LinMap LinMap::identity(const Field& f, long n) {
  LinMap m(f, n, n);
  Scalar one = Scalar::one(f);
  for (long j = 0; j < n; ++j) m.cols_[j].emplace_back(j, one);
  return m;
}

LinMap LinMap::flip(const Field& f, long m, long n) {
  LinMap r(f, m * n, m * n);
  Scalar one = Scalar::one(f);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < n; ++j) r.cols_[i * n + j].emplace_back(j * m + i, one);
  return r;
}

LinMap LinMap::from_rows(const Field& f, long dom, long cod,
                         const std::vector<std::vector<Scalar>>& rows) {
  if (static_cast<long>(rows.size()) != cod)
    throw DimensionMismatch("expected " + std::to_string(cod) + " rows");
  LinMap m(f, dom, cod);
  for (long i = 0; i < cod; ++i) {
    if (static_cast<long>(rows[i].size()) != dom)
      throw DimensionMismatch("row " + std::to_string(i) + " has wrong length");
    for (long j = 0; j < dom; ++j) {
      const Scalar& v = rows[i][j];
      if (v.field() != f) throw FieldMismatch("entry field differs from map field");
      if (!v.is_zero()) m.cols_[j].emplace_back(i, v);
    }
  }
  for (auto& col : m.cols_)
    std::sort(col.begin(), col.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
  return m;
}

LinMap LinMap::permutation(const Field& f, const std::vector<long>& image) {
  long n = static_cast<long>(image.size());
  LinMap m(f, n, n);
  Scalar one = Scalar::one(f);
  for (long j = 0; j < n; ++j) {
    if (image[j] < 0 || image[j] >= n)
      throw DimensionMismatch("permutation image out of range");
    m.cols_[j].emplace_back(image[j], one);
  }
  return m;
}

Scalar LinMap::at(long row, long col) const {
  for (const auto& [r, v] : cols_[col])
    if (r == row) return v;
  return Scalar::zero(field_);
}

void LinMap::set(long row, long col, const Scalar& v) {
  if (row < 0 || row >= cod_ || col < 0 || col >= dom_)
    throw DimensionMismatch("set() index out of range");
  if (v.field() != field_) throw FieldMismatch("entry field differs from map field");
  auto& c = cols_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, long r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    if (v.is_zero())
      c.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    c.insert(it, {row, v});
  }
}

long LinMap::nonzeros() const {
  long n = 0;
  for (const auto& c : cols_) n += static_cast<long>(c.size());
  return n;
}

bool LinMap::is_identity() const {
  if (dom_ != cod_) return false;
  for (long j = 0; j < dom_; ++j) {
    if (cols_[j].size() != 1) return false;
    if (cols_[j][0].first != j || !cols_[j][0].second.is_one()) return false;
  }
  return true;
}

std::vector<std::vector<Scalar>> LinMap::dense_rows() const {
  std::vector<std::vector<Scalar>> rows(
      cod_, std::vector<Scalar>(dom_, Scalar::zero(field_)));
  for (long j = 0; j < dom_; ++j)
    for (const auto& [r, v] : cols_[j]) rows[r][j] = v;
  return rows;
}

std::vector<Scalar> LinMap::apply(const std::vector<Scalar>& v) const {
  if (static_cast<long>(v.size()) != dom_)
    throw DimensionMismatch("apply(): vector length != dom");
  std::vector<Scalar> out(cod_, Scalar::zero(field_));
  for (long j = 0; j < dom_; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [r, w] : cols_[j]) out[r] += w * v[j];
  }
  return out;
}

LinMap LinMap::operator+(const LinMap& o) const {
  check_same_field(field_, o.field_);
  if (dom_ != o.dom_ || cod_ != o.cod_)
    throw DimensionMismatch("sum of maps with different shapes");
  LinMap out(field_, dom_, cod_);
  for (long j = 0; j < dom_; ++j) {
    const auto& a = cols_[j];
    const auto& b = o.cols_[j];
    auto& c = out.cols_[j];
    size_t i = 0, k = 0;
    while (i < a.size() || k < b.size()) {
      if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
        c.push_back(a[i++]);
      } else if (i == a.size() || b[k].first < a[i].first) {
        c.push_back(b[k++]);
      } else {
        Scalar s = a[i].second + b[k].second;
        if (!s.is_zero()) c.emplace_back(a[i].first, s);
        ++i;
        ++k;
      }
    }
  }
  return out;
}

LinMap LinMap::operator-(const LinMap& o) const {
  return *this + o.scaled(-Scalar::one(field_));
}

LinMap LinMap::scaled(const Scalar& k) const {
  if (k.field() != field_) throw FieldMismatch("scale factor from another field");
  LinMap out(field_, dom_, cod_);
  if (k.is_zero()) return out;
  for (long j = 0; j < dom_; ++j)
    for (const auto& [r, v] : cols_[j]) out.cols_[j].emplace_back(r, v * k);
  return out;
}

bool operator==(const LinMap& a, const LinMap& b) {
  if (a.field_ != b.field_ || a.dom_ != b.dom_ || a.cod_ != b.cod_) return false;
  return a.cols_ == b.cols_;
}

LinMap compose(const LinMap& g, const LinMap& f) {
  check_same_field(g.field(), f.field());
  if (f.cod() != g.dom())
    throw DimensionMismatch("compose: inner dimensions " + std::to_string(g.dom()) +
                            " and " + std::to_string(f.cod()) + " differ");
  LinMap out(f.field(), f.dom(), g.cod());
  std::map<long, Scalar> acc;
  for (long j = 0; j < f.dom(); ++j) {
    acc.clear();
    for (const auto& [mid, v] : f.column(j)) {
      for (const auto& [r, w] : g.column(mid)) {
        auto it = acc.find(r);
        if (it == acc.end())
          acc.emplace(r, w * v);
        else
          it->second += w * v;
      }
    }
    for (const auto& [r, v] : acc)
      if (!v.is_zero()) out.set(r, j, v);
  }
  return out;
}

LinMap compose_all(const std::vector<LinMap>& maps) {
  if (maps.empty()) throw DimensionMismatch("compose_all of empty list");
  LinMap acc = maps.back();
  for (auto it = maps.rbegin() + 1; it != maps.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

LinMap compose_all(std::initializer_list<LinMap> maps) {
  return compose_all(std::vector<LinMap>(maps));
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  check_same_field(f.field(), g.field());
  LinMap out(f.field(), f.dom() * g.dom(), f.cod() * g.cod());
  for (long jf = 0; jf < f.dom(); ++jf) {
    const auto& colf = f.column(jf);
    if (colf.empty()) continue;
    for (long jg = 0; jg < g.dom(); ++jg) {
      const auto& colg = g.column(jg);
      if (colg.empty()) continue;
      long col = jf * g.dom() + jg;
      for (const auto& [rf, vf] : colf)
        for (const auto& [rg, vg] : colg)
          out.set(rf * g.cod() + rg, col, vf * vg);
    }
  }
  return out;
}

LinMap tensor_all(std::initializer_list<LinMap> maps) {
  const LinMap* first = maps.begin();
  if (maps.size() == 0) throw DimensionMismatch("tensor_all of empty list");
  LinMap acc = *first;
  for (auto it = first + 1; it != maps.end(); ++it) acc = tensor(acc, *it);
  return acc;
}

LinMap invert(const LinMap& f) {
  if (f.dom() != f.cod()) throw SingularMap("invert of a non-square map");
  const long n = f.dom();
  const Field& F = f.field();
  // Gauss-Jordan on [A | I]; exact arithmetic needs only a nonzero pivot.
  std::vector<std::vector<Scalar>> a = f.dense_rows();
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar::zero(F)));
  for (long i = 0; i < n; ++i) inv[i][i] = Scalar::one(F);

  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularMap("rank-deficient map");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Scalar d = a[col][col].inverse();
    for (long j = 0; j < n; ++j) {
      a[col][j] *= d;
      inv[col][j] *= d;
    }
    for (long r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar k = a[r][col];
      for (long j = 0; j < n; ++j) {
        a[r][j] -= k * a[col][j];
        inv[r][j] -= k * inv[col][j];
      }
    }
  }
  return LinMap::from_rows(F, n, n, inv);
}

std::vector<std::vector<Scalar>> kernel_basis(const LinMap& f) {
  const long m = f.cod(), n = f.dom();
  const Field& F = f.field();
  std::vector<std::vector<Scalar>> a = f.dense_rows();

  std::vector<long> pivot_col;
  long row = 0;
  for (long col = 0; col < n && row < m; ++col) {
    long piv = -1;
    for (long r = row; r < m; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    Scalar d = a[row][col].inverse();
    for (long j = 0; j < n; ++j) a[row][j] *= d;
    for (long r = 0; r < m; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Scalar k = a[r][col];
      for (long j = 0; j < n; ++j) a[r][j] -= k * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(n, false);
  for (long c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (long free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(n, Scalar::zero(F));
    v[free] = Scalar::one(F);
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<long> first_difference(const LinMap& a, const LinMap& b) {
  check_same_field(a.field(), b.field());
  if (a.dom() != b.dom() || a.cod() != b.cod())
    throw DimensionMismatch("first_difference of maps with different shapes");
  for (long j = 0; j < a.dom(); ++j)
    if (a.column(j) != b.column(j)) return j;
  return std::nullopt;
}

}  // namespace ybx
