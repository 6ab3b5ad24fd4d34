#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "asepk/errors.hpp"
#include "asepk/field.hpp"

namespace asepk {

template <class S>
using SparseVector = std::map<std::size_t, S>;

// Column-compressed exact sparse matrix. Columns are ordered maps row -> value
// with no stored zeros. `factors` records the tensor structure (most significant first).
template <class S>
class SparseMatrix {
 public:
  using Column = std::map<std::size_t, S>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols), factors_{rows} {}
  SparseMatrix(std::size_t dim, std::vector<std::size_t> factors) : SparseMatrix(dim, dim) { set_factors(std::move(factors)); }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.data_[k].emplace(k, S(Rational(1)));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& factors() const { return factors_; }
  void set_factors(std::vector<std::size_t> f) {
    std::size_t prod = std::accumulate(f.begin(), f.end(), std::size_t{1}, std::multiplies<>());
    require(prod == rows_, ErrorKind::Structural, "factor dimensions do not multiply to the matrix size");
    factors_ = std::move(f);
  }

  const Column& column(std::size_t c) const { return data_.at(c); }
  S get(std::size_t r, std::size_t c) const {
    auto it = data_.at(c).find(r);
    return it == data_[c].end() ? S(Rational(0)) : it->second;
  }
  void add_to(std::size_t r, std::size_t c, const S& v) {
    if (is_zero(v)) return;
    auto& col = data_.at(c);
    auto [it, inserted] = col.emplace(r, v);
    if (!inserted) {
      it->second = it->second + v;
      if (is_zero(it->second)) col.erase(it);
    }
  }
  void set(std::size_t r, std::size_t c, const S& v) {
    auto& col = data_.at(c);
    if (is_zero(v)) col.erase(r);
    else col[r] = v;
  }

  std::size_t nnz() const {
    std::size_t k = 0;
    for (const auto& c : data_) k += c.size();
    return k;
  }
  bool is_zero_matrix() const { return nnz() == 0; }

  SparseMatrix operator*(const SparseMatrix& o) const {
    require(cols_ == o.rows_, ErrorKind::Structural, "dimension mismatch in product");
    SparseMatrix out(rows_, o.cols_);
    for (std::size_t j = 0; j < o.cols_; ++j) {
      auto& dst = out.data_[j];
      for (const auto& [k, v] : o.data_[j])
        for (const auto& [i, u] : data_[k]) {
          auto [it, inserted] = dst.emplace(i, u * v);
          if (!inserted) it->second = it->second + u * v;
        }
      prune(dst);
    }
    if (factors_.size() > 1 && factors_ == o.factors_) out.factors_ = factors_;
    return out;
  }
  SparseMatrix& operator+=(const SparseMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::Structural, "dimension mismatch in sum");
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : o.data_[j]) add_to(i, j, v);
    return *this;
  }
  SparseMatrix& operator-=(const SparseMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::Structural, "dimension mismatch in difference");
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : o.data_[j]) add_to(i, j, -v);
    return *this;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  SparseMatrix scaled(const S& s) const {
    SparseMatrix out(rows_, cols_);
    out.factors_ = factors_;
    if (is_zero(s)) return out;
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) out.add_to(i, j, v * s);
    return out;
  }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a - b).is_zero_matrix();
  }
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

  SparseMatrix transpose() const {
    SparseMatrix out(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) out.data_[i].emplace(j, v);
    return out;
  }

  template <class F>
  auto map(F f) const -> SparseMatrix<decltype(f(std::declval<S>()))> {
    SparseMatrix<decltype(f(std::declval<S>()))> out(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) out.add_to(i, j, f(v));
    if (rows_ == cols_) out.set_factors(factors_);
    return out;
  }

  SparseVector<S> apply(const SparseVector<S>& v) const {
    SparseVector<S> out;
    for (const auto& [k, x] : v)
      for (const auto& [i, u] : data_.at(k)) {
        auto [it, inserted] = out.emplace(i, u * x);
        if (!inserted) it->second = it->second + u * x;
      }
    prune(out);
    return out;
  }

  // Row sums of the transpose, i.e. sum over rows for each column.
  std::vector<S> column_sums() const {
    std::vector<S> out(cols_, S(Rational(0)));
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) out[j] = out[j] + v;
    return out;
  }

 private:
  template <class Map>
  static void prune(Map& m) {
    for (auto it = m.begin(); it != m.end();) {
      if (is_zero(it->second)) it = m.erase(it);
      else ++it;
    }
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Column> data_;
  std::vector<std::size_t> factors_;
};

inline std::vector<std::size_t> digits_of(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = index % dims[k];
    index /= dims[k];
  }
  return d;
}

inline std::size_t index_of(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}

template <class S>
SparseMatrix<S> kron(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
  SparseMatrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja)
    for (const auto& [ia, va] : a.column(ja))
      for (std::size_t jb = 0; jb < b.cols(); ++jb)
        for (const auto& [ib, vb] : b.column(jb)) out.add_to(ia * b.rows() + ib, ja * b.cols() + jb, va * vb);
  if (a.rows() == a.cols() && b.rows() == b.cols()) {
    std::vector<std::size_t> f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    out.set_factors(f);
  }
  return out;
}

// Applies a local operator acting on tensor slots `pos` (in the operator's own
// factor order) of a vector living on `dims`.
template <class S>
SparseVector<S> apply_local(const SparseMatrix<S>& op, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& pos, const SparseVector<S>& v) {
  std::vector<std::size_t> local_dims;
  for (auto p : pos) local_dims.push_back(dims.at(p));
  SparseVector<S> out;
  for (const auto& [idx, x] : v) {
    auto dig = digits_of(idx, dims);
    std::vector<std::size_t> ld;
    for (auto p : pos) ld.push_back(dig[p]);
    for (const auto& [lr, u] : op.column(index_of(ld, local_dims))) {
      auto rd = digits_of(lr, local_dims);
      for (std::size_t k = 0; k < pos.size(); ++k) dig[pos[k]] = rd[k];
      S val = u * x;
      auto [it, inserted] = out.emplace(index_of(dig, dims), val);
      if (!inserted) it->second = it->second + val;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (is_zero(it->second)) it = out.erase(it);
    else ++it;
  }
  return out;
}

template <class S>
SparseMatrix<S> embed(const SparseMatrix<S>& op, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& pos) {
  std::size_t n = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  SparseMatrix<S> out(n, dims);
  for (std::size_t j = 0; j < n; ++j) {
    SparseVector<S> e{{j, S(Rational(1))}};
    for (const auto& [i, v] : apply_local(op, dims, pos, e)) out.add_to(i, j, v);
  }
  return out;
}

template <class S>
SparseMatrix<S> partial_transpose(const SparseMatrix<S>& a, const std::vector<std::size_t>& dims, std::size_t slot) {
  SparseMatrix<S> out(a.rows(), dims);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (const auto& [i, v] : a.column(j)) {
      auto di = digits_of(i, dims), dj = digits_of(j, dims);
      std::swap(di[slot], dj[slot]);
      out.add_to(index_of(di, dims), index_of(dj, dims), v);
    }
  return out;
}

template <class S>
SparseMatrix<S> partial_trace(const SparseMatrix<S>& a, const std::vector<std::size_t>& dims, std::size_t slot) {
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (k != slot) rest.push_back(dims[k]);
  std::size_t n = std::accumulate(rest.begin(), rest.end(), std::size_t{1}, std::multiplies<>());
  SparseMatrix<S> out(n, rest);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (const auto& [i, v] : a.column(j)) {
      auto di = digits_of(i, dims), dj = digits_of(j, dims);
      if (di[slot] != dj[slot]) continue;
      di.erase(di.begin() + static_cast<long>(slot));
      dj.erase(dj.begin() + static_cast<long>(slot));
      out.add_to(index_of(di, rest), index_of(dj, rest), v);
    }
  return out;
}

// Gauss-Jordan over the exact field S; a singular matrix is a Degenerate error.
template <class S>
SparseMatrix<S> inverse(const SparseMatrix<S>& a) {
  require(a.rows() == a.cols(), ErrorKind::Structural, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::map<std::size_t, S>> rows(n), inv(n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, v] : a.column(j)) rows[i].emplace(j, v);
  for (std::size_t i = 0; i < n; ++i) inv[i].emplace(i, S(Rational(1)));
  auto axpy = [](std::map<std::size_t, S>& dst, const std::map<std::size_t, S>& src, const S& f) {
    for (const auto& [k, v] : src) {
      S val = v * f;
      auto [it, inserted] = dst.emplace(k, val);
      if (!inserted) {
        it->second = it->second + val;
        if (is_zero(it->second)) dst.erase(it);
      }
    }
  };
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i)
      if (rows[i].count(c)) {
        p = i;
        break;
      }
    require(p < n, ErrorKind::Degenerate, "singular matrix");
    std::swap(rows[c], rows[p]);
    std::swap(inv[c], inv[p]);
    S piv = checked_div(S(Rational(1)), rows[c].at(c));
    for (auto& [k, v] : rows[c]) v = v * piv;
    for (auto& [k, v] : inv[c]) v = v * piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      auto it = rows[i].find(c);
      if (it == rows[i].end()) continue;
      S f = -it->second;
      axpy(rows[i], rows[c], f);
      axpy(inv[i], inv[c], f);
    }
  }
  SparseMatrix<S> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, v] : inv[i]) out.add_to(i, j, v);
  out.set_factors(a.factors());
  return out;
}

}  // namespace asepk
