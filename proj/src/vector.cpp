#include "aqh/vector.hpp"

#include <utility>

namespace aqh {

Vector make_vector(std::initializer_list<Rational> coords) {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) v(i++) = c;
  return v;
}

Vector unit_vector(Eigen::Index dim, Eigen::Index index) {
  Vector v = Vector::Constant(dim, Rational(0));
  v(index) = 1;
  return v;
}

namespace {

// Row-reduces `m` in place; returns the pivot columns in order.
std::vector<Eigen::Index> row_reduce(Matrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) {
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  const Eigen::Index dim = vectors.front().size();
  Matrix m(static_cast<Eigen::Index>(vectors.size()), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require_same_size(vectors[i], vectors.front());
    m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return static_cast<int>(row_reduce(m).size());
}

std::optional<Vector> solve_in_span(const std::vector<Vector>& basis, const Vector& v) {
  const auto k = static_cast<Eigen::Index>(basis.size());
  if (k == 0) return is_zero(v) ? std::optional<Vector>(Vector(0)) : std::nullopt;
  // Augmented system [b_1 ... b_k | v] with basis vectors as columns.
  Matrix m(v.size(), k + 1);
  for (Eigen::Index j = 0; j < k; ++j) {
    require_same_size(basis[static_cast<std::size_t>(j)], v);
    m.col(j) = basis[static_cast<std::size_t>(j)];
  }
  m.col(k) = v;
  const auto pivots = row_reduce(m);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  Vector coeffs = Vector::Constant(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    coeffs(pivots[r]) = m(static_cast<Eigen::Index>(r), k);
  }
  return coeffs;
}

void sort_unique(std::vector<Vector>& vectors) {
  std::sort(vectors.begin(), vectors.end(), LexLess{});
  vectors.erase(std::unique(vectors.begin(), vectors.end(),
                            [](const Vector& a, const Vector& b) { return equal(a, b); }),
                vectors.end());
}

VectorSet::VectorSet(std::vector<Vector> vectors) : items_(std::move(vectors)) {
  sort_unique(items_);
}

std::ptrdiff_t VectorSet::index_of(const Vector& v) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), v, LexLess{});
  if (it == items_.end() || !equal(*it, v)) return -1;
  return it - items_.begin();
}

bool VectorSet::contains(const Vector& v) const { return index_of(v) >= 0; }

bool operator==(const VectorSet& a, const VectorSet& b) {
  return std::equal(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                    [](const Vector& x, const Vector& y) { return equal(x, y); });
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v(i).str();
  }
  return out + ")";
}

}  // namespace aqh
