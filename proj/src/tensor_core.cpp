#include "fockforge/tensor_core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fockforge {

std::size_t level_dim(int ambient, int level) {
  if (ambient < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  std::size_t d = 1;
  const auto n = static_cast<std::size_t>(ambient);
  for (int k = 0; k < level; ++k) {
    if (d > std::numeric_limits<std::size_t>::max() / n)
      throw std::overflow_error("level dimension overflow");
    d *= n;
  }
  return d;
}

MultiIndex::MultiIndex(int ambient_, std::vector<int> letters_)
    : ambient(ambient_), letters(std::move(letters_)) {
  if (ambient < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  for (int a : letters)
    if (a < 1 || a > ambient)
      throw std::invalid_argument("multi-index letter out of range 1..N");
}

std::size_t MultiIndex::position() const {
  std::size_t pos = 0;
  for (int a : letters) pos = pos * static_cast<std::size_t>(ambient) + static_cast<std::size_t>(a - 1);
  return pos;
}

MultiIndex MultiIndex::from_position(int ambient, int level, std::size_t position) {
  const std::size_t dim = level_dim(ambient, level);
  if (position >= dim) throw std::out_of_range("position exceeds level dimension");
  std::vector<int> letters(static_cast<std::size_t>(level), 1);
  for (int k = level - 1; k >= 0; --k) {
    letters[static_cast<std::size_t>(k)] = static_cast<int>(position % static_cast<std::size_t>(ambient)) + 1;
    position /= static_cast<std::size_t>(ambient);
  }
  return MultiIndex(ambient, std::move(letters));
}

bool MultiIndex::operator==(const MultiIndex& other) const {
  return ambient == other.ambient && letters == other.letters;
}

std::vector<MultiIndex> enumerate_basis(int ambient, int level) {
  const std::size_t dim = level_dim(ambient, level);
  std::vector<MultiIndex> out;
  out.reserve(dim);
  for (std::size_t p = 0; p < dim; ++p) out.push_back(MultiIndex::from_position(ambient, level, p));
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

LevelOperator::LevelOperator(int ambient_, int level_, Matrix mat_)
    : ambient(ambient_), level(level_), mat(std::move(mat_)) {
  const auto dim = static_cast<Eigen::Index>(level_dim(ambient, level));
  if (mat.rows() != dim || mat.cols() != dim)
    throw std::invalid_argument("level operator must be square of dimension N^level");
  if (!mat.allFinite()) throw std::invalid_argument("level operator entries must be finite");
}

LevelOperator level_identity(int ambient, int level) {
  const auto dim = static_cast<Eigen::Index>(level_dim(ambient, level));
  return LevelOperator(ambient, level, Matrix::Identity(dim, dim));
}

LevelOperator embed_at(const LevelOperator& op, int slot, int level) {
  if (op.level != 2) throw std::invalid_argument("embed_at expects a level-2 operator");
  if (slot < 1 || slot > level - 1)
    throw std::invalid_argument("embed_at slot must satisfy 1 <= slot <= level-1");
  const auto left = static_cast<Eigen::Index>(level_dim(op.ambient, slot - 1));
  const auto right = static_cast<Eigen::Index>(level_dim(op.ambient, level - slot - 1));
  Matrix m = kron(Matrix::Identity(left, left), kron(op.mat, Matrix::Identity(right, right)));
  return LevelOperator(op.ambient, level, std::move(m));
}

SubspaceBasis::SubspaceBasis(int ambient_, int level_, Matrix vectors_)
    : ambient(ambient_), level(level_), vectors(std::move(vectors_)) {
  const auto dim = static_cast<Eigen::Index>(level_dim(ambient, level));
  if (vectors.rows() != dim) throw std::invalid_argument("subspace basis has wrong ambient dimension");
  if (vectors.cols() > dim) throw std::invalid_argument("subspace basis has too many vectors");
  if (!vectors.allFinite()) throw std::invalid_argument("subspace basis entries must be finite");
}

KernelSplit kernel_basis(const LevelOperator& op, double tol) {
  if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
  const Eigen::Index dim = op.mat.rows();
  Eigen::JacobiSVD<Matrix> svd(op.mat, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double thr = tol * smax;
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > thr) ++rank;
  const Matrix& v = svd.matrixV();
  return KernelSplit{SubspaceBasis(op.ambient, op.level, v.rightCols(dim - rank)),
                     SubspaceBasis(op.ambient, op.level, v.leftCols(rank))};
}

KernelSplit column_space_split(int ambient, int level, const Matrix& columns, double tol) {
  if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
  const auto dim = static_cast<Eigen::Index>(level_dim(ambient, level));
  if (columns.cols() == 0) {
    return KernelSplit{SubspaceBasis(ambient, level, Matrix(dim, 0)),
                       SubspaceBasis(ambient, level, Matrix::Identity(dim, dim))};
  }
  if (columns.rows() != dim) throw std::invalid_argument("column matrix has wrong ambient dimension");
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double thr = tol * smax;
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > thr) ++rank;
  const Matrix& u = svd.matrixU();
  return KernelSplit{SubspaceBasis(ambient, level, u.leftCols(rank)),
                     SubspaceBasis(ambient, level, u.rightCols(dim - rank))};
}

bool is_permutation(const Permutation& pi) {
  std::vector<bool> seen(pi.size(), false);
  for (int v : pi) {
    if (v < 0 || v >= static_cast<int>(pi.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

namespace {
void require_permutation(const Permutation& pi) {
  if (!is_permutation(pi)) throw std::invalid_argument("not a permutation");
}
}  // namespace

Permutation identity_permutation(int n) {
  Permutation pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  return pi;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require_permutation(a);
  require_permutation(b);
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[static_cast<std::size_t>(b[k])];
  return out;
}

Permutation inverse(const Permutation& pi) {
  require_permutation(pi);
  Permutation out(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) out[static_cast<std::size_t>(pi[k])] = static_cast<int>(k);
  return out;
}

int permutation_sign(const Permutation& pi) {
  require_permutation(pi);
  int inversions = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j)
      if (pi[i] > pi[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> symmetric_group(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  Permutation pi = identity_permutation(n);
  std::vector<Permutation> out;
  do {
    out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

std::vector<int> reduced_word(const Permutation& pi) {
  require_permutation(pi);
  // bubble sort pi to the identity; sorting swaps, reversed, are a minimal
  // word since their count equals the inversion number
  Permutation w = pi;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        swaps.push_back(static_cast<int>(j) + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

}  // namespace fockforge
