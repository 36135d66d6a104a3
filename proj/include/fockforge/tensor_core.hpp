#pragma once

// Dense multilinear algebra over graded tensor powers of a finite-dimensional
// space E = C^N. Levels are tensor powers E^{(x)n}; the basis of a level is
// enumerated lexicographically by words (i_1,...,i_n) over 1..N, the leftmost
// letter being most significant.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace fockforge {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// default tolerance for residual checks; rank decisions use kDefaultRankTol
inline constexpr double kDefaultCheckTol = 1e-10;
inline constexpr double kDefaultRankTol = 1e-9;

// N^level with overflow guard
std::size_t level_dim(int ambient, int level);

// word (i_1,...,i_n) over 1..N, identifying a basis vector of E^{(x)n}
struct MultiIndex {
  int ambient = 0;
  std::vector<int> letters;

  MultiIndex(int ambient, std::vector<int> letters);
  int level() const { return static_cast<int>(letters.size()); }
  std::size_t position() const;
  static MultiIndex from_position(int ambient, int level, std::size_t position);
  bool operator==(const MultiIndex& other) const;
};

std::vector<MultiIndex> enumerate_basis(int ambient, int level);

Matrix kron(const Matrix& a, const Matrix& b);

// square operator on one level
struct LevelOperator {
  int ambient = 0;
  int level = 0;
  Matrix mat;

  LevelOperator() = default;
  LevelOperator(int ambient, int level, Matrix mat);
  std::size_t dim() const { return static_cast<std::size_t>(mat.rows()); }
};

LevelOperator level_identity(int ambient, int level);

// id^{(x)(slot-1)} (x) op (x) id^{(x)(level-slot-1)} for a level-2 op
LevelOperator embed_at(const LevelOperator& op, int slot, int level);

// orthonormal set of vectors spanning a subspace of one level (columns)
struct SubspaceBasis {
  int ambient = 0;
  int level = 0;
  Matrix vectors;

  SubspaceBasis(int ambient, int level, Matrix vectors);
  int dim() const { return static_cast<int>(vectors.cols()); }
};

struct KernelSplit {
  SubspaceBasis kernel;
  SubspaceBasis complement;
};

// SVD null space of op at relative threshold tol * sigma_max, plus the
// orthogonal complement (row space)
KernelSplit kernel_basis(const LevelOperator& op, double tol = kDefaultRankTol);

// span of the given columns and its orthogonal complement; empty input yields
// an exact identity complement
KernelSplit column_space_split(int ambient, int level, const Matrix& columns,
                               double tol = kDefaultRankTol);

// permutations in one-line notation, 0-based images
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& pi);
Permutation identity_permutation(int n);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& pi);
int permutation_sign(const Permutation& pi);
std::vector<Permutation> symmetric_group(int n);

// minimal-length factorization into adjacent transpositions: pi = s_{w_1} o
// ... o s_{w_k} with 1-based slot indices w_j (s_i swaps positions i, i+1)
std::vector<int> reduced_word(const Permutation& pi);

}  // namespace fockforge
