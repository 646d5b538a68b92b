#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tonelab {

using Grid = std::vector<std::vector<int>>;

/// Row/column permutation check. Throws std::invalid_argument when the grid
/// is ragged or has an entry outside {0..n-1}.
bool is_latin(const Grid& grid);

class LatinSquare {
 public:
  LatinSquare() = default;
  /// Throws std::invalid_argument unless `grid` is a Latin square.
  explicit LatinSquare(const Grid& grid);

  int order() const noexcept { return n_; }
  int at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
  Grid rows() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  int n_ = 0;
  std::vector<int> cells_;  // row-major
};

/// True iff the n^2 pairs (A_ij, B_ij) are pairwise distinct. Throws
/// std::invalid_argument on an order mismatch.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// A list of same-order Latin squares. Construction runs the full pairwise
/// orthogonality scan and records the result in verified(); families are
/// never trusted from their construction algebra.
class MolsFamily {
 public:
  MolsFamily() = default;
  /// Throws std::invalid_argument if a square has the wrong order or there
  /// are more than n-1 squares (n >= 2).
  MolsFamily(int n, std::vector<LatinSquare> squares);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(squares_.size()); }
  const std::vector<LatinSquare>& squares() const noexcept { return squares_; }
  const LatinSquare& square(int i) const { return squares_.at(i); }
  bool verified() const noexcept { return verified_; }

 private:
  int n_ = 0;
  std::vector<LatinSquare> squares_;
  bool verified_ = false;
};

bool is_prime(int p);

/// L_k(i,j) = (k*i + j) mod p for k = 1..p-1. Throws std::invalid_argument
/// unless p is prime.
MolsFamily prime_mols(int p);

/// Kronecker composition: the k-th square maps ((i1,i2),(j1,j2)) to
/// A_k(i1,j1)*n2 + B_k(i2,j2), rows and columns indexed i1*n2 + i2.
/// Size min(|F1|, |F2|). Throws std::invalid_argument on empty or
/// unverified inputs.
MolsFamily macneish_product(const MolsFamily& f1, const MolsFamily& f2);

/// Largest family obtainable from prime_mols and MacNeish products over the
/// prime factorization of n: min over prime powers p^a of (p-1) when every
/// exponent is 1. Throws std::invalid_argument when n has a repeated prime
/// factor, since prime-power fields are not constructed.
MolsFamily mols_for_order(int n);

/// Beth's theoretical lower bound n^(5/74) on the number of MOLS of order n.
double beth_lower_bound(int n);

// Text format: `n m`, then m blocks of n lines of n integers, blocks
// separated by one blank line.
MolsFamily read_mols(std::istream& in);
MolsFamily read_mols_file(const std::string& path);
void write_mols(std::ostream& out, const MolsFamily& family);
void write_mols_file(const std::string& path, const MolsFamily& family);

}  // namespace tonelab
