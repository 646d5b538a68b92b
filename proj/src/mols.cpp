#include "tonelab/mols.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "text_records.hpp"
#include "tonelab/errors.hpp"

namespace tonelab {

bool is_latin(const Grid& grid) {
  const auto n = grid.size();
  for (const auto& row : grid) {
    if (row.size() != n) throw std::invalid_argument("Latin square rows must all have length n");
    for (int x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw std::invalid_argument("Latin square entry " + std::to_string(x) + " outside 0.." +
                                    std::to_string(static_cast<long long>(n) - 1));
      }
    }
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[grid[i][j]]++) return false;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[grid[j][i]]++) return false;
    }
  }
  return true;
}

LatinSquare::LatinSquare(const Grid& grid) {
  if (!is_latin(grid)) throw std::invalid_argument("grid is not a Latin square");
  n_ = static_cast<int>(grid.size());
  cells_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : grid) cells_.insert(cells_.end(), row.begin(), row.end());
}

Grid LatinSquare::rows() const {
  Grid g(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) g[i][j] = at(i, j);
  }
  return g;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) throw std::invalid_argument("orthogonality needs equal orders");
  const int n = a.order();
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (seen[static_cast<std::size_t>(a.at(i, j)) * n + b.at(i, j)]++) return false;
    }
  }
  return true;
}

MolsFamily::MolsFamily(int n, std::vector<LatinSquare> squares)
    : n_(n), squares_(std::move(squares)) {
  if (n < 1) throw std::invalid_argument("MOLS order must be >= 1");
  for (const auto& s : squares_) {
    if (s.order() != n) throw std::invalid_argument("every square in a family must have order n");
  }
  if (n >= 2 && size() > n - 1) {
    throw std::invalid_argument("at most n-1 MOLS of order " + std::to_string(n) + " exist");
  }
  verified_ = true;
  for (int i = 0; i < size() && verified_; ++i) {
    for (int j = i + 1; j < size() && verified_; ++j) {
      verified_ = are_orthogonal(squares_[i], squares_[j]);
    }
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d <= p / d; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

MolsFamily prime_mols(int p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::vector<LatinSquare> squares;
  for (int k = 1; k < p; ++k) {
    Grid g(p, std::vector<int>(p));
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) g[i][j] = (k * i + j) % p;
    }
    squares.emplace_back(g);
  }
  MolsFamily f(p, std::move(squares));
  if (!f.verified()) throw std::logic_error("prime_mols produced a non-orthogonal family");
  return f;
}

MolsFamily macneish_product(const MolsFamily& f1, const MolsFamily& f2) {
  if (f1.size() == 0 || f2.size() == 0) throw std::invalid_argument("MacNeish product of an empty family");
  if (!f1.verified() || !f2.verified()) throw std::invalid_argument("MacNeish product needs verified families");
  const int n1 = f1.order();
  const int n2 = f2.order();
  const int n = n1 * n2;
  const int m = std::min(f1.size(), f2.size());
  std::vector<LatinSquare> squares;
  for (int k = 0; k < m; ++k) {
    Grid g(n, std::vector<int>(n));
    for (int i1 = 0; i1 < n1; ++i1) {
      for (int i2 = 0; i2 < n2; ++i2) {
        for (int j1 = 0; j1 < n1; ++j1) {
          for (int j2 = 0; j2 < n2; ++j2) {
            g[i1 * n2 + i2][j1 * n2 + j2] =
                f1.square(k).at(i1, j1) * n2 + f2.square(k).at(i2, j2);
          }
        }
      }
    }
    squares.emplace_back(g);
  }
  MolsFamily f(n, std::move(squares));
  if (!f.verified()) throw std::logic_error("MacNeish product is not orthogonal");
  return f;
}

MolsFamily mols_for_order(int n) {
  if (n < 2) throw std::invalid_argument("MOLS order must be >= 2");
  std::vector<int> primes;
  int rest = n;
  for (int d = 2; d <= rest / d; ++d) {
    if (rest % d) continue;
    rest /= d;
    if (rest % d == 0) {
      throw std::invalid_argument("order " + std::to_string(n) +
                                  " has a repeated prime factor; prime powers are not constructed");
    }
    primes.push_back(d);
  }
  if (rest > 1) primes.push_back(rest);
  MolsFamily f = prime_mols(primes.front());
  for (std::size_t i = 1; i < primes.size(); ++i) f = macneish_product(f, prime_mols(primes[i]));
  return f;
}

double beth_lower_bound(int n) { return std::pow(static_cast<double>(n), 5.0 / 74.0); }

MolsFamily read_mols(std::istream& in) {
  detail::RecordReader reader(in, true);
  detail::Record rec;
  do {
    if (!reader.next(rec)) throw ParseError("empty Latin square file", 0);
  } while (rec.tokens.empty());
  if (rec.tokens.size() != 2) throw ParseError("header must be 'n m'", rec.line);
  const auto n = detail::parse_int(rec.tokens[0], rec.line);
  const auto m = detail::parse_int(rec.tokens[1], rec.line);
  if (n < 1 || m < 0) throw ParseError("bad order or count", rec.line);
  std::vector<LatinSquare> squares;
  for (std::int64_t s = 0; s < m; ++s) {
    Grid g;
    while (static_cast<std::int64_t>(g.size()) < n) {
      if (!reader.next(rec)) throw ParseError("file ends inside square " + std::to_string(s), 0);
      if (rec.tokens.empty()) {
        if (!g.empty()) throw ParseError("blank line inside a square", rec.line);
        continue;
      }
      if (static_cast<std::int64_t>(rec.tokens.size()) != n) {
        throw ParseError("row must have " + std::to_string(n) + " entries", rec.line);
      }
      std::vector<int> row;
      for (auto tok : rec.tokens) row.push_back(static_cast<int>(detail::parse_int(tok, rec.line)));
      g.push_back(std::move(row));
    }
    try {
      squares.emplace_back(g);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("square ") + std::to_string(s) + ": " + e.what(), rec.line);
    }
  }
  while (reader.next(rec)) {
    if (!rec.tokens.empty()) throw ParseError("unexpected data after the last square", rec.line);
  }
  try {
    return MolsFamily(static_cast<int>(n), std::move(squares));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

MolsFamily read_mols_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_mols(in);
}

void write_mols(std::ostream& out, const MolsFamily& family) {
  const int n = family.order();
  out << n << ' ' << family.size() << '\n';
  for (int s = 0; s < family.size(); ++s) {
    if (s > 0) out << '\n';
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out << (j ? " " : "") << family.square(s).at(i, j);
      out << '\n';
    }
  }
}

void write_mols_file(const std::string& path, const MolsFamily& family) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_mols(out, family);
}

}  // namespace tonelab
