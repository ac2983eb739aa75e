#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace oddchi {

// Dense square matrix, row-major. Used for (weighted) adjacency matrices.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  // Sets (i, j) and (j, i).
  void set_pair(std::size_t i, std::size_t j, double v);

  double max_abs() const;
  double trace() const;
  bool is_symmetric(double tol) const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

struct SymmetricEigen {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column j (row-major n x n) pairs with values[j]; empty if not requested
};

/// Householder tridiagonalization followed by implicit QL iterations.
/// Throws DomainError unless the input is symmetric within 1e-12 * max(1, max|a_ij|).
SymmetricEigen symmetric_eigen(const SymmetricMatrix& a, bool want_vectors = true);

/// All eigenvalues in ascending order.
std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& a);

}  // namespace oddchi
