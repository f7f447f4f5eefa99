#pragma once

#include <memory>
#include <string>
#include <vector>

#include "blockdual/intmatrix.hpp"

namespace blockdual {

/// One irreducible factor of a root system. `indices` are the 1-based simple
/// root indices belonging to the factor, in path order of its diagram.
struct CartanComponent {
  char letter = 'A';
  int rank = 0;
  std::vector<int> indices;
};

/// Finite root system built from a Cartan matrix: simple roots, positive
/// roots in simple-root coordinates, and the W-invariant bilinear form given
/// by the minimal integer symmetrisation of the Cartan matrix.
///
/// Immutable after construction; share via shared_ptr.
class CartanDatum {
 public:
  /// Parse a type string such as "A3" or "B2xA1". Throws UnknownType /
  /// NotFiniteType.
  static std::shared_ptr<const CartanDatum> from_spec(const std::string& spec);

  /// Validate an explicit generalized Cartan matrix and build the datum.
  static std::shared_ptr<const CartanDatum> from_matrix(const IntMatrix& cartan,
                                                        std::string name = "");

  int rank() const { return cartan_.n; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const IntMatrix& bilinear_form() const { return bilinear_; }
  const std::vector<CartanComponent>& components() const { return components_; }
  const std::vector<IntVector>& positive_roots() const { return positive_roots_; }
  const std::string& name() const { return name_; }

  /// Coordinate vector of the i-th simple root (i is 1-based).
  IntVector simple_root(int i) const;

  /// Matrix of the simple reflection s_i on the root lattice (i is 1-based).
  IntMatrix reflection_matrix(int i) const;

  long long inner(const IntVector& u, const IntVector& v) const;

  /// A root vector has uniform sign; +1 for positive, -1 for negative.
  static int root_sign(const IntVector& v);

  bool same_system(const CartanDatum& other) const {
    return cartan_ == other.cartan_;
  }

 private:
  CartanDatum() = default;

  std::string name_;
  IntMatrix cartan_;
  IntMatrix bilinear_;
  std::vector<CartanComponent> components_;
  std::vector<IntVector> positive_roots_;
};

using CartanRef = std::shared_ptr<const CartanDatum>;

}  // namespace blockdual
