#pragma once

// Flat spacetime in cylindrical coordinates (t, rho, phi, z).
//
// Conventions used throughout the library:
//   * coordinate order (t, rho, phi, z), x^0 = t (not ct);
//   * signature (+,-,-,-): ds^2 = c^2 dt^2 - drho^2 - rho^2 dphi^2 - dz^2;
//   * permutation symbol with eps(t, rho, phi, z) = +1.

#include <array>
#include <cstddef>

namespace rotframe {

inline constexpr std::size_t kDim = 4;

/// Coordinate slots, usable as indices into component arrays.
enum Coord : std::size_t { kT = 0, kRho = 1, kPhi = 2, kZ = 3 };

using Components = std::array<double, kDim>;
using Matrix4 = std::array<std::array<double, kDim>, kDim>;

/// Gamma^alpha_{beta gamma}, indexed [alpha][beta][gamma].
using Connection = std::array<Matrix4, kDim>;

/// A spacetime point. The axis rho = 0 is outside the chart.
struct Event {
  double t = 0.0;
  double rho = 1.0;
  double phi = 0.0;
  double z = 0.0;

  [[nodiscard]] double operator[](std::size_t i) const;
  double& operator[](std::size_t i);

  friend bool operator==(const Event&, const Event&) = default;
};

enum class Variance { kContravariant, kCovariant };

/// Four components together with their index placement.
struct FourVector {
  Components components{};
  Variance variance = Variance::kContravariant;

  [[nodiscard]] double operator[](std::size_t i) const { return components[i]; }
  double& operator[](std::size_t i) { return components[i]; }

  static FourVector contravariant(Components c) {
    return {c, Variance::kContravariant};
  }
  static FourVector covariant(Components c) { return {c, Variance::kCovariant}; }
};

FourVector operator+(const FourVector& a, const FourVector& b);
FourVector operator-(const FourVector& a, const FourVector& b);
FourVector operator*(double s, const FourVector& v);

/// Metric, inverse and determinant at one event.
struct MetricAt {
  Matrix4 g{};
  Matrix4 g_inv{};
  double det_g = 0.0;
  double sqrt_neg_det = 0.0;
};

/// diag(c^2, -1, -rho^2, -1). Throws DomainError for rho <= 0 or c <= 0.
MetricAt metric_at(const Event& event, double c);

/// Levi-Civita connection of the cylindrical chart. Nonzero entries are
/// Gamma^rho_{phi phi} = -rho and Gamma^phi_{rho phi} = Gamma^phi_{phi rho} = 1/rho.
Connection christoffel_at(const Event& event);

/// v_alpha = g_{alpha beta} v^beta. Throws VarianceError on a covariant input.
FourVector lower(const FourVector& v, const MetricAt& m);

/// v^alpha = g^{alpha beta} v_beta. Throws VarianceError on a contravariant input.
FourVector raise(const FourVector& v, const MetricAt& m);

/// g_{alpha beta} a^alpha b^beta, whatever the stored variance of a and b.
double dot(const FourVector& a, const FourVector& b, const MetricAt& m);

/// Permutation sign of (i, j, k, l); 0 on a repeated index.
/// Throws IndexError if any index is outside 0..3.
int levi_civita_symbol(std::size_t i, std::size_t j, std::size_t k, std::size_t l);

/// Antisymmetric rank-2 covariant tensor kept as its six independent
/// components, so X(a, b) == -X(b, a) holds exactly.
class AntisymmetricTensor {
 public:
  AntisymmetricTensor() = default;

  /// Antisymmetric part 1/2 (m[a][b] - m[b][a]) of a full matrix.
  static AntisymmetricTensor antisymmetric_part(const Matrix4& m);

  [[nodiscard]] double operator()(std::size_t a, std::size_t b) const;

  /// Sets X(a, b) = value and X(b, a) = -value. Requires a != b.
  void set(std::size_t a, std::size_t b, double value);

  [[nodiscard]] Matrix4 to_matrix() const;

 private:
  static std::size_t slot(std::size_t a, std::size_t b);

  // (t,rho) (t,phi) (t,z) (rho,phi) (rho,z) (phi,z)
  std::array<double, 6> upper_{};
};

}  // namespace rotframe
