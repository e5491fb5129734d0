#include "rotframe/tensor.hpp"

#include <cmath>
#include <string>

#include "rotframe/errors.hpp"

namespace rotframe {

namespace {

void check_index(std::size_t i) {
  if (i >= kDim) {
    throw IndexError("spacetime index " + std::to_string(i) + " outside 0..3");
  }
}

void check_rho(double rho) {
  if (!(rho > 0.0)) {
    throw DomainError("rho must be > 0 (axis excluded), got " + std::to_string(rho));
  }
}

}  // namespace

double Event::operator[](std::size_t i) const {
  switch (i) {
    case kT: return t;
    case kRho: return rho;
    case kPhi: return phi;
    case kZ: return z;
    default: check_index(i);
  }
  return 0.0;
}

double& Event::operator[](std::size_t i) {
  switch (i) {
    case kT: return t;
    case kRho: return rho;
    case kPhi: return phi;
    case kZ: return z;
    default: check_index(i);
  }
  return t;
}

FourVector operator+(const FourVector& a, const FourVector& b) {
  FourVector out{{}, a.variance};
  for (std::size_t i = 0; i < kDim; ++i) out[i] = a[i] + b[i];
  return out;
}

FourVector operator-(const FourVector& a, const FourVector& b) {
  FourVector out{{}, a.variance};
  for (std::size_t i = 0; i < kDim; ++i) out[i] = a[i] - b[i];
  return out;
}

FourVector operator*(double s, const FourVector& v) {
  FourVector out{{}, v.variance};
  for (std::size_t i = 0; i < kDim; ++i) out[i] = s * v[i];
  return out;
}

MetricAt metric_at(const Event& event, double c) {
  check_rho(event.rho);
  if (!(c > 0.0)) throw DomainError("c must be > 0, got " + std::to_string(c));

  const double rho2 = event.rho * event.rho;
  MetricAt m;
  m.g[kT][kT] = c * c;
  m.g[kRho][kRho] = -1.0;
  m.g[kPhi][kPhi] = -rho2;
  m.g[kZ][kZ] = -1.0;

  m.g_inv[kT][kT] = 1.0 / (c * c);
  m.g_inv[kRho][kRho] = -1.0;
  m.g_inv[kPhi][kPhi] = -1.0 / rho2;
  m.g_inv[kZ][kZ] = -1.0;

  m.det_g = -(c * c) * rho2;
  m.sqrt_neg_det = c * event.rho;
  return m;
}

Connection christoffel_at(const Event& event) {
  check_rho(event.rho);
  Connection gamma{};
  gamma[kRho][kPhi][kPhi] = -event.rho;
  gamma[kPhi][kRho][kPhi] = 1.0 / event.rho;
  gamma[kPhi][kPhi][kRho] = 1.0 / event.rho;
  return gamma;
}

namespace {

FourVector contract(const Matrix4& metric, const FourVector& v, Variance target) {
  FourVector out{{}, target};
  for (std::size_t a = 0; a < kDim; ++a) {
    double sum = 0.0;
    for (std::size_t b = 0; b < kDim; ++b) sum += metric[a][b] * v[b];
    out[a] = sum;
  }
  return out;
}

}  // namespace

FourVector lower(const FourVector& v, const MetricAt& m) {
  if (v.variance == Variance::kCovariant) {
    throw VarianceError("lower: vector is already covariant");
  }
  return contract(m.g, v, Variance::kCovariant);
}

FourVector raise(const FourVector& v, const MetricAt& m) {
  if (v.variance == Variance::kContravariant) {
    throw VarianceError("raise: vector is already contravariant");
  }
  return contract(m.g_inv, v, Variance::kContravariant);
}

double dot(const FourVector& a, const FourVector& b, const MetricAt& m) {
  const FourVector a_up = a.variance == Variance::kContravariant ? a : raise(a, m);
  const FourVector b_down = b.variance == Variance::kCovariant ? b : lower(b, m);
  double sum = 0.0;
  for (std::size_t i = 0; i < kDim; ++i) sum += a_up[i] * b_down[i];
  return sum;
}

int levi_civita_symbol(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::array<std::size_t, kDim> idx{i, j, k, l};
  for (std::size_t n : idx) check_index(n);

  int sign = 1;
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = a + 1; b < kDim; ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) sign = -sign;
    }
  }
  return sign;
}

std::size_t AntisymmetricTensor::slot(std::size_t a, std::size_t b) {
  // a < b assumed.
  static constexpr std::size_t kSlot[kDim][kDim] = {
      {6, 0, 1, 2}, {6, 6, 3, 4}, {6, 6, 6, 5}, {6, 6, 6, 6}};
  return kSlot[a][b];
}

AntisymmetricTensor AntisymmetricTensor::antisymmetric_part(const Matrix4& m) {
  AntisymmetricTensor out;
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = a + 1; b < kDim; ++b) {
      out.upper_[slot(a, b)] = 0.5 * (m[a][b] - m[b][a]);
    }
  }
  return out;
}

double AntisymmetricTensor::operator()(std::size_t a, std::size_t b) const {
  check_index(a);
  check_index(b);
  if (a == b) return 0.0;
  return a < b ? upper_[slot(a, b)] : -upper_[slot(b, a)];
}

void AntisymmetricTensor::set(std::size_t a, std::size_t b, double value) {
  check_index(a);
  check_index(b);
  if (a == b) throw IndexError("antisymmetric tensor has no diagonal entries");
  if (a < b) {
    upper_[slot(a, b)] = value;
  } else {
    upper_[slot(b, a)] = -value;
  }
}

Matrix4 AntisymmetricTensor::to_matrix() const {
  Matrix4 out{};
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = 0; b < kDim; ++b) out[a][b] = (*this)(a, b);
  }
  return out;
}

}  // namespace rotframe
