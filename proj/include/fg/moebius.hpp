#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace fg {

using Complex = std::complex<double>;

namespace moebius {

// Point of CP^1 kept in homogeneous form (x : y); the larger coordinate is 1.
class SpherePoint {
 public:
  SpherePoint() = default;
  SpherePoint(Complex z) : x_(z), y_(1.0) {}  // NOLINT: finite points convert implicitly
  static SpherePoint infinity() { return homogeneous(1.0, 0.0); }
  static SpherePoint homogeneous(Complex x, Complex y);

  bool is_infinity() const { return y_ == Complex(0.0); }
  // Affine value x/y; huge for points near infinity, throws at infinity.
  Complex value() const;
  Complex x() const { return x_; }
  Complex y() const { return y_; }

  double chordal_distance(const SpherePoint& other) const;

 private:
  Complex x_{0.0};
  Complex y_{1.0};
};

// Upper half-space point (z, t), t > 0.
struct H3Point {
  Complex z;
  double t;
};

enum class IsometryClass { identity, elliptic, parabolic, loxodromic };
std::string_view to_string(IsometryClass c);

class Moebius {
 public:
  Moebius() = default;
  // Normalizes to unit determinant; throws DegenerateInput if det vanishes.
  Moebius(Complex a, Complex b, Complex c, Complex d);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  Complex det() const { return a_ * d_ - b_ * c_; }
  Complex trace() const { return a_ + d_; }
  Complex trace_squared() const { return trace() * trace(); }

  Moebius inverse() const { return Moebius(d_, -b_, -c_, a_, Unchecked{}); }
  Moebius operator*(const Moebius& o) const;
  Moebius power(int n) const;

  SpherePoint operator()(const SpherePoint& p) const;
  H3Point operator()(const H3Point& p) const;

  // max entry distance to +M or -M, whichever is closer
  double projective_distance(const Moebius& o) const;
  bool is_identity(double tol = 1e-9) const;

 private:
  struct Unchecked {};
  Moebius(Complex a, Complex b, Complex c, Complex d, Unchecked)
      : a_(a), b_(b), c_(c), d_(d) {}

  Complex a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

// Convention: cr(inf, -1, 0, 1) = 1 and real positive exactly for quadruples in
// cyclic order on a circle.
Complex cross_ratio(const SpherePoint& p1, const SpherePoint& p2,
                    const SpherePoint& p3, const SpherePoint& p4);

IsometryClass classify(const Moebius& m, double tol = 1e-9);
double translation_length(const Moebius& m, double tol = 1e-9);

// Fixed points as eigenvector directions. Identity returns none, parabolic one,
// otherwise two with the larger-modulus eigenvalue first.
std::vector<SpherePoint> fixed_points(const Moebius& m, double tol = 1e-9);

// Map sending (p0,p1,p2) to (q0,q1,q2).
Moebius from_triples(const SpherePoint& p0, const SpherePoint& p1, const SpherePoint& p2,
                     const SpherePoint& q0, const SpherePoint& q1, const SpherePoint& q2);
// Map sending (0, 1, inf) to (q0, q1, q2).
Moebius from_standard_triple(const SpherePoint& q0, const SpherePoint& q1,
                             const SpherePoint& q2);

double bend_angle_beta(double alpha, double theta);
double bent_endpoint_distance(double dx, double dy, double beta);
double h3_distance(const H3Point& x, const H3Point& y);

}  // namespace moebius
}  // namespace fg
