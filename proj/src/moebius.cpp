#include "fg/moebius.hpp"

#include <algorithm>
#include <cmath>

#include "fg/error.hpp"

namespace fg::moebius {

namespace {

Complex hdet(const SpherePoint& p, const SpherePoint& q) {
  return p.x() * q.y() - q.x() * p.y();
}

SpherePoint eigen_direction(const Moebius& m, Complex lambda) {
  const Complex u0 = m.b(), u1 = lambda - m.a();
  const Complex v0 = lambda - m.d(), v1 = m.c();
  if (std::norm(u0) + std::norm(u1) >= std::norm(v0) + std::norm(v1)) {
    return SpherePoint::homogeneous(u0, u1);
  }
  return SpherePoint::homogeneous(v0, v1);
}

}  // namespace

std::string_view to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::identity: return "identity";
    case IsometryClass::elliptic: return "elliptic";
    case IsometryClass::parabolic: return "parabolic";
    case IsometryClass::loxodromic: return "loxodromic";
  }
  return "unknown";
}

SpherePoint SpherePoint::homogeneous(Complex x, Complex y) {
  const double ax = std::abs(x), ay = std::abs(y);
  if (ax == 0.0 && ay == 0.0) {
    throw Error(ErrorCode::DegenerateInput, "zero homogeneous vector");
  }
  SpherePoint p;
  if (ay >= ax) {
    p.x_ = x / y;
    p.y_ = 1.0;
  } else {
    p.x_ = 1.0;
    p.y_ = y / x;
  }
  return p;
}

Complex SpherePoint::value() const {
  if (is_infinity()) throw Error(ErrorCode::DegenerateInput, "value() of infinity");
  return x_ / y_;
}

double SpherePoint::chordal_distance(const SpherePoint& o) const {
  const double nu = std::sqrt(std::norm(x_) + std::norm(y_));
  const double nv = std::sqrt(std::norm(o.x_) + std::norm(o.y_));
  return std::abs(hdet(*this, o)) / (nu * nv);
}

Moebius::Moebius(Complex a, Complex b, Complex c, Complex d) {
  const Complex det = a * d - b * c;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!(std::abs(det) > 1e-300) || !(std::abs(det) > 1e-28 * scale * scale)) {
    throw Error(ErrorCode::DegenerateInput, "singular Moebius matrix");
  }
  const Complex s = std::sqrt(det);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

Moebius Moebius::operator*(const Moebius& o) const {
  const Complex a = a_ * o.a_ + b_ * o.c_;
  const Complex b = a_ * o.b_ + b_ * o.d_;
  const Complex c = c_ * o.a_ + d_ * o.c_;
  const Complex d = c_ * o.b_ + d_ * o.d_;
  // the determinant is only worth recomputing while it is not swamped by rounding
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (scale > 1e3) return Moebius(a, b, c, d, Unchecked{});
  const Complex s = std::sqrt(a * d - b * c);
  return Moebius(a / s, b / s, c / s, d / s, Unchecked{});
}

Moebius Moebius::power(int n) const {
  Moebius base = n < 0 ? inverse() : *this;
  Moebius out;
  for (int i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

SpherePoint Moebius::operator()(const SpherePoint& p) const {
  return SpherePoint::homogeneous(a_ * p.x() + b_ * p.y(), c_ * p.x() + d_ * p.y());
}

H3Point Moebius::operator()(const H3Point& p) const {
  const Complex cz_d = c_ * p.z + d_;
  const double t2 = p.t * p.t;
  const double den = std::norm(cz_d) + std::norm(c_) * t2;
  const Complex z = ((a_ * p.z + b_) * std::conj(cz_d) + a_ * std::conj(c_) * t2) / den;
  return {z, p.t / den};
}

double Moebius::projective_distance(const Moebius& o) const {
  auto dist = [&](double sign) {
    return std::max({std::abs(a_ - sign * o.a_), std::abs(b_ - sign * o.b_),
                     std::abs(c_ - sign * o.c_), std::abs(d_ - sign * o.d_)});
  };
  return std::min(dist(1.0), dist(-1.0));
}

bool Moebius::is_identity(double tol) const { return projective_distance(Moebius()) <= tol; }

Complex cross_ratio(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3,
                    const SpherePoint& p4) {
  const SpherePoint* pts[4] = {&p1, &p2, &p3, &p4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (pts[i]->chordal_distance(*pts[j]) < 1e-12) {
        throw Error(ErrorCode::DegenerateQuadruple, "cross-ratio of coincident points");
      }
    }
  }
  return hdet(p1, p2) * hdet(p3, p4) / (hdet(p1, p4) * hdet(p2, p3));
}

IsometryClass classify(const Moebius& m, double tol) {
  if (m.is_identity(tol)) return IsometryClass::identity;
  const Complex t2 = m.trace_squared();
  if (std::abs(t2 - 4.0) <= tol) return IsometryClass::parabolic;
  if (std::abs(t2.imag()) <= tol && t2.real() >= -tol && t2.real() < 4.0) {
    return IsometryClass::elliptic;
  }
  return IsometryClass::loxodromic;
}

double translation_length(const Moebius& m, double tol) {
  if (classify(m, tol) != IsometryClass::loxodromic) return 0.0;
  const Complex tr = m.trace();
  const Complex root = std::sqrt(tr * tr - 4.0);
  Complex lambda = (tr + root) / 2.0;
  const Complex other = (tr - root) / 2.0;
  if (std::abs(other) > std::abs(lambda)) lambda = other;
  return 2.0 * std::abs(std::log(std::abs(lambda)));
}

std::vector<SpherePoint> fixed_points(const Moebius& m, double tol) {
  const IsometryClass cls = classify(m, tol);
  if (cls == IsometryClass::identity) return {};
  const Complex tr = m.trace();
  if (cls == IsometryClass::parabolic) return {eigen_direction(m, tr / 2.0)};
  const Complex root = std::sqrt(tr * tr - 4.0);
  Complex l1 = (tr + root) / 2.0, l2 = (tr - root) / 2.0;
  if (std::abs(l2) > std::abs(l1)) std::swap(l1, l2);
  return {eigen_direction(m, l1), eigen_direction(m, l2)};
}

Moebius from_standard_triple(const SpherePoint& q0, const SpherePoint& q1,
                             const SpherePoint& q2) {
  const Complex den = hdet(q2, q0);
  if (q0.chordal_distance(q1) < 1e-14 || q1.chordal_distance(q2) < 1e-14 ||
      q0.chordal_distance(q2) < 1e-14) {
    throw Error(ErrorCode::DegenerateQuadruple, "coincident points in triple");
  }
  const Complex alpha = hdet(q1, q0) / den;
  const Complex beta = hdet(q2, q1) / den;
  return Moebius(alpha * q2.x(), beta * q0.x(), alpha * q2.y(), beta * q0.y());
}

Moebius from_triples(const SpherePoint& p0, const SpherePoint& p1, const SpherePoint& p2,
                     const SpherePoint& q0, const SpherePoint& q1, const SpherePoint& q2) {
  return from_standard_triple(q0, q1, q2) * from_standard_triple(p0, p1, p2).inverse();
}

double bend_angle_beta(double alpha, double theta) {
  const double s = std::min(1.0, std::abs(std::sin(alpha) * std::sin(theta / 2.0)));
  return M_PI - 2.0 * std::asin(s);
}

double bent_endpoint_distance(double dx, double dy, double beta) {
  const double h = std::sinh((dx - dy) / 2.0);
  const double sb = std::sin(beta / 2.0);
  const double s2 = h * h + std::sinh(dx) * std::sinh(dy) * sb * sb;
  return 2.0 * std::asinh(std::sqrt(std::max(0.0, s2)));
}

double h3_distance(const H3Point& x, const H3Point& y) {
  if (!(x.t > 0.0) || !(y.t > 0.0)) {
    throw Error(ErrorCode::NonpositiveHeight, "upper half-space point needs positive height");
  }
  const double dt = x.t - y.t;
  const double num = std::sqrt(std::norm(x.z - y.z) + dt * dt);
  return 2.0 * std::asinh(num / (2.0 * std::sqrt(x.t * y.t)));
}

}  // namespace fg::moebius
