#include "lieball/domains.hpp"

#include <cmath>
#include <sstream>

#include "lieball/error.hpp"

namespace lieball {

namespace {

void check_dim(const DomainSpec& d, const Point& p) {
  if (p.size() != d.dimension())
    throw Error(ErrorCode::DimensionMismatch,
                "point has " + std::to_string(p.size()) + " coordinates, " + d.to_string() + " needs " +
                    std::to_string(d.dimension()));
}

Complex squared_sum(const Point& p) { return (p.transpose() * p)(0, 0); }

}  // namespace

DomainSpec DomainSpec::unit_ball(int n) {
  DomainSpec d{DomainKind::UnitBall, n, 0, 0};
  d.validate();
  return d;
}
DomainSpec DomainSpec::generalized_ball(int n, int l) {
  DomainSpec d{DomainKind::GeneralizedBall, n, l, 0};
  d.validate();
  return d;
}
DomainSpec DomainSpec::type_iv(int m) {
  DomainSpec d{DomainKind::TypeIV, 0, 0, m};
  d.validate();
  return d;
}
DomainSpec DomainSpec::heisenberg(int n) {
  DomainSpec d{DomainKind::Heisenberg, n, 0, 0};
  d.validate();
  return d;
}
DomainSpec DomainSpec::heisenberg_sig1(int big_n) {
  DomainSpec d{DomainKind::HeisenbergSig1, big_n, 0, 0};
  d.validate();
  return d;
}

int DomainSpec::dimension() const {
  switch (kind) {
    case DomainKind::UnitBall: return n;
    case DomainKind::GeneralizedBall: return n + l;
    case DomainKind::TypeIV: return m;
    case DomainKind::Heisenberg: return n;
    case DomainKind::HeisenbergSig1: return n;
  }
  return 0;
}

void DomainSpec::validate() const {
  bool ok = true;
  switch (kind) {
    case DomainKind::UnitBall: ok = n >= 1; break;
    case DomainKind::GeneralizedBall: ok = n >= 2 && l >= 0 && l <= n; break;
    case DomainKind::TypeIV: ok = m >= 1; break;
    case DomainKind::Heisenberg: ok = n >= 2; break;
    case DomainKind::HeisenbergSig1: ok = n >= 3; break;
  }
  if (!ok) throw Error(ErrorCode::ParameterOutOfRange, "invalid domain " + to_string());
}

std::string DomainSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case DomainKind::UnitBall: os << "UnitBall(" << n << ")"; break;
    case DomainKind::GeneralizedBall: os << "GeneralizedBall(" << n << "," << l << ")"; break;
    case DomainKind::TypeIV: os << "TypeIV(" << m << ")"; break;
    case DomainKind::Heisenberg: os << "Heisenberg(" << n << ")"; break;
    case DomainKind::HeisenbergSig1: os << "HeisenbergSig1(" << n << ")"; break;
  }
  return os.str();
}

std::string_view to_string(BoundaryTag tag) {
  switch (tag) {
    case BoundaryTag::Interior: return "Interior";
    case BoundaryTag::SmoothBoundary: return "SmoothBoundary";
    case BoundaryTag::SingularBoundary: return "SingularBoundary";
    case BoundaryTag::Exterior: return "Exterior";
  }
  return "?";
}

std::vector<double> defining_values(const DomainSpec& d, const Point& p) {
  check_dim(d, p);
  switch (d.kind) {
    case DomainKind::UnitBall: return {1.0 - p.squaredNorm()};
    case DomainKind::GeneralizedBall: {
      const double w = p.head(d.l).squaredNorm();
      const double z = p.tail(d.n).squaredNorm();
      return {1.0 + w - z};
    }
    case DomainKind::TypeIV: {
      const double zz = p.squaredNorm();
      return {1.0 - zz + 0.25 * std::norm(squared_sum(p)), 2.0 - zz};
    }
    case DomainKind::Heisenberg: {
      const int k = d.n - 1;
      return {p(k).imag() - p.head(k).squaredNorm()};
    }
    case DomainKind::HeisenbergSig1: {
      const int k = d.n - 1;
      const double h = p.head(k - 1).squaredNorm() - std::norm(p(k - 1));
      return {p(k).imag() - h};
    }
  }
  return {};
}

bool is_interior(const DomainSpec& d, const Point& p) {
  for (double v : defining_values(d, p))
    if (!(v > 0.0)) return false;
  return true;
}

BoundaryClass classify_point(const DomainSpec& d, const Point& p, double tol) {
  BoundaryClass out;
  out.defining_values = defining_values(d, p);
  const auto& v = out.defining_values;
  if (d.kind == DomainKind::TypeIV) {
    if (v[0] > tol && v[1] > tol)
      out.tag = BoundaryTag::Interior;
    else if (std::abs(v[0]) <= tol && std::abs(v[1]) <= tol)
      out.tag = BoundaryTag::SingularBoundary;
    else if (std::abs(v[0]) <= tol && v[1] > tol)
      out.tag = BoundaryTag::SmoothBoundary;
    else
      out.tag = BoundaryTag::Exterior;
    return out;
  }
  if (v[0] > tol)
    out.tag = BoundaryTag::Interior;
  else if (std::abs(v[0]) <= tol)
    out.tag = BoundaryTag::SmoothBoundary;
  else
    out.tag = BoundaryTag::Exterior;
  return out;
}

DomainSpec cayley_target(const DomainSpec& h) {
  if (h.kind == DomainKind::Heisenberg) return DomainSpec::unit_ball(h.n);
  if (h.kind == DomainKind::HeisenbergSig1) return DomainSpec::generalized_ball(h.n - 1, 1);
  throw Error(ErrorCode::DomainMismatch, "cayley needs a Heisenberg model, got " + h.to_string());
}

Point cayley(const DomainSpec& h, const Point& p, double tol) {
  cayley_target(h);
  check_dim(h, p);
  const Complex i(0, 1);
  const int k = h.n - 1;
  const Complex w = p(k);
  const Complex den = 1.0 - i * w;
  if (std::abs(den) <= tol) throw Error(ErrorCode::Pole, "cayley: 1 - iw vanishes");
  Point q(h.n);
  if (h.kind == DomainKind::Heisenberg) {
    for (int j = 0; j < k; ++j) q(j) = 2.0 * p(j) / den;
  } else {
    q(0) = 2.0 * p(k - 1) / den;
    for (int j = 0; j < k - 1; ++j) q(j + 1) = 2.0 * p(j) / den;
  }
  q(k) = (1.0 + i * w) / den;
  return q;
}

Point inverse_cayley(const DomainSpec& h, const Point& q, double tol) {
  cayley_target(h);
  check_dim(h, q);
  const Complex i(0, 1);
  const int k = h.n - 1;
  const Complex big_w = q(k);
  const Complex den = 1.0 + big_w;
  if (std::abs(den) <= tol) throw Error(ErrorCode::Pole, "inverse cayley: 1 + W vanishes");
  Point p(h.n);
  if (h.kind == DomainKind::Heisenberg) {
    for (int j = 0; j < k; ++j) p(j) = q(j) / den;
  } else {
    p(k - 1) = q(0) / den;
    for (int j = 0; j < k - 1; ++j) p(j) = q(j + 1) / den;
  }
  p(k) = i * (1.0 - big_w) / den;
  return p;
}

}  // namespace lieball
