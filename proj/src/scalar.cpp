#include "hyperlat/scalar.hpp"

#include <sstream>

namespace hyperlat {

std::string to_string(const Sqrt3& p) {
  std::string ys = p.y.str();
  return p.x.str() + (p.y < 0 ? "" : "+") + ys + "*sqrt3";
}

std::ostream& operator<<(std::ostream& os, const Sqrt3& p) { return os << to_string(p); }

Tower::Tower(Sqrt3 uu, Sqrt3 vv, Sqrt3 rr) : u(std::move(uu)), v(std::move(vv)), r(std::move(rr)) {
  if (sign(v) != 0 && sign(r) <= 0) throw std::domain_error("tower radicand must be positive");
}

namespace {

const Sqrt3& common_radicand(const Tower& p, const Tower& q) {
  bool pv = sign(p.v) != 0;
  bool qv = sign(q.v) != 0;
  if (pv && qv && p.r != q.r) throw std::domain_error("tower values over different radicands");
  return pv ? p.r : q.r;
}

}  // namespace

Tower& Tower::operator+=(const Tower& o) {
  Sqrt3 rr = common_radicand(*this, o);
  u += o.u;
  v += o.v;
  r = std::move(rr);
  return *this;
}

Tower operator*(const Tower& p, const Tower& q) {
  const Sqrt3& r = common_radicand(p, q);
  Tower t;
  t.u = p.u * q.u + p.v * q.v * r;
  t.v = p.u * q.v + p.v * q.u;
  t.r = r;
  return t;
}

Tower operator/(const Tower& p, const Tower& q) {
  // multiply by the conjugate u - v sqrt(r)
  Sqrt3 n = q.u * q.u - q.v * q.v * q.r;
  if (sign(n) == 0) throw std::domain_error("division by zero tower element");
  Tower c = q;
  c.v = -c.v;
  Tower t = p * c;
  t.u /= n;
  t.v /= n;
  return t;
}

int sign(const Tower& p) {
  int su = sign(p.u);
  int sv = sign(p.v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  int c = sign(p.u * p.u - p.v * p.v * p.r);
  return c > 0 ? su : (c < 0 ? sv : 0);
}

bool operator==(const Tower& p, const Tower& q) { return sign(p - q) == 0; }

std::string to_string(const Tower& p) {
  if (sign(p.v) == 0) return to_string(p.u);
  return "(" + to_string(p.u) + ")+(" + to_string(p.v) + ")*sqrt(" + to_string(p.r) + ")";
}

std::ostream& operator<<(std::ostream& os, const Tower& p) { return os << to_string(p); }

}  // namespace hyperlat
