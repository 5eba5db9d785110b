#pragma once

// Exact scalars: arbitrary precision integers and rationals, the Eisenstein
// and Gauss integers (and their fraction fields), the ordered real quadratic
// field Q(sqrt3) and a one-level quadratic extension of it.
//
// Hermitian forms throughout the library are linear in the first argument and
// conjugate-linear in the second.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyperlat {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

/// Nearest integer to n/d (ties rounded up), d != 0.
inline Integer round_div(const Integer& n, const Integer& d) {
  Integer num = 2 * n + d;
  Integer den = 2 * d;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

/// Nearest integer to a rational (ties rounded up).
inline Integer round_nearest(const Rational& x) {
  return round_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

template <class T>
struct Eisenstein;
template <class T>
struct Gauss;

// ---------------------------------------------------------------------------
// Eisenstein numbers a + b*omega, omega = (-1 + sqrt(-3)) / 2.

template <class T>
struct Eisenstein {
  T a{0};
  T b{0};

  Eisenstein() = default;
  Eisenstein(int v) : a(v), b(0) {}  // NOLINT: Eigen constructs Scalar(0), Scalar(1)
  Eisenstein(T re, T om) : a(std::move(re)), b(std::move(om)) {}
  template <class U>
  explicit Eisenstein(const Eisenstein<U>& o) : a(T(o.a)), b(T(o.b)) {}

  static Eisenstein omega() { return {T(0), T(1)}; }
  static Eisenstein omega_bar() { return {T(-1), T(-1)}; }
  /// sqrt(-3) = omega - conj(omega) = 1 + 2 omega.
  static Eisenstein theta() { return {T(1), T(2)}; }

  Eisenstein& operator+=(const Eisenstein& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Eisenstein& operator-=(const Eisenstein& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  Eisenstein& operator*=(const Eisenstein& o) { return *this = *this * o; }

  friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
  friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
  friend Eisenstein operator-(const Eisenstein& x) { return {-x.a, -x.b}; }
  friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    // omega^2 = -1 - omega
    T bd = x.b * y.b;
    return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
  }
  friend bool operator==(const Eisenstein& x, const Eisenstein& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Eisenstein& x, const Eisenstein& y) { return !(x == y); }

  friend std::ostream& operator<<(std::ostream& os, const Eisenstein& x) {
    return os << "(" << x.a << (x.b < 0 ? "" : "+") << x.b << "w)";
  }
};

template <class T>
Eisenstein<T> conj(const Eisenstein<T>& x) {
  return {x.a - x.b, -x.b};
}

/// x * conj(x) = a^2 - ab + b^2.
template <class T>
T norm(const Eisenstein<T>& x) {
  return x.a * x.a - x.a * x.b + x.b * x.b;
}

/// Real part a - b/2 (fraction field only).
inline Rational real_part(const Eisenstein<Rational>& x) { return x.a - x.b / 2; }
inline Rational real_part(const Eisenstein<Integer>& x) { return Rational(x.a) - Rational(x.b) / 2; }

inline Eisenstein<Rational> operator/(const Eisenstein<Rational>& x, const Eisenstein<Rational>& y) {
  Rational n = norm(y);
  if (n == 0) throw std::domain_error("division by zero Eisenstein number");
  Eisenstein<Rational> p = x * conj(y);
  return {p.a / n, p.b / n};
}
inline Eisenstein<Rational>& operator/=(Eisenstein<Rational>& x, const Eisenstein<Rational>& y) {
  return x = x / y;
}

// ---------------------------------------------------------------------------
// Gauss numbers a + b*i.

template <class T>
struct Gauss {
  T a{0};
  T b{0};

  Gauss() = default;
  Gauss(int v) : a(v), b(0) {}  // NOLINT
  Gauss(T re, T im) : a(std::move(re)), b(std::move(im)) {}
  template <class U>
  explicit Gauss(const Gauss<U>& o) : a(T(o.a)), b(T(o.b)) {}

  static Gauss i() { return {T(0), T(1)}; }
  static Gauss one_plus_i() { return {T(1), T(1)}; }

  Gauss& operator+=(const Gauss& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Gauss& operator-=(const Gauss& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  Gauss& operator*=(const Gauss& o) { return *this = *this * o; }

  friend Gauss operator+(Gauss x, const Gauss& y) { return x += y; }
  friend Gauss operator-(Gauss x, const Gauss& y) { return x -= y; }
  friend Gauss operator-(const Gauss& x) { return {-x.a, -x.b}; }
  friend Gauss operator*(const Gauss& x, const Gauss& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const Gauss& x, const Gauss& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Gauss& x, const Gauss& y) { return !(x == y); }

  friend std::ostream& operator<<(std::ostream& os, const Gauss& x) {
    return os << "(" << x.a << (x.b < 0 ? "" : "+") << x.b << "i)";
  }
};

template <class T>
Gauss<T> conj(const Gauss<T>& x) {
  return {x.a, -x.b};
}

template <class T>
T norm(const Gauss<T>& x) {
  return x.a * x.a + x.b * x.b;
}

inline Rational real_part(const Gauss<Rational>& x) { return x.a; }
inline Rational real_part(const Gauss<Integer>& x) { return Rational(x.a); }

inline Gauss<Rational> operator/(const Gauss<Rational>& x, const Gauss<Rational>& y) {
  Rational n = norm(y);
  if (n == 0) throw std::domain_error("division by zero Gauss number");
  Gauss<Rational> p = x * conj(y);
  return {p.a / n, p.b / n};
}
inline Gauss<Rational>& operator/=(Gauss<Rational>& x, const Gauss<Rational>& y) { return x = x / y; }

// ---------------------------------------------------------------------------
// Euclidean structure of Z[omega] and Z[i].

using EisensteinInt = Eisenstein<Integer>;
using EisensteinQ = Eisenstein<Rational>;
using GaussInt = Gauss<Integer>;
using GaussQ = Gauss<Rational>;

template <class R>
struct DivMod {
  R quotient;
  R remainder;
};

/// x = q*y + r with norm(r) < norm(y).
template <template <class> class Ring>
DivMod<Ring<Integer>> divmod(const Ring<Integer>& x, const Ring<Integer>& y) {
  Integer n = norm(y);
  if (n == 0) throw std::domain_error("Euclidean division by zero");
  Ring<Integer> p = x * conj(y);
  Ring<Integer> q{round_div(p.a, n), round_div(p.b, n)};
  return {q, x - q * y};
}

/// x / y when y divides x in the ring, otherwise nullopt.
template <template <class> class Ring>
std::optional<Ring<Integer>> exact_div(const Ring<Integer>& x, const Ring<Integer>& y) {
  Integer n = norm(y);
  if (n == 0) return std::nullopt;
  Ring<Integer> p = x * conj(y);
  if (p.a % n != 0 || p.b % n != 0) return std::nullopt;
  return Ring<Integer>{p.a / n, p.b / n};
}

template <template <class> class Ring>
bool divides(const Ring<Integer>& y, const Ring<Integer>& x) {
  return exact_div(x, y).has_value();
}

/// Narrowing from the fraction field; nullopt when a coordinate is not integral.
template <template <class> class Ring>
std::optional<Ring<Integer>> to_integral(const Ring<Rational>& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x.a) != 1 || denominator(x.b) != 1) return std::nullopt;
  return Ring<Integer>{numerator(x.a), numerator(x.b)};
}

// ---------------------------------------------------------------------------
// Ring traits: the data that distinguishes the Eisenstein and Gauss settings.

enum class RingTag { eisenstein, gauss };

template <class R>
struct RingTraits;

template <>
struct RingTraits<EisensteinInt> {
  using Field = EisensteinQ;
  static constexpr RingTag tag = RingTag::eisenstein;
  static constexpr const char* name = "eisenstein";
  static constexpr int unit_count = 6;
  static constexpr int reflection_order = 3;
  /// The unit multiplying a root under a generating reflection.
  static EisensteinInt zeta() { return EisensteinInt::omega(); }
  /// Norm of a root.
  static Integer root_norm() { return 3; }
  /// Generator of the ideal containing all inner products.
  static EisensteinInt form_ideal() { return EisensteinInt::theta(); }
  /// Black-to-white inner product of adjacent diagram nodes.
  static EisensteinInt bond() { return EisensteinInt::theta(); }
  static std::array<EisensteinInt, 6> units() {
    return {EisensteinInt{1, 0},  EisensteinInt{0, 1},  EisensteinInt{-1, -1},
            EisensteinInt{-1, 0}, EisensteinInt{0, -1}, EisensteinInt{1, 1}};
  }
};

template <>
struct RingTraits<GaussInt> {
  using Field = GaussQ;
  static constexpr RingTag tag = RingTag::gauss;
  static constexpr const char* name = "gauss";
  static constexpr int unit_count = 4;
  static constexpr int reflection_order = 4;
  static GaussInt zeta() { return GaussInt::i(); }
  static Integer root_norm() { return 2; }
  static GaussInt form_ideal() { return GaussInt::one_plus_i(); }
  static GaussInt bond() { return GaussInt::one_plus_i(); }
  static std::array<GaussInt, 4> units() {
    return {GaussInt{1, 0}, GaussInt{0, 1}, GaussInt{-1, 0}, GaussInt{0, -1}};
  }
};

/// Associates are normalized into the half-open sector of argument [0, pi/3)
/// for Z[omega] and [0, pi/2) for Z[i].
inline bool in_canonical_sector(const EisensteinInt& x) { return x.b >= 0 && x.a > x.b; }
inline bool in_canonical_sector(const GaussInt& x) { return x.a > 0 && x.b >= 0; }

/// The unit u with u*x in the canonical sector (1 for x == 0).
template <class R>
R canonical_unit(const R& x) {
  if (x == R(0)) return R(1);
  for (const R& u : RingTraits<R>::units())
    if (in_canonical_sector(u * x)) return u;
  throw std::logic_error("no canonical associate");
}

// ---------------------------------------------------------------------------
// Q(sqrt3): x + y*sqrt3, exactly ordered.

struct Sqrt3 {
  Rational x{0};
  Rational y{0};

  Sqrt3() = default;
  Sqrt3(int v) : x(v), y(0) {}  // NOLINT
  Sqrt3(Rational xx, Rational yy = Rational(0)) : x(std::move(xx)), y(std::move(yy)) {}

  static Sqrt3 root3() { return {Rational(0), Rational(1)}; }

  Sqrt3& operator+=(const Sqrt3& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Sqrt3& operator-=(const Sqrt3& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  Sqrt3& operator*=(const Sqrt3& o) { return *this = *this * o; }
  Sqrt3& operator/=(const Sqrt3& o) { return *this = *this / o; }

  friend Sqrt3 operator+(Sqrt3 p, const Sqrt3& q) { return p += q; }
  friend Sqrt3 operator-(Sqrt3 p, const Sqrt3& q) { return p -= q; }
  friend Sqrt3 operator-(const Sqrt3& p) { return {-p.x, -p.y}; }
  friend Sqrt3 operator*(const Sqrt3& p, const Sqrt3& q) {
    return {p.x * q.x + 3 * p.y * q.y, p.x * q.y + p.y * q.x};
  }
  friend Sqrt3 operator/(const Sqrt3& p, const Sqrt3& q) {
    Rational n = q.x * q.x - 3 * q.y * q.y;
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt3)");
    Sqrt3 r = p * Sqrt3{q.x, -q.y};
    return {r.x / n, r.y / n};
  }
  friend bool operator==(const Sqrt3& p, const Sqrt3& q) { return p.x == q.x && p.y == q.y; }
  friend bool operator!=(const Sqrt3& p, const Sqrt3& q) { return !(p == q); }

  friend std::ostream& operator<<(std::ostream& os, const Sqrt3& p);
};

/// Sign under the real embedding sqrt3 > 0, decided with rational arithmetic.
inline int sign(const Sqrt3& p) {
  int sx = sign(p.x);
  int sy = sign(p.y);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // opposite signs: compare x^2 with 3y^2
  int c = sign(Rational(p.x * p.x - 3 * p.y * p.y));
  return c > 0 ? sx : (c < 0 ? sy : 0);
}

inline bool operator<(const Sqrt3& p, const Sqrt3& q) { return sign(p - q) < 0; }
inline bool operator>(const Sqrt3& p, const Sqrt3& q) { return sign(p - q) > 0; }
inline bool operator<=(const Sqrt3& p, const Sqrt3& q) { return sign(p - q) <= 0; }
inline bool operator>=(const Sqrt3& p, const Sqrt3& q) { return sign(p - q) >= 0; }

inline double to_double(const Sqrt3& p) {
  return p.x.convert_to<double>() + p.y.convert_to<double>() * 1.7320508075688772;
}

/// "x+y*sqrt3" with rationals in lowest terms.
std::string to_string(const Sqrt3& p);

// ---------------------------------------------------------------------------
// One quadratic extension of Q(sqrt3): u + v*sqrt(r), r > 0 in Q(sqrt3).
// Values with v == 0 carry no radicand constraint; mixing two values with
// v != 0 requires equal radicands.

struct Tower {
  Sqrt3 u{0};
  Sqrt3 v{0};
  Sqrt3 r{0};

  Tower() = default;
  Tower(int c) : u(c) {}  // NOLINT
  Tower(Sqrt3 uu) : u(std::move(uu)) {}  // NOLINT
  Tower(Sqrt3 uu, Sqrt3 vv, Sqrt3 rr);

  /// sqrt(r) as a tower element.
  static Tower sqrt_of(const Sqrt3& rr) { return Tower(Sqrt3(0), Sqrt3(1), rr); }

  Tower& operator+=(const Tower& o);
  Tower& operator-=(const Tower& o) { return *this += -o; }
  Tower& operator*=(const Tower& o) { return *this = *this * o; }
  Tower& operator/=(const Tower& o) { return *this = *this / o; }

  friend Tower operator+(Tower p, const Tower& q) { return p += q; }
  friend Tower operator-(Tower p, const Tower& q) { return p -= q; }
  friend Tower operator-(const Tower& p) {
    Tower t = p;
    t.u = -t.u;
    t.v = -t.v;
    return t;
  }
  friend Tower operator*(const Tower& p, const Tower& q);
  friend Tower operator/(const Tower& p, const Tower& q);
  friend bool operator==(const Tower& p, const Tower& q);
  friend bool operator!=(const Tower& p, const Tower& q) { return !(p == q); }

  friend std::ostream& operator<<(std::ostream& os, const Tower& p);
};

/// Sign by nested squaring.
int sign(const Tower& p);

inline double to_double(const Tower& p) {
  return to_double(p.u) + to_double(p.v) * std::sqrt(to_double(p.r));
}

std::string to_string(const Tower& p);

template <class T>
std::string to_string(const Eisenstein<T>& x) {
  return x.a.str() + (x.b < 0 ? "" : "+") + x.b.str() + "*w";
}
template <class T>
std::string to_string(const Gauss<T>& x) {
  return x.a.str() + (x.b < 0 ? "" : "+") + x.b.str() + "*i";
}

}  // namespace hyperlat

// ---------------------------------------------------------------------------
// Eigen scalar registration. None of these types has a meaningful epsilon;
// exact algorithms in this library never call Eigen's numeric decompositions.

namespace Eigen {

#define HYPERLAT_EXACT_NUMTRAITS(TYPE)                                 \
  template <>                                                          \
  struct NumTraits<TYPE> : GenericNumTraits<TYPE> {                    \
    using Real = TYPE;                                                 \
    using NonInteger = TYPE;                                           \
    using Literal = TYPE;                                              \
    using Nested = TYPE;                                               \
    enum {                                                             \
      IsComplex = 0,                                                   \
      IsInteger = 0,                                                   \
      IsSigned = 1,                                                    \
      RequireInitialization = 1,                                       \
      ReadCost = 8,                                                    \
      AddCost = 16,                                                    \
      MulCost = 64                                                     \
    };                                                                 \
    static inline TYPE epsilon() { return TYPE(0); }                   \
    static inline TYPE dummy_precision() { return TYPE(0); }           \
    static inline int digits10() { return 0; }                         \
    static inline TYPE highest() { return TYPE(0); }                   \
    static inline TYPE lowest() { return TYPE(0); }                    \
  };

HYPERLAT_EXACT_NUMTRAITS(hyperlat::EisensteinInt)
HYPERLAT_EXACT_NUMTRAITS(hyperlat::EisensteinQ)
HYPERLAT_EXACT_NUMTRAITS(hyperlat::GaussInt)
HYPERLAT_EXACT_NUMTRAITS(hyperlat::GaussQ)
HYPERLAT_EXACT_NUMTRAITS(hyperlat::Sqrt3)
HYPERLAT_EXACT_NUMTRAITS(hyperlat::Tower)

#undef HYPERLAT_EXACT_NUMTRAITS

}  // namespace Eigen
