#include "momentrec/real.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "momentrec/error.hpp"

namespace momentrec {

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 1) * 3.3219280948873623)) + 4;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const BigRational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real Real::parse(const std::string& text, mpfr_prec_t bits) {
  Real r(bits);
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw UsageError("not a decimal number: " + text);
  }
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave the source as a valid minimal-precision value.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

namespace {

mpfr_prec_t max_bits(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

template <typename F>
Real unary(const Real& x, F f) {
  Real r(x.bits());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real& Real::operator+=(const Real& other) {
  mpfr_add(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& other) {
  mpfr_sub(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& other) {
  mpfr_mul(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& other) {
  mpfr_div(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long c) {
  mpfr_mul_si(value_, value_, c, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long c) {
  mpfr_div_si(value_, value_, c, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(long c) {
  mpfr_add_si(value_, value_, c, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

std::string Real::to_string(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", std::max(digits, 1) - 1, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real erf(const Real& x) { return unary(x, mpfr_erf); }
Real gamma(const Real& x) { return unary(x, mpfr_gamma); }

Real pow(const Real& x, long e) {
  Real r(x.bits());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& e) {
  Real r(max_bits(x, e));
  mpfr_pow(r.get(), x.get(), e.get(), MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.bits());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real pow10(long e, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(std::labs(e)), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

Real const_pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_euler(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Real const_log2(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real relative_difference(const Real& a, const Real& b) {
  const Real scale = std::max(abs(a), abs(b));
  if (scale.is_zero()) return Real(0L, scale.bits());
  return abs(a - b) / scale;
}

}  // namespace momentrec
