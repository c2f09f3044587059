#pragma once

// Simple algebraic extensions F[x]/(m) with dynamic evaluation.
//
// The modulus m is only assumed square-free, not irreducible. When an
// operation meets a zero divisor (inverting or zero-testing an element that
// shares a factor g with m), it throws Split<F>; d5_branches catches it and
// reruns the computation on F[x]/(g) and F[x]/(m/g) separately. Every branch
// that completes is a field for all the purposes of that computation.

#include <deque>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "xrank/core/upoly.hpp"

namespace xrank {

template <class F>
struct ExtCtx {
  UPoly<F> modulus;  // monic, square-free, degree >= 1
};

template <class F>
using ExtCtxPtr = std::shared_ptr<const ExtCtx<F>>;

template <class F>
struct Split {
  ExtCtxPtr<F> ctx;
  UPoly<F> factor;  // monic proper factor of ctx->modulus
};

template <class F>
class Ext {
 public:
  Ext() = default;
  Ext(ExtCtxPtr<F> ctx, UPoly<F> rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) { reduce(); }

  static Ext from_base(ExtCtxPtr<F> ctx, const F& a) { return Ext(std::move(ctx), UPoly<F>::constant(a)); }
  /// The class of x, i.e. a root of the modulus.
  static Ext generator(ExtCtxPtr<F> ctx) {
    const F one = one_like(ctx->modulus.lc());
    return Ext(ctx, UPoly<F>::monomial(one, 1));
  }

  const ExtCtxPtr<F>& ctx() const { return ctx_; }
  const UPoly<F>& rep() const { return rep_; }

  friend Ext operator+(const Ext& a, const Ext& b) { return Ext(pick(a, b), a.rep_ + b.rep_, 0); }
  friend Ext operator-(const Ext& a, const Ext& b) { return Ext(pick(a, b), a.rep_ - b.rep_, 0); }
  friend Ext operator-(const Ext& a) { return Ext(a.ctx_, -a.rep_, 0); }
  friend Ext operator*(const Ext& a, const Ext& b) {
    if (a.rep_.is_zero() || b.rep_.is_zero()) return Ext(pick(a, b), UPoly<F>{}, 0);
    return Ext(pick(a, b), a.rep_ * b.rep_);
  }
  friend Ext operator/(const Ext& a, const Ext& b) { return a * inv(b); }
  Ext& operator+=(const Ext& o) { return *this = *this + o; }
  Ext& operator-=(const Ext& o) { return *this = *this - o; }
  Ext& operator*=(const Ext& o) { return *this = *this * o; }

  friend Ext zero_like(const Ext& a) { return Ext(a.ctx_, UPoly<F>{}, 0); }
  friend Ext one_like(const Ext& a) {
    return Ext(a.ctx_, UPoly<F>::constant(one_like(a.ctx_->modulus.lc())), 0);
  }
  friend Ext from_rational(const Ext& like, const Rational& r) {
    return Ext(like.ctx_, UPoly<F>::constant(from_rational(like.ctx_->modulus.lc(), r)));
  }
  friend Ext scale(const Ext& a, const Rational& r) { return Ext(a.ctx_, scale(a.rep_, r), 0); }

  /// Exact zero test. Splits when a is a nonzero zero divisor.
  friend bool is_zero(const Ext& a) {
    if (a.rep_.is_zero()) return true;
    if (a.rep_.degree() == 0 || a.ctx_->modulus.degree() == 1) return false;
    UPoly<F> g = gcd(a.ctx_->modulus, a.rep_);
    if (g.degree() > 0) throw Split<F>{a.ctx_, g};
    return false;
  }

  friend Ext inv(const Ext& a) {
    if (a.rep_.is_zero()) throw std::domain_error("inverse of zero in extension");
    const F& like = a.ctx_->modulus.lc();
    auto x = xgcd(a.rep_, a.ctx_->modulus, like);
    if (x.g.degree() > 0) throw Split<F>{a.ctx_, x.g};
    return Ext(a.ctx_, x.u);
  }

  friend Ext exact_div(const Ext& a, const Ext& b) { return a * inv(b); }

  friend bool same_value(const Ext& a, const Ext& b) { return same_value(a.rep_, b.rep_); }

  friend std::string describe(const Ext& a) { return to_string(a.rep_, "a"); }

 private:
  Ext(ExtCtxPtr<F> ctx, UPoly<F> rep, int) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}

  static const ExtCtxPtr<F>& pick(const Ext& a, const Ext& b) {
    if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_) throw std::logic_error("mixing extension contexts");
    return a.ctx_ ? a.ctx_ : b.ctx_;
  }
  void reduce() {
    if (ctx_ && rep_.degree() >= ctx_->modulus.degree()) rep_ = divmod(rep_, ctx_->modulus).rem;
  }

  ExtCtxPtr<F> ctx_;
  UPoly<F> rep_;
};

template <class F>
bool xrank_is_structural_zero(const Ext<F>& a) { return a.rep().is_zero(); }

template <class F>
ExtCtxPtr<F> make_ext_ctx(const UPoly<F>& modulus) {
  if (modulus.degree() < 1) throw std::invalid_argument("extension modulus must have positive degree");
  return std::make_shared<const ExtCtx<F>>(ExtCtx<F>{make_monic(modulus)});
}

/// One completed branch of a dynamic-evaluation run.
template <class F, class T>
struct Branch {
  UPoly<F> modulus;
  T value;
};

/// Runs fn(ctx) over F[x]/(m) for a square-free m, splitting on zero divisors.
/// The moduli of the returned branches multiply to make_monic(m). Branch order is
/// deterministic: on a split by g the g-part is processed before the cofactor.
template <class F, class Fn>
auto d5_branches(const UPoly<F>& m, Fn&& fn) {
  using T = std::invoke_result_t<Fn&, ExtCtxPtr<F>>;
  std::vector<Branch<F, T>> done;
  std::deque<UPoly<F>> todo{make_monic(m)};
  while (!todo.empty()) {
    UPoly<F> cur = todo.front();
    todo.pop_front();
    auto ctx = make_ext_ctx(cur);
    try {
      T v = fn(ctx);
      done.push_back({cur, std::move(v)});
    } catch (const Split<F>& s) {
      if (s.ctx != ctx) throw;
      UPoly<F> g = make_monic(s.factor);
      UPoly<F> h = make_monic(exact_quotient(cur, g));
      todo.push_front(h);
      todo.push_front(g);
    }
  }
  return done;
}

}  // namespace xrank
