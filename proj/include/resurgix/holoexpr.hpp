#pragma once

#include "resurgix/mjet.hpp"

#include <memory>
#include <string>
#include <vector>

namespace resurgix {

// Differentiable holomorphic expression DAG over variables z_1..z_n.
// Branch offsets on log/li2 nodes are explicit data.
class HoloExpr {
 public:
  enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, PowInt, Exp, Log, Li2 };

  using Ptr = std::shared_ptr<const HoloExpr>;

  static Ptr constant(Cplx v);
  static Ptr var(unsigned index);
  static Ptr add(Ptr a, Ptr b);
  static Ptr sub(Ptr a, Ptr b);
  static Ptr mul(Ptr a, Ptr b);
  static Ptr div(Ptr a, Ptr b);
  static Ptr neg(Ptr a);
  static Ptr pow_int(Ptr a, long e);
  static Ptr exp(Ptr a);
  static Ptr log(Ptr a, long branch = 0);
  static Ptr li2(Ptr a, long n_branch = 0, long m_branch = 0);

  Kind kind() const { return kind_; }
  const Cplx& cval() const { return cval_; }
  unsigned var_index() const { return var_; }
  long ipar() const { return ipar_; }     // power exponent / log branch / li2 n
  long ipar2() const { return ipar2_; }   // li2 m
  const Ptr& lhs() const { return a_; }
  const Ptr& rhs() const { return b_; }

  unsigned max_var() const { return maxvar_; }  // 0 if no vars, else 1-based count

 private:
  friend class HoloExprFactory;
  HoloExpr() = default;
  Kind kind_{Kind::Const};
  Cplx cval_;
  unsigned var_{0};
  long ipar_{0}, ipar2_{0};
  Ptr a_, b_;
  unsigned maxvar_{0};
};

struct BranchPointProximity : NumericError {
  using NumericError::NumericError;
};

// Evaluates the jet of e at point x (seeding variable i with x[i] + w_i).
// deg 0 gives plain evaluation. eps_branch: minimum allowed distance of
// log/li2 arguments from their branch points.
MJet holo_jet(const HoloExpr::Ptr& e, const std::vector<Cplx>& x, unsigned deg,
              const Real& eps_branch = Real(0));

// Jet with caller-provided variable seeds (e.g. affine frames w -> x* + M w).
MJet holo_jet_seeded(const HoloExpr::Ptr& e, const std::vector<MJet>& seeds,
                     const Real& eps_branch = Real(0));

Cplx holo_eval(const HoloExpr::Ptr& e, const std::vector<Cplx>& x);
// Value of the alpha-derivative at x (alpha a multi-index).
Cplx holo_deriv(const HoloExpr::Ptr& e, const std::vector<Cplx>& x,
                const std::vector<uint8_t>& alpha);
// Gradient and Hessian (dense, n x n row-major).
std::vector<Cplx> holo_grad(const HoloExpr::Ptr& e, const std::vector<Cplx>& x);
std::vector<Cplx> holo_hessian(const HoloExpr::Ptr& e, const std::vector<Cplx>& x);

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

// Grammar: identifiers z1..zn (also x,y,z,q,p aliases for z1.. ), decimal
// literals with optional trailing i, + - * / ^, exp(...), log(...), li2(...),
// parentheses. Whitespace-insensitive.
HoloExpr::Ptr parse_expr(const std::string& text, unsigned nvars);

// Structural test: f = sum of terms, each depending on exactly one variable.
// Returns per-variable expressions on success (constants folded into slot 0).
bool separable_sum(const HoloExpr::Ptr& e, unsigned nvars, std::vector<HoloExpr::Ptr>& parts);

}  // namespace resurgix
