#include "resurgix/holoexpr.hpp"

#include <cctype>
#include <set>

namespace resurgix {

class HoloExprFactory {
 public:
  static HoloExpr::Ptr make(HoloExpr::Kind k, Cplx cv, unsigned var, long p, long p2,
                            HoloExpr::Ptr a, HoloExpr::Ptr b) {
    HoloExpr e;
    e.kind_ = k;
    e.cval_ = std::move(cv);
    e.var_ = var;
    e.ipar_ = p;
    e.ipar2_ = p2;
    unsigned mv = 0;
    if (k == HoloExpr::Kind::Var) mv = var + 1;
    if (a) mv = std::max(mv, a->max_var());
    if (b) mv = std::max(mv, b->max_var());
    e.maxvar_ = mv;
    e.a_ = std::move(a);
    e.b_ = std::move(b);
    return std::make_shared<HoloExpr>(std::move(e));
  }
  friend class HoloExpr;
};

HoloExpr::Ptr HoloExpr::constant(Cplx v) {
  return HoloExprFactory::make(Kind::Const, std::move(v), 0, 0, 0, nullptr, nullptr);
}
HoloExpr::Ptr HoloExpr::var(unsigned index) {
  return HoloExprFactory::make(Kind::Var, Cplx(), index, 0, 0, nullptr, nullptr);
}
HoloExpr::Ptr HoloExpr::add(Ptr a, Ptr b) {
  return HoloExprFactory::make(Kind::Add, Cplx(), 0, 0, 0, std::move(a), std::move(b));
}
HoloExpr::Ptr HoloExpr::sub(Ptr a, Ptr b) {
  return HoloExprFactory::make(Kind::Sub, Cplx(), 0, 0, 0, std::move(a), std::move(b));
}
HoloExpr::Ptr HoloExpr::mul(Ptr a, Ptr b) {
  return HoloExprFactory::make(Kind::Mul, Cplx(), 0, 0, 0, std::move(a), std::move(b));
}
HoloExpr::Ptr HoloExpr::div(Ptr a, Ptr b) {
  return HoloExprFactory::make(Kind::Div, Cplx(), 0, 0, 0, std::move(a), std::move(b));
}
HoloExpr::Ptr HoloExpr::neg(Ptr a) {
  return HoloExprFactory::make(Kind::Neg, Cplx(), 0, 0, 0, std::move(a), nullptr);
}
HoloExpr::Ptr HoloExpr::pow_int(Ptr a, long e) {
  return HoloExprFactory::make(Kind::PowInt, Cplx(), 0, e, 0, std::move(a), nullptr);
}
HoloExpr::Ptr HoloExpr::exp(Ptr a) {
  return HoloExprFactory::make(Kind::Exp, Cplx(), 0, 0, 0, std::move(a), nullptr);
}
HoloExpr::Ptr HoloExpr::log(Ptr a, long branch) {
  return HoloExprFactory::make(Kind::Log, Cplx(), 0, branch, 0, std::move(a), nullptr);
}
HoloExpr::Ptr HoloExpr::li2(Ptr a, long nb, long mb) {
  return HoloExprFactory::make(Kind::Li2, Cplx(), 0, nb, mb, std::move(a), nullptr);
}

namespace {

void check_branch(const Cplx& u, const Real& eps, const char* what, bool li2_node) {
  if (eps <= 0) {
    if (u.is_zero()) throw BranchPointProximity(std::string(what) + " at branch point 0");
    if (li2_node && u == Cplx(1)) throw BranchPointProximity("li2 at branch point 1");
    return;
  }
  if (abs(u) < eps) throw BranchPointProximity(std::string(what) + " too close to 0");
  if (li2_node && abs(u - Cplx(1)) < eps) throw BranchPointProximity("li2 too close to 1");
}

MJet eval_node(const HoloExpr* e, const std::vector<MJet>& seeds, unsigned nv, unsigned deg,
               const Real& eps) {
  using K = HoloExpr::Kind;
  switch (e->kind()) {
    case K::Const:
      return MJet::constant(e->cval(), nv, deg);
    case K::Var:
      return seeds.at(e->var_index());
    case K::Add:
      return eval_node(e->lhs().get(), seeds, nv, deg, eps) +
             eval_node(e->rhs().get(), seeds, nv, deg, eps);
    case K::Sub:
      return eval_node(e->lhs().get(), seeds, nv, deg, eps) -
             eval_node(e->rhs().get(), seeds, nv, deg, eps);
    case K::Mul:
      return eval_node(e->lhs().get(), seeds, nv, deg, eps) *
             eval_node(e->rhs().get(), seeds, nv, deg, eps);
    case K::Div: {
      MJet a = eval_node(e->lhs().get(), seeds, nv, deg, eps);
      MJet b = eval_node(e->rhs().get(), seeds, nv, deg, eps);
      return a * jet_apply(taylor_recip(b.value(), deg), b);
    }
    case K::Neg:
      return -eval_node(e->lhs().get(), seeds, nv, deg, eps);
    case K::PowInt: {
      MJet a = eval_node(e->lhs().get(), seeds, nv, deg, eps);
      long m = e->ipar();
      if (m >= 0 && (a.value().is_zero() || m <= 4)) {
        // exact polynomial power (valid at zeros too)
        MJet r = MJet::constant(Cplx(1), nv, deg);
        for (long i = 0; i < m; ++i) r = r * a;
        return r;
      }
      return jet_apply(taylor_pow_int(a.value(), m, deg), a);
    }
    case K::Exp: {
      MJet a = eval_node(e->lhs().get(), seeds, nv, deg, eps);
      return jet_apply(taylor_exp(a.value(), deg), a);
    }
    case K::Log: {
      MJet a = eval_node(e->lhs().get(), seeds, nv, deg, eps);
      check_branch(a.value(), eps, "log", false);
      return jet_apply(taylor_log(a.value(), e->ipar(), deg), a);
    }
    case K::Li2: {
      MJet a = eval_node(e->lhs().get(), seeds, nv, deg, eps);
      check_branch(a.value(), eps, "li2", true);
      return jet_apply(taylor_li2(a.value(), e->ipar(), e->ipar2(), deg), a);
    }
  }
  throw NumericError("unreachable expr kind");
}

}  // namespace

MJet holo_jet_seeded(const HoloExpr::Ptr& e, const std::vector<MJet>& seeds, const Real& eps) {
  if (seeds.empty()) throw NumericError("holo_jet_seeded: no seeds");
  return eval_node(e.get(), seeds, seeds[0].nvars(), seeds[0].deg(), eps);
}

MJet holo_jet(const HoloExpr::Ptr& e, const std::vector<Cplx>& x, unsigned deg, const Real& eps) {
  unsigned nv = static_cast<unsigned>(x.size());
  std::vector<MJet> seeds;
  seeds.reserve(nv);
  for (unsigned i = 0; i < nv; ++i) seeds.push_back(MJet::variable(x[i], i, nv, deg));
  return holo_jet_seeded(e, seeds, eps);
}

Cplx holo_eval(const HoloExpr::Ptr& e, const std::vector<Cplx>& x) {
  return holo_jet(e, x, 0).value();
}

Cplx holo_deriv(const HoloExpr::Ptr& e, const std::vector<Cplx>& x,
                const std::vector<uint8_t>& alpha) {
  unsigned deg = 0;
  for (auto a : alpha) deg += a;
  return holo_jet(e, x, deg).deriv(alpha);
}

std::vector<Cplx> holo_grad(const HoloExpr::Ptr& e, const std::vector<Cplx>& x) {
  unsigned n = static_cast<unsigned>(x.size());
  MJet j = holo_jet(e, x, 1);
  std::vector<Cplx> g(n);
  std::vector<uint8_t> alpha(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    alpha[i] = 1;
    g[i] = j.taylor_coeff(alpha);
    alpha[i] = 0;
  }
  return g;
}

std::vector<Cplx> holo_hessian(const HoloExpr::Ptr& e, const std::vector<Cplx>& x) {
  unsigned n = static_cast<unsigned>(x.size());
  MJet j = holo_jet(e, x, 2);
  std::vector<Cplx> h(n * n);
  std::vector<uint8_t> alpha(n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = i; k < n; ++k) {
      alpha.assign(n, 0);
      alpha[i] += 1;
      alpha[k] += 1;
      Cplx v = j.deriv(alpha);
      h[i * n + k] = v;
      h[k * n + i] = v;
    }
  return h;
}

// ------------------------------ parser ------------------------------------

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  unsigned nvars;

  explicit Parser(const std::string& text, unsigned nv) : s(text), nvars(nv) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  HoloExpr::Ptr parse() {
    auto e = expr();
    skip_ws();
    if (pos != s.size()) throw ParseError("trailing input", pos);
    return e;
  }

  HoloExpr::Ptr expr() {
    auto a = term();
    for (;;) {
      if (eat('+'))
        a = HoloExpr::add(a, term());
      else if (eat('-'))
        a = HoloExpr::sub(a, term());
      else
        return a;
    }
  }

  HoloExpr::Ptr term() {
    auto a = factor();
    for (;;) {
      if (eat('*'))
        a = HoloExpr::mul(a, factor());
      else if (eat('/'))
        a = HoloExpr::div(a, factor());
      else
        return a;
    }
  }

  HoloExpr::Ptr factor() {
    if (eat('-')) return HoloExpr::neg(factor());
    if (eat('+')) return factor();
    auto base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      skip_ws();
      std::size_t start = pos;
      long e = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        e = e * 10 + (s[pos] - '0');
        ++pos;
      }
      if (pos == start) throw ParseError("expected integer exponent", pos);
      return HoloExpr::pow_int(base, neg ? -e : e);
    }
    return base;
  }

  HoloExpr::Ptr atom() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    char c = s[pos];
    if (c == '(') {
      ++pos;
      auto e = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return ident();
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  HoloExpr::Ptr number() {
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      ++pos;
    }
    // exponent part
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      std::size_t save = pos;
      ++pos;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      } else {
        pos = save;  // not an exponent
      }
    }
    Real v = real_from_string(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      return HoloExpr::constant(Cplx(Real(0), v));
    }
    return HoloExpr::constant(Cplx(v));
  }

  HoloExpr::Ptr ident() {
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    if (name == "i") return HoloExpr::constant(Cplx(Real(0), Real(1)));
    if (name == "pi") return HoloExpr::constant(Cplx(pi()));
    if (name == "exp" || name == "log" || name == "li2") {
      if (!eat('(')) throw ParseError("expected '(' after " + name, pos);
      auto a = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      if (name == "exp") return HoloExpr::exp(a);
      if (name == "log") return HoloExpr::log(a);
      return HoloExpr::li2(a);
    }
    // variables: z, z1..zn; aliases x->z1, y->z2, q->z1, p->z2, w->z3
    auto var_of = [&](unsigned idx) -> HoloExpr::Ptr {
      if (idx >= nvars) throw ParseError("variable index out of range in '" + name + "'", start);
      return HoloExpr::var(idx);
    };
    if (name == "z" || name == "x" || name == "q") return var_of(0);
    if (name == "y" || name == "p") return var_of(nvars >= 2 ? 1 : 0);
    if (name == "w") return var_of(2);
    if (name.size() >= 2 && (name[0] == 'z' || name[0] == 'x')) {
      bool digits = true;
      for (std::size_t k = 1; k < name.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(name[k]))) digits = false;
      if (digits) {
        unsigned idx = static_cast<unsigned>(std::stoul(name.substr(1)));
        if (idx == 0) throw ParseError("variables are 1-based", start);
        return var_of(idx - 1);
      }
    }
    throw ParseError("unknown identifier '" + name + "'", start);
  }
};

void collect_vars(const HoloExpr* e, std::set<unsigned>& vars) {
  if (!e) return;
  if (e->kind() == HoloExpr::Kind::Var) vars.insert(e->var_index());
  collect_vars(e->lhs().get(), vars);
  collect_vars(e->rhs().get(), vars);
}

void split_terms(const HoloExpr::Ptr& e, bool negate, std::vector<std::pair<HoloExpr::Ptr, bool>>& out) {
  if (e->kind() == HoloExpr::Kind::Add) {
    split_terms(e->lhs(), negate, out);
    split_terms(e->rhs(), negate, out);
    return;
  }
  if (e->kind() == HoloExpr::Kind::Sub) {
    split_terms(e->lhs(), negate, out);
    split_terms(e->rhs(), !negate, out);
    return;
  }
  if (e->kind() == HoloExpr::Kind::Neg) {
    split_terms(e->lhs(), !negate, out);
    return;
  }
  out.emplace_back(e, negate);
}

}  // namespace

HoloExpr::Ptr parse_expr(const std::string& text, unsigned nvars) {
  Parser p(text, nvars);
  return p.parse();
}

bool separable_sum(const HoloExpr::Ptr& e, unsigned nvars, std::vector<HoloExpr::Ptr>& parts) {
  std::vector<std::pair<HoloExpr::Ptr, bool>> terms;
  split_terms(e, false, terms);
  parts.assign(nvars, nullptr);
  for (auto& [t, neg] : terms) {
    std::set<unsigned> vars;
    collect_vars(t.get(), vars);
    if (vars.size() > 1) return false;
    unsigned slot = vars.empty() ? 0 : *vars.begin();
    HoloExpr::Ptr piece = neg ? HoloExpr::neg(t) : t;
    parts[slot] = parts[slot] ? HoloExpr::add(parts[slot], piece) : piece;
  }
  for (unsigned i = 0; i < nvars; ++i)
    if (!parts[i]) parts[i] = HoloExpr::constant(Cplx());
  return true;
}

}  // namespace resurgix
